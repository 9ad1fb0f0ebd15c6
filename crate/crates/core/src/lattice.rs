//! North-east lattice paths, vertex-disjoint pairs, the two-path
//! Gessel-Viennot count of binomial determinants, and the injection `phi`
//! that shows the consecutive-row 2x2 minors of `M_d` are nonnegative.
//!
//! `L(p,q; t,u)` is the set of vertex-disjoint pairs `(P, Q)` with `P` running
//! from `(0,-p)` to `(t,-t)` and `Q` from `(0,-q)` to `(u,-u)`. For an
//! instance `(d, a, r, s)` write `rb = d-r`, `sb = d-s`, `at = d+1-a`; `phi`
//! maps `L(a,a+1) ∪ L(a+1,at)` into `L(a,at-1) ∪ L(at-1,at)`, all with
//! endpoints `(sb, rb)`.

use std::collections::HashSet;
use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binom_det, json, ExactInt};
use crate::exec::Execution;
use crate::transforms::{md, Dimension};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// `(0, 1)`
    N,
    /// `(1, 0)`
    E,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: Point,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Parses a word over `{N, E}`.
    pub fn from_word(start: Point, word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                other => Err(Error::IndexOutOfRange(format!("step letter {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(LatticePath { start, steps })
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn word(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::N => 'N',
                Step::E => 'E',
            })
            .collect()
    }

    pub fn end(&self) -> Point {
        let east = self.steps.iter().filter(|&&s| s == Step::E).count() as i64;
        let north = self.steps.len() as i64 - east;
        Point::new(self.start.x + east, self.start.y + north)
    }

    /// Vertices in path order, which is also lexicographic `(x, y)` order.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for s in &self.steps {
            match s {
                Step::N => p.y += 1,
                Step::E => p.x += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn first_step(&self) -> Option<Step> {
        self.steps.first().copied()
    }

    pub fn contains(&self, pt: Point) -> bool {
        self.vertices().contains(&pt)
    }

    pub fn is_disjoint_from(&self, other: &LatticePath) -> bool {
        sorted_disjoint(&self.vertices(), &other.vertices())
    }

    fn with_north_prefix(&self, count: i64) -> LatticePath {
        let mut steps = vec![Step::N; count as usize];
        steps.extend_from_slice(&self.steps);
        LatticePath::new(Point::new(self.start.x, self.start.y - count), steps)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.word())
    }
}

impl Serialize for LatticePath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LatticePath", 2)?;
        st.serialize_field("start", &self.start)?;
        st.serialize_field("steps", &self.word())?;
        st.end()
    }
}

fn sorted_disjoint(a: &[Point], b: &[Point]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathPair {
    pub p: LatticePath,
    pub q: LatticePath,
}

impl PathPair {
    pub fn new(p: LatticePath, q: LatticePath) -> Self {
        PathPair { p, q }
    }

    pub fn is_disjoint(&self) -> bool {
        self.p.is_disjoint_from(&self.q)
    }

    pub fn contains(&self, pt: Point) -> bool {
        self.p.contains(pt) || self.q.contains(pt)
    }
}

/// Parameters of `L(p,q; t,u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathFamilySpec {
    pub p: i64,
    pub q: i64,
    pub t: i64,
    pub u: i64,
}

impl PathFamilySpec {
    pub const fn new(p: i64, q: i64, t: i64, u: i64) -> Self {
        PathFamilySpec { p, q, t, u }
    }

    pub fn p_start(&self) -> Point {
        Point::new(0, -self.p)
    }

    pub fn p_end(&self) -> Point {
        Point::new(self.t, -self.t)
    }

    pub fn q_start(&self) -> Point {
        Point::new(0, -self.q)
    }

    pub fn q_end(&self) -> Point {
        Point::new(self.u, -self.u)
    }

    /// Whether `pair` is an element of this family.
    pub fn contains(&self, pair: &PathPair) -> bool {
        pair.p.start() == self.p_start()
            && pair.p.end() == self.p_end()
            && pair.q.start() == self.q_start()
            && pair.q.end() == self.q_end()
            && pair.is_disjoint()
    }

    /// Start and end orders agree, so no crossing-forced pairs cancel.
    pub fn is_compatible(&self) -> bool {
        (self.p - self.q) * (self.t - self.u) >= 0
    }

    /// The family with the two endpoints exchanged.
    pub fn swapped_ends(&self) -> Self {
        PathFamilySpec::new(self.p, self.q, self.u, self.t)
    }
}

/// All monotone N/E paths from `from` to `to`, in lexicographic word order
/// with `N < E`.
pub fn enumerate_paths(from: Point, to: Point) -> Vec<LatticePath> {
    let (dx, dy) = (to.x - from.x, to.y - from.y);
    if dx < 0 || dy < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity((dx + dy) as usize);
    fn rec(n_left: i64, e_left: i64, word: &mut Vec<Step>, from: Point, out: &mut Vec<LatticePath>) {
        if n_left == 0 && e_left == 0 {
            out.push(LatticePath::new(from, word.clone()));
            return;
        }
        if n_left > 0 {
            word.push(Step::N);
            rec(n_left - 1, e_left, word, from, out);
            word.pop();
        }
        if e_left > 0 {
            word.push(Step::E);
            rec(n_left, e_left - 1, word, from, out);
            word.pop();
        }
    }
    rec(dy, dx, &mut word, from, &mut out);
    out
}

/// Every vertex-disjoint pair of `L(p,q; t,u)`, by exhaustive pairing.
pub fn disjoint_pairs(spec: &PathFamilySpec) -> Vec<PathPair> {
    let ps = enumerate_paths(spec.p_start(), spec.p_end());
    let qs = enumerate_paths(spec.q_start(), spec.q_end());
    let qv: Vec<Vec<Point>> = qs.iter().map(LatticePath::vertices).collect();
    let mut out = Vec::new();
    for p in &ps {
        let pv = p.vertices();
        for (q, qv) in qs.iter().zip(&qv) {
            if sorted_disjoint(&pv, qv) {
                out.push(PathPair::new(p.clone(), q.clone()));
            }
        }
    }
    out
}

/// `#L(p,q; t,u)`.
pub fn count_disjoint_pairs(spec: &PathFamilySpec) -> ExactInt {
    let ps: Vec<Vec<Point>> = enumerate_paths(spec.p_start(), spec.p_end())
        .iter()
        .map(LatticePath::vertices)
        .collect();
    let qs: Vec<Vec<Point>> = enumerate_paths(spec.q_start(), spec.q_end())
        .iter()
        .map(LatticePath::vertices)
        .collect();
    let n = ps
        .iter()
        .map(|pv| qs.iter().filter(|qv| sorted_disjoint(pv, qv)).count())
        .sum::<usize>();
    ExactInt::from(n)
}

/// Two-path Gessel-Viennot identity:
/// `B(p,q; t,u) = #L(p,q; t,u) - #L(p,q; u,t)`.
///
/// For compatible orientations the subtracted family is empty and this is
/// `B = #L(p,q; t,u)`.
pub fn gv_identity_check(spec: &PathFamilySpec) -> bool {
    let signed = count_disjoint_pairs(spec) - count_disjoint_pairs(&spec.swapped_ends());
    binom_det(spec.p, spec.q, spec.t, spec.u) == signed
}

/// Outcome of an exhaustive identity scan over `0 <= p,q,t,u <= max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GvScanReport {
    pub max: i64,
    pub instances: usize,
    pub compatible_instances: usize,
    /// Compatible instances where `B = #L` fails, or any instance where the
    /// signed identity fails.
    pub failures: Vec<PathFamilySpec>,
    /// Incompatible instances with `B != #L`; the unsigned count is only
    /// claimed for compatible orientations.
    pub unsigned_mismatches_incompatible: usize,
    pub all_hold: bool,
}

pub fn gv_scan(max: i64, exec: Execution) -> GvScanReport {
    let mut specs = Vec::new();
    for p in 0..=max {
        for q in 0..=max {
            for t in 0..=max {
                for u in 0..=max {
                    specs.push(PathFamilySpec::new(p, q, t, u));
                }
            }
        }
    }
    // (direct count, swapped count, determinant)
    let rows = exec.map(&specs, |s| {
        (
            count_disjoint_pairs(s),
            count_disjoint_pairs(&s.swapped_ends()),
            binom_det(s.p, s.q, s.t, s.u),
        )
    });
    let mut failures = Vec::new();
    let mut compatible_instances = 0;
    let mut unsigned_mismatches_incompatible = 0;
    for (spec, (direct, swapped, b)) in specs.iter().zip(rows) {
        let signed_ok = b == &direct - &swapped;
        if spec.is_compatible() {
            compatible_instances += 1;
            if b != direct || !signed_ok {
                failures.push(*spec);
            }
        } else {
            if b != direct {
                unsigned_mismatches_incompatible += 1;
            }
            if !signed_ok {
                failures.push(*spec);
            }
        }
    }
    GvScanReport {
        max,
        instances: specs.len(),
        compatible_instances,
        all_hold: failures.is_empty(),
        failures,
        unsigned_mismatches_incompatible,
    }
}

/// One instance `(d, a, r, s)` of the injection, with `0 <= a < a+1 <= delta`
/// and `0 <= r < s <= d-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PhiParams {
    pub d: i64,
    pub a: i64,
    pub r: i64,
    pub s: i64,
}

impl PhiParams {
    pub fn new(dim: Dimension, a: i64, r: i64, s: i64) -> Result<Self> {
        let d = dim.d() as i64;
        if a < 0 || a + 1 > dim.delta() as i64 {
            return Err(Error::IndexOutOfRange(format!("need 0 <= a < a+1 <= delta, got a={a}")));
        }
        if r < 0 || r >= s || s > d - 1 {
            return Err(Error::IndexOutOfRange(format!(
                "need 0 <= r < s <= d-1, got r={r}, s={s}"
            )));
        }
        Ok(PhiParams { d, a, r, s })
    }

    pub fn r_bar(&self) -> i64 {
        self.d - self.r
    }

    pub fn s_bar(&self) -> i64 {
        self.d - self.s
    }

    pub fn a_tilde(&self) -> i64 {
        self.d + 1 - self.a
    }

    fn family(&self, p: i64, q: i64) -> PathFamilySpec {
        PathFamilySpec::new(p, q, self.s_bar(), self.r_bar())
    }

    /// `L(a, a+1)`
    pub fn domain_low(&self) -> PathFamilySpec {
        self.family(self.a, self.a + 1)
    }

    /// `L(a+1, at)`
    pub fn domain_high(&self) -> PathFamilySpec {
        self.family(self.a + 1, self.a_tilde())
    }

    /// `L(a, at-1)`
    pub fn codomain_low(&self) -> PathFamilySpec {
        self.family(self.a, self.a_tilde() - 1)
    }

    /// `L(at-1, at)`
    pub fn codomain_high(&self) -> PathFamilySpec {
        self.family(self.a_tilde() - 1, self.a_tilde())
    }

    /// `(0, -a-1)`, on an image pair exactly in cases 1 and 2b.
    pub fn anchor(&self) -> Point {
        Point::new(0, -self.a - 1)
    }

    /// Every admissible instance in dimension `d`.
    pub fn all(dim: Dimension) -> Vec<PhiParams> {
        let d = dim.d() as i64;
        let mut out = Vec::new();
        for a in 0..dim.delta() as i64 {
            for s in 1..d {
                for r in 0..s {
                    out.push(PhiParams { d, a, r, s });
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PhiCase {
    /// Input in `L(a, a+1)`: extend `Q` downward to start at `(0, 1-at)`.
    One,
    /// Input in `L(a+1, at)`, both paths start with N: drop both first steps.
    TwoA,
    /// Input in `L(a+1, at)`, `Q` starts with E: extend `P` downward.
    TwoB,
    /// Input in `L(a+1, at)`, `Q` starts with N and `P` with E: re-route.
    TwoC,
}

impl PhiCase {
    pub const ALL: [PhiCase; 4] = [PhiCase::One, PhiCase::TwoA, PhiCase::TwoB, PhiCase::TwoC];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Cases 1 and 2a land in `L(a, at-1)`, cases 2b and 2c in `L(at-1, at)`.
    pub fn lands_low(self) -> bool {
        matches!(self, PhiCase::One | PhiCase::TwoA)
    }

    pub fn covers_anchor(self) -> bool {
        matches!(self, PhiCase::One | PhiCase::TwoB)
    }
}

/// Factorization data of a case-2c input:
/// `P = E^k T` and `Q = N R E N^v E Q'`, the two E's being the k-th and
/// (k+1)-st of `Q`, with `h` North steps in `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subcase2c {
    pub k: i64,
    pub h: i64,
    pub v: i64,
    /// `T` is empty: `P` is all East steps, which happens when `a + 1 = sb`.
    pub degenerate: bool,
    /// `at - a - h - v - 2`
    pub margin: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiTrace {
    pub case: PhiCase,
    pub image: PathPair,
    pub subcase_2c: Option<Subcase2c>,
}

pub fn classify(pair: &PathPair, params: &PhiParams) -> Result<PhiCase> {
    if params.domain_low().contains(pair) {
        return Ok(PhiCase::One);
    }
    if !params.domain_high().contains(pair) {
        return Err(Error::NotInPhiDomain(format!("P={} Q={}", pair.p, pair.q)));
    }
    Ok(match (pair.p.first_step(), pair.q.first_step()) {
        (_, Some(Step::E)) => PhiCase::TwoB,
        (Some(Step::N), Some(Step::N)) => PhiCase::TwoA,
        (Some(Step::E), Some(Step::N)) => PhiCase::TwoC,
        // Q always has steps (at > rb) and P has steps unless a + 1 = 0
        _ => {
            return Err(Error::NotInPhiDomain(format!(
                "empty path in P={} Q={}",
                pair.p, pair.q
            )))
        }
    })
}

pub fn phi(pair: &PathPair, params: &PhiParams) -> Result<PathPair> {
    Ok(phi_traced(pair, params)?.image)
}

pub fn phi_traced(pair: &PathPair, params: &PhiParams) -> Result<PhiTrace> {
    let case = classify(pair, params)?;
    let at = params.a_tilde();
    let a = params.a;
    let (image, subcase_2c) = match case {
        PhiCase::One => {
            let q = pair.q.with_north_prefix(at - 1 - (a + 1));
            (PathPair::new(pair.p.clone(), q), None)
        }
        PhiCase::TwoA => {
            let drop = |path: &LatticePath| {
                LatticePath::new(Point::new(path.start.x, path.start.y + 1), path.steps[1..].to_vec())
            };
            (PathPair::new(drop(&pair.p), drop(&pair.q)), None)
        }
        PhiCase::TwoB => {
            let p = pair.p.with_north_prefix(at - 1 - (a + 1));
            (PathPair::new(p, pair.q.clone()), None)
        }
        PhiCase::TwoC => {
            let (image, data) = reroute_2c(pair, params)?;
            (image, Some(data))
        }
    };
    Ok(PhiTrace {
        case,
        image,
        subcase_2c,
    })
}

fn reroute_2c(pair: &PathPair, params: &PhiParams) -> Result<(PathPair, Subcase2c)> {
    let (a, at) = (params.a, params.a_tilde());
    let p = pair.p.steps();
    let q = pair.q.steps();
    let k = p.iter().take_while(|&&s| s == Step::E).count();
    let tail = &p[k..];
    let east_at: Vec<usize> = q
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Step::E)
        .map(|(i, _)| i)
        .collect();
    if east_at.len() < k + 1 {
        return Err(Error::NotInPhiDomain(format!(
            "Q={} has fewer than k+1={} east steps",
            pair.q,
            k + 1
        )));
    }
    let (ek, ek1) = (east_at[k - 1], east_at[k]);
    let r_seg = &q[1..ek];
    let v = (ek1 - ek - 1) as i64;
    let q_rest = &q[ek1 + 1..];
    let h = r_seg.iter().filter(|&&s| s == Step::N).count() as i64;
    let lead = at - a - h - 3;
    let margin = at - a - h - v - 2;
    if lead < 0 {
        return Err(Error::NotInPhiDomain(format!(
            "subcase 2c margin {margin} leaves no room for the initial N run (P={} Q={})",
            pair.p, pair.q
        )));
    }
    let mut pb = vec![Step::N; lead as usize];
    pb.push(Step::E);
    pb.extend_from_slice(r_seg);
    pb.push(Step::N);
    pb.extend_from_slice(tail);
    let mut qb = vec![Step::E; k];
    qb.extend(std::iter::repeat_n(Step::N, v as usize));
    qb.push(Step::E);
    qb.extend(std::iter::repeat_n(Step::N, h as usize + 1));
    qb.extend_from_slice(q_rest);
    let image = PathPair::new(
        LatticePath::new(Point::new(0, 1 - at), pb),
        LatticePath::new(Point::new(0, -at), qb),
    );
    let data = Subcase2c {
        k: k as i64,
        h,
        v,
        degenerate: tail.is_empty(),
        margin,
    };
    Ok((image, data))
}

/// `at - a - h - v - 2` for a case-2c input; must be positive.
pub fn disjointness_margin_2c(pair: &PathPair, params: &PhiParams) -> Result<i64> {
    match phi_traced(pair, params)? {
        PhiTrace {
            subcase_2c: Some(c), ..
        } => Ok(c.margin),
        PhiTrace { case, .. } => Err(Error::NotInPhiDomain(format!("input is in case {case:?}, not 2c"))),
    }
}

/// Vertical gap at `x = k` between the lowest vertex of the image `P` and
/// the highest vertex of the image `Q`.
pub fn column_gap(image: &PathPair, k: i64) -> Option<i64> {
    let low_p = image.p.vertices().into_iter().filter(|v| v.x == k).map(|v| v.y).min()?;
    let high_q = image.q.vertices().into_iter().filter(|v| v.x == k).map(|v| v.y).max()?;
    Some(low_p - high_q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiInstanceReport {
    pub params: PhiParams,
    /// `[#L(a,a+1), #L(a+1,at)]`
    pub domain: [usize; 2],
    /// `[#L(a,at-1), #L(at-1,at)]`
    pub codomain: [usize; 2],
    /// Domain elements per case `[1, 2a, 2b, 2c]`.
    pub case_counts: [usize; 4],
    /// The 2x2 minor of `M_d` on rows `a, a+1` and columns `r, s`.
    #[serde(serialize_with = "json::int")]
    pub minor: ExactInt,
    pub injective: bool,
    pub cases_partition: bool,
    /// Every image lies in the codomain family its case prescribes.
    pub membership_ok: bool,
    /// `(0,-a-1)` lies on the image pair exactly in cases 1 and 2b.
    pub anchor_ok: bool,
    /// Cases whose image has `(0,-a-1)` on the image `Q` path.
    pub anchor_on_image_q: [usize; 4],
    /// Family sizes equal the binomial determinants and the codomain excess
    /// equals the minor, which is nonnegative.
    pub counts_consistent: bool,
    pub min_margin_2c: Option<i64>,
    pub margins_ok: bool,
    pub degenerate_2c: usize,
    pub errors: Vec<String>,
}

impl PhiInstanceReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.cases_partition
            && self.membership_ok
            && self.anchor_ok
            && self.counts_consistent
            && self.margins_ok
            && self.errors.is_empty()
    }
}

pub fn verify_phi_instance(params: &PhiParams) -> PhiInstanceReport {
    let dom = [
        disjoint_pairs(&params.domain_low()),
        disjoint_pairs(&params.domain_high()),
    ];
    let cod_specs = [params.codomain_low(), params.codomain_high()];
    let codomain = cod_specs.map(|s| disjoint_pairs(&s).len());
    let mut case_counts = [0usize; 4];
    let mut anchor_on_image_q = [0usize; 4];
    let mut images = HashSet::new();
    let mut cases_partition = true;
    let mut membership_ok = true;
    let mut anchor_ok = true;
    let mut margins_ok = true;
    let mut min_margin_2c: Option<i64> = None;
    let mut degenerate_2c = 0;
    let mut errors = Vec::new();
    let anchor = params.anchor();

    for (side, pairs) in dom.iter().enumerate() {
        for pair in pairs {
            // independent predicate evaluation for the partition check
            let in_high = side == 1;
            let (p0, q0) = (pair.p.first_step(), pair.q.first_step());
            let predicates = [
                !in_high,
                in_high && p0 == Some(Step::N) && q0 == Some(Step::N),
                in_high && q0 == Some(Step::E),
                in_high && q0 == Some(Step::N) && p0 == Some(Step::E),
            ];
            if predicates.iter().filter(|&&b| b).count() != 1 {
                cases_partition = false;
            }
            let trace = match phi_traced(pair, params) {
                Ok(t) => t,
                Err(e) => {
                    errors.push(e.to_string());
                    continue;
                }
            };
            if !predicates[trace.case.index()] {
                cases_partition = false;
            }
            case_counts[trace.case.index()] += 1;
            let target = if trace.case.lands_low() {
                &cod_specs[0]
            } else {
                &cod_specs[1]
            };
            if !target.contains(&trace.image) {
                membership_ok = false;
                errors.push(format!(
                    "{:?} image P={} Q={} not in {:?}",
                    trace.case, trace.image.p, trace.image.q, target
                ));
            }
            if trace.image.contains(anchor) != trace.case.covers_anchor() {
                anchor_ok = false;
            }
            if trace.image.q.contains(anchor) {
                anchor_on_image_q[trace.case.index()] += 1;
            }
            if let Some(c) = &trace.subcase_2c {
                min_margin_2c = Some(min_margin_2c.map_or(c.margin, |m| m.min(c.margin)));
                let gap = column_gap(&trace.image, c.k);
                if c.margin < 1 || gap.is_none_or(|g| g < c.margin) {
                    margins_ok = false;
                }
                if c.degenerate {
                    degenerate_2c += 1;
                }
            }
            images.insert(trace.image);
        }
    }

    let domain = [dom[0].len(), dom[1].len()];
    let total = domain[0] + domain[1];
    let injective = images.len() == total && errors.is_empty();
    let m = md(Dimension::new(params.d).expect("validated"));
    let (a, r, s) = (params.a as usize, params.r as usize, params.s as usize);
    let minor = m.entry(a, r) * m.entry(a + 1, s) - m.entry(a, s) * m.entry(a + 1, r);
    let fam_det = |f: PathFamilySpec| binom_det(f.p, f.q, f.t, f.u);
    let gv_ok = ExactInt::from(domain[0]) == fam_det(params.domain_low())
        && ExactInt::from(domain[1]) == fam_det(params.domain_high())
        && ExactInt::from(codomain[0]) == fam_det(cod_specs[0])
        && ExactInt::from(codomain[1]) == fam_det(cod_specs[1]);
    let excess = ExactInt::from(codomain[0] + codomain[1]) - ExactInt::from(total);
    let counts_consistent = gv_ok && excess == minor && !excess.is_negative();

    PhiInstanceReport {
        params: *params,
        domain,
        codomain,
        case_counts,
        minor,
        injective,
        cases_partition,
        membership_ok,
        anchor_ok,
        anchor_on_image_q,
        counts_consistent,
        min_margin_2c,
        margins_ok,
        degenerate_2c,
        errors,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub d: usize,
    pub injective: bool,
    pub counts_consistent: bool,
    pub cases_partition: bool,
    pub membership_ok: bool,
    pub anchor_ok: bool,
    pub margins_ok: bool,
    pub domain_total: usize,
    pub case_counts: [usize; 4],
    pub degenerate_2c: usize,
    pub anchor_on_image_q: [usize; 4],
    pub instances: Vec<PhiInstanceReport>,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(PhiInstanceReport::passed)
    }
}

pub fn verify_phi(dim: Dimension) -> PhiReport {
    verify_phi_with(dim, Execution::default())
}

pub fn verify_phi_with(dim: Dimension, exec: Execution) -> PhiReport {
    let params = PhiParams::all(dim);
    let instances = exec.map(&params, verify_phi_instance);
    let sum4 = |f: fn(&PhiInstanceReport) -> [usize; 4]| {
        instances.iter().fold([0; 4], |mut acc, i| {
            for (x, y) in acc.iter_mut().zip(f(i)) {
                *x += y;
            }
            acc
        })
    };
    PhiReport {
        d: dim.d(),
        injective: instances.iter().all(|i| i.injective),
        counts_consistent: instances.iter().all(|i| i.counts_consistent),
        cases_partition: instances.iter().all(|i| i.cases_partition),
        membership_ok: instances.iter().all(|i| i.membership_ok),
        anchor_ok: instances.iter().all(|i| i.anchor_ok),
        margins_ok: instances.iter().all(|i| i.margins_ok),
        domain_total: instances.iter().map(|i| i.domain[0] + i.domain[1]).sum(),
        case_counts: sum4(|i| i.case_counts),
        degenerate_2c: instances.iter().map(|i| i.degenerate_2c).sum(),
        anchor_on_image_q: sum4(|i| i.anchor_on_image_q),
        instances,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial;
    use num_traits::Zero;

    fn path(x: i64, y: i64, w: &str) -> LatticePath {
        LatticePath::from_word(Point::new(x, y), w).unwrap()
    }

    fn dim(d: i64) -> Dimension {
        Dimension::new(d).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let ps = enumerate_paths(Point::new(0, -2), Point::new(1, -1));
        let words: Vec<String> = ps.iter().map(LatticePath::word).collect();
        assert_eq!(words, vec!["NE", "EN"]);
        assert!(enumerate_paths(Point::new(0, 0), Point::new(1, -1)).is_empty());
        for p in 0..8 {
            for t in 0..=p {
                let n = enumerate_paths(Point::new(0, -p), Point::new(t, -t)).len();
                assert_eq!(ExactInt::from(n), binomial(p, t));
            }
        }
    }

    #[test]
    fn path_counts_match_binomials() {
        for dx in 0..=16i64 {
            for dy in 0..=16 - dx {
                let n = enumerate_paths(Point::new(3, -7), Point::new(3 + dx, -7 + dy)).len();
                assert_eq!(ExactInt::from(n), binomial(dx + dy, dx));
            }
        }
    }

    #[test]
    fn path_geometry() {
        let p = path(0, -3, "NEE");
        assert_eq!(p.end(), Point::new(2, -2));
        assert_eq!(
            p.vertices(),
            vec![
                Point::new(0, -3),
                Point::new(0, -2),
                Point::new(1, -2),
                Point::new(2, -2)
            ]
        );
        assert!(!p.is_disjoint_from(&path(1, -4, "NNE")));
        assert!(p.is_disjoint_from(&path(1, -4, "EN")));
        assert!(LatticePath::from_word(Point::new(0, 0), "NX").is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            count_disjoint_pairs(&PathFamilySpec::new(1, 2, 0, 1)),
            ExactInt::from(1)
        );
        assert_eq!(
            count_disjoint_pairs(&PathFamilySpec::new(2, 3, 1, 2)),
            ExactInt::from(3)
        );
        for p in 0..6 {
            for t in 0..4 {
                for u in 0..4 {
                    assert!(count_disjoint_pairs(&PathFamilySpec::new(p, p, t, u)).is_zero());
                }
            }
        }
    }

    #[test]
    fn identity_examples() {
        assert!(gv_identity_check(&PathFamilySpec::new(1, 2, 0, 1)));
        assert!(gv_identity_check(&PathFamilySpec::new(1, 5, 2, 3)));
        // incompatible orientation: B = -1 while no disjoint pair exists
        let mixed = PathFamilySpec::new(2, 1, 0, 1);
        assert_eq!(binom_det(2, 1, 0, 1), ExactInt::from(-1));
        assert!(count_disjoint_pairs(&mixed).is_zero());
        assert!(gv_identity_check(&mixed));
    }

    #[test]
    fn identity_scan_small() {
        let rep = gv_scan(5, Execution::Sequential);
        assert!(rep.all_hold, "{:?}", rep.failures);
        assert!(rep.unsigned_mismatches_incompatible > 0);
    }

    #[test]
    fn case_one_example() {
        let params = PhiParams::new(dim(4), 1, 2, 3).unwrap();
        let pair = PathPair::new(path(0, -1, "E"), path(0, -2, "EE"));
        let t = phi_traced(&pair, &params).unwrap();
        assert_eq!(t.case, PhiCase::One);
        assert_eq!(t.image.p, pair.p);
        assert_eq!(t.image.q, path(0, -3, "NEE"));
        assert!(params.codomain_low().contains(&t.image));
    }

    #[test]
    fn case_2a_undoes_prepending_north() {
        let dimn = dim(10);
        for params in PhiParams::all(dimn) {
            for pair in disjoint_pairs(&params.codomain_low()) {
                let lifted = PathPair::new(pair.p.with_north_prefix(1), pair.q.with_north_prefix(1));
                if !params.domain_high().contains(&lifted) {
                    continue;
                }
                let t = phi_traced(&lifted, &params).unwrap();
                assert_eq!(t.case, PhiCase::TwoA);
                assert_eq!(t.image, pair);
            }
        }
    }

    #[test]
    fn rejects_inputs_outside_domain() {
        let params = PhiParams::new(dim(4), 1, 2, 3).unwrap();
        let colliding = PathPair::new(path(0, -1, "E"), path(0, -2, "NEE"));
        assert!(matches!(phi(&colliding, &params), Err(Error::NotInPhiDomain(_))));
        assert!(PhiParams::new(dim(4), 2, 0, 1).is_err());
        assert!(PhiParams::new(dim(4), 0, 2, 2).is_err());
    }

    #[test]
    fn margins_of_2c_instances() {
        let mut seen = 0;
        for params in PhiParams::all(dim(9)) {
            for pair in disjoint_pairs(&params.domain_high()) {
                if classify(&pair, &params) != Ok(PhiCase::TwoC) {
                    continue;
                }
                seen += 1;
                let t = phi_traced(&pair, &params).unwrap();
                let c = t.subcase_2c.unwrap();
                assert_eq!(disjointness_margin_2c(&pair, &params).unwrap(), c.margin);
                assert_eq!(c.margin, params.a_tilde() - params.a - c.h - c.v - 2);
                assert!(c.margin >= 1);
                // the cited points (k, -a-h-2) and (k, -at+v) are a margin apart;
                // the image Q attains the upper one, the image P stays at or above the lower one
                let column = |p: &LatticePath| -> Vec<i64> {
                    p.vertices().into_iter().filter(|v| v.x == c.k).map(|v| v.y).collect()
                };
                assert_eq!(*column(&t.image.q).iter().max().unwrap(), -params.a_tilde() + c.v);
                assert!(*column(&t.image.p).iter().min().unwrap() >= -params.a - c.h - 2);
                assert_eq!((-params.a - c.h - 2) - (-params.a_tilde() + c.v), c.margin);
                if c.v == 0 && c.h == 0 {
                    assert_eq!(c.margin, params.a_tilde() - params.a - 2);
                }
            }
            if let Some(p) = disjoint_pairs(&params.domain_low()).first() {
                assert!(disjointness_margin_2c(p, &params).is_err());
            }
        }
        assert!(seen > 100);
    }

    #[test]
    fn phi_small_dimensions() {
        for d in 3..=8 {
            let rep = verify_phi_with(dim(d), Execution::Sequential);
            assert!(rep.passed(), "d={d}: {:?}", rep.instances.iter().find(|i| !i.passed()));
        }
    }

    #[test]
    fn degenerate_2c_occurs_when_a_plus_one_is_sb() {
        // d = 4, a = 0, s = 3: sb = 1 = a + 1, so every P in L(a+1, at) is "E"
        let params = PhiParams::new(dim(4), 0, 0, 3).unwrap();
        let rep = verify_phi_instance(&params);
        assert!(rep.case_counts[PhiCase::TwoC.index()] > 0);
        assert_eq!(rep.degenerate_2c, rep.case_counts[PhiCase::TwoC.index()]);
        assert!(rep.passed());
    }

    #[test]
    fn image_q_misses_anchor_in_case_2b() {
        let rep = verify_phi(dim(8));
        assert!(rep.case_counts[PhiCase::TwoB.index()] > 0);
        assert_eq!(rep.anchor_on_image_q[PhiCase::TwoB.index()], 0);
        assert_eq!(
            rep.anchor_on_image_q[PhiCase::One.index()],
            rep.case_counts[PhiCase::One.index()]
        );
    }
}
