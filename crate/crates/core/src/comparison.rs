//! Comparison of f-vectors through g-vector crossing patterns, and the
//! sandwich bounds against the extremal families.
//!
//! With `v = g(Delta) - g(Gamma)` nonnegative on `1..=t` and nonpositive on
//! `t+1..=delta`, the ratios `m[i][r] / m[i][s]` decrease in `i` (all 2x2
//! minors of `M_d` are nonnegative), which gives
//!
//! ```text
//! m[t][s] * (f_r(Delta) - f_r(Gamma)) >= m[t][r] * (f_s(Delta) - f_s(Gamma)).
//! ```
//!
//! A premise `f_r(Delta) <= f_r(Gamma)` transfers to every `s > r` only when
//! `m[t][r] > 0`, i.e. `t <= r + 1`. Reports mark that case as `certified`.
//! Outside it the transfer can fail: `g(C(7,4)) = (1,2,3)` against
//! `g(S(7,4)) = (1,2,0)` has crossing index 2, equal `f_0 = 7`, yet
//! `f_1` is 21 against 18.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{json, ExactInt};
use crate::families::{stanley_cs_floor, Family, FamilySpec};
use crate::transforms::{g_to_f, md, Dimension, FVector, GVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingWitness {
    pub t: usize,
    /// `v_i = g_i(Delta) - g_i(Gamma)` for `0 <= i <= delta`.
    #[serde(serialize_with = "json::ints")]
    pub diffs: Vec<ExactInt>,
}

fn same_dim(a: &GVector, b: &GVector) -> Result<Dimension> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim().d(),
            right: b.dim().d(),
        });
    }
    Ok(a.dim())
}

/// Smallest `t` for which the differences are nonnegative on `1..=t` and
/// nonpositive on `t+1..=delta`.
pub fn find_crossing(g_delta: &GVector, g_gamma: &GVector) -> Result<Option<CrossingWitness>> {
    same_dim(g_delta, g_gamma)?;
    let diffs: Vec<ExactInt> = g_delta
        .entries()
        .iter()
        .zip(g_gamma.entries())
        .map(|(a, b)| a - b)
        .collect();
    // t is valid iff no positive diff lies beyond t and no negative diff lies
    // in 1..=t; the smallest candidate is the last positive index.
    let t = diffs.iter().skip(1).rposition(|v| v.is_positive()).map_or(0, |i| i + 1);
    let valid = diffs[1..=t].iter().all(|v| !v.is_negative());
    Ok(valid.then_some(CrossingWitness { t, diffs }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub bound_holds: bool,
    #[serde(serialize_with = "json::int")]
    pub lhs: ExactInt,
    #[serde(serialize_with = "json::int")]
    pub rhs: ExactInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub d: usize,
    pub r: usize,
    pub premise_holds: bool,
    #[serde(serialize_with = "json::int")]
    pub premise_lhs: ExactInt,
    #[serde(serialize_with = "json::int")]
    pub premise_rhs: ExactInt,
    /// `f_s(Delta) <= f_s(Gamma)` for every `r < s < d`; empty when the
    /// premise fails.
    pub conclusions: BTreeMap<usize, Conclusion>,
    pub witness: Option<CrossingWitness>,
    pub family_params: Option<(u64, u64)>,
    /// Premise holds and `m[t][r] > 0`, so every conclusion is guaranteed.
    pub certified: bool,
    /// The cross-multiplied key inequality for every `s > r`.
    pub key_inequality_holds: bool,
}

impl ComparisonReport {
    pub fn all_bounds_hold(&self) -> bool {
        self.conclusions.values().all(|c| c.bound_holds)
    }
}

fn check_r(dim: Dimension, r: usize) -> Result<()> {
    if r + 2 > dim.d() {
        return Err(Error::IndexOutOfRange(format!(
            "r = {r} must be at most d-2 = {}",
            dim.d() - 2
        )));
    }
    Ok(())
}

/// `m[t][s] * sum v_i m[i][r] >= m[t][r] * sum v_i m[i][s]`.
pub fn key_inequality(dim: Dimension, witness: &CrossingWitness, r: usize, s: usize) -> bool {
    let m = md(dim);
    let dot = |col: usize| -> ExactInt { witness.diffs.iter().enumerate().map(|(i, v)| v * m.entry(i, col)).sum() };
    m.entry(witness.t, s) * dot(r) >= m.entry(witness.t, r) * dot(s)
}

/// Compares `f(Delta)` and `f(Gamma)` starting from index `r`.
///
/// Bound entries are always evaluated, never assumed; a failing bound in a
/// certified report is returned as [`Error::CertifiedBoundFailed`].
pub fn compare(g_delta: &GVector, g_gamma: &GVector, r: usize) -> Result<ComparisonReport> {
    let dim = same_dim(g_delta, g_gamma)?;
    check_r(dim, r)?;
    let witness = find_crossing(g_delta, g_gamma)?.ok_or(Error::NoCrossing)?;
    let fd = g_to_f(g_delta);
    let fg = g_to_f(g_gamma);
    build_report(dim, r, &fd, &fg, witness, None)
}

fn build_report(
    dim: Dimension,
    r: usize,
    fd: &FVector,
    fg: &FVector,
    witness: CrossingWitness,
    family_params: Option<(u64, u64)>,
) -> Result<ComparisonReport> {
    let (fd, fg) = (fd.entries(), fg.entries());
    let premise_holds = fd[r] <= fg[r];
    let conclusions: BTreeMap<usize, Conclusion> = if premise_holds {
        (r + 1..dim.d())
            .map(|s| {
                let c = Conclusion {
                    bound_holds: fd[s] <= fg[s],
                    lhs: fd[s].clone(),
                    rhs: fg[s].clone(),
                };
                (s, c)
            })
            .collect()
    } else {
        BTreeMap::new()
    };
    let certified = premise_holds && md(dim).entry(witness.t, r).is_positive();
    let key_inequality_holds = (r + 1..dim.d()).all(|s| key_inequality(dim, &witness, r, s));
    if certified {
        if let Some((&s, _)) = conclusions.iter().find(|(_, c)| !c.bound_holds) {
            return Err(Error::CertifiedBoundFailed { s });
        }
    }
    Ok(ComparisonReport {
        d: dim.d(),
        r,
        premise_holds,
        premise_lhs: fd[r].clone(),
        premise_rhs: fg[r].clone(),
        conclusions,
        witness: Some(witness),
        family_params,
        certified,
        key_inequality_holds,
    })
}

/// One adjacent comparison `m[i][r] / m[i][s] >= m[i+1][r] / m[i+1][s]`,
/// checked as `m[i][r] m[i+1][s] >= m[i][s] m[i+1][r]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioLink {
    pub i: usize,
    #[serde(serialize_with = "json::int")]
    pub lhs: ExactInt,
    #[serde(serialize_with = "json::int")]
    pub rhs: ExactInt,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioChain {
    pub d: usize,
    pub r: usize,
    pub s: usize,
    pub links: Vec<RatioLink>,
    /// First row with `m[i][s] = 0`, if any.
    pub zero_tail_start: Option<usize>,
    /// `m[i][s] = 0` implies `m[i+1][r] = 0` (and rows past it stay zero).
    pub tail_ok: bool,
    /// `m[delta][r] >= 0` and `m[delta][s] >= 0`.
    pub last_nonnegative: bool,
}

impl RatioChain {
    pub fn holds(&self) -> bool {
        self.links.iter().all(|l| l.holds) && self.tail_ok && self.last_nonnegative
    }
}

pub fn ratio_chain(dim: Dimension, r: usize, s: usize) -> Result<RatioChain> {
    if r >= s || s >= dim.d() {
        return Err(Error::IndexOutOfRange(format!(
            "need 0 <= r < s <= d-1, got r={r}, s={s}"
        )));
    }
    let m = md(dim);
    let delta = dim.delta();
    let links = (0..delta)
        .map(|i| {
            let lhs = m.entry(i, r) * m.entry(i + 1, s);
            let rhs = m.entry(i, s) * m.entry(i + 1, r);
            RatioLink {
                i,
                holds: lhs >= rhs,
                lhs,
                rhs,
            }
        })
        .collect();
    let zero_tail_start = (0..=delta).find(|&i| m.entry(i, s).is_zero());
    let tail_ok = match zero_tail_start {
        None => true,
        Some(k) => (k..=delta).all(|i| m.entry(i, s).is_zero()) && (k + 1..=delta).all(|i| m.entry(i, r).is_zero()),
    };
    let last_nonnegative = !m.entry(delta, r).is_negative() && !m.entry(delta, s).is_negative();
    Ok(RatioChain {
        d: dim.d(),
        r,
        s,
        links,
        zero_tail_start,
        tail_ok,
        last_nonnegative,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    #[serde(serialize_with = "json::opt_int")]
    pub lower: Option<ExactInt>,
    #[serde(serialize_with = "json::opt_int")]
    pub upper: Option<ExactInt>,
}

impl Interval {
    pub fn contains(&self, x: &ExactInt) -> bool {
        self.lower.as_ref().is_none_or(|l| l <= x) && self.upper.as_ref().is_none_or(|u| x <= u)
    }
}

/// Guaranteed face-number intervals for every `s > r`, given `f_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub d: usize,
    pub r: usize,
    #[serde(serialize_with = "json::int")]
    pub value: ExactInt,
    /// Lower family (stacked or cs-stacked) and its parameter.
    pub lower_family: Family,
    pub n_lower: u64,
    /// Upper family (cyclic) and its parameter, when an upper bound applies.
    pub upper_family: Option<Family>,
    pub n_upper: Option<u64>,
    pub bounds: BTreeMap<usize, Interval>,
    /// The crossing index for the comparison is at most 1 whatever the input
    /// polytope, so the lower bounds are certified.
    pub lower_certified: bool,
}

/// Largest `n >= lo` with `f(n) <= value`, assuming `f` strictly increasing
/// and `f(lo) <= value`.
fn last_at_most(lo: u64, value: &ExactInt, f: impl Fn(u64) -> ExactInt) -> u64 {
    let mut lo = lo;
    let mut step = 1;
    while f(lo + step) <= *value {
        lo += step;
        step *= 2;
    }
    let mut hi = lo + step;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if f(mid) <= *value {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Smallest `n >= lo` with `f(n) >= value`, assuming `f` strictly increasing
/// and unbounded.
fn first_at_least(lo: u64, value: &ExactInt, f: impl Fn(u64) -> ExactInt) -> u64 {
    if f(lo) >= *value {
        return lo;
    }
    last_at_most(lo, &(value - 1), f) + 1
}

fn family_f(fam: Family, dim: Dimension, j: usize) -> impl Fn(u64) -> ExactInt {
    move |n| {
        FamilySpec::new(fam, n, dim)
            .expect("searches start at the family minimum")
            .f_vector()
            .entries()[j]
            .clone()
    }
}

/// Sandwich bounds for a simplicial d-polytope `P` with `f_r(P) = value`:
/// `f_s(S(n_1,d)) <= f_s(P) <= f_s(C(n_2,d))` for all `r < s < d`.
pub fn sandwich_simplicial(dim: Dimension, r: usize, value: &ExactInt) -> Result<BoundsReport> {
    check_r(dim, r)?;
    let min = Family::Stacked.min_n(dim);
    let lower_f = family_f(Family::Stacked, dim, r);
    let floor = lower_f(min);
    if *value < floor {
        return Err(Error::BelowFloor {
            r,
            value: value.to_string(),
            floor_name: "simplex",
            floor: floor.to_string(),
        });
    }
    let n_lower = last_at_most(min, value, &lower_f);
    let n_upper = first_at_least(Family::Cyclic.min_n(dim), value, family_f(Family::Cyclic, dim, r));
    let fs = FamilySpec::new(Family::Stacked, n_lower, dim)?.f_vector();
    let fc = FamilySpec::new(Family::Cyclic, n_upper, dim)?.f_vector();
    let bounds = (r + 1..dim.d())
        .map(|s| {
            let iv = Interval {
                lower: Some(fs.entries()[s].clone()),
                upper: Some(fc.entries()[s].clone()),
            };
            (s, iv)
        })
        .collect();
    Ok(BoundsReport {
        d: dim.d(),
        r,
        value: value.clone(),
        lower_family: Family::Stacked,
        n_lower,
        upper_family: Some(Family::Cyclic),
        n_upper: Some(n_upper),
        bounds,
        // g(S) vanishes beyond index 1 and every simplicial polytope has
        // nonnegative g, so the crossing index is at most 1
        lower_certified: md(dim).entry(1, r).is_positive(),
    })
}

/// Lower bounds for a centrally-symmetric simplicial d-polytope `P` with
/// `f_r(P) = value`: `f_s(CS(2n,d)) <= f_s(P)` for all `r < s < d`.
pub fn lower_bound_cs(dim: Dimension, r: usize, value: &ExactInt) -> Result<BoundsReport> {
    check_r(dim, r)?;
    let min = Family::CsStacked.min_n(dim);
    let f = family_f(Family::CsStacked, dim, r);
    let floor = f(min);
    if *value < floor {
        return Err(Error::BelowFloor {
            r,
            value: value.to_string(),
            floor_name: "cross-polytope",
            floor: floor.to_string(),
        });
    }
    let n = last_at_most(min, value, &f);
    let cs = FamilySpec::new(Family::CsStacked, n, dim)?;
    let fcs = cs.f_vector();
    // g_i(CS) equals the centrally-symmetric floor for i >= 2, so against any
    // P above that floor the differences are nonpositive beyond index 1
    let floor_g = stanley_cs_floor(dim);
    let tail_matches = cs.g_vector().entries()[2..] == floor_g.entries()[2..];
    let bounds = (r + 1..dim.d())
        .map(|s| {
            (
                s,
                Interval {
                    lower: Some(fcs.entries()[s].clone()),
                    upper: None,
                },
            )
        })
        .collect();
    Ok(BoundsReport {
        d: dim.d(),
        r,
        value: value.clone(),
        lower_family: Family::CsStacked,
        n_lower: n,
        upper_family: None,
        n_upper: None,
        bounds,
        lower_certified: tail_matches && md(dim).entry(1, r).is_positive(),
    })
}
