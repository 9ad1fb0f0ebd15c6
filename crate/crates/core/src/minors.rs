//! Minor scans of `M_d`: the 2x2 minors `Phi(a,b; r,s)`, the ratio form of
//! their nonnegativity, and all-order scans for total nonnegativity.

use itertools::Itertools;
use num_integer::binomial as count_subsets;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{det, json, ExactInt, IntMatrix};
use crate::exec::Execution;
use crate::transforms::{md, Dimension};

/// Largest `d` covered by the published finite check of total nonnegativity.
pub const KNOWN_CHECK_MAX_D: usize = 13;

/// `m[a][r] m[b][s] - m[a][s] m[b][r]` for `a < b`, `r < s`.
pub fn phi_minor(dim: Dimension, a: usize, b: usize, r: usize, s: usize) -> Result<ExactInt> {
    if a >= b || b > dim.delta() {
        return Err(Error::IndexOutOfRange(format!(
            "need 0 <= a < b <= delta, got a={a}, b={b}"
        )));
    }
    if r >= s || s >= dim.d() {
        return Err(Error::IndexOutOfRange(format!(
            "need 0 <= r < s <= d-1, got r={r}, s={s}"
        )));
    }
    let m = md(dim);
    Ok(m.entry(a, r) * m.entry(b, s) - m.entry(a, s) * m.entry(b, r))
}

/// Which minor orders a scan covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorOrder {
    Exactly(usize),
    UpTo(usize),
    All,
}

impl MinorOrder {
    fn orders(self, max: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            MinorOrder::Exactly(k) => k.max(1)..=k.min(max),
            MinorOrder::UpTo(k) => 1..=k.min(max),
            MinorOrder::All => 1..=max,
        }
    }
}

impl Serialize for MinorOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MinorOrder::Exactly(k) => s.serialize_str(&format!("={k}")),
            MinorOrder::UpTo(k) => s.serialize_str(&format!("<={k}")),
            MinorOrder::All => s.serialize_str("all"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub order: usize,
    pub minors_checked: u64,
    #[serde(serialize_with = "json::int")]
    pub min_value: ExactInt,
    pub min_witness: MinorWitness,
    pub negative_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorReport {
    pub d: usize,
    pub order: MinorOrder,
    pub minors_checked: u64,
    #[serde(serialize_with = "json::int")]
    pub min_value: ExactInt,
    pub min_witness: MinorWitness,
    pub all_nonnegative: bool,
    pub by_order: Vec<OrderSummary>,
    /// All-order scan beyond the previously verified range `d <= 13`.
    pub beyond_known_check: bool,
}

/// Scans every k x k minor for the requested orders. Column sets run in
/// lexicographic order inside ascending `k`; the reported minimum is the
/// first one reached in that order.
pub fn scan_minors(dim: Dimension, order: MinorOrder, exec: Execution) -> MinorReport {
    let m = md(dim);
    let max = dim.delta() + 1;
    let by_order: Vec<OrderSummary> = order.orders(max).map(|k| scan_order(m.matrix(), k, exec)).collect();
    let (min_value, min_witness) = by_order
        .iter()
        .fold(None::<&OrderSummary>, |best, o| match best {
            Some(b) if b.min_value <= o.min_value => Some(b),
            _ => Some(o),
        })
        .map(|o| (o.min_value.clone(), o.min_witness.clone()))
        .unwrap_or((
            ExactInt::zero(),
            MinorWitness {
                rows: vec![],
                cols: vec![],
            },
        ));
    MinorReport {
        d: dim.d(),
        order,
        minors_checked: by_order.iter().map(|o| o.minors_checked).sum(),
        all_nonnegative: by_order.iter().all(|o| o.negative_count == 0),
        min_value,
        min_witness,
        beyond_known_check: !matches!(order, MinorOrder::Exactly(_)) && dim.d() > KNOWN_CHECK_MAX_D,
        by_order,
    }
}

/// Every k x k minor of `m`; `k` must not exceed either dimension.
pub fn scan_order(m: &IntMatrix, k: usize, exec: Execution) -> OrderSummary {
    let rows: Vec<Vec<usize>> = (0..m.rows()).combinations(k).collect();
    let cols: Vec<Vec<usize>> = (0..m.cols()).combinations(k).collect();
    // one job per row set; each returns (min, argmin column index, negatives)
    let per_row = exec.map(&rows, |rs| {
        let mut best: Option<(ExactInt, usize)> = None;
        let mut negatives = 0u64;
        for (ci, cs) in cols.iter().enumerate() {
            let sub = m.submatrix(rs, cs).expect("indices in range");
            let v = det(&sub).expect("square");
            if v.is_negative() {
                negatives += 1;
            }
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                best = Some((v, ci));
            }
        }
        (best, negatives)
    });
    let mut min: Option<(ExactInt, MinorWitness)> = None;
    let mut negative_count = 0;
    for (rs, (best, neg)) in rows.iter().zip(per_row) {
        negative_count += neg;
        if let Some((v, ci)) = best {
            if min.as_ref().is_none_or(|(b, _)| v < *b) {
                min = Some((
                    v,
                    MinorWitness {
                        rows: rs.clone(),
                        cols: cols[ci].clone(),
                    },
                ));
            }
        }
    }
    let (min_value, min_witness) = min.expect("at least one minor of each order <= rows");
    OrderSummary {
        order: k,
        minors_checked: (rows.len() * cols.len()) as u64,
        min_value,
        min_witness,
        negative_count,
    }
}

/// All `C(delta+1, 2) C(d, 2)` minors of order 2.
pub fn verify_lemma3(dim: Dimension) -> MinorReport {
    scan_minors(dim, MinorOrder::Exactly(2), Execution::default())
}

/// Every minor of order `1..=min(max_order, delta+1)`.
pub fn verify_total_nonnegativity(dim: Dimension, max_order: MinorOrder) -> MinorReport {
    scan_minors(dim, max_order, Execution::default())
}

/// Expected number of minors of order `k`: `C(delta+1, k) C(d, k)`.
pub fn minor_count(dim: Dimension, k: usize) -> u64 {
    count_subsets(dim.delta() as u64 + 1, k as u64) * count_subsets(dim.d() as u64, k as u64)
}

/// Checks, for every `i < j` and `t < u` with `m[j][u] > 0`, that the 2x2
/// determinant is nonnegative exactly when `m[i][t]/m[i][u] >= m[j][t]/m[j][u]`
/// as rationals; and that nonnegativity of consecutive-row minors yields
/// every row pair by chaining the ratios.
pub fn step1_ratio_equiv(dim: Dimension) -> bool {
    let m = md(dim);
    let rows = dim.delta() + 1;
    let cols = dim.d();
    let ratio = |i: usize, t: usize, u: usize| BigRational::new(m.entry(i, t).clone(), m.entry(i, u).clone());
    for t in 0..cols {
        for u in t + 1..cols {
            // rows with m[i][u] > 0 form a prefix
            let positive: Vec<usize> = (0..rows).take_while(|&i| m.entry(i, u).is_positive()).collect();
            if (positive.len()..rows).any(|i| !m.entry(i, u).is_zero() || !m.entry(i, t).is_zero()) {
                return false;
            }
            for j in 0..rows {
                if !m.entry(j, u).is_positive() {
                    continue;
                }
                for i in 0..j {
                    let det_nonneg = !(m.entry(i, t) * m.entry(j, u) - m.entry(i, u) * m.entry(j, t)).is_negative();
                    if det_nonneg != (ratio(i, t, u) >= ratio(j, t, u)) {
                        return false;
                    }
                }
            }
            // consecutive rows give a descending chain of ratios
            let consecutive_ok = positive.windows(2).all(|w| ratio(w[0], t, u) >= ratio(w[1], t, u));
            if !consecutive_ok {
                return false;
            }
            // composing the chain: every pair a < b in the prefix is ordered,
            // and rows past the prefix give zero minors
            for (ia, &a) in positive.iter().enumerate() {
                for &b in &positive[ia + 1..] {
                    let chained = (a..b).all(|x| ratio(x, t, u) >= ratio(x + 1, t, u));
                    let direct = !(m.entry(a, t) * m.entry(b, u) - m.entry(a, u) * m.entry(b, t)).is_negative();
                    if !(chained && direct) {
                        return false;
                    }
                }
                for b in positive.len()..rows {
                    let v = m.entry(a, t) * m.entry(b, u) - m.entry(a, u) * m.entry(b, t);
                    if !v.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}
