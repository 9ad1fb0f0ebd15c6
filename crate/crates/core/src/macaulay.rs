//! Macaulay expansions, the `del^k` operator, and the sequence predicates
//! (nonnegative, m-sequence, M-sequence) used as hypotheses on g-vectors.
//!
//! Predicates take raw slices of any length `>= 1` so truncated vectors can be
//! checked too; wrap a [`GVector`](crate::GVector) with `.entries()`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, json, ExactInt};

/// `n = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_i, i)` with
/// `a_k > a_{k-1} > ... > a_i >= i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayExpansion {
    #[serde(serialize_with = "json::int")]
    pub n: ExactInt,
    pub k: u32,
    /// `(a_j, j)` with `j` descending from `k`.
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayExpansion {
    pub fn value(&self) -> ExactInt {
        self.terms.iter().map(|&(a, j)| binomial(a as i64, j as i64)).sum()
    }
}

/// Largest `a >= k` with `C(a, k) <= n`, for `n >= 1`.
fn largest_top(n: &ExactInt, k: u32) -> u64 {
    let k64 = k as i64;
    let fits = |a: u64| binomial(a as i64, k64) <= *n;
    let mut lo = k as u64;
    let mut step = 1u64;
    while fits(lo + step) {
        lo += step;
        step *= 2;
    }
    // fits(lo) holds and fits(lo + step) fails
    let mut hi = lo + step;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy largest-first expansion of `n` in base `k`.
pub fn macaulay_expand(n: &ExactInt, k: u32) -> Result<MacaulayExpansion> {
    if !n.is_positive() {
        return Err(Error::NonPositive(n.to_string()));
    }
    if k < 1 {
        return Err(Error::NonPositive(k.to_string()));
    }
    let mut rest = n.clone();
    let mut terms = Vec::new();
    let mut j = k;
    while !rest.is_zero() {
        let a = largest_top(&rest, j);
        rest -= binomial(a as i64, j as i64);
        terms.push((a, j));
        j -= 1;
    }
    Ok(MacaulayExpansion { n: n.clone(), k, terms })
}

/// `del^k(n)`: every term `C(a_j, j)` of the expansion becomes `C(a_j - 1, j - 1)`.
pub fn del_k(n: &ExactInt, k: u32) -> Result<ExactInt> {
    if n.is_negative() {
        return Err(Error::Negative(n.to_string()));
    }
    if n.is_zero() {
        return Ok(ExactInt::zero());
    }
    let e = macaulay_expand(n, k)?;
    Ok(e.terms.iter().map(|&(a, j)| binomial(a as i64 - 1, j as i64 - 1)).sum())
}

pub fn is_nonnegative(v: &[ExactInt]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

fn check_leading(v: &[ExactInt]) -> Result<()> {
    match v.first() {
        None => Err(Error::LengthMismatch { expected: 1, found: 0 }),
        Some(x) if !x.is_one() => Err(Error::LeadingEntryNotOne(x.to_string())),
        Some(_) => Ok(()),
    }
}

/// A failing position of the m-sequence condition: `v_j >= C(m, j)` but
/// `v_{j-1} < C(m-1, j-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MSeqViolation {
    pub j: usize,
    pub m: u64,
    #[serde(serialize_with = "json::int")]
    pub required: ExactInt,
    #[serde(serialize_with = "json::int")]
    pub found: ExactInt,
}

/// First position violating the m-sequence condition, or a negative entry.
///
/// For each `j > 1` only the largest `m` with `v_j >= C(m, j)` is tested:
/// `C(m-1, j-1)` grows with `m`, so that `m` gives the strongest requirement.
/// Positions with `v_j = 0` impose nothing.
pub fn m_sequence_violation(v: &[ExactInt]) -> Result<Option<MSeqViolation>> {
    check_leading(v)?;
    if let Some(j) = v.iter().position(|x| x.is_negative()) {
        return Ok(Some(MSeqViolation {
            j,
            m: 0,
            required: ExactInt::zero(),
            found: v[j].clone(),
        }));
    }
    for j in 2..v.len() {
        if v[j].is_zero() {
            continue;
        }
        let m = largest_top(&v[j], j as u32);
        let required = binomial(m as i64 - 1, j as i64 - 1);
        if v[j - 1] < required {
            return Ok(Some(MSeqViolation {
                j,
                m,
                required,
                found: v[j - 1].clone(),
            }));
        }
    }
    Ok(None)
}

pub fn is_m_sequence_upper(v: &[ExactInt]) -> Result<bool> {
    Ok(m_sequence_violation(v)?.is_none())
}

/// A failing position of Macaulay's condition: `del^k(v_k) > v_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayViolation {
    pub k: usize,
    #[serde(serialize_with = "json::int")]
    pub del: ExactInt,
    #[serde(serialize_with = "json::int")]
    pub bound: ExactInt,
}

/// First position violating the M-sequence condition. A negative entry is
/// reported at its own index with `del` set to the entry itself.
pub fn macaulay_violation(v: &[ExactInt]) -> Result<Option<MacaulayViolation>> {
    check_leading(v)?;
    if let Some(k) = v.iter().position(|x| x.is_negative()) {
        return Ok(Some(MacaulayViolation {
            k,
            del: v[k].clone(),
            bound: ExactInt::zero(),
        }));
    }
    for k in 2..v.len() {
        let del = del_k(&v[k], k as u32)?;
        if del > v[k - 1] {
            return Ok(Some(MacaulayViolation {
                k,
                del,
                bound: v[k - 1].clone(),
            }));
        }
    }
    Ok(None)
}

#[allow(non_snake_case)]
pub fn is_M_sequence(v: &[ExactInt]) -> Result<bool> {
    Ok(macaulay_violation(v)?.is_none())
}
