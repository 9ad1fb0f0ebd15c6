//! Independent oracles shared by the integration and acceptance tests. None of
//! these go through `M_d` or the library transforms.
#![allow(dead_code)]

use std::collections::HashSet;

use fcompare_core::{binomial, del_k, Dimension, ExactInt, GVector};
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

pub fn ints(v: &[i64]) -> Vec<ExactInt> {
    v.iter().map(|&x| ExactInt::from(x)).collect()
}

pub fn dim(d: i64) -> Dimension {
    Dimension::new(d).unwrap()
}

/// Face numbers of the cyclic polytope `C(n,d)` from its facets, found by
/// Gale's evenness condition, and all their subsets.
pub fn gale_cyclic_f(n: usize, d: usize) -> Vec<u64> {
    assert!(n <= 20);
    let mut faces: HashSet<u32> = HashSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != d {
            continue;
        }
        let outside: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) == 0).collect();
        // checking consecutive outside elements covers every pair
        let even = outside
            .windows(2)
            .all(|w| ((w[0] + 1)..w[1]).filter(|&k| mask & (1 << k) != 0).count() % 2 == 0);
        if !even {
            continue;
        }
        let mut sub = mask;
        loop {
            if sub != 0 {
                faces.insert(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
    }
    let mut f = vec![0u64; d];
    for face in faces {
        f[face.count_ones() as usize - 1] += 1;
    }
    f
}

/// Face numbers of `S(n,d)`: start from the simplex boundary and apply
/// `n-d-1` stellar subdivisions of a facet. Each one adds a vertex, the cone
/// over the facet boundary (`C(d, j)` new j-faces) and removes the facet.
pub fn stacked_f_by_subdivision(n: usize, d: usize) -> Vec<i64> {
    let mut f: Vec<i64> = (0..d).map(|j| choose(d + 1, j + 1)).collect();
    for _ in 0..(n - d - 1) {
        for (j, fj) in f.iter_mut().enumerate() {
            *fj += choose(d, j);
        }
        f[d - 1] -= 1;
    }
    f
}

/// Same idea for `CS(2n,d)`: cross-polytope, then `n-d` symmetric pairs.
pub fn cs_stacked_f_by_subdivision(n: usize, d: usize) -> Vec<i64> {
    let mut f: Vec<i64> = (0..d).map(|j| (1i64 << (j + 1)) * choose(d, j + 1)).collect();
    for _ in 0..(n - d) {
        for (j, fj) in f.iter_mut().enumerate() {
            *fj += 2 * choose(d, j);
        }
        f[d - 1] -= 2;
    }
    f
}

fn choose(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Coefficients (index = power of x) of `sum_i f_{i-1} x^{d-i}`.
pub fn f_polynomial(d: usize, f: &[ExactInt]) -> Vec<ExactInt> {
    let mut c = vec![ExactInt::zero(); d + 1];
    for i in 0..=d {
        let fi = if i == 0 { ExactInt::one() } else { f[i - 1].clone() };
        c[d - i] += fi;
    }
    c
}

/// Coefficients of `sum_i h_i (x+1)^{d-i}`, expanded by repeated
/// multiplication by `(x+1)`.
pub fn h_polynomial(d: usize, h: &[ExactInt]) -> Vec<ExactInt> {
    let mut c = vec![ExactInt::zero(); d + 1];
    for (i, hi) in h.iter().enumerate() {
        let mut p = vec![ExactInt::one()];
        for _ in 0..(d - i) {
            let mut next = vec![ExactInt::zero(); p.len() + 1];
            for (k, pk) in p.iter().enumerate() {
                next[k] += pk;
                next[k + 1] += pk;
            }
            p = next;
        }
        for (k, pk) in p.iter().enumerate() {
            c[k] += hi * pk;
        }
    }
    c
}

/// The m-sequence condition exactly as defined: for every `m >= j > 1`,
/// `v_j >= C(m,j)` implies `v_{j-1} >= C(m-1,j-1)`. `m` runs until `C(m,j)`
/// exceeds `v_j`.
pub fn literal_m_sequence(v: &[i64]) -> bool {
    if v[0] != 1 || v.iter().any(|&x| x < 0) {
        return false;
    }
    for j in 2..v.len() {
        let mut m = j as i64;
        loop {
            let c = binomial(m, j as i64);
            if c > ExactInt::from(v[j]) {
                break;
            }
            if ExactInt::from(v[j - 1]) < binomial(m - 1, j as i64 - 1) {
                return false;
            }
            m += 1;
        }
    }
    true
}

/// Number of admissible Macaulay representations of every `n <= max` in base
/// `k`, by enumerating all strictly decreasing `a_k > ... > a_i >= i >= 1`.
pub fn representation_counts(max: i64, k: i64) -> Vec<u32> {
    let mut counts = vec![0u32; max as usize + 1];
    fn rec(j: i64, upper: i64, sum: i64, max: i64, counts: &mut [u32]) {
        // choose a_j in [j, upper)
        for a in j..upper {
            let c = binomial(a, j).to_i64().unwrap();
            if sum + c > max {
                break;
            }
            counts[(sum + c) as usize] += 1;
            if j > 1 {
                rec(j - 1, a, sum + c, max, counts);
            }
        }
    }
    rec(k, i64::MAX, 0, max, &mut counts);
    counts
}

/// A random M-sequence of length `delta + 1`: `g_1` uniform, later entries
/// drawn below the cyclic value and halved until the Macaulay condition holds.
pub fn random_m_sequence<R: Rng>(rng: &mut R, dim: Dimension, max_g1: i64) -> GVector {
    let delta = dim.delta();
    let mut g = vec![ExactInt::one()];
    if delta >= 1 {
        g.push(ExactInt::from(rng.random_range(0..=max_g1)));
    }
    for k in 2..=delta {
        let g1 = g[1].to_i64().unwrap();
        let cap = binomial(g1 + k as i64 - 1, k as i64)
            .to_i64()
            .unwrap_or(i64::MAX)
            .min(1 << 40);
        let mut x = if rng.random_bool(0.2) {
            cap
        } else {
            rng.random_range(0..=cap)
        };
        while del_k(&ExactInt::from(x), k as u32).unwrap() > g[k - 1] {
            x /= 2;
        }
        g.push(ExactInt::from(x));
    }
    GVector::new(dim, g).unwrap()
}

/// A random pair `(Delta, Gamma)` whose difference has a crossing at a
/// random `t`. Each difference is zero with probability 1/4, so runs of
/// equal entries occur; all entries stay in `[0, max]`.
pub fn random_crossing_pair<R: Rng>(rng: &mut R, dim: Dimension, max: i64) -> (GVector, GVector) {
    let delta = dim.delta();
    let t = rng.random_range(0..=delta);
    let mut gd = vec![ExactInt::one()];
    let mut gg = vec![ExactInt::one()];
    for i in 1..=delta {
        let base = rng.random_range(0..=max);
        let mag = if rng.random_bool(0.25) {
            0
        } else {
            rng.random_range(0..=max)
        };
        let (a, b) = if i <= t {
            (base.max(mag), base.max(mag) - mag)
        } else {
            (base.max(mag) - mag, base.max(mag))
        };
        gd.push(ExactInt::from(a));
        gg.push(ExactInt::from(b));
    }
    (GVector::new(dim, gd).unwrap(), GVector::new(dim, gg).unwrap())
}
