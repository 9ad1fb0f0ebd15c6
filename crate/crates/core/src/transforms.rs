//! f-, h- and g-vectors of a (d-1)-dimensional simplicial sphere, the `M_d`
//! matrix and the conversions between them.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{binomial, json, ExactInt, IntMatrix};

/// The ambient dimension `d >= 3` together with `delta = floor(d / 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dimension {
    d: usize,
}

impl Dimension {
    pub fn new(d: i64) -> Result<Self> {
        if d < 3 {
            return Err(Error::DimensionTooSmall(d));
        }
        Ok(Dimension { d: d as usize })
    }

    pub fn d(self) -> usize {
        self.d
    }

    pub fn delta(self) -> usize {
        self.d / 2
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}", self.d)
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::LengthMismatch { expected, found });
    }
    Ok(())
}

/// Face numbers `(f_0, ..., f_{d-1})`; `f_{-1} = 1` is implicit.
///
/// Entries are not required to be realizable; callers that need a validity
/// check use the predicates in [`crate::macaulay`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector {
    dim: Dimension,
    f: Vec<ExactInt>,
}

impl FVector {
    pub fn new(dim: Dimension, f: Vec<ExactInt>) -> Result<Self> {
        check_len(dim.d(), f.len())?;
        Ok(FVector { dim, f })
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn entries(&self) -> &[ExactInt] {
        &self.f
    }

    /// `f_j` for `-1 <= j <= d-1`.
    pub fn face_count(&self, j: i64) -> ExactInt {
        if j == -1 {
            ExactInt::one()
        } else {
            self.f[j as usize].clone()
        }
    }
}

/// `(h_0, ..., h_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector {
    dim: Dimension,
    h: Vec<ExactInt>,
}

impl HVector {
    /// Only the length is checked here; `h_0 = 1` is enforced by [`h_to_g`].
    pub fn new(dim: Dimension, h: Vec<ExactInt>) -> Result<Self> {
        check_len(dim.d() + 1, h.len())?;
        Ok(HVector { dim, h })
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn entries(&self) -> &[ExactInt] {
        &self.h
    }
}

/// `(g_0, ..., g_delta)` with `g_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GVector {
    dim: Dimension,
    g: Vec<ExactInt>,
}

impl GVector {
    pub fn new(dim: Dimension, g: Vec<ExactInt>) -> Result<Self> {
        check_len(dim.delta() + 1, g.len())?;
        if !g[0].is_one() {
            return Err(Error::LeadingEntryNotOne(g[0].to_string()));
        }
        Ok(GVector { dim, g })
    }

    pub fn from_i64(dim: Dimension, g: &[i64]) -> Result<Self> {
        GVector::new(dim, g.iter().map(|&x| ExactInt::from(x)).collect())
    }

    /// `(1, 0, ..., 0)`, the boundary of the d-simplex.
    pub fn simplex(dim: Dimension) -> Self {
        let mut g = vec![ExactInt::zero(); dim.delta() + 1];
        g[0] = ExactInt::one();
        GVector { dim, g }
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn entries(&self) -> &[ExactInt] {
        &self.g
    }
}

macro_rules! serialize_vector {
    ($ty:ident, $field:ident, $name:literal) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                struct Ints<'a>(&'a [ExactInt]);
                impl Serialize for Ints<'_> {
                    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                        json::ints(self.0, s)
                    }
                }
                let mut st = s.serialize_struct(stringify!($ty), 2)?;
                st.serialize_field("d", &self.dim.d())?;
                st.serialize_field($name, &Ints(&self.$field))?;
                st.end()
            }
        }
    };
}

serialize_vector!(FVector, f, "f");
serialize_vector!(HVector, h, "h");
serialize_vector!(GVector, g, "g");

/// The `(delta+1) x d` matrix with `m[i][j] = C(d+1-i, d-j) - C(i, d-j)`,
/// so that `f = g . M_d` for every homology sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdMatrix {
    dim: Dimension,
    m: IntMatrix,
}

impl MdMatrix {
    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &ExactInt {
        self.m.get(i, j)
    }
}

impl Serialize for MdMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Row<'a>(&'a [ExactInt]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                json::ints(self.0, s)
            }
        }
        let rows: Vec<Row<'_>> = (0..self.m.rows()).map(|i| Row(self.m.row(i))).collect();
        let mut st = s.serialize_struct("MdMatrix", 2)?;
        st.serialize_field("d", &self.dim.d())?;
        st.serialize_field("m", &rows)?;
        st.end()
    }
}

pub fn build_md(dim: Dimension) -> MdMatrix {
    let d = dim.d() as i64;
    let rows = dim.delta() + 1;
    let entries = (0..rows as i64)
        .flat_map(|i| (0..d).map(move |j| binomial(d + 1 - i, d - j) - binomial(i, d - j)))
        .collect();
    let m = IntMatrix::new(rows, dim.d(), entries).expect("shape is (delta+1) x d");
    MdMatrix { dim, m }
}

/// Shared, lazily built `M_d`.
pub fn md(dim: Dimension) -> Arc<MdMatrix> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<MdMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().unwrap().get(&dim.d()) {
        return Arc::clone(m);
    }
    let built = Arc::new(build_md(dim));
    let mut w = cache.write().unwrap();
    Arc::clone(w.entry(dim.d()).or_insert(built))
}

/// `h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}`.
pub fn f_to_h(f: &FVector) -> HVector {
    let d = f.dim.d() as i64;
    let h = (0..=d)
        .map(|k| {
            (0..=k).fold(ExactInt::zero(), |acc, i| {
                let term = binomial(d - i, k - i) * f.face_count(i - 1);
                if (k - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    HVector { dim: f.dim, h }
}

/// `f_{j-1} = sum_{i<=j} C(d-i, j-i) h_i`.
pub fn h_to_f(h: &HVector) -> FVector {
    let d = h.dim.d() as i64;
    let f = (1..=d)
        .map(|j| {
            (0..=j).fold(ExactInt::zero(), |acc, i| {
                acc + binomial(d - i, j - i) * &h.h[i as usize]
            })
        })
        .collect();
    FVector { dim: h.dim, f }
}

pub fn h_to_g(h: &HVector) -> Result<GVector> {
    if !h.h[0].is_one() {
        return Err(Error::LeadingEntryNotOne(h.h[0].to_string()));
    }
    let mut g = Vec::with_capacity(h.dim.delta() + 1);
    g.push(ExactInt::one());
    g.extend((1..=h.dim.delta()).map(|i| &h.h[i] - &h.h[i - 1]));
    Ok(GVector { dim: h.dim, g })
}

/// The palindromic h-vector with the given g-vector.
pub fn g_to_h(g: &GVector) -> HVector {
    let d = g.dim.d();
    let mut h = vec![ExactInt::zero(); d + 1];
    let mut running = ExactInt::zero();
    for (i, gi) in g.g.iter().enumerate() {
        running += gi;
        h[i] = running.clone();
        h[d - i] = running.clone();
    }
    HVector { dim: g.dim, h }
}

/// `h_i = h_{d-i}` for all `i`.
pub fn is_dehn_sommerville(h: &HVector) -> bool {
    let d = h.dim.d();
    (0..=d).all(|i| h.h[i] == h.h[d - i])
}

/// `f = g . M_d`.
pub fn g_to_f(g: &GVector) -> FVector {
    let m = md(g.dim);
    let f = (0..g.dim.d())
        .map(|j| {
            g.g.iter()
                .enumerate()
                .fold(ExactInt::zero(), |acc, (i, gi)| acc + gi * m.entry(i, j))
        })
        .collect();
    FVector { dim: g.dim, f }
}

/// Truncated h-differences of `f`; no Dehn-Sommerville check is made.
pub fn f_to_g(f: &FVector) -> GVector {
    h_to_g(&f_to_h(f)).expect("h_0 = f_{-1} = 1")
}
