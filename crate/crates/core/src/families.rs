//! Closed-form g-vectors of the extremal families: cyclic polytopes `C(n,d)`,
//! stacked polytopes `S(n,d)` and centrally-symmetric stacked polytopes
//! `CS(2n,d)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, ExactInt};
use crate::transforms::{g_to_f, Dimension, FVector, GVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cyclic,
    Stacked,
    /// Vertex parameter `n` means `2n` vertices.
    CsStacked,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Stacked => "stacked",
            Family::CsStacked => "cs-stacked",
        }
    }

    /// Smallest admissible vertex parameter in dimension `d`.
    pub fn min_n(self, dim: Dimension) -> u64 {
        match self {
            Family::Cyclic | Family::Stacked => dim.d() as u64 + 1,
            Family::CsStacked => dim.d() as u64,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cyclic" => Ok(Family::Cyclic),
            "stacked" => Ok(Family::Stacked),
            "cs-stacked" | "cs_stacked" => Ok(Family::CsStacked),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: u64,
    #[serde(skip)]
    pub dim: Dimension,
}

impl FamilySpec {
    pub fn new(family: Family, n: u64, dim: Dimension) -> Result<Self> {
        let min = family.min_n(dim);
        if n < min {
            return Err(Error::FamilyTooSmall {
                family: family.name(),
                n,
                d: dim.d(),
                min,
            });
        }
        Ok(FamilySpec { family, n, dim })
    }

    pub fn g_vector(&self) -> GVector {
        let (d, delta, n) = (self.dim.d() as i64, self.dim.delta(), self.n as i64);
        let mut g = vec![ExactInt::zero(); delta + 1];
        g[0] = ExactInt::one();
        match self.family {
            Family::Cyclic => {
                for (i, gi) in g.iter_mut().enumerate().skip(1) {
                    *gi = binomial(n - d - 2 + i as i64, i as i64);
                }
            }
            Family::Stacked => g[1] = ExactInt::from(n - d - 1),
            Family::CsStacked => {
                g[1] = ExactInt::from(2 * n - d - 1);
                for (i, gi) in g.iter_mut().enumerate().skip(2) {
                    let i = i as i64;
                    *gi = binomial(d, i) - binomial(d, i - 1);
                }
            }
        }
        GVector::new(self.dim, g).expect("family g-vectors have length delta+1 and g_0 = 1")
    }

    pub fn f_vector(&self) -> FVector {
        g_to_f(&self.g_vector())
    }

    pub fn vertex_count(&self) -> u64 {
        match self.family {
            Family::CsStacked => 2 * self.n,
            _ => self.n,
        }
    }
}

/// `g_i = C(n-d-2+i, i)`; requires `n >= d+1`.
pub fn g_cyclic(n: u64, dim: Dimension) -> Result<GVector> {
    Ok(FamilySpec::new(Family::Cyclic, n, dim)?.g_vector())
}

/// `(1, n-d-1, 0, ..., 0)`; requires `n >= d+1`.
pub fn g_stacked(n: u64, dim: Dimension) -> Result<GVector> {
    Ok(FamilySpec::new(Family::Stacked, n, dim)?.g_vector())
}

/// `(1, 2n-d-1, C(d,2)-C(d,1), ..., C(d,delta)-C(d,delta-1))`; requires `n >= d`.
pub fn g_cs_stacked(n: u64, dim: Dimension) -> Result<GVector> {
    Ok(FamilySpec::new(Family::CsStacked, n, dim)?.g_vector())
}

pub fn f_of_family(spec: &FamilySpec) -> FVector {
    spec.f_vector()
}

/// Componentwise lower bound `g_i >= C(d,i) - C(d,i-1)` (`i >= 1`) satisfied by
/// every centrally-symmetric simplicial d-polytope.
pub fn stanley_cs_floor(dim: Dimension) -> GVector {
    let d = dim.d() as i64;
    let g = (0..=dim.delta() as i64)
        .map(|i| {
            if i == 0 {
                ExactInt::one()
            } else {
                binomial(d, i) - binomial(d, i - 1)
            }
        })
        .collect();
    GVector::new(dim, g).expect("length delta+1, g_0 = 1")
}
