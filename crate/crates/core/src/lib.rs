//! Exact f-vector comparison for simplicial polytopes and homology spheres.
//!
//! The crate converts between f-, h- and g-vectors through the integer matrix
//! `M_d` (`f = g . M_d`), generates the extremal cyclic, stacked and
//! centrally-symmetric stacked families, tests Macaulay-type sequence
//! conditions, and compares f-vectors index by index through g-vector
//! crossing patterns. It also carries finite verifiers for the facts the
//! comparison rests on: nonnegativity of the minors of `M_d`, the two-path
//! Gessel-Viennot identity, and a lattice-path injection that proves the
//! 2x2 case.
//!
//! All arithmetic is exact ([`ExactInt`] is a `num_bigint::BigInt`).

pub mod comparison;
pub mod error;
pub mod exact;
pub mod exec;
pub mod families;
pub mod lattice;
pub mod macaulay;
pub mod minors;
pub mod transforms;

pub use comparison::{
    compare, find_crossing, lower_bound_cs, ratio_chain, sandwich_simplicial, BoundsReport, ComparisonReport,
    CrossingWitness,
};
pub use error::{Error, Result};
pub use exact::{binom_det, binomial, det, ExactInt, IntMatrix};
pub use exec::Execution;
pub use families::{f_of_family, g_cs_stacked, g_cyclic, g_stacked, stanley_cs_floor, Family, FamilySpec};
pub use lattice::{
    count_disjoint_pairs, enumerate_paths, gv_identity_check, phi, verify_phi, LatticePath, PathFamilySpec, PathPair,
    PhiParams,
};
pub use macaulay::{del_k, is_M_sequence, is_m_sequence_upper, is_nonnegative, macaulay_expand};
pub use minors::{phi_minor, step1_ratio_equiv, verify_lemma3, verify_total_nonnegativity, MinorOrder, MinorReport};
pub use transforms::{
    build_md, f_to_g, f_to_h, g_to_f, g_to_h, h_to_f, h_to_g, is_dehn_sommerville, md, Dimension, FVector, GVector,
    HVector, MdMatrix,
};
