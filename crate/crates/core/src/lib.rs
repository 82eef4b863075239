//! jordanlab: an exact-arithmetic workbench for Jordan-type bounds on
//! birational automorphism groups over finite fields.
//!
//! The crate has three layers:
//!
//! - exact algebra: prime-power fields F_q, the ring F_q\[t\], big-integer
//!   utilities ([`algebra`]);
//! - explicit finite groups: PGL_2/PSL_2 over F_q and the unitriangular
//!   witness family over truncated polynomial entries, with centers,
//!   centralizers, subgroup lattices, and subgroup classification
//!   ([`group`], [`heisenberg`]);
//! - calculators and verifiers: every named constant (conic-bundle and
//!   del Pezzo Jordan bounds, Hasse-Weil intervals, curve automorphism
//!   bounds, p'-boundedness constants) evaluated exactly, plus desk-scale
//!   suites that certify the group-theoretic claims behind them by
//!   exhaustive search ([`bounds`], [`verifier`]).
//!
//! No floating point is used anywhere: square roots enter only through
//! integer `isqrt`, and every report records its rounding convention.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod bounds;
pub mod error;
pub mod group;
pub mod guard;
pub mod heisenberg;
pub mod verifier;

pub use algebra::{element_order, enumerate_polys, isqrt, poly_gcd, FieldElement, FieldSpec, Poly};
pub use error::{Error, Result};
pub use group::{
    classify_pgl2_subgroup, enumerate_subgroups, gl_order, max_abelian_order,
    min_normal_abelian_index, pgl2, pgl2_order, psl2, FiniteGroup, MatGroup, ProjectiveMatrix,
    SubgroupClassification, SubgroupKind,
};
pub use guard::Guard;
pub use heisenberg::{HeisenbergElement, HeisenbergParams};
pub use verifier::{run_all, Mutation, Status, Verdict, VerifyConfig};
