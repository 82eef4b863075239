//! Explicit finite groups over F_q: PGL_2 / PSL_2 models, subgroup lattices,
//! abelian-subgroup search, and subgroup classification.

pub(crate) mod bitset;
pub mod classify;
pub mod finite;
pub mod pgl;
pub mod subgroups;

pub use classify::{
    alternating_group, automorphisms, classify_pgl2_subgroup, find_isomorphism, symmetric_group,
    ClassificationWitness, ExceptionalName, SubgroupClassification, SubgroupKind,
};
pub use finite::{group_from_elements, FiniteGroup};
pub use pgl::{gl_order, pgl2, pgl2_order, psl2, psl2_order, MatGroup, ProjectiveMatrix};
pub use subgroups::{
    enumerate_subgroups, is_abelian_subset, is_normal_within,
    lattice_min_normal_abelian_indices, max_abelian_order, min_normal_abelian_index, LatticeScan,
};
