//! Exact class computations for two-pointed Prym–Brill–Noether loci.
//!
//! The pipeline runs from a pair of vanishing sequences to a type D
//! rank-condition triple ([`sequences`]), its vexillary signed permutation
//! ([`signedperm`]), the Pfaffian class formula in connective K-theory
//! ([`lociclass`], over the polynomial ring in [`ring`]), and the point
//! count cross-checked against shifted tableaux ([`tableaux`]).

pub mod error;
pub mod lociclass;
pub mod ring;
pub mod sequences;
pub mod signedperm;
pub mod tableaux;

pub use error::{Error, Result};
pub use lociclass::{
    ck_class, cohomology_class_via_pfaffian, cohomology_coefficient, compute_class, degree,
    degree_via_syt, entry_m, entry_m0, ClassResult, PfaffianOptions,
};
pub use ring::{format_rational, pfaffian, BetaMode, GradedPolynomial, Rational};
pub use sequences::{
    build_triple, build_triple_with, collide, expected_dim, is_nonempty, partition_of,
    validate_pair, StrictPartition, TieBreak, Triple, ValidationReport, VanishingPair,
};
pub use signedperm::{
    bruhat_leq, enumerate_wn_plus, length_d, minimal_vexillary, rank, satisfies_triple, RankQuery,
    SignedPermutation,
};
pub use tableaux::{
    count_syt_enum, count_syt_formula, enumerate_syt, ShiftedShape, ShiftedTableau,
};
