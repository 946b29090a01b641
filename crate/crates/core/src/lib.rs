//! Ideals of finite rings and of direct products.
//!
//! - [`ring`], [`catalog`], [`product`]: finite rings from Cayley tables,
//!   the builtin rings, and direct products with pair encoding.
//! - [`ideal`], [`lattice`]: closure, enumeration, and the ideal lattice
//!   with its distributivity and modularity checks.
//! - [`decomp`]: decomposable versus skew ideals of `R1 × R2`.
//! - [`malcev`]: search for a unary term `t` with `x·t(x) = x`.
//! - [`zz`]: principal ideals of `cZ × dZ` with exact integers.

pub mod bitset;
pub mod catalog;
pub mod decomp;
pub mod error;
pub mod ideal;
pub mod lattice;
pub mod malcev;
pub mod product;
pub mod ring;
pub mod zz;

pub use bitset::ElementSet;
pub use catalog::{builtin_ring, CATALOG};
pub use decomp::{
    check_distributivity_corollary, decompose, is_directly_decomposable, project, skew_ideals,
    theorem1_profile, DecompositionResult, Theorem1Profile,
};
pub use error::{IdealError, MalcevError, RingError, ZzError};
pub use ideal::{all_ideals, ideal_closure, ideal_intersection, ideal_sum, is_ideal, Ideal, DEFAULT_IDEAL_CAP};
pub use lattice::{is_distributive, is_modular, lattice_of_ideals, IdealLattice};
pub use malcev::{
    additive_exponent, eval_poly, find_malcev, satisfies_malcev, MalcevSearchOutcome, UnaryPolynomial,
    DEFAULT_SEARCH_CAP,
};
pub use product::{direct_product, ProductRing, Side};
pub use ring::{verify_axioms, AxiomReport, FiniteRing, RingSpec};
pub use zz::{theorem3_predicate, theorem3_sweep, xgcd, BezoutCertificate, ZZPrincipalIdeal};
