//! Exact computation of graded Betti numbers and Castelnuovo-Mumford
//! regularity for facet ideals of simplicial forests and t-path ideals of
//! rooted trees, together with machinery to verify the combinatorial closed
//! forms, orderings, and bounds those ideals satisfy.
//!
//! The crate is organized around an independent homological oracle
//! ([`koszul`]): Betti numbers are computed one lattice multidegree at a time
//! from upper Koszul strand homology with exact linear algebra, and every
//! closed form (perfect-tree formula, broom formula, power formulas, the
//! recursion, the bounds) is checked against it rather than against itself.
//!
//! Entry points:
//!
//! * [`monomial`] — exact monomial and monomial-ideal arithmetic;
//! * [`koszul`] — Betti tables, regularity, linear resolutions and quotients;
//! * [`complex`] — simplicial forests, good leaf orderings, the intersection
//!   property;
//! * [`rooted`] — rooted trees, path ideals, clean forms, regularity
//!   formulas and the exact recursion;
//! * [`powers`] — power generators in canonical order, equivalence and colon
//!   verification, power regularity formulas, conjecture slack scans;
//! * [`generate`] — deterministic instance families and seeded corpora;
//! * [`suites`] — the named verification suites behind `treereg verify`.
//!
//! The `examples/` directory shows one runnable program per capability; the
//! `treereg` binary wraps the suites and file-based analyses.

pub mod betti;
pub mod complex;
pub mod error;
pub mod generate;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod powers;
pub mod report;
pub mod rng;
pub mod rooted;
pub mod suites;

pub use betti::{BettiTable, FieldSpec};
pub use complex::{IntersectionStatus, SimplicialComplex};
pub use error::{Error, Result};
pub use koszul::{
    graded_betti, has_linear_first_syzygies, has_linear_quotients, has_linear_resolution,
    lcm_lattice, regularity_of_ideal, regularity_of_quotient, OracleConfig, StrandCache,
};
pub use monomial::{Monomial, MonomialIdeal};
pub use report::{Caps, OutputFormat, Report, RunConfig};
pub use rooted::{RootedForest, RootedTree};
