//! Exact computation of knot concordance invariants built on metabelian
//! twisted homology of zero-surgery manifolds.
//!
//! The crate ingests knot diagrams as PD codes, derives Wirtinger
//! presentations, and computes (all in exact arithmetic):
//!
//! * classical invariants: Alexander polynomials, Arf invariants, first
//!   homology of double branched covers;
//! * metabelian representations into `GL2(Q(xi)[t^{±1}])` attached to
//!   characters on the double branched cover, and the twisted first
//!   homology of the zero-surgery as a module over the cyclotomic Laurent
//!   ring;
//! * Tristram-Levine signature step functions and the integral invariant
//!   `rho0` from Seifert matrices;
//! * construction certificates: machine-checkable transcripts showing that a
//!   planned connected sum of satellite knots meets every hypothesis and
//!   inequality of the satellite 4-genus criterion, concluding
//!   `g4(K) >= g+1`.
//!
//! Every public example in `examples/` exercises one capability end to end;
//! the `fourgenus` binary exposes the same operations as subcommands.

pub mod algebra;
pub mod catalog;
pub mod covers;
pub mod knot;
pub mod metabelian;
pub mod planner;
pub mod report;
pub mod signatures;

pub use algebra::{AlgebraError, CycloField, CyclotomicNumber, LaurentPoly, Matrix, Rationals};
pub use catalog::{Catalog, CatalogEntry};
pub use covers::{BranchedCoverHomology, Character, DoubleCoverPresentation};
pub use knot::{GroupWord, KnotDiagram, WirtingerPresentation};
pub use metabelian::{MetabelianRep, TwistedChainData, TwistedCycle, TwistedModule};
pub use planner::{ConstructionCertificate, ConstructionPlan, SeedData};
pub use signatures::{RhoZero, SeifertMatrix, SignatureFunction};

/// Crate-wide error type aggregating the per-subsystem errors.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] algebra::AlgebraError),
    #[error(transparent)]
    Knot(#[from] knot::KnotError),
    #[error(transparent)]
    Cover(#[from] covers::CoverError),
    #[error(transparent)]
    Metabelian(#[from] metabelian::MetabelianError),
    #[error(transparent)]
    Signature(#[from] signatures::SignatureError),
    #[error(transparent)]
    Planner(#[from] planner::PlannerError),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
}

pub type Result<T> = std::result::Result<T, Error>;
