//! Knot diagrams, Wirtinger presentations, Fox calculus and the classical
//! invariants derived from them.

mod alexander;
mod builders;
mod diagram;
mod fox;
mod presentation;
mod word;

pub use alexander::{
    abelianize_to_laurent, abelianized_jacobian, alexander_integral, alexander_polynomial, arf,
    determinant_abs, rational_alexander_class_vanishes,
};
pub use builders::{continued_fraction, pretzel_diagram, rational_knot_diagram};
pub use diagram::{mirror, parse_pd, trefoil_left, unknot, KnotDiagram};
pub use fox::{augmentation, fox_derivative, fox_identity_holds, fox_jacobian};
pub use presentation::{connected_sum, longitude_word, wirtinger, WirtingerPresentation};
pub use word::{parse_word, word_string, GroupRingElement, GroupWord};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum KnotError {
    #[error("PD tuple `{0}` does not have four entries")]
    TupleArity(String),
    #[error("unexpected token `{0}` in PD code")]
    BadToken(String),
    #[error("unknown sign token `{0}`")]
    SignToken(String),
    #[error("arc label {0} appears {1} times, expected exactly 2")]
    LabelCount(usize, usize),
    #[error("arc labels must be 1..=2n; found {0}")]
    LabelRange(usize),
    #[error("crossing {0}: under-strand labels are not consecutive along the knot")]
    UnderChain(usize),
    #[error("crossing {0}: over-strand labels are not consecutive along the knot")]
    OverChain(usize),
    #[error("crossing {0}: recorded sign contradicts the arc labelling")]
    SignInconsistent(usize),
    #[error("diagram traversal does not close up into a single component")]
    NotAKnot,
    #[error("longitude has exponent sum {0}, expected 0")]
    LongitudeEpsilon(i64),
    #[error("longitude does not vanish in the rational Alexander module")]
    LongitudeNotNull,
    #[error("connected sum of an empty list of presentations")]
    EmptySum,
    #[error("bad word token `{0}` (expected x<k> or X<k>)")]
    WordToken(String),
    #[error("generator index {0} out of range (presentation has {1} generators)")]
    GeneratorRange(usize, usize),
}
