use num_traits::{One, Zero};

use super::{AlgebraError, Q};

/// A field of exact coefficients, passed around as a small handle object.
///
/// Elements do not know how to operate on themselves; arithmetic goes
/// through the handle. Handles are cheap to clone.
pub trait Field: Clone + std::fmt::Debug {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, AlgebraError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Embeds a rational number into the field.
    fn embed_rational(&self, q: &Q) -> Self::Elem;
    /// Complex conjugation; the identity on totally real fields.
    fn conj(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }
    /// Short tag used when serializing elements.
    fn name(&self) -> String;
    fn elem_string(&self, a: &Self::Elem) -> String;
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Q;

    fn zero(&self) -> Q {
        Q::zero()
    }
    fn one(&self) -> Q {
        Q::one()
    }
    fn add(&self, a: &Q, b: &Q) -> Q {
        a + b
    }
    fn sub(&self, a: &Q, b: &Q) -> Q {
        a - b
    }
    fn neg(&self, a: &Q) -> Q {
        -a
    }
    fn mul(&self, a: &Q, b: &Q) -> Q {
        a * b
    }
    fn inv(&self, a: &Q) -> Result<Q, AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn is_zero(&self, a: &Q) -> bool {
        a.is_zero()
    }
    fn embed_rational(&self, q: &Q) -> Q {
        q.clone()
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn elem_string(&self, a: &Q) -> String {
        a.to_string()
    }
}
