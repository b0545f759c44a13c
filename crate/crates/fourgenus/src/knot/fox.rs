//! Fox free differential calculus.

use num_bigint::BigInt;

use super::word::{GroupRingElement, GroupWord};
use crate::algebra::Matrix;

/// Fox derivative `dw/dx_j` in the free group ring.
///
/// Satisfies the axioms `d(uv) = du + u dv`, `d(x_j)/dx_j = 1` and
/// `d(x_j^{-1})/dx_j = -x_j^{-1}`.
pub fn fox_derivative(w: &GroupWord, j: usize) -> GroupRingElement {
    let mut acc = GroupRingElement::zero();
    let mut prefix = GroupWord::identity();
    for &(g, e) in &w.letters {
        if g == j {
            if e == 1 {
                acc = acc.add(&GroupRingElement::from_word(prefix.clone()));
            } else {
                let term = prefix.concat(&GroupWord::letter(g, -1));
                acc = acc.sub(&GroupRingElement::from_word(term));
            }
        }
        prefix = prefix.concat(&GroupWord::letter(g, e)).reduced();
    }
    acc
}

/// Jacobian of a list of words: entry `(i, j)` is `d(words[i]) / dx_j`.
pub fn fox_jacobian(words: &[GroupWord], generator_count: usize) -> Matrix<GroupRingElement> {
    Matrix::from_fn(words.len(), generator_count, |i, j| fox_derivative(&words[i], j))
}

/// The fundamental identity `sum_j dw/dx_j * (x_j - 1) = w - 1`, used as a
/// self-check on every presentation this crate emits.
pub fn fox_identity_holds(w: &GroupWord, generator_count: usize) -> bool {
    let mut lhs = GroupRingElement::zero();
    for j in 0..generator_count {
        let d = fox_derivative(w, j);
        let xj = GroupRingElement::from_word(GroupWord::generator(j));
        let diff = xj.sub(&GroupRingElement::one());
        lhs = lhs.add(&d.mul(&diff));
    }
    let rhs = GroupRingElement::from_word(w.clone()).sub(&GroupRingElement::one());
    lhs == rhs
}

/// Abelianization of a group-ring element to `Z` (every generator to 1);
/// useful for checking relations abelianize to zero.
pub fn augmentation(e: &GroupRingElement) -> BigInt {
    e.terms.iter().map(|(_, c)| c.clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::super::word::parse_word;
    use super::*;

    #[test]
    fn axioms_on_two_letter_words() {
        let w = parse_word("x1 x2").unwrap();
        assert_eq!(fox_derivative(&w, 0), GroupRingElement::one());
        assert_eq!(
            fox_derivative(&w, 1),
            GroupRingElement::from_word(parse_word("x1").unwrap())
        );
    }

    #[test]
    fn commutator_derivative() {
        // d([x1,x2])/dx1 = 1 - x1 x2 x1^{-1}
        let w = parse_word("x1 x2 X1 X2").unwrap();
        let expected = GroupRingElement::one()
            .sub(&GroupRingElement::from_word(parse_word("x1 x2 X1").unwrap()));
        assert_eq!(fox_derivative(&w, 0), expected);
        assert!(fox_identity_holds(&w, 2));
    }

    #[test]
    fn identity_on_random_shapes() {
        for word in ["x1 X2 x3 x3 X1", "X1 X1 x2", "x2 x2 x2 X1 x1"] {
            let w = parse_word(word).unwrap();
            assert!(fox_identity_holds(&w, 3), "failed on {word}");
        }
    }
}
