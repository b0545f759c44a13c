//! Alexander polynomials and the Arf invariant from Wirtinger presentations.

use num_bigint::BigInt;
use num_traits::Signed;

use super::fox::fox_jacobian;
use super::presentation::WirtingerPresentation;
use super::word::{GroupRingElement, GroupWord};
use super::KnotError;
use crate::algebra::{
    diagonalize_laurent, laurent_kernel, submodule_membership, LaurentPoly, Matrix, Rationals, Q,
};

type P = LaurentPoly<Rationals>;

/// Abelianizes a group-ring element by sending every generator to `t`.
pub fn abelianize_to_laurent(e: &GroupRingElement) -> P {
    let mut acc = P::zero(Rationals);
    for (w, c) in &e.terms {
        let term = P::monomial(Rationals, Q::from_integer(c.clone()), w.epsilon());
        acc = acc.add(&term);
    }
    acc
}

/// Abelianized Fox Jacobian of the presentation's relations.
pub fn abelianized_jacobian(pres: &WirtingerPresentation) -> Matrix<P> {
    let jac = fox_jacobian(&pres.relations, pres.generator_count);
    jac.map(abelianize_to_laurent)
}

/// The Alexander polynomial, normalized monic with minimal exponent 0.
///
/// Computed as the gcd of maximal minors of the abelianized Jacobian with
/// the meridian column deleted; by the Fitting-ideal description that gcd is
/// the product of the invariant factors of the deleted matrix, which is what
/// gets evaluated here.
pub fn alexander_polynomial(pres: &WirtingerPresentation) -> P {
    if pres.relations.is_empty() {
        return P::one(Rationals);
    }
    let jac = abelianized_jacobian(pres);
    let deleted = Matrix::from_fn(jac.rows, jac.cols - 1, |r, c| {
        let cc = if c >= pres.meridian { c + 1 } else { c };
        jac.at(r, cc).clone()
    });
    let res = diagonalize_laurent(&Rationals, &deleted);
    let mut acc = P::one(Rationals);
    for d in &res.diagonal {
        if d.is_zero() {
            return P::zero(Rationals);
        }
        acc = acc.mul(d);
    }
    acc.normalized()
}

/// The Alexander polynomial rescaled to a primitive integer polynomial with
/// positive leading coefficient (the form used for integral evaluations).
pub fn alexander_integral(pres: &WirtingerPresentation) -> P {
    alexander_polynomial(pres).integral_normalized()
}

/// Determinant-at-minus-one: `|Delta_K(-1)|`, the order of the double
/// branched cover homology.
pub fn determinant_abs(pres: &WirtingerPresentation) -> BigInt {
    let delta = alexander_integral(pres);
    let v = delta.eval(&Q::from_integer(BigInt::from(-1))).unwrap();
    v.to_integer().abs()
}

/// Arf invariant via the determinant criterion: 0 exactly when
/// `|Delta_K(-1)| = ±1 mod 8`.
pub fn arf(pres: &WirtingerPresentation) -> u8 {
    let d = determinant_abs(pres) % BigInt::from(8);
    if d == BigInt::from(1) || d == BigInt::from(7) {
        0
    } else {
        1
    }
}

/// Whether a null-homologous word's class vanishes in the rational Alexander
/// module of the knot group. A necessary condition for membership in the
/// second derived subgroup; also run on every longitude as an internal
/// consistency check.
pub fn rational_alexander_class_vanishes(
    pres: &WirtingerPresentation,
    w: &GroupWord,
) -> Result<bool, KnotError> {
    if w.epsilon() != 0 {
        return Err(KnotError::LongitudeEpsilon(w.epsilon()));
    }
    if pres.generator_count == 1 {
        return Ok(true);
    }
    let jac = abelianized_jacobian(pres);
    // boundary to the 0-skeleton: every generator maps to t - 1
    let tm1 = P::from_rationals(Rationals, &[-Q::from_integer(1.into()), Q::from_integer(1.into())]);
    let b1 = Matrix::from_fn(pres.generator_count, 1, |_, _| tm1.clone());
    let kernel = laurent_kernel(&Rationals, &b1.transpose());
    // rows of the Jacobian and the word's Fox vector, expressed in the kernel
    let fox_row = |word: &GroupWord| -> Vec<P> {
        (0..pres.generator_count)
            .map(|j| abelianize_to_laurent(&super::fox::fox_derivative(word, j)))
            .collect()
    };
    let v = kernel
        .express(&fox_row(w))
        .expect("null-homologous word must lie in the cycle module");
    let mut cols = vec![];
    for r in 0..jac.rows {
        let row: Vec<P> = (0..jac.cols).map(|c| jac.at(r, c).clone()).collect();
        let coords = kernel
            .express(&row)
            .expect("relation rows are cycles");
        cols.push(coords);
    }
    let m = Matrix::from_fn(v.len(), cols.len(), |r, c| cols[c][r].clone());
    Ok(submodule_membership(&Rationals, &m, &v))
}

#[cfg(test)]
mod tests {
    use super::super::diagram::{trefoil_left, unknot};
    use super::super::presentation::{connected_sum, wirtinger};
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn unknot_polynomial_is_one() {
        let p = wirtinger(&unknot());
        assert_eq!(alexander_polynomial(&p), P::one(Rationals));
        assert_eq!(arf(&p), 0);
    }

    #[test]
    fn trefoil_polynomial() {
        let p = wirtinger(&trefoil_left());
        let delta = alexander_integral(&p);
        assert_eq!(delta, P::from_rationals(Rationals, &[q(1), q(-1), q(1)]));
        assert_eq!(determinant_abs(&p), BigInt::from(3));
        assert_eq!(arf(&p), 1);
    }

    #[test]
    fn alexander_at_one_is_a_unit() {
        let p = wirtinger(&trefoil_left());
        let delta = alexander_integral(&p);
        let v = delta.eval(&q(1)).unwrap();
        assert_eq!(v.to_integer().abs(), BigInt::from(1));
    }

    #[test]
    fn gcd_of_explicit_minors_matches() {
        // independent check of the Fitting-ideal shortcut on the trefoil
        let p = wirtinger(&trefoil_left());
        let jac = abelianized_jacobian(&p);
        let deleted = Matrix::from_fn(jac.rows, jac.cols - 1, |r, c| {
            let cc = if c >= p.meridian { c + 1 } else { c };
            jac.at(r, cc).clone()
        });
        // all 2x2 minors obtained by dropping one row
        let mut g = P::zero(Rationals);
        for drop in 0..deleted.rows {
            let rows: Vec<usize> = (0..deleted.rows).filter(|&r| r != drop).collect();
            let a = deleted.at(rows[0], 0).clone();
            let b = deleted.at(rows[0], 1).clone();
            let c = deleted.at(rows[1], 0).clone();
            let d = deleted.at(rows[1], 1).clone();
            let minor = a.mul(&d).sub(&b.mul(&c));
            g = g.gcd(&minor);
        }
        assert!(g.eq_up_to_unit(&alexander_polynomial(&p)));
    }

    #[test]
    fn connected_sum_multiplies_polynomials() {
        let p = wirtinger(&trefoil_left());
        let s = connected_sum(&[p.clone(), p.clone()]).unwrap();
        let delta = alexander_integral(&s);
        let tre = alexander_integral(&p);
        assert!(delta.eq_up_to_unit(&tre.mul(&tre)));
        assert_eq!(arf(&s), 0); // 9 = 1 mod 8
    }

    #[test]
    fn longitude_class_vanishes_for_trefoil() {
        let p = wirtinger(&trefoil_left());
        assert_eq!(p.longitude.epsilon(), 0);
        assert!(rational_alexander_class_vanishes(&p, &p.longitude).unwrap());
    }

    #[test]
    fn meridian_commutator_class_does_not_vanish() {
        // a generic weight-zero word is nonzero in the Alexander module
        let p = wirtinger(&trefoil_left());
        let w = GroupWord::generator(0).concat(&GroupWord::letter(1, -1));
        assert!(!rational_alexander_class_vanishes(&p, &w).unwrap());
    }
}
