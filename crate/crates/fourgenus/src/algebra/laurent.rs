//! Laurent polynomials over an exact coefficient field.
//!
//! A value is stored as `t^shift * (c_0 + c_1 t + ... + c_d t^d)` with
//! `c_0 != 0` and `c_d != 0` (the zero polynomial has an empty coefficient
//! vector and shift 0). Units of `F[t^{±1}]` are exactly `c * t^k`, so two
//! polynomials are "equal up to units" when they agree after normalizing to
//! a monic polynomial part with minimal exponent 0.

use super::field::Field;
use super::{AlgebraError, Q};

#[derive(Clone)]
pub struct LaurentPoly<F: Field> {
    field: F,
    shift: i64,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> std::fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl<F: Field> PartialEq for LaurentPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.shift == other.shift && self.coeffs == other.coeffs
    }
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(field: F) -> Self {
        LaurentPoly { field, shift: 0, coeffs: vec![] }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::monomial(field, c, 0)
    }

    pub fn one(field: F) -> Self {
        let c = field.one();
        Self::constant(field, c)
    }

    pub fn monomial(field: F, c: F::Elem, exp: i64) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field);
        }
        LaurentPoly { field, shift: exp, coeffs: vec![c] }
    }

    pub fn variable(field: F) -> Self {
        let one = field.one();
        Self::monomial(field, one, 1)
    }

    /// Builds from coefficients `coeffs[k]` of `t^{shift+k}`, trimming zeros.
    pub fn from_coeffs(field: F, shift: i64, coeffs: Vec<F::Elem>) -> Self {
        let mut p = LaurentPoly { field, shift, coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from rational coefficients of `t^0, t^1, ...`.
    pub fn from_rationals(field: F, coeffs: &[Q]) -> Self {
        let elems = coeffs.iter().map(|q| field.embed_rational(q)).collect();
        Self::from_coeffs(field, 0, elems)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    fn trim(&mut self) {
        while self
            .coeffs
            .last()
            .map(|c| self.field.is_zero(c))
            .unwrap_or(false)
        {
            self.coeffs.pop();
        }
        let leading_zeros = self
            .coeffs
            .iter()
            .take_while(|c| self.field.is_zero(c))
            .count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.shift += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.shift = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `true` for `c * t^k`, `c != 0`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn min_exp(&self) -> i64 {
        self.shift
    }

    pub fn max_exp(&self) -> i64 {
        self.shift + self.coeffs.len() as i64 - 1
    }

    /// Degree of the polynomial part, i.e. the exponent span; `None` for zero.
    pub fn poly_degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, exp: i64) -> F::Elem {
        let idx = exp - self.shift;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            self.field.zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Coefficients of the polynomial part, lowest exponent first.
    pub fn poly_coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<F::Elem> {
        self.coeffs.last().cloned()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(other.shift);
        let hi = self.max_exp().max(other.max_exp());
        let mut coeffs = Vec::with_capacity((hi - lo + 1) as usize);
        for e in lo..=hi {
            coeffs.push(self.field.add(&self.coeff(e), &other.coeff(e)));
        }
        Self::from_coeffs(self.field.clone(), lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            field: self.field.clone(),
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if self.field.is_zero(b) {
                    continue;
                }
                let t = self.field.mul(a, b);
                coeffs[i + j] = self.field.add(&coeffs[i + j], &t);
            }
        }
        Self::from_coeffs(self.field.clone(), self.shift + other.shift, coeffs)
    }

    pub fn mul_scalar(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone());
        }
        LaurentPoly {
            field: self.field.clone(),
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|a| self.field.mul(a, c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &F::Elem, k: i64) -> Self {
        let mut p = self.mul_scalar(c);
        if !p.is_zero() {
            p.shift += k;
        }
        p
    }

    /// Evaluation at a nonzero field element (negative exponents need `x^{-1}`).
    pub fn eval(&self, x: &F::Elem) -> Result<F::Elem, AlgebraError> {
        if self.is_zero() {
            return Ok(self.field.zero());
        }
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.mul(&acc, x);
            acc = self.field.add(&acc, c);
        }
        // multiply by x^shift
        if self.shift > 0 {
            for _ in 0..self.shift {
                acc = self.field.mul(&acc, x);
            }
        } else if self.shift < 0 {
            let xi = self.field.inv(x)?;
            for _ in 0..(-self.shift) {
                acc = self.field.mul(&acc, &xi);
            }
        }
        Ok(acc)
    }

    /// Formal derivative (of the honest Laurent polynomial).
    pub fn derivative(&self) -> Self {
        let mut coeffs = vec![];
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.shift + k as i64;
            let factor = self.field.embed_rational(&Q::from_integer(e.into()));
            coeffs.push(self.field.mul(c, &factor));
        }
        Self::from_coeffs(self.field.clone(), self.shift - 1, coeffs)
    }

    /// Canonical representative up to units: monic with minimal exponent 0.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading_coeff().unwrap();
        let inv = self.field.inv(&lead).expect("nonzero leading coefficient");
        let mut p = self.mul_scalar(&inv);
        p.shift = 0;
        p
    }

    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Division with remainder on polynomial parts:
    /// `self = q * d + r`, where `r = 0` or the span of `r` is strictly less
    /// than the span of `d`. The remainder keeps `self`'s unit shift.
    pub fn divmod(&self, d: &Self) -> Result<(Self, Self), AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Self::zero(self.field.clone()), Self::zero(self.field.clone())));
        }
        let f = &self.field;
        let dn = d.coeffs.len();
        let lead_inv = f.inv(d.coeffs.last().unwrap())?;
        let mut rem: Vec<F::Elem> = self.coeffs.clone();
        let mut quot: Vec<F::Elem> = vec![f.zero(); rem.len().saturating_sub(dn) + 1];
        while rem.len() >= dn && !rem.is_empty() {
            let k = rem.len() - dn;
            let c = f.mul(rem.last().unwrap(), &lead_inv);
            quot[k] = f.add(&quot[k], &c);
            for i in 0..dn {
                let t = f.mul(&d.coeffs[i], &c);
                rem[k + i] = f.sub(&rem[k + i], &t);
            }
            while rem.last().map(|c| f.is_zero(c)).unwrap_or(false) {
                rem.pop();
            }
            if rem.len() < dn {
                break;
            }
        }
        let q = Self::from_coeffs(f.clone(), self.shift - d.shift, quot);
        let r = Self::from_coeffs(f.clone(), self.shift, rem);
        Ok((q, r))
    }

    /// `true` when `self` divides `other` in `F[t^{±1}]`.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        if other.is_zero() {
            return true;
        }
        let (_, r) = other.divmod(self).expect("nonzero divisor");
        r.is_zero()
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.normalized()
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = vec![];
        for (k, c) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            let e = self.shift + k as i64;
            let cs = self.field.elem_string(c);
            let cs = if cs.contains('+') || cs.contains(' ') {
                format!("({})", cs)
            } else {
                cs
            };
            let term = match e {
                0 => cs,
                1 => format!("{}*t", cs),
                _ => format!("{}*t^{}", cs, e),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

impl LaurentPoly<super::field::Rationals> {
    /// Rescales a rational Laurent polynomial to a primitive integer
    /// polynomial with positive leading coefficient and minimal exponent 0.
    pub fn integral_normalized(&self) -> Self {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let lead_negative = ints.last().map(|v| v.is_negative()).unwrap_or(false);
        if lead_negative {
            content = -content;
        }
        let coeffs = ints
            .into_iter()
            .map(|v| Q::from_integer(v / content.clone()))
            .collect();
        Self::from_coeffs(super::field::Rationals, 0, coeffs)
    }
}

/// Resultant of the polynomial parts of `f` and `g`, computed as the
/// Sylvester determinant over the coefficient field. Nonzero exactly when
/// `f` and `g` share no root in any extension field.
pub fn resultant<F: Field>(
    field: &F,
    f: &LaurentPoly<F>,
    g: &LaurentPoly<F>,
) -> Result<F::Elem, AlgebraError> {
    if f.is_zero() && g.is_zero() {
        return Err(AlgebraError::BothZero);
    }
    if f.is_zero() {
        // shared roots iff g is nonconstant
        return Ok(if g.poly_degree() == Some(0) { field.one() } else { field.zero() });
    }
    if g.is_zero() {
        return Ok(if f.poly_degree() == Some(0) { field.one() } else { field.zero() });
    }
    let m = f.poly_degree().unwrap();
    let n = g.poly_degree().unwrap();
    if m == 0 && n == 0 {
        return Ok(field.one());
    }
    if m == 0 {
        // res(c, g) = c^deg(g)
        let c = f.poly_coeffs()[0].clone();
        let mut acc = field.one();
        for _ in 0..n {
            acc = field.mul(&acc, &c);
        }
        return Ok(acc);
    }
    if n == 0 {
        let c = g.poly_coeffs()[0].clone();
        let mut acc = field.one();
        for _ in 0..m {
            acc = field.mul(&acc, &c);
        }
        return Ok(acc);
    }
    // Sylvester matrix, rows list coefficients highest degree first.
    let size = m + n;
    let mut s = vec![vec![field.zero(); size]; size];
    let fc = f.poly_coeffs();
    let gc = g.poly_coeffs();
    for row in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            s[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            s[n + row][row + k] = c.clone();
        }
    }
    // Gaussian elimination determinant.
    let mut det = field.one();
    for col in 0..size {
        let pivot = (col..size).find(|&r| !field.is_zero(&s[r][col]));
        let pivot = match pivot {
            Some(p) => p,
            None => return Ok(field.zero()),
        };
        if pivot != col {
            s.swap(pivot, col);
            det = field.neg(&det);
        }
        let p = s[col][col].clone();
        det = field.mul(&det, &p);
        let pinv = field.inv(&p)?;
        for r in col + 1..size {
            if field.is_zero(&s[r][col]) {
                continue;
            }
            let factor = field.mul(&s[r][col], &pinv);
            for c in col..size {
                let t = field.mul(&s[col][c], &factor);
                s[r][c] = field.sub(&s[r][c], &t);
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::super::field::Rationals;
    use super::*;
    use num_traits::Zero;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn poly(coeffs: &[i64]) -> LaurentPoly<Rationals> {
        LaurentPoly::from_coeffs(Rationals, 0, coeffs.iter().map(|&n| q(n)).collect())
    }

    #[test]
    fn normalization_makes_monic_min_exp_zero() {
        // 3t^2 - 9t + 3, shifted by t^5
        let p = poly(&[3, -9, 3]).mul_monomial(&q(1), 5);
        let n = p.normalized();
        assert_eq!(n, poly(&[1, -3, 1]));
        assert!(p.eq_up_to_unit(&poly(&[1, -3, 1])));
    }

    #[test]
    fn divmod_roundtrip() {
        let a = poly(&[2, 0, -3, 1]); // t^3 - 3t^2 + 2
        let b = poly(&[-1, 1]); // t - 1
        let (quot, rem) = a.divmod(&b).unwrap();
        assert_eq!(quot.mul(&b).add(&rem), a);
        assert!(rem.is_zero()); // t = 1 is a root
    }

    #[test]
    fn gcd_detects_common_factor() {
        let a = poly(&[-1, 1]).mul(&poly(&[1, 1]));
        let b = poly(&[-1, 1]).mul(&poly(&[2, 1]));
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
    }

    #[test]
    fn resultant_small_cases() {
        // res(t-1, t+1) = 2
        let r = resultant(&Rationals, &poly(&[-1, 1]), &poly(&[1, 1])).unwrap();
        assert_eq!(r, q(2));
        // shared root gives zero
        let sq = poly(&[-1, 1]).mul(&poly(&[-1, 1]));
        let r = resultant(&Rationals, &poly(&[-1, 1]), &sq).unwrap();
        assert!(r.is_zero());
        // relatively prime paper pair: t^2-3t+1 vs 2-6t+9t^2-6t^3+2t^4
        let f = poly(&[1, -3, 1]);
        let g = poly(&[2, -6, 9, -6, 2]);
        let r = resultant(&Rationals, &f, &g).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn integral_normalization() {
        let p = LaurentPoly::from_coeffs(
            Rationals,
            -2,
            vec![q(4) / q(6), q(-2), q(8) / q(3)],
        );
        let n = p.integral_normalized();
        assert_eq!(n, poly(&[1, -3, 4]));
    }

    #[test]
    fn eval_with_negative_exponents() {
        let p = LaurentPoly::from_coeffs(Rationals, -1, vec![q(1), q(1)]); // t^{-1} + 1
        assert_eq!(p.eval(&q(2)).unwrap(), q(3) / q(2));
    }
}
