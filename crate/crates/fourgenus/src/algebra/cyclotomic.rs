//! Exact arithmetic in cyclotomic fields `Q(xi_n)`, `xi_n = e^{2 pi i/n}`.
//!
//! Elements are stored in the power basis `1, xi, ..., xi^{phi(n)-1}` modulo
//! the n-th cyclotomic polynomial. Inversion runs the extended Euclidean
//! algorithm on polynomial representatives; conjugation sends
//! `xi -> xi^{-1} = xi^{n-1}`.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::field::Field;
use super::{AlgebraError, Q};

/// An element of `Q(xi_n)` in the power basis, tagged with its conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    pub conductor: u64,
    /// Length `phi(n)`; coefficient of `xi^k` at index `k`.
    pub coeffs: Vec<Q>,
}

#[derive(Debug)]
struct Inner {
    conductor: u64,
    degree: usize,
    /// Monic cyclotomic polynomial `Phi_n`, coefficients of degrees `0..=degree`.
    modulus: Vec<Q>,
}

/// Handle for a fixed cyclotomic field; cheap to clone.
#[derive(Debug, Clone)]
pub struct CycloField {
    inner: Arc<Inner>,
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer-coefficient cyclotomic polynomial via `Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d`.
fn cyclotomic_poly(n: u64) -> Vec<Q> {
    if n == 1 {
        return vec![-Q::one(), Q::one()];
    }
    // x^n - 1
    let mut num = vec![Q::zero(); n as usize + 1];
    num[0] = -Q::one();
    num[n as usize] = Q::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of polynomials with rational coefficients; panics if not exact.
fn poly_div_exact(num: &[Q], den: &[Q]) -> Vec<Q> {
    let mut rem: Vec<Q> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    assert!(!lead.is_zero());
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![Q::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = &rem[k + dd] / &lead;
        if !c.is_zero() {
            for i in 0..=dd {
                let t = &den[i] * &c;
                rem[k + i] -= t;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

impl CycloField {
    /// The field `Q(xi_n)` for any conductor `n >= 1`.
    pub fn new(conductor: u64) -> Result<Self, AlgebraError> {
        if conductor == 0 {
            return Err(AlgebraError::BadConductor);
        }
        let degree = euler_phi(conductor) as usize;
        let modulus = cyclotomic_poly(conductor);
        debug_assert_eq!(modulus.len(), degree + 1);
        Ok(CycloField {
            inner: Arc::new(Inner { conductor, degree, modulus }),
        })
    }

    /// The field `Q(xi_{p^a})`; validates that the conductor is a prime power.
    pub fn prime_power(p: u64, a: u32) -> Result<Self, AlgebraError> {
        if !is_prime(p) || a == 0 {
            return Err(AlgebraError::BadConductor);
        }
        Self::new(p.pow(a))
    }

    pub fn conductor(&self) -> u64 {
        self.inner.conductor
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    fn check(&self, x: &CyclotomicNumber) -> Result<(), AlgebraError> {
        if x.conductor != self.conductor() {
            return Err(AlgebraError::ConductorMismatch {
                expected: self.conductor(),
                found: x.conductor,
            });
        }
        if x.coeffs.len() != self.degree() {
            return Err(AlgebraError::DegreeMismatch {
                expected: self.degree(),
                found: x.coeffs.len(),
            });
        }
        Ok(())
    }

    fn make(&self, mut coeffs: Vec<Q>) -> CyclotomicNumber {
        self.reduce(&mut coeffs);
        CyclotomicNumber { conductor: self.conductor(), coeffs }
    }

    /// Reduces an arbitrary-degree coefficient vector modulo `Phi_n` and pads
    /// to length `phi(n)`.
    fn reduce(&self, coeffs: &mut Vec<Q>) {
        let deg = self.degree();
        let modulus = &self.inner.modulus;
        while coeffs.len() > deg {
            let k = coeffs.len() - 1;
            let c = coeffs.pop().unwrap();
            if !c.is_zero() {
                // x^k = x^{k-deg} * (x^deg) = x^{k-deg} * (x^deg - Phi_n)
                for i in 0..deg {
                    let t = &modulus[i] * &c;
                    coeffs[k - deg + i] -= t;
                }
            }
        }
        coeffs.resize(deg, Q::zero());
    }

    /// The root of unity power `xi^k` (any integer `k`).
    pub fn root_power(&self, k: i64) -> CyclotomicNumber {
        let n = self.conductor() as i64;
        let k = k.rem_euclid(n) as usize;
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = Q::one();
        self.make(coeffs)
    }

    pub fn from_q(&self, q: Q) -> CyclotomicNumber {
        let mut coeffs = vec![Q::zero(); self.degree().max(1)];
        coeffs[0] = q;
        coeffs.truncate(self.degree());
        CyclotomicNumber { conductor: self.conductor(), coeffs }
    }

    /// Rational part if the element lies in `Q`, else `None`.
    pub fn as_rational(&self, x: &CyclotomicNumber) -> Option<Q> {
        if x.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(x.coeffs.first().cloned().unwrap_or_else(Q::zero))
        } else {
            None
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial extended gcd over `Q[x]` on dense coefficient vectors:
/// returns `(g, u)` with `u*a = g mod m` and `g = gcd(a, m)` monic.
fn ext_gcd_mod(a: &[Q], m: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let trim = |v: &mut Vec<Q>| {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    let mut r0: Vec<Q> = m.to_vec();
    let mut r1: Vec<Q> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut u0: Vec<Q> = vec![];
    let mut u1: Vec<Q> = vec![Q::one()];
    while !r1.is_empty() {
        // r0 = q*r1 + r2
        let mut rem = r0.clone();
        let mut q = vec![Q::zero(); rem.len().saturating_sub(r1.len()) + 1];
        let lead = r1.last().unwrap().clone();
        while rem.len() >= r1.len() && !rem.is_empty() {
            let k = rem.len() - r1.len();
            let c = rem.last().unwrap() / &lead;
            q[k] = c.clone();
            for i in 0..r1.len() {
                let t = &r1[i] * &c;
                rem[k + i] -= t;
            }
            trim(&mut rem);
            if rem.len() < r1.len() {
                break;
            }
        }
        // u2 = u0 - q*u1
        let mut u2 = u0.clone();
        u2.resize(u2.len().max(q.len() + u1.len()), Q::zero());
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, uj) in u1.iter().enumerate() {
                let t = qi * uj;
                u2[i + j] -= t;
            }
        }
        trim(&mut u2);
        r0 = std::mem::take(&mut r1);
        r1 = rem;
        u0 = std::mem::take(&mut u1);
        u1 = u2;
    }
    // normalize gcd monic
    let lead = r0.last().cloned().unwrap_or_else(Q::one);
    if !lead.is_one() {
        for c in r0.iter_mut() {
            *c /= lead.clone();
        }
        for c in u0.iter_mut() {
            *c /= lead.clone();
        }
    }
    (r0, u0)
}

impl Field for CycloField {
    type Elem = CyclotomicNumber;

    fn zero(&self) -> CyclotomicNumber {
        self.from_q(Q::zero())
    }
    fn one(&self) -> CyclotomicNumber {
        self.from_q(Q::one())
    }
    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a).expect("conductor mismatch");
        self.check(b).expect("conductor mismatch");
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        CyclotomicNumber { conductor: self.conductor(), coeffs }
    }
    fn sub(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a).expect("conductor mismatch");
        self.check(b).expect("conductor mismatch");
        let mut prod = vec![Q::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                prod[i + j] += t;
            }
        }
        self.make(prod)
    }
    fn inv(&self, a: &CyclotomicNumber) -> Result<CyclotomicNumber, AlgebraError> {
        self.check(a)?;
        if self.is_zero(a) {
            return Err(AlgebraError::DivisionByZero);
        }
        let (g, u) = ext_gcd_mod(&a.coeffs, &self.inner.modulus);
        // Phi_n is irreducible over Q, so the gcd with any nonzero element is 1.
        debug_assert_eq!(g.len(), 1);
        let g0 = g.first().cloned().unwrap_or_else(Q::one);
        let mut coeffs: Vec<Q> = u.iter().map(|c| c / &g0).collect();
        coeffs.resize(self.degree(), Q::zero());
        Ok(self.make(coeffs))
    }
    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        a.coeffs.iter().all(|c| c.is_zero())
    }
    fn embed_rational(&self, q: &Q) -> CyclotomicNumber {
        self.from_q(q.clone())
    }
    fn conj(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        // xi -> xi^{n-1}
        let n = self.conductor();
        let mut acc = vec![Q::zero(); 1];
        let mut out = vec![Q::zero(); self.degree().max(1)];
        acc[0] = Q::one();
        // Horner-free: sum coeff_k * xi^{k(n-1)}
        for (k, c) in a.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let p = self.root_power((k as i64) * ((n as i64) - 1));
                for (i, pc) in p.coeffs.iter().enumerate() {
                    out[i] += pc * c;
                }
            }
        }
        let _ = acc;
        self.make(out)
    }
    fn name(&self) -> String {
        format!("Q(zeta{})", self.conductor())
    }
    fn elem_string(&self, a: &CyclotomicNumber) -> String {
        let mut parts = vec![];
        for (k, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if k == 0 {
                c.to_string()
            } else if k == 1 {
                format!("{}*z", c)
            } else {
                format!("{}*z^{}", c, k)
            };
            parts.push(term);
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_of_prime_powers() {
        assert_eq!(cyclotomic_poly(5).len(), 5); // 1+x+x^2+x^3+x^4
        assert_eq!(cyclotomic_poly(9).len(), 7); // 1+x^3+x^6
        let phi9 = cyclotomic_poly(9);
        assert!(phi9[0].is_one() && phi9[3].is_one() && phi9[6].is_one());
        assert!(phi9[1].is_zero() && phi9[2].is_zero());
    }

    #[test]
    fn fifth_roots_multiply_to_one() {
        let f = CycloField::prime_power(5, 1).unwrap();
        let a = f.root_power(1);
        let b = f.root_power(4);
        assert_eq!(f.mul(&a, &b), f.one());
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        // (1+z)(-z) = -z - z^2 = 1 using 1 + z + z^2 = 0.
        let f = CycloField::prime_power(3, 1).unwrap();
        let x = f.add(&f.one(), &f.root_power(1));
        let inv = f.inv(&x).unwrap();
        let expected = f.neg(&f.root_power(1));
        assert_eq!(inv, expected);
        assert_eq!(f.mul(&x, &inv), f.one());
    }

    #[test]
    fn conj_is_inverse_power() {
        let f = CycloField::prime_power(5, 1).unwrap();
        let x = f.root_power(2);
        assert_eq!(f.conj(&x), f.root_power(3));
        // conj is an automorphism of order two
        let y = f.add(&f.root_power(1), &f.from_q(Q::from_integer(7.into())));
        assert_eq!(f.conj(&f.conj(&y)), y);
    }

    #[test]
    fn conductor_mismatch_detected() {
        let f3 = CycloField::prime_power(3, 1).unwrap();
        let f5 = CycloField::prime_power(5, 1).unwrap();
        let x = f5.root_power(1);
        assert!(matches!(
            f3.check(&x),
            Err(AlgebraError::ConductorMismatch { .. })
        ));
    }

    #[test]
    fn inversion_in_prime_square_field() {
        let f = CycloField::prime_power(3, 2).unwrap();
        assert_eq!(f.degree(), 6);
        let x = f.add(&f.root_power(4), &f.one());
        let inv = f.inv(&x).unwrap();
        assert_eq!(f.mul(&x, &inv), f.one());
    }
}
