//! Sturm sequences and exact real-root isolation for rational polynomials.
//!
//! Works on dense coefficient vectors in the honest polynomial ring `Q[s]`
//! (monomials are *not* units here, unlike in the Laurent modules), which is
//! what the Sturm theory requires.

use num_traits::{Signed, Zero};

use super::field::Rationals;
use super::interval::Interval;
use super::laurent::LaurentPoly;
use super::Q;

/// Dense polynomial in `Q[s]`, lowest degree first, no trailing zeros.
pub type DensePoly = Vec<Q>;

fn trim(v: &mut DensePoly) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

pub fn to_dense(p: &LaurentPoly<Rationals>) -> DensePoly {
    assert!(p.min_exp() >= 0, "expected an ordinary polynomial");
    let mut v = vec![Q::zero(); p.min_exp() as usize];
    v.extend(p.poly_coeffs().iter().cloned());
    trim(&mut v);
    v
}

fn eval(p: &[Q], x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn derivative(p: &[Q]) -> DensePoly {
    let mut out = vec![];
    for (k, c) in p.iter().enumerate().skip(1) {
        out.push(c * Q::from_integer(k.into()));
    }
    trim(&mut out);
    out
}

/// Remainder of `a` divided by `b` in `Q[s]`.
fn rem(a: &[Q], b: &[Q]) -> DensePoly {
    assert!(!b.is_empty());
    let mut r: DensePoly = a.to_vec();
    trim(&mut r);
    let lead = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for i in 0..b.len() {
            let t = &b[i] * &c;
            r[k + i] -= t;
        }
        trim(&mut r);
    }
    r
}

fn gcd(a: &[Q], b: &[Q]) -> DensePoly {
    let mut x: DensePoly = a.to_vec();
    let mut y: DensePoly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= lead.clone();
        }
    }
    x
}

fn div_exact(a: &[Q], b: &[Q]) -> DensePoly {
    let mut r: DensePoly = a.to_vec();
    trim(&mut r);
    let lead = b.last().unwrap().clone();
    let mut q = vec![Q::zero(); r.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        q[k] = c.clone();
        for i in 0..b.len() {
            let t = &b[i] * &c;
            r[k + i] -= t;
        }
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact division");
    trim(&mut q);
    q
}

/// Sturm chain of the squarefree part of `p`.
pub fn sturm_sequence(p: &LaurentPoly<Rationals>) -> Vec<DensePoly> {
    let dense = to_dense(p);
    assert!(!dense.is_empty(), "zero polynomial");
    let d = derivative(&dense);
    let squarefree = if d.is_empty() {
        dense
    } else {
        let g = gcd(&dense, &d);
        div_exact(&dense, &g)
    };
    let mut chain = vec![squarefree.clone()];
    let d = derivative(&squarefree);
    if d.is_empty() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let mut r = rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        for c in r.iter_mut() {
            *c = -c.clone();
        }
        chain.push(r);
    }
    chain
}

fn sign_variations(chain: &[DensePoly], x: &Q) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for f in chain {
        let v = eval(f, x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_roots(chain: &[DensePoly], lo: &Q, hi: &Q) -> usize {
    let a = sign_variations(chain, lo);
    let b = sign_variations(chain, hi);
    a.saturating_sub(b)
}

/// One isolated simple real root of a squarefree polynomial, bracketed by a
/// rational interval on which the polynomial changes sign.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    poly: DensePoly,
    pub lo: Q,
    pub hi: Q,
}

impl IsolatedRoot {
    /// Halves the bracket width, keeping the sign change.
    pub fn refine(&mut self) {
        let mid = (&self.lo + &self.hi) / Q::from_integer(2.into());
        let fm = eval(&self.poly, &mid);
        if fm.is_zero() {
            let quarter = (&self.hi - &self.lo) / Q::from_integer(4.into());
            self.lo = &mid - &quarter;
            self.hi = &mid + &quarter;
            return;
        }
        let flo = eval(&self.poly, &self.lo);
        if flo.is_positive() != fm.is_positive() {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_below(&mut self, width: &Q) {
        while &(&self.hi - &self.lo) > width {
            self.refine();
        }
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    /// Exact comparison with a rational number (the root is irrational or
    /// rational but never equal to `q` unless `poly(q) = 0`).
    pub fn cmp_rational(&mut self, q: &Q) -> std::cmp::Ordering {
        if eval(&self.poly, q).is_zero() {
            return std::cmp::Ordering::Equal;
        }
        loop {
            if *q <= self.lo {
                return std::cmp::Ordering::Greater;
            }
            if *q >= self.hi {
                return std::cmp::Ordering::Less;
            }
            self.refine();
        }
    }
}

/// Isolates all real roots of `p` in the open interval `(lo, hi)`, returned
/// in increasing order with disjoint rational brackets.
pub fn isolate_real_roots(p: &LaurentPoly<Rationals>, lo: &Q, hi: &Q) -> Vec<IsolatedRoot> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    let chain = sturm_sequence(p);
    let squarefree = chain[0].clone();
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let step = (&hi - &lo) / Q::from_integer(1024.into());
    while eval(&squarefree, &lo).is_zero() {
        lo += &step;
    }
    while eval(&squarefree, &hi).is_zero() {
        hi -= &step;
    }
    let mut out = vec![];
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let n = count_roots(&chain, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            let fa = eval(&squarefree, &a);
            let fb = eval(&squarefree, &b);
            if !fb.is_zero() && fa.is_positive() != fb.is_positive() {
                out.push(IsolatedRoot { poly: squarefree.clone(), lo: a, hi: b });
                continue;
            }
        }
        let mut mid = (&a + &b) / Q::from_integer(2.into());
        while eval(&squarefree, &mid).is_zero() {
            mid = (&a + &mid) / Q::from_integer(2.into());
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn poly(coeffs: &[i64]) -> LaurentPoly<Rationals> {
        LaurentPoly::from_coeffs(Rationals, 0, coeffs.iter().map(|&n| q(n)).collect())
    }

    #[test]
    fn isolates_roots_of_quadratic() {
        // (s-1)(s+2) = s^2 + s - 2, roots 1 and -2
        let p = poly(&[-2, 1, 1]);
        let roots = isolate_real_roots(&p, &q(-10), &q(10));
        assert_eq!(roots.len(), 2);
        let mut r0 = roots[0].clone();
        let mut r1 = roots[1].clone();
        r0.refine_below(&Q::new(1.into(), 1000.into()));
        r1.refine_below(&Q::new(1.into(), 1000.into()));
        assert!(r0.lo < q(-2) && q(-2) < r0.hi);
        assert!(r1.lo < q(1) && q(1) < r1.hi);
    }

    #[test]
    fn repeated_roots_counted_once() {
        let p = poly(&[1, -2, 1]); // (s-1)^2
        let roots = isolate_real_roots(&p, &q(-5), &q(5));
        assert_eq!(roots.len(), 1);
    }

    #[test]
    fn no_roots_outside_range() {
        let p = poly(&[1, 0, 1]); // s^2 + 1
        assert!(isolate_real_roots(&p, &q(-5), &q(5)).is_empty());
    }

    #[test]
    fn monomial_has_root_at_zero() {
        // 2s: the chain must see an honest degree-one polynomial
        let p = poly(&[0, 2]);
        let roots = isolate_real_roots(&p, &q(-5), &q(5));
        assert_eq!(roots.len(), 1);
        let mut r = roots[0].clone();
        assert_eq!(r.cmp_rational(&q(0)), std::cmp::Ordering::Equal);
    }

    #[test]
    fn comparison_against_rationals() {
        let p = poly(&[-2, 0, 1]); // s^2 - 2
        let roots = isolate_real_roots(&p, &q(0), &q(2));
        assert_eq!(roots.len(), 1);
        let mut r = roots[0].clone();
        assert_eq!(r.cmp_rational(&q(1)), std::cmp::Ordering::Greater);
        assert_eq!(
            r.cmp_rational(&(q(3) / q(2))),
            std::cmp::Ordering::Less
        );
    }
}
