//! Certified rational interval arithmetic.
//!
//! Provides rational enclosures for pi, for cos/sin at rational turns of the
//! circle, for square roots and for arccos. Everything returns honest
//! intervals `[lo, hi]` with rational endpoints; callers refine by raising
//! the `bits` parameter until the interval decides the question at hand.

use num_traits::{One, Signed, Zero};

use super::Q;

#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn point(q: Q) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn new(lo: Q, hi: Q) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &Self) -> Self {
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Interval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn neg(&self) -> Self {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, q: &Q) -> Self {
        if q.is_negative() {
            Interval { lo: &self.hi * q, hi: &self.lo * q }
        } else {
            Interval { lo: &self.lo * q, hi: &self.hi * q }
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `Some(1)` or `Some(-1)` when the interval is strictly one-signed.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn midpoint(&self) -> Q {
        (&self.lo + &self.hi) / Q::from_integer(2.into())
    }
}

fn pow2_neg(bits: u32) -> Q {
    Q::new(1.into(), num_bigint::BigInt::from(2).pow(bits))
}

/// Alternating arctan series for a rational `|x| <= 1/2`; the partial sums
/// bracket the value.
fn arctan_series(x: &Q, bits: u32) -> Interval {
    let tol = pow2_neg(bits + 4);
    let x2 = x * x;
    let mut term = x.clone();
    let mut acc = Q::zero();
    let mut k: u64 = 0;
    loop {
        let contrib = &term / Q::from_integer((2 * k + 1).into());
        if k % 2 == 0 {
            acc += &contrib;
        } else {
            acc -= &contrib;
        }
        term *= &x2;
        k += 1;
        let next = (&term / Q::from_integer((2 * k + 1).into())).abs();
        if next < tol {
            return Interval::new(&acc - &next, &acc + &next);
        }
    }
}

/// Rational enclosure of pi via Machin's formula.
pub fn pi_interval(bits: u32) -> Interval {
    let a = arctan_series(&Q::new(1.into(), 5.into()), bits + 6);
    let b = arctan_series(&Q::new(1.into(), 239.into()), bits + 6);
    a.scale(&Q::from_integer(16.into()))
        .sub(&b.scale(&Q::from_integer(4.into())))
}

/// Rational square-root enclosure of a nonnegative interval, by bisection.
pub fn sqrt_interval(x: &Interval, bits: u32) -> Interval {
    assert!(!x.lo.is_negative(), "sqrt of a negative interval");
    let lo = sqrt_lower(&x.lo, bits);
    let hi = sqrt_upper(&x.hi, bits);
    Interval::new(lo, hi)
}

fn sqrt_lower(y: &Q, bits: u32) -> Q {
    if y.is_zero() {
        return Q::zero();
    }
    let (mut lo, mut hi) = sqrt_bracket(y);
    for _ in 0..bits + 8 {
        let mid = (&lo + &hi) / Q::from_integer(2.into());
        if &mid * &mid <= *y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn sqrt_upper(y: &Q, bits: u32) -> Q {
    if y.is_zero() {
        return Q::zero();
    }
    let (mut lo, mut hi) = sqrt_bracket(y);
    for _ in 0..bits + 8 {
        let mid = (&lo + &hi) / Q::from_integer(2.into());
        if &mid * &mid >= *y {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn sqrt_bracket(y: &Q) -> (Q, Q) {
    let one = Q::one();
    if *y >= one {
        (Q::zero(), y.clone() + Q::one())
    } else {
        (Q::zero(), Q::one())
    }
}

/// Arctangent enclosure of an interval argument (any sign, any size),
/// via the half-angle reduction `arctan x = 2 arctan(x / (1 + sqrt(1+x^2)))`.
pub fn arctan_interval(x: &Interval, bits: u32) -> Interval {
    let half = Q::new(1.into(), 2.into());
    if x.lo.abs() <= half && x.hi.abs() <= half {
        let lo = arctan_series(&x.lo, bits);
        let hi = arctan_series(&x.hi, bits);
        return Interval::new(lo.lo, hi.hi);
    }
    let one = Interval::point(Q::one());
    let denom = one.add(&sqrt_interval(&one.add(&x.mul(x)), bits + 4));
    // denom >= 1 > 0, safe to divide
    let reduced = Interval::new(&x.lo / &denom.hi, &x.hi / &denom.lo);
    arctan_interval(&reduced, bits).scale(&Q::from_integer(2.into()))
}

/// Cosine and sine of the angle `2 pi k / n`, as certified intervals.
pub fn cos_sin_of_turn(k: i64, n: i64, bits: u32) -> (Interval, Interval) {
    assert!(n > 0);
    let k = k.rem_euclid(n);
    // quadrant of 2 pi k/n: floor(4k/n) (exact rational arithmetic)
    let quadrant = (4 * k) / n;
    let frac = Q::new((4 * k - quadrant * n).into(), (4 * n).into()); // in [0, 1/4)
    let theta = pi_interval(bits + 8).scale(&(Q::from_integer(2.into()) * &frac));
    let (c, s) = cos_sin_taylor(&theta, bits);
    match quadrant {
        0 => (c, s),
        1 => (s.neg(), c),
        2 => (c.neg(), s.neg()),
        3 => (s, c.neg()),
        _ => unreachable!(),
    }
}

/// Taylor evaluation of cos and sin on `[0, pi/2)` with interval remainder.
fn cos_sin_taylor(x: &Interval, bits: u32) -> (Interval, Interval) {
    let tol = pow2_neg(bits + 4);
    let x2 = x.mul(x);
    // cos
    let mut cos_acc = Interval::point(Q::one());
    let mut term = Interval::point(Q::one());
    let mut j: u64 = 0;
    loop {
        j += 1;
        term = term.mul(&x2).scale(&Q::new(
            1.into(),
            ((2 * j - 1) * (2 * j)).into(),
        ));
        if j % 2 == 1 {
            cos_acc = cos_acc.sub(&term);
        } else {
            cos_acc = cos_acc.add(&term);
        }
        let bound = term.hi.abs().max(term.lo.abs());
        if bound < tol && j >= 2 {
            cos_acc = cos_acc.add(&Interval::new(-bound.clone(), bound));
            break;
        }
    }
    // sin
    let mut sin_acc = x.clone();
    let mut term = x.clone();
    let mut j: u64 = 0;
    loop {
        j += 1;
        term = term.mul(&x2).scale(&Q::new(
            1.into(),
            ((2 * j) * (2 * j + 1)).into(),
        ));
        if j % 2 == 1 {
            sin_acc = sin_acc.sub(&term);
        } else {
            sin_acc = sin_acc.add(&term);
        }
        let bound = term.hi.abs().max(term.lo.abs());
        if bound < tol && j >= 2 {
            sin_acc = sin_acc.add(&Interval::new(-bound.clone(), bound));
            break;
        }
    }
    (cos_acc, sin_acc)
}

/// Arccos enclosure for an interval inside `[-1, 1]`.
pub fn arccos_interval(x: &Interval, bits: u32) -> Interval {
    let lo_angle = arccos_point(&x.hi, bits);
    let hi_angle = arccos_point(&x.lo, bits);
    Interval::new(lo_angle.lo, hi_angle.hi)
}

fn arccos_point(c: &Q, bits: u32) -> Interval {
    let one = Q::one();
    assert!(c.abs() <= one, "arccos argument out of range");
    if c.is_negative() {
        return pi_interval(bits + 4).sub(&arccos_point(&-c.clone(), bits));
    }
    // arccos c = 2 arctan( sqrt((1-c)/(1+c)) ), argument in [0,1] for c >= 0
    let num = Interval::point(&one - c);
    let den = &one + c;
    let ratio = num.scale(&(Q::one() / den));
    let root = sqrt_interval(&ratio, bits + 6);
    arctan_interval(&root, bits + 2).scale(&Q::from_integer(2.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(i: &Interval) -> f64 {
        use num_traits::ToPrimitive;
        i.midpoint().to_f64().unwrap()
    }

    #[test]
    fn pi_enclosure_is_tight() {
        let p = pi_interval(64);
        assert!(p.width() < Q::new(1.into(), num_bigint::BigInt::from(2).pow(60)));
        let v = approx(&p);
        assert!((v - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn cos_sin_of_quarter_turns() {
        let (c, s) = cos_sin_of_turn(1, 4, 48);
        assert!(c.contains_zero());
        assert!((approx(&s) - 1.0).abs() < 1e-9);
        let (c, s) = cos_sin_of_turn(1, 2, 48);
        assert!((approx(&c) + 1.0).abs() < 1e-9);
        assert!(s.contains_zero());
    }

    #[test]
    fn cos_of_sixth_turn() {
        // cos(pi/3) = 1/2 exactly
        let (c, _) = cos_sin_of_turn(1, 6, 48);
        let half = Q::new(1.into(), 2.into());
        assert!(c.lo <= half && half <= c.hi);
        assert!(c.width() < Q::new(1.into(), 1_000_000.into()));
    }

    #[test]
    fn arccos_half_is_third_of_pi() {
        let i = arccos_point(&Q::new(1.into(), 2.into()), 48);
        let third_pi = approx(&pi_interval(48)) / 3.0;
        assert!((approx(&i) - third_pi).abs() < 1e-9);
    }

    #[test]
    fn sqrt_two() {
        let r = sqrt_interval(&Interval::point(Q::from_integer(2.into())), 40);
        assert!((approx(&r) - std::f64::consts::SQRT_2).abs() < 1e-9);
    }
}
