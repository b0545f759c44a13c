//! Free group words and formal integer combinations of them.

use num_bigint::BigInt;
use num_traits::Zero;

use super::KnotError;

/// A word in free generators `x_0, x_1, ...` with letters of exponent ±1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GroupWord {
    pub letters: Vec<(usize, i8)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord { letters: vec![] }
    }

    pub fn generator(idx: usize) -> Self {
        GroupWord { letters: vec![(idx, 1)] }
    }

    pub fn letter(idx: usize, exp: i8) -> Self {
        assert!(exp == 1 || exp == -1);
        GroupWord { letters: vec![(idx, exp)] }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum; the abelianization to `Z` when all generators map to 1.
    pub fn epsilon(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut w = GroupWord::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Commutator `[self, other] = self other self^{-1} other^{-1}`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.concat(other).concat(&self.inverse()).concat(&other.inverse())
    }

    /// Freely reduced form (cancels adjacent `x x^{-1}` pairs).
    pub fn reduced(&self) -> Self {
        let mut stack: Vec<(usize, i8)> = vec![];
        for &(g, e) in &self.letters {
            if let Some(&(tg, te)) = stack.last() {
                if tg == g && te == -e {
                    stack.pop();
                    continue;
                }
            }
            stack.push((g, e));
        }
        GroupWord { letters: stack }
    }

    /// Re-indexes generators through `f`.
    pub fn map_generators(&self, f: impl Fn(usize) -> usize) -> Self {
        GroupWord {
            letters: self.letters.iter().map(|&(g, e)| (f(g), e)).collect(),
        }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }
}

/// Formal `Z`-linear combination of free group words (an element of the free
/// group ring). Terms are kept freely reduced and canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    pub terms: Vec<(GroupWord, BigInt)>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement { terms: vec![] }
    }

    pub fn one() -> Self {
        Self::from_word(GroupWord::identity())
    }

    pub fn from_word(w: GroupWord) -> Self {
        GroupRingElement { terms: vec![(w.reduced(), BigInt::from(1))] }
    }

    pub fn from_term(w: GroupWord, c: BigInt) -> Self {
        let mut e = GroupRingElement { terms: vec![(w.reduced(), c)] };
        e.normalize();
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalize(&mut self) {
        self.terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(GroupWord, BigInt)> = vec![];
        for (w, c) in self.terms.drain(..) {
            if let Some(last) = merged.last_mut() {
                if last.0 == w {
                    last.1 += c;
                    continue;
                }
            }
            merged.push((w, c));
        }
        merged.retain(|(_, c)| !c.is_zero());
        self.terms = merged;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        let mut e = GroupRingElement { terms };
        e.normalize();
        e
    }

    pub fn neg(&self) -> Self {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = vec![];
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                terms.push((w1.concat(w2).reduced(), c1 * c2));
            }
        }
        let mut e = GroupRingElement { terms };
        e.normalize();
        e
    }

    /// Left-multiplies every term by a word.
    pub fn word_mul(&self, w: &GroupWord) -> Self {
        GroupRingElement {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (w.concat(t).reduced(), c.clone()))
                .collect(),
        }
    }
}

/// Parses the word grammar: whitespace-separated tokens `x<k>` (generator,
/// 1-based) and `X<k>` (its inverse), e.g. `"x3 X5 x1"`.
pub fn parse_word(s: &str) -> Result<GroupWord, KnotError> {
    let mut letters = vec![];
    for tok in s.split_whitespace() {
        let (exp, rest) = match tok.chars().next() {
            Some('x') => (1i8, &tok[1..]),
            Some('X') => (-1i8, &tok[1..]),
            _ => return Err(KnotError::WordToken(tok.into())),
        };
        let idx: usize = rest
            .parse()
            .map_err(|_| KnotError::WordToken(tok.into()))?;
        if idx == 0 {
            return Err(KnotError::WordToken(tok.into()));
        }
        letters.push((idx - 1, exp));
    }
    Ok(GroupWord { letters })
}

/// Renders a word in the same grammar accepted by [`parse_word`].
pub fn word_string(w: &GroupWord) -> String {
    w.letters
        .iter()
        .map(|&(g, e)| {
            if e > 0 {
                format!("x{}", g + 1)
            } else {
                format!("X{}", g + 1)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels_pairs() {
        let w = parse_word("x1 X1 x2 x3 X3").unwrap();
        assert_eq!(w.reduced(), GroupWord::generator(1));
    }

    #[test]
    fn epsilon_counts_exponents() {
        let w = parse_word("x1 x2 X3 X3").unwrap();
        assert_eq!(w.epsilon(), 0);
    }

    #[test]
    fn word_roundtrip() {
        let w = parse_word("x3 X5 x1").unwrap();
        assert_eq!(word_string(&w), "x3 X5 x1");
    }

    #[test]
    fn group_ring_multiplication_reduces() {
        let a = GroupRingElement::from_word(parse_word("x1").unwrap());
        let b = GroupRingElement::from_word(parse_word("X1 x2").unwrap());
        let p = a.mul(&b);
        assert_eq!(p, GroupRingElement::from_word(parse_word("x2").unwrap()));
    }
}
