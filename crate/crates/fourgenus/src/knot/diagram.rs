//! PD-code knot diagrams.
//!
//! A crossing tuple `(a, b, c, d)` lists the four arc labels counterclockwise
//! starting from the incoming under-strand `a`; the under-strand exits at
//! `c = a + 1 (mod 2n)` and the over-strand occupies `b` and `d`. Labels run
//! `1..=2n` sequentially along the knot's orientation. The crossing is
//! positive exactly when `b = d + 1 (mod 2n)`.

use super::KnotError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotDiagram {
    pub name: String,
    pub crossings: Vec<[usize; 4]>,
    pub signs: Vec<i8>,
    /// Number of arc labels: `2n` for `n >= 1` crossings, 1 for the unknot.
    pub arc_count: usize,
}

impl KnotDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Successor arc label along the orientation.
    pub fn next_label(&self, e: usize) -> usize {
        e % self.arc_count + 1
    }

    /// Partition of arc labels into over-arcs: labels joined whenever they
    /// appear as the over-strand pair of a crossing. Returns, per label
    /// (1-based), the over-arc class index (0-based, ordered by smallest
    /// label), along with the class count.
    pub fn over_arc_classes(&self) -> (Vec<usize>, usize) {
        let n = self.arc_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for cr in &self.crossings {
            let b = cr[1] - 1;
            let d = cr[3] - 1;
            let rb = find(&mut parent, b);
            let rd = find(&mut parent, d);
            if rb != rd {
                parent[rb.max(rd)] = rb.min(rd);
            }
        }
        let mut class_of_root = std::collections::BTreeMap::new();
        let mut classes = vec![0usize; n];
        for label in 0..n {
            let root = find(&mut parent, label);
            let next_id = class_of_root.len();
            let id = *class_of_root.entry(root).or_insert(next_id);
            classes[label] = id;
        }
        let count = class_of_root.len();
        (classes, count)
    }

    fn validate(&self) -> Result<(), KnotError> {
        let n = self.crossings.len();
        if n == 0 {
            if self.arc_count != 1 {
                return Err(KnotError::LabelRange(self.arc_count));
            }
            return Ok(());
        }
        let m = 2 * n;
        if self.arc_count != m {
            return Err(KnotError::LabelRange(self.arc_count));
        }
        let mut counts = vec![0usize; m + 1];
        for cr in &self.crossings {
            for &lbl in cr {
                if lbl == 0 || lbl > m {
                    return Err(KnotError::LabelRange(lbl));
                }
                counts[lbl] += 1;
            }
        }
        for (lbl, &c) in counts.iter().enumerate().skip(1) {
            if c != 2 {
                return Err(KnotError::LabelCount(lbl, c));
            }
        }
        for (i, cr) in self.crossings.iter().enumerate() {
            let [a, b, c, d] = *cr;
            if self.next_label(a) != c {
                return Err(KnotError::UnderChain(i));
            }
            let b_succ_d = self.next_label(d) == b;
            let d_succ_b = self.next_label(b) == d;
            if !b_succ_d && !d_succ_b {
                return Err(KnotError::OverChain(i));
            }
            let sign = self.signs[i];
            if b_succ_d != d_succ_b {
                // sign determined by the labelling
                let inferred: i8 = if b_succ_d { 1 } else { -1 };
                if sign != inferred {
                    return Err(KnotError::SignInconsistent(i));
                }
            } else if sign != 1 && sign != -1 {
                return Err(KnotError::SignInconsistent(i));
            }
        }
        Ok(())
    }

    pub fn from_parts(
        name: &str,
        crossings: Vec<[usize; 4]>,
        signs: Vec<i8>,
    ) -> Result<Self, KnotError> {
        let arc_count = if crossings.is_empty() { 1 } else { 2 * crossings.len() };
        let d = KnotDiagram { name: name.into(), crossings, signs, arc_count };
        d.validate()?;
        Ok(d)
    }
}

/// Parses a textual PD code: whitespace- or comma-separated tuples
/// `(a,b,c,d)`, each optionally followed by a `+` or `-` sign token. Omitted
/// signs are inferred from the arc labelling.
pub fn parse_pd(name: &str, text: &str) -> Result<KnotDiagram, KnotError> {
    let mut crossings: Vec<[usize; 4]> = vec![];
    let mut explicit_signs: Vec<Option<i8>> = vec![];
    let mut rest = text.trim();
    while !rest.is_empty() {
        if let Some(stripped) = rest.strip_prefix(',') {
            rest = stripped.trim_start();
            continue;
        }
        if let Some(stripped) = rest.strip_prefix('(') {
            let close = stripped
                .find(')')
                .ok_or_else(|| KnotError::TupleArity(rest.into()))?;
            let inner = &stripped[..close];
            let parts: Vec<&str> = inner.split(',').map(|s| s.trim()).collect();
            if parts.len() != 4 {
                return Err(KnotError::TupleArity(format!("({})", inner)));
            }
            let mut tuple = [0usize; 4];
            for (i, p) in parts.iter().enumerate() {
                tuple[i] = p
                    .parse()
                    .map_err(|_| KnotError::BadToken((*p).into()))?;
            }
            crossings.push(tuple);
            explicit_signs.push(None);
            rest = stripped[close + 1..].trim_start();
            continue;
        }
        // a sign token attaches to the most recent tuple
        let tok: String = rest.chars().take_while(|c| !c.is_whitespace() && *c != ',').collect();
        match tok.as_str() {
            "+" | "-" => {
                let sign = if tok == "+" { 1 } else { -1 };
                match explicit_signs.last_mut() {
                    Some(slot) => *slot = Some(sign),
                    None => return Err(KnotError::SignToken(tok)),
                }
            }
            _ => return Err(KnotError::SignToken(tok)),
        }
        rest = rest[tok.len()..].trim_start();
    }
    let n = crossings.len();
    let arc_count = if n == 0 { 1 } else { 2 * n };
    // infer missing signs from the successor structure
    let mut signs = vec![0i8; n];
    for i in 0..n {
        let [_, b, _, d] = crossings[i];
        let next = |e: usize| e % arc_count + 1;
        signs[i] = match explicit_signs[i] {
            Some(s) => s,
            None => {
                let b_succ_d = next(d) == b;
                let d_succ_b = next(b) == d;
                match (b_succ_d, d_succ_b) {
                    (true, false) => 1,
                    (false, true) => -1,
                    _ => return Err(KnotError::SignInconsistent(i)),
                }
            }
        };
    }
    KnotDiagram::from_parts(name, crossings, signs)
}

/// Mirror image: reverses every crossing's counterclockwise order (swap the
/// over slots), which flips all signs.
pub fn mirror(d: &KnotDiagram) -> KnotDiagram {
    KnotDiagram {
        name: format!("{}*", d.name),
        crossings: d
            .crossings
            .iter()
            .map(|&[a, b, c, dd]| [a, dd, c, b])
            .collect(),
        signs: d.signs.iter().map(|s| -s).collect(),
        arc_count: d.arc_count,
    }
}

/// The standard left-handed trefoil diagram (all crossings negative).
pub fn trefoil_left() -> KnotDiagram {
    parse_pd("trefoil_left", "(1,4,2,5) (3,6,4,1) (5,2,6,3)").unwrap()
}

pub fn unknot() -> KnotDiagram {
    KnotDiagram::from_parts("unknot", vec![], vec![]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_has_one_arc() {
        let d = unknot();
        assert_eq!(d.arc_count, 1);
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn trefoil_parses_with_inferred_signs() {
        let d = trefoil_left();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.signs, vec![-1, -1, -1]);
        assert_eq!(d.writhe(), -3);
        let (classes, count) = d.over_arc_classes();
        assert_eq!(count, 3);
        // labels 6 and 1 share an over-arc
        assert_eq!(classes[0], classes[5]);
    }

    #[test]
    fn arity_error() {
        assert!(matches!(
            parse_pd("bad", "(1,2,3)"),
            Err(KnotError::TupleArity(_))
        ));
    }

    #[test]
    fn sign_token_error() {
        assert!(matches!(
            parse_pd("bad", "(1,4,2,5) ?"),
            Err(KnotError::SignToken(_))
        ));
    }

    #[test]
    fn label_count_error() {
        assert!(matches!(
            parse_pd("bad", "(1,4,2,5) (3,6,4,1) (5,2,6,1)"),
            Err(KnotError::LabelCount(..))
        ));
    }

    #[test]
    fn mirror_flips_signs() {
        let d = trefoil_left();
        let m = mirror(&d);
        assert_eq!(m.signs, vec![1, 1, 1]);
        assert_eq!(m.writhe(), 3);
        // mirror is still a valid diagram
        assert!(KnotDiagram::from_parts("m", m.crossings.clone(), m.signs.clone()).is_ok());
    }
}
