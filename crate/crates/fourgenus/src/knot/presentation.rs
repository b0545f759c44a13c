//! Wirtinger presentations of knot groups and their zero-surgery quotients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::diagram::KnotDiagram;
use super::word::GroupWord;
use super::KnotError;
use crate::algebra::{smith_normal_form_int, Matrix};

/// A knot group presentation with one meridional generator per over-arc and
/// one conjugation relation per crossing (the redundant relation is kept).
/// The zero-framed longitude and any user-supplied marked curves (infection
/// curves) are carried along as words in the generators.
#[derive(Debug, Clone, PartialEq)]
pub struct WirtingerPresentation {
    pub name: String,
    pub generator_count: usize,
    /// Relator words, each trivial in the group, of shape
    /// `x_o^e x_in x_o^{-e} x_out^{-1}`.
    pub relations: Vec<GroupWord>,
    /// Index of the preferred meridian.
    pub meridian: usize,
    /// Zero-framed longitude; exponent sum 0, commutes with the meridian.
    pub longitude: GroupWord,
    pub marked_curves: BTreeMap<String, GroupWord>,
}

impl WirtingerPresentation {
    pub fn meridian_word(&self) -> GroupWord {
        GroupWord::generator(self.meridian)
    }

    /// Relations of the zero-surgery group: Wirtinger relations plus the
    /// longitude relation.
    pub fn zero_surgery_relations(&self) -> Vec<GroupWord> {
        let mut rels = self.relations.clone();
        rels.push(self.longitude.clone());
        rels
    }

    /// Smith invariants of the abelianized presentation (of the knot group);
    /// a knot group must give `[1, ..., 1, 0]`, i.e. `H1 = Z`.
    pub fn abelianization_invariants(&self) -> Vec<BigInt> {
        let m = Matrix::from_fn(self.relations.len().max(1), self.generator_count, |r, c| {
            if r >= self.relations.len() {
                return BigInt::zero();
            }
            let mut acc = BigInt::zero();
            for &(g, e) in &self.relations[r].letters {
                if g == c {
                    acc += BigInt::from(e);
                }
            }
            acc
        });
        smith_normal_form_int(&m).diagonal
    }

    pub fn is_infinite_cyclic_abelianization(&self) -> bool {
        let inv = self.abelianization_invariants();
        let ones = inv.iter().filter(|d| d.is_one()).count();
        let zeros = inv.iter().filter(|d| d.is_zero()).count();
        ones + zeros == inv.len() && self.generator_count - ones == 1
    }

    pub fn check_generator(&self, g: usize) -> Result<(), KnotError> {
        if g >= self.generator_count {
            return Err(KnotError::GeneratorRange(g, self.generator_count));
        }
        Ok(())
    }
}

/// Builds the Wirtinger presentation of a diagram's knot group.
///
/// Generators are indexed by over-arcs (classes of arc labels joined across
/// over-strands), ordered by their smallest label. At a positive crossing the
/// outgoing under-strand generator is `x_o x_in x_o^{-1}`; at a negative one
/// it is `x_o^{-1} x_in x_o`.
pub fn wirtinger(d: &KnotDiagram) -> WirtingerPresentation {
    if d.crossing_count() == 0 {
        return WirtingerPresentation {
            name: d.name.clone(),
            generator_count: 1,
            relations: vec![],
            meridian: 0,
            longitude: GroupWord::identity(),
            marked_curves: BTreeMap::new(),
        };
    }
    let (classes, count) = d.over_arc_classes();
    let class_of = |label: usize| classes[label - 1];
    let mut relations = vec![];
    for (i, cr) in d.crossings.iter().enumerate() {
        let [a, b, _c, _d] = *cr;
        let over = class_of(b);
        let input = class_of(a);
        let out = class_of(d.crossings[i][2]);
        let e = d.signs[i];
        let r = GroupWord::letter(over, e)
            .concat(&GroupWord::generator(input))
            .concat(&GroupWord::letter(over, -e))
            .concat(&GroupWord::letter(out, -1));
        relations.push(r);
    }
    let meridian = class_of(1);
    let longitude = longitude_word(d, &classes, meridian);
    WirtingerPresentation {
        name: d.name.clone(),
        generator_count: count,
        relations,
        meridian,
        longitude,
        marked_curves: BTreeMap::new(),
    }
}

/// Reads off the zero-framed longitude based on the arc of the preferred
/// meridian.
///
/// Walking the knot, each under-passage beneath an over-arc `o` at a crossing
/// of sign `e` conjugates the transported meridian by `x_o^e` on the left, so
/// the final word collects the passage letters in reverse traversal order;
/// appending `mu^{-writhe}` makes the framing zero.
pub fn longitude_word(d: &KnotDiagram, classes: &[usize], meridian: usize) -> GroupWord {
    if d.crossing_count() == 0 {
        return GroupWord::identity();
    }
    // terminal crossing of each label as incoming under-strand
    let mut under_at: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, cr) in d.crossings.iter().enumerate() {
        under_at.insert(cr[0], i);
    }
    let mut passages = vec![];
    for label in 1..=d.arc_count {
        if let Some(&i) = under_at.get(&label) {
            let over = classes[d.crossings[i][1] - 1];
            passages.push((over, d.signs[i]));
        }
    }
    let mut w = GroupWord::identity();
    for &(over, e) in passages.iter().rev() {
        w = w.concat(&GroupWord::letter(over, e));
    }
    w.concat(&GroupWord::generator(meridian).pow(-d.writhe()))
        .reduced()
}

/// Connected sum of presentations: generators and relations are disjointly
/// unioned, all meridians are identified with the first one, longitudes are
/// concatenated, and marked curves are re-indexed with summand tags.
pub fn connected_sum(parts: &[WirtingerPresentation]) -> Result<WirtingerPresentation, KnotError> {
    if parts.is_empty() {
        return Err(KnotError::EmptySum);
    }
    if parts.len() == 1 {
        return Ok(parts[0].clone());
    }
    let mut offset = 0usize;
    let mut relations = vec![];
    let mut longitude = GroupWord::identity();
    let mut marked_curves = BTreeMap::new();
    let mut meridians = vec![];
    let mut names = vec![];
    for (i, p) in parts.iter().enumerate() {
        let off = offset;
        for r in &p.relations {
            relations.push(r.map_generators(|g| g + off));
        }
        longitude = longitude.concat(&p.longitude.map_generators(|g| g + off));
        meridians.push(p.meridian + off);
        for (name, w) in &p.marked_curves {
            marked_curves.insert(format!("s{}/{}", i + 1, name), w.map_generators(|g| g + off));
        }
        names.push(p.name.clone());
        offset += p.generator_count;
    }
    for &m in meridians.iter().skip(1) {
        relations.push(
            GroupWord::generator(meridians[0]).concat(&GroupWord::letter(m, -1)),
        );
    }
    Ok(WirtingerPresentation {
        name: names.join(" # "),
        generator_count: offset,
        relations,
        meridian: meridians[0],
        longitude: longitude.reduced(),
        marked_curves,
    })
}

#[cfg(test)]
mod tests {
    use super::super::diagram::{trefoil_left, unknot};
    use super::super::fox::fox_identity_holds;
    use super::*;

    #[test]
    fn unknot_presentation() {
        let p = wirtinger(&unknot());
        assert_eq!(p.generator_count, 1);
        assert!(p.relations.is_empty());
        assert!(p.longitude.is_identity());
    }

    #[test]
    fn trefoil_presentation_shape() {
        let p = wirtinger(&trefoil_left());
        assert_eq!(p.generator_count, 3);
        assert_eq!(p.relations.len(), 3);
        for r in &p.relations {
            assert_eq!(r.epsilon(), 0);
            assert!(fox_identity_holds(r, 3));
        }
        assert!(p.is_infinite_cyclic_abelianization());
        assert_eq!(p.longitude.epsilon(), 0);
    }

    #[test]
    fn sum_of_one_is_unchanged() {
        let p = wirtinger(&trefoil_left());
        let s = connected_sum(&[p.clone()]).unwrap();
        assert_eq!(p, s);
    }

    #[test]
    fn sum_glues_meridians() {
        let p = wirtinger(&trefoil_left());
        let s = connected_sum(&[p.clone(), p.clone()]).unwrap();
        assert_eq!(s.generator_count, 6);
        assert_eq!(s.relations.len(), 7);
        assert_eq!(s.longitude.epsilon(), 0);
        assert!(s.is_infinite_cyclic_abelianization());
    }

    #[test]
    fn empty_sum_rejected() {
        assert!(matches!(connected_sum(&[]), Err(KnotError::EmptySum)));
    }
}
