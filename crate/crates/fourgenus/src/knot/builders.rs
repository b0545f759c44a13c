//! Programmatic diagram builders for twist-region knots (pretzels and
//! two-bridge knots), used to generate the bundled catalog entries in a
//! reproducible way.
//!
//! A crossing is modelled with four compass ports; strands run diagonally
//! (NW<->SE and NE<->SW) and the `over` field records which diagonal passes
//! over. Builders assemble an abstract 4-valent graph, then a single
//! traversal assigns sequential arc labels and emits PD tuples (the
//! counterclockwise port order is NW, SW, SE, NE).

use std::collections::BTreeMap;

use super::diagram::KnotDiagram;
use super::KnotError;

const NW: u8 = 0;
const NE: u8 = 1;
const SW: u8 = 2;
const SE: u8 = 3;

fn opposite(p: u8) -> u8 {
    match p {
        NW => SE,
        SE => NW,
        NE => SW,
        SW => NE,
        _ => unreachable!(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Diag {
    NwSe,
    NeSw,
}

#[derive(Debug, Default)]
struct Graph {
    over: Vec<Diag>,
    links: BTreeMap<(usize, u8), (usize, u8)>,
}

impl Graph {
    fn new_crossing(&mut self, over: Diag) -> usize {
        self.over.push(over);
        self.over.len() - 1
    }

    fn link(&mut self, a: (usize, u8), b: (usize, u8)) {
        assert!(!self.links.contains_key(&a), "port {:?} already linked", a);
        assert!(!self.links.contains_key(&b), "port {:?} already linked", b);
        self.links.insert(a, b);
        self.links.insert(b, a);
    }

    /// Traverses the knot, labels arcs sequentially, and emits the diagram.
    fn into_diagram(self, name: &str) -> Result<KnotDiagram, KnotError> {
        let n = self.over.len();
        if n == 0 {
            return KnotDiagram::from_parts(name, vec![], vec![]);
        }
        debug_assert_eq!(self.links.len(), 4 * n);
        // port -> (label, direction); direction true = outgoing
        let mut port_label: BTreeMap<(usize, u8), (usize, bool)> = BTreeMap::new();
        let mut at = (0usize, NW); // entering crossing 0 at NW
        for label in 1..=2 * n {
            let exit = (at.0, opposite(at.1));
            let next = *self
                .links
                .get(&exit)
                .expect("every port must be linked");
            if port_label.contains_key(&exit) {
                return Err(KnotError::NotAKnot);
            }
            port_label.insert(exit, (label, true));
            port_label.insert(next, (label, false));
            at = next;
        }
        if at != (0, NW) || port_label.len() != 4 * n {
            return Err(KnotError::NotAKnot);
        }
        let mut crossings = vec![];
        for c in 0..n {
            let (over_ports, under_ports) = match self.over[c] {
                Diag::NwSe => ([NW, SE], [NE, SW]),
                Diag::NeSw => ([NE, SW], [NW, SE]),
            };
            let _ = over_ports;
            let under_in = under_ports
                .iter()
                .copied()
                .find(|&p| !port_label[&(c, p)].1)
                .expect("one under port is incoming");
            // counterclockwise from the incoming under-strand
            let ccw = [NW, SW, SE, NE];
            let start = ccw.iter().position(|&p| p == under_in).unwrap();
            let mut tuple = [0usize; 4];
            for (k, item) in tuple.iter_mut().enumerate() {
                let port = ccw[(start + k) % 4];
                *item = port_label[&(c, port)].0;
            }
            crossings.push(tuple);
        }
        // signs follow from the labelling
        let arc_count = 2 * n;
        let next = |e: usize| e % arc_count + 1;
        let mut signs = vec![0i8; n];
        for (i, cr) in crossings.iter().enumerate() {
            let [_, b, _, d] = *cr;
            signs[i] = if next(d) == b {
                1
            } else if next(b) == d {
                -1
            } else {
                return Err(KnotError::OverChain(i));
            };
        }
        KnotDiagram::from_parts(name, crossings, signs)
    }
}

/// Standard pretzel diagram `P(q_1, ..., q_k)`: vertical twist regions side
/// by side, each with `|q_i|` crossings whose handedness follows the sign of
/// `q_i`. Fails when the parameters describe a link with more than one
/// component.
pub fn pretzel_diagram(name: &str, params: &[i64]) -> Result<KnotDiagram, KnotError> {
    assert!(!params.is_empty() && params.iter().all(|&q| q != 0));
    let mut g = Graph::default();
    let mut tops = vec![];
    let mut bottoms = vec![];
    for &q in params {
        let over = if q > 0 { Diag::NwSe } else { Diag::NeSw };
        let count = q.unsigned_abs() as usize;
        let ids: Vec<usize> = (0..count).map(|_| g.new_crossing(over)).collect();
        for w in ids.windows(2) {
            g.link((w[0], SW), (w[1], NW));
            g.link((w[0], SE), (w[1], NE));
        }
        tops.push(((ids[0], NW), (ids[0], NE)));
        bottoms.push(((ids[count - 1], SW), (ids[count - 1], SE)));
    }
    for i in 0..params.len() - 1 {
        g.link(tops[i].1, tops[i + 1].0); // TR_i -- TL_{i+1}
        g.link(bottoms[i].1, bottoms[i + 1].0); // BR_i -- BL_{i+1}
    }
    g.link(tops[0].0, tops[params.len() - 1].1); // top closure
    g.link(bottoms[0].0, bottoms[params.len() - 1].1); // bottom closure
    g.into_diagram(name)
}

/// Alternating two-bridge diagram from an all-positive continued fraction
/// `[a_1, a_2, ...]` of `p/q` (so `p/q = a_1 + 1/(a_2 + 1/(...))`), built by
/// alternately twisting on the right and at the bottom of a rational tangle
/// and taking the numerator closure.
pub fn rational_knot_diagram(name: &str, cf: &[u64]) -> Result<KnotDiagram, KnotError> {
    rational_knot_with_convention(name, cf, Diag::NwSe, Diag::NwSe)
}

fn rational_knot_with_convention(
    name: &str,
    cf: &[u64],
    h_over: Diag,
    v_over: Diag,
) -> Result<KnotDiagram, KnotError> {
    assert!(!cf.is_empty() && cf.iter().all(|&a| a > 0));
    // Build innermost twists first: the reversed continued fraction, with
    // the integer part ending up as the final horizontal group. Groups
    // alternate vertical/horizontal so that group i (0-based of n) is
    // horizontal exactly when n-1-i is even.
    let groups: Vec<u64> = cf.iter().rev().copied().collect();
    let n_groups = groups.len();
    let horizontal = |i: usize| (n_groups - 1 - i) % 2 == 0;

    let mut g = Graph::default();
    let mut nw = (usize::MAX, NW);
    let mut ne = nw;
    let mut sw = nw;
    let mut se = nw;
    for (i, &a) in groups.iter().enumerate() {
        if horizontal(i) {
            let ids: Vec<usize> = (0..a).map(|_| g.new_crossing(h_over)).collect();
            for w in ids.windows(2) {
                g.link((w[0], NE), (w[1], NW));
                g.link((w[0], SE), (w[1], SW));
            }
            if i == 0 {
                nw = (ids[0], NW);
                sw = (ids[0], SW);
            } else {
                // append on the right
                g.link(ne, (ids[0], NW));
                g.link(se, (ids[0], SW));
            }
            ne = (*ids.last().unwrap(), NE);
            se = (*ids.last().unwrap(), SE);
        } else {
            let ids: Vec<usize> = (0..a).map(|_| g.new_crossing(v_over)).collect();
            for w in ids.windows(2) {
                g.link((w[0], SW), (w[1], NW));
                g.link((w[0], SE), (w[1], NE));
            }
            if i == 0 {
                nw = (ids[0], NW);
                ne = (ids[0], NE);
            } else {
                // append at the bottom
                g.link(sw, (ids[0], NW));
                g.link(se, (ids[0], NE));
            }
            sw = (*ids.last().unwrap(), SW);
            se = (*ids.last().unwrap(), SE);
        }
    }
    // numerator closure: join the corners over the top and under the bottom
    g.link(nw, ne);
    g.link(sw, se);
    g.into_diagram(name)
}

/// All-positive continued fraction of `p/q` with `0 < q < p`.
pub fn continued_fraction(mut p: u64, mut q: u64) -> Vec<u64> {
    assert!(q > 0 && p > q);
    let mut cf = vec![];
    loop {
        cf.push(p / q);
        let r = p % q;
        if r == 0 {
            break;
        }
        p = q;
        q = r;
    }
    cf
}

#[cfg(test)]
mod tests {
    use super::super::alexander::{alexander_integral, determinant_abs};
    use super::super::presentation::wirtinger;
    use super::*;
    use crate::algebra::{LaurentPoly, Rationals, Q};
    use num_bigint::BigInt;

    fn poly(coeffs: &[i64]) -> LaurentPoly<Rationals> {
        LaurentPoly::from_coeffs(
            Rationals,
            0,
            coeffs.iter().map(|&n| Q::from_integer(n.into())).collect(),
        )
    }

    #[test]
    fn pretzel_trefoil() {
        // P(1,1,1) is a trefoil
        let d = pretzel_diagram("p111", &[1, 1, 1]).unwrap();
        assert_eq!(d.crossing_count(), 3);
        let p = wirtinger(&d);
        assert!(p.is_infinite_cyclic_abelianization());
        let delta = alexander_integral(&p);
        assert!(delta.eq_up_to_unit(&poly(&[1, -1, 1])));
    }

    #[test]
    fn pretzel_component_check() {
        // P(2,2) is a link, not a knot
        assert!(matches!(
            pretzel_diagram("p22", &[2, 2]),
            Err(KnotError::NotAKnot)
        ));
    }

    #[test]
    fn rational_figure_eight() {
        // 5/2 = [2,2] gives the figure-eight knot, determinant 5
        let d = rational_knot_diagram("fig8", &continued_fraction(5, 2)).unwrap();
        assert_eq!(d.crossing_count(), 4);
        let p = wirtinger(&d);
        let delta = alexander_integral(&p);
        assert!(delta.eq_up_to_unit(&poly(&[1, -3, 1])));
        assert_eq!(determinant_abs(&p), BigInt::from(5));
    }

    #[test]
    fn rational_torus_knots() {
        // 3/1 = [3]: trefoil; 5/1 = [5]: (2,5) torus knot, determinant 5
        let d = rational_knot_diagram("t23", &continued_fraction(3, 1)).unwrap();
        let p = wirtinger(&d);
        assert!(alexander_integral(&p).eq_up_to_unit(&poly(&[1, -1, 1])));
        let d = rational_knot_diagram("t25", &continued_fraction(5, 1)).unwrap();
        let p = wirtinger(&d);
        assert!(alexander_integral(&p).eq_up_to_unit(&poly(&[1, -1, 1, -1, 1])));
    }

    #[test]
    fn continued_fraction_of_25_9() {
        assert_eq!(continued_fraction(25, 9), vec![2, 1, 3, 2]);
        assert_eq!(continued_fraction(25, 11), vec![2, 3, 1, 2]);
    }
}
