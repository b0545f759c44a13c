//! Smith normal form over the integers with transform tracking.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::{DiagonalizationResult, ElementaryOp, Matrix};

type Z = BigInt;

struct Work {
    a: Matrix<Z>,
    u: Matrix<Z>,
    v: Matrix<Z>,
    log: Vec<ElementaryOp<Z>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.log.push(ElementaryOp::SwapRows(i, j));
    }
    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.log.push(ElementaryOp::SwapCols(i, j));
    }
    fn add_row_mul(&mut self, src: usize, dst: usize, f: &Z) {
        if f.is_zero() {
            return;
        }
        for c in 0..self.a.cols {
            let t = self.a.at(src, c) * f;
            *self.a.at_mut(dst, c) += t;
        }
        for c in 0..self.u.cols {
            let t = self.u.at(src, c) * f;
            *self.u.at_mut(dst, c) += t;
        }
        self.log.push(ElementaryOp::AddRowMul { src, dst, factor: f.clone() });
    }
    fn add_col_mul(&mut self, src: usize, dst: usize, f: &Z) {
        if f.is_zero() {
            return;
        }
        for r in 0..self.a.rows {
            let t = self.a.at(r, src) * f;
            *self.a.at_mut(r, dst) += t;
        }
        for r in 0..self.v.rows {
            let t = self.v.at(r, src) * f;
            *self.v.at_mut(r, dst) += t;
        }
        self.log.push(ElementaryOp::AddColMul { src, dst, factor: f.clone() });
    }
    fn negate_row(&mut self, i: usize) {
        for c in 0..self.a.cols {
            let t = -self.a.at(i, c).clone();
            self.a.set(i, c, t);
        }
        for c in 0..self.u.cols {
            let t = -self.u.at(i, c).clone();
            self.u.set(i, c, t);
        }
        self.log.push(ElementaryOp::ScaleRow { row: i, unit: -Z::from(1) });
    }
}

fn identity(n: usize) -> Matrix<Z> {
    Matrix::from_fn(n, n, |r, c| if r == c { Z::from(1) } else { Z::zero() })
}

/// Smith normal form of an integer matrix: returns nonnegative diagonal
/// entries satisfying `d1 | d2 | ...` along with invertible transforms and
/// the operation log. Total on all integer matrices.
pub fn smith_normal_form_int(a: &Matrix<Z>) -> DiagonalizationResult<Z> {
    let mut w = Work {
        a: a.clone(),
        u: identity(a.rows),
        v: identity(a.cols),
        log: vec![],
    };
    let n = a.rows.min(a.cols);
    let mut k = 0;
    while k < n {
        // pivot: smallest |entry| in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for r in k..w.a.rows {
            for c in k..w.a.cols {
                if !w.a.at(r, c).is_zero() {
                    let better = match pivot {
                        None => true,
                        Some((pr, pc)) => w.a.at(r, c).abs() < w.a.at(pr, pc).abs(),
                    };
                    if better {
                        pivot = Some((r, c));
                    }
                }
            }
        }
        let (pr, pc) = match pivot {
            Some(p) => p,
            None => break, // remaining block is zero
        };
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);

        // clear row and column k by division with remainder
        'reduce: loop {
            for r in k + 1..w.a.rows {
                if !w.a.at(r, k).is_zero() {
                    let q = div_round(w.a.at(r, k), w.a.at(k, k));
                    w.add_row_mul(k, r, &-q);
                    if !w.a.at(r, k).is_zero() {
                        // remainder is strictly smaller; promote it
                        w.swap_rows(k, r);
                        continue 'reduce;
                    }
                }
            }
            for c in k + 1..w.a.cols {
                if !w.a.at(k, c).is_zero() {
                    let q = div_round(w.a.at(k, c), w.a.at(k, k));
                    w.add_col_mul(k, c, &-q);
                    if !w.a.at(k, c).is_zero() {
                        w.swap_cols(k, c);
                        continue 'reduce;
                    }
                }
            }
            break;
        }

        // divisibility sweep: pivot must divide the rest of the block
        let mut clean = true;
        'outer: for r in k + 1..w.a.rows {
            for c in k + 1..w.a.cols {
                if !(w.a.at(r, c) % w.a.at(k, k)).is_zero() {
                    w.add_row_mul(r, k, &Z::from(1));
                    clean = false;
                    break 'outer;
                }
            }
        }
        if clean {
            if w.a.at(k, k).is_negative() {
                w.negate_row(k);
            }
            k += 1;
        }
    }
    let diagonal = (0..n).map(|i| w.a.at(i, i).clone()).collect();
    DiagonalizationResult {
        diagonal,
        row_transform: w.u,
        col_transform: w.v,
        op_log: w.log,
    }
}

/// Quotient rounding toward the nearest integer (balanced remainder).
fn div_round(a: &Z, b: &Z) -> Z {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    let two_r = r.abs() * Z::from(2);
    if two_r > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Multiplies integer matrices; helper for re-multiplication checks.
pub fn int_mat_mul(a: &Matrix<Z>, b: &Matrix<Z>) -> Matrix<Z> {
    assert_eq!(a.cols, b.rows);
    Matrix::from_fn(a.rows, b.cols, |r, c| {
        let mut acc = Z::zero();
        for k in 0..a.cols {
            acc += a.at(r, k) * b.at(k, c);
        }
        acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Z> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Z::from).collect())
                .collect(),
        )
    }

    fn check(a: &Matrix<Z>) -> Vec<Z> {
        let res = smith_normal_form_int(a);
        // re-multiply
        let uav = int_mat_mul(&int_mat_mul(&res.row_transform, a), &res.col_transform);
        for r in 0..uav.rows {
            for c in 0..uav.cols {
                let expected = if r == c && r < res.diagonal.len() {
                    res.diagonal[r].clone()
                } else {
                    Z::zero()
                };
                assert_eq!(*uav.at(r, c), expected, "entry ({},{})", r, c);
            }
        }
        // divisibility chain
        for i in 1..res.diagonal.len() {
            if !res.diagonal[i - 1].is_zero() {
                assert!((res.diagonal[i].clone() % res.diagonal[i - 1].clone()).is_zero());
            } else {
                assert!(res.diagonal[i].is_zero());
            }
        }
        res.diagonal
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        let d = check(&m(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(d, vec![Z::from(1), Z::from(6)]);
    }

    #[test]
    fn zero_matrix() {
        let d = check(&m(vec![vec![0, 0], vec![0, 0]]));
        assert_eq!(d, vec![Z::zero(), Z::zero()]);
    }

    #[test]
    fn one_by_one() {
        let d = check(&m(vec![vec![25]]));
        assert_eq!(d, vec![Z::from(25)]);
    }

    #[test]
    fn rectangular_example() {
        let d = check(&m(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]));
        assert_eq!(d, vec![Z::from(2), Z::from(2), Z::from(156)]);
    }
}
