//! Matrix reduction over `F[t^{±1}]` for a coefficient field `F`.
//!
//! The ring is Euclidean after unit-shifting entries to honest polynomials,
//! with the polynomial span as degree function. Diagonalization pivots on
//! the entry of minimal span, ties broken in row-major order, so outputs are
//! deterministic.

use super::field::Field;
use super::laurent::LaurentPoly;
use super::matrix::{DiagonalizationResult, ElementaryOp, Matrix};

type LMat<F> = Matrix<LaurentPoly<F>>;

pub fn laurent_zero<F: Field>(field: &F, rows: usize, cols: usize) -> LMat<F> {
    Matrix::from_fn(rows, cols, |_, _| LaurentPoly::zero(field.clone()))
}

pub fn laurent_identity<F: Field>(field: &F, n: usize) -> LMat<F> {
    Matrix::from_fn(n, n, |r, c| {
        if r == c {
            LaurentPoly::one(field.clone())
        } else {
            LaurentPoly::zero(field.clone())
        }
    })
}

pub fn laurent_mat_mul<F: Field>(field: &F, a: &LMat<F>, b: &LMat<F>) -> LMat<F> {
    assert_eq!(a.cols, b.rows, "dimension mismatch");
    Matrix::from_fn(a.rows, b.cols, |r, c| {
        let mut acc = LaurentPoly::zero(field.clone());
        for k in 0..a.cols {
            acc = acc.add(&a.at(r, k).mul(b.at(k, c)));
        }
        acc
    })
}

struct Work<F: Field> {
    field: F,
    a: LMat<F>,
    u: LMat<F>,
    v: LMat<F>,
    log: Vec<ElementaryOp<LaurentPoly<F>>>,
}

impl<F: Field> Work<F> {
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
    fn add_row_mul(&mut self, src: usize, dst: usize, f: &LaurentPoly<F>) {
        if f.is_zero() {
            return;
        }
        for c in 0..self.a.cols {
            let t = self.a.at(src, c).mul(f);
            let nv = self.a.at(dst, c).add(&t);
            self.a.set(dst, c, nv);
        }
        for c in 0..self.u.cols {
            let t = self.u.at(src, c).mul(f);
            let nv = self.u.at(dst, c).add(&t);
            self.u.set(dst, c, nv);
        }
        self.log.push(ElementaryOp::AddRowMul { src, dst, factor: f.clone() });
    }
    fn add_col_mul(&mut self, src: usize, dst: usize, f: &LaurentPoly<F>) {
        if f.is_zero() {
            return;
        }
        for r in 0..self.a.rows {
            let t = self.a.at(r, src).mul(f);
            let nv = self.a.at(r, dst).add(&t);
            self.a.set(r, dst, nv);
        }
        for r in 0..self.v.rows {
            let t = self.v.at(r, src).mul(f);
            let nv = self.v.at(r, dst).add(&t);
            self.v.set(r, dst, nv);
        }
        self.log.push(ElementaryOp::AddColMul { src, dst, factor: f.clone() });
    }
    fn scale_row(&mut self, row: usize, unit: &LaurentPoly<F>) {
        for c in 0..self.a.cols {
            let nv = self.a.at(row, c).mul(unit);
            self.a.set(row, c, nv);
        }
        for c in 0..self.u.cols {
            let nv = self.u.at(row, c).mul(unit);
            self.u.set(row, c, nv);
        }
        self.log.push(ElementaryOp::ScaleRow { row, unit: unit.clone() });
    }
}

fn span<F: Field>(p: &LaurentPoly<F>) -> usize {
    p.poly_degree().expect("nonzero entry")
}

/// Diagonalization over `F[t^{±1}]`: returns diagonal entries normalized to
/// monic polynomials with minimal exponent 0, satisfying the divisibility
/// chain, together with invertible transforms and the operation log.
pub fn diagonalize_laurent<F: Field>(field: &F, a: &LMat<F>) -> DiagonalizationResult<LaurentPoly<F>> {
    let mut w = Work {
        field: field.clone(),
        a: a.clone(),
        u: laurent_identity(field, a.rows),
        v: laurent_identity(field, a.cols),
        log: vec![],
    };
    let n = a.rows.min(a.cols);
    let mut k = 0;
    while k < n {
        let mut pivot: Option<(usize, usize)> = None;
        for r in k..w.a.rows {
            for c in k..w.a.cols {
                if !w.a.at(r, c).is_zero() {
                    let better = match pivot {
                        None => true,
                        Some((pr, pc)) => span(w.a.at(r, c)) < span(w.a.at(pr, pc)),
                    };
                    if better {
                        pivot = Some((r, c));
                    }
                }
            }
        }
        let (pr, pc) = match pivot {
            Some(p) => p,
            None => break,
        };
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);

        'reduce: loop {
            for r in k + 1..w.a.rows {
                if !w.a.at(r, k).is_zero() {
                    let (q, _) = w.a.at(r, k).divmod(w.a.at(k, k)).unwrap();
                    w.add_row_mul(k, r, &q.neg());
                    if !w.a.at(r, k).is_zero() {
                        w.swap_rows(k, r);
                        continue 'reduce;
                    }
                }
            }
            for c in k + 1..w.a.cols {
                if !w.a.at(k, c).is_zero() {
                    let (q, _) = w.a.at(k, c).divmod(w.a.at(k, k)).unwrap();
                    w.add_col_mul(k, c, &q.neg());
                    if !w.a.at(k, c).is_zero() {
                        w.swap_cols(k, c);
                        continue 'reduce;
                    }
                }
            }
            break;
        }

        let mut clean = true;
        'outer: for r in k + 1..w.a.rows {
            for c in k + 1..w.a.cols {
                if !w.a.at(k, k).divides(w.a.at(r, c)) {
                    let one = LaurentPoly::one(w.field.clone());
                    w.add_row_mul(r, k, &one);
                    clean = false;
                    break 'outer;
                }
            }
        }
        if clean {
            k += 1;
        }
    }
    // normalize diagonal entries to monic, minimal exponent 0
    for i in 0..n {
        let d = w.a.at(i, i).clone();
        if d.is_zero() {
            continue;
        }
        let lead = d.leading_coeff().unwrap();
        let inv = w.field.inv(&lead).unwrap();
        let unit = LaurentPoly::monomial(w.field.clone(), inv, -d.min_exp());
        if !unit.eq_up_to_unit(&LaurentPoly::one(w.field.clone())) || unit != LaurentPoly::one(w.field.clone()) {
            w.scale_row(i, &unit);
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

/// A free-module basis of the right kernel `{v : A v = 0}` along with the
/// column transform used to find it, so kernel members can be re-expressed
/// in the basis exactly.
#[derive(Debug, Clone)]
pub struct KernelBasis<F: Field> {
    pub field: F,
    /// Basis vectors, each of length `a.cols`.
    pub vectors: Vec<Vec<LaurentPoly<F>>>,
    /// Invertible `cols x cols` transform; `a * col_transform` is column echelon.
    pub col_transform: LMat<F>,
    /// Exact inverse of `col_transform`.
    pub col_transform_inv: LMat<F>,
    /// Columns of `a * col_transform` that vanish (kernel positions).
    pub zero_cols: Vec<usize>,
}

impl<F: Field> KernelBasis<F> {
    /// Coordinates of `v` in the kernel basis; `None` when `v` is not in the
    /// span (equivalently, not in the kernel).
    pub fn express(&self, v: &[LaurentPoly<F>]) -> Option<Vec<LaurentPoly<F>>> {
        let n = self.col_transform.rows;
        assert_eq!(v.len(), n);
        let mut y = vec![LaurentPoly::zero(self.field.clone()); n];
        for (r, item) in y.iter_mut().enumerate() {
            let mut acc = LaurentPoly::zero(self.field.clone());
            for c in 0..n {
                acc = acc.add(&self.col_transform_inv.at(r, c).mul(&v[c]));
            }
            *item = acc;
        }
        let mut coords = vec![];
        for (idx, val) in y.iter().enumerate() {
            if self.zero_cols.contains(&idx) {
                coords.push(val.clone());
            } else if !val.is_zero() {
                return None;
            }
        }
        Some(coords)
    }
}

/// Column Hermite reduction computing a basis of the right kernel of `a`.
pub fn laurent_kernel<F: Field>(field: &F, a: &LMat<F>) -> KernelBasis<F> {
    let mut m = a.clone();
    let mut v = laurent_identity(field, a.cols);
    let mut vinv = laurent_identity(field, a.cols);

    // col[dst] += f * col[src], with the inverse op applied to vinv rows.
    let mut add_col = |m: &mut LMat<F>, v: &mut LMat<F>, vinv: &mut LMat<F>, src: usize, dst: usize, f: &LaurentPoly<F>| {
        for r in 0..m.rows {
            let t = m.at(r, src).mul(f);
            let nv = m.at(r, dst).add(&t);
            m.set(r, dst, nv);
        }
        for r in 0..v.rows {
            let t = v.at(r, src).mul(f);
            let nv = v.at(r, dst).add(&t);
            v.set(r, dst, nv);
        }
        // inverse: row[src] -= f * row[dst] applied on the left accumulator
        for c in 0..vinv.cols {
            let t = vinv.at(dst, c).mul(f);
            let nv = vinv.at(src, c).sub(&t);
            vinv.set(src, c, nv);
        }
    };
    let swap_col = |m: &mut LMat<F>, v: &mut LMat<F>, vinv: &mut LMat<F>, i: usize, j: usize| {
        m.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    };

    let mut processed = 0usize;
    for r in 0..m.rows {
        if processed >= m.cols {
            break;
        }
        loop {
            // find min-span nonzero entry in row r among unprocessed columns
            let mut best: Option<usize> = None;
            for c in processed..m.cols {
                if !m.at(r, c).is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => span(m.at(r, c)) < span(m.at(r, b)),
                    };
                    if better {
                        best = Some(c);
                    }
                }
            }
            let pivot = match best {
                Some(c) => c,
                None => break, // row clear
            };
            let mut others = false;
            for c in processed..m.cols {
                if c == pivot || m.at(r, c).is_zero() {
                    continue;
                }
                let (q, _) = m.at(r, c).divmod(m.at(r, pivot)).unwrap();
                add_col(&mut m, &mut v, &mut vinv, pivot, c, &q.neg());
                if !m.at(r, c).is_zero() {
                    others = true;
                }
            }
            if !others {
                swap_col(&mut m, &mut v, &mut vinv, processed, pivot);
                processed += 1;
                break;
            }
        }
    }

    let zero_cols: Vec<usize> = (0..m.cols)
        .filter(|&c| (0..m.rows).all(|r| m.at(r, c).is_zero()))
        .collect();
    let vectors = zero_cols.iter().map(|&c| v.col(c)).collect();
    KernelBasis {
        field: field.clone(),
        vectors,
        col_transform: v,
        col_transform_inv: vinv,
        zero_cols,
    }
}

/// Decides membership of `v` in the column span of `m` over `F[t^{±1}]`,
/// using a diagonalization of `m`.
pub fn submodule_membership<F: Field>(
    field: &F,
    m: &LMat<F>,
    v: &[LaurentPoly<F>],
) -> bool {
    assert_eq!(v.len(), m.rows);
    let res = diagonalize_laurent(field, m);
    // U m V = D, so v in im(m) iff U v in im(D).
    let uv: Vec<LaurentPoly<F>> = (0..m.rows)
        .map(|r| {
            let mut acc = LaurentPoly::zero(field.clone());
            for c in 0..m.rows {
                acc = acc.add(&res.row_transform.at(r, c).mul(&v[c]));
            }
            acc
        })
        .collect();
    for (i, val) in uv.iter().enumerate() {
        if i < res.diagonal.len() {
            let d = &res.diagonal[i];
            if d.is_zero() {
                if !val.is_zero() {
                    return false;
                }
            } else if !d.divides(val) {
                return false;
            }
        } else if !val.is_zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::field::Rationals;
    use super::*;
    use crate::algebra::Q;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn poly(coeffs: &[i64]) -> LaurentPoly<Rationals> {
        LaurentPoly::from_coeffs(Rationals, 0, coeffs.iter().map(|&n| q(n)).collect())
    }

    fn verify_diag(a: &LMat<Rationals>) -> Vec<LaurentPoly<Rationals>> {
        let res = diagonalize_laurent(&Rationals, a);
        let uav = laurent_mat_mul(
            &Rationals,
            &laurent_mat_mul(&Rationals, &res.row_transform, a),
            &res.col_transform,
        );
        for r in 0..uav.rows {
            for c in 0..uav.cols {
                if r == c && r < res.diagonal.len() {
                    assert_eq!(*uav.at(r, c), res.diagonal[r]);
                } else {
                    assert!(uav.at(r, c).is_zero());
                }
            }
        }
        for i in 1..res.diagonal.len() {
            assert!(res.diagonal[i - 1].divides(&res.diagonal[i]));
        }
        res.diagonal
    }

    #[test]
    fn diagonal_input_stays_diagonal() {
        let tm1 = poly(&[-1, 1]);
        let a = Matrix::from_rows(vec![
            vec![tm1.clone(), LaurentPoly::zero(Rationals)],
            vec![LaurentPoly::zero(Rationals), tm1.clone()],
        ]);
        let d = verify_diag(&a);
        assert_eq!(d, vec![tm1.clone(), tm1]);
    }

    #[test]
    fn shear_matrix_of_units_is_invertible() {
        // [[t, 1],[0, t]] has determinant t^2, a unit of F[t^{±1}], so the
        // canonical diagonal is (1, 1). (Over F[t] it would be (1, t^2);
        // monomials are units here.)
        let a = Matrix::from_rows(vec![
            vec![poly(&[0, 1]), poly(&[1])],
            vec![LaurentPoly::zero(Rationals), poly(&[0, 1])],
        ]);
        let d = verify_diag(&a);
        assert_eq!(d, vec![poly(&[1]), poly(&[1])]);
    }

    #[test]
    fn shear_matrix_with_nonunit_pivot() {
        // [[t-1, 1],[0, t-1]] -> diag(1, (t-1)^2)
        let a = Matrix::from_rows(vec![
            vec![poly(&[-1, 1]), poly(&[1])],
            vec![LaurentPoly::zero(Rationals), poly(&[-1, 1])],
        ]);
        let d = verify_diag(&a);
        assert_eq!(d, vec![poly(&[1]), poly(&[1, -2, 1])]);
    }

    #[test]
    fn unit_normalization_of_scalar() {
        let a = Matrix::from_rows(vec![vec![poly(&[3, -9, 3])]]);
        let d = verify_diag(&a);
        assert_eq!(d, vec![poly(&[1, -3, 1])]);
    }

    #[test]
    fn kernel_of_row_with_cancelling_columns() {
        // A = [t-1, 1-t]: kernel basis {(1,1)}
        let a = Matrix::from_rows(vec![vec![poly(&[-1, 1]), poly(&[1, -1])]]);
        let k = laurent_kernel(&Rationals, &a);
        assert_eq!(k.vectors.len(), 1);
        let v = &k.vectors[0];
        assert!(v[0].eq_up_to_unit(&v[1]) && !v[0].is_zero());
        // identity has empty kernel
        let id = laurent_identity(&Rationals, 3);
        assert!(laurent_kernel(&Rationals, &id).vectors.is_empty());
        // [[0]] has kernel (1)
        let z = laurent_zero(&Rationals, 1, 1);
        let k = laurent_kernel(&Rationals, &z);
        assert_eq!(k.vectors.len(), 1);
    }

    #[test]
    fn kernel_express_roundtrip() {
        let a = Matrix::from_rows(vec![vec![poly(&[-1, 1]), poly(&[1, -1]), poly(&[0])]]);
        let k = laurent_kernel(&Rationals, &a);
        assert_eq!(k.vectors.len(), 2);
        // combination of the basis vectors must be expressible
        let comb: Vec<LaurentPoly<Rationals>> = (0..3)
            .map(|i| k.vectors[0][i].mul(&poly(&[2, 1])).add(&k.vectors[1][i]))
            .collect();
        let coords = k.express(&comb).unwrap();
        assert_eq!(coords.len(), 2);
        assert_eq!(coords[0], poly(&[2, 1]));
        // a vector outside the kernel is rejected
        let outside = vec![poly(&[1]), poly(&[0]), poly(&[0])];
        assert!(k.express(&outside).is_none());
    }

    #[test]
    fn membership_in_column_span() {
        // span of columns (t-1, 0) and (0, 2)
        let m = Matrix::from_rows(vec![
            vec![poly(&[-1, 1]), poly(&[0])],
            vec![poly(&[0]), poly(&[2])],
        ]);
        let yes = vec![poly(&[-1, 1]).mul(&poly(&[5, 3])), poly(&[7])];
        assert!(submodule_membership(&Rationals, &m, &yes));
        let no = vec![poly(&[1]), poly(&[0])];
        assert!(!submodule_membership(&Rationals, &m, &no));
    }
}
