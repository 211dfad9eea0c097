//! Dense exact matrices: Gaussian elimination, rank, kernel, solve.
//!
//! Elimination uses first-nonzero pivoting and produces reduced row
//! echelon form, so kernel bases and derived data come out in a fixed,
//! reproducible order.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::poly::Poly;
use std::fmt;

/// A dense rows × cols matrix over one [`FieldSpec`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

/// Result of row reduction: the RREF matrix and its pivot columns.
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zero(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for i in 0..rows {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Integer-entry convenience constructor, mostly for tests.
    pub fn from_i64(field: FieldSpec, data: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            data.iter()
                .map(|row| row.iter().map(|&v| field.int(v)).collect())
                .collect(),
        )
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.field.is_one(self.get(i, j))
                    } else {
                        self.field.is_zero(self.get(i, j))
                    }
                })
            })
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.sub(self.get(i, j), other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.neg(self.get(i, j))
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.mul(self.get(i, j), c)
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix action on a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !f.is_zero(a) && !f.is_zero(&v[j]) {
                        acc = f.add(&acc, &f.mul(a, &v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for col in 0..a.cols {
            if pr >= a.rows {
                break;
            }
            let found = (pr..a.rows).find(|&r| !f.is_zero(a.get(r, col)));
            let r = match found {
                Some(r) => r,
                None => continue,
            };
            if r != pr {
                for j in 0..a.cols {
                    let x = a.get(r, j).clone();
                    let y = a.get(pr, j).clone();
                    a.set(r, j, y);
                    a.set(pr, j, x);
                }
            }
            let inv = f.inv(a.get(pr, col)).expect("pivot is nonzero");
            for j in 0..a.cols {
                let v = f.mul(a.get(pr, j), &inv);
                a.set(pr, j, v);
            }
            for row in 0..a.rows {
                if row == pr || f.is_zero(a.get(row, col)) {
                    continue;
                }
                let factor = a.get(row, col).clone();
                for j in 0..a.cols {
                    let v = f.sub(a.get(row, j), &f.mul(&factor, a.get(pr, j)));
                    a.set(row, j, v);
                }
            }
            pivots.push(col);
            pr += 1;
        }
        Rref { matrix: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel {v : self·v = 0}, in echelon order:
    /// one vector per free column, ascending.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let Rref { matrix: a, pivots } = self.rref();
        let pivot_set: std::collections::BTreeMap<usize, usize> = pivots
            .iter()
            .enumerate()
            .map(|(row, &col)| (col, row))
            .collect();
        let mut basis = Vec::new();
        for fc in 0..self.cols {
            if pivot_set.contains_key(&fc) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (&pc, &row) in &pivot_set {
                v[pc] = f.neg(a.get(row, fc));
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of self·x = b, if any (free variables set to zero).
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let rhs = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        self.solve_matrix(&rhs).map(|m| m.column(0))
    }

    /// Columnwise simultaneous solve: X with self·X = rhs.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let f = self.field;
        let aug = self.hstack(rhs);
        let Rref { matrix: a, pivots } = aug.rref();
        // Any pivot inside the RHS block means the system is inconsistent.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(f, self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, a.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Inverse, if square and invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let x = self.solve_matrix(&id)?;
        if self.mul(&x).is_identity() {
            Some(x)
        } else {
            None
        }
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        let mut a = self.clone();
        let mut det = f.one();
        for col in 0..a.cols {
            let found = (col..a.rows).find(|&r| !f.is_zero(a.get(r, col)));
            let r = match found {
                Some(r) => r,
                None => return f.zero(),
            };
            if r != col {
                det = f.neg(&det);
                for j in 0..a.cols {
                    let x = a.get(r, j).clone();
                    let y = a.get(col, j).clone();
                    a.set(r, j, y);
                    a.set(col, j, x);
                }
            }
            let p = a.get(col, col).clone();
            det = f.mul(&det, &p);
            let inv = f.inv(&p).expect("pivot nonzero");
            for row in col + 1..a.rows {
                if f.is_zero(a.get(row, col)) {
                    continue;
                }
                let factor = f.mul(a.get(row, col), &inv);
                for j in col..a.cols {
                    let v = f.sub(a.get(row, j), &f.mul(&factor, a.get(col, j)));
                    a.set(row, j, v);
                }
            }
        }
        det
    }

    /// Flattens row-major into a vector, for Krylov-style dependence
    /// hunting on matrix powers.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    /// Monic minimal polynomial of a square matrix.
    pub fn min_poly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        let mut powers: Vec<Matrix> = vec![Matrix::identity(f, self.rows)];
        loop {
            // Stack the flattened powers as columns and look for the first
            // linear dependence; its coefficients are the minimal polynomial.
            let cols: Vec<Vec<Scalar>> = powers.iter().map(|m| m.flatten()).collect();
            let next = powers.last().unwrap().mul(self);
            let mut all = cols;
            all.push(next.flatten());
            let m = Matrix::from_columns(f, self.rows * self.cols, &all);
            let ker = m.kernel_basis();
            if let Some(v) = ker.first() {
                // Echelon order puts the dependence with the highest power
                // last; normalise monic.
                let mut coeffs = v.clone();
                let lead = coeffs.last().unwrap().clone();
                let inv = f.inv(&lead).expect("leading coefficient nonzero");
                for c in &mut coeffs {
                    *c = f.mul(c, &inv);
                }
                return Poly::new(f, coeffs);
            }
            powers.push(next);
            assert!(
                powers.len() <= self.rows + 1,
                "minimal polynomial search exceeded dimension bound"
            );
        }
    }

    /// Evaluates a polynomial at this matrix (Horner).
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        let mut acc = Matrix::zero(f, self.rows, self.cols);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..self.rows {
                let v = f.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        let mut acc = f.zero();
        for i in 0..self.rows {
            acc = f.add(&acc, self.get(i, i));
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of k^n held as an echelonised basis (columns), with
/// membership tests and coordinate extraction.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ambient: usize,
    pub field: FieldSpec,
    /// ambient × dim matrix whose columns are the basis, in RREF row space
    /// order (deterministic).
    pub basis: Matrix,
}

impl Subspace {
    pub fn from_spanning(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        // Echelonise the row space of the transposed span, then read the
        // nonzero rows back as basis columns.
        if vectors.is_empty() {
            return Subspace {
                ambient,
                field,
                basis: Matrix::zero(field, ambient, 0),
            };
        }
        let m = Matrix::from_rows(field, vectors.to_vec());
        let Rref { matrix: r, pivots } = m.rref();
        let cols: Vec<Vec<Scalar>> = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace {
            ambient,
            field,
            basis: Matrix::from_columns(field, ambient, &cols),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    /// Coordinates of v in this basis, if v lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.basis.solve(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.basis.cols).map(|j| self.basis.column(j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    // Test-only oracle: rank by exhaustive minor expansion, fully
    // independent of the elimination path.
    fn rank_by_minors(m: &Matrix) -> usize {
        fn det_rec(m: &Matrix, rows: &[usize], cols: &[usize]) -> Scalar {
            let f = m.field;
            if rows.is_empty() {
                return f.one();
            }
            let mut acc = f.zero();
            let mut sign = f.one();
            for (k, &c) in cols.iter().enumerate() {
                let a = m.get(rows[0], c);
                if !f.is_zero(a) {
                    let sub_rows = &rows[1..];
                    let sub_cols: Vec<usize> =
                        cols.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x).collect();
                    let minor = det_rec(m, sub_rows, &sub_cols);
                    acc = f.add(&acc, &f.mul(&sign, &f.mul(a, &minor)));
                }
                sign = f.neg(&sign);
            }
            acc
        }
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in combos(n, k - 1) {
                    if rest.iter().all(|&x| x > first) {
                        let mut v = vec![first];
                        v.append(&mut rest);
                        out.push(v);
                    }
                }
            }
            out
        }
        for k in (1..=m.rows.min(m.cols)).rev() {
            for rows in combos(m.rows, k) {
                for cols in combos(m.cols, k) {
                    if !m.field.is_zero(&det_rec(m, &rows, &cols)) {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let m = Matrix::zero(q(), 2, 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![q().one(), q().zero()]);
        assert_eq!(k[1], vec![q().zero(), q().one()]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = Matrix::identity(q(), 2);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        // [[1,1],[2,2]] over Q: hand row-reduction gives x0 + x1 = 0,
        // so the kernel is spanned by (-1, 1); echelon normalisation
        // puts the free coordinate equal to 1.
        let m = Matrix::from_i64(q(), &[&[1, 1], &[2, 2]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![q().int(-1), q().int(1)]);
        // span check: m·v = 0
        assert!(m.apply(&k[0]).iter().all(|x| q().is_zero(x)));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(q(), 4).rank(), 4);
        assert_eq!(Matrix::zero(q(), 3, 5).rank(), 0);
        // [[1,2],[2,4]]: second row is twice the first.
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank(), rank_by_minors(&m));
    }

    #[test]
    fn solve_examples() {
        let f = q();
        let id = Matrix::identity(f, 3);
        let b = vec![f.int(4), f.int(-1), f.int(7)];
        assert_eq!(id.solve(&b).unwrap(), b);

        let z = Matrix::zero(f, 2, 2);
        assert!(z.solve(&[f.int(1), f.int(0)]).is_none());

        // [[2]] x = (3)  =>  x = 3/2 exactly.
        let m = Matrix::from_i64(f, &[&[2]]);
        assert_eq!(m.solve(&[f.int(3)]).unwrap(), vec![f.ratio(3, 2).unwrap()]);
    }

    #[test]
    fn rank_nullity_and_exact_solve_over_f7() {
        let f = FieldSpec::prime_field(7).unwrap();
        let m = Matrix::from_i64(f, &[&[1, 2, 3], &[4, 5, 6], &[5, 0, 2]]);
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols);
        let b = vec![f.int(1), f.int(2), f.int(3)];
        if let Some(x) = m.solve(&b) {
            assert_eq!(m.apply(&x), b);
        }
    }

    #[test]
    fn min_poly_of_nilpotent_and_idempotent() {
        let f = q();
        let n = Matrix::from_i64(f, &[&[0, 1], &[0, 0]]);
        // t^2
        let p = n.min_poly();
        assert_eq!(p.degree(), 2);
        assert!(n.eval_poly(&p).is_zero());

        let e = Matrix::from_i64(f, &[&[1, 0], &[0, 0]]);
        // t^2 - t
        let p = e.min_poly();
        assert_eq!(p.degree(), 2);
        assert!(e.eval_poly(&p).is_zero());
    }

    #[test]
    fn det_and_inverse() {
        let f = q();
        let m = Matrix::from_i64(f, &[&[2, 1], &[1, 1]]);
        assert_eq!(m.det(), f.int(1));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
    }

    #[test]
    fn subspace_membership_and_coords() {
        let f = q();
        let s = Subspace::from_spanning(
            f,
            3,
            &[
                vec![f.int(1), f.int(0), f.int(1)],
                vec![f.int(0), f.int(1), f.int(1)],
                vec![f.int(1), f.int(1), f.int(2)],
            ],
        );
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[f.int(2), f.int(3), f.int(5)]));
        assert!(!s.contains(&[f.int(1), f.int(0), f.int(0)]));
    }
}
