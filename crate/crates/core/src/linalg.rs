//! Dense exact linear algebra over a [`FieldSpec`]: canonical reduced row
//! echelon form, kernels, spans and subspace comparisons.
//!
//! Vectors are row vectors. A [`Subspace`] is always stored by its canonical
//! RREF basis, so two subspaces are equal exactly when their stored bases
//! are equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, size: usize) -> Self {
        let mut m = Self::zero(field, size, size);
        for i in 0..size {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors, all of length `cols`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zero(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    actual: col.len(),
                });
            }
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                    .fold(self.field.zero(), |acc, (x, y)| &acc + &(x * y))
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let i = r * self.cols + c;
            if !self.data[i].is_zero() {
                self.data[i] = &self.data[i] * s;
            }
        }
    }

    /// `row[target] -= factor * row[source]`
    fn eliminate(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let s = &self.data[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            let t = &mut self.data[target * self.cols + c];
            *t = &*t - &delta;
        }
    }

    /// In-place reduction to canonical RREF. Returns the pivot columns.
    ///
    /// The pivot of each step is the first column with a nonzero entry at or
    /// below the current row; the pivot row is the first such row.
    fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inv().expect("pivot is nonzero");
            self.scale_row(row, &inv);
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    self.eliminate(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        m.reduce();
        m
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// Null space `{v : self · v = 0}` as a canonical subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<Scalar>> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![self.field.zero(); self.cols];
                v[free] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, free);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, basis).expect("kernel vectors have ambient length")
    }

    /// Canonical solution of `self · x = rhs` (free variables set to zero),
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: rhs.len(),
            });
        }
        let mut aug = Matrix::zero(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let pivots = aug.reduce();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// A linear subspace of `F^ambient_dim`, held as its canonical RREF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::from_rref(Matrix::identity(field, ambient_dim))
    }

    /// Row space of the given vectors.
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        Ok(Self::from_rref(
            Matrix::from_rows(field, ambient_dim, vectors)?.rref(),
        ))
    }

    fn from_rref(m: Matrix) -> Self {
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for r in 0..m.rows() {
            let row = m.row(r);
            if let Some(p) = row.iter().position(|x| !x.is_zero()) {
                pivots.push(p);
                basis.push(row.to_vec());
            }
        }
        Subspace {
            field: m.field(),
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient_dim, self.basis.clone())
            .expect("basis rows have ambient length")
    }

    /// Reduces `v` against the basis. The result is zero iff `v` is a member.
    fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = &*x - &(&factor * b);
                }
            }
        }
        v
    }

    pub fn member(&self, v: &[Scalar]) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(self.residual(v).iter().all(Scalar::is_zero))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_dim(other.ambient_dim)?;
        Ok(other
            .basis
            .iter()
            .all(|v| self.residual(v).iter().all(Scalar::is_zero)))
    }

    /// Equality of subspaces; errors if the ambient dimensions differ.
    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_dim(other.ambient_dim)?;
        Ok(self.basis == other.basis)
    }

    /// Smallest subspace containing both.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim(other.ambient_dim)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.field, self.ambient_dim, rows)
    }

    fn check_dim(&self, actual: usize) -> Result<()> {
        if actual == self.ambient_dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                actual,
            })
        }
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}^{})",
            self.dim(),
            self.field,
            self.ambient_dim
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rational;
    const F3: FieldSpec = FieldSpec::Prime(3);

    fn vec_of(field: FieldSpec, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let z = Matrix::from_i64(Q, &[&[0]]).unwrap();
        assert_eq!(z.rref(), z);
        let id = Matrix::identity(Q, 2);
        assert_eq!(id.rref(), id);
        let m = Matrix::from_i64(Q, &[&[2, 4], &[1, 2]]).unwrap();
        assert_eq!(m.rref(), Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]).unwrap());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zero(Q, 2, 3).kernel().dim(), 3);
        assert_eq!(Matrix::identity(Q, 3).kernel().dim(), 0);
        let k = Matrix::from_i64(F3, &[&[1, 2]]).unwrap().kernel();
        assert_eq!(k.basis(), &[vec_of(F3, &[1, 1])]);
    }

    #[test]
    fn member_examples() {
        let s = Subspace::span(Q, 2, vec![vec_of(Q, &[1, 0])]).unwrap();
        assert!(s.member(&vec_of(Q, &[0, 0])).unwrap());
        assert!(!s.member(&vec_of(Q, &[0, 1])).unwrap());
        let t = Subspace::span(F3, 2, vec![vec_of(F3, &[1, 1])]).unwrap();
        assert!(t.member(&vec_of(F3, &[2, 2])).unwrap());
        assert_eq!(
            s.member(&vec_of(Q, &[1, 0, 0])),
            Err(Error::DimensionMismatch {
                expected: 2,
                actual: 3
            })
        );
    }

    #[test]
    fn subspace_equal_examples() {
        let s = Subspace::span(Q, 2, vec![vec_of(Q, &[1, 0])]).unwrap();
        assert!(s.equals(&s).unwrap());
        let t = Subspace::span(Q, 2, vec![vec_of(Q, &[0, 1])]).unwrap();
        assert!(!s.equals(&t).unwrap());
        let u = Subspace::span(Q, 2, vec![vec_of(Q, &[1, 1]), vec_of(Q, &[1, 2])]).unwrap();
        assert!(u.equals(&Subspace::full(Q, 2)).unwrap());
        assert!(s.equals(&Subspace::zero(Q, 3)).is_err());
    }

    #[test]
    fn solve_canonical() {
        let m = Matrix::from_i64(Q, &[&[1, 1, 0], &[0, 0, 1]]).unwrap();
        let x = m.solve(&vec_of(Q, &[3, 4])).unwrap().unwrap();
        assert_eq!(x, vec_of(Q, &[3, 0, 4]));
        let inconsistent = Matrix::from_i64(Q, &[&[1, 1], &[2, 2]]).unwrap();
        assert_eq!(inconsistent.solve(&vec_of(Q, &[1, 3])).unwrap(), None);
    }

    fn matrix(field: FieldSpec) -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..7).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |vals| {
                let rows = vals
                    .chunks(c)
                    .map(|ch| ch.iter().map(|&x| field.from_i64(x)).collect())
                    .collect();
                Matrix::from_rows(field, c, rows).unwrap()
            })
        })
    }

    fn any_matrix() -> impl Strategy<Value = Matrix> {
        prop_oneof![
            matrix(FieldSpec::Rational),
            matrix(FieldSpec::Prime(3)),
            matrix(FieldSpec::Prime(5)),
        ]
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_preserves_row_space(m in any_matrix()) {
            let r = m.rref();
            prop_assert_eq!(r.rref(), r.clone());
            let original = Subspace::span(m.field(), m.cols(), m.row_vecs()).unwrap();
            let reduced = Subspace::span(m.field(), m.cols(), r.row_vecs()).unwrap();
            prop_assert!(original.contains(&reduced).unwrap());
            prop_assert!(reduced.contains(&original).unwrap());
            for row in m.row_vecs() {
                prop_assert!(reduced.member(&row).unwrap());
            }
        }

        #[test]
        fn rank_nullity(m in any_matrix()) {
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.dim(), m.cols());
            for v in k.basis() {
                prop_assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn canonical_bases_are_deterministic(m in any_matrix()) {
            let a = Subspace::span(m.field(), m.cols(), m.row_vecs()).unwrap();
            let mut rows = m.row_vecs();
            rows.reverse();
            let b = Subspace::span(m.field(), m.cols(), rows).unwrap();
            prop_assert_eq!(a.basis(), b.basis());
        }
    }
}
