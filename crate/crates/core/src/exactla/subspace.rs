use alloc::vec::Vec;
use core::ops::Range;

use num_traits::{One, Zero};

use super::{LinalgError, Matrix, Rational};

/// A linear subspace of `Q^ambient_dim`, stored by its canonical basis: the
/// nonzero rows of a reduced row-echelon matrix.
///
/// Derived equality compares canonical bases, which is set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, 0..ambient_dim)
    }

    /// Span of the standard basis vectors with indices in `range`.
    pub fn coordinate(ambient_dim: usize, range: Range<usize>) -> Self {
        let mut basis = Matrix::zeros(range.len(), ambient_dim);
        for (row, col) in range.clone().enumerate() {
            basis[(row, col)] = Rational::one();
        }
        Subspace {
            ambient_dim,
            basis,
            pivots: range.collect(),
        }
    }

    pub fn span(vectors: &[Vec<Rational>], ambient_dim: usize) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(ambient_dim, vectors.to_vec())?;
        Ok(Self::row_space(&m))
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (reduced, pivots) = m.rref_with_pivots();
        let rows = reduced.row_vecs().into_iter().take(pivots.len()).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: Matrix::from_rows(m.cols(), rows).expect("rows have ambient length"),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        self.check_len(v.len())?;
        let mut rem = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if rem[p].is_zero() {
                continue;
            }
            let factor = rem[p].clone();
            for (x, b) in rem.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x -= &factor * b;
                }
            }
        }
        Ok(rem)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient_dim)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(&rows, self.ambient_dim)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient_dim)?;
        let (du, dv) = (self.dim(), other.dim());
        if du == 0 || dv == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // Columns are u_1..u_du, -v_1..-v_dv; kernel vectors give a·u = b·v.
        let mut columns: Vec<Vec<Rational>> = self.basis_vectors();
        columns.extend(
            other
                .basis_vectors()
                .into_iter()
                .map(|v| v.into_iter().map(|x| -x).collect()),
        );
        let system = Matrix::from_columns(self.ambient_dim, &columns)?;
        let vectors: Vec<Vec<Rational>> = system
            .kernel()
            .into_iter()
            .map(|coeffs| {
                let mut w = alloc::vec![Rational::zero(); self.ambient_dim];
                for (c, row) in coeffs[..du].iter().zip(0..du) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, b) in w.iter_mut().zip(self.basis.row(row)) {
                        *x += c * b;
                    }
                }
                w
            })
            .collect();
        Subspace::span(&vectors, self.ambient_dim)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_len(other.ambient_dim)?;
        for v in self.basis.row_vecs() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_len(&self, len: usize) -> Result<(), LinalgError> {
        if len != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: len,
            });
        }
        Ok(())
    }
}
