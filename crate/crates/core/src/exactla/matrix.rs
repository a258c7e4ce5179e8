use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{LinalgError, Rational};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from its rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let count = rows.len();
        let mut entries = Vec::with_capacity(count * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: count,
            cols,
            entries,
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(src) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, src);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let scaled = &m[(row, j)] * &inv;
                m[(row, j)] = scaled;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    if m[(row, j)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &m[(row, j)];
                    m[(r, j)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    pub fn determinant(&self) -> Result<Rational, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(src) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if src != col {
                m.swap_rows(src, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &pivot;
                for j in col..n {
                    let delta = &factor * &m[(col, j)];
                    m[(r, j)] -= delta;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (reduced, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return Err(LinalgError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = reduced[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Basis of the null space `{ v : self * v = 0 }`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (reduced, pivots) = self.rref_with_pivots();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The unique reduced row-echelon form of `m`.
pub fn rref(m: &Matrix) -> Matrix {
    m.rref_with_pivots().0
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
        )
        .unwrap()
    }

    fn shift(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = int(1);
        }
        m
    }

    #[test]
    fn rref_examples() {
        assert_eq!(rref(&Matrix::identity(3)), Matrix::identity(3));
        assert_eq!(rref(&mat(&[&[2, 4], &[1, 2]])), mat(&[&[1, 2], &[0, 0]]));
        assert_eq!(rref(&mat(&[&[0, 1], &[1, 0]])), Matrix::identity(2));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::zeros(4, 4)), 0);
        assert_eq!(rank(&Matrix::identity(5)), 5);
        let n = shift(3);
        let n2 = n.mul(&n).unwrap();
        let n3 = n2.mul(&n).unwrap();
        assert_eq!((rank(&n), rank(&n2), rank(&n3)), (2, 1, 0));
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_rows(2, vec![vec![int(1), rat(1, 2)], vec![int(3), int(4)]]).unwrap();
        assert_eq!(m.determinant().unwrap(), rat(5, 2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).inverse(), Err(LinalgError::Singular));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).determinant().unwrap(), int(0));
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant().unwrap(), int(-1));
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(2, vec![vec![int(1)]]).is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-4i64..5, 1i64..4), r * c).prop_map(move |xs| {
                Matrix::from_rows(
                    c,
                    xs.chunks(c)
                        .map(|row| row.iter().map(|&(p, q)| rat(p, q)).collect())
                        .collect(),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_matrix()) {
            let once = rref(&m);
            prop_assert_eq!(rref(&once), once.clone());
            prop_assert_eq!(rank(&once), rank(&m));
            prop_assert!(rank(&m) <= m.rows().min(m.cols()));
        }

        #[test]
        fn rank_invariant_under_row_permutation(m in arb_matrix(), seed in any::<u64>()) {
            let mut rows = m.row_vecs();
            let len = rows.len();
            let mut state = seed;
            for i in (1..len).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                rows.swap(i, (state >> 33) as usize % (i + 1));
            }
            let permuted = Matrix::from_rows(m.cols(), rows).unwrap();
            prop_assert_eq!(rank(&permuted), rank(&m));
            prop_assert_eq!(rref(&permuted), rref(&m));
        }
    }
}
