//! Dense exact-rational vectors and matrices.
//!
//! Everything here is ordinary Gaussian elimination over ℚ with
//! "first nonzero" pivoting: deterministic, exact, and fast enough for the
//! dimensions this crate targets (≤ ~12, and ≤ ~24 after doubling
//! constructions). There is no fraction-free or modular path — with
//! arbitrary-precision rationals, ordinary elimination is already exact.
//!
//! Shape conventions: matrices are row-major; a matrix acts on coordinate
//! columns, so `m.mul_vector(v)` is `m · v`. Structural arithmetic (`+`, `-`,
//! scalar multiples) panics on shape mismatch — those are programming errors —
//! while the fallible solver entry points ([`Matrix::solve_linear`],
//! [`Matrix::invert`]) return [`Error`] values.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::Error;
use crate::rational::Rational;
use crate::Result;

/// A fixed-length column of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    entries: Vec<Rational>,
}

impl Vector {
    /// The zero vector of the given dimension.
    #[must_use]
    pub fn zeros(dim: usize) -> Self {
        Vector {
            entries: vec![Rational::zero(); dim],
        }
    }

    /// The standard basis vector `e_index` (0-based).
    ///
    /// # Panics
    ///
    /// Panics if `index >= dim`.
    #[must_use]
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(
            index < dim,
            "basis index {index} out of range for dim {dim}"
        );
        let mut v = Vector::zeros(dim);
        v.entries[index] = Rational::one();
        v
    }

    /// Wraps a list of entries.
    #[must_use]
    pub fn from_entries(entries: Vec<Rational>) -> Self {
        Vector { entries }
    }

    /// Dimension (number of entries).
    #[must_use]
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Whether every entry is zero.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Iterator over entries in index order.
    pub fn iter(&self) -> core::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    /// The entries as a slice.
    #[must_use]
    pub fn as_slice(&self) -> &[Rational] {
        &self.entries
    }

    /// Scalar multiple `c · self`.
    #[must_use]
    pub fn scale(&self, c: &Rational) -> Self {
        Vector {
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Standard dot product `Σ self_i · other_i`.
    ///
    /// This is also the pairing `⟨a*, x⟩` between a dual-space coordinate
    /// list and a vector: dual vectors are stored in the dual basis, so the
    /// pairing is literal coordinate-wise multiplication.
    ///
    /// # Panics
    ///
    /// Panics on dimension mismatch.
    #[must_use]
    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot product dimension mismatch");
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// In-place `self += c · other`.
    ///
    /// # Panics
    ///
    /// Panics on dimension mismatch.
    pub fn add_scaled(&mut self, c: &Rational, other: &Vector) {
        assert_eq!(self.dim(), other.dim(), "axpy dimension mismatch");
        for (lhs, rhs) in self.entries.iter_mut().zip(other.entries.iter()) {
            *lhs += rhs * c;
        }
    }

    /// Concatenation `(self, other)` — coordinates of a direct-sum element.
    #[must_use]
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Vector { entries }
    }

    /// Splits into the first `left_dim` coordinates and the rest.
    ///
    /// # Panics
    ///
    /// Panics if `left_dim > dim`.
    #[must_use]
    pub fn split_at(&self, left_dim: usize) -> (Vector, Vector) {
        assert!(left_dim <= self.dim(), "split point out of range");
        let (a, b) = self.entries.split_at(left_dim);
        (
            Vector::from_entries(a.to_vec()),
            Vector::from_entries(b.to_vec()),
        )
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, index: usize) -> &Rational {
        &self.entries[index]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, index: usize) -> &mut Rational {
        &mut self.entries[index]
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    /// # Panics
    ///
    /// Panics on dimension mismatch.
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector addition dimension mismatch");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    /// # Panics
    ///
    /// Panics on dimension mismatch.
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(
            self.dim(),
            rhs.dim(),
            "vector subtraction dimension mismatch"
        );
        Vector {
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, entry) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{entry}")?;
        }
        write!(f, ")")
    }
}

/// A dense `rows × cols` matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    /// The zero matrix of the given shape.
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    /// The `n × n` identity matrix.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from a list of equal-length rows.
    ///
    /// # Panics
    ///
    /// Panics if the rows have differing lengths.
    #[must_use]
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged rows in matrix literal");
            entries.extend(row);
        }
        Matrix {
            rows: n_rows,
            cols: n_cols,
            entries,
        }
    }

    /// Builds a matrix entry by entry from a function of `(row, col)`.
    #[must_use]
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Assembles the block matrix `[[a, b], [c, d]]`.
    ///
    /// # Panics
    ///
    /// Panics unless blocks in the same row share heights and blocks in the
    /// same column share widths.
    #[must_use]
    pub fn block_2x2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Self {
        assert_eq!(a.rows, b.rows, "top blocks differ in height");
        assert_eq!(c.rows, d.rows, "bottom blocks differ in height");
        assert_eq!(a.cols, c.cols, "left blocks differ in width");
        assert_eq!(b.cols, d.cols, "right blocks differ in width");
        Matrix::from_fn(a.rows + c.rows, a.cols + b.cols, |r, col| {
            match (r < a.rows, col < a.cols) {
                (true, true) => a[(r, col)].clone(),
                (true, false) => b[(r, col - a.cols)].clone(),
                (false, true) => c[(r - a.rows, col)].clone(),
                (false, false) => d[(r - a.rows, col - a.cols)].clone(),
            }
        })
    }

    /// Number of rows.
    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Whether the matrix is square.
    #[must_use]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Whether every entry is zero.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Row `r` as a vector.
    ///
    /// # Panics
    ///
    /// Panics if `r >= rows`.
    #[must_use]
    pub fn row(&self, r: usize) -> Vector {
        assert!(r < self.rows, "row index out of range");
        Vector::from_entries(self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    /// Column `c` as a vector.
    ///
    /// # Panics
    ///
    /// Panics if `c >= cols`.
    #[must_use]
    pub fn column(&self, c: usize) -> Vector {
        assert!(c < self.cols, "column index out of range");
        Vector::from_entries((0..self.rows).map(|r| self[(r, c)].clone()).collect())
    }

    /// The transpose.
    #[must_use]
    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Entrywise scalar multiple `c · self`.
    #[must_use]
    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Matrix–vector product `self · v`.
    ///
    /// # Panics
    ///
    /// Panics if `v.dim() != cols`.
    #[must_use]
    pub fn mul_vector(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols, "matrix-vector dimension mismatch");
        Vector::from_entries(
            (0..self.rows)
                .map(|r| {
                    (0..self.cols)
                        .map(|c| &self[(r, c)] * &v[c])
                        .sum::<Rational>()
                })
                .collect(),
        )
    }

    /// Solves `self · x = b` for the unique `x`.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if `self` is not square or `b` has the
    /// wrong length; [`Error::SingularMatrix`] if the matrix is not
    /// invertible.
    pub fn solve_linear(&self, b: &Vector) -> Result<Vector> {
        if !self.is_square() {
            return Err(Error::dim_mismatch(self.rows, self.cols));
        }
        if b.dim() != self.rows {
            return Err(Error::dim_mismatch(self.rows, b.dim()));
        }
        let n = self.rows;
        let mut work: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> =
                    self.entries[r * self.cols..(r + 1) * self.cols].to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let rank = reduce_in_place(&mut work, n);
        if rank < n {
            return Err(Error::SingularMatrix);
        }
        Ok(Vector::from_entries(
            (0..n).map(|r| work[r][n].clone()).collect(),
        ))
    }

    /// The inverse matrix.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] if not square; [`Error::SingularMatrix`]
    /// if not invertible.
    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::dim_mismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut work: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> =
                    self.entries[r * self.cols..(r + 1) * self.cols].to_vec();
                for c in 0..n {
                    row.push(if r == c {
                        Rational::one()
                    } else {
                        Rational::zero()
                    });
                }
                row
            })
            .collect();
        let rank = reduce_in_place(&mut work, n);
        if rank < n {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |r, c| work[r][n + c].clone()))
    }

    /// Exact rank via Gaussian elimination.
    #[must_use]
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<Rational>> = (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        reduce_in_place(&mut work, self.cols)
    }

    /// Whether the matrix is square and invertible.
    #[must_use]
    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Reduced row echelon form over the first `pivot_cols` columns, in place;
/// row operations extend across the full row width. Pivot choice is the
/// first row (top to bottom) with a nonzero entry in the pivot column, which
/// makes the reduction — and everything downstream of it — deterministic.
/// Returns the rank.
fn reduce_in_place(work: &mut [Vec<Rational>], pivot_cols: usize) -> usize {
    let n_rows = work.len();
    let mut pivot_row = 0;
    for col in 0..pivot_cols {
        if pivot_row == n_rows {
            break;
        }
        let Some(found) = (pivot_row..n_rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(pivot_row, found);
        let inv = work[pivot_row][col].recip();
        for entry in work[pivot_row].iter_mut() {
            *entry *= &inv;
        }
        let pivot = work[pivot_row].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row.iter_mut().zip(pivot.iter()) {
                *entry -= &(p * &factor);
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.entries[r * self.cols + c]
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    /// # Panics
    ///
    /// Panics on shape mismatch.
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix addition shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    /// # Panics
    ///
    /// Panics on shape mismatch.
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix subtraction shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    /// Matrix product.
    ///
    /// # Panics
    ///
    /// Panics if `self.cols != rhs.rows`.
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols)
                .map(|k| &self[(r, k)] * &rhs[(k, c)])
                .sum::<Rational>()
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
