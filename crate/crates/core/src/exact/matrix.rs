//! Dense row-major matrices over the rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::poly::RationalPolynomial;
use super::rational::{format_rational, rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{rows}x{cols} matrix needs {} entries, got {got}", rows * cols)]
    EntryCount { rows: usize, cols: usize, got: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

/// Outcome of [`invert_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inversion {
    Invertible(RationalMatrix),
    /// `kernel` is a nonzero vector `v` with `M v = 0`.
    Singular {
        rank: usize,
        kernel: Vec<BigRational>,
    },
}

impl Inversion {
    pub fn inverse(&self) -> Option<&RationalMatrix> {
        match self {
            Inversion::Invertible(m) => Some(m),
            Inversion::Singular { .. } => None,
        }
    }

    pub fn is_invertible(&self) -> bool {
        matches!(self, Inversion::Invertible(_))
    }
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::EntryCount {
                rows,
                cols,
                got: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn filled(rows: usize, cols: usize, value: BigRational) -> Self {
        Self {
            rows,
            cols,
            entries: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Builds a matrix from nested rows. Ragged input is an error.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n * m);
        for row in rows {
            if row.len() != m {
                return Err(MatrixError::EntryCount {
                    rows: n,
                    cols: m,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(n, m, entries)
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.as_ref().len());
        Self::from_fn(n, m, |i, j| rat(rows[i].as_ref()[j]))
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

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// `self += factor * other`, shapes assumed equal.
    pub fn add_scaled(&mut self, factor: &BigRational, other: &Self) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if factor.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += factor * b;
            }
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(l, j)];
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn require_square(&self) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn det(&self) -> Result<BigRational, MatrixError> {
        det_exact(self)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(r, j)] * &factor;
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Entries as `"p/q"` strings, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sum shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix difference shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.to_string_rows()).finish()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_string_rows();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Exact determinant.
///
/// Each row is first cleared of denominators, then the integer matrix goes
/// through Bareiss fraction-free elimination, so every intermediate value is
/// an integer minor of the scaled matrix.
pub fn det_exact(m: &RationalMatrix) -> Result<BigRational, MatrixError> {
    m.require_square()?;
    let n = m.rows;
    if n == 0 {
        return Ok(BigRational::one());
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = m.row(i).iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        a.push(m.row(i).iter().map(|e| e.numer() * (&lcm / e.denom())).collect());
        scale *= lcm;
    }
    let det = bareiss_det(a);
    Ok(BigRational::new(det, scale))
}

/// Determinant of an integer matrix by Bareiss elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Exact by Sylvester's identity.
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Exact inverse by Gauss-Jordan elimination, or a singular verdict with the
/// rank and a kernel witness.
pub fn invert_exact(m: &RationalMatrix) -> Result<Inversion, MatrixError> {
    m.require_square()?;
    let n = m.rows;
    let mut aug = RationalMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    });
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !aug[(i, c)].is_zero()) else {
            return Ok(singular_verdict(m));
        };
        aug.swap_rows(c, p);
        let inv = aug[(c, c)].recip();
        for j in c..2 * n {
            let v = &aug[(c, j)] * &inv;
            aug[(c, j)] = v;
        }
        for i in 0..n {
            if i == c || aug[(i, c)].is_zero() {
                continue;
            }
            let factor = aug[(i, c)].clone();
            for j in c..2 * n {
                let v = &aug[(c, j)] * &factor;
                aug[(i, j)] -= v;
            }
        }
    }
    Ok(Inversion::Invertible(RationalMatrix::from_fn(n, n, |i, j| {
        aug[(i, j + n)].clone()
    })))
}

fn singular_verdict(m: &RationalMatrix) -> Inversion {
    let (r, pivots) = m.rref();
    let free = (0..m.cols)
        .find(|c| !pivots.contains(c))
        .expect("a singular square matrix has a free column");
    let mut kernel = vec![BigRational::zero(); m.cols];
    kernel[free] = BigRational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        kernel[pc] = -r[(row, free)].clone();
    }
    Inversion::Singular {
        rank: pivots.len(),
        kernel,
    }
}

/// `p(M)` by Horner's rule.
pub fn poly_of_matrix(p: &RationalPolynomial, m: &RationalMatrix) -> Result<RationalMatrix, MatrixError> {
    m.require_square()?;
    let n = m.rows;
    let mut acc = RationalMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = &acc * m;
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    Ok(acc)
}

/// Cached powers `I, M, M^2, ...` of a fixed square matrix, grown on demand.
#[derive(Debug, Clone)]
pub struct MatrixPowers {
    powers: Vec<RationalMatrix>,
}

impl MatrixPowers {
    pub fn new(m: RationalMatrix) -> Result<Self, MatrixError> {
        m.require_square()?;
        let identity = RationalMatrix::identity(m.rows);
        Ok(Self {
            powers: vec![identity, m],
        })
    }

    pub fn base(&self) -> &RationalMatrix {
        &self.powers[1]
    }

    pub fn power(&mut self, exp: usize) -> &RationalMatrix {
        while self.powers.len() <= exp {
            let next = &self.powers[self.powers.len() - 1] * &self.powers[1];
            self.powers.push(next);
        }
        &self.powers[exp]
    }

    pub fn eval(&mut self, p: &RationalPolynomial) -> RationalMatrix {
        let n = self.powers[0].rows;
        let mut acc = RationalMatrix::zeros(n, n);
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = self.power(i).clone();
            acc.add_scaled(c, &power);
        }
        acc
    }
}

/// Largest absolute entry, handy for diagnostics.
pub fn max_abs_entry(m: &RationalMatrix) -> BigRational {
    m.entries
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigRational::zero)
}
