//! The coefficient table `x[i][j]` and the matrices `Q` and `P` built from it.
//!
//! Row 0 is a seed `x[0][j]` describing `X = sum_j x[0][j] A_j`. Row `i+1`
//! holds the coefficients of `X_(i+1) = A X_i - k X_i` in the distance basis,
//! which the three-term relation for `A A_j` turns into
//!
//! ```text
//! x[i+1][j] = (x[i][j+1] - x[i][j]) b_j - (x[i][j] - x[i][j-1]) c_j
//! ```
//!
//! with `x[i][-1] = x[i][d+1] = 0`.

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::array::IntersectionArray;
use crate::exact::rational::{binomial, format_rational, rat};
use crate::exact::RationalMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error("seed has {got} entries, expected d + 1 = {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// The seed `[0, 1, ..., d]` whose element is the distance matrix.
pub fn distance_seed(d: usize) -> Vec<BigRational> {
    (0..=d as i64).map(rat).collect()
}

pub(crate) fn check_seed(array: &IntersectionArray, seed: &[BigRational]) -> Result<(), SeedError> {
    let expected = array.diameter() + 1;
    if seed.len() != expected {
        return Err(SeedError::LengthMismatch {
            expected,
            got: seed.len(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    array: IntersectionArray,
    // rows 0..=d; column j stored at index j + 1, padding at both ends
    x: Vec<Vec<BigRational>>,
}

impl CoefficientTable {
    pub fn build(array: &IntersectionArray, seed: &[BigRational]) -> Result<Self, SeedError> {
        check_seed(array, seed)?;
        let d = array.diameter();
        let mut first = Vec::with_capacity(d + 3);
        first.push(BigRational::zero());
        first.extend_from_slice(seed);
        first.push(BigRational::zero());
        let mut x = vec![first];
        for i in 0..d {
            let prev = &x[i];
            let mut next = vec![BigRational::zero(); d + 3];
            for j in 0..=d {
                let (lo, mid, hi) = (&prev[j], &prev[j + 1], &prev[j + 2]);
                let b = rat(array.b(j as isize));
                let c = rat(array.c(j as isize));
                next[j + 1] = (hi - mid) * b - (mid - lo) * c;
            }
            x.push(next);
        }
        Ok(Self {
            array: array.clone(),
            x,
        })
    }

    pub fn with_distance_seed(array: &IntersectionArray) -> Self {
        Self::build(array, &distance_seed(array.diameter())).expect("distance seed has length d + 1")
    }

    pub fn array(&self) -> &IntersectionArray {
        &self.array
    }

    pub fn seed(&self) -> &[BigRational] {
        self.row(0)
    }

    /// `x[i][j]` for `j` in `-1..=d+1`.
    pub fn entry(&self, i: usize, j: isize) -> &BigRational {
        &self.x[i][(j + 1) as usize]
    }

    /// Row `i` restricted to `j = 0..=d`.
    pub fn row(&self, i: usize) -> &[BigRational] {
        let d = self.array.diameter();
        &self.x[i][1..=d + 1]
    }

    /// `Q[i][j] = x[j][i]`.
    pub fn q_matrix(&self) -> RationalMatrix {
        let n = self.array.diameter() + 1;
        RationalMatrix::from_fn(n, n, |i, j| self.row(j)[i].clone())
    }

    /// `P[h][i] = sum_(j<=i) C(i, j) k^(i-j) x[j][h]`.
    pub fn p_matrix(&self) -> RationalMatrix {
        let n = self.array.diameter() + 1;
        let k = rat(self.array.valency());
        let mut k_pow = vec![rat(1)];
        for e in 1..n {
            k_pow.push(&k_pow[e - 1] * &k);
        }
        RationalMatrix::from_fn(n, n, |h, i| {
            (0..=i)
                .map(|j| BigRational::from_integer(binomial(i, j)) * &k_pow[i - j] * &self.row(j)[h])
                .sum()
        })
    }

    /// One line per row, entries as `p/q`, padding columns omitted.
    pub fn dump(&self) -> String {
        (0..=self.array.diameter())
            .map(|i| self.row(i).iter().map(format_rational).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}
