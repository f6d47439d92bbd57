//! Invertibility of `X = sum_j x[0][j] A_j` and its inverse.
//!
//! `X` is invertible exactly when `det(Q) != 0`. In that case Cramer's rule on
//! `Q z = e_0` gives `z_j = det(Q_j) / det(Q)`, where `Q_j` is `Q` with column
//! `j` replaced by `e_0`, and the binomial inversion of
//! `z_j = sum_(i>=j) C(i, j) k^(i-j) y_i` yields `X^-1 = sum_i y_i A^i`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::coeffs::{check_seed, CoefficientTable, SeedError};
use crate::exact::rational::{binomial, rat, serde_rational};
use crate::exact::{det_exact, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvertibilityReport {
    pub array: IntersectionArray,
    #[serde(with = "serde_rational::vec")]
    pub seed: Vec<BigRational>,
    #[serde(rename = "detQ", with = "serde_rational")]
    pub det_q: BigRational,
    #[serde(rename = "detQj", with = "serde_rational::vec")]
    pub det_qj: Vec<BigRational>,
    #[serde(with = "serde_rational::option_vec")]
    pub z: Option<Vec<BigRational>>,
    #[serde(with = "serde_rational::option_vec")]
    pub y: Option<Vec<BigRational>>,
    #[serde(with = "serde_rational::option_vec")]
    pub w: Option<Vec<BigRational>>,
    pub invertible: bool,
}

/// Decides invertibility of the element with the given seed and, when it is
/// invertible, expresses the inverse in powers of `A` (`y`) and in the
/// distance basis (`w`).
pub fn analyze(array: &IntersectionArray, seed: &[BigRational]) -> Result<InvertibilityReport, SeedError> {
    check_seed(array, seed)?;
    let table = CoefficientTable::build(array, seed)?;
    let q = table.q_matrix();
    let det_q = det_exact(&q).expect("Q is square");
    let det_qj: Vec<BigRational> = (0..q.cols())
        .map(|j| det_exact(&replace_column_with_e0(&q, j)).expect("Q_j is square"))
        .collect();

    let (z, y, w) = if det_q.is_zero() {
        (None, None, None)
    } else {
        let z: Vec<BigRational> = det_qj.iter().map(|dj| dj / &det_q).collect();
        let y = mobius_y_from_z(&z, array.valency());
        let w = inverse_in_distance_basis(&y, array);
        (Some(z), Some(y), Some(w))
    };

    Ok(InvertibilityReport {
        array: array.clone(),
        seed: seed.to_vec(),
        invertible: !det_q.is_zero(),
        det_q,
        det_qj,
        z,
        y,
        w,
    })
}

pub fn analyze_distance(array: &IntersectionArray) -> InvertibilityReport {
    analyze(array, &crate::coeffs::distance_seed(array.diameter())).expect("distance seed has length d + 1")
}

fn replace_column_with_e0(q: &RationalMatrix, col: usize) -> RationalMatrix {
    RationalMatrix::from_fn(q.rows(), q.cols(), |i, j| {
        if j != col {
            q[(i, j)].clone()
        } else if i == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

fn k_powers(k: i64, n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for e in 1..n {
        out.push(&out[e - 1] * k);
    }
    out
}

/// `y_i = sum_(j>=i) (-1)^(j-i) C(j, i) k^(j-i) z_j`.
pub fn mobius_y_from_z(z: &[BigRational], k: i64) -> Vec<BigRational> {
    let kp = k_powers(k, z.len());
    (0..z.len())
        .map(|i| {
            (i..z.len())
                .map(|j| {
                    let coeff = binomial(j, i) * &kp[j - i];
                    let term = BigRational::from_integer(coeff) * &z[j];
                    if (j - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// `z_j = sum_(i>=j) C(i, j) k^(i-j) y_i`.
pub fn z_from_y(y: &[BigRational], k: i64) -> Vec<BigRational> {
    let kp = k_powers(k, y.len());
    (0..y.len())
        .map(|j| {
            (j..y.len())
                .map(|i| BigRational::from_integer(binomial(i, j) * &kp[i - j]) * &y[i])
                .sum()
        })
        .collect()
}

/// Multiplies `sum_j v_j A_j` by `A` using `A A_j = b_(j-1) A_(j-1) + a_j A_j + c_(j+1) A_(j+1)`.
pub fn times_adjacency(v: &[BigRational], array: &IntersectionArray) -> Vec<BigRational> {
    let d = array.diameter() as isize;
    let at = |j: isize| {
        if (0..=d).contains(&j) {
            v[j as usize].clone()
        } else {
            BigRational::zero()
        }
    };
    (0..=d)
        .map(|h| at(h + 1) * rat(array.b(h)) + at(h) * rat(array.a(h)) + at(h - 1) * rat(array.c(h)))
        .collect()
}

/// Rewrites `sum_i y_i A^i` as `sum_j w_j A_j`.
pub fn inverse_in_distance_basis(y: &[BigRational], array: &IntersectionArray) -> Vec<BigRational> {
    let n = array.diameter() + 1;
    let mut power = vec![BigRational::zero(); n];
    power[0] = BigRational::one();
    let mut w = vec![BigRational::zero(); n];
    for (i, yi) in y.iter().enumerate() {
        if i > 0 {
            power = times_adjacency(&power, array);
        }
        for (wj, pj) in w.iter_mut().zip(&power) {
            *wj += yi * pj;
        }
    }
    w
}
