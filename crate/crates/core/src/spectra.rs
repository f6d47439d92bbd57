//! Distance polynomials, the polynomial `alpha` with `X = alpha(A)`, and the
//! exact check of the conjectured determinant identity
//!
//! ```text
//! det(Q) = (prod_i c_i^(d+1-i)) * prod over distinct eigenvalues theta of A of alpha(theta)
//! ```
//!
//! The eigenvalue product is evaluated as `det(alpha(B))` for the tridiagonal
//! intersection matrix `B`, whose eigenvalues are exactly the `d + 1` distinct
//! eigenvalues of `A`. No roots are ever computed.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::coeffs::{check_seed, distance_seed, CoefficientTable, SeedError};
use crate::exact::rational::{pow_rational, rat, serde_rational};
use crate::exact::{det_exact, poly_of_matrix, RationalMatrix, RationalPolynomial};

/// Tridiagonal `B` with `B[i][i] = a_i`, `B[i][i+1] = b_i`, `B[i+1][i] = c_(i+1)`.
pub fn intersection_matrix(array: &IntersectionArray) -> RationalMatrix {
    let n = array.diameter() + 1;
    RationalMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as isize, j as isize);
        if i == j {
            rat(array.a(i))
        } else if j == i + 1 {
            rat(array.b(i))
        } else if i == j + 1 {
            rat(array.c(i))
        } else {
            BigRational::zero()
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePolynomials {
    /// `v_i` with `A_i = v_i(A)`.
    pub v: Vec<RationalPolynomial>,
    /// `f = sum_i v_i`, so `J = f(A)`.
    pub f: RationalPolynomial,
    /// Monic minimal polynomial `(prod c_i) f(x) (x - k)`.
    pub minimal: RationalPolynomial,
    /// `f_(d+1)`: the scaled three-term recurrence run one step past `d`.
    pub extended: RationalPolynomial,
}

impl DistancePolynomials {
    /// `beta = minimal / (x - k)`, whose roots are the eigenvalues other than `k`.
    pub fn beta(&self, k: i64) -> RationalPolynomial {
        let (quot, rem) = self.minimal.div_rem(&RationalPolynomial::linear(&rat(k)));
        debug_assert!(rem.is_zero());
        quot
    }
}

/// `c_(i+1) v_(i+1) = (x - a_i) v_i - b_(i-1) v_(i-1)`, `v_0 = 1`, `v_1 = x`.
pub fn distance_polynomials(array: &IntersectionArray) -> DistancePolynomials {
    let d = array.diameter();
    let x = RationalPolynomial::x();
    let mut v = vec![RationalPolynomial::one(), x.clone()];
    for i in 1..d {
        let shifted = &x - &RationalPolynomial::constant(rat(array.a(i as isize)));
        let next = &(&shifted * &v[i]) - &v[i - 1].scale(&rat(array.b(i as isize - 1)));
        v.push(next.scale(&rat(array.c(i as isize + 1)).recip()));
    }
    let f = v.iter().fold(RationalPolynomial::zero(), |acc, p| &acc + p);
    let c_prod: BigRational = (1..=d as isize).map(|i| rat(array.c(i))).product();
    let minimal = (&f.scale(&c_prod) * &RationalPolynomial::linear(&rat(array.valency()))).monic();

    // f_i = (c_1 ... c_i) v_i satisfies f_(i+1) = (x - a_i) f_i - b_(i-1) c_i f_(i-1).
    let mut f_prev = RationalPolynomial::one();
    let mut f_cur = x.clone();
    for i in 1..=d as isize {
        let shifted = &x - &RationalPolynomial::constant(rat(array.a(i)));
        let next = &(&shifted * &f_cur) - &f_prev.scale(&rat(array.b(i - 1) * array.c(i)));
        f_prev = f_cur;
        f_cur = next;
    }

    DistancePolynomials {
        v,
        f,
        minimal,
        extended: f_cur,
    }
}

/// `alpha = sum_j seed_j v_j`, so that `X = alpha(A)`.
pub fn x_polynomial(array: &IntersectionArray, seed: &[BigRational]) -> Result<RationalPolynomial, SeedError> {
    check_seed(array, seed)?;
    let polys = distance_polynomials(array);
    Ok(polys
        .v
        .iter()
        .zip(seed)
        .fold(RationalPolynomial::zero(), |acc, (v, s)| &acc + &v.scale(s)))
}

/// Product of `alpha` over the distinct eigenvalues of `A`, i.e. `det(alpha(B))`.
pub fn eigen_product(array: &IntersectionArray, seed: &[BigRational]) -> Result<BigRational, SeedError> {
    let alpha = x_polynomial(array, seed)?;
    let b = intersection_matrix(array);
    Ok(det_exact(&poly_of_matrix(&alpha, &b).expect("B is square")).expect("B is square"))
}

/// `prod_(i=1..d) c_i^(d+1-i)`
pub fn c_weight(array: &IntersectionArray) -> BigRational {
    let d = array.diameter() as i64;
    (1..=d)
        .map(|i| pow_rational(&rat(array.c(i as isize)), d + 1 - i))
        .product()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub array: IntersectionArray,
    pub diameter: usize,
    #[serde(with = "serde_rational")]
    pub lhs: BigRational,
    #[serde(with = "serde_rational")]
    pub rhs: BigRational,
    pub equal: bool,
    /// `d <= 3`, where the identity is known to hold.
    pub established: bool,
    pub timing_us: u128,
}

/// `wasm32-unknown-unknown` has no clock; timings read 0 there.
mod timer {
    #[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
    pub type Start = std::time::Instant;
    #[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
    pub type Start = ();

    #[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
    pub fn start() -> Start {
        std::time::Instant::now()
    }
    #[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
    pub fn start() -> Start {}

    #[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
    pub fn micros_since(start: Start) -> u128 {
        start.elapsed().as_micros()
    }
    #[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
    pub fn micros_since(_: Start) -> u128 {
        0
    }
}

pub fn conjecture_check(array: &IntersectionArray, seed: &[BigRational]) -> Result<ConjectureReport, SeedError> {
    let start = timer::start();
    let table = CoefficientTable::build(array, seed)?;
    let lhs = det_exact(&table.q_matrix()).expect("Q is square");
    let rhs = c_weight(array) * eigen_product(array, seed)?;
    Ok(ConjectureReport {
        array: array.clone(),
        diameter: array.diameter(),
        equal: lhs == rhs,
        established: array.diameter() <= 3,
        lhs,
        rhs,
        timing_us: timer::micros_since(start),
    })
}

pub fn conjecture_check_distance(array: &IntersectionArray) -> ConjectureReport {
    conjecture_check(array, &distance_seed(array.diameter())).expect("distance seed has length d + 1")
}

/// The closed polynomial `pi(b_1, b_2, c_2, c_3, k)` for diameter 3.
pub fn d3_pi(b1: i64, b2: i64, c2: i64, c3: i64, k: i64) -> i64 {
    -3 * b2 + 3 * b1 * b1 * b2 + 3 * b2 * b2 - 6 * b1 * b2 * b2 + 6 * c2 - 6 * b1 * c2 + 6 * b1 * b2 * c2
        - 3 * c2 * c2
        - 2 * c3
        + 2 * b1 * b1 * c3
        + 5 * b2 * c3
        - 7 * b1 * b2 * c3
        - 3 * c2 * c3
        + 5 * b1 * c2 * c3
        - 2 * b2 * c2 * c3
        + 2 * c2 * c2 * c3
        + 2 * c3 * c3
        - 2 * b1 * c3 * c3
        - c2 * c3 * c3
        + 2 * b1 * k
        - 2 * b1 * b1 * k
        - 5 * b2 * k
        + 3 * b1 * b2 * k
        + 2 * b2 * b2 * k
        + 7 * c2 * k
        - 5 * b1 * c2 * k
        - 2 * c2 * c2 * k
        - 3 * c3 * k
        + b1 * c3 * k
        + 3 * b2 * c3 * k
        - c2 * c3 * k
        + c3 * c3 * k
        + b1 * k * k
        - 2 * b2 * k * k
        + 2 * c2 * k * k
        - c3 * k * k
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiCheck {
    #[serde(rename = "detQ", with = "serde_rational")]
    pub det_q: BigRational,
    pub pi: i64,
    /// `-k (c_2 c_3 + 2 b_1 c_3 + 3 b_1 b_2)`
    pub factor: i64,
    pub holds: bool,
}

/// Confirms `det(Q) = -k (c_2 c_3 + 2 b_1 c_3 + 3 b_1 b_2) pi` for a diameter-3 array.
/// Returns `None` for other diameters.
pub fn d3_pi_check(array: &IntersectionArray) -> Option<PiCheck> {
    if array.diameter() != 3 {
        return None;
    }
    let (k, b1, b2, c2, c3) = (array.b(0), array.b(1), array.b(2), array.c(2), array.c(3));
    let det_q = det_exact(&CoefficientTable::with_distance_seed(array).q_matrix()).expect("Q is square");
    let pi = d3_pi(b1, b2, c2, c3, k);
    let factor = -k * (c2 * c3 + 2 * b1 * c3 + 3 * b1 * b2);
    Some(PiCheck {
        holds: det_q == rat(factor * pi),
        det_q,
        pi,
        factor,
    })
}

/// `alpha(k) = k (c_2 c_3 + 2 b_1 c_3 + 3 b_1 b_2) / (c_2 c_3)` for `d = 3`.
pub fn d3_alpha_at_k(array: &IntersectionArray) -> BigRational {
    let (k, b1, b2, c2, c3) = (array.b(0), array.b(1), array.b(2), array.c(2), array.c(3));
    BigRational::new((k * (c2 * c3 + 2 * b1 * c3 + 3 * b1 * b2)).into(), (c2 * c3).into())
}

/// `r(x) = x^2 + (2 c_2 - a_1) x + (3 c_2 - k)`
pub fn d3_r_polynomial(array: &IntersectionArray) -> RationalPolynomial {
    let (k, a1, c2) = (array.valency(), array.a(1), array.c(2));
    RationalPolynomial::from_i64(&[3 * c2 - k, 2 * c2 - a1, 1])
}

/// Companion matrix of a monic polynomial.
pub fn companion(p: &RationalPolynomial) -> RationalMatrix {
    let p = p.monic();
    let n = p.degree().unwrap_or(0);
    RationalMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -p.coeff(i)
        } else if i == j + 1 {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}
