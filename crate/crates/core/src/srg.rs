//! Closed forms for strongly-regular graphs.
//!
//! For parameters `(n, k, a, c)` the distance matrix is `D = 2(J - I) - A`,
//! the non-principal eigenvalues `theta, tau` of `A` are the roots of
//! `x^2 + (c - a)x + (c - k)`, and `D` is singular exactly when
//! `k + c = 2a + 4`. Otherwise
//!
//! ```text
//! D^-1 = ((2 + a - c) I - A) / lambda + c delta / (k lambda mu) J
//! lambda = k + c - 2a - 4,  mu = 2k + c - 2a - 2,  delta = 2k + c - 2a - 4
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::array::{SrgError, SrgParams};
use crate::exact::rational::{frac, pow_rational, rat, serde_rational};

/// `p + q * sqrt(disc)` with `disc` squarefree; rational values carry
/// `q = 0, disc = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Surd {
    #[serde(with = "serde_rational")]
    pub p: BigRational,
    #[serde(with = "serde_rational")]
    pub q: BigRational,
    #[serde(with = "serde_bigint")]
    pub disc: BigInt,
}

mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

impl Surd {
    /// Normalises `p + q * sqrt(disc)` for `disc >= 0`.
    pub fn new(p: BigRational, q: BigRational, disc: BigInt) -> Self {
        assert!(!disc.is_negative(), "negative discriminant");
        let (square, free) = split_square(&disc);
        let q = q * BigRational::from_integer(square);
        if free.is_one() || q.is_zero() || free.is_zero() {
            let p = if free.is_one() { p + q } else { p };
            return Self::rational(p);
        }
        Self { p, q, disc: free }
    }

    pub fn rational(p: BigRational) -> Self {
        Self {
            p,
            q: BigRational::zero(),
            disc: BigInt::one(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.p.clone())
    }

    pub fn conjugate(&self) -> Self {
        Self {
            p: self.p.clone(),
            q: -self.q.clone(),
            disc: self.disc.clone(),
        }
    }

    pub fn add_rational(&self, r: &BigRational) -> Self {
        Self {
            p: &self.p + r,
            ..self.clone()
        }
    }

    /// Sum; both terms must live in the same quadratic field.
    pub fn add(&self, other: &Self) -> Self {
        let disc = self.common_disc(other);
        Self::new(&self.p + &other.p, &self.q + &other.q, disc)
    }

    fn common_disc(&self, other: &Self) -> BigInt {
        if self.is_rational() {
            other.disc.clone()
        } else {
            if !other.is_rational() {
                assert_eq!(self.disc, other.disc, "surds from different quadratic fields");
            }
            self.disc.clone()
        }
    }

    /// Product; both factors must live in the same quadratic field.
    pub fn mul(&self, other: &Self) -> Self {
        let disc = self.common_disc(other);
        let d = BigRational::from_integer(disc.clone());
        let p = &self.p * &other.p + &self.q * &other.q * d;
        let q = &self.p * &other.q + &self.q * &other.p;
        Self::new(p, q, disc)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = Self::rational(BigRational::one());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        result
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.p);
        }
        let sign = if self.q.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*sqrt({})", self.p, sign, self.q.abs(), self.disc)
    }
}

/// `n = s^2 * r` with `r` squarefree.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut square = BigInt::one();
    let mut rest = n.clone();
    let mut f = BigInt::from(2);
    while &f * &f <= rest {
        let ff = &f * &f;
        while (&rest % &ff).is_zero() {
            rest /= &ff;
            square *= &f;
        }
        f += 1;
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        square *= root;
        rest = BigInt::one();
    }
    (square, rest)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgReport {
    pub params: SrgParams,
    pub theta: Surd,
    pub tau: Surd,
    #[serde(with = "serde_rational")]
    pub m_theta: BigRational,
    #[serde(with = "serde_rational")]
    pub m_tau: BigRational,
    #[serde(rename = "detD", with = "serde_rational")]
    pub det_d: BigRational,
    #[serde(with = "serde_rational")]
    pub lambda: BigRational,
    #[serde(with = "serde_rational")]
    pub mu: BigRational,
    #[serde(with = "serde_rational")]
    pub delta: BigRational,
    #[serde(with = "serde_rational::option")]
    pub f: Option<BigRational>,
    pub invertible: bool,
    #[serde(with = "serde_rational::option")]
    pub inverse_i: Option<BigRational>,
    #[serde(with = "serde_rational::option")]
    pub inverse_a: Option<BigRational>,
    #[serde(with = "serde_rational::option")]
    pub inverse_j: Option<BigRational>,
    /// Coefficients of `A^-1` on `I, A, A^2`.
    #[serde(with = "serde_rational::option_vec")]
    pub adjacency_inverse: Option<Vec<BigRational>>,
}

impl SrgReport {
    /// `D^-1` as `w_0 I + w_1 A + w_2 A_2`, for comparison with the general solver.
    pub fn inverse_in_distance_basis(&self) -> Option<Vec<BigRational>> {
        let (i, a, j) = (
            self.inverse_i.as_ref()?,
            self.inverse_a.as_ref()?,
            self.inverse_j.as_ref()?,
        );
        Some(vec![i + j, a + j, j.clone()])
    }

    /// `(theta + 2)(tau + 2)`
    pub fn shifted_eigen_product(&self) -> BigRational {
        let two = rat(2);
        self.theta
            .add_rational(&two)
            .mul(&self.tau.add_rational(&two))
            .to_rational()
            .expect("conjugate product is rational")
    }
}

fn positive_multiplicity(which: &'static str, m: &Surd) -> Result<BigRational, SrgError> {
    match m.to_rational() {
        Some(v) if v.is_integer() && v.is_positive() => Ok(v),
        _ => Err(SrgError::InfeasibleMultiplicity {
            which,
            value: m.to_string(),
        }),
    }
}

/// Closed-form spectrum, determinant and inverse of the distance matrix.
pub fn srg_closed_form(params: &SrgParams) -> Result<SrgReport, SrgError> {
    params.validate()?;
    let SrgParams { n, k, a, c } = *params;
    let disc = BigInt::from((a - c) * (a - c) + 4 * (k - c));
    let theta = Surd::new(frac(a - c, 2), frac(1, 2), disc.clone());
    let tau = Surd::new(frac(a - c, 2), frac(-1, 2), disc.clone());

    // m = (n - 1)/2 -/+ E / (2 sqrt(disc)),  E = 2k + (n - 1)(a - c)
    let e = rat(2 * k + (n - 1) * (a - c));
    let half_n1 = frac(n - 1, 2);
    let offset = e / (rat(2) * BigRational::from_integer(disc.clone()));
    let m_theta = positive_multiplicity("m_theta", &Surd::new(half_n1.clone(), -offset.clone(), disc.clone()))?;
    let m_tau = positive_multiplicity("m_tau", &Surd::new(half_n1, offset, disc))?;

    let two = rat(2);
    let mt = m_theta.to_integer().to_u64().expect("multiplicity fits in u64");
    let mu_ = m_tau.to_integer().to_u64().expect("multiplicity fits in u64");
    let spectral = theta.add_rational(&two).pow(mt).mul(&tau.add_rational(&two).pow(mu_));
    let spectral = spectral
        .to_rational()
        .expect("multiplicities pair conjugate eigenvalues");
    let det_d = rat(2 * n - k - 2) * pow_rational(&rat(-1), n - 1) * spectral;

    let lambda = k + c - 2 * a - 4;
    let mu = 2 * k + c - 2 * a - 2;
    let delta = 2 * k + c - 2 * a - 4;
    let invertible = lambda != 0;
    let (f, inverse_i, inverse_a, inverse_j) = if invertible {
        let f = frac(delta, k * lambda * mu);
        (
            Some(f),
            Some(frac(2 + a - c, lambda)),
            Some(frac(-1, lambda)),
            Some(frac(c * delta, k * lambda * mu)),
        )
    } else {
        (None, None, None, None)
    };
    let adjacency_inverse = (k != c).then(|| {
        let denom = k * (c - k);
        vec![
            frac(c - k + k * a - k * c, denom),
            frac(c - k - a, denom),
            frac(1, denom),
        ]
    });

    let report = SrgReport {
        params: *params,
        theta,
        tau,
        m_theta,
        m_tau,
        det_d,
        lambda: rat(lambda),
        mu: rat(mu),
        delta: rat(delta),
        f,
        invertible,
        inverse_i,
        inverse_a,
        inverse_j,
        adjacency_inverse,
    };

    #[cfg(debug_assertions)]
    {
        let general = crate::inverse::analyze_distance(&params.to_array()?);
        debug_assert_eq!(
            general.invertible, report.invertible,
            "closed form and general solver disagree"
        );
        debug_assert_eq!(general.w, report.inverse_in_distance_basis());
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse::analyze_distance;

    fn srg(n: i64, k: i64, a: i64, c: i64) -> SrgParams {
        SrgParams::new(n, k, a, c).unwrap()
    }

    #[test]
    fn pentagon_closed_form() {
        let r = srg_closed_form(&srg(5, 2, 0, 1)).unwrap();
        assert_eq!(
            (r.lambda.clone(), r.mu.clone(), r.delta.clone()),
            (rat(-1), rat(3), rat(1))
        );
        assert_eq!(r.f, Some(frac(-1, 6)));
        assert_eq!(r.inverse_i, Some(rat(-1)));
        assert_eq!(r.inverse_a, Some(rat(1)));
        assert_eq!(r.inverse_j, Some(frac(-1, 6)));
        assert_eq!(
            r.inverse_in_distance_basis(),
            Some(vec![frac(-7, 6), frac(5, 6), frac(-1, 6)])
        );
        assert_eq!(r.det_d, rat(6));
        assert_eq!((r.m_theta.clone(), r.m_tau.clone()), (rat(2), rat(2)));
        assert_eq!(r.theta, Surd::new(frac(-1, 2), frac(1, 2), BigInt::from(5)));
        assert_eq!(r.adjacency_inverse, Some(vec![frac(3, 2), frac(1, 2), frac(-1, 2)]));
    }

    #[test]
    fn petersen_is_singular() {
        let r = srg_closed_form(&srg(10, 3, 0, 1)).unwrap();
        assert!(!r.invertible);
        assert!(r.inverse_i.is_none() && r.f.is_none());
        assert!(r.det_d.is_zero());
        // eigenvalues 1 (x5) and -2 (x4)
        assert_eq!(r.theta.to_rational(), Some(rat(1)));
        assert_eq!(r.tau.to_rational(), Some(rat(-2)));
        assert_eq!((r.m_theta.clone(), r.m_tau.clone()), (rat(5), rat(4)));
    }

    #[test]
    fn paley13_agrees_with_general_solver() {
        let p = srg(13, 6, 2, 3);
        let r = srg_closed_form(&p).unwrap();
        assert!(r.invertible);
        let g = analyze_distance(&p.to_array().unwrap());
        assert!(g.invertible);
        assert_eq!(g.w, r.inverse_in_distance_basis());
        assert_eq!(r.theta.disc, BigInt::from(13));
        assert_eq!((r.m_theta.clone(), r.m_tau.clone()), (rat(6), rat(6)));
    }

    #[test]
    fn invariants_on_known_graphs() {
        for (n, k, a, c) in [
            (5, 2, 0, 1),
            (10, 3, 0, 1),
            (9, 4, 1, 2),
            (10, 6, 3, 4),
            (6, 4, 2, 4),
            (9, 6, 3, 6),
            (16, 5, 0, 2),
            (13, 6, 2, 3),
            (27, 10, 1, 5),
        ] {
            let r = srg_closed_form(&srg(n, k, a, c)).unwrap();
            assert_eq!(&r.m_theta + &r.m_tau, rat(n - 1));
            let trace = r
                .theta
                .mul(&Surd::rational(r.m_theta.clone()))
                .add(&r.tau.mul(&Surd::rational(r.m_tau.clone())))
                .add_rational(&rat(k));
            assert_eq!(trace.to_rational(), Some(rat(0)), "({n},{k},{a},{c})");
            assert_eq!(r.shifted_eigen_product(), rat(2 * a + 4 - k - c));
            assert_eq!(r.invertible, k + c != 2 * a + 4);
        }
    }

    #[test]
    fn complete_multipartite_has_no_adjacency_inverse() {
        let r = srg_closed_form(&srg(9, 6, 3, 6)).unwrap();
        assert!(r.adjacency_inverse.is_none());
        assert!(r.invertible);
        assert_eq!(r.det_d, rat(640));
    }

    #[test]
    fn rejects_infeasible_multiplicities() {
        // k(k - a - 1) = c(n - k - 1) holds but the multiplicities are not integral
        let err = srg_closed_form(&SrgParams { n: 5, k: 3, a: 1, c: 3 }).unwrap_err();
        assert!(matches!(err, SrgError::InfeasibleMultiplicity { .. }), "{err:?}");
    }

    #[test]
    fn surd_arithmetic() {
        let s = Surd::new(rat(1), rat(1), BigInt::from(8));
        assert_eq!(s.q, rat(2));
        assert_eq!(s.disc, BigInt::from(2));
        assert_eq!(s.mul(&s.conjugate()).to_rational(), Some(rat(-7)));
        assert_eq!(Surd::new(rat(1), rat(3), BigInt::from(9)).to_rational(), Some(rat(10)));
        assert_eq!(s.pow(0).to_rational(), Some(rat(1)));
        assert_eq!(s.pow(2), s.mul(&s));
        assert_eq!(split_square(&BigInt::from(72)), (BigInt::from(6), BigInt::from(2)));
    }
}
