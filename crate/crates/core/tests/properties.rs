use drg_core::exact::rational::frac;
use drg_core::exact::{det_exact, RationalPolynomial};
use drg_core::inverse::{mobius_y_from_z, z_from_y};
use drg_core::spectra::{distance_polynomials, x_polynomial};
use drg_core::{analyze, conjecture_check, BigRational, CoefficientTable, IntersectionArray, InvertibilityReport};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| frac(n, d))
}

/// Arrays of diameter 2..=4 with valency up to 7 that pass validation and
/// have integral sphere sizes.
fn array() -> impl Strategy<Value = IntersectionArray> {
    (2usize..=4, 2i64..=7)
        .prop_flat_map(|(d, k)| {
            (
                Just(k),
                proptest::collection::vec(1i64..=k, d - 1),
                proptest::collection::vec(1i64..=k, d - 1),
            )
        })
        .prop_filter_map("invalid array", |(k, mut b_tail, mut c_tail)| {
            b_tail.sort_unstable_by(|x, y| y.cmp(x));
            c_tail.sort_unstable();
            let b: Vec<i64> = std::iter::once(k).chain(b_tail).collect();
            let c: Vec<i64> = std::iter::once(1).chain(c_tail).collect();
            IntersectionArray::new(&b, &c).ok().filter(|a| a.sphere_sizes().is_ok())
        })
}

fn array_and_seed() -> impl Strategy<Value = (IntersectionArray, Vec<BigRational>)> {
    array().prop_flat_map(|a| {
        let d = a.diameter();
        (Just(a), proptest::collection::vec(rational(), d + 1))
    })
}

fn unit(n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|i| {
            if i == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn valency_splits_at_every_distance(a in array()) {
        let k = a.valency();
        let d = a.diameter() as isize;
        for i in 0..=d {
            prop_assert_eq!(a.a(i) + a.b(i) + a.c(i), k);
        }
        prop_assert_eq!((a.b(-1), a.c(-1), a.b(d + 1), a.c(d + 1)), (0, 0, 0, 0));
        prop_assert_eq!((a.b(d), a.c(0)), (0, 0));
    }

    #[test]
    fn array_text_round_trips(a in array()) {
        prop_assert_eq!(a.to_string().parse::<IntersectionArray>().unwrap(), a);
    }

    #[test]
    fn det_p_equals_det_q((a, seed) in array_and_seed()) {
        let t = CoefficientTable::build(&a, &seed).unwrap();
        prop_assert_eq!(det_exact(&t.p_matrix()).unwrap(), det_exact(&t.q_matrix()).unwrap());
    }

    #[test]
    fn solutions_satisfy_both_systems((a, seed) in array_and_seed()) {
        let r = analyze(&a, &seed).unwrap();
        let t = CoefficientTable::build(&a, &seed).unwrap();
        let n = a.diameter() + 1;
        prop_assert_eq!(r.invertible, !r.det_q.is_zero());
        if let (Some(z), Some(y)) = (&r.z, &r.y) {
            prop_assert_eq!(t.q_matrix().mul_vec(z), unit(n));
            prop_assert_eq!(t.p_matrix().mul_vec(y), unit(n));
            prop_assert_eq!(&z_from_y(y, a.valency()), z);
        } else {
            prop_assert!(r.w.is_none());
        }
    }

    /// `alpha(x) * sum y_i x^i = 1` modulo the minimal polynomial, and the
    /// distance-basis coefficients describe the same polynomial.
    #[test]
    fn inverse_is_inverse_in_the_algebra((a, seed) in array_and_seed()) {
        let r = analyze(&a, &seed).unwrap();
        let polys = distance_polynomials(&a);
        let alpha = x_polynomial(&a, &seed).unwrap();
        if let (Some(y), Some(w)) = (r.y, r.w) {
            let ypoly = RationalPolynomial::new(y);
            let (_, rem) = (&alpha * &ypoly).div_rem(&polys.minimal);
            prop_assert_eq!(rem, RationalPolynomial::one());
            let wpoly = polys.v.iter().zip(&w).fold(RationalPolynomial::zero(), |acc, (v, wj)| &acc + &v.scale(wj));
            prop_assert_eq!(wpoly, ypoly);
        } else {
            // singular: alpha and the minimal polynomial share a root
            let (mut p, mut q) = (polys.minimal.clone(), alpha.clone());
            while !q.is_zero() {
                let (_, rem) = p.div_rem(&q);
                p = q;
                q = rem;
            }
            prop_assert!(p.degree().is_some_and(|d| d >= 1));
        }
    }

    #[test]
    fn conjecture_holds_for_small_diameter_and_any_seed((a, seed) in array_and_seed()) {
        prop_assume!(a.diameter() <= 3);
        let r = conjecture_check(&a, &seed).unwrap();
        prop_assert!(r.equal, "{}: {} vs {}", a, r.lhs, r.rhs);
    }

    #[test]
    fn mobius_round_trip(k in 1i64..=12, z in proptest::collection::vec(rational(), 1..=8)) {
        let y = mobius_y_from_z(&z, k);
        prop_assert_eq!(z_from_y(&y, k), z.clone());
        prop_assert_eq!(mobius_y_from_z(&z_from_y(&z, k), k), z);
    }

    #[test]
    fn report_json_round_trips((a, seed) in array_and_seed()) {
        let r = analyze(&a, &seed).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: InvertibilityReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, r);
    }
}
