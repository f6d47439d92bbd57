use drg_core::enumerate::{diameter3_arrays, feasible_srg_arrays, sweep};
use drg_core::exact::rational::rat;
use drg_core::spectra::{d3_pi_check, eigen_product, x_polynomial};
use drg_core::{analyze_distance, conjecture_check_distance, distance_seed, srg_closed_form, Surd};
use num_traits::Zero;

#[test]
fn srg_closed_form_agrees_with_general_solver() {
    let cases = feasible_srg_arrays(50);
    assert!(cases.len() > 50, "only {} parameter sets", cases.len());
    for (p, arr) in &cases {
        let closed = srg_closed_form(p).unwrap();
        let general = analyze_distance(arr);
        assert_eq!(closed.invertible, general.invertible, "{p}");
        assert_eq!(closed.invertible, p.k + p.c != 2 * p.a + 4, "{p}");
        assert_eq!(closed.inverse_in_distance_basis(), general.w, "{p}");
        assert_eq!(closed.det_d.is_zero(), !closed.invertible, "{p}");
    }
}

#[test]
fn srg_det_q_closed_form() {
    for (p, arr) in feasible_srg_arrays(50) {
        let (k, a, c) = (p.k, p.a, p.c);
        let expected = rat(k * (4 + 2 * a - c - k) * (2 * k + c - 2 * a - 2));
        assert_eq!(analyze_distance(&arr).det_q, expected, "{p}");
    }
}

#[test]
fn srg_eigen_product_via_surds() {
    for (p, arr) in feasible_srg_arrays(30) {
        let r = srg_closed_form(&p).unwrap();
        let alpha = x_polynomial(&arr, &distance_seed(2)).unwrap();
        let eval = |s: &Surd| {
            alpha
                .coeffs()
                .iter()
                .rev()
                .fold(Surd::rational(Zero::zero()), |acc, c| acc.mul(s).add_rational(c))
        };
        let product = eval(&r.theta).mul(&eval(&r.tau)).to_rational().unwrap() * alpha.eval(&rat(p.k));
        assert_eq!(product, eigen_product(&arr, &distance_seed(2)).unwrap(), "{p}");
    }
}

#[test]
fn diameter3_pi_identity() {
    let arrays = diameter3_arrays(6, 6);
    assert!(arrays.len() > 20);
    for check in sweep(&arrays, |a| (a.clone(), d3_pi_check(a).unwrap())) {
        assert!(check.1.holds, "{}: {:?}", check.0, check.1);
    }
}

#[test]
fn conjecture_holds_for_diameter_two_and_three() {
    let mut arrays: Vec<_> = feasible_srg_arrays(50).into_iter().map(|(_, a)| a).collect();
    arrays.extend(diameter3_arrays(6, 6));
    for r in sweep(&arrays, conjecture_check_distance) {
        assert!(r.established);
        assert!(r.equal, "{}: {} vs {}", r.array, r.lhs, r.rhs);
    }
}
