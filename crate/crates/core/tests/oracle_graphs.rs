use drg_core::exact::rational::{frac, rat};
use drg_core::exact::RationalMatrix;
use drg_core::oracle::{build_family, cross_validate, intersection_array_of, CheckStatus, Family, Graph};
use drg_core::{analyze_distance, conjecture_check_distance};

fn families() -> Vec<(&'static str, Vec<usize>)> {
    let mut out: Vec<(&'static str, Vec<usize>)> = (5..=12).map(|n| ("cycle", vec![n])).collect();
    out.extend([
        ("petersen", vec![]),
        ("hamming", vec![3, 2]),
        ("hamming", vec![2, 3]),
        ("johnson", vec![5, 2]),
        ("complete_multipartite", vec![3, 2]),
        ("complete_multipartite", vec![3, 3]),
    ]);
    out
}

#[test]
fn every_family_cross_validates() {
    for (name, params) in families() {
        let g = build_family(name, &params).unwrap();
        let cv = cross_validate(&g).unwrap();
        let failures: Vec<_> = cv.failures().collect();
        assert!(failures.is_empty(), "{name}{params:?}: {failures:?}");
        assert_eq!(cv.analysis.invertible, cv.direct_invertible(), "{name}{params:?}");
        let inverse_check = cv.check("inverse_in_adjacency_powers").unwrap();
        let expected = if cv.analysis.invertible {
            CheckStatus::Passed
        } else {
            CheckStatus::Skipped
        };
        assert_eq!(inverse_check.status, expected, "{name}{params:?}");
    }
}

#[test]
fn known_outcomes() {
    let det = |name: &str, params: &[usize]| {
        let arr = intersection_array_of(&build_family(name, params).unwrap()).unwrap();
        analyze_distance(&arr)
    };
    assert!(!det("petersen", &[]).invertible);
    assert!(!det("hamming", &[3, 2]).invertible);
    let c5 = det("cycle", &[5]);
    assert!(c5.invertible);
    assert_eq!(c5.det_q, rat(6));
    let c7 = det("cycle", &[7]);
    assert!(c7.invertible);
    assert_eq!(c7.det_q, rat(-12));
    assert_eq!(det("complete_multipartite", &[3, 3]).det_q, rat(-120));
    for n in [6, 8, 10, 12] {
        assert!(!det("cycle", &[n]).invertible, "C{n}");
    }
    for (n, q) in [(9, 20), (11, -30)] {
        assert_eq!(det("cycle", &[n]).det_q, rat(q), "C{n}");
    }
}

#[test]
fn pentagon_inverse_matches_printed_matrix() {
    let g = build_family("cycle", &[5]).unwrap();
    let arr = intersection_array_of(&g).unwrap();
    let w = analyze_distance(&arr).w.unwrap();
    let dist = g.distances().unwrap();
    let assembled = RationalMatrix::from_fn(5, 5, |i, j| w[dist[i][j]].clone());
    let printed = [
        [-7, 5, -1, -1, 5],
        [5, -7, 5, -1, -1],
        [-1, 5, -7, 5, -1],
        [-1, -1, 5, -7, 5],
        [5, -1, -1, 5, -7],
    ];
    let expected = RationalMatrix::from_fn(5, 5, |i, j| frac(printed[i][j], 6));
    assert_eq!(assembled, expected);
    assert!((&assembled * &g.distance_matrix().unwrap()).is_identity());
}

#[test]
fn counted_srg_parameters_satisfy_the_parameter_relation() {
    for (name, params) in [
        ("petersen", vec![]),
        ("johnson", vec![5, 2]),
        ("hamming", vec![2, 3]),
        ("cycle", vec![5]),
    ] {
        let g = build_family(name, &params).unwrap();
        let arr = intersection_array_of(&g).unwrap();
        let n = g.vertex_count() as i64;
        let (k, a, c) = (arr.valency(), arr.a(1), arr.c(2));
        assert_eq!(k * (k - a - 1), c * (n - k - 1), "{name}");
    }
}

#[test]
fn edge_list_round_trip() {
    let text = "# pentagon\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    let g = Graph::from_edge_list(text).unwrap();
    assert_eq!(intersection_array_of(&g).unwrap().to_string(), "2,1;1,1");
}

#[test]
fn family_names_parse() {
    let f: Family = "hamming(4,2)".parse().unwrap();
    assert_eq!(f.build().vertex_count(), 16);
    assert!("nonsense(1)".parse::<Family>().is_err());
}

#[test]
fn larger_diameters_report_without_asserting() {
    for (name, params) in [
        ("hamming", vec![4, 2]),
        ("johnson", vec![8, 4]),
        ("cycle", vec![9]),
        ("cycle", vec![11]),
    ] {
        let arr = intersection_array_of(&build_family(name, &params).unwrap()).unwrap();
        let r = conjecture_check_distance(&arr);
        assert!(r.diameter >= 4);
        assert!(!r.established);
        println!(
            "{name}{params:?} {}: lhs {} rhs {} equal {}",
            r.array, r.lhs, r.rhs, r.equal
        );
    }
}
