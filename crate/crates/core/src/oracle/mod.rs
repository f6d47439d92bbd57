//! Brute-force ground truth: concrete graphs, counted intersection arrays and
//! direct matrix verification of every analytic identity.

pub mod graph;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use graph::{build_family, distance_indicator, Family, Graph, GraphError};

use crate::array::{ArrayError, IntersectionArray, SrgParams};
use crate::coeffs::CoefficientTable;
use crate::exact::rational::{binomial, rat};
use crate::exact::{det_exact, invert_exact, Inversion, MatrixPowers, RationalMatrix};
use crate::inverse::{analyze_distance, InvertibilityReport};
use crate::spectra::distance_polynomials;
use crate::srg::srg_closed_form;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotDistanceRegular {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not regular: vertex {vertex} has degree {degree}, vertex 0 has {expected}")]
    Irregular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error(
        "{param}_{distance} is not constant: pair ({u}, {v}) at distance {distance} gives {count}, earlier pairs gave {expected}"
    )]
    InconsistentCount {
        param: char,
        distance: usize,
        u: usize,
        v: usize,
        count: i64,
        expected: i64,
    },
    #[error("counted parameters do not form a supported intersection array: {0}")]
    Array(#[from] ArrayError),
}

/// Counts `c_j = |G_1(u) ∩ G_(j-1)(v)|` and `b_j = |G_1(u) ∩ G_(j+1)(v)|`
/// over every ordered pair and returns the array if both are constant per `j`.
pub fn intersection_array_of(g: &Graph) -> Result<IntersectionArray, NotDistanceRegular> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(NotDistanceRegular::Empty);
    }
    let dist = g.distances()?;
    let expected = g.degree(0);
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) != expected) {
        return Err(NotDistanceRegular::Irregular {
            vertex,
            degree: g.degree(vertex),
            expected,
        });
    }
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut b: Vec<Option<i64>> = vec![None; diameter + 1];
    let mut c: Vec<Option<i64>> = vec![None; diameter + 1];
    for (u, row) in dist.iter().enumerate() {
        for (v, &j) in row.iter().enumerate() {
            let mut up = 0i64;
            let mut down = 0i64;
            for &w in g.neighbors(u) {
                let dw = dist[w][v];
                if dw + 1 == j {
                    down += 1;
                } else if dw == j + 1 {
                    up += 1;
                }
            }
            for (param, slot, count) in [('b', &mut b[j], up), ('c', &mut c[j], down)] {
                match *slot {
                    None => *slot = Some(count),
                    Some(prev) if prev != count => {
                        return Err(NotDistanceRegular::InconsistentCount {
                            param,
                            distance: j,
                            u,
                            v,
                            count,
                            expected: prev,
                        })
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let b: Vec<i64> = b[..diameter].iter().map(|x| x.unwrap_or(0)).collect();
    let c: Vec<i64> = c[1..].iter().map(|x| x.unwrap_or(0)).collect();
    Ok(IntersectionArray::new(&b, &c)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub vertices: usize,
    pub array: IntersectionArray,
    pub analysis: InvertibilityReport,
    pub direct_rank: usize,
    pub checks: Vec<IdentityCheck>,
}

impl CrossValidation {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Failed)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn direct_invertible(&self) -> bool {
        self.direct_rank == self.vertices
    }
}

struct Checks(Vec<IdentityCheck>);

impl Checks {
    fn push(&mut self, name: &str, ok: bool) {
        self.push_detail(name, ok, None);
    }

    fn push_detail(&mut self, name: &str, ok: bool, detail: Option<String>) {
        self.0.push(IdentityCheck {
            name: name.to_owned(),
            status: if ok { CheckStatus::Passed } else { CheckStatus::Failed },
            detail,
        });
    }

    fn skip(&mut self, name: &str, why: &str) {
        self.0.push(IdentityCheck {
            name: name.to_owned(),
            status: CheckStatus::Skipped,
            detail: Some(why.to_owned()),
        });
    }
}

fn combine(coeffs: &[BigRational], basis: &[RationalMatrix]) -> RationalMatrix {
    let n = basis[0].rows();
    let mut acc = RationalMatrix::zeros(n, n);
    for (c, m) in coeffs.iter().zip(basis) {
        acc.add_scaled(c, m);
    }
    acc
}

/// Verifies the analytic results for the distance matrix of `g` by direct
/// exact matrix computation.
pub fn cross_validate(g: &Graph) -> Result<CrossValidation, NotDistanceRegular> {
    let array = intersection_array_of(g)?;
    let dist = g.distances()?;
    let n = g.vertex_count();
    let d = array.diameter();
    let k = array.valency();
    let kq = rat(k);

    let basis: Vec<RationalMatrix> = (0..=d).map(|i| distance_indicator(&dist, i)).collect();
    let adjacency = g.adjacency_matrix();
    let dmat = g.distance_matrix()?;
    let identity = RationalMatrix::identity(n);
    let ones = RationalMatrix::filled(n, n, BigRational::one());
    let zero = RationalMatrix::zeros(n, n);
    let mut powers = MatrixPowers::new(adjacency.clone()).expect("adjacency is square");
    let mut checks = Checks(Vec::new());

    let weighted: Vec<BigRational> = (0..=d as i64).map(rat).collect();
    checks.push("distance_matrix_is_sum_i_a_i", combine(&weighted, &basis) == dmat);
    checks.push(
        "sum_of_distance_matrices_is_j",
        combine(&vec![BigRational::one(); d + 1], &basis) == ones,
    );

    let recurrence_ok = (0..=d).all(|i| {
        let lhs = &adjacency * &basis[i];
        let mut rhs = RationalMatrix::zeros(n, n);
        let ii = i as isize;
        if i > 0 {
            rhs.add_scaled(&rat(array.b(ii - 1)), &basis[i - 1]);
        }
        rhs.add_scaled(&rat(array.a(ii)), &basis[i]);
        if i < d {
            rhs.add_scaled(&rat(array.c(ii + 1)), &basis[i + 1]);
        }
        lhs == rhs
    });
    checks.push("three_term_recurrence", recurrence_ok);

    let polys = distance_polynomials(&array);
    let poly_ok = polys.v.iter().enumerate().all(|(i, v)| powers.eval(v) == basis[i]);
    checks.push("distance_polynomials", poly_ok);

    // Shift and power relations for X = D.
    let table = CoefficientTable::with_distance_seed(&array);
    let xs: Vec<RationalMatrix> = (0..=d).map(|i| combine(table.row(i), &basis)).collect();
    let shift_ok = (0..d).all(|i| {
        let lhs = &adjacency * &xs[i];
        let mut rhs = xs[i].scale(&kq);
        rhs.add_scaled(&BigRational::one(), &xs[i + 1]);
        lhs == rhs
    });
    checks.push("shift_relation", shift_ok);
    let p = table.p_matrix();
    let power_ok = (0..=d).all(|i| {
        let lhs = powers.power(i) * &xs[0];
        lhs == combine(&p.column(i), &basis)
    });
    checks.push("power_relation", power_ok);
    let binomial_ok = (0..=d).all(|i| {
        let coeffs: Vec<BigRational> = (0..=i)
            .map(|j| {
                BigRational::from_integer(binomial(i, j)) * crate::exact::rational::pow_rational(&kq, (i - j) as i64)
            })
            .collect();
        powers.power(i) * &xs[0] == combine(&coeffs, &xs)
    });
    checks.push("power_relation_binomial", binomial_ok);

    // Invertibility verdicts.
    let analysis = analyze_distance(&array);
    let direct = invert_exact(&dmat).expect("D is square");
    let direct_rank = match &direct {
        Inversion::Invertible(_) => n,
        Inversion::Singular { rank, .. } => *rank,
    };
    checks.push_detail(
        "invertibility_matches_rank",
        analysis.invertible == direct.is_invertible(),
        Some(format!("det(Q) = {}, rank(D) = {direct_rank} of {n}", analysis.det_q)),
    );
    match (&analysis.y, &analysis.w, direct.inverse()) {
        (Some(y), Some(w), Some(inv)) => {
            let poly_inv = (0..=d).fold(RationalMatrix::zeros(n, n), |mut acc, i| {
                acc.add_scaled(&y[i], &powers.power(i).clone());
                acc
            });
            checks.push("inverse_in_adjacency_powers", (&poly_inv * &dmat).is_identity());
            checks.push("inverse_in_distance_basis", combine(w, &basis) == *inv);
        }
        _ => {
            checks.skip("inverse_in_adjacency_powers", "distance matrix is singular");
            checks.skip("inverse_in_distance_basis", "distance matrix is singular");
        }
    }

    // Minimal polynomial and J.
    let minimal_ok = polys.minimal.degree() == Some(d + 1) && powers.eval(&polys.minimal) == zero;
    checks.push("minimal_polynomial_annihilates", minimal_ok);
    let flattened = RationalMatrix::from_fn(d + 1, n * n, |i, e| powers.power(i).entries()[e].clone());
    checks.push("powers_below_d_plus_1_independent", flattened.rank() == d + 1);
    checks.push("all_ones_polynomial", powers.eval(&polys.f) == ones);

    if d == 2 {
        srg_checks(
            &mut checks,
            &array,
            n,
            &adjacency,
            &dmat,
            &basis,
            &direct,
            &identity,
            &ones,
        );
    }

    Ok(CrossValidation {
        vertices: n,
        array,
        analysis,
        direct_rank,
        checks: checks.0,
    })
}

#[allow(clippy::too_many_arguments)]
fn srg_checks(
    checks: &mut Checks,
    array: &IntersectionArray,
    n: usize,
    adjacency: &RationalMatrix,
    dmat: &RationalMatrix,
    basis: &[RationalMatrix],
    direct: &Inversion,
    identity: &RationalMatrix,
    ones: &RationalMatrix,
) {
    let k = array.valency();
    let (a, c) = (array.a(1), array.c(2));
    let (kq, aq, cq) = (rat(k), rat(a), rat(c));
    let a2 = adjacency * adjacency;

    let eq1 = &(&ones.scale(&rat(2)) - &identity.scale(&rat(2))) - adjacency;
    checks.push("srg_distance_from_adjacency", *dmat == eq1);

    let mut walks = a2.clone();
    walks.add_scaled(&(&cq - &aq), adjacency);
    walks.add_scaled(&(&cq - &kq), identity);
    checks.push("srg_walk_count", walks == ones.scale(&cq));

    let mut second = a2.clone();
    second.add_scaled(&-aq.clone(), adjacency);
    second.add_scaled(&-kq.clone(), identity);
    checks.push("srg_second_distance_matrix", second.scale(&cq.recip()) == basis[2]);

    let params = SrgParams { n: n as i64, k, a, c };
    let closed = match srg_closed_form(&params) {
        Ok(r) => r,
        Err(e) => {
            checks.push_detail("srg_closed_form", false, Some(e.to_string()));
            return;
        }
    };
    checks.push("srg_singularity_criterion", closed.invertible == direct.is_invertible());
    match (
        closed.inverse_i.as_ref(),
        closed.inverse_a.as_ref(),
        closed.inverse_j.as_ref(),
        direct.inverse(),
    ) {
        (Some(ci), Some(ca), Some(cj), Some(inv)) => {
            let mut m = identity.scale(ci);
            m.add_scaled(ca, adjacency);
            m.add_scaled(cj, ones);
            checks.push("srg_closed_inverse", m == *inv);
        }
        _ => checks.skip("srg_closed_inverse", "distance matrix is singular"),
    }
    match &closed.adjacency_inverse {
        Some(coeffs) => {
            let mut m = identity.scale(&coeffs[0]);
            m.add_scaled(&coeffs[1], adjacency);
            m.add_scaled(&coeffs[2], &a2);
            checks.push("srg_adjacency_inverse", (&m * adjacency).is_identity());
        }
        None => {
            let singular = !invert_exact(adjacency).expect("square").is_invertible();
            checks.push_detail(
                "srg_adjacency_inverse",
                singular,
                Some("k = c: adjacency matrix must be singular".to_owned()),
            );
        }
    }
    let direct_det = det_exact(dmat).expect("square");
    checks.push_detail(
        "srg_determinant",
        closed.det_d == direct_det,
        Some(format!("closed form {}, direct {}", closed.det_d, direct_det)),
    );
    if closed.det_d.is_zero() != !direct.is_invertible() {
        checks.push("srg_determinant_zero_iff_singular", false);
    }
}
