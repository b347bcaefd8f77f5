use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use super::{Detail, Outcome, Param, Sweep};
use crate::correspondences::{
    bur1, bur1_inverse, bur2, bur2_inverse, burge, burge_inverse, burge_symmetric, dual_rsk,
    dual_rsk_inverse, enumerate_by_degree, enumerate_matrices, rsk, rsk_inverse, rsk_symmetric,
    CorrespondenceError, IntMatrix, MatrixClass,
};
use crate::partitions::{partitions_of, threshold_partitions, Partition};
use crate::symchar::{
    cauchy_check, character, dual_cauchy_check, power_sum, schur_expand, schur_poly, schur_terms,
    CauchyReport, Construction, SchurExpansion, SymPoly,
};
use crate::symgroup::{
    character_table, decompose, induced_model_character, involutions, model_character,
    ClassFunction, InducedCharacter, ModelVariant,
};
use crate::tableaux::{kostka, standard_count, Tableau, Weight};

fn indicator(shapes: impl IntoIterator<Item = Partition>) -> SchurExpansion {
    shapes.into_iter().map(|l| (l, BigInt::from(1))).collect()
}

fn from_decomposition(m: BTreeMap<Partition, i64>) -> SchurExpansion {
    m.into_iter().map(|(l, c)| (l, BigInt::from(c))).collect()
}

fn expansion_detail(
    instance: String,
    expected: &SchurExpansion,
    actual: &SchurExpansion,
) -> Detail {
    Detail::new(instance, schur_terms(expected), schur_terms(actual))
}

fn js<T: Serialize>(t: &T) -> String {
    serde_json::to_string(t).expect("serializable")
}

/// `λ ⊢ d` with at most `n` parts satisfying `keep`.
fn shapes(d: usize, n: usize, keep: impl Fn(&Partition) -> bool) -> Vec<Partition> {
    partitions_of(d, Some(n))
        .into_iter()
        .filter(|l| keep(l))
        .collect()
}

fn expand(spec: &Construction, n: usize) -> SchurExpansion {
    schur_expand(&character(spec, n)).expect("characters are symmetric")
}

fn cauchy_details(report: CauchyReport) -> impl Iterator<Item = Detail> {
    let (m, n, d) = (report.m, report.n, report.d);
    report.records.into_iter().map(move |r| {
        Detail::new(
            format!("m={m} n={n} d={d} mu={} nu={}", js(&r.mu), js(&r.nu)),
            r.tableau_pairs,
            r.matrices,
        )
    })
}

fn gl_pair(s: &Sweep, check: fn(usize, usize, usize) -> CauchyReport) -> Outcome {
    let mut details = Vec::new();
    for m in s.range(Param::M) {
        for n in s.range(Param::N) {
            for d in s.range(Param::D) {
                details.extend(cauchy_details(check(m, n, d)));
            }
        }
    }
    Outcome::Checked(details)
}

pub(super) fn gl_duality(s: &Sweep) -> Outcome {
    gl_pair(s, cauchy_check)
}

pub(super) fn skew_gl_duality(s: &Sweep) -> Outcome {
    gl_pair(s, dual_cauchy_check)
}

pub(super) fn gl_gelfand(s: &Sweep) -> Outcome {
    let mut details = Vec::new();
    for n in s.range(Param::N) {
        for d in s.range(Param::D) {
            let total = (0..=d / 2).fold(SymPoly::zero(n), |acc, l| {
                let spec = Construction::tensor([
                    Construction::SymPower(d - 2 * l),
                    Construction::SymOfExt2(l),
                ]);
                acc.add(&character(&spec, n)).expect("same variable count")
            });
            let actual = schur_expand(&total).expect("characters are symmetric");
            let expected = indicator(shapes(d, n, |_| true));
            details.push(expansion_detail(format!("n={n} d={d}"), &expected, &actual));
        }
    }
    Outcome::Checked(details)
}

/// Every symmetric `n × n` matrix with entry sum `d`.
fn symmetric_matrices(n: usize, d: usize) -> Vec<IntMatrix> {
    Weight::all(d, n)
        .into_iter()
        .flat_map(|mu| enumerate_matrices(MatrixClass::Msym, &mu, &mu).expect("equal margins"))
        .collect()
}

fn diagonal_statistic(
    s: &Sweep,
    insert: fn(&IntMatrix) -> Result<Tableau, CorrespondenceError>,
    matrix_side: fn(&IntMatrix) -> usize,
    shape_side: fn(&Partition) -> usize,
) -> Outcome {
    let mut details = Vec::new();
    for n in s.range(Param::N) {
        for d in s.range(Param::D) {
            let matrices = symmetric_matrices(n, d);
            let agreeing = matrices
                .iter()
                .filter(|a| insert(a).is_ok_and(|p| matrix_side(a) == shape_side(&p.shape())))
                .count();
            details.push(Detail::new(
                format!("n={n} d={d}"),
                matrices.len(),
                agreeing,
            ));
        }
    }
    Outcome::Checked(details)
}

pub(super) fn schuetzenberger(s: &Sweep) -> Outcome {
    diagonal_statistic(
        s,
        rsk_symmetric,
        IntMatrix::trace,
        Partition::odd_column_count,
    )
}

pub(super) fn burge_schuetzenberger(s: &Sweep) -> Outcome {
    diagonal_statistic(
        s,
        burge_symmetric,
        IntMatrix::odd_diagonal_count,
        Partition::odd_row_count,
    )
}

/// `(k, l)` pairs in range with `k + 2l` at most the degree bound, unless
/// both are pinned.
fn degree_pairs(s: &Sweep) -> Vec<(usize, usize)> {
    let pinned = s.given(Param::K).is_some() && s.given(Param::L).is_some();
    let max_degree = s.bound(Param::K);
    let mut out = Vec::new();
    for k in s.range(Param::K) {
        for l in s.range(Param::L) {
            if pinned || k + 2 * l <= max_degree {
                out.push((k, l));
            }
        }
    }
    out
}

fn refined(
    s: &Sweep,
    spec: fn(usize, usize) -> Construction,
    statistic: fn(&Partition) -> usize,
) -> Outcome {
    let mut details = Vec::new();
    for n in s.range(Param::N) {
        for (k, l) in degree_pairs(s) {
            let actual = expand(&spec(k, l), n);
            let expected = indicator(shapes(k + 2 * l, n, |p| statistic(p) == k));
            details.push(expansion_detail(
                format!("n={n} k={k} l={l}"),
                &expected,
                &actual,
            ));
        }
    }
    Outcome::Checked(details)
}

pub(super) fn refined_gl_gelfand(s: &Sweep) -> Outcome {
    refined(
        s,
        |k, l| Construction::tensor([Construction::SymPower(k), Construction::SymOfExt2(l)]),
        Partition::odd_column_count,
    )
}

pub(super) fn burge_gelfand(s: &Sweep) -> Outcome {
    refined(
        s,
        |k, l| Construction::tensor([Construction::ExtPower(k), Construction::SymOfSym2(l)]),
        Partition::odd_row_count,
    )
}

fn single_family(
    s: &Sweep,
    param: Param,
    spec: fn(usize) -> Construction,
    keep: fn(&Partition) -> bool,
) -> Outcome {
    let mut details = Vec::new();
    for n in s.range(Param::N) {
        for l in s.range(param) {
            let actual = expand(&spec(l), n);
            let expected = indicator(shapes(2 * l, n, keep));
            details.push(expansion_detail(
                format!("n={n} {param}={l}"),
                &expected,
                &actual,
            ));
        }
    }
    Outcome::Checked(details)
}

pub(super) fn even_multiplicity(s: &Sweep) -> Outcome {
    single_family(
        s,
        Param::L,
        Construction::SymOfExt2,
        Partition::even_multiplicities,
    )
}

pub(super) fn all_parts_even(s: &Sweep) -> Outcome {
    single_family(
        s,
        Param::K,
        Construction::SymOfSym2,
        Partition::all_parts_even,
    )
}

/// Largest degree at which the graph-counting side of `threshold` runs.
const GRAPH_DEGREE_BOUND: usize = 6;

type GraphForward = fn(&IntMatrix) -> Result<Tableau, CorrespondenceError>;
type GraphInverse = fn(&Tableau) -> Result<IntMatrix, CorrespondenceError>;

#[derive(Serialize)]
struct GraphSide {
    count: u64,
    bijective: bool,
}

/// Graphs with degree sequence `mu` (with loops when `loops`) against
/// tableaux of weight `mu` whose shape, or its conjugate, is threshold.
fn graph_detail(mu: &Weight, loops: bool) -> Detail {
    let n = mu.len();
    let total = mu.total();
    let targets: Vec<Partition> = threshold_partitions(total)
        .into_iter()
        .map(|l| if loops { l.conjugate() } else { l })
        .filter(|l| l.len() <= n)
        .collect();
    let expected: u64 = targets
        .iter()
        .map(|l| kostka(l, mu).expect("sizes agree"))
        .sum();

    let graphs = enumerate_by_degree(mu, loops);
    let (forward, inverse): (GraphForward, GraphInverse) = if loops {
        (bur2, bur2_inverse)
    } else {
        (bur1, bur1_inverse)
    };
    let mut images = BTreeSet::new();
    let mut coherent = true;
    for a in &graphs {
        match forward(a) {
            Ok(p) if targets.contains(&p.shape()) && p.weight(n) == *mu => {
                coherent &= inverse(&p).map(|b| b.padded(n, n)).as_ref() == Ok(a);
                images.insert(p);
            }
            _ => coherent = false,
        }
    }
    let name = if loops { "bur2" } else { "bur1" };
    Detail::new(
        format!("{name} mu={}", js(mu)),
        GraphSide {
            count: expected,
            bijective: true,
        },
        GraphSide {
            count: graphs.len() as u64,
            bijective: coherent && images.len() == graphs.len() && images.len() as u64 == expected,
        },
    )
}

pub(super) fn threshold(s: &Sweep) -> Outcome {
    let mut details = Vec::new();
    for n in s.range(Param::N) {
        for l in s.range(Param::L) {
            let tp = threshold_partitions(2 * l);
            let expected = indicator(tp.iter().filter(|p| p.len() <= n).cloned());
            let actual = expand(&Construction::ExtOfExt2(l), n);
            details.push(expansion_detail(
                format!("ext_ext2 n={n} l={l}"),
                &expected,
                &actual,
            ));

            let expected = indicator(tp.iter().map(Partition::conjugate).filter(|p| p.len() <= n));
            let actual = expand(&Construction::ExtOfSym2(l), n);
            details.push(expansion_detail(
                format!("ext_sym2 n={n} l={l}"),
                &expected,
                &actual,
            ));

            if 2 * l <= GRAPH_DEGREE_BOUND {
                for mu in Weight::all(2 * l, n) {
                    details.push(graph_detail(&mu, false));
                    details.push(graph_detail(&mu, true));
                }
            }
        }
    }
    Outcome::Checked(details)
}

pub(super) fn rn_dimension(s: &Sweep) -> Outcome {
    let lambdas: Vec<Partition> = match s.lambda() {
        Some(l) => vec![l.clone()],
        None => s
            .range(Param::N)
            .into_iter()
            .flat_map(|n| partitions_of(n, None))
            .collect(),
    };
    let details = lambdas
        .into_iter()
        .map(|lambda| {
            let n = lambda.size();
            let f = standard_count(&lambda);
            let coefficient = schur_poly(&lambda, n)
                .coefficient_of_weight(&Weight::ones(n))
                .expect("n coordinates");
            let chi = crate::symgroup::mn_character(&lambda).at_identity();
            Detail::new(
                format!("lambda={lambda}"),
                json!({ "coefficient": f, "chi_at_identity": f }),
                json!({
                    "coefficient": i64::try_from(coefficient).expect("small"),
                    "chi_at_identity": chi,
                }),
            )
        })
        .collect();
    Outcome::Checked(details)
}

pub(super) fn schur_weyl(s: &Sweep) -> Outcome {
    let mut details = Vec::new();
    for m in s.range(Param::M) {
        let table = character_table(m);
        for n in s.range(Param::N) {
            for rho in partitions_of(m, None) {
                let actual = schur_expand(&power_sum(&rho, n)).expect("power sums are symmetric");
                let expected: SchurExpansion = table
                    .iter()
                    .filter(|(lambda, _)| lambda.len() <= n)
                    .filter_map(|(lambda, chi)| {
                        let v = chi.value(&rho).expect("rho is a partition of m");
                        (v != 0).then(|| (lambda.clone(), BigInt::from(v)))
                    })
                    .collect();
                details.push(expansion_detail(
                    format!("n={n} rho={rho}"),
                    &expected,
                    &actual,
                ));
            }
        }
    }
    Outcome::Checked(details)
}

fn decomposition(f: &ClassFunction) -> SchurExpansion {
    from_decomposition(decompose(f).expect("characters decompose integrally"))
}

pub(super) fn sn_gelfand(s: &Sweep) -> Outcome {
    let mut details = Vec::new();
    for n in s.range(Param::N) {
        for k in s.range(Param::K).into_iter().filter(|&k| k <= n) {
            let chi = model_character(n, k, ModelVariant::Rho1).expect("rho1 has no constraint");
            let expected = indicator(shapes(n, n, |p| p.odd_column_count() == k));
            details.push(expansion_detail(
                format!("n={n} k={k}"),
                &expected,
                &decomposition(&chi),
            ));
        }
        if s.given(Param::K).is_none() {
            let involution_count: usize = (0..=n).map(|k| involutions(n, k).len()).sum();
            let standard: u64 = partitions_of(n, None).iter().map(standard_count).sum();
            details.push(Detail::new(
                format!("dimension n={n}"),
                standard,
                involution_count as u64,
            ));
        }
    }
    Outcome::Checked(details)
}

pub(super) fn sn_rho2(s: &Sweep) -> Outcome {
    if let Some(n) = s.given(Param::N).filter(|n| n % 2 == 1) {
        return Outcome::Skipped(format!(
            "rho2 acts on fixed-point-free involutions; n = {n} is odd"
        ));
    }
    let details = s
        .range(Param::N)
        .into_iter()
        .filter(|n| n % 2 == 0)
        .map(|n| {
            let chi = model_character(n, 0, ModelVariant::Rho2).expect("n even");
            let expected = indicator(threshold_partitions(n));
            expansion_detail(format!("n={n}"), &expected, &decomposition(&chi))
        })
        .collect();
    Outcome::Checked(details)
}

pub(super) fn induced_identities(s: &Sweep) -> Outcome {
    let mut details = Vec::new();
    for n in s.range(Param::N) {
        for k in (n % 2..=n).step_by(2) {
            let induced =
                induced_model_character(n, k, InducedCharacter::ETensorOne).expect("n - k even");
            let rho1 = model_character(n, k, ModelVariant::Rho1).expect("rho1 has no constraint");
            details.push(Detail::new(
                format!("e-tensor-one n={n} k={k}"),
                &rho1,
                &induced,
            ));
        }
        if n % 2 == 0 {
            let trivial =
                induced_model_character(n, 0, InducedCharacter::TrivialB).expect("n even");
            let expected = indicator(shapes(n, n, Partition::all_parts_even));
            details.push(expansion_detail(
                format!("trivial-B n={n}"),
                &expected,
                &decomposition(&trivial),
            ));

            let eta = induced_model_character(n, 0, InducedCharacter::Eta).expect("n even");
            let rho2 = model_character(n, 0, ModelVariant::Rho2).expect("n even");
            details.push(Detail::new(format!("eta = rho2 n={n}"), &rho2, &eta));
            let expected = indicator(threshold_partitions(n));
            details.push(expansion_detail(
                format!("eta n={n}"),
                &expected,
                &decomposition(&eta),
            ));
        }
    }
    Outcome::Checked(details)
}

#[derive(Serialize)]
struct BijectionSide {
    images: u64,
    round_trips: u64,
}

type Forward = fn(&IntMatrix) -> Result<(Tableau, Tableau), CorrespondenceError>;
type Inverse = fn(&Tableau, &Tableau) -> Result<IntMatrix, CorrespondenceError>;

fn infallible_rsk(a: &IntMatrix) -> Result<(Tableau, Tableau), CorrespondenceError> {
    Ok(rsk(a))
}

fn infallible_burge(a: &IntMatrix) -> Result<(Tableau, Tableau), CorrespondenceError> {
    Ok(burge(a))
}

/// Distinct valid images and successful round trips over every matrix of
/// the class with margins in `ℕ^m × ℕ^n` summing to `d`.
fn bijection_detail(
    name: &str,
    (m, n, d): (usize, usize, usize),
    class: MatrixClass,
    forward: Forward,
    inverse: Inverse,
) -> Detail {
    let dual = class == MatrixClass::N;
    let mut pairs = 0;
    let mut matrices = 0;
    let mut images = BTreeSet::new();
    let mut round_trips = 0;
    for mu in Weight::all(d, m) {
        for nu in Weight::all(d, n) {
            pairs += partitions_of(d, None)
                .iter()
                .map(|lambda| {
                    let p_shape = if dual {
                        lambda.conjugate()
                    } else {
                        lambda.clone()
                    };
                    kostka(&p_shape, &nu).expect("sizes") * kostka(lambda, &mu).expect("sizes")
                })
                .sum::<u64>();
            for a in enumerate_matrices(class, &mu, &nu).expect("equal totals") {
                matrices += 1;
                let Ok((p, q)) = forward(&a) else { continue };
                let shapes_match = if dual {
                    p.shape() == q.shape().conjugate()
                } else {
                    p.shape() == q.shape()
                };
                if shapes_match && p.weight(n) == nu && q.weight(m) == mu {
                    if inverse(&p, &q).map(|b| b.padded(m, n)).as_ref() == Ok(&a) {
                        round_trips += 1;
                    }
                    images.insert((p, q));
                }
            }
        }
    }
    Detail::new(
        format!("{name} m={m} n={n} d={d}"),
        BijectionSide {
            images: pairs,
            round_trips: matrices,
        },
        BijectionSide {
            images: images.len() as u64,
            round_trips,
        },
    )
}

pub(super) fn bijections(s: &Sweep) -> Outcome {
    let mut details = Vec::new();
    for m in s.range(Param::M) {
        for n in s.range(Param::N) {
            for d in s.range(Param::D) {
                let dims = (m, n, d);
                details.push(bijection_detail(
                    "rsk",
                    dims,
                    MatrixClass::M,
                    infallible_rsk,
                    rsk_inverse,
                ));
                details.push(bijection_detail(
                    "dual-rsk",
                    dims,
                    MatrixClass::N,
                    dual_rsk,
                    dual_rsk_inverse,
                ));
                details.push(bijection_detail(
                    "burge",
                    dims,
                    MatrixClass::M,
                    infallible_burge,
                    burge_inverse,
                ));
            }
        }
    }
    Outcome::Checked(details)
}

pub(super) fn knuth_symmetry(s: &Sweep) -> Outcome {
    let mut details = Vec::new();
    for n in s.range(Param::N) {
        for d in s.range(Param::D) {
            let matrices: Vec<IntMatrix> = Weight::all(d, n)
                .iter()
                .flat_map(|mu| {
                    Weight::all(d, n).into_iter().flat_map(move |nu| {
                        enumerate_matrices(MatrixClass::M, mu, &nu).expect("equal totals")
                    })
                })
                .collect();
            for (name, f) in [("rsk", rsk as fn(&IntMatrix) -> _), ("burge", burge)] {
                let symmetric = matrices
                    .iter()
                    .filter(|a| {
                        let (p, q) = f(a);
                        f(&a.transpose()) == (q, p)
                    })
                    .count();
                details.push(Detail::new(
                    format!("{name} n={n} d={d}"),
                    matrices.len(),
                    symmetric,
                ));
            }
        }
    }
    Outcome::Checked(details)
}
