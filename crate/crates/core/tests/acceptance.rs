//! Acceptance suite: one line per criterion, non-zero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::Rng;
use treestab::census::{census, CensusOptions, CensusReport};
use treestab::dh::{find_forbidden_induced_subgraph, replay};
use treestab::families;
use treestab::graph::Graph;
use treestab::poly::{
    saturation_check, sturm_real_rooted, GaussianRational, LinearForm, RootVerdict, Saturation,
};
use treestab::rational::int;
use treestab::spanning::{
    enumerate_spanning_trees, matrix_tree_count, vertex_spanning_polynomial,
    weighted_vertex_spanning_polynomial, EdgeWeights,
};
use treestab::stability::{
    build_refutation, check_refutation, factored_polynomial, weak_stability_check,
    weighted_sign_check, WeakStability, WeightedSign,
};
use treestab::{MultiPoly, Rational};

use common::{at_ones, random_connected_graph, random_sequence, rng, x1};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(g: &Graph) -> MultiPoly {
    vertex_spanning_polynomial(g).expect("within the tree guard")
}

fn cayley() -> Outcome {
    let start = Instant::now();
    for n in 3..=7 {
        let expected = MultiPoly::sum_of_vars(n, 0..n).pow(n as u32 - 2);
        ensure!(
            p(&families::complete(n)) == expected,
            "K_{n} differs from (sum x)^{}",
            n - 2
        );
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok("K_3..K_7 match (limit 10s)".to_string())
}

fn bipartite() -> Outcome {
    for m in 2..=4 {
        for n in 2..=4 {
            let total = m + n;
            let xs = MultiPoly::sum_of_vars(total, 0..m);
            let ys = MultiPoly::sum_of_vars(total, m..total);
            let expected = xs.pow(n as u32 - 1) * ys.pow(m as u32 - 1);
            ensure!(
                p(&families::complete_bipartite(m, n)) == expected,
                "K_{{{m},{n}}} differs"
            );
        }
    }
    Ok("9 pairs (m, n) in 2..=4 match".into())
}

fn golden() -> Outcome {
    let x = x1(5);
    let house = (x(1) + x(4)) * x(2).pow(2)
        + (x(3) + x(4) + x(5)) * (x(1) + x(4)) * x(2)
        + x(4) * x(5) * (x(1) + x(3) + x(4));
    ensure!(p(&families::house()) == house, "house");

    let gem = x(1).pow(3)
        + (x(2) + x(3).scale(&int(2)) + x(4).scale(&int(2)) + x(5)) * x(1).pow(2)
        + (x(3).pow(2)
            + (x(2) + x(4).scale(&int(3)) + x(5)) * x(3)
            + (x(4) + x(5)) * (x(4) + x(2)))
            * x(1)
        + x(3) * x(4) * (x(2) + x(3) + x(4) + x(5));
    ensure!(p(&families::gem()) == gem, "gem");

    let c5 = x(1) * x(2) * x(3)
        + x(2) * x(3) * x(4)
        + x(3) * x(4) * x(5)
        + x(4) * x(5) * x(1)
        + x(5) * x(1) * x(2);
    ensure!(p(&families::cycle(5)) == c5, "C_5");

    let x = x1(6);
    let domino = (x(4) + x(6)) * (x(2) + x(4)) * x(1).pow(2)
        + (x(4) + x(6)) * (x(3) + x(5)) * (x(2) + x(4)) * x(1)
        + x(3) * x(4) * x(5) * (x(2) + x(4) + x(6));
    ensure!(p(&families::domino()) == domino, "domino");
    Ok("house, gem, domino and C_5 equal the printed expansions".into())
}

/// The n <= 6 census, shared by two criteria.
fn census_six() -> Result<&'static (CensusReport, Duration), String> {
    static REPORT: OnceLock<Result<(CensusReport, Duration), String>> = OnceLock::new();
    REPORT
        .get_or_init(|| {
            let start = Instant::now();
            let report = census(6, CensusOptions::default()).map_err(|e| e.to_string())?;
            Ok((report, start.elapsed()))
        })
        .as_ref()
        .map_err(Clone::clone)
}

fn theorem_at_desk_scale() -> Outcome {
    let (report, elapsed) = census_six()?;
    let elapsed = *elapsed;
    let graphs: usize = report.sizes.iter().map(|s| s.graphs).sum();
    ensure!(
        graphs == 1 + 4 + 38 + 728 + 26704,
        "{graphs} labeled connected graphs"
    );
    ensure!(
        report.disagreements == 0,
        "{} disagreements",
        report.disagreements
    );
    ensure!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    let dh: usize = report.sizes.iter().map(|s| s.distance_hereditary).sum();
    Ok(format!("{graphs} graphs on 2..=6 vertices, {dh} distance-hereditary, 0 disagreements, {elapsed:.2?}"))
}

fn certificate_soundness() -> Outcome {
    let (report, _) = census_six()?;
    let unstable: Vec<_> = report.rows.iter().filter(|r| !r.stable).collect();
    ensure!(
        unstable.iter().all(|r| r.certificate_checked),
        "an unstable certificate failed to check"
    );

    for g in [
        families::cycle(5),
        families::cycle(6),
        families::gem(),
        families::house(),
        families::domino(),
    ] {
        let w = find_forbidden_induced_subgraph(&g).ok_or("no witness on a forbidden pattern")?;
        let cert = build_refutation(&g, &w).map_err(|e| e.to_string())?;
        ensure!(
            check_refutation(&g, &cert) == Ok(true),
            "{:?} certificate fails",
            w.kind
        );
    }

    let u = |s: &str| MultiPoly::parse(s, Some(1)).unwrap();
    for q in ["x0^2 + 2*x0 + 2", "2*x0^2 + 5*x0 + 4"] {
        ensure!(
            sturm_real_rooted(&u(q)) == Ok(RootVerdict::HasNonrealRoot),
            "Sturm on {q}"
        );
    }

    let i = GaussianRational::i();
    let one_plus_i = GaussianRational::new(int(1), int(1));
    let cycle = MultiPoly::parse("x0*x1 + 1", Some(2)).unwrap();
    ensure!(
        cycle
            .eval_gaussian(&[i.clone(), i.clone()])
            .unwrap()
            .is_zero(),
        "x1 x2 + 1 at (i, i)"
    );
    let c5 = MultiPoly::parse("x1*x4 - x1*x3 - x1", Some(5)).unwrap();
    let point = [i.clone(), i.clone(), i.clone(), i.clone(), one_plus_i];
    ensure!(
        c5.eval_gaussian(&point).unwrap().is_zero(),
        "x2 (x5 - x4 - 1) at x4 = i, x5 = 1 + i"
    );
    Ok(format!(
        "{} unstable census verdicts check; canonical certificates and witnesses hold",
        unstable.len()
    ))
}

fn factorization_soundness() -> Outcome {
    let mut r = rng(6);
    for trial in 0..200 {
        let n = r.random_range(2..=8);
        let seq = random_sequence(&mut r, n);
        let g = replay(&seq).map_err(|e| e.to_string())?;
        let f = factored_polynomial(&seq).map_err(|e| e.to_string())?;
        ensure!(
            f.factors.len() == n - 2,
            "trial {trial}: {} factors for n = {n}",
            f.factors.len()
        );
        ensure!(
            f.expand() == p(&g),
            "trial {trial}: expansion differs from P_G"
        );
        ensure!(
            f.tree_count() == matrix_tree_count(&g).unwrap(),
            "trial {trial}: factor sizes vs tree count"
        );
    }
    Ok("200 random sequences, n in 2..=8".into())
}

fn oracle_agreement() -> Outcome {
    let mut r = rng(7);
    for trial in 0..100 {
        let n = r.random_range(1..=8);
        let g = random_connected_graph(&mut r, n, 0.4);
        let enumerated = enumerate_spanning_trees(&g).unwrap().count();
        let kirchhoff = matrix_tree_count(&g).unwrap();
        let ones = at_ones(&p(&g));
        ensure!(
            BigInt::from(enumerated) == kirchhoff,
            "trial {trial}: enumeration vs Kirchhoff"
        );
        ensure!(
            ones == Rational::from_integer(kirchhoff.clone()),
            "trial {trial}: P_G(1, ..., 1)"
        );
    }
    Ok("100 random connected graphs, n in 1..=8".into())
}

fn saturation() -> Outcome {
    let q = p(&families::cycle(6))
        .identify_variables(&[0, 0, 2, 1, 1, 2], 3)
        .unwrap();
    let expected = MultiPoly::parse(
        "2*x0*x1^2*x2 + x1^2*x2^2 + 2*x0^2*x1*x2 + x0^2*x2^2",
        Some(3),
    )
    .unwrap();
    ensure!(q == expected, "Q_{{C_6,f}} = {q}");
    match saturation_check(&q).unwrap() {
        Saturation::Missing(m) => ensure!(m.contains(&vec![1, 1, 2]), "missing {m:?}"),
        Saturation::Saturated => return Err("Q_{C_6,f} reported saturated".into()),
    }
    let c5 = weak_stability_check(&families::cycle(5), None).map_err(|e| e.to_string())?;
    ensure!(
        c5 == WeakStability::WeaklyStable {
            partitions_checked: 52
        },
        "C_5: {c5:?}"
    );
    let mut found = Vec::new();
    for n in [6, 7] {
        match weak_stability_check(&families::cycle(n), None).map_err(|e| e.to_string())? {
            WeakStability::Counterexample { map, missing, .. } => {
                found.push(format!("C_{n} f = {map:?} missing {:?}", missing[0]))
            }
            WeakStability::WeaklyStable { .. } => {
                return Err(format!("C_{n} reported weakly stable"))
            }
        }
    }
    Ok(format!(
        "(1,1,2) missing; C_5 weakly stable over 52 partitions; {}",
        found.join("; ")
    ))
}

fn gluing_components(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    let mut comps = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            for &w in g.neighbors(comp[k]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comps.push(comp);
    }
    comps
}

fn identities() -> Outcome {
    let mut r = rng(9);
    let (mut doubling, mut gluing) = (0, 0);
    while doubling + gluing < 100 {
        let n = r.random_range(2..=6);
        let g = random_connected_graph(&mut r, n, 0.3);
        let cuts = g.cut_vertices().unwrap();
        if gluing < 34 && !cuts.is_empty() {
            let v = cuts.as_slice()[r.random_range(0..cuts.len())];
            let comps = gluing_components(&g, v);
            let mut rhs = MultiPoly::var(n, v).pow(comps.len() as u32 - 1);
            for comp in comps {
                let mut block = comp.clone();
                block.push(v);
                let (h, map) = g.induced_subgraph(&block.into_iter().collect()).unwrap();
                rhs = rhs * p(&h).identify_variables(&map, n).unwrap();
            }
            ensure!(p(&g) == rhs, "gluing at {v} on {:?}", g.edges());
            gluing += 1;
            continue;
        }
        if doubling >= 66 {
            continue;
        }
        let u = r.random_range(0..n);
        let with_edge = doubling % 2 == 1;
        let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
        edges.extend(g.neighbors(u).iter().map(|&w| (w, n)));
        if with_edge {
            edges.push((u, n));
        }
        let doubled = Graph::from_edges(n + 1, edges).unwrap();
        let shifted = p(&g)
            .extend_vars(n + 1)
            .substitute_linear(u, &LinearForm::sum_of_vars(n + 1, [u, n]))
            .unwrap();
        let mut last: Vec<usize> = g.neighbors(u).to_vec();
        if with_edge {
            last.extend([u, n]);
        }
        let rhs = shifted * MultiPoly::sum_of_vars(n + 1, last);
        ensure!(
            p(&doubled) == rhs,
            "doubling (edge: {with_edge}) of {u} on {:?}",
            g.edges()
        );
        doubling += 1;
    }
    Ok(format!(
        "{doubling} doubling (half with edge) and {gluing} gluing instances"
    ))
}

fn weighted() -> Outcome {
    let mut r = rng(10);
    for trial in 0..50 {
        let n = r.random_range(2..=7);
        let g = random_connected_graph(&mut r, n, 0.35);
        let ones = EdgeWeights::uniform(&g, int(1)).unwrap();
        ensure!(
            weighted_vertex_spanning_polynomial(&g, &ones).unwrap() == p(&g),
            "trial {trial}: P_{{G,1}} != P_G"
        );
    }
    let mut mixed = 0;
    for trial in 0..50 {
        // A cycle with chords is two-connected.
        let n = r.random_range(3..=8);
        let mut edges: Vec<(usize, usize)> = families::cycle(n).edges().to_vec();
        for a in 0..n {
            for b in a + 2..n {
                if !(a == 0 && b == n - 1) && r.random_bool(0.3) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let m = g.edge_count();
        let negative = r.random_range(0..m);
        let positive = (negative + 1 + r.random_range(0..m - 1)) % m;
        let weights = g.edges().iter().enumerate().map(|(k, &e)| {
            let magnitude = int(r.random_range(1..=5));
            let sign_negative = k == negative || (k != positive && r.random_bool(0.5));
            (e, if sign_negative { -magnitude } else { magnitude })
        });
        let w = EdgeWeights::new(&g, weights.collect::<Vec<_>>()).unwrap();
        let verdict = weighted_sign_check(&g, &w).unwrap();
        ensure!(
            matches!(verdict, WeightedSign::MixedSignUnstable { .. }),
            "trial {trial}: {verdict:?}"
        );
        mixed += 1;
    }
    Ok(format!(
        "50 all-ones comparisons; {mixed} mixed-sign two-connected inputs flagged"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Cayley reproduction", cayley),
        ("bipartite formula", bipartite),
        ("golden polynomials", golden),
        ("theorem at desk scale", theorem_at_desk_scale),
        ("certificate soundness", certificate_soundness),
        ("factorization soundness", factorization_soundness),
        ("oracle agreement", oracle_agreement),
        ("saturation", saturation),
        ("doubling and gluing identities", identities),
        ("weighted polynomial", weighted),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]",
                k + 1
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "criterion {:>2} FAIL  {name}: {detail} [{elapsed:.2?}]",
                    k + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
