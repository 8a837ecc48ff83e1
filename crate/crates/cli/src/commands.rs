use std::fmt::Write;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use treestab::census::{self as census_mod, CensusOptions};
use treestab::dh::{
    find_forbidden_induced_subgraph, is_distance_hereditary_bruteforce, pruning_sequence, replay,
    PruningOutcome, BRUTE_FORCE_MAX_N,
};
use treestab::families::Family;
use treestab::graph::{render_graph, Graph, GraphDoc, GraphFormat};
use treestab::par::Execution;
use treestab::poly::{newton_polytope, saturation_check, Saturation};
use treestab::rational::format_rational;
use treestab::spanning::{
    edge_spanning_polynomial_limited, enumerate_spanning_trees_limited, matrix_tree_count,
    vertex_spanning_polynomial_limited, weighted_vertex_spanning_polynomial_limited,
};
use treestab::stability::{
    check_refutation, decide_stability, factored_polynomial, weak_stability_check_with,
    weighted_sign_check, Evidence, RefutationCertificate, StabilityVerdict, WeakStability,
    WeightedSign,
};

use crate::error::CliError;
use crate::input::{parse_weights, read_file, GraphSource};
use crate::{render, Report};

pub struct Context {
    pub seed: u64,
    pub limit: u64,
}

pub fn poly(ctx: &Context, input: &GraphSource, factored: bool) -> Result<Report, CliError> {
    let g = input.load()?;
    if factored {
        let verdict = decide_stability(&g)?;
        let Some(f) = verdict.factored() else {
            return Err(CliError::Analysis(
                "graph is not distance-hereditary, so P_G has no product-of-sums form".into(),
            ));
        };
        let human = format!("P_G = {f}\n");
        return Ok(Report::ok(
            human,
            json!({ "n": g.n(), "factored": f, "rendered": f.to_string() }),
        ));
    }
    let p = vertex_spanning_polynomial_limited(&g, ctx.limit)?;
    Ok(Report::ok(
        format!("P_G = {p}\n"),
        json!({ "n": g.n(), "polynomial": p.to_string(), "terms": p.len(), "degree": p.total_degree() }),
    ))
}

pub fn edgepoly(ctx: &Context, input: &GraphSource) -> Result<Report, CliError> {
    let g = input.load()?;
    let q = edge_spanning_polynomial_limited(&g, ctx.limit)?;
    let rendered = q.render_with(|k| format!("e{k}"));
    let mut human = format!("Q_G = {rendered}\n");
    for (k, (u, v)) in g.edges().iter().enumerate() {
        writeln!(human, "  e{k} = {u}-{v}").unwrap();
    }
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
    Ok(Report::ok(
        human,
        json!({ "edges": edges, "polynomial": rendered, "terms": q.len() }),
    ))
}

pub fn wpoly(ctx: &Context, input: &GraphSource, weights: &Path) -> Result<Report, CliError> {
    let g = input.load()?;
    let w = parse_weights(&g, weights)?;
    let p = weighted_vertex_spanning_polynomial_limited(&g, &w, ctx.limit)?;
    let sign = weighted_sign_check(&g, &w)?;
    let mut human = format!("P_G,w = {p}\n");
    match &sign {
        WeightedSign::MixedSignUnstable {
            positive_edge,
            positive_weight,
            negative_edge,
            negative_weight,
        } => writeln!(
            human,
            "sign check: not stable (two-connected, edge {}-{} has weight {}, edge {}-{} has weight {})",
            positive_edge.0,
            positive_edge.1,
            format_rational(positive_weight),
            negative_edge.0,
            negative_edge.1,
            format_rational(negative_weight)
        )
        .unwrap(),
        WeightedSign::Inconclusive { reason } => writeln!(human, "sign check: inconclusive ({reason})").unwrap(),
    }
    Ok(Report::ok(
        human,
        json!({ "polynomial": p.to_string(), "sign_check": sign }),
    ))
}

pub fn trees(ctx: &Context, input: &GraphSource, list: bool) -> Result<Report, CliError> {
    let g = input.load()?;
    let count = matrix_tree_count(&g)?;
    let mut human = format!("spanning trees: {count}\n");
    let mut doc = json!({ "count": count.to_string() });
    if list {
        let trees: Vec<Vec<[usize; 2]>> = enumerate_spanning_trees_limited(&g, ctx.limit)?
            .map(|t| t.edges().iter().map(|&(u, v)| [u, v]).collect())
            .collect();
        for t in &trees {
            let edges: Vec<String> = t.iter().map(|[u, v]| format!("{u}-{v}")).collect();
            writeln!(human, "{}", edges.join(" ")).unwrap();
        }
        doc["trees"] = json!(trees);
    }
    Ok(Report::ok(human, doc))
}

pub fn dh(input: &GraphSource) -> Result<Report, CliError> {
    let g = input.load()?;
    let brute = (g.n() <= BRUTE_FORCE_MAX_N)
        .then(|| is_distance_hereditary_bruteforce(&g))
        .transpose()?;
    let (mut human, mut doc) = match pruning_sequence(&g)? {
        PruningOutcome::Sequence(seq) => {
            let mut human = String::from("distance-hereditary: yes\nconstruction:\n");
            for s in seq.steps() {
                writeln!(human, "  {}", render::step(s)).unwrap();
            }
            (
                human,
                json!({ "distance_hereditary": true, "sequence": seq }),
            )
        }
        PruningOutcome::Stuck { remaining } => {
            let w = find_forbidden_induced_subgraph(&g).ok_or_else(|| {
                CliError::Analysis("pruning stuck but no forbidden subgraph found".into())
            })?;
            let human = format!(
                "distance-hereditary: no\nno pendant or twin among {remaining}\nwitness: {}\n",
                render::witness(&w)
            );
            (
                human,
                json!({ "distance_hereditary": false, "remaining": remaining, "witness": w }),
            )
        }
    };
    if let Some(b) = brute {
        let agrees = b == doc["distance_hereditary"].as_bool().unwrap();
        writeln!(
            human,
            "brute-force distance check: {}",
            if agrees { "agrees" } else { "DISAGREES" }
        )
        .unwrap();
        doc["bruteforce"] = json!(b);
        if !agrees {
            return Ok(Report {
                human,
                json: doc,
                code: 1,
            });
        }
    }
    Ok(Report::ok(human, doc))
}

pub fn stability(input: &GraphSource) -> Result<Report, CliError> {
    let g = input.load()?;
    let verdict = decide_stability(&g)?;
    let mut human = String::new();
    match &verdict.evidence {
        Evidence::Factorization {
            sequence,
            factored,
            expansion_checked,
        } => {
            writeln!(human, "stable: yes").unwrap();
            writeln!(human, "P_G = {factored}").unwrap();
            let check = if *expansion_checked {
                "expansion matches the enumerated polynomial"
            } else {
                "expansion not compared (tree count above the guard)"
            };
            writeln!(human, "{} factors; {check}", factored.factors.len()).unwrap();
            writeln!(human, "construction:").unwrap();
            for s in sequence.steps() {
                writeln!(human, "  {}", render::step(s)).unwrap();
            }
        }
        Evidence::Refutation {
            witness,
            certificate,
        } => {
            writeln!(human, "stable: no").unwrap();
            writeln!(human, "witness: {}", render::witness(witness)).unwrap();
            human.push_str(&render::certificate(certificate));
            let reduced = certificate.reduced(&g)?;
            writeln!(human, "reduced polynomial: {reduced}").unwrap();
            writeln!(human, "certificate checks: yes").unwrap();
        }
    }
    Ok(Report::ok(
        human,
        serde_json::to_value(&verdict).expect("verdict serializes"),
    ))
}

/// Either document `stability` can emit, or a bare certificate.
enum CertDocument {
    Verdict(StabilityVerdict),
    Certificate(RefutationCertificate),
}

fn parse_cert_document(path: &Path) -> Result<CertDocument, CliError> {
    let text = read_file(path)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if value.get("evidence").is_some() {
        serde_json::from_value(value)
            .map(CertDocument::Verdict)
            .map_err(|e| CliError::Input(format!("{}: not a verdict: {e}", path.display())))
    } else {
        serde_json::from_value(value)
            .map(CertDocument::Certificate)
            .map_err(|e| CliError::Input(format!("{}: not a certificate: {e}", path.display())))
    }
}

fn check_factorization(
    ctx: &Context,
    g: &Graph,
    evidence: &Evidence,
) -> Result<Result<String, String>, CliError> {
    let Evidence::Factorization {
        sequence, factored, ..
    } = evidence
    else {
        unreachable!("called on factorization evidence");
    };
    let built = match replay(sequence) {
        Ok(h) => h,
        Err(e) => return Ok(Err(format!("construction sequence is invalid: {e}"))),
    };
    if &built != g {
        return Ok(Err("construction sequence builds a different graph".into()));
    }
    let recomputed = factored_polynomial(sequence)?;
    if &recomputed != factored {
        return Ok(Err("factors differ from those the sequence yields".into()));
    }
    if factored.tree_count() != matrix_tree_count(g)? {
        return Ok(Err("factor sizes do not multiply to the tree count".into()));
    }
    if factored.tree_count() <= ctx.limit.into() {
        if factored.expand() != vertex_spanning_polynomial_limited(g, ctx.limit)? {
            return Ok(Err("factorization does not expand to P_G".into()));
        }
        Ok(Ok("factorization expands to P_G".into()))
    } else {
        Ok(Ok(
            "factorization matches the sequence and tree count; expansion not compared".into(),
        ))
    }
}

pub fn check_cert(ctx: &Context, input: &GraphSource, cert: &Path) -> Result<Report, CliError> {
    let g = input.load()?;
    let (kind, outcome) = match parse_cert_document(cert)? {
        CertDocument::Certificate(c) => ("refutation", refutation_outcome(&g, &c)?),
        CertDocument::Verdict(v) => match &v.evidence {
            Evidence::Factorization { .. } if v.stable => {
                ("factorization", check_factorization(ctx, &g, &v.evidence)?)
            }
            Evidence::Refutation {
                witness,
                certificate,
            } if !v.stable => {
                let outcome = if witness.validate(&g) {
                    refutation_outcome(&g, certificate)?
                } else {
                    Err("witness is not an induced copy of its pattern".into())
                };
                ("refutation", outcome)
            }
            _ => {
                return Err(CliError::Input(
                    "verdict flag contradicts its evidence".into(),
                ))
            }
        },
    };
    let (valid, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    let human = format!(
        "{kind} certificate {}: {detail}\n",
        if valid { "valid" } else { "INVALID" }
    );
    Ok(Report {
        human,
        json: json!({ "kind": kind, "valid": valid, "detail": detail }),
        code: if valid { 0 } else { 1 },
    })
}

fn refutation_outcome(
    g: &Graph,
    c: &RefutationCertificate,
) -> Result<Result<String, String>, CliError> {
    Ok(if check_refutation(g, c)? {
        Ok(format!("refutes stability of P_G via {}", c.subgraph))
    } else {
        Err("replay does not reach the terminal condition".into())
    })
}

pub fn newton(
    ctx: &Context,
    input: &GraphSource,
    identify: Option<&[usize]>,
) -> Result<Report, CliError> {
    let g = input.load()?;
    let mut p = vertex_spanning_polynomial_limited(&g, ctx.limit)?;
    let mut var = "x";
    if let Some(map) = identify {
        let count = map.iter().max().map_or(0, |m| m + 1);
        p = p
            .identify_variables(map, count)
            .map_err(|e| CliError::Input(format!("--identify: {e}")))?;
        var = "y";
    }
    let hull = newton_polytope(&p).map_err(|e| CliError::Analysis(e.to_string()))?;
    let lattice = hull.lattice_points();
    let sat = saturation_check(&p).map_err(|e| CliError::Analysis(e.to_string()))?;
    let mut human = String::new();
    if identify.is_some() {
        writeln!(human, "Q = {}", p.render_with(|k| format!("y{k}"))).unwrap();
    }
    writeln!(
        human,
        "Newton polytope: dimension {} in {} coordinates, {} vertices, {} facets, {} lattice points, {} monomials",
        hull.affine_dim(),
        hull.dim(),
        hull.vertices().len(),
        hull.facet_count(),
        lattice.len(),
        p.len()
    )
    .unwrap();
    let missing = match &sat {
        Saturation::Saturated => {
            writeln!(human, "saturated: yes").unwrap();
            Vec::new()
        }
        Saturation::Missing(m) => {
            let names: Vec<String> = m.iter().map(|e| render::monomial(e, var)).collect();
            writeln!(human, "saturated: no; missing {}", names.join(", ")).unwrap();
            m.clone()
        }
    };
    Ok(Report::ok(
        human,
        json!({
            "polynomial": p.to_string(),
            "dimension": hull.affine_dim(),
            "ambient_dimension": hull.dim(),
            "vertices": hull.vertices(),
            "facets": hull.facet_count(),
            "lattice_points": lattice.len(),
            "saturated": sat.is_saturated(),
            "missing": missing,
        }),
    ))
}

pub fn weakstable(
    input: &GraphSource,
    max_parts: Option<usize>,
    sequential: bool,
) -> Result<Report, CliError> {
    let g = input.load()?;
    let exec = if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let result = weak_stability_check_with(&g, max_parts, exec)?;
    let human = match &result {
        WeakStability::WeaklyStable { partitions_checked } => {
            format!("weakly stable: yes ({partitions_checked} identifications saturated)\n")
        }
        WeakStability::Counterexample {
            map,
            parts,
            missing,
        } => {
            let f: Vec<String> = map.iter().map(ToString::to_string).collect();
            let names: Vec<String> = missing.iter().map(|e| render::monomial(e, "y")).collect();
            format!(
                "weakly stable: no\nf = [{}] into {parts} variables\nmissing: {}\n",
                f.join(", "),
                names.join(", ")
            )
        }
    };
    Ok(Report::ok(
        human,
        serde_json::to_value(&result).expect("result serializes"),
    ))
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = std::collections::BTreeSet::new();
    for k in 1..n {
        let parent = order[rng.random_range(0..k)];
        edges.insert((parent.min(order[k]), parent.max(order[k])));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.insert((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

pub fn family(ctx: &Context, spec: &[String], graph6: bool, p: f64) -> Result<Report, CliError> {
    let joined = spec.join(" ");
    let g = match spec {
        [name, n] if name == "random" => {
            let n: usize = n
                .parse()
                .map_err(|_| CliError::Input(format!("bad size `{n}`")))?;
            if n == 0 {
                return Err(CliError::Input(
                    "random graph needs at least one vertex".into(),
                ));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::Input(format!("--p must lie in [0, 1], got {p}")));
            }
            random_connected(&mut ChaCha8Rng::seed_from_u64(ctx.seed), n, p)
        }
        _ => joined.parse::<Family>().map_err(CliError::Input)?.build(),
    };
    let format = if graph6 {
        GraphFormat::Graph6
    } else {
        GraphFormat::EdgeList
    };
    let mut text = render_graph(&g, format);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(Report::ok(
        text,
        json!({ "family": joined, "graph": GraphDoc::from(&g) }),
    ))
}

pub fn census(n: usize, canonical: bool, list: bool, sequential: bool) -> Result<Report, CliError> {
    let options = CensusOptions {
        canonical,
        execution: if sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
    };
    let mut report = census_mod::census(n, options)?;
    let mut human = String::from(" n  graphs  stable  distance-hereditary  disagreements\n");
    for s in &report.sizes {
        writeln!(
            human,
            "{:>2}  {:>6}  {:>6}  {:>19}  {:>13}",
            s.n, s.graphs, s.stable, s.distance_hereditary, s.disagreements
        )
        .unwrap();
    }
    let total: usize = report.sizes.iter().map(|s| s.graphs).sum();
    writeln!(
        human,
        "total: {total} graphs, {} disagreements",
        report.disagreements
    )
    .unwrap();
    if list {
        writeln!(human, "graph6 n m stable dh forbidden prunable certificate").unwrap();
        for r in &report.rows {
            let forbidden = r.forbidden.map_or("-".to_string(), |k| k.to_string());
            writeln!(
                human,
                "{} {} {} {} {} {} {} {}",
                r.graph6,
                r.n,
                r.edges,
                r.stable,
                r.distance_hereditary,
                forbidden,
                r.prunable,
                r.certificate_checked
            )
            .unwrap();
        }
    } else {
        report.rows.clear();
    }
    let code = if report.disagreements == 0 { 0 } else { 1 };
    Ok(Report {
        human,
        json: serde_json::to_value(&report).expect("report serializes"),
        code,
    })
}
