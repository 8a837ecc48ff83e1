//! Human-readable renderings of library values.

use std::fmt::Write;

use treestab::dh::{ForbiddenWitness, Step};
use treestab::rational::format_rational;
use treestab::stability::{CertOp, Propagation, RefutationCertificate, Terminal};

pub fn step(s: &Step) -> String {
    match *s {
        Step::Start { u, v } => format!("start {u} {v}"),
        Step::AddPendant { new, anchor } => format!("pendant {new} on {anchor}"),
        Step::AddFalseTwin { new, of } => format!("false twin {new} of {of}"),
        Step::AddTrueTwin { new, of } => format!("true twin {new} of {of}"),
    }
}

pub fn witness(w: &ForbiddenWitness) -> String {
    let vs: Vec<String> = w.vertices.iter().map(ToString::to_string).collect();
    format!("{} on [{}] (pattern order)", w.kind, vs.join(", "))
}

pub fn op(o: &CertOp) -> String {
    match o {
        CertOp::SubstituteReal { var, value } => {
            format!("substitute x{var} := {}", format_rational(value))
        }
        CertOp::IdentifyVariables { map, count } => {
            let m: Vec<String> = map.iter().map(ToString::to_string).collect();
            format!("identify variables [{}] into {count}", m.join(", "))
        }
        CertOp::ReverseVariable { var } => format!("reverse x{var}"),
        CertOp::PartialDerivative { var } => format!("differentiate in x{var}"),
    }
}

pub fn certificate(c: &RefutationCertificate) -> String {
    let mut out = String::new();
    let scope = match c.propagation {
        Propagation::WholeGraph => "whole graph",
        Propagation::InducedSubgraph => "induced subgraph",
    };
    writeln!(out, "certificate on {} ({scope}):", c.subgraph).unwrap();
    for o in &c.ops {
        writeln!(out, "  {}", op(o)).unwrap();
    }
    match &c.terminal {
        Terminal::ExactZero { point } => {
            let p: Vec<String> = point.iter().map(ToString::to_string).collect();
            writeln!(out, "  terminal: exact zero at ({})", p.join(", ")).unwrap();
        }
        Terminal::NonRealRootedUnivariate => {
            writeln!(out, "  terminal: univariate with a non-real root").unwrap()
        }
    }
    out
}

/// `y0*y1^2` style monomial; `1` for the zero exponent vector.
pub fn monomial(e: &[u32], var: &str) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("{var}{i}")
            } else {
                format!("{var}{i}^{k}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}
