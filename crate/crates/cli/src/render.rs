//! Text and JSON renderings of command results.
//!
//! JSON goes through `serde_json::Value`, whose maps keep keys sorted, so
//! identical results print byte-identical output.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use monclose_core::audit::VerifyReport;
use monclose_core::betti::BettiTable;
use monclose_core::document::{exponents_json, IdealDocument};
use monclose_core::figure::{FigurePoint, PointKind};
use monclose_core::{
    ExponentVector, IrreducibleComponent, MonomialIdeal, PrimaryComponent, PrimeSupport,
};

use crate::Format;

pub enum Output {
    Ideal(MonomialIdeal),
    Irreducible(Vec<String>, Vec<IrreducibleComponent>),
    Primary(Vec<String>, Vec<PrimaryComponent>),
    Primes(Vec<String>, BTreeSet<PrimeSupport>),
    Count(&'static str, usize),
    Flag(&'static str, bool),
    Betti(Vec<String>, BettiTable),
    CohenMacaulay {
        pd: usize,
        codim: usize,
    },
    Reduction {
        vars: Vec<String>,
        point: ExponentVector,
        result: ExponentVector,
    },
    Report(VerifyReport),
    Figure {
        path: String,
        points: Vec<FigurePoint>,
    },
}

fn prime_text(vars: &[String], p: &PrimeSupport) -> String {
    format!("<{}>", p.names(vars).join(", "))
}

fn gens_json(ideal: &MonomialIdeal) -> Value {
    Value::Array(ideal.gens().iter().map(exponents_json).collect())
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json()),
            Format::Text => self.text(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Output::Ideal(i) => IdealDocument::from_ideal(i).to_json_value(),
            Output::Irreducible(vars, comps) => {
                let mut comps: Vec<&IrreducibleComponent> = comps.iter().collect();
                comps.sort_by(|a, b| a.exponents().cmp(b.exponents()));
                json!({
                    "vars": vars,
                    "components": comps.iter().map(|c| json!({
                        "gens": gens_json(&c.to_ideal(vars)),
                        "radical": c.radical().names(vars),
                    })).collect::<Vec<_>>(),
                })
            }
            Output::Primary(vars, comps) => json!({
                "vars": vars,
                "components": comps.iter().map(|c| json!({
                    "gens": gens_json(&c.ideal),
                    "prime": c.prime.names(vars),
                })).collect::<Vec<_>>(),
            }),
            Output::Primes(vars, primes) => json!({
                "vars": vars,
                "primes": primes.iter().map(|p| p.names(vars)).collect::<Vec<_>>(),
            }),
            Output::Count(key, v) => json!({ *key: v }),
            Output::Flag(key, v) => json!({ *key: v }),
            Output::Betti(vars, table) => json!({
                "vars": vars,
                "entries": table.entries().iter().map(|((i, a), r)| json!({
                    "i": i,
                    "degree": exponents_json(a),
                    "rank": r,
                })).collect::<Vec<_>>(),
                "totals": table.totals(),
                "pd": table.projective_dimension(),
            }),
            Output::CohenMacaulay { pd, codim } => json!({
                "cohen_macaulay": pd == codim,
                "pd": pd,
                "codim": codim,
            }),
            Output::Reduction {
                vars,
                point,
                result,
            } => json!({
                "vars": vars,
                "point": exponents_json(point),
                "result": exponents_json(result),
            }),
            Output::Report(r) => r.to_json_value(),
            Output::Figure { path, points } => json!({
                "out": path,
                "points": points.len(),
                "vertices": points.iter().filter(|p| p.kind == PointKind::Vertex).count(),
            }),
        }
    }

    fn text(&self) -> String {
        let lines: Vec<String> = match self {
            Output::Ideal(i) => return IdealDocument::from_ideal(i).to_text(),
            Output::Irreducible(vars, comps) => {
                let mut comps: Vec<&IrreducibleComponent> = comps.iter().collect();
                comps.sort_by(|a, b| a.exponents().cmp(b.exponents()));
                comps.iter().map(|c| c.to_ideal(vars).to_string()).collect()
            }
            Output::Primary(vars, comps) => comps
                .iter()
                .map(|c| format!("{}: {}", prime_text(vars, &c.prime), c.ideal))
                .collect(),
            Output::Primes(vars, primes) => primes.iter().map(|p| prime_text(vars, p)).collect(),
            Output::Count(_, v) => vec![v.to_string()],
            Output::Flag(_, v) => vec![v.to_string()],
            Output::Betti(vars, table) => {
                let totals: Vec<String> = table.totals().iter().map(u64::to_string).collect();
                let mut lines = vec![format!("totals: {}", totals.join(" "))];
                for ((i, a), r) in table.entries() {
                    let m = monclose_core::ideal::format_monomial(vars, a);
                    lines.push(format!("beta_{i} {m}: {r}"));
                }
                lines
            }
            Output::CohenMacaulay { pd, codim } => {
                vec![format!("{} (pd {pd}, codim {codim})", pd == codim)]
            }
            Output::Reduction { result, .. } => vec![result.to_string()],
            Output::Report(r) => return r.to_text(),
            Output::Figure { path, points } => {
                let v = points
                    .iter()
                    .filter(|p| p.kind == PointKind::Vertex)
                    .count();
                vec![format!(
                    "wrote {} points ({v} vertices, {} interior) to {path}",
                    points.len(),
                    points.len() - v
                )]
            }
        };
        let mut out = String::new();
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }
}
