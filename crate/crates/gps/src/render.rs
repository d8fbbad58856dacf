//! Text, JSON and DOT output. JSON objects use sorted keys, so output is
//! byte-stable for a given input.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use gps_core::harness::{lookup, CheckResult, Status};
use gps_core::maps::MapAnalysis;
use gps_core::spectra::Trilean;
use gps_core::topology::{FiniteTopology, ModuleSpace, PointSet, TopologyReport};
use gps_core::{GradedModule, GradedSubmodule, Ideal, Model};
use serde_json::{json, Value};

pub const SCHEMA: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialise");
    s.push('\n');
    s
}

/// Generators grouped by the degree they live in.
pub fn submodule_json(m: &GradedModule, n: &GradedSubmodule) -> Value {
    let mut by_degree: BTreeMap<String, Vec<Vec<i64>>> =
        m.blocks().iter().map(|b| (b.degree.to_string(), Vec::new())).collect();
    for g in m.generators(n) {
        for (d, part) in m.homogeneous_components(&g) {
            by_degree.entry(d.to_string()).or_default().push(part.coords().to_vec());
        }
    }
    json!({ "label": m.describe(n), "generators": by_degree })
}

pub fn ideal_json(i: Ideal) -> Value {
    json!(i.generator())
}

fn set_json(y: &PointSet) -> Value {
    json!(y.indices())
}

fn set_text(y: &PointSet) -> String {
    let parts: Vec<String> = y.indices().iter().map(|i| format!("p{i}")).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn trilean_json<W>(t: &Trilean<W>, witness: impl FnOnce(&W) -> Value) -> Value {
    match t {
        Trilean::True => json!({ "value": "true" }),
        Trilean::FalseWithWitness(w) => json!({ "value": "false", "witness": witness(w) }),
        Trilean::Unknown(reason) => json!({ "value": "unknown", "reason": reason }),
    }
}

pub fn model_json(model: &Model) -> Value {
    let m = &model.module;
    let factors: Vec<Value> =
        m.factors().iter().map(|f| json!({ "order": f.order, "degree": f.degree.to_string() })).collect();
    let subs: Vec<Value> = model
        .submodules
        .iter()
        .map(|(name, s)| json!({ "name": name, "submodule": submodule_json(m, s) }))
        .collect();
    let subsets: Vec<Value> = model.subsets.iter().map(|(name, ms)| json!({ "name": name, "members": ms })).collect();
    json!({
        "schema": SCHEMA,
        "group": m.group().orders(),
        "ring": m.ring().to_string(),
        "module": { "text": m.to_string(), "factors": factors },
        "submodules": subs,
        "subsets": subsets,
    })
}

pub fn points_text(m: &GradedModule, points: &[GradedSubmodule]) -> String {
    let mut out = String::new();
    for (i, p) in points.iter().enumerate() {
        writeln!(out, "p{i} = {}", m.describe(p)).unwrap();
    }
    out
}

pub fn points_json(kind: &str, m: &GradedModule, points: &[GradedSubmodule]) -> Value {
    let pts: Vec<Value> = points.iter().map(|p| submodule_json(m, p)).collect();
    json!({ "schema": SCHEMA, "kind": kind, "count": points.len(), "points": pts })
}

pub fn report_json(r: &TopologyReport) -> Value {
    let comps: Vec<Value> = r
        .components
        .iter()
        .map(|c| json!({ "points": set_json(&c.set), "generic_points": c.generic_points }))
        .collect();
    json!({
        "points": r.points,
        "connected": r.connected,
        "irreducible": r.irreducible,
        "t0": r.t0,
        "t1": r.t1,
        "sober": r.sober,
        "quasi_compact": r.quasi_compact,
        "spectral": r.spectral,
        "trivial_topology": r.trivial_topology,
        "hochster": {
            "t0": r.hochster.t0,
            "quasi_compact": r.hochster.quasi_compact,
            "compact_open_base": r.hochster.compact_open_base,
            "sober": r.hochster.sober,
        },
        "components": comps,
    })
}

fn report_text(out: &mut String, r: &TopologyReport) {
    let flags = [
        ("connected", r.connected),
        ("irreducible", r.irreducible),
        ("t0", r.t0),
        ("t1", r.t1),
        ("sober", r.sober),
        ("quasi_compact", r.quasi_compact),
        ("spectral", r.spectral),
        ("trivial_topology", r.trivial_topology),
    ];
    for (k, v) in flags {
        writeln!(out, "{k} {v}").unwrap();
    }
    writeln!(out, "components").unwrap();
    for c in &r.components {
        let generic: Vec<String> = c.generic_points.iter().map(|i| format!("p{i}")).collect();
        writeln!(out, "  {} generic [{}]", set_text(&c.set), generic.join(", ")).unwrap();
    }
}

fn space_points(space: &ModuleSpace<'_>) -> Vec<GradedSubmodule> {
    (0..space.len()).map(|p| space.point(p).clone()).collect()
}

pub fn space_text(space: &ModuleSpace<'_>, report: &TopologyReport) -> String {
    let m = space.module();
    let mut out = format!("space {} ({} points)\n", space.kind().name(), space.len());
    out.push_str(&points_text(m, &space_points(space)));
    writeln!(out, "closed sets").unwrap();
    for c in space.topology().closed_sets() {
        writeln!(out, "  {}", set_text(c)).unwrap();
    }
    writeln!(out, "base").unwrap();
    for (r, s) in space.base() {
        writeln!(out, "  S_{r} = {}", set_text(s)).unwrap();
    }
    report_text(&mut out, report);
    out
}

pub fn space_json(space: &ModuleSpace<'_>, report: &TopologyReport) -> Value {
    let m = space.module();
    let pts: Vec<Value> = space_points(space).iter().map(|p| submodule_json(m, p)).collect();
    let closed: Vec<Value> = space.topology().closed_sets().iter().map(set_json).collect();
    let base: Vec<Value> = space.base().iter().map(|(r, s)| json!({ "r": r, "set": set_json(s) })).collect();
    json!({
        "schema": SCHEMA,
        "space": space.kind().name(),
        "points": pts,
        "closed_sets": closed,
        "base": base,
        "report": report_json(report),
    })
}

/// Specialisation preorder: `p -> q` when `q` lies in the closure of `p`.
/// Points with equal closures share a cluster and edges are Hasse-reduced
/// between clusters.
pub fn space_dot(name: &str, labels: &[String], top: &FiniteTopology) -> String {
    let n = labels.len();
    let closures: Vec<PointSet> = (0..n).map(|i| top.point_closure(i)).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        match classes.iter_mut().find(|c| closures[c[0]] == closures[i]) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    let k = classes.len();
    let above = |a: usize, b: usize| a != b && closures[classes[a][0]].contains(classes[b][0]);
    let mut out = format!("digraph \"{name}\" {{\n  compound=true;\n  node [shape=box];\n");
    for (c, members) in classes.iter().enumerate() {
        if members.len() > 1 {
            writeln!(out, "  subgraph cluster_{c} {{\n    label=\"same closure\";").unwrap();
            for &i in members {
                writeln!(out, "    p{i} [label={:?}];", labels[i]).unwrap();
            }
            out.push_str("  }\n");
        } else {
            writeln!(out, "  p{} [label={:?}];", members[0], labels[members[0]]).unwrap();
        }
    }
    for a in 0..k {
        for b in 0..k {
            if above(a, b) && !(0..k).any(|c| c != a && c != b && above(a, c) && above(c, b)) {
                let (pa, pb) = (classes[a][0], classes[b][0]);
                let mut attrs = Vec::new();
                if classes[a].len() > 1 {
                    attrs.push(format!("ltail=cluster_{a}"));
                }
                if classes[b].len() > 1 {
                    attrs.push(format!("lhead=cluster_{b}"));
                }
                if attrs.is_empty() {
                    writeln!(out, "  p{pa} -> p{pb};").unwrap();
                } else {
                    writeln!(out, "  p{pa} -> p{pb} [{}];", attrs.join(", ")).unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn space_labels(space: &ModuleSpace<'_>) -> Vec<String> {
    (0..space.len()).map(|p| space.module().describe(space.point(p))).collect()
}

pub fn map_text(space: &ModuleSpace<'_>, a: &MapAnalysis, annihilator: Ideal) -> String {
    let m = space.module();
    let mut out = format!(
        "map {}: {} -> Spec({})\nannihilator {annihilator}\n",
        a.kind.name(),
        space.kind().name(),
        a.reduced_ring
    );
    for p in 0..space.len() {
        writeln!(out, "p{p} = {} -> {}", m.describe(space.point(p)), ring_point(a, p)).unwrap();
    }
    let injective = match &a.injective {
        Trilean::FalseWithWitness((x, y)) => format!("false (p{x}, p{y})"),
        t => t.label().into(),
    };
    let surjective = match &a.surjective {
        Trilean::FalseWithWitness(i) => format!("false (misses {i})"),
        t => t.label().into(),
    };
    writeln!(out, "injective {injective}").unwrap();
    writeln!(out, "surjective {surjective}").unwrap();
    writeln!(out, "continuous {}", a.is_continuous()).unwrap();
    writeln!(out, "open_and_closed {}", a.open_closed.label()).unwrap();
    if let Some(b) = a.image_identities {
        writeln!(out, "image_identities {b}").unwrap();
    }
    writeln!(out, "bijective {}", a.is_bijective()).unwrap();
    writeln!(out, "homeomorphism {}", a.is_homeomorphism()).unwrap();
    writeln!(out, "fibers").unwrap();
    for (i, f) in &a.fibers {
        writeln!(out, "  {i}: {}", set_text(f)).unwrap();
    }
    out
}

fn ring_point(a: &MapAnalysis, p: usize) -> String {
    a.fibers
        .iter()
        .find(|(_, f)| f.contains(p))
        .map(|(i, _)| i.to_string())
        .expect("every point lies in a fiber")
}

pub fn map_json(space: &ModuleSpace<'_>, a: &MapAnalysis, annihilator: Ideal) -> Value {
    let m = space.module();
    let images: Vec<Value> = (0..space.len())
        .map(|p| {
            let prime = a.fibers.iter().find(|(_, f)| f.contains(p)).map(|(i, _)| i.generator());
            json!({ "point": submodule_json(m, space.point(p)), "prime": prime })
        })
        .collect();
    let fibers: BTreeMap<String, Value> =
        a.fibers.iter().map(|(i, f)| (i.generator().to_string(), set_json(f))).collect();
    let continuity: Vec<Value> = a
        .continuity
        .iter()
        .map(|w| json!({ "ideal": ideal_json(w.ideal), "preimage": set_json(&w.preimage), "variety": set_json(&w.variety) }))
        .collect();
    json!({
        "schema": SCHEMA,
        "map": a.kind.name(),
        "space": space.kind().name(),
        "reduced_ring": a.reduced_ring.to_string(),
        "annihilator": ideal_json(annihilator),
        "images": images,
        "injective": trilean_json(&a.injective, |(x, y)| json!([x, y])),
        "surjective": trilean_json(&a.surjective, |i| ideal_json(*i)),
        "open_and_closed": trilean_json(&a.open_closed, set_json),
        "image_identities": a.image_identities,
        "continuous": a.is_continuous(),
        "continuity": continuity,
        "bijective": a.is_bijective(),
        "homeomorphism": a.is_homeomorphism(),
        "fibers": fibers,
    })
}

pub struct CheckSummary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

pub fn summarize(results: &[CheckResult]) -> CheckSummary {
    let count = |f: fn(&Status) -> bool| results.iter().filter(|r| f(&r.status)).count();
    CheckSummary {
        pass: count(|s| matches!(s, Status::Pass { .. })),
        fail: count(|s| matches!(s, Status::Fail(_))),
        skipped: count(|s| matches!(s, Status::Skipped(_))),
    }
}

pub fn checks_text(instance: &str, results: &[CheckResult], timings: bool) -> String {
    let mut out = format!("instance {instance}\n");
    for r in results {
        match &r.status {
            Status::Pass { substantive, vacuous } => {
                write!(out, "{} pass substantive={substantive} vacuous={vacuous}", r.id).unwrap()
            }
            Status::Skipped(reason) => write!(out, "{} skipped: {reason}", r.id).unwrap(),
            Status::Fail(c) => {
                let inputs: Vec<String> = c.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                write!(out, "{} FAIL [{}] lhs={} rhs={}", r.id, inputs.join("; "), c.lhs, c.rhs).unwrap()
            }
        }
        if timings {
            write!(out, " {}us", r.elapsed_us.unwrap_or(0)).unwrap();
        }
        out.push('\n');
        for note in &r.notes {
            writeln!(out, "  note: {note}").unwrap();
        }
    }
    let s = summarize(results);
    writeln!(out, "summary pass={} fail={} skipped={}", s.pass, s.fail, s.skipped).unwrap();
    out
}

pub fn checks_json(instance: &str, results: &[CheckResult], timings: bool) -> Value {
    let checks: Vec<Value> = results
        .iter()
        .map(|r| {
            let mut v = json!({
                "id": r.id,
                "statement": lookup(r.id).map(|c| c.statement).unwrap_or_default(),
                "status": r.status.label(),
                "notes": r.notes,
            });
            let obj = v.as_object_mut().expect("object");
            match &r.status {
                Status::Pass { substantive, vacuous } => {
                    obj.insert("substantive".into(), json!(substantive));
                    obj.insert("vacuous".into(), json!(vacuous));
                }
                Status::Skipped(reason) => {
                    obj.insert("reason".into(), json!(reason));
                }
                Status::Fail(c) => {
                    let inputs: BTreeMap<&str, &str> = c.inputs.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
                    obj.insert("counterexample".into(), json!({ "inputs": inputs, "lhs": c.lhs, "rhs": c.rhs }));
                }
            }
            if timings {
                obj.insert("elapsed_us".into(), json!(r.elapsed_us));
            }
            v
        })
        .collect();
    let s = summarize(results);
    json!({
        "schema": SCHEMA,
        "instance": instance,
        "checks": checks,
        "summary": { "pass": s.pass, "fail": s.fail, "skipped": s.skipped },
    })
}
