//! End-to-end acceptance run. Each criterion prints exactly one line:
//! `criterion N: PASS|FAIL <title> (<elapsed> / budget <b>) <detail>`.
//! Budgets are wall-clock limits and count as part of the verdict.

#[path = "../../core/tests/support/oracle.rs"]
mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use gps::{parse_model, render_model};
use gps_core::maps::{rho, ReducedRing};
use gps_core::spectra::{graded_radical_submodule, in_primary_spectrum, ModuleCatalog, RadicalResult};
use gps_core::topology::{FiniteTopology, ModuleSpace, PointSet, SpaceKind, VarietyKind};
use gps_core::{is_graded_primary, is_graded_prime, GradedModule, Model, DEFAULT_ENUM_BOUND};
use oracle::{key, Oracle};

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, Duration, fn() -> Outcome);

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn corpus_files() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "gps"))
        .collect();
    out.sort();
    out
}

fn load(path: &Path) -> Model {
    let text = std::fs::read_to_string(path).unwrap();
    parse_model(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn load_named(name: &str) -> Model {
    load(&corpus_dir().join(name))
}

fn gps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gps")).args(args).env_remove("GPS_ENUM_BOUND").output().expect("spawn gps")
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond { Ok(()) } else { Err(what.into()) }
}

fn labels(m: &GradedModule, space: &ModuleSpace<'_>, set: &PointSet) -> BTreeSet<String> {
    set.indices().into_iter().map(|p| m.describe(space.point(p))).collect()
}

fn criterion_1() -> Outcome {
    let model = load_named("z_over_z.gps");
    let (m, n) = (&model.module, model.submodule("N").unwrap());
    let ps = in_primary_spectrum(m, n, DEFAULT_ENUM_BOUND).map_err(|e| e.to_string())?;
    let prime = is_graded_prime(m, n).map_err(|e| e.to_string())?;
    ensure(ps, "4Z is not in the primary spectrum")?;
    ensure(!prime, "4Z reported prime")?;
    Ok("4Z in primary spectrum, not prime".into())
}

fn criterion_2() -> Outcome {
    let model = load_named("zxz.gps");
    let m = &model.module;
    let (n, n2, p) = (model.submodule("N").unwrap(), model.submodule("N'").unwrap(), model.submodule("P").unwrap());
    ensure(is_graded_prime(m, p).unwrap(), "P is not prime")?;
    let gr = match graded_radical_submodule(m, p, DEFAULT_ENUM_BOUND).unwrap() {
        RadicalResult::Unknown { reason, .. } => return Err(format!("Gr(P) unknown: {reason}")),
        r => r.resolve(m).unwrap(),
    };
    ensure(m.contains_submodule(&gr, &m.intersect(n, n2)), "N meet N' not inside Gr(P)")?;
    // membership of P in nu*(N): N inside Gr(P)
    ensure(!m.contains_submodule(&gr, n) && !m.contains_submodule(&gr, n2), "P lies in nu*(N) or nu*(N')")?;
    Ok(format!("P prime, Gr(P) = {}, P outside nu*(N) and nu*(N')", m.describe(&gr)))
}

fn criterion_3() -> Outcome {
    let model = load_named("z8.gps");
    let m = &model.module;
    let cat = ModuleCatalog::build(m, DEFAULT_ENUM_BOUND).unwrap();
    let space = ModuleSpace::build(&cat, SpaceKind::PrimarySpectrum).unwrap();
    let got = labels(m, &space, &space.full());
    let want: BTreeSet<String> = ["0", "4Z8", "2Z8"].map(String::from).into();
    ensure(got == want, format!("points {got:?}"))?;
    let closed: Vec<PointSet> = space.topology().closed_sets().to_vec();
    ensure(closed.len() == 2 && closed.contains(&space.full()) && closed.contains(&space.empty_set()), format!("{} closed sets", closed.len()))?;
    for r in -16..=16i64 {
        let s = space.base_open(r);
        let expect = if r % 2 != 0 { space.full() } else { space.empty_set() };
        ensure(s == expect, format!("S_{r} has {} points", s.count()))?;
    }
    Ok("three points, trivial topology, S_r full exactly for odd r".into())
}

fn criterion_4() -> Outcome {
    let model = load_named("z6.gps");
    let m = &model.module;
    let cat = ModuleCatalog::build(m, DEFAULT_ENUM_BOUND).unwrap();
    let space = ModuleSpace::build(&cat, SpaceKind::PrimarySpectrum).unwrap();
    let got = labels(m, &space, &space.full());
    ensure(got == ["3Z6", "2Z6"].map(String::from).into(), format!("points {got:?}"))?;
    for name in ["A", "B"] {
        let n = model.submodule(name).unwrap();
        let nu = space.variety(n, VarietyKind::Nu).unwrap();
        let pts = labels(m, &space, &nu);
        ensure(pts == BTreeSet::from([m.describe(n)]), format!("nu({name}) = {pts:?}"))?;
    }
    ensure(!space.topology().is_irreducible(&space.full()), "space is irreducible")?;
    Ok("points {3Z6, 2Z6}, nu separates them, not irreducible".into())
}

/// Criterion 5 instances: the cyclic rings and the two-factor products.
fn oracle_instances() -> Vec<PathBuf> {
    corpus_files()
        .into_iter()
        .filter(|p| {
            let s = p.file_stem().unwrap().to_str().unwrap();
            let cyclic = s.strip_prefix('z').and_then(|n| n.parse::<u32>().ok()).is_some_and(|n| (2..=36).contains(&n));
            let pair = s.contains("xz") && (s.ends_with("_same") || s.ends_with("_diff"));
            cyclic || pair
        })
        .collect()
}

fn criterion_5() -> Outcome {
    let files = oracle_instances();
    // unordered pairs: swapping factors is an isomorphism
    ensure(files.len() == 35 + 15 * 4, format!("expected 95 instances, found {}", files.len()))?;
    let mut checked = 0usize;
    for f in &files {
        let model = load(f);
        let m = &model.module;
        let o = Oracle::new(m);
        let cat = ModuleCatalog::build(m, DEFAULT_ENUM_BOUND).unwrap();
        let sets: Vec<_> = cat.submodules().iter().map(|s| o.set_of(m, s)).collect();
        let name = f.file_name().unwrap().to_string_lossy();
        let expected: BTreeSet<_> = o.submodules().iter().map(key).collect();
        let got: BTreeSet<_> = sets.iter().map(key).collect();
        ensure(got == expected && got.len() == sets.len(), format!("{name}: submodule enumeration"))?;
        let primes: Vec<_> = sets.iter().filter(|s| o.is_prime(s)).cloned().collect();
        for (i, s) in cat.submodules().iter().enumerate() {
            let set = &sets[i];
            let ctx = format!("{name}: N = {}", m.describe(s));
            ensure(m.colon(s) == o.colon(set), format!("{ctx}: colon"))?;
            if !o.is_proper(set) {
                continue;
            }
            ensure(is_graded_prime(m, s).unwrap() == o.is_prime(set), format!("{ctx}: prime"))?;
            ensure(is_graded_primary(m, s).unwrap() == o.is_primary(set), format!("{ctx}: primary"))?;
            let rad = key(&o.radical(set, &primes));
            ensure(key(&sets[cat.radical(i).unwrap()]) == rad, format!("{ctx}: radical"))?;
            checked += 1;
        }
    }
    Ok(format!("{} instances, {checked} proper submodules", files.len()))
}

fn criterion_6() -> Outcome {
    let mut substantive: BTreeSet<String> = BTreeSet::new();
    let mut ids: BTreeSet<String> = BTreeSet::new();
    let files = corpus_files();
    for f in &files {
        let out = gps(&["check", f.to_str().unwrap(), "--format", "json"]);
        let name = f.file_name().unwrap().to_string_lossy();
        ensure(out.status.code() == Some(0), format!("{name}: exit {:?}", out.status.code()))?;
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("{name}: {e}"))?;
        ensure(v["summary"]["fail"] == 0, format!("{name}: failures reported"))?;
        for c in v["checks"].as_array().unwrap() {
            let id = c["id"].as_str().unwrap().to_string();
            if c["substantive"].as_u64().unwrap_or(0) > 0 {
                substantive.insert(id.clone());
            }
            ids.insert(id);
        }
    }
    let roster: BTreeSet<String> = gps_core::harness::check_ids().map(String::from).collect();
    ensure(ids == roster, "reported ids differ from the roster")?;
    let missing: Vec<_> = roster.difference(&substantive).collect();
    ensure(missing.is_empty(), format!("no substantive pass for {missing:?}"))?;
    Ok(format!("{} files, {} ids, 0 failures", files.len(), roster.len()))
}

/// T0 straight from the closed sets: some closed set separates each pair.
fn separated(t: &FiniteTopology) -> bool {
    let n = t.n_points();
    (0..n).all(|a| (a + 1..n).all(|b| t.closed_sets().iter().any(|c| c.contains(a) != c.contains(b))))
}

/// Sobriety by brute force: closed sets that are not unions of two proper
/// closed subsets have exactly one point whose closure is the whole set.
/// Finite spaces are quasi-compact with every open compact, so this and T0
/// are all that spectrality asks for.
fn sober(t: &FiniteTopology) -> bool {
    let closed = t.closed_sets();
    closed.iter().filter(|c| !c.is_empty()).all(|c| {
        let proper: Vec<&PointSet> = closed.iter().filter(|d| d.is_subset(c) && *d != c).collect();
        let reducible = proper.iter().any(|a| proper.iter().any(|b| a.union(b) == *c));
        let closure = |p: usize| closed.iter().filter(|d| d.contains(p)).fold(PointSet::full(t.n_points()), |acc, d| acc.intersection(d));
        reducible || c.indices().into_iter().filter(|&p| closure(p) == *c).count() == 1
    })
}

fn criterion_7() -> Outcome {
    let (mut surjective, mut agree_true) = (0usize, 0usize);
    for f in corpus_files() {
        let model = load(&f);
        let m = &model.module;
        let Ok(cat) = ModuleCatalog::build(m, DEFAULT_ENUM_BOUND) else { continue };
        let space = ModuleSpace::build(&cat, SpaceKind::PrimarySpectrum).unwrap();
        let ring = ReducedRing::of(m).spectrum().unwrap();
        let images: Vec<_> = (0..space.len()).map(|p| rho(m, space.point(p), DEFAULT_ENUM_BOUND).unwrap()).collect();
        let image_set: BTreeSet<_> = images.iter().copied().collect();
        if image_set.len() != ring.len() || ring.points().iter().any(|p| !image_set.contains(p)) {
            continue;
        }
        surjective += 1;
        let t = space.topology();
        let s1 = separated(t);
        let varieties: BTreeSet<_> = (0..space.len()).map(|p| space.variety(space.point(p), VarietyKind::Nu).unwrap()).collect();
        let s2 = varieties.len() == space.len();
        let s3 = image_set.len() == images.len();
        let mut fibers: BTreeMap<_, usize> = BTreeMap::new();
        let o = Oracle::new(m);
        for p in 0..space.len() {
            *fibers.entry(o.radical_colon(&o.set_of(m, space.point(p)))).or_default() += 1;
        }
        let s4 = fibers.values().all(|&c| c <= 1);
        let s5 = separated(t) && sober(t);
        let all = [s1, s2, s3, s4, s5];
        ensure(all.iter().all(|&b| b == s1), format!("{}: statements disagree {all:?}", f.display()))?;
        agree_true += usize::from(s1);
    }
    ensure(surjective > 0, "no instance with rho surjective")?;
    Ok(format!("{surjective} instances with rho surjective, {agree_true} with all statements true"))
}

fn criterion_8() -> Outcome {
    let files = corpus_files();
    for f in &files {
        let model = load(f);
        let again = parse_model(&render_model(&model)).map_err(|e| format!("{}: {e}", f.display()))?;
        ensure(again == model, format!("{}: round trip changed the model", f.display()))?;
    }
    let z6 = corpus_dir().join("z6.gps");
    let z6 = z6.to_str().unwrap();
    for args in [vec!["check", z6, "--format", "json"], vec!["topology", z6, "--format", "dot"], vec!["check", z6]] {
        let (a, b) = (gps(&args), gps(&args));
        ensure(a.stdout == b.stdout && a.stderr == b.stderr && !a.stdout.is_empty(), format!("`{}` is not deterministic", args.join(" ")))?;
    }
    let failing = gps(&["check", z6, "--theorem", "T4.11", "--inject-failure", "T4.11"]);
    ensure(failing.status.code() == Some(1), format!("failing check exited {:?}", failing.status.code()))?;
    let bad = Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance_malformed.gps");
    std::fs::write(&bad, "group = Z2\nring = Z6\nmodule = Z6@0 x\n").unwrap();
    let malformed = gps(&["parse", bad.to_str().unwrap()]);
    ensure(malformed.status.code() == Some(2), format!("malformed file exited {:?}", malformed.status.code()))?;
    ensure(String::from_utf8_lossy(&malformed.stderr).contains(":3:"), "parse error lacks a line number")?;
    Ok(format!("{} files round-trip, output stable, exit codes 1 and 2", files.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "4Z over Z is primary-spectrum but not prime", Duration::from_millis(100), criterion_1),
        (2, "Z x Z in two degrees", Duration::from_millis(100), criterion_2),
        (3, "Z8 spectrum and topology", Duration::from_millis(100), criterion_3),
        (4, "Z6 spectrum and varieties", Duration::from_millis(100), criterion_4),
        (5, "oracle equivalence on the corpus", Duration::from_secs(20), criterion_5),
        (6, "check over the full corpus", Duration::from_secs(30), criterion_6),
        (7, "rho-surjective statements agree", Duration::from_secs(5), criterion_7),
        (8, "parser and CLI contract", Duration::from_secs(1), criterion_8),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, title, budget, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {n}: {} {title} ({:.3}s / budget {:.1}s) {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs_f64()
        );
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
