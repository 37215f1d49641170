//! Acceptance run: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use cayley_embed::classify::{cyclic_table, replay_example38, theorem_report, Verdict};
use cayley_embed::embeddings::{
    cyclic_right_group_graph, regenerate_triple_torus, triple_torus_example, TRIPLE_TORUS_EFFORT, TRIPLE_TORUS_SEED,
};
use cayley_embed::graph::named;
use cayley_embed::products::blowup;
use cayley_embed::topology::{euler_lower_bound, exact_genus};
use cayley_embed::verify::{run_suite, Check, SuiteOptions};

const GENUS_BUDGET: u64 = 10_000_000;
const GENUS_SECONDS: f64 = 60.0;
const EXAMPLE38_SECONDS: f64 = 120.0;
const ORACLE_SECONDS: f64 = 120.0;
const ORACLE_GRAPHS: usize = 996;
const REPORT_MAX_N: usize = 10;
const REPORT_MAX_R: usize = 5;
const K55_GENUS: usize = 3;
const K66_GENUS: usize = 4;
const K5_BLOWUP_MIN: usize = 2;
const TOROIDAL_CYCLIC: [(usize, usize); 8] = [(2, 3), (2, 4), (3, 3), (4, 2), (5, 2), (6, 2), (7, 2), (8, 2)];
const TOROIDAL_HIGH_R: [(&str, usize); 3] = [("Z2", 3), ("Z2", 4), ("Z3", 3)];

type Outcome = Result<String, String>;

fn suite(name: &str, opts: &SuiteOptions, seconds: Option<f64>) -> Outcome {
    let checks: Vec<Check> = run_suite(name, opts).map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for c in &checks {
        if !c.passed {
            return Err(format!("{}: {}", c.name, c.detail));
        }
        if let Some(limit) = seconds {
            if c.seconds > limit {
                return Err(format!("{} took {:.1}s > {limit}s", c.name, c.seconds));
            }
        }
        summary.push(c.name.clone());
    }
    Ok(format!("{} checks: {}", checks.len(), summary.join(", ")))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion3(opts: &SuiteOptions) -> Outcome {
    let mut toroidal = Vec::new();
    for n in 2..=8 {
        for r in 1..=5 {
            let e = cyclic_table(n, r).map_err(|e| e.to_string())?;
            if e.decision.verdict == Verdict::Toroidal {
                let cert = e.decision.certificate.as_ref().ok_or(format!("({n},{r}) has no certificate"))?;
                cert.revalidate().map_err(|e| e.to_string())?;
                ensure(cert.genus == 1, format!("({n},{r}) certificate genus {}", cert.genus))?;
                ensure(e.decision.nonplanarity.is_some(), format!("({n},{r}) lacks a Kuratowski witness"))?;
                toroidal.push((n, r));
            }
        }
    }
    ensure(toroidal == TOROIDAL_CYCLIC, format!("toroidal cells {toroidal:?}"))?;
    suite("cyclic", opts, None)
}

fn criterion4(opts: &SuiteOptions) -> Outcome {
    let k55 = euler_lower_bound(&named::complete_bipartite(5, 5));
    let k66 = euler_lower_bound(&named::complete_bipartite(6, 6));
    let k5 = euler_lower_bound(&blowup(&named::complete(5), 2).map_err(|e| e.to_string())?);
    ensure(k55 == K55_GENUS && k66 == K66_GENUS && k5 >= K5_BLOWUP_MIN, format!("{k55}, {k66}, {k5}"))?;
    suite("bounds", opts, None).map(|s| format!("K55={k55}, K66={k66}, K5[K2-bar]={k5}; {s}"))
}

fn criterion5(opts: &SuiteOptions) -> Outcome {
    let graphs = [
        named::complete(5),
        named::complete_bipartite(3, 3),
        named::complete_bipartite(4, 4),
        cyclic_right_group_graph(3, 3).map_err(|e| e.to_string())?,
    ];
    for g in &graphs {
        let t = Instant::now();
        let b = exact_genus(g, GENUS_BUDGET);
        ensure(b.exact() == Some(1), format!("genus {:?} on {} vertices", b.exact(), g.n()))?;
        ensure(t.elapsed().as_secs_f64() <= GENUS_SECONDS, "exact genus too slow")?;
    }
    suite("genus", opts, Some(GENUS_SECONDS))
}

fn criterion6(opts: &SuiteOptions) -> Outcome {
    let rows = theorem_report(REPORT_MAX_N, REPORT_MAX_R).map_err(|e| e.to_string())?;
    ensure(rows.iter().all(|r| r.agrees && r.sound), "report row disagrees")?;
    ensure(
        rows.iter().filter(|r| r.r == 1).all(|r| r.verdict == Verdict::Planar),
        "r = 1 row not planar",
    )?;
    let high: Vec<(String, usize)> = rows
        .iter()
        .filter(|r| r.r >= 3 && r.verdict == Verdict::Toroidal)
        .map(|r| (r.group.clone(), r.r))
        .collect();
    ensure(high == TOROIDAL_HIGH_R.map(|(g, r)| (g.to_string(), r)), format!("toroidal rows with r >= 3: {high:?}"))?;
    suite("theorem", opts, None)
}

fn criterion7(opts: &SuiteOptions) -> Outcome {
    let t = Instant::now();
    let steps = replay_example38();
    ensure(steps.len() == 5 && steps.iter().all(|s| s.passed), "replay step failed")?;
    let stored = triple_torus_example().map_err(|e| e.to_string())?;
    ensure(stored.genus == 3, "fixture genus")?;
    let found = regenerate_triple_torus(TRIPLE_TORUS_EFFORT, TRIPLE_TORUS_SEED).map_err(|e| e.to_string())?;
    ensure(found.genus <= 3, "seeded search above genus 3")?;
    ensure(t.elapsed().as_secs_f64() <= EXAMPLE38_SECONDS, "example 3.8 too slow")?;
    suite("example38", opts, Some(EXAMPLE38_SECONDS)).map(|s| format!("upper {} by certificate; {s}", found.genus))
}

fn criterion8(opts: &SuiteOptions) -> Outcome {
    let s = suite("oracle", opts, Some(ORACLE_SECONDS))?;
    let checks = run_suite("oracle", opts).map_err(|e| e.to_string())?;
    let expected = format!("{ORACLE_GRAPHS} connected graphs");
    ensure(checks.iter().all(|c| c.detail.starts_with(&expected)), format!("graph count: {}", checks[0].detail))?;
    Ok(s)
}

fn main() -> ExitCode {
    let opts = SuiteOptions {
        max_n: REPORT_MAX_N,
        max_r: REPORT_MAX_R,
        budget: GENUS_BUDGET,
        effort: TRIPLE_TORUS_EFFORT,
        seed: TRIPLE_TORUS_SEED,
    };
    let criteria: [(&str, &dyn Fn(&SuiteOptions) -> Outcome); 8] = [
        ("product identities", &|o| suite("products", o, None)),
        ("blow-up lemma", &|o| suite("blowup", o, None)),
        ("cyclic table", &criterion3),
        ("obstruction bounds", &criterion4),
        ("exact genus", &criterion5),
        ("classification report", &criterion6),
        ("example 3.8", &criterion7),
        ("planarity oracle", &criterion8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f(&opts);
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({secs:.1}s) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({secs:.1}s) {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
