//! Self-checks of the library against the published results: product
//! identities, the blow-up lemma, the cyclic table, the obstruction
//! bounds, exact genus on small graphs, the classification theorem,
//! Example 3.8, and planarity against brute-force subdivision search.

use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{
    direct_product, generates, make_alternating, make_cyclic, make_dihedral, make_left_zero, make_right_zero,
    make_symmetric, minimal_generating_sets, two_involutions_generate, GeneratingSet, MulTable,
};
use crate::cayley::cayley_graph;
use crate::classify::{
    cyclic_table, exclusion_facts, replay_example38, right_group_graph, theorem_report, Obstruction, Verdict,
};
use crate::embeddings::{regenerate_triple_torus, triple_torus_example, TRIPLE_TORUS_EFFORT, TRIPLE_TORUS_SEED};
use crate::error::Result;
use crate::graph::{named, SimpleGraph};
use crate::iso::find_isomorphism;
use crate::products::{blowup, box_product, verify_cross_identity, verify_lex_identity};
use crate::topology::genus::DEFAULT_BUDGET;
use crate::topology::{
    euler_lower_bound, exact_genus, find_subdivision, is_outer_planar, is_planar, planar, Pattern,
};

pub const SUITES: [&str; 8] = ["products", "blowup", "cyclic", "bounds", "genus", "theorem", "example38", "oracle"];

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub max_n: usize,
    pub max_r: usize,
    pub budget: u64,
    pub effort: u64,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: 10,
            max_r: 5,
            budget: DEFAULT_BUDGET,
            effort: TRIPLE_TORUS_EFFORT,
            seed: TRIPLE_TORUS_SEED,
        }
    }
}

/// Runs one suite, or all of them in order.
pub fn run(only: Option<&str>, opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for suite in SUITES {
        if only.is_none_or(|o| o == suite) {
            out.extend(run_suite(suite, opts)?);
        }
    }
    Ok(out)
}

pub fn run_suite(suite: &str, opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut check = |criterion: u8, suite: &'static str, name: &str, f: &dyn Fn() -> Result<(bool, String)>| {
        let t = Instant::now();
        let (passed, detail) = f()?;
        checks.push(Check {
            criterion,
            suite,
            name: name.to_string(),
            passed,
            detail,
            seconds: t.elapsed().as_secs_f64(),
        });
        Ok::<(), crate::error::Error>(())
    };
    match suite {
        "products" => {
            check(1, "products", "cross identity over all factor pairs", &cross_identities)?;
            check(1, "products", "lexicographic identity iff right group", &lex_identities)?;
        }
        "blowup" => {
            check(2, "blowup", "Cay(G x R_r, C x R_r) = Cay(G,C)[K_r-bar]", &blowup_lemma)?;
            check(2, "blowup", "K_{k,k}[K_r-bar] = K_{kr,kr}", &complete_bipartite_blowups)?;
        }
        "cyclic" => {
            check(3, "cyclic", "Prop 3.6 table for n in 2..8, r in 1..5", &cyclic_grid)?;
            check(3, "cyclic", "(3,4) excluded by the triangle-free count", &cyclic_three_four)?;
        }
        "bounds" => check(4, "bounds", "Euler bounds for K55, K66, K5[K2-bar]", &obstruction_bounds)?,
        "genus" => {
            let budget = opts.budget;
            check(5, "genus", "exact genus 1 on K5, K33, K44, Z3xR3", &|| small_exact(budget))?;
            check(5, "genus", "exact genus 0 on Maschke examples", &|| maschke_planar(budget))?;
        }
        "theorem" => {
            let (max_n, max_r) = (opts.max_n, opts.max_r);
            check(6, "theorem", "Theorem 3.7 report agrees", &|| theorem_rows(max_n, max_r))?;
            check(6, "theorem", "involution-pair generation", &involution_pairs)?;
            check(6, "theorem", "degree inequality on the exclusion list", &degree_inequality)?;
        }
        "example38" => {
            check(7, "example38", "replay of the genus >= 3 argument", &example38_steps)?;
            let (effort, seed) = (opts.effort, opts.seed);
            check(7, "example38", "seeded search reaches genus 3", &|| triple_torus(effort, seed))?;
        }
        "oracle" => {
            check(8, "oracle", "is_planar vs K5/K33 subdivision search", &|| oracle(false))?;
            check(8, "oracle", "is_outer_planar vs K4/K23 subdivision search", &|| oracle(true))?;
        }
        other => {
            return Err(crate::error::Error::InvalidParameter(format!(
                "unknown suite `{other}`; expected one of {SUITES:?}"
            )))
        }
    }
    Ok(checks)
}

/// Inclusion-minimal generating sets of a small semigroup. Groups use the
/// DFS enumeration; other semigroups are brute-forced over subsets.
pub fn semigroup_generating_sets(s: &MulTable) -> Result<Vec<GeneratingSet>> {
    if s.is_group() {
        return minimal_generating_sets(s);
    }
    let n = s.order();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let c = GeneratingSet::new(s, set.iter().copied())?;
        if !generates(s, &c) {
            continue;
        }
        let irredundant = set.iter().all(|&x| {
            let rest: Vec<usize> = set.iter().copied().filter(|&y| y != x).collect();
            rest.is_empty() || !generates(s, &GeneratingSet::new(s, rest).unwrap())
        });
        if irredundant {
            out.push(c);
        }
    }
    out.sort();
    Ok(out)
}

fn cross_factors() -> Result<Vec<(String, MulTable)>> {
    let mut f = Vec::new();
    for n in 1..=6 {
        f.push((format!("Z{n}"), make_cyclic(n)?));
    }
    for n in 2..=4 {
        f.push((format!("D{n}"), make_dihedral(n)?));
    }
    for r in 1..=4 {
        f.push((format!("R{r}"), make_right_zero(r)?));
    }
    Ok(f)
}

fn cross_identities() -> Result<(bool, String)> {
    let factors = cross_factors()?;
    let sets: Vec<Vec<GeneratingSet>> = factors
        .iter()
        .map(|(_, t)| semigroup_generating_sets(t))
        .collect::<Result<_>>()?;
    let mut cases = 0;
    for (i, (sn, s)) in factors.iter().enumerate() {
        for (j, (tn, t)) in factors.iter().enumerate() {
            for c in &sets[i] {
                for d in &sets[j] {
                    cases += 1;
                    let w = verify_cross_identity(s, c, t, d);
                    if !w.holds() {
                        return Ok((false, format!("{sn} x {tn}, C={:?}, D={:?}: {:?}", c.to_vec(), d.to_vec(), w.counterexample)));
                    }
                }
            }
        }
    }
    Ok((true, format!("{cases} (S,C,T,D) cases, arc-for-arc equal")))
}

fn lex_identities() -> Result<(bool, String)> {
    let s = make_cyclic(4)?;
    let cs = GeneratingSet::new(&s, [1])?;
    let rights: Vec<(&str, MulTable)> = vec![
        ("R1", make_right_zero(1)?),
        ("R2", make_right_zero(2)?),
        ("R3", make_right_zero(3)?),
        ("Z2", make_cyclic(2)?),
        ("Z3", make_cyclic(3)?),
        ("Z2xR2", direct_product(&make_cyclic(2)?, &make_right_zero(2)?)),
    ];
    let mut cases = 0;
    for (name, t) in &rights {
        for d in semigroup_generating_sets(t)? {
            cases += 1;
            let w = verify_lex_identity(&s, &cs, t, &d)?;
            if !w.holds() || w.right_ideals_full != Some(true) {
                return Ok((false, format!("{name}, D={:?}: {:?}", d.to_vec(), w.counterexample)));
            }
        }
    }
    let l2 = make_left_zero(2)?;
    let d = GeneratingSet::all(&l2);
    let w = verify_lex_identity(&s, &cs, &l2, &d)?;
    let fails = !w.holds() && w.counterexample.is_some() && w.right_ideals_full == Some(false);
    Ok((
        fails,
        format!("{cases} right-group cases hold; left zero L2 counterexample {:?}", w.counterexample),
    ))
}

fn blowup_lemma() -> Result<(bool, String)> {
    let mut groups = vec![];
    for n in 3..=6 {
        groups.push((format!("Z{n}"), make_cyclic(n)?));
    }
    groups.push(("D3".to_string(), make_dihedral(3)?));
    let mut cases = 0;
    for (name, g) in &groups {
        for c in minimal_generating_sets(g)? {
            for r in [2, 3] {
                cases += 1;
                let direct = right_group_graph(g, &c, r)?;
                if direct != blowup(&cayley_graph(g, &c), r)? {
                    return Ok((false, format!("{name}, C={:?}, r={r}", c.to_vec())));
                }
            }
        }
    }
    Ok((true, format!("{cases} (G,C,r) cases equal")))
}

fn complete_bipartite_blowups() -> Result<(bool, String)> {
    for k in 1..=3 {
        for r in 1..=3 {
            if blowup(&named::complete_bipartite(k, k), r)? != named::complete_bipartite(k * r, k * r) {
                return Ok((false, format!("k={k}, r={r}")));
            }
        }
    }
    Ok((true, "k, r in 1..3".into()))
}

fn cyclic_grid() -> Result<(bool, String)> {
    let mut toroidal = Vec::new();
    for n in 2..=8 {
        for r in 1..=5 {
            let e = cyclic_table(n, r)?;
            let graph = crate::embeddings::cyclic_right_group_graph(n, r)?;
            let base = crate::embeddings::cyclic_right_group_graph(n, 1)?;
            if !e.decision.is_sound(&base, &graph, r) {
                return Ok((false, format!("({n},{r}) decision does not re-validate")));
            }
            if e.decision.verdict == Verdict::Toroidal {
                toroidal.push((n, r));
            }
        }
    }
    let expected: Vec<(usize, usize)> = (2..=8)
        .flat_map(|n| (1..=5).map(move |r| (n, r)))
        .filter(|&(n, r)| matches!((n, r), (2, 3) | (2, 4) | (3, 3)) || (n >= 4 && r == 2))
        .collect();
    Ok((toroidal == expected, format!("toroidal: {toroidal:?}")))
}

fn cyclic_three_four() -> Result<(bool, String)> {
    let e = cyclic_table(3, 4)?;
    match e.decision.obstruction {
        Some(Obstruction::TriangleFreeCount { vertices, edges, faces_needed, removed }) => {
            let ok = removed.len() == 16
                && vertices == 12
                && edges == 32
                && faces_needed == 20
                && 12 + faces_needed == edges
                && 4 * faces_needed > 2 * edges;
            Ok((ok, format!("12 - {edges} + {faces_needed} = 0, 4*{faces_needed} > {}", 2 * edges)))
        }
        other => Ok((false, format!("unexpected obstruction {other:?}"))),
    }
}

fn obstruction_bounds() -> Result<(bool, String)> {
    let k55 = euler_lower_bound(&named::complete_bipartite(5, 5));
    let k66 = euler_lower_bound(&named::complete_bipartite(6, 6));
    let k5b = blowup(&named::complete(5), 2)?;
    let k5 = euler_lower_bound(&k5b);
    // a torus embedding would have f = m - n = 30 faces, needing 3f/2 = 45 edges
    let faces = k5b.m() - k5b.n();
    let count = faces == 30 && 3 * faces > 2 * k5b.m();
    Ok((
        k55 == 3 && k66 == 4 && k5 >= 2 && count,
        format!("K55 -> {k55}, K66 -> {k66}, K5[K2-bar] -> {k5} (n=10, m={})", k5b.m()),
    ))
}

fn small_exact(budget: u64) -> Result<(bool, String)> {
    let cases = [
        ("K5", named::complete(5)),
        ("K33", named::complete_bipartite(3, 3)),
        ("K44", named::complete_bipartite(4, 4)),
        ("Z3xR3", crate::embeddings::cyclic_right_group_graph(3, 3)?),
    ];
    let mut detail = Vec::new();
    let mut ok = true;
    for (name, g) in cases {
        let t = Instant::now();
        let b = exact_genus(&g, budget);
        let secs = t.elapsed().as_secs_f64();
        ok &= b.exact() == Some(1) && secs <= 60.0 && b.upper.as_ref().is_some_and(|c| c.revalidate().is_ok());
        detail.push(format!("{name}: {:?} via {} ({} expansions)", b.exact(), b.lower_reason, b.expansions));
    }
    Ok((ok, detail.join("; ")))
}

/// A generating set of `g` with a planar Cayley graph, searching single
/// elements, then pairs, then triples in lexicographic order.
pub fn planar_generating_set(g: &MulTable) -> Option<GeneratingSet> {
    let n = g.order();
    let try_set = |v: &[usize]| {
        let c = GeneratingSet::new(g, v.iter().copied()).ok()?;
        (generates(g, &c) && planar(&cayley_graph(g, &c))).then_some(c)
    };
    for a in 0..n {
        if let Some(c) = try_set(&[a]) {
            return Some(c);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if let Some(c) = try_set(&[a, b]) {
                return Some(c);
            }
        }
    }
    let inv = g.involutions().ok()?;
    for (i, &a) in inv.iter().enumerate() {
        for (j, &b) in inv.iter().enumerate().skip(i + 1) {
            for &c in &inv[j + 1..] {
                if let Some(s) = try_set(&[a, b, c]) {
                    return Some(s);
                }
            }
        }
    }
    None
}

/// Planar groups with the generating sets whose Cayley graphs are cycles
/// (`Z_n` with `{1}`, `D_n` with an involution pair) plus a planar
/// generating set for each remaining family member.
pub fn maschke_examples() -> Result<Vec<(String, MulTable, GeneratingSet)>> {
    let mut out = Vec::new();
    for n in 3..=8 {
        let g = make_cyclic(n)?;
        let c = GeneratingSet::new(&g, [1])?;
        out.push((format!("Z{n}"), g, c));
    }
    for n in 2..=6 {
        let g = make_dihedral(n)?;
        let inv = g.involutions()?;
        let pair = inv
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| inv[i + 1..].iter().map(move |&b| (a, b)))
            .find(|&(a, b)| generates(&g, &GeneratingSet::new(&g, [a, b]).unwrap()))
            .expect("dihedral groups are generated by two involutions");
        let c = GeneratingSet::new(&g, [pair.0, pair.1])?;
        out.push((format!("D{n}"), g, c));
    }
    let z2 = make_cyclic(2)?;
    let mut others = vec![
        ("A4".to_string(), make_alternating(4)?),
        ("S4".to_string(), make_symmetric(4)?),
        ("A5".to_string(), make_alternating(5)?),
    ];
    for n in 2..=6 {
        others.push((format!("Z2xZ{n}"), direct_product(&z2, &make_cyclic(n)?)));
    }
    for n in 2..=4 {
        others.push((format!("Z2xD{n}"), direct_product(&z2, &make_dihedral(n)?)));
    }
    others.push(("Z2xA4".to_string(), direct_product(&z2, &make_alternating(4)?)));
    others.push(("Z2xS4".to_string(), direct_product(&z2, &make_symmetric(4)?)));
    others.push(("Z2xA5".to_string(), direct_product(&z2, &make_alternating(5)?)));
    for (name, g) in others {
        let c = planar_generating_set(&g).ok_or_else(|| {
            crate::error::Error::InvalidParameter(format!("no planar generating set found for {name}"))
        })?;
        out.push((name, g, c));
    }
    Ok(out)
}

fn maschke_planar(budget: u64) -> Result<(bool, String)> {
    let examples = maschke_examples()?;
    for (name, g, c) in &examples {
        let graph = cayley_graph(g, c);
        let b = exact_genus(&graph, budget);
        if b.exact() != Some(0) {
            return Ok((false, format!("{name} with {}: {:?}", c.display(g), b.exact())));
        }
    }
    Ok((true, format!("{} groups, all genus 0", examples.len())))
}

fn theorem_rows(max_n: usize, max_r: usize) -> Result<(bool, String)> {
    let rows = theorem_report(max_n, max_r)?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.agrees || !r.sound)
        .map(|r| format!("{} r={} {}", r.group, r.r, r.verdict))
        .collect();
    let errata: Vec<String> = rows
        .iter()
        .filter(|r| r.theorem_toroidal != r.corrected_toroidal)
        .map(|r| format!("{} r={}", r.group, r.r))
        .collect();
    let toroidal = rows.iter().filter(|r| r.verdict == Verdict::Toroidal).count();
    Ok((
        bad.is_empty(),
        format!(
            "{} rows, {toroidal} toroidal, disagreements {bad:?}; literal list differs at {errata:?}",
            rows.len()
        ),
    ))
}

fn involution_pairs() -> Result<(bool, String)> {
    let z2 = make_cyclic(2)?;
    let mut negative = vec![
        ("A4".to_string(), make_alternating(4)?),
        ("S4".to_string(), make_symmetric(4)?),
        ("A5".to_string(), make_alternating(5)?),
        ("Z2xA4".to_string(), direct_product(&z2, &make_alternating(4)?)),
        ("Z2xS4".to_string(), direct_product(&z2, &make_symmetric(4)?)),
        ("Z2xA5".to_string(), direct_product(&z2, &make_alternating(5)?)),
    ];
    for n in 2..=5 {
        negative.push((format!("Z2xZ{}", 2 * n), direct_product(&z2, &make_cyclic(2 * n)?)));
    }
    for (name, g) in &negative {
        if two_involutions_generate(g)? {
            return Ok((false, format!("{name} is generated by two involutions")));
        }
    }
    for n in 2..=6 {
        if !two_involutions_generate(&make_dihedral(n)?)? {
            return Ok((false, format!("D{n} is not generated by two involutions")));
        }
    }
    Ok((true, format!("false for {} groups, true for D2..D6", negative.len())))
}

// Below degree 3 a generating set is one element (cyclic group) or two
// involutions, so the inequality follows from the two facts checked here;
// it is also enumerated directly for the groups of order at most 48.
fn degree_inequality() -> Result<(bool, String)> {
    let z2 = make_cyclic(2)?;
    let mut groups = vec![
        ("A4".to_string(), make_alternating(4)?, true),
        ("S4".to_string(), make_symmetric(4)?, true),
        ("A5".to_string(), make_alternating(5)?, false),
        ("Z2xA4".to_string(), direct_product(&z2, &make_alternating(4)?), true),
        ("Z2xS4".to_string(), direct_product(&z2, &make_symmetric(4)?), false),
        ("Z2xA5".to_string(), direct_product(&z2, &make_alternating(5)?), false),
    ];
    for n in 2..=4 {
        groups.push((format!("Z2xZ{}", 2 * n), direct_product(&z2, &make_cyclic(2 * n)?), true));
    }
    for (name, g, enumerate) in &groups {
        let cyclic = (0..g.order()).any(|x| g.element_order(x).is_ok_and(|k| k == g.order()));
        if cyclic || two_involutions_generate(g)? {
            return Ok((false, format!("{name} has a generating set of degree <= 2")));
        }
        if *enumerate && exclusion_facts(g)? != (false, true) {
            return Ok((false, format!("{name}: a minimal generating set has degree < 3")));
        }
    }
    Ok((true, format!("{} groups", groups.len())))
}

fn example38_steps() -> Result<(bool, String)> {
    let steps = replay_example38();
    let ok = steps.len() == 5 && steps.iter().all(|s| s.passed);
    let detail = steps
        .iter()
        .map(|s| format!("({}) {}: {}", s.label, if s.passed { "pass" } else { "FAIL" }, s.evidence))
        .collect::<Vec<_>>()
        .join("; ");
    Ok((ok, detail))
}

fn triple_torus(effort: u64, seed: u64) -> Result<(bool, String)> {
    let stored = triple_torus_example()?;
    let found = regenerate_triple_torus(effort, seed);
    let prism = box_product(&named::cycle(3), &named::complete(2));
    let iso = find_isomorphism(&stored.graph, &blowup(&prism, 2)?)?.is_some();
    Ok(match found {
        Ok(c) => (
            c.genus <= 3 && stored.genus == 3 && stored.face_count() == 20 && iso,
            format!(
                "seed {seed}, effort {effort}: genus {} ({} faces); stored fixture genus {}",
                c.genus,
                c.face_count(),
                stored.genus
            ),
        ),
        Err(e) => (false, e.to_string()),
    })
}

/// All connected graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    // grow edge by edge from the empty graph, keeping one graph per class
    let mut level = vec![SimpleGraph::empty(n)];
    let mut all = level.clone();
    let max_edges = n * (n - 1) / 2;
    for _ in 0..max_edges {
        let mut buckets: HashMap<Vec<u64>, Vec<SimpleGraph>> = HashMap::new();
        let mut next = Vec::new();
        for g in &level {
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.add_edge(u, v);
                    let bucket = buckets.entry(invariant(&h)).or_default();
                    let mut seen = false;
                    for other in bucket.iter() {
                        if find_isomorphism(&h, other)?.is_some() {
                            seen = true;
                            break;
                        }
                    }
                    if !seen {
                        bucket.push(h.clone());
                        next.push(h);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(all.into_iter().filter(|g| g.is_connected()).collect())
}

fn invariant(g: &SimpleGraph) -> Vec<u64> {
    let mut profile: Vec<u64> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            let tri = g
                .neighbors(v)
                .iter()
                .map(|&w| crate::topology::common_neighbors(g, v, w).len())
                .sum::<usize>() as u64;
            nd.iter().fold(g.degree(v) as u64 * 1_000_003 + tri, |h, &d| h * 31 + d as u64)
        })
        .collect();
    profile.sort_unstable();
    profile.push(g.m() as u64);
    profile
}

fn oracle(outer: bool) -> Result<(bool, String)> {
    let mut count = 0;
    let mut negatives = 0;
    for n in 1..=7 {
        for g in connected_graphs(n)? {
            count += 1;
            let (fast, patterns) = if outer {
                (is_outer_planar(&g).is_outer_planar(), [Pattern::K4, Pattern::K23])
            } else {
                (is_planar(&g).is_planar(), [Pattern::K5, Pattern::K33])
            };
            let mut obstructed = false;
            for p in patterns {
                if let Some(w) = find_subdivision(&g, p)? {
                    if !w.verify(&g) {
                        return Ok((false, format!("bad {p} witness on {}", g.to_edge_list())));
                    }
                    obstructed = true;
                    break;
                }
            }
            if fast == obstructed {
                return Ok((false, format!("disagreement on {}", g.to_edge_list().replace('\n', "; "))));
            }
            negatives += obstructed as usize;
        }
    }
    let kind = if outer { "not outer planar" } else { "nonplanar" };
    Ok((true, format!("{count} connected graphs on <= 7 vertices, {negatives} {kind}")))
}
