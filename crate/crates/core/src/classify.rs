//! Deciding whether `Cay(G x R_r, C x R_r)` can be made planar or toroidal
//! by a choice of generating set `C`, with a certificate or a checkable
//! obstruction behind every answer.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    direct_product, make_right_zero, minimal_generating_sets, two_involutions_generate, GeneratingSet, MulTable,
};
use crate::cayley::cayley_graph;
use crate::embeddings::{torus_krr, torus_square_grid, torus_triangular_grid_z3r3};
use crate::error::{Error, Result};
use crate::graph::{named, SimpleGraph};
use crate::groupspec::{Factor, GroupSpec};
use crate::iso::find_isomorphism;
use crate::products::blowup;
use crate::topology::{
    common_neighbors, euler_lower_bound, exact_genus, find_subdivision, girth, is_planar, triangle_count,
    EmbeddingCertificate, KuratowskiWitness, Pattern, Planarity,
};

pub const MAX_GROUP_ORDER: usize = 120;
pub const MAX_R: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Verdict {
    Planar,
    Toroidal,
    GenusAtLeastTwo,
    /// Search budget ran out before the bounds met.
    Unresolved,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Planar => "planar",
            Verdict::Toroidal => "toroidal",
            Verdict::GenusAtLeastTwo => "genus>=2",
            Verdict::Unresolved => "unresolved",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    EulerObstruction,
    R5K55,
    K22BlowupK66,
    ThreeReg,
    CyclicTable,
    ExplicitCertificate,
    ExactSearch,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::EulerObstruction => "euler-obstruction",
            Rule::R5K55 => "r>=5-K55",
            Rule::K22BlowupK66 => "K22-blowup-K66",
            Rule::ThreeReg => "threereg",
            Rule::CyclicTable => "cyclic-table",
            Rule::ExplicitCertificate => "explicit-certificate",
            Rule::ExactSearch => "exact-search",
        })
    }
}

/// Why a graph has no embedding on the torus. Vertex numbers refer to the
/// base graph `Cay(G, C)` or to `Cay(G x R_r, C x R_r)` in its canonical
/// indexing `(g, i) -> g * r + i`, as noted per variant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    /// The base graph is nonplanar; blowing up its Kuratowski pattern by
    /// `K̄_2` already gives a graph of genus at least `blown_bound`.
    NonPlanarBase { witness: KuratowskiWitness, blown_bound: usize },
    /// Blown-up vertices `left` and `right` form a `K_{5,5}`.
    K55 { left: Vec<usize>, right: Vec<usize>, bound: usize },
    /// A `K_{2,2}` subdivision of the base blows up past `K_{6,6}`.
    K22Blowup { witness: KuratowskiWitness, bound: usize },
    /// Lemma 3.5, degree-3 case: the blow-up is 6-regular, so a torus
    /// embedding would be a triangulation, yet `edge` lies in fewer than
    /// two triangles.
    ThreeRegTriangle { base_edge: (usize, usize), edge: (usize, usize), triangles: usize },
    /// Lemma 3.5, degree at least 4: the Euler count alone excludes the torus.
    ThreeRegDegree { base_degree: usize, bound: usize },
    /// Removing the edges between two parts leaves a triangle-free graph
    /// with more edges than a torus embedding could carry.
    TriangleFreeCount { removed: Vec<(usize, usize)>, vertices: usize, edges: usize, faces_needed: usize },
    /// Euler bound on the whole graph.
    EulerBound { bound: usize },
    /// Exhaustive rotation search raised the lower bound.
    Search { lower: usize },
}

impl Obstruction {
    /// Re-derives the obstruction. `base` is `Cay(G, C)`, `graph` is
    /// `Cay(G x R_r, C x R_r)`.
    pub fn verify(&self, base: &SimpleGraph, graph: &SimpleGraph, r: usize) -> bool {
        match self {
            Obstruction::NonPlanarBase { witness, blown_bound } => {
                let pattern = pattern_graph(witness.pattern);
                r >= 2
                    && witness.verify(base)
                    && matches!(witness.pattern, Pattern::K5 | Pattern::K33)
                    && blowup(&pattern, 2).is_ok_and(|b| euler_lower_bound(&b) == *blown_bound)
                    && *blown_bound >= 2
            }
            Obstruction::K55 { left, right, bound } => {
                let mut all: Vec<usize> = left.iter().chain(right).copied().collect();
                all.sort_unstable();
                all.dedup();
                left.len() == 5
                    && right.len() == 5
                    && all.len() == 10
                    && left.iter().all(|&a| right.iter().all(|&b| graph.has_edge(a, b)))
                    && euler_lower_bound(&named::complete_bipartite(5, 5)) == *bound
                    && *bound >= 2
            }
            Obstruction::K22Blowup { witness, bound } => {
                r >= 3
                    && witness.pattern == Pattern::K22
                    && witness.verify(base)
                    && euler_lower_bound(&named::complete_bipartite(6, 6)) == *bound
            }
            Obstruction::ThreeRegTriangle { base_edge, edge, triangles } => {
                let (n, m) = (graph.n(), graph.m());
                r == 2
                    && base.has_edge(base_edge.0, base_edge.1)
                    && *edge == (base_edge.0 * 2, base_edge.1 * 2)
                    && graph.has_edge(edge.0, edge.1)
                    && common_neighbors(graph, edge.0, edge.1).len() == *triangles
                    && *triangles < 2
                    && m >= 3 * n
            }
            Obstruction::ThreeRegDegree { base_degree, bound } => {
                r == 2 && base.min_degree() == *base_degree && euler_lower_bound(graph) == *bound && *bound >= 2
            }
            Obstruction::TriangleFreeCount { removed, vertices, edges, faces_needed } => {
                let mut h = graph.clone();
                for &(u, v) in removed {
                    if !h.remove_edge(u, v) {
                        return false;
                    }
                }
                let (n, m) = (h.n() as i64, h.m() as i64);
                triangle_count(&h) == 0
                    && !is_planar(&h).is_planar()
                    && h.n() == *vertices
                    && h.m() == *edges
                    && m - n == *faces_needed as i64
                    && 4 * (m - n) > 2 * m
            }
            Obstruction::EulerBound { bound } => euler_lower_bound(graph) == *bound && *bound >= 2,
            Obstruction::Search { lower } => *lower >= 2,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Obstruction::NonPlanarBase { witness, blown_bound } => format!(
                "base contains a {} subdivision; {}[K2-bar] has genus >= {blown_bound}",
                witness.pattern, witness.pattern
            ),
            Obstruction::K55 { left, right, bound } => {
                format!("K_{{5,5}} on {left:?} | {right:?}, genus >= {bound}")
            }
            Obstruction::K22Blowup { witness, bound } => format!(
                "base cycle through {:?} blows up past K_{{6,6}}, genus >= {bound}",
                witness.branch
            ),
            Obstruction::ThreeRegTriangle { edge, triangles, .. } => format!(
                "6-regular blow-up must triangulate the torus but edge {edge:?} lies in {triangles} triangles"
            ),
            Obstruction::ThreeRegDegree { base_degree, bound } => {
                format!("base degree {base_degree} makes the blow-up Euler bound {bound}")
            }
            Obstruction::TriangleFreeCount { vertices, edges, faces_needed, .. } => format!(
                "triangle-free remainder with {vertices} vertices, {edges} edges needs {faces_needed} faces on the torus, but 4*{faces_needed} > 2*{edges}"
            ),
            Obstruction::EulerBound { bound } => format!("Euler bound {bound}"),
            Obstruction::Search { lower } => format!("exhaustive rotation search, genus >= {lower}"),
        }
    }
}

fn pattern_graph(p: Pattern) -> SimpleGraph {
    match p {
        Pattern::K5 => named::complete(5),
        Pattern::K33 => named::complete_bipartite(3, 3),
        Pattern::K4 => named::complete(4),
        Pattern::K23 => named::complete_bipartite(2, 3),
        Pattern::K22 => named::cycle(4),
    }
}

/// Outcome for one graph: verdict, the rule that settled it, and the
/// supporting data that rule requires.
#[derive(Debug, Clone, Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub rule: Rule,
    pub certificate: Option<EmbeddingCertificate>,
    pub nonplanarity: Option<KuratowskiWitness>,
    pub obstruction: Option<Obstruction>,
}

impl Decision {
    fn planar(graph: &SimpleGraph, rule: Rule) -> Decision {
        let Planarity::Planar(cert) = is_planar(graph) else {
            panic!("planar decision on a nonplanar graph");
        };
        Decision {
            verdict: Verdict::Planar,
            rule,
            certificate: Some(cert),
            nonplanarity: None,
            obstruction: None,
        }
    }

    fn toroidal(graph: &SimpleGraph, cert: EmbeddingCertificate, rule: Rule) -> Decision {
        assert_eq!(cert.genus, 1);
        Decision {
            verdict: Verdict::Toroidal,
            rule,
            certificate: Some(cert),
            nonplanarity: is_planar(graph).witness().cloned(),
            obstruction: None,
        }
    }

    fn obstructed(rule: Rule, obstruction: Obstruction) -> Decision {
        Decision {
            verdict: Verdict::GenusAtLeastTwo,
            rule,
            certificate: None,
            nonplanarity: None,
            obstruction: Some(obstruction),
        }
    }

    /// Checks that the decision carries what its verdict requires and that
    /// all of it re-validates against `graph`.
    pub fn is_sound(&self, base: &SimpleGraph, graph: &SimpleGraph, r: usize) -> bool {
        let cert_ok = |genus: usize| {
            self.certificate
                .as_ref()
                .is_some_and(|c| c.genus == genus && c.graph == *graph && c.revalidate().is_ok())
        };
        match self.verdict {
            Verdict::Planar => cert_ok(0),
            Verdict::Toroidal => cert_ok(1) && self.nonplanarity.as_ref().is_some_and(|w| w.verify(graph)),
            Verdict::GenusAtLeastTwo => self.obstruction.as_ref().is_some_and(|o| o.verify(base, graph, r)),
            Verdict::Unresolved => true,
        }
    }
}

/// Prop 3.2: a nonplanar base cannot become toroidal.
pub fn rule_nonplanar_base(base: &SimpleGraph, r: usize) -> Option<Obstruction> {
    if r < 2 {
        return None;
    }
    let witness = is_planar(base).witness()?.clone();
    let blown_bound = euler_lower_bound(&blowup(&pattern_graph(witness.pattern), 2).ok()?);
    Some(Obstruction::NonPlanarBase { witness, blown_bound })
}

/// Prop 3.3: with `r >= 5` any base edge blows up to a `K_{5,5}`.
pub fn rule_r5(base: &SimpleGraph, r: usize) -> Option<Obstruction> {
    if r < 5 {
        return None;
    }
    let (u, v) = base.edges().next()?;
    Some(Obstruction::K55 {
        left: (0..5).map(|i| u * r + i).collect(),
        right: (0..5).map(|i| v * r + i).collect(),
        bound: euler_lower_bound(&named::complete_bipartite(5, 5)),
    })
}

/// Prop 3.5: a `K_{2,2}` subdivision in the base and `r >= 3`.
pub fn rule_k22(base: &SimpleGraph, r: usize) -> Result<Option<Obstruction>> {
    if r < 3 {
        return Ok(None);
    }
    Ok(find_subdivision(base, Pattern::K22)?.map(|witness| Obstruction::K22Blowup {
        witness,
        bound: euler_lower_bound(&named::complete_bipartite(6, 6)),
    }))
}

/// Lemma 3.5 for `r = 2`: a planar base of minimum degree at least 3.
pub fn rule_threereg(base: &SimpleGraph, c: &GeneratingSet, g: &MulTable) -> Result<Option<Obstruction>> {
    if !is_planar(base).is_planar() {
        return Err(Error::InvalidParameter("threereg rule needs a planar base".into()));
    }
    if base.n() != g.order() || c.elements().any(|x| x >= g.order()) {
        return Err(Error::InvalidParameter("base graph does not match the group".into()));
    }
    let d = base.min_degree();
    if d < 3 {
        return Ok(None);
    }
    let blown = blowup(base, 2)?;
    if d >= 4 {
        let bound = euler_lower_bound(&blown);
        return Ok((bound >= 2).then_some(Obstruction::ThreeRegDegree { base_degree: d, bound }));
    }
    let edge = base.edges().find(|&(u, v)| common_neighbors(base, u, v).is_empty());
    Ok(edge.map(|(u, v)| {
        let lifted = (2 * u, 2 * v);
        Obstruction::ThreeRegTriangle {
            base_edge: (u, v),
            edge: lifted,
            triangles: common_neighbors(&blown, lifted.0, lifted.1).len(),
        }
    }))
}

/// Prop 3.6 for `Cay(Z_n x R_r, {1} x R_r)`.
#[derive(Debug, Clone, Serialize)]
pub struct CyclicEntry {
    pub n: usize,
    pub r: usize,
    #[serde(flatten)]
    pub decision: Decision,
}

/// Verdict for `Z_n x R_r` with `C = {1}`, each case re-proved on the graph
/// itself. Accepts `1 <= r <= 6`.
pub fn cyclic_table(n: usize, r: usize) -> Result<CyclicEntry> {
    if n == 0 || !(1..=MAX_R).contains(&r) {
        return Err(Error::InvalidParameter(format!("cyclic table needs n >= 1, 1 <= r <= {MAX_R}")));
    }
    let graph = crate::embeddings::cyclic_right_group_graph(n, r)?;
    let base = crate::embeddings::cyclic_right_group_graph(n, 1)?;
    let decision = if r == 1 {
        Decision::planar(&graph, Rule::CyclicTable)
    } else if n == 1 {
        // {0} is the identity, so every (0, i) -> (0, j) is an arc: K_r
        small_complete(&graph)
    } else if let Some(o) = rule_r5(&base, r) {
        Decision::obstructed(Rule::R5K55, o)
    } else {
        match (n, r) {
            (2, 2) | (3, 2) => Decision::planar(&graph, Rule::CyclicTable),
            (2, _) => Decision::toroidal(&graph, torus_krr(r)?, Rule::CyclicTable),
            (3, 3) => Decision::toroidal(&graph, torus_triangular_grid_z3r3()?, Rule::CyclicTable),
            (3, 4) => Decision::obstructed(Rule::CyclicTable, triangle_free_count(&graph, r)),
            (_, 2) => Decision::toroidal(&graph, torus_square_grid(n)?, Rule::CyclicTable),
            _ => {
                let o = rule_k22(&base, r)?.expect("cycles of length >= 4 contain K22");
                Decision::obstructed(Rule::K22BlowupK66, o)
            }
        }
    };
    Ok(CyclicEntry { n, r, decision })
}

fn small_complete(graph: &SimpleGraph) -> Decision {
    if is_planar(graph).is_planar() {
        return Decision::planar(graph, Rule::CyclicTable);
    }
    let bound = euler_lower_bound(graph);
    if bound >= 2 {
        return Decision::obstructed(Rule::CyclicTable, Obstruction::EulerBound { bound });
    }
    search_decision(graph)
}

fn search_decision(graph: &SimpleGraph) -> Decision {
    let b = exact_genus(graph, crate::topology::genus::DEFAULT_BUDGET);
    match (b.lower, b.upper) {
        (l, _) if l >= 2 => Decision::obstructed(Rule::ExactSearch, Obstruction::Search { lower: l }),
        (_, Some(cert)) if cert.genus == 0 => Decision::planar(graph, Rule::ExactSearch),
        (_, Some(cert)) if cert.genus == 1 => Decision::toroidal(graph, cert, Rule::ExactSearch),
        _ => Decision {
            verdict: Verdict::Unresolved,
            rule: Rule::ExactSearch,
            certificate: None,
            nonplanarity: None,
            obstruction: None,
        },
    }
}

// Z_3 x R_4 = K_{4,4,4}: drop the 16 edges between parts 1 and 2.
fn triangle_free_count(graph: &SimpleGraph, r: usize) -> Obstruction {
    let removed: Vec<(usize, usize)> = graph
        .edges()
        .filter(|&(u, v)| u / r >= 1 && v / r >= 1)
        .collect();
    let mut h = graph.clone();
    for &(u, v) in &removed {
        h.remove_edge(u, v);
    }
    Obstruction::TriangleFreeCount {
        removed,
        vertices: h.n(),
        edges: h.m(),
        faces_needed: h.m() - h.n(),
    }
}

/// Decides one generating set. `graph` must be `Cay(G x R_r, C x R_r)`.
pub fn decide_generating_set(g: &MulTable, c: &GeneratingSet, r: usize) -> Result<Decision> {
    let base = cayley_graph(g, c);
    let graph = right_group_graph(g, c, r)?;
    if r == 1 {
        return Ok(if is_planar(&graph).is_planar() {
            Decision::planar(&graph, Rule::ExplicitCertificate)
        } else {
            search_decision(&graph)
        });
    }
    if let Some(o) = rule_nonplanar_base(&base, r) {
        return Ok(Decision::obstructed(Rule::EulerObstruction, o));
    }
    if let Some(o) = rule_r5(&base, r) {
        return Ok(Decision::obstructed(Rule::R5K55, o));
    }
    if let Some(o) = rule_k22(&base, r)? {
        return Ok(Decision::obstructed(Rule::K22BlowupK66, o));
    }
    if r == 2 && base.min_degree() >= 3 {
        if let Some(o) = rule_threereg(&base, c, g)? {
            return Ok(Decision::obstructed(Rule::ThreeReg, o));
        }
        return Ok(search_decision(&graph));
    }
    if base.max_degree() <= 2 && base.is_connected() {
        return cyclic_reduction(&base, &graph, r);
    }
    Ok(search_decision(&graph))
}

/// `Cay(G x R_r, C x R_r)` in canonical indexing.
pub fn right_group_graph(g: &MulTable, c: &GeneratingSet, r: usize) -> Result<SimpleGraph> {
    let rz = make_right_zero(r)?;
    Ok(cayley_graph(&direct_product(g, &rz), &c.product(&GeneratingSet::all(&rz), r)))
}

// A connected base of degree <= 2 is a cycle, an edge or a point; decide
// through the cyclic table and carry certificates over along the lifted
// isomorphism (g, i) -> (phi(g), i).
fn cyclic_reduction(base: &SimpleGraph, graph: &SimpleGraph, r: usize) -> Result<Decision> {
    let k = base.n();
    let model = crate::embeddings::cyclic_right_group_graph(k, 1)?;
    let phi = find_isomorphism(base, &model)?
        .ok_or_else(|| Error::InvalidParameter("degree-2 base is not a cycle".into()))?;
    let entry = cyclic_table(k, r)?;
    let mut d = entry.decision;
    // map[model vertex] = graph vertex
    let mut map = vec![0; k * r];
    for (g, &pg) in phi.iter().enumerate() {
        for i in 0..r {
            map[pg * r + i] = g * r + i;
        }
    }
    match d.verdict {
        Verdict::Planar => d = Decision::planar(graph, d.rule),
        Verdict::Toroidal => {
            let cert = d.certificate.take().expect("toroidal entries carry certificates");
            d = Decision::toroidal(graph, cert.transport(graph, &map)?, d.rule);
        }
        _ => {
            d.obstruction = d.obstruction.map(|o| transport_obstruction(o, &phi, &map));
        }
    }
    Ok(d)
}

fn transport_obstruction(o: Obstruction, phi: &[usize], map: &[usize]) -> Obstruction {
    let mut inv = vec![0; phi.len()];
    for (g, &pg) in phi.iter().enumerate() {
        inv[pg] = g;
    }
    match o {
        Obstruction::K55 { left, right, bound } => Obstruction::K55 {
            left: left.iter().map(|&v| map[v]).collect(),
            right: right.iter().map(|&v| map[v]).collect(),
            bound,
        },
        Obstruction::K22Blowup { mut witness, bound } => {
            witness.branch.iter_mut().for_each(|v| *v = inv[*v]);
            witness.paths.iter_mut().flatten().for_each(|v| *v = inv[*v]);
            Obstruction::K22Blowup { witness, bound }
        }
        Obstruction::TriangleFreeCount { removed, vertices, edges, faces_needed } => {
            Obstruction::TriangleFreeCount {
                removed: removed
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (map[u], map[v]);
                        (a.min(b), a.max(b))
                    })
                    .collect(),
                vertices,
                edges,
                faces_needed,
            }
        }
        other => other,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SetOutcome {
    pub generating_set: Vec<usize>,
    pub display: String,
    #[serde(flatten)]
    pub decision: Decision,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationRecord {
    pub group: String,
    pub r: usize,
    pub verdict: Verdict,
    pub rule: Rule,
    /// Generating set attaining the verdict, when it is planar or toroidal.
    pub witness_set: Option<String>,
    pub certificate: Option<EmbeddingCertificate>,
    pub nonplanarity: Option<KuratowskiWitness>,
    /// Every minimal generating set with its own decision.
    pub per_set: Vec<SetOutcome>,
}

impl ClassificationRecord {
    /// Re-validates every per-set decision and the aggregate.
    pub fn is_sound(&self, g: &MulTable) -> Result<bool> {
        for s in &self.per_set {
            let c = GeneratingSet::new(g, s.generating_set.iter().copied())?;
            let base = cayley_graph(g, &c);
            let graph = right_group_graph(g, &c, self.r)?;
            if !s.decision.is_sound(&base, &graph, self.r) {
                return Ok(false);
            }
        }
        let best = self.per_set.iter().map(|s| s.decision.verdict).min();
        Ok(best == Some(self.verdict))
    }
}

/// Classifies `G x R_r` over all inclusion-minimal generating sets of `G`.
/// The verdict is the best one attained; planar short-circuits the rest.
pub fn classify_right_group(name: &str, g: &MulTable, r: usize) -> Result<ClassificationRecord> {
    if !g.is_group() {
        return Err(Error::NotAGroup(name.to_string()));
    }
    if g.order() > MAX_GROUP_ORDER {
        return Err(Error::CapExceeded { what: "group order", actual: g.order(), cap: MAX_GROUP_ORDER });
    }
    if !(1..=MAX_R).contains(&r) {
        return Err(Error::CapExceeded { what: "r", actual: r, cap: MAX_R });
    }
    let mut sets = minimal_generating_sets(g)?;
    if r == 1 {
        // a planar base settles r = 1 outright; try those before any search
        if let Some(c) = sets.iter().find(|c| crate::topology::planar(&cayley_graph(g, c))) {
            sets = vec![c.clone()];
        }
    }
    let mut per_set = Vec::with_capacity(sets.len());
    for c in &sets {
        let decision = decide_generating_set(g, c, r)?;
        let done = decision.verdict == Verdict::Planar;
        per_set.push(SetOutcome {
            generating_set: c.to_vec(),
            display: c.display(g),
            decision,
        });
        if done {
            break;
        }
    }
    let best = per_set
        .iter()
        .min_by_key(|s| s.decision.verdict)
        .expect("every group has a minimal generating set");
    let attained = matches!(best.decision.verdict, Verdict::Planar | Verdict::Toroidal);
    Ok(ClassificationRecord {
        group: name.to_string(),
        r,
        verdict: best.decision.verdict,
        rule: best.decision.rule,
        witness_set: attained.then(|| best.display.clone()),
        certificate: if attained { best.decision.certificate.clone() } else { None },
        nonplanarity: if attained { best.decision.nonplanarity.clone() } else { None },
        per_set,
    })
}

/// Theorem 3.7's list, read literally: `Z_n x R_r` for (2,3), (2,4), (3,3)
/// and (n,2) with n >= 4; `Z_2 x Z_{2n+1} x R_2`; `D_n x R_2`; and
/// `Z_2 x D_n x R_2`, all n >= 2. Groups are recognized by their spec.
pub fn theorem_lists_toroidal(spec: &GroupSpec, r: usize) -> bool {
    match spec.factors() {
        [Factor::Cyclic(n)] => matches!((*n, r), (2, 3) | (2, 4) | (3, 3)) || (*n >= 4 && r == 2),
        [Factor::Cyclic(2), Factor::Cyclic(m)] => r == 2 && *m >= 3 && m % 2 == 1,
        [Factor::Dihedral(n)] => r == 2 && *n >= 2,
        [Factor::Cyclic(2), Factor::Dihedral(n)] => r == 2 && *n >= 2,
        _ => false,
    }
}

/// The list with its one correction: `Z_2 x D_n` for odd n only. For even
/// n, `{(1, g1), (0, g2)}` generates a dihedral group of order 2n, not all
/// of `Z_2 x D_n`, and no involution pair generates the group.
pub fn corrected_lists_toroidal(spec: &GroupSpec, r: usize) -> bool {
    match spec.factors() {
        [Factor::Cyclic(2), Factor::Dihedral(n)] => r == 2 && n % 2 == 1,
        _ => theorem_lists_toroidal(spec, r),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub group: String,
    pub r: usize,
    pub verdict: Verdict,
    pub rule: Rule,
    pub witness_set: Option<String>,
    pub sets_examined: usize,
    pub theorem_toroidal: bool,
    pub corrected_toroidal: bool,
    /// Verdict agrees with the corrected list; for r = 1, also planar.
    pub agrees: bool,
    pub sound: bool,
}

/// The family grid: `Z_2..Z_max_n`, `D_2..D_{min(max_n,6)}`, `A_4`, `S_4`,
/// `Z_2 x Z_3..Z_2 x Z_{min(max_n,5)}`, `Z_2 x D_2..Z_2 x D_{min(max_n,5)}`
/// and `Z_2 x A_4`.
pub fn theorem_family(max_n: usize) -> Vec<GroupSpec> {
    let one = |f| GroupSpec::new(vec![f]).unwrap();
    let two = |f| GroupSpec::new(vec![Factor::Cyclic(2), f]).unwrap();
    let mut out = Vec::new();
    out.extend((2..=max_n).map(|n| one(Factor::Cyclic(n))));
    out.extend((2..=max_n.min(6)).map(|n| one(Factor::Dihedral(n))));
    out.push(one(Factor::Alternating(4)));
    out.push(one(Factor::Symmetric(4)));
    out.extend((3..=max_n.min(5)).map(|n| two(Factor::Cyclic(n))));
    out.extend((2..=max_n.min(5)).map(|n| two(Factor::Dihedral(n))));
    out.push(two(Factor::Alternating(4)));
    out
}

/// One row per family member and `r` in `1..=max_r`, computed in parallel
/// and sorted by group then r.
pub fn theorem_report(max_n: usize, max_r: usize) -> Result<Vec<ReportRow>> {
    let jobs: Vec<(GroupSpec, usize)> = theorem_family(max_n)
        .into_iter()
        .flat_map(|s| (1..=max_r).map(move |r| (s.clone(), r)))
        .collect();
    let mut rows = jobs
        .par_iter()
        .map(|(spec, r)| report_row(spec, *r))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| (a.group.as_str(), a.r).cmp(&(b.group.as_str(), b.r)));
    Ok(rows)
}

fn report_row(spec: &GroupSpec, r: usize) -> Result<ReportRow> {
    let g = spec.table()?;
    let rec = classify_right_group(&spec.to_string(), &g, r)?;
    let corrected = corrected_lists_toroidal(spec, r);
    let agrees = (rec.verdict == Verdict::Toroidal) == corrected
        && rec.verdict != Verdict::Unresolved
        && (r != 1 || rec.verdict == Verdict::Planar);
    Ok(ReportRow {
        group: rec.group.clone(),
        r,
        verdict: rec.verdict,
        rule: rec.rule,
        witness_set: rec.witness_set.clone(),
        sets_examined: rec.per_set.len(),
        theorem_toroidal: theorem_lists_toroidal(spec, r),
        corrected_toroidal: corrected,
        agrees,
        sound: rec.is_sound(&g)?,
    })
}

/// `|{c : ord c = 2}| + 2 |{c : ord c >= 3}|`, the base degree of a
/// generating set of a group.
pub fn generator_degree(g: &MulTable, c: &GeneratingSet) -> Result<usize> {
    let mut d = 0;
    for x in c.elements() {
        d += match g.element_order(x)? {
            1 => 0,
            2 => 1,
            _ => 2,
        };
    }
    Ok(d)
}

/// The exclusion-list facts from the proof of Theorem 3.7: no involution
/// pair generates `g`, and every minimal generating set has degree >= 3.
pub fn exclusion_facts(g: &MulTable) -> Result<(bool, bool)> {
    let pair = two_involutions_generate(g)?;
    let degree_ok = minimal_generating_sets(g)?
        .iter()
        .map(|c| generator_degree(g, c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|d| d >= 3);
    Ok((pair, degree_ok))
}

/// One checked step of the Example 3.8 argument.
#[derive(Debug, Clone, Serialize)]
pub struct ReplayStep {
    pub label: char,
    pub claim: String,
    pub passed: bool,
    pub evidence: String,
}

/// Vertex naming used by the replay: the name `k` (resp. `k'`) is group
/// element `(EX38_NAMES[k], r1)` (resp. `r2`) of `Z_6 x R_2`, which exchanges
/// 3 and 5. With it, the deleted edges, the 4-cycles of step (d) and the
/// `K_{2,3}` of step (e) read exactly as printed.
pub const EX38_NAMES: [usize; 6] = [0, 1, 2, 5, 4, 3];

fn ex38_vertex(name: &str) -> usize {
    let (k, primed) = match name.strip_suffix('\'') {
        Some(k) => (k, 1),
        None => (name, 0),
    };
    2 * EX38_NAMES[k.parse::<usize>().unwrap()] + primed
}

fn ex38_name(v: usize) -> String {
    let k = EX38_NAMES.iter().position(|&e| e == v / 2).unwrap();
    if v % 2 == 1 {
        format!("{k}'")
    } else {
        k.to_string()
    }
}

fn names(vs: &[usize]) -> String {
    vs.iter().map(|&v| ex38_name(v)).collect::<Vec<_>>().join(",")
}

/// The graph `H` of Example 3.8: `Cay(Z_6 x R_2, {2,3} x R_2)` without the
/// edges between `{1,1'}` and `{5,5'}` and between `{0,0'}` and `{4,4'}`.
pub fn example38_h() -> SimpleGraph {
    let mut h = crate::embeddings::triple_torus_graph();
    for (a, b) in [("1", "5"), ("0", "4")] {
        for pa in ["", "'"] {
            for pb in ["", "'"] {
                let (u, v) = (ex38_vertex(&format!("{a}{pa}")), ex38_vertex(&format!("{b}{pb}")));
                assert!(h.remove_edge(u, v), "{a}{pa}-{b}{pb} is an edge");
            }
        }
    }
    h
}

/// Replays the proof that `Cay(Z_6 x R_2, {2,3} x R_2)` is not on the double
/// torus, step by step.
pub fn replay_example38() -> Vec<ReplayStep> {
    let h = example38_h();
    let mut steps = Vec::new();

    let tri = triangle_count(&h);
    steps.push(ReplayStep {
        label: 'a',
        claim: "H has 28 edges and is triangle-free".into(),
        passed: h.m() == 28 && tri == 0,
        evidence: format!("{} edges, {tri} triangles, girth {:?}", h.m(), girth(&h)),
    });

    steps.push(glued_k44_step(&h));

    // genus 2: n - m + f = -2
    let f = 2 - 2 * 2 - h.n() as i64 + h.m() as i64;
    let all_quads = 4 * f == 2 * h.m() as i64;
    steps.push(ReplayStep {
        label: 'c',
        claim: "on the double torus H has 14 faces, all quadrangular".into(),
        passed: f == 14 && all_quads && girth(&h) == Some(4),
        evidence: format!("f = 2 - 4 - {} + {} = {f}; 4f = {} = 2m", h.n(), h.m(), 4 * f),
    });

    let through = |a: &str, b: &str| -> Vec<Vec<usize>> {
        let (x, y) = (ex38_vertex(a), ex38_vertex(b));
        crate::topology::four_cycles(&h)
            .into_iter()
            .filter(|c| c.contains(&x) && c.contains(&y))
            .map(|c| c.to_vec())
            .collect()
    };
    let c40 = through("4", "0");
    let c40p = through("4", "0'");
    let expect = |names: [&str; 4]| {
        let mut v: Vec<usize> = names.iter().map(|n| ex38_vertex(n)).collect();
        v.sort_unstable();
        v
    };
    let sorted = |cs: &[Vec<usize>]| {
        cs.iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect::<Vec<_>>()
    };
    let d_ok = sorted(&c40) == vec![expect(["2'", "4", "2", "0"])]
        && sorted(&c40p) == vec![expect(["2'", "4", "2", "0'"])];
    steps.push(ReplayStep {
        label: 'd',
        claim: "the only 4-cycles of H through 4,0 and 4,0' are {2',4,2,0} and {2',4,2,0'}".into(),
        passed: d_ok,
        evidence: format!(
            "through 4,0: {:?}; through 4,0': {:?}",
            c40.iter().map(|c| names(c)).collect::<Vec<_>>(),
            c40p.iter().map(|c| names(c)).collect::<Vec<_>>()
        ),
    });

    let left = [ex38_vertex("2"), ex38_vertex("2'")];
    let right = [ex38_vertex("0"), ex38_vertex("0'"), ex38_vertex("4")];
    let present = left.iter().all(|&a| right.iter().all(|&b| h.has_edge(a, b)));
    let k23 = named::complete_bipartite(2, 3);
    let outer = crate::topology::is_outer_planar(&k23);
    let pattern = outer.witness().map(|w| w.pattern);
    steps.push(ReplayStep {
        label: 'e',
        claim: "H contains K_{2,3} with parts {2,2'} | {0,0',4}, which is not outer planar".into(),
        passed: present && pattern == Some(Pattern::K23),
        evidence: format!("edges present: {present}; outer-planarity witness: {pattern:?}"),
    });
    steps
}

// Step (b): H is two K_{4,4} copies sharing four vertices and the four edges
// among them. The printed bipartitions are reported alongside the ones found.
fn glued_k44_step(h: &SimpleGraph) -> ReplayStep {
    let printed = [
        (["0", "0'", "5", "5'"], ["2", "2'", "3", "3'"]),
        (["0", "0'", "1", "1'"], ["3", "3'", "4", "4'"]),
    ];
    let printed_present: Vec<bool> = printed
        .iter()
        .map(|(a, b)| a.iter().all(|x| b.iter().all(|y| h.has_edge(ex38_vertex(x), ex38_vertex(y)))))
        .collect();
    let found = k44_decomposition(h);
    let passed = found.is_some();
    let evidence = match &found {
        Some([(a1, b1), (a2, b2)]) => format!(
            "A = ({{{}}}, {{{}}}), B = ({{{}}}, {{{}}}); printed bipartitions present in H: {printed_present:?}",
            names(a1),
            names(b1),
            names(a2),
            names(b2)
        ),
        None => format!("no decomposition; printed bipartitions present in H: {printed_present:?}"),
    };
    ReplayStep {
        label: 'b',
        claim: "H is two copies of K_{4,4} glued at four vertices and their four edges".into(),
        passed,
        evidence,
    }
}

type Bipartition = (Vec<usize>, Vec<usize>);

fn k44_decomposition(h: &SimpleGraph) -> Option<[Bipartition; 2]> {
    // K_{4,4} copies of a K2-bar blow-up come from 4-cycles of the base,
    // which here is H with primed vertices merged.
    let base_edges: Vec<(usize, usize)> = h.edges().map(|(u, v)| (u / 2, v / 2)).collect();
    let base = SimpleGraph::from_edges(h.n() / 2, base_edges).ok()?;
    let cycles = crate::topology::four_cycles(&base);
    let lift = |vs: [usize; 2]| -> Vec<usize> { vs.iter().flat_map(|&v| [2 * v, 2 * v + 1]).collect() };
    for (i, c1) in cycles.iter().enumerate() {
        for c2 in &cycles[i + 1..] {
            let e = |c: &[usize; 4]| -> Vec<(usize, usize)> {
                (0..4).map(|k| (c[k].min(c[(k + 1) % 4]), c[k].max(c[(k + 1) % 4]))).collect()
            };
            let (e1, e2) = (e(c1), e(c2));
            let shared = e1.iter().filter(|x| e2.contains(x)).count();
            let covers = base.edges().all(|x| e1.contains(&x) || e2.contains(&x));
            let common = c1.iter().filter(|v| c2.contains(v)).count();
            if shared == 1 && common == 2 && covers && e1.len() + e2.len() - shared == base.m() {
                let part = |c: &[usize; 4]| (lift([c[0], c[2]]), lift([c[1], c[3]]));
                return Some([part(c1), part(c2)]);
            }
        }
    }
    None
}
