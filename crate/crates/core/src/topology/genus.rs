//! Orientable genus: counting lower bounds, exhaustive search over rotation
//! systems, and a local-search upper bound.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::planarity::is_planar;
use super::rotation::{face_trace, EmbeddingCertificate, RotationSystem};
use super::girth;
use crate::graph::SimpleGraph;

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const DEFAULT_EFFORT: u64 = 1_000_000;
/// Vertices of larger degree are not branched on by the exact search.
pub const MAX_SEARCH_DEGREE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum LowerReason {
    PlanarTest,
    EulerGirth,
    SubgraphObstruction,
    ExhaustedSearch,
}

impl std::fmt::Display for LowerReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LowerReason::PlanarTest => "planar-test",
            LowerReason::EulerGirth => "euler-girth",
            LowerReason::SubgraphObstruction => "subgraph-obstruction",
            LowerReason::ExhaustedSearch => "exhausted-search",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GenusBounds {
    pub lower: usize,
    pub lower_reason: LowerReason,
    pub upper: Option<EmbeddingCertificate>,
    /// Rotation assignments tried by the exhaustive search.
    pub expansions: u64,
}

impl GenusBounds {
    pub fn upper_genus(&self) -> Option<usize> {
        self.upper.as_ref().map(|c| c.genus)
    }

    pub fn exact(&self) -> Option<usize> {
        self.upper_genus().filter(|&u| u == self.lower)
    }
}

/// Least `g` compatible with `n - m + f = 2 - 2g` when every face has at
/// least `girth` sides, summed over components. Leaves are stripped first
/// since they do not change the genus.
pub fn euler_lower_bound(g: &SimpleGraph) -> usize {
    let core = strip_leaves(g);
    core.components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let h = core.induced(&c);
            let Some(gi) = girth(&h) else { return 0 };
            let (n, m, gi) = (h.n() as i64, h.m() as i64, gi as i64);
            let num = m * (gi - 2) - gi * (n - 2);
            let den = 2 * gi;
            if num <= 0 {
                0
            } else {
                ((num + den - 1) / den) as usize
            }
        })
        .sum()
}

fn strip_leaves(g: &SimpleGraph) -> SimpleGraph {
    let mut h = g.clone();
    let mut stack: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 1).collect();
    while let Some(v) = stack.pop() {
        if h.degree(v) != 1 {
            continue;
        }
        let w = h.neighbors(v)[0];
        h.remove_edge(v, w);
        if h.degree(w) == 1 {
            stack.push(w);
        }
    }
    h
}

#[derive(Debug, Clone, Copy)]
pub struct ExactOptions {
    pub budget: u64,
    pub effort: u64,
    pub seed: u64,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            budget: DEFAULT_BUDGET,
            effort: DEFAULT_EFFORT,
            seed: 0,
        }
    }
}

pub fn exact_genus(g: &SimpleGraph, budget: u64) -> GenusBounds {
    exact_genus_with(
        g,
        ExactOptions {
            budget,
            ..ExactOptions::default()
        },
    )
}

/// Bounds on the genus, exact when they meet. Components are handled
/// separately and added up.
pub fn exact_genus_with(g: &SimpleGraph, opts: ExactOptions) -> GenusBounds {
    let mut lower = 0;
    let mut reason = LowerReason::PlanarTest;
    let mut expansions = 0;
    let mut rot = vec![Vec::new(); g.n()];
    let mut remaining = opts.budget;
    for comp in g.components().into_iter().filter(|c| c.len() > 1) {
        let h = g.induced(&comp);
        let b = component_bounds(&h, remaining, opts);
        remaining = remaining.saturating_sub(b.expansions);
        expansions += b.expansions;
        lower += b.lower;
        reason = reason.max(b.lower_reason);
        let cert = b.upper.expect("component search always has an upper certificate");
        for (i, order) in cert.rotation.rotations().iter().enumerate() {
            rot[comp[i]] = order.iter().map(|&j| comp[j]).collect();
        }
    }
    let upper = face_trace(g, &RotationSystem::new(rot)).expect("combined rotations are valid");
    GenusBounds {
        lower,
        lower_reason: reason,
        upper: Some(upper),
        expansions,
    }
}

fn component_bounds(h: &SimpleGraph, budget: u64, opts: ExactOptions) -> GenusBounds {
    let planarity = is_planar(h);
    if let Some(cert) = planarity.certificate() {
        return GenusBounds {
            lower: 0,
            lower_reason: LowerReason::PlanarTest,
            upper: Some(cert.clone()),
            expansions: 0,
        };
    }
    let euler = euler_lower_bound(h);
    let (mut lower, mut reason) = if euler >= 1 {
        (euler, LowerReason::EulerGirth)
    } else {
        (1, LowerReason::PlanarTest)
    };
    let mut upper = anneal(h, opts.effort, opts.seed);
    let mut search = RotationSearch::new(h, budget);
    while lower < upper.genus {
        match search.run(lower) {
            Outcome::Found(rot) => {
                upper = face_trace(h, &rot).expect("search produces valid rotations");
                debug_assert_eq!(upper.genus, lower);
            }
            Outcome::Exhausted => {
                lower += 1;
                reason = LowerReason::ExhaustedSearch;
            }
            Outcome::OutOfBudget => break,
        }
    }
    GenusBounds {
        lower,
        lower_reason: reason,
        upper: Some(upper),
        expansions: search.expansions,
    }
}

/// A certificate found by simulated annealing on rotation systems; its
/// genus is an upper bound. Planar graphs get their planar embedding.
pub fn heuristic_upper(g: &SimpleGraph, effort: u64, seed: u64) -> EmbeddingCertificate {
    let planarity = is_planar(g);
    if let Some(cert) = planarity.certificate() {
        return cert.clone();
    }
    let mut rot = vec![Vec::new(); g.n()];
    for comp in g.components().into_iter().filter(|c| c.len() > 1) {
        let h = g.induced(&comp);
        let cert = match is_planar(&h) {
            super::Planarity::Planar(c) => c,
            super::Planarity::NonPlanar(_) => anneal(&h, effort, seed),
        };
        for (i, order) in cert.rotation.rotations().iter().enumerate() {
            rot[comp[i]] = order.iter().map(|&j| comp[j]).collect();
        }
    }
    face_trace(g, &RotationSystem::new(rot)).expect("combined rotations are valid")
}

const RESTARTS: u64 = 8;

// Independent annealing runs in parallel; the best result wins, ties going
// to the lowest restart index so the outcome does not depend on scheduling.
fn anneal(h: &SimpleGraph, effort: u64, seed: u64) -> EmbeddingCertificate {
    let floor = euler_lower_bound(h).max(1);
    let target = (2 + h.m() as i64 - h.n() as i64 - 2 * floor as i64) as usize;
    let runs: Vec<(usize, Vec<Vec<usize>>)> = (0..RESTARTS)
        .into_par_iter()
        .map(|i| {
            let run_seed = seed.wrapping_mul(1_000_003).wrapping_add(i);
            DartRotation::new(h).anneal(effort / RESTARTS + 1, run_seed, target)
        })
        .collect();
    let (_, (_, rot)) = runs
        .into_iter()
        .enumerate()
        .max_by_key(|(i, (f, _))| (*f, std::cmp::Reverse(*i)))
        .unwrap();
    face_trace(h, &RotationSystem::new(rot)).expect("annealing keeps rotations valid")
}

// Rotation system stored as a circular doubly linked list of darts around
// each vertex, so that moving one neighbor is constant time.
struct DartRotation {
    tail: Vec<usize>,
    head: Vec<usize>,
    rev: Vec<usize>,
    succ: Vec<usize>,
    pred: Vec<usize>,
    out: Vec<Vec<usize>>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl DartRotation {
    fn new(h: &SimpleGraph) -> Self {
        let mut out = vec![Vec::new(); h.n()];
        let (mut tail, mut head) = (Vec::new(), Vec::new());
        for u in 0..h.n() {
            for &w in h.neighbors(u) {
                out[u].push(tail.len());
                tail.push(u);
                head.push(w);
            }
        }
        let rev = (0..tail.len())
            .map(|d| {
                let (u, w) = (tail[d], head[d]);
                out[w][h.neighbors(w).binary_search(&u).unwrap()]
            })
            .collect();
        let darts = tail.len();
        DartRotation {
            tail,
            head,
            rev,
            succ: vec![0; darts],
            pred: vec![0; darts],
            out,
            stamp: vec![0; darts],
            epoch: 0,
        }
    }

    fn set_order(&mut self, v: usize, order: &[usize]) {
        let k = order.len();
        for i in 0..k {
            self.succ[order[i]] = order[(i + 1) % k];
            self.pred[order[(i + 1) % k]] = order[i];
        }
        let _ = v;
    }

    fn unlink(&mut self, x: usize) {
        let (p, s) = (self.pred[x], self.succ[x]);
        self.succ[p] = s;
        self.pred[s] = p;
    }

    fn link_after(&mut self, x: usize, y: usize) {
        let s = self.succ[y];
        self.succ[y] = x;
        self.pred[x] = y;
        self.succ[x] = s;
        self.pred[s] = x;
    }

    fn faces(&mut self) -> usize {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let mut faces = 0;
        for d in 0..self.succ.len() {
            if self.stamp[d] == self.epoch {
                continue;
            }
            faces += 1;
            let mut x = d;
            while self.stamp[x] != self.epoch {
                self.stamp[x] = self.epoch;
                x = self.succ[self.rev[x]];
            }
        }
        faces
    }

    fn rotation(&self) -> Vec<Vec<usize>> {
        self.out
            .iter()
            .map(|ds| {
                let Some(&first) = ds.first() else { return Vec::new() };
                let mut order = vec![self.head[first]];
                let mut x = self.succ[first];
                while x != first {
                    order.push(self.head[x]);
                    x = self.succ[x];
                }
                order
            })
            .collect()
    }

    fn anneal(mut self, steps: u64, seed: u64, target: usize) -> (usize, Vec<Vec<usize>>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for v in 0..self.out.len() {
            let mut order = self.out[v].clone();
            order.shuffle(&mut rng);
            self.set_order(v, &order);
        }
        let movable: Vec<usize> = (0..self.tail.len())
            .filter(|&d| self.out[self.tail[d]].len() >= 3)
            .collect();
        let mut cur = self.faces();
        let mut best = (cur, self.rotation());
        if movable.is_empty() {
            return best;
        }
        let (t0, t1) = (1.0f64, 0.1f64);
        for step in 0..steps {
            if best.0 >= target {
                break;
            }
            let temp = t0 * (t1 / t0).powf(step as f64 / steps as f64);
            let x = movable[rng.gen_range(0..movable.len())];
            let ds = &self.out[self.tail[x]];
            let mut y = ds[rng.gen_range(0..ds.len())];
            if y == x || y == self.pred[x] {
                y = self.succ[x];
            }
            let old = self.pred[x];
            self.unlink(x);
            self.link_after(x, y);
            let next = self.faces();
            let delta = next as f64 - cur as f64;
            if delta >= 0.0 || rng.gen::<f64>() < (delta / temp).exp() {
                cur = next;
                if cur > best.0 {
                    best = (cur, self.rotation());
                }
            } else {
                self.unlink(x);
                self.link_after(x, old);
            }
        }
        best
    }
}

enum Outcome {
    Found(RotationSystem),
    Exhausted,
    OutOfBudget,
}

const UNSET: usize = usize::MAX;

/// Branch and bound over rotation systems of a connected graph. Vertices
/// are assigned in BFS order; after each assignment the faces that have
/// closed are counted, and a branch is cut when even all remaining darts
/// forming girth-length faces could not reach the target face count.
struct RotationSearch<'a> {
    g: &'a SimpleGraph,
    order: Vec<usize>,
    offset: Vec<usize>,
    rev: Vec<usize>,
    head: Vec<usize>,
    next: Vec<usize>,
    has_pred: Vec<bool>,
    tail: Vec<usize>,
    dist: Vec<usize>,
    slots: Vec<Vec<usize>>,
    closed_faces: usize,
    closed_darts: usize,
    face_len: usize,
    target: usize,
    perms: HashMap<usize, Vec<Vec<usize>>>,
    expansions: u64,
    budget: u64,
}

impl<'a> RotationSearch<'a> {
    fn new(g: &'a SimpleGraph, budget: u64) -> Self {
        let n = g.n();
        let mut offset = vec![0; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + g.degree(v);
        }
        let darts = offset[n];
        let mut rev = vec![0; darts];
        let mut head = vec![0; darts];
        for u in 0..n {
            for (i, &w) in g.neighbors(u).iter().enumerate() {
                head[offset[u] + i] = w;
                rev[offset[u] + i] = offset[w] + g.neighbors(w).binary_search(&u).unwrap();
            }
        }
        let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
        // greedy: next vertex has the most already placed neighbors
        let mut order = vec![start];
        let mut placed = vec![false; n];
        let mut weight = vec![0usize; n];
        placed[start] = true;
        for &w in g.neighbors(start) {
            weight[w] += 1;
        }
        while order.len() < n {
            let Some(v) = (0..n)
                .filter(|&v| !placed[v] && weight[v] > 0)
                .max_by_key(|&v| (weight[v], g.degree(v), std::cmp::Reverse(v)))
            else {
                break;
            };
            placed[v] = true;
            order.push(v);
            for &w in g.neighbors(v) {
                weight[w] += 1;
            }
        }
        RotationSearch {
            g,
            order,
            offset,
            rev,
            head,
            next: vec![UNSET; darts],
            has_pred: vec![false; darts],
            tail: (0..n).flat_map(|u| std::iter::repeat_n(u, g.degree(u))).collect(),
            dist: distances(g),
            slots: vec![Vec::new(); n],
            closed_faces: 0,
            closed_darts: 0,
            face_len: girth(g).unwrap_or(3).max(3),
            target: 0,
            perms: HashMap::new(),
            expansions: 0,
            budget,
        }
    }

    /// Looks for a rotation system of genus at most `genus`.
    fn run(&mut self, genus: usize) -> Outcome {
        let (n, m) = (self.g.n() as i64, self.g.m() as i64);
        let target = 2 - 2 * genus as i64 - n + m;
        if target <= 0 {
            return Outcome::Exhausted;
        }
        self.target = target as usize;
        if self.g.max_degree() > MAX_SEARCH_DEGREE {
            return Outcome::OutOfBudget;
        }
        for &v in &self.order {
            let d = self.g.degree(v);
            self.perms.entry(d).or_insert_with(|| cyclic_orders(d));
        }
        self.next.iter_mut().for_each(|x| *x = UNSET);
        self.closed_faces = 0;
        self.closed_darts = 0;
        match self.descend(0) {
            Some(true) => {
                let rot = (0..self.g.n())
                    .map(|v| self.slots[v].iter().map(|&i| self.g.neighbors(v)[i]).collect())
                    .collect();
                Outcome::Found(RotationSystem::new(rot))
            }
            Some(false) => Outcome::Exhausted,
            None => Outcome::OutOfBudget,
        }
    }

    // Some(true): found; Some(false): subtree exhausted; None: out of budget.
    fn descend(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(self.closed_faces >= self.target);
        }
        let v = self.order[depth];
        let d = self.g.degree(v);
        let count = self.perms[&d].len();
        for k in 0..count {
            let perm = &self.perms[&d][k];
            // mirror images have the same genus: fix one orientation at the root
            if depth == 0 && d >= 3 && perm[1] > perm[d - 1] {
                continue;
            }
            if self.expansions >= self.budget {
                return None;
            }
            self.expansions += 1;
            let perm = perm.clone();
            let (faces, darts) = self.assign(v, &perm);
            if self.closed_faces + self.open_face_bound() >= self.target {
                match self.descend(depth + 1) {
                    Some(true) => {
                        self.slots[v] = perm;
                        return Some(true);
                    }
                    Some(false) => {}
                    None => return None,
                }
            }
            self.unassign(v, faces, darts);
        }
        Some(false)
    }

    // Most faces the darts outside closed faces can still form. They split
    // into maximal open chains; every future face holds at least one chain
    // and at least `face_len` darts.
    fn open_face_bound(&mut self) -> usize {
        let open = 2 * self.g.m() - self.closed_darts;
        if open == 0 {
            return 0;
        }
        let darts = self.next.len();
        self.has_pred.iter_mut().for_each(|p| *p = false);
        for d in 0..darts {
            if self.next[d] != UNSET {
                self.has_pred[self.next[d]] = true;
            }
        }
        let (mut long, mut short, mut short_darts) = (0, 0, 0);
        let mut excess = 0;
        for d in 0..darts {
            if self.has_pred[d] {
                continue;
            }
            let mut len = 1;
            let mut x = d;
            while self.next[x] != UNSET {
                x = self.next[x];
                len += 1;
            }
            // the face through this chain must still get back from its end to its start
            let gap = self.dist[self.head[x] * self.g.n() + self.tail[d]];
            excess = excess.max((len + gap).saturating_sub(self.face_len));
            if len >= self.face_len {
                long += 1;
            } else {
                short += 1;
                short_darts += len;
            }
        }
        let by_chains = long + short.min(short_darts / self.face_len);
        by_chains.min((open - excess.min(open)) / self.face_len)
    }

    fn assign(&mut self, v: usize, cyc: &[usize]) -> (usize, usize) {
        let d = cyc.len();
        let base = self.offset[v];
        for k in 0..d {
            let (i, j) = (cyc[k], cyc[(k + 1) % d]);
            let incoming = self.rev[base + i];
            self.next[incoming] = base + j;
        }
        let (mut faces, mut darts) = (0, 0);
        for i in 0..d {
            let start = self.rev[base + i];
            let mut x = self.next[start];
            let mut len = 1;
            let mut least_new = start;
            while x != start && self.next[x] != UNSET {
                if self.head[x] == v {
                    least_new = least_new.min(x);
                }
                x = self.next[x];
                len += 1;
            }
            if x == start && least_new == start {
                faces += 1;
                darts += len;
            }
        }
        self.closed_faces += faces;
        self.closed_darts += darts;
        self.slots[v] = cyc.to_vec();
        (faces, darts)
    }

    fn unassign(&mut self, v: usize, faces: usize, darts: usize) {
        let base = self.offset[v];
        for i in 0..self.g.degree(v) {
            self.next[self.rev[base + i]] = UNSET;
        }
        self.closed_faces -= faces;
        self.closed_darts -= darts;
    }
}

fn distances(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut dist = vec![usize::MAX / 4; n * n];
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] > row[u] + 1 {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

/// Cyclic orders of `0..d` as sequences starting with 0.
fn cyclic_orders(d: usize) -> Vec<Vec<usize>> {
    if d <= 1 {
        return vec![(0..d).collect()];
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (1..d).collect();
    permute(&mut rest, 0, &mut out);
    out.sort();
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        let mut p = vec![0];
        p.extend_from_slice(items);
        out.push(p);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::products::blowup;

    #[test]
    fn euler_bounds_for_cited_genera() {
        assert_eq!(euler_lower_bound(&named::complete_bipartite(5, 5)), 3);
        assert_eq!(euler_lower_bound(&named::complete_bipartite(6, 6)), 4);
        // K5[K̄2]: 40 edges, girth 3; f <= 26 gives 2g >= 32 - 26
        let k5b = blowup(&named::complete(5), 2).unwrap();
        assert_eq!((k5b.n(), k5b.m()), (10, 40));
        assert_eq!(euler_lower_bound(&k5b), 3);
        assert_eq!(euler_lower_bound(&named::complete(4)), 0);
        assert_eq!(euler_lower_bound(&named::path(4)), 0);
        assert_eq!(euler_lower_bound(&named::complete(7)), 1);
    }

    #[test]
    fn exact_small_cases() {
        let k4 = exact_genus(&named::complete(4), DEFAULT_BUDGET);
        assert_eq!(k4.exact(), Some(0));
        let k5 = exact_genus(&named::complete(5), DEFAULT_BUDGET);
        assert_eq!(k5.exact(), Some(1));
        let k33 = exact_genus(&named::complete_bipartite(3, 3), DEFAULT_BUDGET);
        assert_eq!(k33.exact(), Some(1));
        for b in [k5, k33] {
            b.upper.unwrap().revalidate().unwrap();
        }
    }

    #[test]
    fn search_alone_decides_k33_and_k5() {
        for g in [named::complete_bipartite(3, 3), named::complete(5)] {
            let mut s = RotationSearch::new(&g, DEFAULT_BUDGET);
            assert!(matches!(s.run(0), Outcome::Exhausted));
            match s.run(1) {
                Outcome::Found(rot) => assert_eq!(face_trace(&g, &rot).unwrap().genus, 1),
                _ => panic!("torus embedding expected"),
            }
        }
    }

    #[test]
    fn search_proves_k7_and_k44_lower_bounds() {
        // K_{4,4}: no planar embedding exists, so the genus-0 search exhausts
        let k44 = named::complete_bipartite(4, 4);
        let mut s = RotationSearch::new(&k44, DEFAULT_BUDGET);
        assert!(matches!(s.run(0), Outcome::Exhausted));
        assert!(matches!(s.run(1), Outcome::Found(_)));
    }

    #[test]
    fn budget_exhaustion_gives_bounds() {
        let g = named::complete(7);
        let mut s = RotationSearch::new(&g, 10);
        assert!(matches!(s.run(1), Outcome::OutOfBudget));
        let b = exact_genus_with(&g, ExactOptions { budget: 10, effort: 1, seed: 0 });
        assert!(b.lower <= b.upper_genus().unwrap());
    }

    #[test]
    fn cyclic_order_counts() {
        assert_eq!(cyclic_orders(1).len(), 1);
        assert_eq!(cyclic_orders(3).len(), 2);
        assert_eq!(cyclic_orders(5).len(), 24);
    }

    #[test]
    fn complete_bipartite_genera() {
        // ceil((r-2)^2 / 4) for r <= 4
        for (r, expected) in [(1, 0), (2, 0), (3, 1), (4, 1)] {
            let b = exact_genus(&named::complete_bipartite(r, r), DEFAULT_BUDGET);
            assert_eq!(b.exact(), Some(expected), "K_{r},{r}");
        }
    }

    #[test]
    fn heuristic_finds_torus_for_k44() {
        let c = heuristic_upper(&named::complete_bipartite(4, 4), 20_000, 1);
        assert_eq!(c.genus, 1);
        c.revalidate().unwrap();
        let planar = heuristic_upper(&named::cycle(5), 10, 0);
        assert_eq!(planar.genus, 0);
    }

    #[test]
    fn disconnected_genus_adds() {
        let mut g = SimpleGraph::empty(10);
        for (u, v) in named::complete(5).edges() {
            g.add_edge(u, v);
            g.add_edge(u + 5, v + 5);
        }
        let b = exact_genus(&g, DEFAULT_BUDGET);
        assert_eq!(b.exact(), Some(2));
    }

    #[test]
    fn euler_bound_never_exceeds_exact() {
        for g in [named::complete(5), named::complete(6), named::complete_bipartite(3, 4), blowup(&named::cycle(3), 3).unwrap()] {
            let b = exact_genus(&g, DEFAULT_BUDGET);
            let e = b.exact().expect("completes");
            assert!(euler_lower_bound(&g) <= e);
            assert!(b.lower <= heuristic_upper(&g, 20_000, 3).genus);
        }
    }
}
