//! Topological minors of the small complete (bipartite) graphs that
//! obstruct planarity and outer-planarity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const MAX_SUBDIVISION_VERTICES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    K5,
    K33,
    K4,
    K23,
    K22,
}

impl Pattern {
    /// Sizes of the two sides for bipartite patterns, `None` for cliques.
    fn sides(self) -> Option<(usize, usize)> {
        match self {
            Pattern::K33 => Some((3, 3)),
            Pattern::K23 => Some((2, 3)),
            Pattern::K22 => Some((2, 2)),
            Pattern::K5 | Pattern::K4 => None,
        }
    }

    pub fn branch_count(self) -> usize {
        match self {
            Pattern::K5 | Pattern::K23 => 5,
            Pattern::K33 => 6,
            Pattern::K4 | Pattern::K22 => 4,
        }
    }

    /// Pattern edges over branch positions. Bipartite patterns list the
    /// left side first.
    pub fn edges(self) -> Vec<(usize, usize)> {
        match self.sides() {
            Some((a, b)) => (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect(),
            None => {
                let k = self.branch_count();
                (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
            }
        }
    }

    fn degree(self, position: usize) -> usize {
        match self.sides() {
            Some((a, b)) => {
                if position < a {
                    b
                } else {
                    a
                }
            }
            None => self.branch_count() - 1,
        }
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Pattern::K5 => "K5",
            Pattern::K33 => "K3,3",
            Pattern::K4 => "K4",
            Pattern::K23 => "K2,3",
            Pattern::K22 => "K2,2",
        };
        f.write_str(s)
    }
}

/// A subdivision of `pattern` inside a graph: `branch[i]` realizes pattern
/// vertex `i`, and `paths[k]` runs between the branch vertices of pattern
/// edge `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub pattern: Pattern,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl KuratowskiWitness {
    /// Checks the witness against `g`: paths exist, join the right branch
    /// vertices, and meet only at their ends.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        let edges = self.pattern.edges();
        if self.branch.len() != self.pattern.branch_count() || self.paths.len() != edges.len() {
            return false;
        }
        let mut used = vec![false; g.n()];
        for &b in &self.branch {
            if b >= g.n() || std::mem::replace(&mut used[b], true) {
                return false;
            }
        }
        for (path, &(i, j)) in self.paths.iter().zip(&edges) {
            if path.len() < 2 || path[0] != self.branch[i] || path[path.len() - 1] != self.branch[j] {
                return false;
            }
            if path.windows(2).any(|w| w[0] >= g.n() || w[1] >= g.n() || !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &x in &path[1..path.len() - 1] {
                if std::mem::replace(&mut used[x], true) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices on the witness, branch and interior.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.paths.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The witness as an edge subgraph of a graph on `n` vertices.
    pub fn subgraph(&self, n: usize) -> SimpleGraph {
        let mut h = SimpleGraph::empty(n);
        for p in &self.paths {
            for w in p.windows(2) {
                h.add_edge(w[0], w[1]);
            }
        }
        h
    }
}

/// Searches for a subdivision of `pattern`. Branch-vertex sets are tried in
/// lexicographic order, so the witness returned has the smallest branch set.
pub fn find_subdivision(g: &SimpleGraph, pattern: Pattern) -> Result<Option<KuratowskiWitness>> {
    if g.n() > MAX_SUBDIVISION_VERTICES {
        return Err(Error::CapExceeded {
            what: "graph order",
            actual: g.n(),
            cap: MAX_SUBDIVISION_VERTICES,
        });
    }
    let k = pattern.branch_count();
    let max_needed = (0..k).map(|p| pattern.degree(p)).max().unwrap();
    let min_needed = (0..k).map(|p| pattern.degree(p)).min().unwrap();
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= min_needed).collect();
    if candidates.len() < k {
        return Ok(None);
    }
    let mut found = None;
    let mut set = Vec::with_capacity(k);
    for_each_subset(&candidates, k, &mut set, &mut |set| {
        if set.iter().filter(|&&v| g.degree(v) >= max_needed).count() < count_high(pattern) {
            return false;
        }
        for branch in assignments(pattern, set) {
            if !(0..k).all(|p| g.degree(branch[p]) >= pattern.degree(p)) {
                continue;
            }
            if let Some(paths) = route(g, pattern, &branch) {
                found = Some(KuratowskiWitness {
                    pattern,
                    branch,
                    paths,
                });
                return true;
            }
        }
        false
    });
    Ok(found)
}

// Number of branch positions needing the maximum degree.
fn count_high(pattern: Pattern) -> usize {
    let k = pattern.branch_count();
    let max = (0..k).map(|p| pattern.degree(p)).max().unwrap();
    (0..k).filter(|&p| pattern.degree(p) == max).count()
}

fn for_each_subset(items: &[usize], k: usize, set: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if set.len() == k {
        return f(set);
    }
    let need = k - set.len();
    for i in 0..items.len() {
        if items.len() - i < need {
            break;
        }
        set.push(items[i]);
        let done = for_each_subset(&items[i + 1..], k, set, f);
        set.pop();
        if done {
            return true;
        }
    }
    false
}

// Distinct ways to place a sorted branch set onto pattern positions, up to
// the pattern's symmetries.
fn assignments(pattern: Pattern, set: &[usize]) -> Vec<Vec<usize>> {
    match pattern.sides() {
        None => vec![set.to_vec()],
        Some((a, b)) => {
            let k = a + b;
            let mut out = Vec::new();
            for mask in 0u32..(1 << k) {
                if mask.count_ones() as usize != a {
                    continue;
                }
                let left: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| set[i]).collect();
                let right: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 0).map(|i| set[i]).collect();
                if a == b && left[0] > right[0] {
                    continue;
                }
                out.push(left.into_iter().chain(right).collect());
            }
            out
        }
    }
}

fn route(g: &SimpleGraph, pattern: Pattern, branch: &[usize]) -> Option<Vec<Vec<usize>>> {
    let mut blocked = vec![false; g.n()];
    for &b in branch {
        blocked[b] = true;
    }
    let edges: Vec<(usize, usize)> = pattern.edges().into_iter().map(|(i, j)| (branch[i], branch[j])).collect();
    let mut paths = Vec::with_capacity(edges.len());
    if route_from(g, &edges, 0, &mut blocked, &mut paths) {
        Some(paths)
    } else {
        None
    }
}

fn route_from(
    g: &SimpleGraph,
    edges: &[(usize, usize)],
    k: usize,
    blocked: &mut Vec<bool>,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    if k == edges.len() {
        return true;
    }
    let (s, t) = edges[k];
    // direct edge first
    if g.has_edge(s, t) {
        paths.push(vec![s, t]);
        if route_from(g, edges, k + 1, blocked, paths) {
            return true;
        }
        paths.pop();
    }
    let mut path = vec![s];
    let mut stack: Vec<usize> = vec![0];
    // DFS enumerating simple paths s -> t through unblocked vertices
    while let Some(&i) = stack.last() {
        let u = *path.last().unwrap();
        let nbrs = g.neighbors(u);
        if i >= nbrs.len() {
            stack.pop();
            let x = path.pop().unwrap();
            if x != s {
                blocked[x] = false;
            }
            continue;
        }
        *stack.last_mut().unwrap() += 1;
        let w = nbrs[i];
        if w == t && path.len() > 1 {
            let mut full = path.clone();
            full.push(t);
            paths.push(full);
            if route_from(g, edges, k + 1, blocked, paths) {
                return true;
            }
            paths.pop();
        } else if !blocked[w] {
            blocked[w] = true;
            path.push(w);
            stack.push(0);
        }
    }
    false
}

/// Reads off the subdivision formed by a graph that is exactly a
/// subdivision of one of the four obstruction patterns (isolated vertices
/// ignored), as produced by edge-minimal obstruction extraction.
pub(crate) fn identify_minimal(h: &SimpleGraph) -> Option<KuratowskiWitness> {
    let branch_nodes: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    let degrees: Vec<usize> = branch_nodes.iter().map(|&v| h.degree(v)).collect();
    // paths between branch nodes, each recorded once from its smaller end
    let trace = |start: usize, first: usize, is_branch: &dyn Fn(usize) -> bool| {
        let mut path = vec![start, first];
        let (mut prev, mut cur) = (start, first);
        while !is_branch(cur) {
            let next = *h.neighbors(cur).iter().find(|&&w| w != prev)?;
            path.push(next);
            prev = cur;
            cur = next;
        }
        Some(path)
    };
    let collect_paths = |nodes: &[usize]| -> Option<Vec<Vec<usize>>> {
        let is_branch = |v: usize| nodes.contains(&v);
        let mut out = Vec::new();
        for &b in nodes {
            for &w in h.neighbors(b) {
                let p = trace(b, w, &is_branch)?;
                let end = *p.last().unwrap();
                if end == b {
                    return None;
                }
                if b < end {
                    out.push(p);
                }
            }
        }
        Some(out)
    };
    let pick = |pattern: Pattern, branch: Vec<usize>, paths: Vec<Vec<usize>>| {
        let edges = pattern.edges();
        let mut ordered = Vec::with_capacity(edges.len());
        for &(i, j) in &edges {
            let (a, b) = (branch[i], branch[j]);
            let p = paths.iter().find(|p| p[0] == a.min(b) && *p.last().unwrap() == a.max(b))?;
            let mut p = p.clone();
            if p[0] != a {
                p.reverse();
            }
            ordered.push(p);
        }
        let w = KuratowskiWitness {
            pattern,
            branch,
            paths: ordered,
        };
        w.verify(h).then_some(w)
    };
    match (branch_nodes.len(), degrees.iter().all(|&d| d == 3), degrees.iter().all(|&d| d == 4)) {
        (5, _, true) => pick(Pattern::K5, branch_nodes.clone(), collect_paths(&branch_nodes)?),
        (6, true, _) => {
            let paths = collect_paths(&branch_nodes)?;
            let first = branch_nodes[0];
            let linked = |a: usize, b: usize| paths.iter().any(|p| (p[0], *p.last().unwrap()) == (a.min(b), a.max(b)));
            let right: Vec<usize> = branch_nodes.iter().copied().filter(|&v| linked(first, v)).collect();
            let left: Vec<usize> = branch_nodes.iter().copied().filter(|v| !right.contains(v)).collect();
            if left.len() != 3 || right.len() != 3 {
                return None;
            }
            pick(Pattern::K33, left.into_iter().chain(right).collect(), paths)
        }
        (4, true, _) => pick(Pattern::K4, branch_nodes.clone(), collect_paths(&branch_nodes)?),
        (2, true, _) => {
            // theta graph: three paths between the two degree-3 vertices;
            // the first interior vertex of each path becomes a branch vertex
            let (a, b) = (branch_nodes[0], branch_nodes[1]);
            let theta = collect_paths(&branch_nodes)?;
            if theta.len() != 3 || theta.iter().any(|p| p.len() < 3) {
                return None;
            }
            let mut mids: Vec<(usize, Vec<usize>)> = theta.iter().map(|p| (p[1], p[1..].to_vec())).collect();
            mids.sort();
            let mut branch = vec![a, b];
            branch.extend(mids.iter().map(|m| m.0));
            let mut paths = Vec::new();
            for (x, _) in &mids {
                paths.push(vec![a, *x]);
            }
            for (_, rest) in &mids {
                let mut p = rest.clone();
                p.reverse();
                paths.push(p);
            }
            // K2,3 edge order is (a,x1) (a,x2) (a,x3) (b,x1) (b,x2) (b,x3)
            let w = KuratowskiWitness {
                pattern: Pattern::K23,
                branch,
                paths,
            };
            w.verify(h).then_some(w)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn cycle_contains_k22() {
        for n in 4..9 {
            let c = named::cycle(n);
            let w = find_subdivision(&c, Pattern::K22).unwrap().unwrap();
            assert!(w.verify(&c));
            assert_eq!(w.vertices().len(), n);
        }
        assert!(find_subdivision(&named::cycle(3), Pattern::K22).unwrap().is_none());
    }

    #[test]
    fn complete_graphs() {
        let k5 = named::complete(5);
        let w = find_subdivision(&k5, Pattern::K5).unwrap().unwrap();
        assert_eq!(w.branch, vec![0, 1, 2, 3, 4]);
        assert!(w.verify(&k5));
        assert!(find_subdivision(&k5, Pattern::K33).unwrap().is_none());
        let k33 = named::complete_bipartite(3, 3);
        let w = find_subdivision(&k33, Pattern::K33).unwrap().unwrap();
        assert_eq!(w.branch, vec![0, 1, 2, 3, 4, 5]);
        assert!(find_subdivision(&named::complete(4), Pattern::K4).unwrap().is_some());
        assert!(find_subdivision(&named::complete_bipartite(2, 3), Pattern::K23).unwrap().is_some());
        assert!(find_subdivision(&named::cycle(5), Pattern::K4).unwrap().is_none());
    }

    #[test]
    fn subdivided_k33() {
        // K3,3 with edge 0-3 subdivided by vertex 6
        let mut g = named::complete_bipartite(3, 3);
        g.remove_edge(0, 3);
        let mut h = SimpleGraph::empty(7);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(0, 6);
        h.add_edge(6, 3);
        let w = find_subdivision(&h, Pattern::K33).unwrap().unwrap();
        assert!(w.verify(&h));
        assert!(w.paths.contains(&vec![0, 6, 3]));
        let id = identify_minimal(&h).unwrap();
        assert_eq!(id.pattern, Pattern::K33);
        assert!(id.verify(&h));
    }

    #[test]
    fn identify_theta() {
        let mut g = SimpleGraph::empty(7);
        for (u, v) in [(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 1)] {
            g.add_edge(u, v);
        }
        let w = identify_minimal(&g).unwrap();
        assert_eq!(w.pattern, Pattern::K23);
        assert_eq!(w.branch, vec![0, 1, 2, 3, 5]);
    }

    #[test]
    fn witness_verification_rejects_shared_vertices() {
        let k4 = named::complete(4);
        let mut w = find_subdivision(&k4, Pattern::K4).unwrap().unwrap();
        assert!(w.verify(&k4));
        w.paths[0] = vec![w.branch[0], w.branch[2], w.branch[1]];
        assert!(!w.verify(&k4));
    }

    #[test]
    fn size_cap() {
        assert!(find_subdivision(&SimpleGraph::empty(101), Pattern::K22).is_err());
    }
}
