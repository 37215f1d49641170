//! Graph isomorphism by color refinement plus backtracking.
//!
//! Intended for the small, highly symmetric graphs that arise as Cayley
//! graphs (up to a few hundred vertices).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const MAX_ISO_VERTICES: usize = 500;

/// A vertex bijection `map[x_vertex] = y_vertex` preserving adjacency and
/// non-adjacency, or `None` when none exists.
pub fn find_isomorphism(x: &SimpleGraph, y: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    find_isomorphism_fixing(x, y, &[])
}

/// As [`find_isomorphism`], with some vertex pairs prescribed.
pub fn find_isomorphism_fixing(
    x: &SimpleGraph,
    y: &SimpleGraph,
    fixed: &[(usize, usize)],
) -> Result<Option<Vec<usize>>> {
    for g in [x, y] {
        if g.n() > MAX_ISO_VERTICES {
            return Err(Error::CapExceeded {
                what: "graph order",
                actual: g.n(),
                cap: MAX_ISO_VERTICES,
            });
        }
    }
    if x.n() != y.n() || x.m() != y.m() {
        return Ok(None);
    }
    let n = x.n();
    let (cx, cy) = refine_jointly(x, y, fixed);
    let mut hist_x = BTreeMap::new();
    let mut hist_y = BTreeMap::new();
    for v in 0..n {
        *hist_x.entry(cx[v]).or_insert(0usize) += 1;
        *hist_y.entry(cy[v]).or_insert(0usize) += 1;
    }
    if hist_x != hist_y {
        return Ok(None);
    }

    let mut search = Search {
        x,
        y,
        cx: &cx,
        cy: &cy,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        order: Vec::new(),
    };
    for &(a, b) in fixed {
        if a >= n || b >= n || cx[a] != cy[b] || !search.consistent(a, b) {
            return Ok(None);
        }
        search.map[a] = b;
        search.used[b] = true;
    }
    search.order = search_order(x, &cx, &search.map);
    if search.extend(0) {
        debug_assert!(is_isomorphism(x, y, &search.map));
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

pub fn is_isomorphism(x: &SimpleGraph, y: &SimpleGraph, map: &[usize]) -> bool {
    if x.n() != y.n() || x.m() != y.m() || map.len() != x.n() {
        return false;
    }
    let mut hit = vec![false; y.n()];
    for &v in map {
        if v >= y.n() || std::mem::replace(&mut hit[v], true) {
            return false;
        }
    }
    x.edges().all(|(u, v)| y.has_edge(map[u], map[v]))
}

// 1-dimensional Weisfeiler-Leman on the disjoint union, so that colors are
// comparable across the two graphs. Fixed pairs start with private colors.
fn refine_jointly(x: &SimpleGraph, y: &SimpleGraph, fixed: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let n = x.n();
    let mut color: Vec<usize> = (0..n).map(|v| x.degree(v)).chain((0..n).map(|v| y.degree(v))).collect();
    let base = n + 1;
    for (i, &(a, b)) in fixed.iter().enumerate() {
        if a < n && b < n {
            color[a] = base + i;
            color[n + b] = base + i;
        }
    }
    let nbrs = |v: usize| -> Vec<usize> {
        if v < n {
            x.neighbors(v).to_vec()
        } else {
            y.neighbors(v - n).iter().map(|&w| w + n).collect()
        }
    };
    let mut classes = count_distinct(&color);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..2 * n)
            .map(|v| {
                let mut s: Vec<usize> = nbrs(v).into_iter().map(|w| color[w]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let mut ids = BTreeMap::new();
        for s in &signatures {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        color = signatures.iter().map(|s| ids[s]).collect();
        let now = ids.len();
        if now == classes {
            break;
        }
        classes = now;
    }
    let cy = color.split_off(n);
    (color, cy)
}

fn count_distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

// Unmapped vertices ordered so that each one (after the first of its
// component) has as many already-placed neighbors as possible.
fn search_order(x: &SimpleGraph, cx: &[usize], map: &[usize]) -> Vec<usize> {
    let n = x.n();
    let mut placed: Vec<bool> = map.iter().map(|&m| m != usize::MAX).collect();
    let mut weight = vec![0usize; n];
    for v in 0..n {
        if placed[v] {
            for &w in x.neighbors(v) {
                weight[w] += 1;
            }
        }
    }
    let mut class_size = BTreeMap::new();
    for &c in cx {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order = Vec::new();
    while placed.iter().any(|&p| !p) {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(class_size[&cx[v]]), x.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in x.neighbors(v) {
            weight[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    x: &'a SimpleGraph,
    y: &'a SimpleGraph,
    cx: &'a [usize],
    cy: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    order: Vec<usize>,
}

impl Search<'_> {
    fn consistent(&self, a: usize, b: usize) -> bool {
        let mut mapped_nbrs = 0;
        for &w in self.x.neighbors(a) {
            let fw = self.map[w];
            if fw != usize::MAX {
                if !self.y.has_edge(b, fw) {
                    return false;
                }
                mapped_nbrs += 1;
            }
        }
        let image_nbrs = self.y.neighbors(b).iter().filter(|&&w| self.used[w]).count();
        mapped_nbrs == image_nbrs
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let a = self.order[depth];
        for b in 0..self.y.n() {
            if self.used[b] || self.cy[b] != self.cx[a] || !self.consistent(a, b) {
                continue;
            }
            self.map[a] = b;
            self.used[b] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[a] = usize::MAX;
            self.used[b] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn basic_decisions() {
        assert!(find_isomorphism(&named::complete(3), &named::cycle(4)).unwrap().is_none());
        assert!(find_isomorphism(&named::complete(3), &named::cycle(3)).unwrap().is_some());
        // same degree sequence, different graphs: C6 vs two triangles
        let two_triangles = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(find_isomorphism(&named::cycle(6), &two_triangles).unwrap().is_none());
        // prism vs K_{3,3}: both 3-regular on 6 vertices
        let prism = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(find_isomorphism(&prism, &named::complete_bipartite(3, 3)).unwrap().is_none());
    }

    #[test]
    fn relabeled_graphs_are_isomorphic() {
        let g = named::complete_bipartite(3, 4);
        let perm = [6, 0, 5, 1, 4, 2, 3];
        let h = g.relabel(&perm);
        let map = find_isomorphism(&g, &h).unwrap().unwrap();
        assert!(is_isomorphism(&g, &h, &map));
        let big = named::cycle(400);
        let perm: Vec<usize> = (0..400).map(|i| (i * 7) % 400).collect();
        assert!(find_isomorphism(&big, &big.relabel(&perm)).unwrap().is_some());
    }

    #[test]
    fn fixed_pairs_are_respected() {
        let p = named::path(3);
        assert!(find_isomorphism_fixing(&p, &p, &[(0, 2)]).unwrap().is_some());
        assert!(find_isomorphism_fixing(&p, &p, &[(0, 1)]).unwrap().is_none());
    }

    #[test]
    fn size_cap() {
        let g = SimpleGraph::empty(MAX_ISO_VERTICES + 1);
        assert!(find_isomorphism(&g, &g).is_err());
    }
}
