//! Surface-embedding invariants of simple graphs (orientable surfaces only).

pub mod genus;
pub mod planarity;
pub mod rotation;
pub mod subdivision;

use std::collections::VecDeque;

use crate::graph::SimpleGraph;

pub use genus::{euler_lower_bound, exact_genus, exact_genus_with, heuristic_upper, ExactOptions, GenusBounds, LowerReason};
pub use planarity::{is_outer_planar, is_planar, outer_planar, planar, OuterEmbedding, OuterPlanarity, Planarity};
pub use rotation::{face_trace, Dart, EmbeddingCertificate, RotationSystem};
pub use subdivision::{find_subdivision, KuratowskiWitness, Pattern};

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Number of triangles through each edge, edges in lexicographic order.
pub fn edge_triangle_profile(g: &SimpleGraph) -> Vec<((usize, usize), usize)> {
    g.edges()
        .map(|(u, v)| ((u, v), common_neighbors(g, u, v).len()))
        .collect()
}

pub fn common_neighbors(g: &SimpleGraph, u: usize, v: usize) -> Vec<usize> {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn triangle_count(g: &SimpleGraph) -> usize {
    edge_triangle_profile(g).iter().map(|&(_, t)| t).sum::<usize>() / 3
}

/// All 4-cycles as vertex sequences `[a, b, c, d]`, each listed once with
/// `a` its least vertex and `b < d`.
pub fn four_cycles(g: &SimpleGraph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > a && c != b) {
                for &d in g.neighbors(c).iter().filter(|&&d| d > b && d != c) {
                    if g.has_edge(d, a) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::products::{blowup, box_product};

    #[test]
    fn girths() {
        assert_eq!(girth(&named::cycle(6)), Some(6));
        assert_eq!(girth(&named::complete_bipartite(4, 4)), Some(4));
        assert_eq!(girth(&named::path(5)), None);
        let prism = box_product(&named::cycle(3), &named::complete(2));
        assert_eq!(girth(&blowup(&prism, 2).unwrap()), Some(3));
        assert_eq!(girth(&named::cycle(9)), Some(9));
    }

    #[test]
    fn triangle_profiles() {
        // prism with rungs (i, i + 3) after relabeling C3 x K2 by (i, j) -> 2i + j
        let prism = box_product(&named::cycle(3), &named::complete(2));
        let blown = blowup(&prism, 2).unwrap();
        // rung edge (0,1) of the prism lies in no triangle; so its blow-up copies don't
        assert!(edge_triangle_profile(&prism).iter().any(|&(e, t)| e == (0, 1) && t == 0));
        let profile = edge_triangle_profile(&blown);
        assert_eq!(profile.iter().find(|&&(e, _)| e == (0, 2)).unwrap().1, 0);
        assert!(edge_triangle_profile(&named::complete(4)).iter().all(|&(_, t)| t == 2));
        let oct = named::complete_multipartite(&[2, 2, 2]);
        // brute force: count common neighbors by scanning all vertices
        for ((u, v), t) in edge_triangle_profile(&oct) {
            let brute = (0..6).filter(|&w| oct.has_edge(u, w) && oct.has_edge(v, w)).count();
            assert_eq!(t, brute);
            assert_eq!(t, 2);
        }
        assert_eq!(triangle_count(&named::complete(5)), 10);
    }

    #[test]
    fn four_cycle_enumeration() {
        assert_eq!(four_cycles(&named::cycle(4)).len(), 1);
        assert_eq!(four_cycles(&named::complete(4)).len(), 3);
        // K_{3,3}: choose 2 + 2 vertices, one 4-cycle each
        assert_eq!(four_cycles(&named::complete_bipartite(3, 3)).len(), 9);
    }
}
