//! Planarity and outer-planarity with certificates both ways.
//!
//! Planar embeddings come from path addition (Demoucron, Malgrange and
//! Pertuiset) on each biconnected block; obstructions are extracted by
//! greedy deletion down to an edge-minimal non-planar subgraph, which is
//! then read off as a Kuratowski subdivision.

use serde::Serialize;

use super::rotation::{face_trace, EmbeddingCertificate, RotationSystem};
use super::subdivision::{identify_minimal, KuratowskiWitness};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Serialize)]
pub enum Planarity {
    Planar(EmbeddingCertificate),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn certificate(&self) -> Option<&EmbeddingCertificate> {
        match self {
            Planarity::Planar(c) => Some(c),
            Planarity::NonPlanar(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&KuratowskiWitness> {
        match self {
            Planarity::NonPlanar(w) => Some(w),
            Planarity::Planar(_) => None,
        }
    }
}

/// An outer-planar embedding: a genus-0 certificate together with the index
/// of a face meeting every non-isolated vertex.
#[derive(Debug, Clone, Serialize)]
pub struct OuterEmbedding {
    pub certificate: EmbeddingCertificate,
    pub outer_face: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub enum OuterPlanarity {
    OuterPlanar(OuterEmbedding),
    NotOuterPlanar(KuratowskiWitness),
}

impl OuterPlanarity {
    pub fn is_outer_planar(&self) -> bool {
        matches!(self, OuterPlanarity::OuterPlanar(_))
    }

    pub fn witness(&self) -> Option<&KuratowskiWitness> {
        match self {
            OuterPlanarity::NotOuterPlanar(w) => Some(w),
            OuterPlanarity::OuterPlanar(_) => None,
        }
    }
}

pub fn is_planar(g: &SimpleGraph) -> Planarity {
    match planar_rotation(g) {
        Some(rot) => {
            let cert = face_trace(g, &rot).expect("path addition yields a valid rotation");
            debug_assert_eq!(cert.genus, 0);
            Planarity::Planar(cert)
        }
        None => Planarity::NonPlanar(extract_obstruction(g, |h| planar_rotation(h).is_some())),
    }
}

/// Decision only, no certificate.
pub fn planar(g: &SimpleGraph) -> bool {
    planar_rotation(g).is_some()
}

pub fn is_outer_planar(g: &SimpleGraph) -> OuterPlanarity {
    let n = g.n();
    match planar_rotation(&with_apex(g)) {
        Some(rot) => {
            let rot = RotationSystem::new(
                (0..n)
                    .map(|v| {
                        // reading the rotation from just after the apex keeps the
                        // apex's corners merged into one face
                        let r = rot.at(v);
                        let i = r.iter().position(|&w| w == n).unwrap();
                        r[i + 1..].iter().chain(&r[..i]).copied().collect()
                    })
                    .collect(),
            );
            let certificate = face_trace(g, &rot).expect("apex removal keeps a valid rotation");
            let touched: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
            let outer_face = (0..certificate.face_count()).find(|&i| {
                let f = certificate.face_vertices(i);
                touched.iter().all(|v| f.contains(v))
            });
            OuterPlanarity::OuterPlanar(OuterEmbedding {
                certificate,
                outer_face,
            })
        }
        None => OuterPlanarity::NotOuterPlanar(extract_obstruction(g, |h| planar_rotation(&with_apex(h)).is_some())),
    }
}

pub fn outer_planar(g: &SimpleGraph) -> bool {
    planar_rotation(&with_apex(g)).is_some()
}

fn with_apex(g: &SimpleGraph) -> SimpleGraph {
    let n = g.n();
    let mut h = SimpleGraph::empty(n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for v in 0..n {
        h.add_edge(v, n);
    }
    h
}

// Greedy deletion to an edge-minimal subgraph failing `accept`: whole
// vertices first (highest index first), then single edges. The remainder is
// a subdivision of one of the obstruction patterns.
fn extract_obstruction(g: &SimpleGraph, accept: impl Fn(&SimpleGraph) -> bool) -> KuratowskiWitness {
    let mut h = g.clone();
    for v in (0..g.n()).rev() {
        let nbrs = h.neighbors(v).to_vec();
        if nbrs.is_empty() {
            continue;
        }
        for &w in &nbrs {
            h.remove_edge(v, w);
        }
        if accept(&h) {
            for &w in &nbrs {
                h.add_edge(v, w);
            }
        }
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    for &(u, v) in edges.iter().rev() {
        h.remove_edge(u, v);
        if accept(&h) {
            h.add_edge(u, v);
        }
    }
    identify_minimal(&h).expect("an edge-minimal obstruction is a subdivision of K5, K3,3, K4 or K2,3")
}

/// A planar rotation system, if one exists. Blocks are embedded separately
/// and their rotations concatenated at cut vertices.
pub(crate) fn planar_rotation(g: &SimpleGraph) -> Option<RotationSystem> {
    let n = g.n();
    if g.m() > 3 * n.saturating_sub(2).max(1) && n >= 3 {
        return None;
    }
    let mut rot = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |x: usize| verts.binary_search(&x).unwrap();
        let b = SimpleGraph::from_edges(verts.len(), block.iter().map(|&(u, v)| (local(u), local(v)))).unwrap();
        let brot = embed_biconnected(&b)?;
        for (i, order) in brot.into_iter().enumerate() {
            rot[verts[i]].extend(order.into_iter().map(|j| verts[j]));
        }
    }
    Some(RotationSystem::new(rot))
}

/// Edge sets of the biconnected blocks (bridges are singleton blocks).
pub(crate) fn biconnected_blocks(g: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if top.2 < g.degree(u) {
                let w = g.neighbors(u)[top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, u) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

// Path addition on a 2-connected graph. Faces of the partial embedding are
// cycles, so a vertex meets each face at most once.
fn embed_biconnected(b: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    let n = b.n();
    let mut in_h = vec![false; n];
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut h = SimpleGraph::empty(n);

    let cycle = initial_cycle(b);
    let k = cycle.len();
    for i in 0..k {
        let (prev, cur, next) = (cycle[(i + k - 1) % k], cycle[i], cycle[(i + 1) % k]);
        in_h[cur] = true;
        rot[cur] = vec![prev, next];
        h.add_edge(cur, next);
    }

    while h.m() < b.m() {
        let faces = trace_faces(&rot, &h);
        let fragments = fragments(b, &h, &in_h);
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains_vertex[*a]))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = chosen.expect("an incomplete embedding has a fragment");
        let path = fragment_path(b, &fragments[fi], &in_h);
        embed_path(&mut rot, &faces[face], &path);
        for w in path.windows(2) {
            h.add_edge(w[0], w[1]);
        }
        for &v in &path {
            in_h[v] = true;
        }
    }
    Some(rot)
}

fn initial_cycle(b: &SimpleGraph) -> Vec<usize> {
    // path from a neighbor of 0 back to 0 avoiding the direct edge
    let a = b.neighbors(0)[0];
    let mut prev = vec![usize::MAX; b.n()];
    prev[a] = a;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for &w in b.neighbors(u) {
            if (u == a && w == 0) || prev[w] != usize::MAX {
                continue;
            }
            prev[w] = u;
            if w == 0 {
                queue.clear();
                break;
            }
            queue.push_back(w);
        }
    }
    let mut cycle = vec![0];
    let mut x = prev[0];
    while x != a {
        cycle.push(x);
        x = prev[x];
    }
    cycle.push(a);
    cycle
}

struct Face {
    darts: Vec<(usize, usize)>,
    contains_vertex: Vec<bool>,
}

fn trace_faces(rot: &[Vec<usize>], h: &SimpleGraph) -> Vec<Face> {
    let mut seen = std::collections::HashSet::new();
    let mut faces = Vec::new();
    for u in 0..rot.len() {
        for &v in &rot[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut darts = Vec::new();
            let mut contains_vertex = vec![false; h.n()];
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                darts.push((a, b));
                contains_vertex[a] = true;
                let r = &rot[b];
                let i = r.iter().position(|&x| x == a).unwrap();
                let next = r[(i + 1) % r.len()];
                a = b;
                b = next;
            }
            faces.push(Face { darts, contains_vertex });
        }
    }
    faces
}

struct Fragment {
    attachments: Vec<usize>,
    // interior vertices (empty for a single chord)
    interior: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(b: &SimpleGraph, h: &SimpleGraph, in_h: &[bool]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (u, v) in b.edges() {
        if in_h[u] && in_h[v] && !h.has_edge(u, v) {
            out.push(Fragment {
                attachments: vec![u, v],
                interior: Vec::new(),
                chord: Some((u, v)),
            });
        }
    }
    let mut seen = vec![false; b.n()];
    for s in 0..b.n() {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        seen[s] = true;
        let mut i = 0;
        while i < interior.len() {
            let u = interior[i];
            i += 1;
            for &w in b.neighbors(u) {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            interior,
            chord: None,
        });
    }
    out
}

// A path through the fragment between two distinct attachment vertices.
fn fragment_path(b: &SimpleGraph, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let start = frag.attachments[0];
    let mut inside = vec![false; b.n()];
    for &x in &frag.interior {
        inside[x] = true;
    }
    let mut prev = vec![usize::MAX; b.n()];
    let mut queue = std::collections::VecDeque::new();
    for &w in b.neighbors(start) {
        if inside[w] && prev[w] == usize::MAX {
            prev[w] = start;
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in b.neighbors(u) {
            if in_h[w] && w != start {
                let mut path = vec![w, u];
                let mut x = u;
                while prev[x] != start {
                    x = prev[x];
                    path.push(x);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            if inside[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a 2-connected graph have two attachments")
}

// Inserts the path into the face: at each end, the new neighbor goes right
// after the face's incoming neighbor, which places it in that face's corner.
fn embed_path(rot: &mut [Vec<usize>], face: &Face, path: &[usize]) {
    let (first, last) = (path[0], path[path.len() - 1]);
    let incoming = |v: usize| face.darts.iter().find(|d| d.1 == v).unwrap().0;
    let (p_first, p_last) = (incoming(first), incoming(last));
    let insert_after = |rot: &mut [Vec<usize>], v: usize, after: usize, x: usize| {
        let i = rot[v].iter().position(|&w| w == after).unwrap();
        rot[v].insert(i + 1, x);
    };
    insert_after(rot, first, p_first, path[1]);
    insert_after(rot, last, p_last, path[path.len() - 2]);
    for i in 1..path.len() - 1 {
        rot[path[i]] = vec![path[i - 1], path[i + 1]];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::products::blowup;
    use crate::topology::subdivision::Pattern;

    #[test]
    fn small_planar_graphs() {
        for g in [named::complete(4), named::cycle(7), named::path(5), blowup(&named::cycle(3), 2).unwrap()] {
            let p = is_planar(&g);
            let cert = p.certificate().expect("planar");
            assert_eq!(cert.genus, 0);
            cert.revalidate().unwrap();
        }
    }

    #[test]
    fn kuratowski_graphs() {
        let k5 = named::complete(5);
        let w = is_planar(&k5).witness().unwrap().clone();
        assert_eq!(w.pattern, Pattern::K5);
        assert!(w.verify(&k5));
        let k33 = named::complete_bipartite(3, 3);
        let w = is_planar(&k33).witness().unwrap().clone();
        assert_eq!(w.pattern, Pattern::K33);
        assert!(w.verify(&k33));
    }

    #[test]
    fn k44_witness_on_low_vertices() {
        // Cay(Z4 x R2, {1} x R2) with (g, i) at 2g + i
        let g = blowup(&named::cycle(4), 2).unwrap();
        let w = is_planar(&g).witness().unwrap().clone();
        assert_eq!(w.pattern, Pattern::K33);
        assert!(w.verify(&g));
        let mut left = w.branch[..3].to_vec();
        let mut right = w.branch[3..].to_vec();
        left.sort();
        right.sort();
        // {0, 0', 2} and {1, 1', 3}
        assert_eq!(left, vec![0, 1, 4]);
        assert_eq!(right, vec![2, 3, 6]);
    }

    #[test]
    fn separable_graphs() {
        // two K4s sharing a vertex, plus a pendant path
        let mut g = SimpleGraph::empty(9);
        for (u, v) in named::complete(4).edges() {
            g.add_edge(u, v);
            g.add_edge(u + 3, v + 3);
        }
        g.add_edge(6, 7);
        g.add_edge(7, 8);
        let cert = is_planar(&g).certificate().unwrap().clone();
        assert_eq!(cert.genus, 0);
        let blocks = biconnected_blocks(&g);
        assert_eq!(blocks.len(), 4);
    }

    #[test]
    fn outer_planarity() {
        let k23 = named::complete_bipartite(2, 3);
        let r = is_outer_planar(&k23);
        let w = r.witness().unwrap();
        assert_eq!(w.pattern, Pattern::K23);
        assert!(w.verify(&k23));
        let k4 = named::complete(4);
        assert_eq!(is_outer_planar(&k4).witness().unwrap().pattern, Pattern::K4);
        match is_outer_planar(&named::cycle(5)) {
            OuterPlanarity::OuterPlanar(e) => {
                assert_eq!(e.certificate.genus, 0);
                assert!(e.outer_face.is_some());
            }
            _ => panic!("C5 is outer planar"),
        }
        // triangulated hexagon (fan) is outer planar
        let mut fan = named::cycle(6);
        for v in 2..5 {
            fan.add_edge(0, v);
        }
        assert!(is_outer_planar(&fan).is_outer_planar());
    }
}
