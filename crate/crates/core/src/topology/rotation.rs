//! Rotation systems, face tracing and the certificate text format.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// For each vertex, the cyclic order of its neighbors. In a simple graph a
/// neighbor identifies the edge-end, so this is a full rotation system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

/// A directed edge `(tail, head)`.
pub type Dart = (usize, usize);

impl RotationSystem {
    pub fn new(rot: Vec<Vec<usize>>) -> Self {
        RotationSystem { rot }
    }

    /// Each vertex's neighbors in increasing order.
    pub fn sorted(g: &SimpleGraph) -> Self {
        RotationSystem {
            rot: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn set(&mut self, v: usize, order: Vec<usize>) {
        self.rot[v] = order;
    }

    /// The graph whose edges are the rotation entries; fails unless every
    /// entry is mirrored.
    pub fn underlying_graph(&self) -> Result<SimpleGraph> {
        let n = self.rot.len();
        let mut g = SimpleGraph::empty(n);
        for (v, order) in self.rot.iter().enumerate() {
            for &w in order {
                if w >= n || w == v {
                    return Err(Error::MalformedRotation(format!("bad neighbor {w} at vertex {v}")));
                }
                if !self.rot[w].contains(&v) {
                    return Err(Error::MalformedRotation(format!("edge {v}-{w} listed at {v} only")));
                }
                g.add_edge(v, w);
            }
        }
        self.validate(&g)?;
        Ok(g)
    }

    /// Checks that each rotation is a permutation of the vertex's neighbors.
    pub fn validate(&self, g: &SimpleGraph) -> Result<()> {
        if self.rot.len() != g.n() {
            return Err(Error::MalformedRotation(format!(
                "{} rotations for {} vertices",
                self.rot.len(),
                g.n()
            )));
        }
        for v in 0..g.n() {
            let mut sorted = self.rot[v].clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::MalformedRotation(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
        }
        Ok(())
    }

    /// Image under a vertex bijection `map[old] = new`.
    pub fn relabel(&self, map: &[usize]) -> RotationSystem {
        let mut rot = vec![Vec::new(); self.rot.len()];
        for (v, order) in self.rot.iter().enumerate() {
            rot[map[v]] = order.iter().map(|&w| map[w]).collect();
        }
        RotationSystem { rot }
    }

    /// Position lookup `pos[v][w]` of `w` in the rotation at `v`.
    fn positions(&self) -> Vec<std::collections::HashMap<usize, usize>> {
        self.rot
            .iter()
            .map(|order| order.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect()
    }
}

/// A face-traced embedding. Faces and genus are always derived from the
/// rotation system, never supplied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingCertificate {
    #[serde(skip)]
    pub graph: SimpleGraph,
    pub rotation: RotationSystem,
    pub faces: Vec<Vec<Dart>>,
    pub genus: usize,
}

impl EmbeddingCertificate {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Vertices incident to face `i`.
    pub fn face_vertices(&self, i: usize) -> Vec<usize> {
        self.faces[i].iter().map(|&(u, _)| u).collect()
    }

    /// Re-traces the faces from scratch and compares.
    pub fn revalidate(&self) -> Result<()> {
        let again = face_trace(&self.graph, &self.rotation)?;
        if again.faces != self.faces || again.genus != self.genus {
            return Err(Error::Certificate("stored faces disagree with the rotation system".into()));
        }
        let total: usize = self.faces.iter().map(Vec::len).sum();
        if total != 2 * self.m() {
            return Err(Error::Certificate("face lengths do not sum to 2m".into()));
        }
        Ok(())
    }

    /// Transport along a vertex bijection onto an isomorphic graph.
    pub fn transport(&self, target: &SimpleGraph, map: &[usize]) -> Result<EmbeddingCertificate> {
        face_trace(target, &self.rotation.relabel(map))
    }

    /// The certificate text format: a header, then one line per vertex
    /// listing its neighbors in rotation order.
    pub fn to_text(&self) -> String {
        let mut s = String::from("rotation-certificate v1\n");
        let _ = writeln!(s, "vertices {}", self.n());
        let _ = writeln!(s, "edges {}", self.m());
        let _ = writeln!(s, "genus {}", self.genus);
        for (v, order) in self.rotation.rotations().iter().enumerate() {
            let _ = write!(s, "{v}:");
            for w in order {
                let _ = write!(s, " {w}");
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text format. The graph is read off the rotation lines and
    /// the faces and genus are recomputed; a `genus` or `edges` header that
    /// disagrees with the recomputation is an error.
    pub fn from_text(text: &str) -> Result<EmbeddingCertificate> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        match lines.next() {
            Some("rotation-certificate v1") => {}
            other => return Err(Error::Parse(format!("unexpected header {other:?}"))),
        }
        let mut n = None;
        let mut claimed_genus = None;
        let mut claimed_edges = None;
        let mut rot: Vec<Option<Vec<usize>>> = Vec::new();
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad number `{t}`")));
        for line in lines {
            if let Some(rest) = line.strip_prefix("vertices ") {
                let k = num(rest.trim())?;
                n = Some(k);
                rot = vec![None; k];
            } else if let Some(rest) = line.strip_prefix("genus ") {
                claimed_genus = Some(num(rest.trim())?);
            } else if let Some(rest) = line.strip_prefix("edges ") {
                claimed_edges = Some(num(rest.trim())?);
            } else if let Some((v, nbrs)) = line.split_once(':') {
                let v = num(v.trim())?;
                if n.is_none() {
                    return Err(Error::Parse("rotation line before `vertices`".into()));
                }
                let slot = rot
                    .get_mut(v)
                    .ok_or_else(|| Error::Parse(format!("vertex {v} out of range")))?;
                if slot.is_some() {
                    return Err(Error::Parse(format!("vertex {v} listed twice")));
                }
                *slot = Some(nbrs.split_whitespace().map(num).collect::<Result<Vec<_>>>()?);
            } else {
                return Err(Error::Parse(format!("unrecognized line `{line}`")));
            }
        }
        if n.is_none() {
            return Err(Error::Parse("missing `vertices` line".into()));
        }
        let rot: Vec<Vec<usize>> = rot
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| Error::Parse(format!("no rotation for vertex {v}"))))
            .collect::<Result<_>>()?;
        let rotation = RotationSystem::new(rot);
        let graph = rotation.underlying_graph()?;
        let cert = face_trace(&graph, &rotation)?;
        if let Some(m) = claimed_edges {
            if m != cert.m() {
                return Err(Error::Certificate(format!("claims {m} edges, rotation has {}", cert.m())));
            }
        }
        if let Some(g) = claimed_genus {
            if g != cert.genus {
                return Err(Error::Certificate(format!("claims genus {g}, traced genus is {}", cert.genus)));
            }
        }
        Ok(cert)
    }
}

/// Traces the faces of `rot` on `g`: the face after dart `u -> v` continues
/// with `v -> w`, where `w` follows `u` in the rotation at `v`.
///
/// Genus is summed over components that have an edge:
/// `n - m + f = 2c - 2g` counted over non-isolated vertices.
pub fn face_trace(g: &SimpleGraph, rot: &RotationSystem) -> Result<EmbeddingCertificate> {
    rot.validate(g)?;
    let pos = rot.positions();
    // dart ids: offset[u] + index of v in g.neighbors(u)
    let mut offset = vec![0; g.n() + 1];
    for v in 0..g.n() {
        offset[v + 1] = offset[v] + g.degree(v);
    }
    let dart_id = |u: usize, v: usize| offset[u] + g.neighbors(u).binary_search(&v).unwrap();
    let mut seen = vec![false; offset[g.n()]];
    let mut faces = Vec::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if seen[dart_id(u, v)] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while !seen[dart_id(a, b)] {
                seen[dart_id(a, b)] = true;
                face.push((a, b));
                let order = rot.at(b);
                let next = order[(pos[b][&a] + 1) % order.len()];
                a = b;
                b = next;
            }
            if (a, b) != (u, v) {
                return Err(Error::MalformedRotation("face walk did not close".into()));
            }
            faces.push(face);
        }
    }
    let comps = g.components().into_iter().filter(|c| c.len() > 1).count() as i64;
    let n = (0..g.n()).filter(|&v| g.degree(v) > 0).count() as i64;
    let twice_genus = 2 * comps - n + g.m() as i64 - faces.len() as i64;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::MalformedRotation(format!("Euler count gives 2g = {twice_genus}")));
    }
    Ok(EmbeddingCertificate {
        graph: g.clone(),
        rotation: rot.clone(),
        faces,
        genus: (twice_genus / 2) as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cycle_has_two_faces() {
        let c6 = named::cycle(6);
        let cert = face_trace(&c6, &RotationSystem::sorted(&c6)).unwrap();
        assert_eq!(cert.face_count(), 2);
        assert_eq!(cert.genus, 0);
        assert_eq!(cert.face_lengths(), vec![6, 6]);
    }

    #[test]
    fn k4_sorted_rotation() {
        let k4 = named::complete(4);
        let cert = face_trace(&k4, &RotationSystem::sorted(&k4)).unwrap();
        // n - m + f = 4 - 6 + f
        assert_eq!(4 - 6 + cert.face_count() as i64, 2 - 2 * cert.genus as i64);
    }

    #[test]
    fn malformed_rotations_are_rejected() {
        let k3 = named::complete(3);
        let bad = RotationSystem::new(vec![vec![1], vec![0, 2], vec![0, 1]]);
        assert!(face_trace(&k3, &bad).is_err());
        let bad = RotationSystem::new(vec![vec![1, 2], vec![0, 2]]);
        assert!(face_trace(&k3, &bad).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let k4 = named::complete(4);
        let cert = face_trace(&k4, &RotationSystem::sorted(&k4)).unwrap();
        let text = cert.to_text();
        let back = EmbeddingCertificate::from_text(&text).unwrap();
        assert_eq!(back, cert);
        let lied = text.replace(&format!("genus {}", cert.genus), &format!("genus {}", cert.genus + 1));
        assert!(matches!(EmbeddingCertificate::from_text(&lied), Err(Error::Certificate(_))));
        assert!(EmbeddingCertificate::from_text("rotation-certificate v1\nvertices 2\n0: 1\n1:\n").is_err());
        assert!(EmbeddingCertificate::from_text("nonsense\n").is_err());
    }

    #[test]
    fn isolated_vertices_and_components() {
        let g = SimpleGraph::from_edges(7, [(0, 1), (1, 2), (2, 0), (4, 5)]).unwrap();
        let cert = face_trace(&g, &RotationSystem::sorted(&g)).unwrap();
        assert_eq!(cert.genus, 0);
        assert_eq!(cert.face_count(), 3);
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
        use rand::Rng;
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn euler_accounting_on_random_rotations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..1000 {
            let n = 3 + i % 8;
            let g = random_graph(&mut rng, n, 0.5);
            let rot = RotationSystem::new(
                (0..n)
                    .map(|v| {
                        let mut r = g.neighbors(v).to_vec();
                        r.shuffle(&mut rng);
                        r
                    })
                    .collect(),
            );
            let cert = face_trace(&g, &rot).unwrap();
            let total: usize = cert.face_lengths().iter().sum();
            assert_eq!(total, 2 * g.m());
            let mut darts: Vec<Dart> = cert.faces.iter().flatten().copied().collect();
            darts.sort();
            darts.dedup();
            assert_eq!(darts.len(), 2 * g.m());
        }
    }

    proptest! {
        #[test]
        fn text_round_trip_preserves_rotation(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(&mut rng, 8, 0.4);
            let rot = RotationSystem::new((0..8).map(|v| {
                let mut r = g.neighbors(v).to_vec();
                r.shuffle(&mut rng);
                r
            }).collect());
            let cert = face_trace(&g, &rot).unwrap();
            let back = EmbeddingCertificate::from_text(&cert.to_text()).unwrap();
            prop_assert_eq!(back, cert);
        }
    }
}
