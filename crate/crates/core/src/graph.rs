//! Undirected simple graphs and arc-colored digraphs.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Undirected, loop-free graph without parallel edges.
///
/// Adjacency lists are kept sorted so that equality is structural and
/// `has_edge` is a binary search.
#[derive(Debug, Clone, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            labels: None,
        }
    }

    /// Loops are rejected; repeated edges collapse.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::ElementOutOfRange {
                    element: u.max(v),
                    order: n,
                });
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Returns false if the edge was already present. Panics on loops.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "loops are not allowed in a simple graph");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                self.edge_count -= 1;
                true
            }
            Err(_) => false,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().collect()
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = SimpleGraph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && pos[w] > i {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        g
    }

    /// Same vertex set, only the given edges (which must exist in `self`).
    pub fn edge_subgraph<I: IntoIterator<Item = (usize, usize)>>(&self, edges: I) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n());
        for (u, v) in edges {
            debug_assert!(self.has_edge(u, v));
            g.add_edge(u, v);
        }
        g
    }

    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n() <= other.n() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Image under the vertex map `perm` (old index to new index).
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Drops isolated vertices; returns the compacted graph and the kept
    /// original indices.
    pub fn without_isolated(&self) -> (SimpleGraph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| self.degree(v) > 0).collect();
        (self.induced(&keep), keep)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.n() {
            let _ = writeln!(s, "  {v} [label=\"{}\"];", self.label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }

    /// Plain edge list, one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Parses an edge list. Blank lines and `#` comments are ignored; the
    /// vertex count is one more than the largest index unless `n` is given.
    pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<SimpleGraph> {
        let mut edges = Vec::new();
        let mut max = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 1)));
            }
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad vertex `{t}`", lineno + 1)))
            };
            let (u, v) = (parse(parts[0])?, parse(parts[1])?);
            max = Some(max.unwrap_or(0).max(u).max(v));
            edges.push((u, v));
        }
        let n = n.unwrap_or(max.map_or(0, |m| m + 1));
        SimpleGraph::from_edges(n, edges)
    }
}

pub mod named {
    //! Small standard graphs.
    use super::SimpleGraph;

    pub fn complete(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        assert!(n >= 3);
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
        SimpleGraph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// Complete multipartite graph with the given part sizes, parts consecutive.
    pub fn complete_multipartite(parts: &[usize]) -> SimpleGraph {
        let mut part_of = Vec::new();
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, p));
        }
        let n = part_of.len();
        let part_of = &part_of;
        SimpleGraph::from_edges(
            n,
            (0..n).flat_map(|u| (u + 1..n).filter(move |&v| part_of[u] != part_of[v]).map(move |v| (u, v))),
        )
        .unwrap()
    }
}

/// Directed multigraph whose arcs carry a color (generator index).
/// Loops and parallel arcs are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorDigraph {
    pub vertex_count: usize,
    pub color_count: usize,
    /// `(source, target, color)`
    pub arcs: Vec<(usize, usize, usize)>,
    pub labels: Option<Vec<String>>,
}

impl ColorDigraph {
    /// Both orientations of every edge, all with color 0.
    pub fn symmetric(g: &SimpleGraph) -> Self {
        let arcs = g
            .edges()
            .flat_map(|(u, v)| [(u, v, 0), (v, u, 0)])
            .collect();
        ColorDigraph {
            vertex_count: g.n(),
            color_count: 1,
            arcs,
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn loop_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.0 == a.1).count()
    }

    /// Arc multiset in canonical (sorted) order.
    pub fn sorted_arcs(&self) -> Vec<(usize, usize, usize)> {
        let mut a = self.arcs.clone();
        a.sort_unstable();
        a
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n");
        for v in 0..self.vertex_count {
            let label = self.labels.as_ref().map_or_else(|| v.to_string(), |l| l[v].clone());
            let _ = writeln!(s, "  {v} [label=\"{label}\"];");
        }
        for &(u, v, c) in &self.arcs {
            let _ = writeln!(s, "  {u} -> {v} [color={c}, label=\"{c}\"];");
        }
        s.push_str("}\n");
        s
    }
}
