//! Graph products and checks of how the Cayley construction commutes with
//! products of semigroups.
//!
//! Vertex `(u, v)` of any product is indexed `u * |V(right)| + v`, the same
//! convention as [`crate::algebra::direct_product`], so identities can be
//! checked as equalities rather than isomorphisms.

use serde::Serialize;

use crate::algebra::{direct_product, GeneratingSet, MulTable};
use crate::cayley::{cayley_color_graph, cayley_graph};
use crate::error::{Error, Result};
use crate::graph::{ColorDigraph, SimpleGraph};

/// Tensor product of color digraphs. One arc per pair of arcs; loops take
/// part, so a looped factor behaves like an identity.
pub fn cross_product(x: &ColorDigraph, y: &ColorDigraph) -> ColorDigraph {
    let ny = y.vertex_count;
    let arcs = x
        .arcs
        .iter()
        .flat_map(|&(u1, v1, c1)| {
            y.arcs
                .iter()
                .map(move |&(u2, v2, c2)| (u1 * ny + u2, v1 * ny + v2, c1 * y.color_count + c2))
        })
        .collect();
    ColorDigraph {
        vertex_count: x.vertex_count * ny,
        color_count: x.color_count * y.color_count,
        arcs,
        labels: None,
    }
}

/// `X[Y]`: `(u1,u2) ~ (v1,v2)` iff `u1 ~ v1`, or `u1 = v1` and `u2 ~ v2`.
pub fn lexicographic(x: &SimpleGraph, y: &SimpleGraph) -> SimpleGraph {
    let ny = y.n();
    let mut g = SimpleGraph::empty(x.n() * ny);
    for (u1, v1) in x.edges() {
        for a in 0..ny {
            for b in 0..ny {
                g.add_edge(u1 * ny + a, v1 * ny + b);
            }
        }
    }
    for u in 0..x.n() {
        for (a, b) in y.edges() {
            g.add_edge(u * ny + a, u * ny + b);
        }
    }
    g
}

/// `X[K̄_r]`: each vertex becomes `r` independent copies and each edge a
/// complete bipartite `K_{r,r}`.
pub fn blowup(x: &SimpleGraph, r: usize) -> Result<SimpleGraph> {
    if r == 0 {
        return Err(Error::InvalidParameter("blow-up factor must be >= 1".into()));
    }
    Ok(lexicographic(x, &SimpleGraph::empty(r)))
}

/// Cartesian product `X □ Y`.
pub fn box_product(x: &SimpleGraph, y: &SimpleGraph) -> SimpleGraph {
    let ny = y.n();
    let mut g = SimpleGraph::empty(x.n() * ny);
    for (u, v) in x.edges() {
        for a in 0..ny {
            g.add_edge(u * ny + a, v * ny + a);
        }
    }
    for u in 0..x.n() {
        for (a, b) in y.edges() {
            g.add_edge(u * ny + a, u * ny + b);
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductKind {
    Cross,
    Lexicographic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Discrepancy {
    /// An arc present on one side only; `in_product` tells which.
    Arc { arc: (usize, usize, usize), in_product: bool },
    /// An edge present on one side only; `in_product` tells which.
    Edge { edge: (usize, usize), in_product: bool },
    VertexCount { cayley: usize, product: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductWitness {
    pub kind: ProductKind,
    pub left_order: usize,
    pub right_order: usize,
    /// Vertex map from the product graph to the Cayley graph; the identity
    /// whenever the identity holds, since indexing is canonical.
    pub mapping: Option<Vec<usize>>,
    pub counterexample: Option<Discrepancy>,
    /// Whether `tT = T` for every `t` in the right factor (lexicographic case).
    pub right_ideals_full: Option<bool>,
}

impl ProductWitness {
    pub fn holds(&self) -> bool {
        self.mapping.is_some()
    }
}

fn first_difference<T: Ord + Copy>(product: &[T], cayley: &[T]) -> Option<(T, bool)> {
    let (mut i, mut j) = (0, 0);
    while i < product.len() || j < cayley.len() {
        match (product.get(i), cayley.get(j)) {
            (Some(a), Some(b)) if a == b => {
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => return Some((*a, true)),
            (Some(_), Some(b)) => return Some((*b, false)),
            (Some(a), None) => return Some((*a, true)),
            (None, Some(b)) => return Some((*b, false)),
            (None, None) => unreachable!(),
        }
    }
    None
}

/// `Cay(S×T, C×D)` against `Cay(S,C) × Cay(T,D)`, compared arc for arc
/// (with multiplicity and loops).
pub fn verify_cross_identity(s: &MulTable, cs: &GeneratingSet, t: &MulTable, dt: &GeneratingSet) -> ProductWitness {
    let st = direct_product(s, t);
    let direct = cayley_color_graph(&st, &cs.product(dt, t.order()));
    let product = cross_product(&cayley_color_graph(s, cs), &cayley_color_graph(t, dt));
    let counterexample = if direct.vertex_count != product.vertex_count {
        Some(Discrepancy::VertexCount {
            cayley: direct.vertex_count,
            product: product.vertex_count,
        })
    } else {
        first_difference(&product.sorted_arcs(), &direct.sorted_arcs())
            .map(|(arc, in_product)| Discrepancy::Arc { arc, in_product })
    };
    ProductWitness {
        kind: ProductKind::Cross,
        left_order: s.order(),
        right_order: t.order(),
        mapping: counterexample.is_none().then(|| (0..st.order()).collect()),
        counterexample,
        right_ideals_full: None,
    }
}

/// `Cay(S×T, (C×T) ∪ ({1_S}×D))` against `Cay(S,C)[Cay(T,D)]`.
pub fn verify_lex_identity(
    s: &MulTable,
    cs: &GeneratingSet,
    t: &MulTable,
    dt: &GeneratingSet,
) -> Result<ProductWitness> {
    let one = s
        .identity()
        .ok_or_else(|| Error::InvalidParameter("left factor must be a monoid".into()))?;
    let nt = t.order();
    let st = direct_product(s, t);
    let gens = GeneratingSet::new(
        &st,
        cs.product(&GeneratingSet::all(t), nt)
            .elements()
            .chain(dt.elements().map(|d| one * nt + d)),
    )?;
    let direct = cayley_graph(&st, &gens);
    let product = lexicographic(&cayley_graph(s, cs), &cayley_graph(t, dt));
    let p: Vec<_> = product.edges().collect();
    let d: Vec<_> = direct.edges().collect();
    let counterexample = first_difference(&p, &d).map(|(edge, in_product)| Discrepancy::Edge { edge, in_product });
    Ok(ProductWitness {
        kind: ProductKind::Lexicographic,
        left_order: s.order(),
        right_order: nt,
        mapping: counterexample.is_none().then(|| (0..st.order()).collect()),
        counterexample,
        right_ideals_full: Some(t.every_principal_right_ideal_full()),
    })
}
