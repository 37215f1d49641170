//! Cayley color graphs under the right action, and their suppression to
//! simple graphs.

use crate::algebra::{GeneratingSet, MulTable};
use crate::graph::{ColorDigraph, SimpleGraph};

/// One arc `x -> x*c` per element `x` and generator `c`. The color of an
/// arc is the position of its generator in `c` (sorted order).
pub fn cayley_color_graph(s: &MulTable, c: &GeneratingSet) -> ColorDigraph {
    let gens = c.to_vec();
    let arcs = (0..s.order())
        .flat_map(|x| gens.iter().enumerate().map(move |(color, &g)| (x, s.mul(x, g), color)))
        .collect();
    ColorDigraph {
        vertex_count: s.order(),
        color_count: gens.len(),
        arcs,
        labels: Some(s.names().to_vec()),
    }
}

/// Forget directions and colors, drop loops and parallel edges.
pub fn suppress(d: &ColorDigraph) -> SimpleGraph {
    let mut g = SimpleGraph::empty(d.vertex_count);
    for &(u, v, _) in &d.arcs {
        if u != v {
            g.add_edge(u, v);
        }
    }
    match &d.labels {
        Some(l) => g.with_labels(l.clone()),
        None => g,
    }
}

/// The simple Cayley graph `Cay(S, C)`.
pub fn cayley_graph(s: &MulTable, c: &GeneratingSet) -> SimpleGraph {
    suppress(&cayley_color_graph(s, c))
}
