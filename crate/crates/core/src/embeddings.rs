//! Explicit torus embeddings of the small right-group Cayley graphs, and a
//! stored genus-3 embedding of `Cay(Z6 x R2, {2,3} x R2)`.
//!
//! All graphs use the canonical indexing of `G x R_r`: element `(g, i)` is
//! vertex `g * r + i`.

use crate::algebra::{direct_product, make_cyclic, make_right_zero, GeneratingSet};
use crate::cayley::cayley_graph;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::topology::{face_trace, heuristic_upper, EmbeddingCertificate, RotationSystem};

/// Seed and effort with which `heuristic_upper` produced the stored
/// triple-torus certificate.
pub const TRIPLE_TORUS_SEED: u64 = 0;
pub const TRIPLE_TORUS_EFFORT: u64 = 4_000_000;

const TRIPLE_TORUS_FIXTURE: &str = include_str!("../fixtures/z6r2_genus3.rot");

/// `Cay(Z_n x R_r, {1} x R_r)`, i.e. `C_n[K̄_r]` (or `K_{r,r}` when n = 2).
pub fn cyclic_right_group_graph(n: usize, r: usize) -> Result<SimpleGraph> {
    let z = make_cyclic(n)?;
    let rz = make_right_zero(r)?;
    let s = direct_product(&z, &rz);
    let c = GeneratingSet::new(&z, [1 % n])?.product(&GeneratingSet::all(&rz), r);
    Ok(cayley_graph(&s, &c))
}

/// The square grid `C_n x C_4` drawn on the torus: each vertex `(g, i)` of
/// `Cay(Z_n x R_2, {1} x R_2)` sees its four neighbors `(g +- 1, j)` in an
/// order alternating between the two levels.
pub fn torus_square_grid(n: usize) -> Result<EmbeddingCertificate> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("square grid needs n >= 4, got {n}")));
    }
    let v = |g: usize, i: usize| 2 * (g % n) + i;
    let mut rot = Vec::with_capacity(2 * n);
    for g in 0..n {
        let (prev, next) = (g + n - 1, g + 1);
        rot.push(vec![v(prev, 0), v(prev, 1), v(next, 0), v(next, 1)]);
        rot.push(vec![v(prev, 0), v(next, 1), v(next, 0), v(prev, 1)]);
    }
    face_trace(&cyclic_right_group_graph(n, 2)?, &RotationSystem::new(rot))
}

/// `K_{3,3,3} = Cay(Z_3 x R_3, {1} x R_3)` as a triangulation of the torus.
pub fn torus_triangular_grid_z3r3() -> Result<EmbeddingCertificate> {
    let v = |g: usize, i: usize| 3 * (g % 3) + i % 3;
    let rot = (0..9)
        .map(|x| {
            let (g, i) = (x / 3, x % 3);
            let (up, down) = (g + 1, g + 2);
            vec![v(up, i), v(down, i), v(up, i + 1), v(down, i + 2), v(up, i + 2), v(down, i + 1)]
        })
        .collect();
    face_trace(&cyclic_right_group_graph(3, 3)?, &RotationSystem::new(rot))
}

/// `K_{r,r}` on the torus for r = 3 (three hexagons) or r = 4 (eight
/// quadrilaterals). Parts are `0..r` and `r..2r`, which is also
/// `Cay(Z_2 x R_r, {1} x R_r)`.
pub fn torus_krr(r: usize) -> Result<EmbeddingCertificate> {
    let offsets: &[usize] = match r {
        3 => &[0, 1, 2],
        4 => &[0, 1, 3, 2],
        _ => return Err(Error::InvalidParameter(format!("K_{{r,r}} is toroidal only for r in {{3, 4}}, got {r}"))),
    };
    let rot = (0..2 * r)
        .map(|x| {
            let (side, i) = (x / r, x % r);
            let other = (1 - side) * r;
            offsets
                .iter()
                .map(|&k| {
                    let j = if r == 3 { i + k } else { k + r - i };
                    other + j % r
                })
                .collect()
        })
        .collect();
    face_trace(&cyclic_right_group_graph(2, r)?, &RotationSystem::new(rot))
}

/// `Cay(Z_6 x R_2, {2,3} x R_2)` in the canonical indexing.
pub fn triple_torus_graph() -> SimpleGraph {
    let z = make_cyclic(6).unwrap();
    let rz = make_right_zero(2).unwrap();
    let c = GeneratingSet::new(&z, [2, 3]).unwrap().product(&GeneratingSet::all(&rz), 2);
    cayley_graph(&direct_product(&z, &rz), &c)
}

/// The stored genus-3 certificate for `Cay(Z_6 x R_2, {2,3} x R_2)`. The
/// fixture is re-traced on load and rejected unless it embeds exactly that
/// graph.
pub fn triple_torus_example() -> Result<EmbeddingCertificate> {
    let cert = EmbeddingCertificate::from_text(TRIPLE_TORUS_FIXTURE)?;
    if cert.graph != triple_torus_graph() {
        return Err(Error::Certificate("fixture does not embed Cay(Z6 x R2, {2,3} x R2)".into()));
    }
    Ok(cert)
}

/// Reruns the seeded search that produced the fixture. Fails rather than
/// returning a worse certificate when the search stays above genus 3.
pub fn regenerate_triple_torus(effort: u64, seed: u64) -> Result<EmbeddingCertificate> {
    let cert = heuristic_upper(&triple_torus_graph(), effort, seed);
    if cert.genus > 3 {
        return Err(Error::Certificate(format!(
            "search reached genus {} only (effort {effort}, seed {seed})",
            cert.genus
        )));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::iso::find_isomorphism;
    use crate::products::{blowup, box_product};
    use crate::topology::{is_planar, Pattern};

    fn assert_torus(c: &EmbeddingCertificate, n: usize, m: usize, face_len: usize) {
        c.revalidate().unwrap();
        assert_eq!((c.n(), c.m(), c.genus), (n, m, 1));
        assert!(c.face_lengths().iter().all(|&l| l == face_len), "{:?}", c.face_lengths());
        assert_eq!(n + c.face_count(), m);
    }

    #[test]
    fn square_grids() {
        for n in 4..=10 {
            let c = torus_square_grid(n).unwrap();
            assert_torus(&c, 2 * n, 4 * n, 4);
            assert_eq!(c.face_count(), 2 * n);
            assert_eq!(c.graph, blowup(&named::cycle(n), 2).unwrap());
        }
        assert!(torus_square_grid(3).is_err());
    }

    #[test]
    fn square_grid_four_is_k44() {
        let c = torus_square_grid(4).unwrap();
        assert!(find_isomorphism(&c.graph, &named::complete_bipartite(4, 4)).unwrap().is_some());
        // {0, 0', 2} and {1, 1', 3} induce a K_{3,3}
        let side_a = [0, 1, 4];
        let side_b = [2, 3, 6];
        assert!(side_a.iter().all(|&a| side_b.iter().all(|&b| c.graph.has_edge(a, b))));
    }

    #[test]
    fn triangular_grid() {
        let c = torus_triangular_grid_z3r3().unwrap();
        assert_torus(&c, 9, 27, 3);
        assert_eq!(c.face_count(), 18);
        let w = is_planar(&c.graph);
        assert!(!w.is_planar());
        assert!(matches!(w.witness().unwrap().pattern, Pattern::K33 | Pattern::K5));
    }

    #[test]
    fn complete_bipartite_tori() {
        let c3 = torus_krr(3).unwrap();
        assert_torus(&c3, 6, 9, 6);
        assert_eq!(c3.graph, named::complete_bipartite(3, 3));
        let c4 = torus_krr(4).unwrap();
        assert_torus(&c4, 8, 16, 4);
        assert_eq!(c4.graph, named::complete_bipartite(4, 4));
        assert!(torus_krr(5).is_err());
        assert!(torus_krr(2).is_err());
    }

    #[test]
    fn triple_torus_fixture() {
        let c = triple_torus_example().unwrap();
        assert_eq!((c.n(), c.m(), c.genus, c.face_count()), (12, 36, 3, 20));
        let prism = box_product(&named::cycle(3), &named::complete(2));
        assert!(find_isomorphism(&c.graph, &blowup(&prism, 2).unwrap()).unwrap().is_some());
        assert!((0..12).all(|v| c.graph.degree(v) == 6));
    }

    #[test]
    fn tampered_fixture_rejected() {
        let text = TRIPLE_TORUS_FIXTURE.replace("genus 3", "genus 2");
        assert!(matches!(EmbeddingCertificate::from_text(&text), Err(Error::Certificate(_))));
    }
}
