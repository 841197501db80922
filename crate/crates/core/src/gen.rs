//! Random mixed-graph instances for testing and benchmarking.

use rand::Rng;

use crate::graph::{Instance, MixedGraph, TerminalPair, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub vertices: usize,
    pub arcs: usize,
    pub edges: usize,
    pub pairs: usize,
}

/// Uniformly random arcs, edges and pairs; parallel arcs and edges are
/// allowed, loops and degenerate pairs are not. Needs at least two vertices.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, params: GenParams) -> Instance {
    let n = params.vertices;
    assert!(n >= 2, "random instances need two vertices");
    let distinct = |rng: &mut R| {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        (VertexId(a), VertexId(b))
    };
    let mut g = MixedGraph::with_vertices(n);
    for _ in 0..params.arcs {
        let (a, b) = distinct(rng);
        g.add_arc(a, b).expect("vertex in range");
    }
    for _ in 0..params.edges {
        let (a, b) = distinct(rng);
        g.add_edge(a, b).expect("endpoints differ");
    }
    let pairs = (0..params.pairs)
        .map(|_| {
            let (s, t) = distinct(rng);
            TerminalPair::new(s, t)
        })
        .collect();
    Instance::new(g, pairs).expect("generated pairs are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sizes_and_determinism() {
        let p = GenParams {
            vertices: 7,
            arcs: 5,
            edges: 9,
            pairs: 3,
        };
        let a = random_instance(&mut ChaCha8Rng::seed_from_u64(3), p);
        let b = random_instance(&mut ChaCha8Rng::seed_from_u64(3), p);
        assert_eq!(a, b);
        assert_eq!(a.graph().num_vertices(), 7);
        assert_eq!(a.graph().num_arcs(), 5);
        assert_eq!(a.num_edges(), 9);
        assert_eq!(a.pairs().len(), 3);
    }
}
