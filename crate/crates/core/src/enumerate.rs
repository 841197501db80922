//! Exhaustive orientation enumeration, the reference oracle for the solver
//! and for gadget behavior checks.
//!
//! Every total orientation is materialized as a plain directed graph and
//! checked with a depth-first search of its own. Nothing here is shared with
//! the solver's pruning or propagation.

use crate::error::EnumerateError;
use crate::graph::{EdgeState, Instance, Orientation};

/// Hard limit on the number of undirected edges for a `2^m` scan.
pub const MAX_ENUMERATION_EDGES: usize = 24;

fn directed_adjacency(instance: &Instance, orientation: &Orientation) -> Vec<Vec<usize>> {
    let g = instance.graph();
    let mut adj = vec![Vec::new(); g.num_vertices()];
    for &(t, h) in g.arcs() {
        adj[t.0].push(h.0);
    }
    for (&(u, w), state) in g.edges().iter().zip(orientation.states()) {
        match state {
            EdgeState::Forward => adj[u.0].push(w.0),
            EdgeState::Reverse => adj[w.0].push(u.0),
            EdgeState::Unset => unreachable!("enumerated orientations are total"),
        }
    }
    adj
}

fn dfs_connects(adj: &[Vec<usize>], s: usize, t: usize) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(v) = stack.pop() {
        if v == t {
            return true;
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Independent solution check for one total orientation.
pub fn oracle_accepts(instance: &Instance, orientation: &Orientation) -> bool {
    let adj = directed_adjacency(instance, orientation);
    instance
        .pairs()
        .iter()
        .all(|p| dfs_connects(&adj, p.source.0, p.target.0))
}

/// All solving total orientations that extend `partial` (every orientation
/// when `partial` is `None`), in increasing mask order where bit `i` set
/// means edge `i` is `Forward`.
pub fn valid_orientations(
    instance: &Instance,
    partial: Option<&Orientation>,
    cap: usize,
) -> Result<Vec<Orientation>, EnumerateError> {
    let m = instance.num_edges();
    if m > MAX_ENUMERATION_EDGES {
        return Err(EnumerateError::EdgeLimit {
            limit: MAX_ENUMERATION_EDGES,
            found: m,
        });
    }
    let mut out = Vec::new();
    for mask in 0u64..1 << m {
        let o = Orientation::from_mask(m, mask);
        if partial.is_some_and(|p| !p.is_extended_by(&o)) {
            continue;
        }
        if oracle_accepts(instance, &o) {
            if out.len() == cap {
                return Err(EnumerateError::CapExceeded { cap });
            }
            out.push(o);
        }
    }
    Ok(out)
}

/// Number of total orientations that connect every terminal pair.
pub fn enumerate_valid(instance: &Instance, cap: usize) -> Result<usize, EnumerateError> {
    valid_orientations(instance, None, cap).map(|v| v.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{build_edge_gadget, build_flip, build_variable};
    use crate::graph::{MixedGraph, VertexId};

    #[test]
    fn flip_has_two_of_four() {
        let inst = build_flip().instance();
        assert_eq!(enumerate_valid(&inst, 16).unwrap(), 2);
        for o in valid_orientations(&inst, None, 16).unwrap() {
            assert_ne!(o.states()[0], o.states()[1]);
        }
    }

    #[test]
    fn variable_3_2_has_two() {
        let inst = build_variable(3, 2).unwrap().instance();
        assert_eq!(enumerate_valid(&inst, 64).unwrap(), 2);
    }

    #[test]
    fn edge_gadget_has_two_of_eight() {
        let inst = build_edge_gadget().instance();
        let sols = valid_orientations(&inst, None, 8).unwrap();
        assert_eq!(sols.len(), 2);
        for o in sols {
            let s = o.states();
            // ports a, b parallel; middle m antiparallel to both
            assert_eq!(s[0], s[2]);
            assert_ne!(s[0], s[1]);
        }
    }

    #[test]
    fn cap_and_limit() {
        let inst = build_flip().instance();
        assert_eq!(enumerate_valid(&inst, 1), Err(EnumerateError::CapExceeded { cap: 1 }));
        let mut g = MixedGraph::with_vertices(2);
        for _ in 0..25 {
            g.add_edge(VertexId(0), VertexId(1)).unwrap();
        }
        let inst = Instance::new(g, vec![]).unwrap();
        assert_eq!(
            enumerate_valid(&inst, 1),
            Err(EnumerateError::EdgeLimit { limit: 24, found: 25 })
        );
    }

    #[test]
    fn restriction_to_extensions() {
        let inst = build_flip().instance();
        let mut p = Orientation::unset(2);
        p.set(crate::graph::EdgeId(0), EdgeState::Forward);
        let sols = valid_orientations(&inst, Some(&p), 4).unwrap();
        assert_eq!(sols, vec![Orientation::from_states(vec![EdgeState::Forward, EdgeState::Reverse])]);
    }
}
