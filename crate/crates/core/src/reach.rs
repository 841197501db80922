//! Reachability under partial orientations and the polynomial-time
//! solution check.

use std::collections::{BTreeSet, VecDeque};

use crate::error::GraphError;
use crate::graph::{EdgeId, EdgeState, Instance, MixedGraph, Orientation, VertexId};

#[derive(Clone, Copy, Debug)]
struct Incidence {
    edge: EdgeId,
    other: VertexId,
    /// The vertex owning this entry is the edge's first stored endpoint.
    is_first: bool,
}

/// Adjacency lists for repeated traversals of one graph.
#[derive(Clone, Debug)]
pub struct Adjacency {
    out_arcs: Vec<Vec<VertexId>>,
    incident: Vec<Vec<Incidence>>,
}

impl Adjacency {
    pub fn new(graph: &MixedGraph) -> Self {
        let n = graph.num_vertices();
        let mut out_arcs = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for &(t, h) in graph.arcs() {
            out_arcs[t.0].push(h);
        }
        for (i, &(u, w)) in graph.edges().iter().enumerate() {
            let edge = EdgeId(i);
            incident[u.0].push(Incidence {
                edge,
                other: w,
                is_first: true,
            });
            incident[w.0].push(Incidence {
                edge,
                other: u,
                is_first: false,
            });
        }
        Adjacency { out_arcs, incident }
    }

    pub fn num_vertices(&self) -> usize {
        self.out_arcs.len()
    }

    /// Breadth-first sweep from `start`. Marks visited vertices in `seen`
    /// (cleared first) and returns early once `stop_at` is reached.
    pub fn sweep(
        &self,
        states: &[EdgeState],
        start: VertexId,
        relaxed: bool,
        stop_at: Option<VertexId>,
        seen: &mut Vec<bool>,
    ) -> bool {
        seen.clear();
        seen.resize(self.num_vertices(), false);
        let mut queue = VecDeque::new();
        seen[start.0] = true;
        queue.push_back(start);
        if stop_at == Some(start) {
            return true;
        }
        while let Some(v) = queue.pop_front() {
            let arcs = self.out_arcs[v.0].iter().copied();
            let edges = self.incident[v.0].iter().filter_map(|inc| {
                let usable = match states[inc.edge.0] {
                    EdgeState::Unset => relaxed,
                    EdgeState::Forward => inc.is_first,
                    EdgeState::Reverse => !inc.is_first,
                };
                usable.then_some(inc.other)
            });
            for w in arcs.chain(edges) {
                if !seen[w.0] {
                    if stop_at == Some(w) {
                        seen[w.0] = true;
                        return true;
                    }
                    seen[w.0] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    pub fn reaches(
        &self,
        states: &[EdgeState],
        source: VertexId,
        target: VertexId,
        relaxed: bool,
        scratch: &mut Vec<bool>,
    ) -> bool {
        self.sweep(states, source, relaxed, Some(target), scratch)
    }
}

/// Vertices reachable from `start` using every arc, every oriented edge in its
/// assigned direction and, when `relaxed` is set, unset edges both ways.
pub fn reachable_set(
    graph: &MixedGraph,
    orientation: &Orientation,
    start: VertexId,
    relaxed: bool,
) -> Result<BTreeSet<VertexId>, GraphError> {
    graph.check_vertex(start)?;
    orientation.check_len(graph)?;
    let adj = Adjacency::new(graph);
    let mut seen = Vec::new();
    adj.sweep(orientation.states(), start, relaxed, None, &mut seen);
    Ok(seen
        .iter()
        .enumerate()
        .filter(|(_, s)| **s)
        .map(|(i, _)| VertexId(i))
        .collect())
}

/// Checks a total orientation against every terminal pair, one sweep per pair.
pub fn verify_orientation(instance: &Instance, orientation: &Orientation) -> Result<bool, GraphError> {
    let adj = Adjacency::new(instance.graph());
    verify_with(&adj, instance, orientation)
}

pub(crate) fn verify_with(
    adj: &Adjacency,
    instance: &Instance,
    orientation: &Orientation,
) -> Result<bool, GraphError> {
    orientation.check_len(instance.graph())?;
    if let Some(e) = orientation.first_unset() {
        return Err(GraphError::NotTotal(e));
    }
    let mut scratch = Vec::new();
    Ok(instance
        .pairs()
        .iter()
        .all(|p| adj.reaches(orientation.states(), p.source, p.target, false, &mut scratch)))
}

/// Indices of pairs that are connected under `orientation` (unset edges ignored).
pub fn connected_pairs(instance: &Instance, orientation: &Orientation) -> Result<Vec<usize>, GraphError> {
    orientation.check_len(instance.graph())?;
    let adj = Adjacency::new(instance.graph());
    let mut scratch = Vec::new();
    Ok(instance
        .pairs()
        .iter()
        .enumerate()
        .filter(|(_, p)| adj.reaches(orientation.states(), p.source, p.target, false, &mut scratch))
        .map(|(i, _)| i)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::build_flip;
    use crate::graph::TerminalPair;

    fn ids(g: &MixedGraph, labels: &[&str]) -> BTreeSet<VertexId> {
        labels.iter().map(|l| g.find_label(l).unwrap()).collect()
    }

    #[test]
    fn isolated_vertex_reaches_itself() {
        let g = MixedGraph::with_vertices(1);
        let r = reachable_set(&g, &Orientation::unset(0), VertexId(0), true).unwrap();
        assert_eq!(r, BTreeSet::from([VertexId(0)]));
    }

    #[test]
    fn flip_relaxed_reach_from_s1() {
        let flip = build_flip();
        let g = &flip.graph;
        let s1 = g.find_label("s1").unwrap();
        let r = reachable_set(g, &Orientation::unset(2), s1, true).unwrap();
        assert_eq!(r, ids(g, &["s1", "ul", "ll", "ur", "lr", "t1", "t2"]));
    }

    #[test]
    fn flip_both_left_from_s1() {
        let flip = build_flip();
        let g = &flip.graph;
        let s1 = g.find_label("s1").unwrap();
        let o = Orientation::from_states(vec![EdgeState::Reverse, EdgeState::Reverse]);
        let r = reachable_set(g, &o, s1, false).unwrap();
        assert_eq!(r, ids(g, &["s1", "ul", "ll", "t2"]));
    }

    #[test]
    fn unset_edges_ignored_when_not_relaxed() {
        let mut g = MixedGraph::with_vertices(2);
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        let r = reachable_set(&g, &Orientation::unset(1), VertexId(0), false).unwrap();
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn reach_errors() {
        let g = MixedGraph::with_vertices(2);
        assert_eq!(
            reachable_set(&g, &Orientation::unset(0), VertexId(3), true),
            Err(GraphError::UnknownVertex(VertexId(3)))
        );
        assert_eq!(
            reachable_set(&g, &Orientation::unset(1), VertexId(0), true),
            Err(GraphError::OrientationLength { expected: 0, found: 1 })
        );
    }

    #[test]
    fn verify_flip_orientations() {
        let inst = build_flip().instance();
        use EdgeState::*;
        // edges are stored left-to-right: top (ul,ur), bottom (ll,lr)
        let opposing = Orientation::from_states(vec![Forward, Reverse]);
        assert!(verify_orientation(&inst, &opposing).unwrap());
        let both_right = Orientation::from_states(vec![Forward, Forward]);
        assert!(!verify_orientation(&inst, &both_right).unwrap());
        assert_eq!(
            verify_orientation(&inst, &Orientation::unset(2)),
            Err(GraphError::NotTotal(EdgeId(0)))
        );
    }

    #[test]
    fn empty_pair_list_is_vacuously_solved() {
        let mut g = MixedGraph::with_vertices(3);
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        let inst = Instance::new(g, vec![]).unwrap();
        for mask in 0..2 {
            assert!(verify_orientation(&inst, &Orientation::from_mask(1, mask)).unwrap());
        }
    }

    #[test]
    fn connected_pairs_reports_indices() {
        let mut g = MixedGraph::with_vertices(3);
        g.add_arc(VertexId(0), VertexId(1)).unwrap();
        let inst = Instance::new(
            g,
            vec![
                TerminalPair::new(VertexId(0), VertexId(1)),
                TerminalPair::new(VertexId(1), VertexId(2)),
            ],
        )
        .unwrap();
        assert_eq!(connected_pairs(&inst, &Orientation::unset(0)).unwrap(), vec![0]);
    }
}
