//! Structural check that terminals are pure sources and pure sinks.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{Instance, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TerminalRole {
    Source,
    Target,
}

/// A terminal with a possible wrong-way incidence. `arcs` counts arcs entering
/// a source (leaving a target); `edges` counts incident undirected edges, each
/// of which some orientation turns the wrong way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: VertexId,
    pub role: TerminalRole,
    pub arcs: usize,
    pub edges: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.role {
            TerminalRole::Source => "source has indegree",
            TerminalRole::Target => "target has outdegree",
        };
        write!(
            f,
            "vertex {}: {} {} ({} arcs, {} undirected edges)",
            self.vertex,
            what,
            self.arcs + self.edges,
            self.arcs,
            self.edges
        )
    }
}

/// Empty iff every source has indegree zero and every target outdegree zero,
/// counting undirected incidences against both. One entry per (vertex, role).
pub fn check_source_sink_property(instance: &Instance) -> Vec<Violation> {
    let g = instance.graph();
    let n = g.num_vertices();
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    let mut undirected = vec![0usize; n];
    for &(t, h) in g.arcs() {
        outdeg[t.0] += 1;
        indeg[h.0] += 1;
    }
    for &(u, w) in g.edges() {
        undirected[u.0] += 1;
        undirected[w.0] += 1;
    }

    let mut roles = BTreeMap::new();
    for p in instance.pairs() {
        roles.insert((p.source, TerminalRole::Source), ());
        roles.insert((p.target, TerminalRole::Target), ());
    }
    roles
        .into_keys()
        .filter_map(|(v, role)| {
            let arcs = match role {
                TerminalRole::Source => indeg[v.0],
                TerminalRole::Target => outdeg[v.0],
            };
            let edges = undirected[v.0];
            (arcs + edges > 0).then_some(Violation {
                vertex: v,
                role,
                arcs,
                edges,
            })
        })
        .collect()
}
