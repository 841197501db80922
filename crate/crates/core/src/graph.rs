//! Mixed graphs, terminal pairs and (partial) orientations.

use std::fmt;

use crate::error::GraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Stable identifier of an undirected edge. Ids are dense, `0..num_edges()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Vertex {
    pub label: Option<String>,
    pub pos: Option<Point>,
}

/// A graph with directed arcs and undirected edges over a shared vertex set.
///
/// Undirected edges keep the order of their endpoints: orienting an edge
/// [`EdgeState::Forward`] directs it from the first stored endpoint to the
/// second. Parallel and antiparallel arcs are kept as distinct entries.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MixedGraph {
    vertices: Vec<Vertex>,
    arcs: Vec<(VertexId, VertexId)>,
    edges: Vec<(VertexId, VertexId)>,
}

impl MixedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        MixedGraph {
            vertices: vec![Vertex::default(); n],
            ..Self::default()
        }
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.push_vertex(Vertex::default())
    }

    pub fn push_vertex(&mut self, vertex: Vertex) -> VertexId {
        self.vertices.push(vertex);
        VertexId(self.vertices.len() - 1)
    }

    pub fn add_labeled_vertex(&mut self, label: impl Into<String>, pos: Option<Point>) -> VertexId {
        self.push_vertex(Vertex {
            label: Some(label.into()),
            pos,
        })
    }

    pub fn add_arc(&mut self, tail: VertexId, head: VertexId) -> Result<(), GraphError> {
        self.check_vertex(tail)?;
        self.check_vertex(head)?;
        self.arcs.push((tail, head));
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, w: VertexId) -> Result<EdgeId, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if u == w {
            return Err(GraphError::SelfLoopEdge(u));
        }
        self.edges.push((u, w));
        Ok(EdgeId(self.edges.len() - 1))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.0 < self.vertices.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn vertex_mut(&mut self, v: VertexId) -> &mut Vertex {
        &mut self.vertices[v.0]
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = (VertexId, &Vertex)> {
        self.vertices.iter().enumerate().map(|(i, v)| (VertexId(i), v))
    }

    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    /// Undirected edges indexed by [`EdgeId`].
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    pub fn find_label(&self, label: &str) -> Option<VertexId> {
        self.vertices
            .iter()
            .position(|v| v.label.as_deref() == Some(label))
            .map(VertexId)
    }
}

/// A demand for a directed path from `source` to `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TerminalPair {
    pub source: VertexId,
    pub target: VertexId,
}

impl TerminalPair {
    pub fn new(source: VertexId, target: VertexId) -> Self {
        TerminalPair { source, target }
    }
}

/// One Steiner Orientation problem: a mixed graph and an ordered list of
/// terminal pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    graph: MixedGraph,
    pairs: Vec<TerminalPair>,
}

impl Instance {
    /// Rejects pairs with unknown endpoints and degenerate pairs `s = t`.
    pub fn new(graph: MixedGraph, pairs: Vec<TerminalPair>) -> Result<Self, GraphError> {
        for (i, p) in pairs.iter().enumerate() {
            graph.check_vertex(p.source)?;
            graph.check_vertex(p.target)?;
            if p.source == p.target {
                return Err(GraphError::DegeneratePair {
                    pair: i,
                    vertex: p.source,
                });
            }
        }
        Ok(Instance { graph, pairs })
    }

    pub fn graph(&self) -> &MixedGraph {
        &self.graph
    }

    pub fn pairs(&self) -> &[TerminalPair] {
        &self.pairs
    }

    pub fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }

    pub fn into_parts(self) -> (MixedGraph, Vec<TerminalPair>) {
        (self.graph, self.pairs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum EdgeState {
    #[default]
    Unset,
    /// Directed from the first stored endpoint to the second.
    Forward,
    Reverse,
}

impl EdgeState {
    pub fn flipped(self) -> EdgeState {
        match self {
            EdgeState::Unset => EdgeState::Unset,
            EdgeState::Forward => EdgeState::Reverse,
            EdgeState::Reverse => EdgeState::Forward,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            EdgeState::Unset => 'U',
            EdgeState::Forward => 'F',
            EdgeState::Reverse => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<EdgeState> {
        match c {
            'U' => Some(EdgeState::Unset),
            'F' => Some(EdgeState::Forward),
            'R' => Some(EdgeState::Reverse),
            _ => None,
        }
    }
}

/// Per-edge orientation state; a total orientation has no `Unset` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation(Vec<EdgeState>);

impl Orientation {
    pub fn unset(num_edges: usize) -> Self {
        Orientation(vec![EdgeState::Unset; num_edges])
    }

    pub fn from_states(states: Vec<EdgeState>) -> Self {
        Orientation(states)
    }

    /// Total orientation where bit `i` of `mask` set means edge `i` is `Forward`.
    pub fn from_mask(num_edges: usize, mask: u64) -> Self {
        Orientation(
            (0..num_edges)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        EdgeState::Forward
                    } else {
                        EdgeState::Reverse
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(|s| *s != EdgeState::Unset)
    }

    pub fn get(&self, e: EdgeId) -> EdgeState {
        self.0[e.0]
    }

    pub fn set(&mut self, e: EdgeId, state: EdgeState) {
        self.0[e.0] = state;
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.0
    }

    pub fn first_unset(&self) -> Option<EdgeId> {
        self.0.iter().position(|s| *s == EdgeState::Unset).map(EdgeId)
    }

    /// True when every assigned entry of `self` agrees with `other`.
    pub fn is_extended_by(&self, other: &Orientation) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(a, b)| *a == EdgeState::Unset || a == b)
    }

    pub(crate) fn check_len(&self, graph: &MixedGraph) -> Result<(), GraphError> {
        if self.len() == graph.num_edges() {
            Ok(())
        } else {
            Err(GraphError::OrientationLength {
                expected: graph.num_edges(),
                found: self.len(),
            })
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_self_loop_rejected() {
        let mut g = MixedGraph::with_vertices(2);
        assert_eq!(
            g.add_edge(VertexId(1), VertexId(1)),
            Err(GraphError::SelfLoopEdge(VertexId(1)))
        );
        assert_eq!(g.add_edge(VertexId(0), VertexId(1)), Ok(EdgeId(0)));
        assert_eq!(g.add_edge(VertexId(1), VertexId(0)), Ok(EdgeId(1)));
    }

    #[test]
    fn unknown_endpoints_rejected() {
        let mut g = MixedGraph::with_vertices(2);
        assert!(matches!(
            g.add_arc(VertexId(0), VertexId(2)),
            Err(GraphError::UnknownVertex(VertexId(2)))
        ));
        assert!(Instance::new(g.clone(), vec![TerminalPair::new(VertexId(5), VertexId(0))]).is_err());
    }

    #[test]
    fn degenerate_pair_rejected() {
        let g = MixedGraph::with_vertices(2);
        let err = Instance::new(g, vec![TerminalPair::new(VertexId(1), VertexId(1))]).unwrap_err();
        assert_eq!(
            err,
            GraphError::DegeneratePair {
                pair: 0,
                vertex: VertexId(1)
            }
        );
    }

    #[test]
    fn antiparallel_arcs_are_distinct() {
        let mut g = MixedGraph::with_vertices(2);
        g.add_arc(VertexId(0), VertexId(1)).unwrap();
        g.add_arc(VertexId(1), VertexId(0)).unwrap();
        g.add_arc(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(g.num_arcs(), 3);
    }

    #[test]
    fn orientation_mask_and_extension() {
        let o = Orientation::from_mask(3, 0b101);
        assert_eq!(o.to_string(), "FRF");
        assert!(o.is_total());
        let mut p = Orientation::unset(3);
        p.set(EdgeId(1), EdgeState::Reverse);
        assert!(p.is_extended_by(&o));
        assert_eq!(p.first_unset(), Some(EdgeId(0)));
        p.set(EdgeId(1), EdgeState::Forward);
        assert!(!p.is_extended_by(&o));
    }
}
