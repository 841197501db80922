//! The four gadget families of the reduction.
//!
//! Horizontal edges are stored left endpoint first, so `Forward` means
//! rightward. Vertical edges (the clause gadget's `f`, `g` and `central`)
//! are stored bottom endpoint first in the unmirrored drawing.

use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, Instance, MixedGraph, Point, TerminalPair, VertexId};
use crate::pm3sat::Side;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    Flip,
    Variable,
    Clause3,
    Clause2,
    Edge,
}

impl GadgetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GadgetKind::Flip => "flip",
            GadgetKind::Variable => "variable",
            GadgetKind::Clause3 => "clause3",
            GadgetKind::Clause2 => "clause2",
            GadgetKind::Edge => "edge",
        }
    }

    pub fn parse(s: &str) -> Option<GadgetKind> {
        Some(match s {
            "flip" => GadgetKind::Flip,
            "variable" => GadgetKind::Variable,
            "clause3" => GadgetKind::Clause3,
            "clause2" => GadgetKind::Clause2,
            "edge" => GadgetKind::Edge,
            _ => return None,
        })
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("variable gadget needs at least one positive and one negative occurrence (got p={p}, n={n})")]
    NoOccurrences { p: usize, n: usize },
}

/// An undirected edge that is shared with a neighboring gadget. `left` and
/// `right` are the geometric endpoints; stitching identifies them pairwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Port {
    pub name: String,
    pub edge: EdgeId,
    pub left: VertexId,
    pub right: VertexId,
}

#[derive(Clone, Debug)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub graph: MixedGraph,
    pub pairs: Vec<TerminalPair>,
    /// Role name of every undirected edge, indexed by edge id.
    pub edge_names: Vec<String>,
    pub ports: Vec<Port>,
}

impl Gadget {
    pub fn instance(&self) -> Instance {
        Instance::new(self.graph.clone(), self.pairs.clone()).expect("gadget pairs are well formed")
    }

    pub fn vertex(&self, label: &str) -> VertexId {
        self.graph
            .find_label(label)
            .unwrap_or_else(|| panic!("{} gadget has no vertex {label}", self.kind))
    }

    pub fn edge(&self, name: &str) -> EdgeId {
        self.edge_names
            .iter()
            .position(|n| n == name)
            .map(EdgeId)
            .unwrap_or_else(|| panic!("{} gadget has no edge {name}", self.kind))
    }

    pub fn port(&self, name: &str) -> &Port {
        self.ports
            .iter()
            .find(|p| p.name == name)
            .unwrap_or_else(|| panic!("{} gadget has no port {name}", self.kind))
    }
}

struct Draft {
    kind: GadgetKind,
    graph: MixedGraph,
    pairs: Vec<TerminalPair>,
    edge_names: Vec<String>,
    ports: Vec<Port>,
    mirror: bool,
}

impl Draft {
    fn new(kind: GadgetKind) -> Self {
        Draft {
            kind,
            graph: MixedGraph::new(),
            pairs: Vec::new(),
            edge_names: Vec::new(),
            ports: Vec::new(),
            mirror: false,
        }
    }

    fn v(&mut self, label: &str, x: f64, y: f64) -> VertexId {
        let y = if self.mirror { -y } else { y };
        self.graph.add_labeled_vertex(label, Some(Point::new(x, y)))
    }

    fn arc(&mut self, tail: VertexId, head: VertexId) {
        self.graph.add_arc(tail, head).expect("draft vertices exist");
    }

    fn edge(&mut self, name: &str, u: VertexId, w: VertexId) -> EdgeId {
        let e = self.graph.add_edge(u, w).expect("draft edge is valid");
        self.edge_names.push(name.to_string());
        e
    }

    fn port(&mut self, name: &str, left: VertexId, right: VertexId) -> EdgeId {
        let edge = self.edge(name, left, right);
        self.ports.push(Port {
            name: name.to_string(),
            edge,
            left,
            right,
        });
        edge
    }

    fn pair(&mut self, s: VertexId, t: VertexId) {
        self.pairs.push(TerminalPair::new(s, t));
    }

    /// Arcs of a flip gadget around the edges `top` (upper) and `bottom`.
    /// `s1` feeds both left endpoints and `t1` drains both right endpoints;
    /// `s2`/`t2` mirror that, so the two pairs need opposite directions.
    fn flip_arcs(&mut self, [s1, t1, s2, t2]: [VertexId; 4], top: [VertexId; 2], bottom: [VertexId; 2]) {
        let [ul, ur] = top;
        let [ll, lr] = bottom;
        self.arc(s1, ul);
        self.arc(s1, ll);
        self.arc(s2, ur);
        self.arc(s2, lr);
        self.arc(ul, t2);
        self.arc(ll, t2);
        self.arc(ur, t1);
        self.arc(lr, t1);
        self.pair(s1, t1);
        self.pair(s2, t2);
    }

    fn finish(self) -> Gadget {
        Gadget {
            kind: self.kind,
            graph: self.graph,
            pairs: self.pairs,
            edge_names: self.edge_names,
            ports: self.ports,
        }
    }
}

/// Two red edges that every solution orients in opposite directions.
pub fn build_flip() -> Gadget {
    let mut d = Draft::new(GadgetKind::Flip);
    let t2 = d.v("t2", 0.0, 0.0);
    let s1 = d.v("s1", 1.0, 0.0);
    let s2 = d.v("s2", 4.0, 0.0);
    let t1 = d.v("t1", 5.0, 0.0);
    let ul = d.v("ul", 1.5, 1.5);
    let ur = d.v("ur", 3.5, 1.5);
    let ll = d.v("ll", 1.5, -1.5);
    let lr = d.v("lr", 3.5, -1.5);
    d.port("top", ul, ur);
    d.port("bottom", ll, lr);
    d.flip_arcs([s1, t1, s2, t2], [ul, ur], [ll, lr]);
    d.finish()
}

const SLOT: f64 = 4.0;

/// Horizontal extent of a variable gadget with `p` top and `n` bottom edges.
pub fn variable_width(p: usize, n: usize) -> f64 {
    3.0 + SLOT * p.max(n) as f64
}

/// Variable gadget with `p` edges on the top chain (`top0..`, left to right)
/// and `n` on the bottom chain (`bot0..`). Consecutive chain edges are joined
/// by antiparallel arc pairs. Chain vertices are labelled `u0..` and `d0..`.
///
/// The two solutions are clockwise (top rightward, bottom leftward), read as
/// true, and counterclockwise, read as false.
pub fn build_variable(p: usize, n: usize) -> Result<Gadget, GadgetError> {
    if p == 0 || n == 0 {
        return Err(GadgetError::NoOccurrences { p, n });
    }
    let mut d = Draft::new(GadgetKind::Variable);
    let inner = SLOT * p.max(n) as f64;
    let t2 = d.v("t2", 0.0, 0.0);
    let s1 = d.v("s1", 1.0, 0.0);
    let s2 = d.v("s2", inner + 2.0, 0.0);
    let t1 = d.v("t1", inner + 3.0, 0.0);

    let chain = |d: &mut Draft, count: usize, prefix: &str, y: f64| -> Vec<VertexId> {
        let slot = inner / count as f64;
        let mut vs = Vec::with_capacity(2 * count);
        for k in 0..count {
            let left = 1.5 + slot * k as f64 + (slot - 2.0) / 2.0;
            vs.push(d.v(&format!("{prefix}{}", 2 * k), left, y));
            vs.push(d.v(&format!("{prefix}{}", 2 * k + 1), left + 2.0, y));
        }
        vs
    };
    let top = chain(&mut d, p, "u", 1.5);
    let bottom = chain(&mut d, n, "d", -1.5);

    for k in 0..p {
        d.port(&format!("top{k}"), top[2 * k], top[2 * k + 1]);
    }
    for k in 0..n {
        d.port(&format!("bot{k}"), bottom[2 * k], bottom[2 * k + 1]);
    }
    let ends = |vs: &[VertexId]| [vs[0], *vs.last().unwrap()];
    let [ul, ur] = ends(&top);
    let [ll, lr] = ends(&bottom);
    d.flip_arcs([s1, t1, s2, t2], [ul, ur], [ll, lr]);
    for vs in [&top, &bottom] {
        for k in 1..vs.len() / 2 {
            let (a, b) = (vs[2 * k - 1], vs[2 * k]);
            d.arc(a, b);
            d.arc(b, a);
        }
    }
    Ok(d.finish())
}

/// Clause gadget for three literals. Ports `x`, `y`, `z` (left to right) sit
/// on the side facing the variables; the pair `(s, t)` can be connected iff
/// at least one port is directed rightward. Negative clauses are the same
/// graph mirrored vertically.
pub fn build_clause3(side: Side) -> Gadget {
    clause(side, true)
}

/// Two-literal clause: the middle flip gadget and its ports are dropped and
/// `ẽ^y` becomes the single arc `ul -> ur`.
pub fn build_clause2(side: Side) -> Gadget {
    clause(side, false)
}

fn clause(side: Side, three: bool) -> Gadget {
    let kind = if three { GadgetKind::Clause3 } else { GadgetKind::Clause2 };
    let mut d = Draft::new(kind);
    d.mirror = side == Side::Negative;

    let t = d.v("t", 3.0, 2.0);
    let s = d.v("s", 10.0, 2.0);
    let lx = d.v("lx", 0.0, 0.0);
    let rx = d.v("rx", 2.0, 0.0);
    let middle = three.then(|| {
        [
            d.v("tt2", 4.0, 1.0),
            d.v("ss1", 5.0, 1.0),
            d.v("ss2", 8.0, 1.0),
            d.v("tt1", 9.0, 1.0),
            d.v("ll", 5.5, 0.0),
            d.v("lr", 7.5, 0.0),
        ]
    });
    let ul = d.v("ul", 5.5, 2.0);
    let ur = d.v("ur", 7.5, 2.0);
    let lz = d.v("lz", 11.0, 0.0);
    let rz = d.v("rz", 13.0, 0.0);
    let t1 = d.v("t1", 3.0, 3.5);
    let s1 = d.v("s1", 10.0, 3.5);
    let t2 = d.v("t2", 3.0, 5.5);
    let s2 = d.v("s2", 10.0, 5.5);
    let t3 = d.v("t3", 2.0, 6.5);
    let s3 = d.v("s3", 11.0, 6.5);
    let c1 = d.v("c1", 6.5, 4.0);
    let c2 = d.v("c2", 6.5, 6.0);
    let l3 = d.v("l3", 4.75, 3.5);
    let ll4 = d.v("ll4", 4.75, 4.5);
    let l4 = d.v("l4", 4.75, 5.3);
    let ll3 = d.v("ll3", 4.75, 6.0);
    let r3 = d.v("r3", 8.25, 3.5);
    let rr4 = d.v("rr4", 8.25, 4.5);
    let r4 = d.v("r4", 8.25, 5.3);
    let rr3 = d.v("rr3", 8.25, 6.0);

    d.port("x", lx, rx);
    if let Some([.., ll, lr]) = middle {
        d.port("y", ll, lr);
    }
    d.port("z", lz, rz);
    if three {
        d.edge("etilde", ul, ur);
    }
    d.edge("f", s1, s2);
    d.edge("g", t1, t2);
    d.edge("central", c1, c2);

    // outer frame: s -> s1 -f- s2 -> s3 -> t3 -> t2 -g- t1 -> t
    d.arc(t1, t);
    d.arc(t3, t2);
    d.arc(s, s1);
    d.arc(s2, s3);
    d.arc(rz, s3);
    d.arc(s3, t3);
    d.arc(t3, lx);
    // flip pairs tying g (left) and f (right) to the central edge
    d.arc(ll4, t1);
    d.arc(ll4, c1);
    d.arc(ll3, t2);
    d.arc(ll3, c2);
    d.arc(t1, l3);
    d.arc(c1, l3);
    d.arc(t2, l4);
    d.arc(c2, l4);
    d.arc(rr4, s1);
    d.arc(rr4, c1);
    d.arc(rr3, s2);
    d.arc(rr3, c2);
    d.arc(s1, r3);
    d.arc(c1, r3);
    d.arc(s2, r4);
    d.arc(c2, r4);
    let middle_pairs = if let Some([tt2, ss1, ss2, tt1, ll, lr]) = middle {
        d.arc(ss1, ul);
        d.arc(ss1, ll);
        d.arc(ss2, ur);
        d.arc(ss2, lr);
        d.arc(ul, tt2);
        d.arc(ll, tt2);
        d.arc(ur, tt1);
        d.arc(lr, tt1);
        Some([(ss1, tt1), (ss2, tt2)])
    } else {
        d.arc(ul, ur);
        None
    };
    d.arc(rx, t);
    d.arc(ul, t);
    d.arc(s, ur);
    d.arc(s, lz);

    d.pair(s, t);
    for (a, b) in middle_pairs.into_iter().flatten() {
        d.pair(a, b);
    }
    d.pair(ll4, l4);
    d.pair(ll3, l3);
    d.pair(rr4, r4);
    d.pair(rr3, r3);
    d.finish()
}

/// Two flip gadgets stacked on a shared middle edge `m`, forcing the outer
/// ports `a` (bottom) and `b` (top) into the same direction. Flip terminals
/// are labelled `f1.*` and `f2.*`.
pub fn build_edge_gadget() -> Gadget {
    let mut d = Draft::new(GadgetKind::Edge);
    let a_l = d.v("a_l", 1.5, 0.0);
    let a_r = d.v("a_r", 3.5, 0.0);
    let m_l = d.v("m_l", 1.5, 3.0);
    let m_r = d.v("m_r", 3.5, 3.0);
    let b_l = d.v("b_l", 1.5, 6.0);
    let b_r = d.v("b_r", 3.5, 6.0);
    d.port("a", a_l, a_r);
    d.edge("m", m_l, m_r);
    d.port("b", b_l, b_r);
    for (k, y, top, bottom) in [(1, 1.5, [m_l, m_r], [a_l, a_r]), (2, 4.5, [b_l, b_r], [m_l, m_r])] {
        let t2 = d.v(&format!("f{k}.t2"), 0.0, y);
        let s1 = d.v(&format!("f{k}.s1"), 1.0, y);
        let s2 = d.v(&format!("f{k}.s2"), 4.0, y);
        let t1 = d.v(&format!("f{k}.t1"), 5.0, y);
        d.flip_arcs([s1, t1, s2, t2], top, bottom);
    }
    d.finish()
}

/// Builds a gadget by kind name with CLI-style parameters.
pub fn build_by_name(kind: GadgetKind, side: Side, p: usize, n: usize) -> Result<Gadget, GadgetError> {
    Ok(match kind {
        GadgetKind::Flip => build_flip(),
        GadgetKind::Variable => build_variable(p, n)?,
        GadgetKind::Clause3 => build_clause3(side),
        GadgetKind::Clause2 => build_clause2(side),
        GadgetKind::Edge => build_edge_gadget(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeState, Orientation};
    use crate::reach::verify_orientation;
    use crate::validate::check_source_sink_property;

    fn counts(g: &Gadget) -> (usize, usize, usize, usize) {
        (
            g.graph.num_vertices(),
            g.graph.num_arcs(),
            g.graph.num_edges(),
            g.pairs.len(),
        )
    }

    #[test]
    fn flip_inventory() {
        let g = build_flip();
        assert_eq!(counts(&g), (8, 8, 2, 2));
        let arcs: Vec<_> = g
            .graph
            .arcs()
            .iter()
            .map(|&(a, b)| {
                (
                    g.graph.vertex(a).label.clone().unwrap(),
                    g.graph.vertex(b).label.clone().unwrap(),
                )
            })
            .collect();
        for (a, b) in [
            ("s1", "ul"),
            ("s1", "ll"),
            ("s2", "ur"),
            ("s2", "lr"),
            ("ul", "t2"),
            ("ll", "t2"),
            ("ur", "t1"),
            ("lr", "t1"),
        ] {
            assert!(arcs.contains(&(a.into(), b.into())), "{a}->{b}");
        }
    }

    #[test]
    fn variable_inventory() {
        assert_eq!(counts(&build_variable(3, 2).unwrap()), (14, 14, 5, 2));
        assert_eq!(counts(&build_variable(1, 1).unwrap()), (8, 8, 2, 2));
        for p in 1..=4 {
            for n in 1..=4 {
                let g = build_variable(p, n).unwrap();
                assert_eq!(counts(&g), (4 + 2 * p + 2 * n, 8 + 2 * (p - 1) + 2 * (n - 1), p + n, 2));
            }
        }
        assert_eq!(build_variable(0, 1).unwrap_err(), GadgetError::NoOccurrences { p: 0, n: 1 });
    }

    #[test]
    fn variable_ports_ordered_left_to_right() {
        let g = build_variable(3, 2).unwrap();
        let xs: Vec<f64> = ["top0", "top1", "top2"]
            .iter()
            .map(|n| g.graph.vertex(g.port(n).left).pos.unwrap().x)
            .collect();
        assert!(xs.windows(2).all(|w| w[0] < w[1]));
        for p in &g.ports {
            let (l, r) = (g.graph.vertex(p.left).pos.unwrap(), g.graph.vertex(p.right).pos.unwrap());
            assert!(l.x < r.x);
            assert_eq!(g.graph.edge(p.edge), (p.left, p.right));
        }
    }

    #[test]
    fn clause_inventories() {
        assert_eq!(counts(&build_clause3(Side::Positive)), (30, 35, 7, 7));
        assert_eq!(counts(&build_clause2(Side::Positive)), (24, 28, 5, 5));
        assert_eq!(counts(&build_edge_gadget()), (14, 16, 3, 4));
    }

    #[test]
    fn negative_clause_is_a_vertical_mirror() {
        let pos = build_clause3(Side::Positive);
        let neg = build_clause3(Side::Negative);
        assert_eq!(pos.graph.arcs(), neg.graph.arcs());
        assert_eq!(pos.graph.edges(), neg.graph.edges());
        assert_eq!(pos.pairs, neg.pairs);
        assert_eq!(pos.ports, neg.ports);
        for ((_, a), (_, b)) in pos.graph.vertices().zip(neg.graph.vertices()) {
            let (pa, pb) = (a.pos.unwrap(), b.pos.unwrap());
            assert_eq!((pa.x, pa.y), (pb.x, -pb.y));
        }
    }

    #[test]
    fn all_gadgets_obey_source_sink_property() {
        for g in [
            build_flip(),
            build_variable(2, 3).unwrap(),
            build_clause3(Side::Negative),
            build_clause2(Side::Positive),
            build_edge_gadget(),
        ] {
            assert!(check_source_sink_property(&g.instance()).is_empty(), "{}", g.kind);
        }
    }

    #[test]
    fn clause2_arc_into_ur_is_a_dead_end() {
        let g = build_clause2(Side::Positive);
        let ur = g.vertex("ur");
        let out: Vec<_> = g.graph.arcs().iter().filter(|a| a.0 == ur).collect();
        assert!(out.is_empty());
        assert!(g.graph.arcs().contains(&(g.vertex("ul"), ur)));
    }

    #[test]
    fn clause3_routes_through_each_literal() {
        use EdgeState::{Forward as F, Reverse as R};
        let g = build_clause3(Side::Positive);
        let inst = g.instance();
        // edges: x, y, z, etilde, f, g, central
        // x rightward: f up, g up, central down
        let o = Orientation::from_states(vec![F, R, R, F, F, F, R]);
        assert!(verify_orientation(&inst, &o).unwrap());
        // y rightward: etilde must be leftward
        let o = Orientation::from_states(vec![R, F, R, R, F, F, R]);
        assert!(verify_orientation(&inst, &o).unwrap());
        // z rightward: g pointing down to t
        let o = Orientation::from_states(vec![R, R, F, F, R, R, F]);
        assert!(verify_orientation(&inst, &o).unwrap());
    }
}
