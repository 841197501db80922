//! Stitching gadgets into a Steiner Orientation instance for a planar
//! monotone formula, with a provenance record for every edge and pair.
//!
//! Gadgets are placed in a fixed order (variables, then clauses, then one
//! edge gadget per variable-clause incidence by clause index and literal
//! position), so vertex, edge and pair ids are deterministic. An edge gadget
//! owns no port of its own: its outer edges are identified with the variable
//! edge `e^x_C` and the clause edge `ē^x_C`, endpoint by endpoint.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::gadgets::{
    build_clause2, build_clause3, build_edge_gadget, build_variable, variable_width, Gadget, GadgetKind,
};
use crate::graph::{EdgeId, EdgeState, Instance, MixedGraph, Orientation, Point, TerminalPair, VertexId};
use crate::pm3sat::{validate_layout, Formula, Layout, LayoutError, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeRole {
    /// `e^x_C`: a variable gadget edge for one occurrence.
    Occurrence,
    /// `ē^x_C`: a clause gadget edge for one literal.
    ClauseLiteral,
    /// `ẽ^y_C`: the flipped copy of the middle literal edge.
    Twin,
    F,
    G,
    Central,
    /// Shared edge of the two flips in an edge gadget.
    Middle,
}

impl EdgeRole {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeRole::Occurrence => "e",
            EdgeRole::ClauseLiteral => "ebar",
            EdgeRole::Twin => "etilde",
            EdgeRole::F => "f",
            EdgeRole::G => "g",
            EdgeRole::Central => "central",
            EdgeRole::Middle => "middle",
        }
    }

    pub fn parse(s: &str) -> Option<EdgeRole> {
        Some(match s {
            "e" => EdgeRole::Occurrence,
            "ebar" => EdgeRole::ClauseLiteral,
            "etilde" => EdgeRole::Twin,
            "f" => EdgeRole::F,
            "g" => EdgeRole::G,
            "central" => EdgeRole::Central,
            "middle" => EdgeRole::Middle,
            _ => return None,
        })
    }
}

/// The formula element a graph element was built for. Text form:
/// `var:<v>`, `clause:<c><sign>`, `inc:<v>:<c><sign>` (0-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Variable(usize),
    Clause { clause: usize, side: Side },
    Incidence { var: usize, clause: usize, side: Side },
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Element::Variable(v) => write!(f, "var:{v}"),
            Element::Clause { clause, side } => write!(f, "clause:{clause}{}", side.sign()),
            Element::Incidence { var, clause, side } => write!(f, "inc:{var}:{clause}{}", side.sign()),
        }
    }
}

fn parse_signed(s: &str) -> Option<(usize, Side)> {
    let side = match s.chars().last()? {
        '+' => Side::Positive,
        '-' => Side::Negative,
        _ => return None,
    };
    Some((s[..s.len() - 1].parse().ok()?, side))
}

impl Element {
    pub fn parse(s: &str) -> Option<Element> {
        let (kind, rest) = s.split_once(':')?;
        match kind {
            "var" => rest.parse().ok().map(Element::Variable),
            "clause" => parse_signed(rest).map(|(clause, side)| Element::Clause { clause, side }),
            "inc" => {
                let (v, c) = rest.split_once(':')?;
                let (clause, side) = parse_signed(c)?;
                Some(Element::Incidence {
                    var: v.parse().ok()?,
                    clause,
                    side,
                })
            }
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeRecord {
    pub gadget: GadgetKind,
    pub role: EdgeRole,
    pub element: Element,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairRecord {
    pub gadget: GadgetKind,
    pub element: Element,
}

/// Edge ids of a variable gadget's chains, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VariableChains {
    pub top: Vec<EdgeId>,
    pub bottom: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetadataError {
    #[error("{what} {index} has no metadata record")]
    Missing { what: &'static str, index: usize },
    #[error("variable {0} has an empty chain")]
    EmptyChain(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMetadata {
    edges: Vec<EdgeRecord>,
    pairs: Vec<PairRecord>,
    variables: Vec<VariableChains>,
}

impl ReductionMetadata {
    /// Rebuilds the variable chains from occurrence-edge records; chain order
    /// follows edge ids, which the compiler allocates left to right.
    pub fn from_records(edges: Vec<EdgeRecord>, pairs: Vec<PairRecord>) -> Result<Self, MetadataError> {
        let mut variables: Vec<VariableChains> = Vec::new();
        for (i, r) in edges.iter().enumerate() {
            if let (EdgeRole::Occurrence, Element::Incidence { var, side, .. }) = (r.role, r.element) {
                if variables.len() <= var {
                    variables.resize(var + 1, VariableChains::default());
                }
                match side {
                    Side::Positive => variables[var].top.push(EdgeId(i)),
                    Side::Negative => variables[var].bottom.push(EdgeId(i)),
                }
            }
        }
        if let Some(v) = variables.iter().position(|c| c.top.is_empty() || c.bottom.is_empty()) {
            return Err(MetadataError::EmptyChain(v));
        }
        Ok(ReductionMetadata {
            edges,
            pairs,
            variables,
        })
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn pairs(&self) -> &[PairRecord] {
        &self.pairs
    }

    pub fn variables(&self) -> &[VariableChains] {
        &self.variables
    }

    /// Number of gadget instances of `kind`, counted by distinct formula
    /// elements owning at least one terminal pair.
    pub fn gadget_count(&self, kind: GadgetKind) -> usize {
        self.pairs
            .iter()
            .filter(|p| p.gadget == kind)
            .map(|p| p.element)
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Edge ids whose record satisfies `pred`.
    pub fn edges_where(&self, pred: impl Fn(&EdgeRecord) -> bool) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, r)| pred(r))
            .map(|(i, _)| EdgeId(i))
            .collect()
    }

    pub fn pairs_where(&self, pred: impl Fn(&PairRecord) -> bool) -> Vec<usize> {
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, r)| pred(r))
            .map(|(i, _)| i)
            .collect()
    }

    /// Checks the bijection between instance elements and records.
    pub fn covers(&self, instance: &Instance) -> Result<(), MetadataError> {
        if self.edges.len() != instance.num_edges() {
            return Err(MetadataError::Missing {
                what: "edge",
                index: self.edges.len().min(instance.num_edges()),
            });
        }
        if self.pairs.len() != instance.pairs().len() {
            return Err(MetadataError::Missing {
                what: "pair",
                index: self.pairs.len().min(instance.pairs().len()),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Compiled {
    pub instance: Instance,
    pub metadata: ReductionMetadata,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error("layout does not belong to this formula")]
    LayoutMismatch,
}

// Drawing geometry. Clause bars of depth d sit at height `level(d)`.
const VAR_GAP: f64 = 3.0;
const EDGE_SPAN: f64 = 6.0;
const CLAUSE_HEIGHT: f64 = 7.0;
const PORT_Y: f64 = 1.5;

fn level(depth: usize) -> f64 {
    PORT_Y + depth as f64 * EDGE_SPAN + (depth - 1) as f64 * CLAUSE_HEIGHT
}

fn lerp(a: Point, b: Point, t: f64) -> Point {
    Point::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)
}

/// Piecewise-linear map through `anchors` (sorted by source), slope 1
/// outside them.
fn piecewise(anchors: &[(f64, f64)], x: f64) -> f64 {
    let first = anchors[0];
    let last = anchors[anchors.len() - 1];
    if x <= first.0 {
        return first.1 + (x - first.0);
    }
    if x >= last.0 {
        return last.1 + (x - last.0);
    }
    let w = anchors.windows(2).find(|w| x <= w[1].0).expect("x inside anchor range");
    let t = (x - w[0].0) / (w[1].0 - w[0].0);
    w[0].1 + (w[1].1 - w[0].1) * t
}

struct Stitcher {
    graph: MixedGraph,
    pairs: Vec<TerminalPair>,
    edges: Vec<EdgeRecord>,
    pair_records: Vec<PairRecord>,
    /// Left/right endpoint tags of every port edge placed so far.
    port_tags: HashMap<EdgeId, (VertexId, VertexId)>,
}

impl Stitcher {
    /// Copies `gadget` in, merging the endpoints of ports listed in `shared`
    /// with already placed port edges. Returns global ids by edge name.
    fn place(
        &mut self,
        gadget: &Gadget,
        prefix: &str,
        position: impl Fn(Point) -> Point,
        shared: &[(&str, EdgeId)],
        record: impl Fn(&str) -> (EdgeRole, Element),
        pair_element: Element,
    ) -> HashMap<String, EdgeId> {
        let g = &gadget.graph;
        let mut map: Vec<Option<VertexId>> = vec![None; g.num_vertices()];
        for &(name, global) in shared {
            let port = gadget.port(name);
            assert_eq!(g.edge(port.edge), (port.left, port.right), "port tags of {name}");
            let (left, right) = self.port_tags[&global];
            assert_eq!(self.graph.edge(global), (left, right), "port tags of edge {global}");
            map[port.left.0] = Some(left);
            map[port.right.0] = Some(right);
        }
        let vertices: Vec<VertexId> = g
            .vertices()
            .map(|(v, vx)| {
                map[v.0].unwrap_or_else(|| {
                    let label = format!("{prefix}.{}", vx.label.as_deref().unwrap_or("?"));
                    self.graph.add_labeled_vertex(label, vx.pos.map(&position))
                })
            })
            .collect();
        for &(t, h) in g.arcs() {
            self.graph.add_arc(vertices[t.0], vertices[h.0]).expect("mapped vertices exist");
        }
        let mut edges = HashMap::new();
        for (i, &(u, w)) in g.edges().iter().enumerate() {
            let name = &gadget.edge_names[i];
            if let Some(&(_, global)) = shared.iter().find(|(n, _)| n == name) {
                edges.insert(name.clone(), global);
                continue;
            }
            let (gu, gw) = (vertices[u.0], vertices[w.0]);
            let id = self.graph.add_edge(gu, gw).expect("gadget edges are not loops");
            let (role, element) = record(name);
            self.edges.push(EdgeRecord {
                gadget: gadget.kind,
                role,
                element,
            });
            if gadget.ports.iter().any(|p| p.edge.0 == i) {
                self.port_tags.insert(id, (gu, gw));
            }
            edges.insert(name.clone(), id);
        }
        for p in &gadget.pairs {
            self.pairs.push(TerminalPair::new(vertices[p.source.0], vertices[p.target.0]));
            self.pair_records.push(PairRecord {
                gadget: gadget.kind,
                element: pair_element,
            });
        }
        edges
    }

    fn pos(&self, v: VertexId) -> Point {
        self.graph.vertex(v).pos.expect("compiled vertices carry coordinates")
    }
}

/// Validates the layout and compiles.
pub fn compile_formula(formula: &Formula) -> Result<Compiled, CompileError> {
    let layout = validate_layout(formula)?;
    compile(formula, &layout)
}

pub fn compile(formula: &Formula, layout: &Layout) -> Result<Compiled, CompileError> {
    let clauses = formula.clauses();
    if layout.depths().len() != clauses.len() {
        return Err(CompileError::LayoutMismatch);
    }
    for v in 0..formula.num_vars() {
        for side in [Side::Positive, Side::Negative] {
            let expect = clauses
                .iter()
                .filter(|c| c.side() == side && c.vars().contains(&v))
                .count();
            if layout.attachments(v, side).len() != expect {
                return Err(CompileError::LayoutMismatch);
            }
        }
    }

    let mut st = Stitcher {
        graph: MixedGraph::new(),
        pairs: Vec::new(),
        edges: Vec::new(),
        pair_records: Vec::new(),
        port_tags: HashMap::new(),
    };

    // (var, clause) -> variable occurrence edge
    let mut occurrence: HashMap<(usize, usize), EdgeId> = HashMap::new();
    let mut x0 = 0.0;
    for v in 0..formula.num_vars() {
        let top = layout.attachments(v, Side::Positive);
        let bottom = layout.attachments(v, Side::Negative);
        let gadget = build_variable(top.len(), bottom.len()).expect("formula invariants give p, n >= 1");
        let record = |name: &str| {
            let (side, list, k) = match name.strip_prefix("top") {
                Some(k) => (Side::Positive, top, k),
                None => (Side::Negative, bottom, &name[3..]),
            };
            let clause = list[k.parse::<usize>().expect("chain port index")];
            (EdgeRole::Occurrence, Element::Incidence { var: v, clause, side })
        };
        let placed = st.place(
            &gadget,
            formula.name(v),
            |p| Point::new(p.x + x0, p.y),
            &[],
            record,
            Element::Variable(v),
        );
        for (k, &c) in top.iter().enumerate() {
            occurrence.insert((v, c), placed[&format!("top{k}")]);
        }
        for (k, &c) in bottom.iter().enumerate() {
            occurrence.insert((v, c), placed[&format!("bot{k}")]);
        }
        x0 += variable_width(top.len(), bottom.len()) + VAR_GAP;
    }

    // (var, clause) -> clause literal edge
    let mut literal: HashMap<(usize, usize), EdgeId> = HashMap::new();
    for (j, clause) in clauses.iter().enumerate() {
        let side = clause.side();
        let three = clause.len() == 3;
        let gadget = if three { build_clause3(side) } else { build_clause2(side) };
        let port_names: &[&str] = if three { &["x", "y", "z"] } else { &["x", "z"] };
        let local_centers: &[f64] = if three { &[1.0, 6.5, 12.0] } else { &[1.0, 12.0] };
        let anchors: Vec<(f64, f64)> = clause
            .vars()
            .iter()
            .zip(local_centers)
            .map(|(&v, &lx)| {
                let (a, b) = st.graph.edge(occurrence[&(v, j)]);
                (lx, (st.pos(a).x + st.pos(b).x) / 2.0)
            })
            .collect();
        let base = match side {
            Side::Positive => level(layout.depth(j)),
            Side::Negative => -level(layout.depth(j)),
        };
        let record = |name: &str| {
            let whole = Element::Clause { clause: j, side };
            match name {
                "etilde" => (EdgeRole::Twin, whole),
                "f" => (EdgeRole::F, whole),
                "g" => (EdgeRole::G, whole),
                "central" => (EdgeRole::Central, whole),
                port => {
                    let k = port_names.iter().position(|p| *p == port).expect("clause port");
                    let var = clause.vars()[k];
                    (EdgeRole::ClauseLiteral, Element::Incidence { var, clause: j, side })
                }
            }
        };
        let placed = st.place(
            &gadget,
            &format!("c{j}"),
            |p| Point::new(piecewise(&anchors, p.x), base + p.y),
            &[],
            record,
            Element::Clause { clause: j, side },
        );
        for (k, &v) in clause.vars().iter().enumerate() {
            literal.insert((v, j), placed[port_names[k]]);
        }
    }

    let edge_gadget = build_edge_gadget();
    for (j, clause) in clauses.iter().enumerate() {
        let side = clause.side();
        for &v in clause.vars() {
            let a = occurrence[&(v, j)];
            let b = literal[&(v, j)];
            let (al, ar) = st.graph.edge(a);
            let (bl, br) = st.graph.edge(b);
            let corners = [st.pos(al), st.pos(ar), st.pos(bl), st.pos(br)];
            // local frame: port a at y = 0, port b at y = 6, ports span x 1.5..3.5
            let position = |p: Point| {
                let u = (p.x - 1.5) / 2.0;
                let h = p.y / 6.0;
                lerp(lerp(corners[0], corners[1], u), lerp(corners[2], corners[3], u), h)
            };
            let element = Element::Incidence { var: v, clause: j, side };
            st.place(
                &edge_gadget,
                &format!("{}@c{j}", formula.name(v)),
                position,
                &[("a", a), ("b", b)],
                |_| (EdgeRole::Middle, element),
                element,
            );
        }
    }

    let instance = Instance::new(st.graph, st.pairs).expect("stitched pairs are well formed");
    let metadata = ReductionMetadata::from_records(st.edges, st.pair_records).expect("every variable has two chains");
    debug_assert!(metadata.covers(&instance).is_ok());
    Ok(Compiled { instance, metadata })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("orientation has {found} entries, metadata describes {expected} edges")]
    Length { expected: usize, found: usize },
    #[error("variable {var}: edge {edge} breaks the rotational pattern")]
    NotRotational { var: usize, edge: EdgeId },
}

/// Reads each variable off its first top edge (rightward = clockwise = true)
/// and checks that the whole gadget follows the same rotation.
pub fn decode(metadata: &ReductionMetadata, orientation: &Orientation) -> Result<Vec<bool>, DecodeError> {
    if orientation.len() != metadata.edges.len() {
        return Err(DecodeError::Length {
            expected: metadata.edges.len(),
            found: orientation.len(),
        });
    }
    metadata
        .variables
        .iter()
        .enumerate()
        .map(|(var, chains)| {
            let first = chains.top[0];
            let value = match orientation.get(first) {
                EdgeState::Forward => true,
                EdgeState::Reverse => false,
                EdgeState::Unset => return Err(DecodeError::NotRotational { var, edge: first }),
            };
            let (top, bottom) = if value {
                (EdgeState::Forward, EdgeState::Reverse)
            } else {
                (EdgeState::Reverse, EdgeState::Forward)
            };
            let bad = chains
                .top
                .iter()
                .map(|&e| (e, top))
                .chain(chains.bottom.iter().map(|&e| (e, bottom)))
                .find(|&(e, want)| orientation.get(e) != want);
            match bad {
                Some((edge, _)) => Err(DecodeError::NotRotational { var, edge }),
                None => Ok(value),
            }
        })
        .collect()
}

/// The total orientation the reduction intends for a satisfying assignment:
/// variable gadgets rotate per the assignment, edge-gadget middles oppose
/// their ports, and each clause routes `(s, t)` through its leftmost true
/// literal.
pub fn encode_assignment(formula: &Formula, compiled: &Compiled, assignment: &[bool]) -> Option<Orientation> {
    use EdgeState::{Forward as F, Reverse as R};
    let md = &compiled.metadata;
    let mut o = Orientation::unset(md.edges.len());
    let literal_true = |var: usize, side: Side| assignment[var] == (side == Side::Positive);
    // ports of a positive clause carry the top-edge direction, negative ones
    // the bottom-edge direction; either way rightward iff the literal holds
    let port_dir = |var: usize, side: Side| if literal_true(var, side) { F } else { R };
    let mut per_clause: HashMap<usize, HashMap<EdgeRole, EdgeId>> = HashMap::new();
    for (i, r) in md.edges.iter().enumerate() {
        let e = EdgeId(i);
        match (r.role, r.element) {
            (EdgeRole::Occurrence | EdgeRole::ClauseLiteral, Element::Incidence { var, side, .. }) => {
                o.set(e, port_dir(var, side));
            }
            (EdgeRole::Middle, Element::Incidence { var, side, .. }) => {
                o.set(e, port_dir(var, side).flipped());
            }
            (role, Element::Clause { clause, .. }) => {
                per_clause.entry(clause).or_default().insert(role, e);
            }
            _ => return None,
        }
    }
    for (j, clause) in formula.clauses().iter().enumerate() {
        let roles = &per_clause[&j];
        let side = clause.side();
        let vars = clause.vars();
        let truth: Vec<bool> = vars.iter().map(|&v| literal_true(v, side)).collect();
        // f and g point up to route through x or down to route through z;
        // central always opposes them
        let via_x = truth[0];
        let via_y = vars.len() == 3 && truth[1];
        let via_z = *truth.last().unwrap();
        if !(via_x || via_y || via_z) {
            return None;
        }
        let fg = if via_x || !via_z { F } else { R };
        o.set(roles[&EdgeRole::F], fg);
        o.set(roles[&EdgeRole::G], fg);
        o.set(roles[&EdgeRole::Central], fg.flipped());
        if let Some(&twin) = roles.get(&EdgeRole::Twin) {
            o.set(twin, port_dir(vars[1], side).flipped());
        }
    }
    Some(o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pm3sat::parse_formula;
    use crate::reach::verify_orientation;

    const APPENDIX: &str = "vars: X Y Z W\npos: X Y\nneg: X Z W\npos: Y Z W\nneg: X Y Z\n";

    #[test]
    fn appendix_inventory() {
        let f = parse_formula(APPENDIX).unwrap();
        let c = compile_formula(&f).unwrap();
        let md = &c.metadata;
        assert_eq!(md.gadget_count(GadgetKind::Variable), 4);
        assert_eq!(md.gadget_count(GadgetKind::Clause3), 3);
        assert_eq!(md.gadget_count(GadgetKind::Clause2), 1);
        assert_eq!(md.gadget_count(GadgetKind::Edge), 11);
        assert_eq!(c.instance.pairs().len(), 78);
        assert_eq!(c.instance.num_edges(), 48);
        // 38 variable + 3*30 + 24 clause + 11*10 edge-gadget vertices
        assert_eq!(c.instance.graph().num_vertices(), 262);
        assert_eq!(c.instance.graph().num_arcs(), 38 + 3 * 35 + 28 + 11 * 16);
        md.covers(&c.instance).unwrap();
    }

    #[test]
    fn minimal_inventory() {
        let f = parse_formula("vars: X Y\npos: X Y\nneg: X Y\n").unwrap();
        let c = compile_formula(&f).unwrap();
        assert_eq!(c.metadata.gadget_count(GadgetKind::Variable), 2);
        assert_eq!(c.metadata.gadget_count(GadgetKind::Clause2), 2);
        assert_eq!(c.metadata.gadget_count(GadgetKind::Edge), 4);
        assert_eq!(c.instance.pairs().len(), 30);
    }

    #[test]
    fn edge_gadget_adds_ten_vertices_per_incidence() {
        let f = parse_formula("vars: X Y\npos: X Y\nneg: X Y\n").unwrap();
        let c = compile_formula(&f).unwrap();
        // 2 * 8 variable + 2 * 24 clause vertices, the rest from edge gadgets
        assert_eq!(c.instance.graph().num_vertices() - 16 - 48, 4 * 10);
        assert_eq!(c.instance.graph().num_arcs() - 16 - 56, 4 * 16);
        let middles = c.metadata.edges_where(|r| r.role == EdgeRole::Middle);
        assert_eq!(middles.len(), 4);
    }

    #[test]
    fn element_text_round_trip() {
        for e in [
            Element::Variable(3),
            Element::Clause { clause: 2, side: Side::Negative },
            Element::Incidence { var: 0, clause: 11, side: Side::Positive },
        ] {
            assert_eq!(Element::parse(&e.to_string()), Some(e));
        }
        assert_eq!(Element::parse("inc:1:2"), None);
        assert_eq!(Element::parse("bogus:1"), None);
    }

    #[test]
    fn chains_follow_layout_order() {
        let f = parse_formula(APPENDIX).unwrap();
        let c = compile_formula(&f).unwrap();
        let x = &c.metadata.variables()[0];
        assert_eq!(x.top.len(), 1);
        assert_eq!(x.bottom.len(), 2);
        // X's bottom chain: outer clause 1 first, then clause 3
        let clauses: Vec<usize> = x
            .bottom
            .iter()
            .map(|e| match c.metadata.edges()[e.0].element {
                Element::Incidence { clause, .. } => clause,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(clauses, [1, 3]);
    }

    #[test]
    fn encoded_assignment_verifies_and_decodes() {
        let f = parse_formula(APPENDIX).unwrap();
        let c = compile_formula(&f).unwrap();
        let a = vec![false, true, false, false];
        let o = encode_assignment(&f, &c, &a).unwrap();
        assert!(verify_orientation(&c.instance, &o).unwrap());
        assert_eq!(decode(&c.metadata, &o).unwrap(), a);
        assert!(encode_assignment(&f, &c, &[true, true, true, true]).is_none());
    }

    #[test]
    fn decode_rejects_broken_rotation() {
        let f = parse_formula(APPENDIX).unwrap();
        let c = compile_formula(&f).unwrap();
        let mut o = encode_assignment(&f, &c, &[false, true, false, false]).unwrap();
        let e = c.metadata.variables()[1].bottom[0];
        o.set(e, o.get(e).flipped());
        assert_eq!(decode(&c.metadata, &o), Err(DecodeError::NotRotational { var: 1, edge: e }));
        assert!(matches!(
            decode(&c.metadata, &Orientation::unset(3)),
            Err(DecodeError::Length { expected: 48, found: 3 })
        ));
    }

    #[test]
    fn layout_from_another_formula_is_rejected() {
        let f = parse_formula(APPENDIX).unwrap();
        let g = parse_formula("vars: X Y\npos: X Y\nneg: X Y\n").unwrap();
        let l = validate_layout(&g).unwrap();
        assert_eq!(compile(&f, &l).unwrap_err(), CompileError::LayoutMismatch);
    }
}
