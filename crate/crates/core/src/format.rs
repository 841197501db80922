//! Line-oriented text formats for instances and orientations.
//!
//! Instance file:
//!
//! ```text
//! psi <num-vertices> <num-arcs> <num-edges> <num-pairs>
//! v <id> [<x> <y>] [<label>]
//! a <tail> <head>
//! e <id> <u> <w>
//! p <source> <target>
//! m e <edge-id> <gadget-kind> <role> <element>
//! m p <pair-index> <gadget-kind> <element>
//! ```
//!
//! `#` starts a comment. The `m` lines are optional; when present they must
//! cover every edge and every pair. Orientation file: `orientation <m>`
//! followed by the `F`/`R`/`U` states, whitespace ignored.

use std::fmt::Write as _;

use crate::compile::{EdgeRecord, EdgeRole, Element, PairRecord, ReductionMetadata};
use crate::error::ParseError;
use crate::gadgets::GadgetKind;
use crate::graph::{EdgeState, Instance, MixedGraph, Orientation, Point, TerminalPair, Vertex, VertexId};

/// Parsed instance file.
#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub instance: Instance,
    pub metadata: Option<ReductionMetadata>,
}

fn label_token(label: &str) -> String {
    let cleaned: String = label
        .chars()
        .map(|c| if c.is_whitespace() || c == '#' { '_' } else { c })
        .collect();
    if cleaned.is_empty() {
        "_".to_string()
    } else {
        cleaned
    }
}

/// Serializes an instance. Whitespace and `#` in labels become `_`.
pub fn write_instance(instance: &Instance, metadata: Option<&ReductionMetadata>) -> String {
    let g = instance.graph();
    let mut out = String::new();
    writeln!(
        out,
        "psi {} {} {} {}",
        g.num_vertices(),
        g.num_arcs(),
        g.num_edges(),
        instance.pairs().len()
    )
    .unwrap();
    for (v, vx) in g.vertices() {
        write!(out, "v {}", v.0).unwrap();
        if let Some(p) = vx.pos {
            write!(out, " {} {}", p.x, p.y).unwrap();
        }
        if let Some(l) = &vx.label {
            write!(out, " {}", label_token(l)).unwrap();
        }
        out.push('\n');
    }
    for &(t, h) in g.arcs() {
        writeln!(out, "a {} {}", t.0, h.0).unwrap();
    }
    for (i, &(u, w)) in g.edges().iter().enumerate() {
        writeln!(out, "e {i} {} {}", u.0, w.0).unwrap();
    }
    for p in instance.pairs() {
        writeln!(out, "p {} {}", p.source.0, p.target.0).unwrap();
    }
    if let Some(md) = metadata {
        for (i, r) in md.edges().iter().enumerate() {
            writeln!(out, "m e {i} {} {} {}", r.gadget.as_str(), r.role.as_str(), r.element).unwrap();
        }
        for (i, r) in md.pairs().iter().enumerate() {
            writeln!(out, "m p {i} {} {}", r.gadget.as_str(), r.element).unwrap();
        }
    }
    out
}

struct Line<'a> {
    number: usize,
    tokens: Vec<(usize, &'a str)>,
}

impl<'a> Line<'a> {
    fn err(&self, token: usize, message: impl Into<String>) -> ParseError {
        let column = self.tokens.get(token).map_or(1, |t| t.0);
        ParseError::new(self.number, column, message)
    }

    fn expect_len(&self, range: std::ops::RangeInclusive<usize>, what: &str) -> Result<(), ParseError> {
        if range.contains(&self.tokens.len()) {
            Ok(())
        } else {
            Err(self.err(self.tokens.len().min(*range.end()), format!("malformed {what} line")))
        }
    }

    fn usize_at(&self, i: usize) -> Result<usize, ParseError> {
        self.tokens[i]
            .1
            .parse()
            .map_err(|_| self.err(i, format!("expected a non-negative integer, found `{}`", self.tokens[i].1)))
    }

    fn id_at(&self, i: usize, bound: usize, what: &str) -> Result<usize, ParseError> {
        let id = self.usize_at(i)?;
        if id >= bound {
            return Err(self.err(i, format!("{what} {id} out of range (have {bound})")));
        }
        Ok(id)
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push((s + 1, &content[s..pos]));
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
    })
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut it = lines(text);
    let header = it.next().ok_or_else(|| ParseError::new(1, 1, "empty instance file"))?;
    if header.tokens[0].1 != "psi" {
        return Err(header.err(0, "expected `psi` header"));
    }
    header.expect_len(5..=5, "header")?;
    let nv = header.usize_at(1)?;
    let na = header.usize_at(2)?;
    let ne = header.usize_at(3)?;
    let np = header.usize_at(4)?;

    let mut vertices: Vec<Option<Vertex>> = vec![None; nv];
    let mut arcs = Vec::new();
    let mut edges: Vec<Option<(usize, usize)>> = vec![None; ne];
    let mut pairs = Vec::new();
    let mut edge_md: Vec<Option<EdgeRecord>> = vec![None; ne];
    let mut pair_md: Vec<Option<PairRecord>> = vec![None; np];
    let mut any_md = false;
    let mut last_line = header.number;

    for line in it {
        last_line = line.number;
        match line.tokens[0].1 {
            "v" => {
                line.expect_len(2..=5, "vertex")?;
                let id = line.id_at(1, nv, "vertex")?;
                if vertices[id].is_some() {
                    return Err(line.err(1, format!("vertex {id} declared twice")));
                }
                let rest = &line.tokens[2..];
                let coord = |k: usize| -> Result<f64, ParseError> {
                    let t = rest[k].1;
                    t.parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| line.err(2 + k, format!("expected a coordinate, found `{t}`")))
                };
                let (pos, label) = match rest.len() {
                    0 => (None, None),
                    1 => (None, Some(rest[0].1)),
                    2 => (Some(Point::new(coord(0)?, coord(1)?)), None),
                    _ => (Some(Point::new(coord(0)?, coord(1)?)), Some(rest[2].1)),
                };
                vertices[id] = Some(Vertex {
                    label: label.map(str::to_string),
                    pos,
                });
            }
            "a" => {
                line.expect_len(3..=3, "arc")?;
                arcs.push((line.id_at(1, nv, "vertex")?, line.id_at(2, nv, "vertex")?));
            }
            "e" => {
                line.expect_len(4..=4, "edge")?;
                let id = line.id_at(1, ne, "edge")?;
                if edges[id].is_some() {
                    return Err(line.err(1, format!("edge {id} declared twice")));
                }
                let (u, w) = (line.id_at(2, nv, "vertex")?, line.id_at(3, nv, "vertex")?);
                if u == w {
                    return Err(line.err(3, "undirected edge is a self-loop"));
                }
                edges[id] = Some((u, w));
            }
            "p" => {
                line.expect_len(3..=3, "pair")?;
                let (s, t) = (line.id_at(1, nv, "vertex")?, line.id_at(2, nv, "vertex")?);
                if s == t {
                    return Err(line.err(2, "terminal pair with identical endpoints"));
                }
                pairs.push((line.number, s, t));
            }
            "m" => {
                any_md = true;
                let kind_at = |i: usize| {
                    GadgetKind::parse(line.tokens[i].1)
                        .ok_or_else(|| line.err(i, format!("unknown gadget kind `{}`", line.tokens[i].1)))
                };
                let element_at = |i: usize| {
                    Element::parse(line.tokens[i].1)
                        .ok_or_else(|| line.err(i, format!("malformed element `{}`", line.tokens[i].1)))
                };
                match line.tokens.get(1).map(|t| t.1) {
                    Some("e") => {
                        line.expect_len(6..=6, "edge metadata")?;
                        let id = line.id_at(2, ne, "edge")?;
                        let role = EdgeRole::parse(line.tokens[4].1)
                            .ok_or_else(|| line.err(4, format!("unknown edge role `{}`", line.tokens[4].1)))?;
                        if edge_md[id].is_some() {
                            return Err(line.err(2, format!("edge {id} has two metadata records")));
                        }
                        edge_md[id] = Some(EdgeRecord {
                            gadget: kind_at(3)?,
                            role,
                            element: element_at(5)?,
                        });
                    }
                    Some("p") => {
                        line.expect_len(5..=5, "pair metadata")?;
                        let id = line.id_at(2, np, "pair")?;
                        if pair_md[id].is_some() {
                            return Err(line.err(2, format!("pair {id} has two metadata records")));
                        }
                        pair_md[id] = Some(PairRecord {
                            gadget: kind_at(3)?,
                            element: element_at(4)?,
                        });
                    }
                    _ => return Err(line.err(1, "expected `m e` or `m p`")),
                }
            }
            other => return Err(line.err(0, format!("unknown record type `{other}`"))),
        }
    }

    let end = |message: String| ParseError::new(last_line, 1, message);
    if arcs.len() != na {
        return Err(end(format!("header declares {na} arcs, found {}", arcs.len())));
    }
    if pairs.len() != np {
        return Err(end(format!("header declares {np} pairs, found {}", pairs.len())));
    }
    let mut graph = MixedGraph::new();
    for (i, v) in vertices.into_iter().enumerate() {
        let v = v.ok_or_else(|| end(format!("vertex {i} never declared")))?;
        graph.push_vertex(v);
    }
    for (t, h) in arcs {
        graph.add_arc(VertexId(t), VertexId(h)).expect("ids checked");
    }
    for (i, e) in edges.into_iter().enumerate() {
        let (u, w) = e.ok_or_else(|| end(format!("edge {i} never declared")))?;
        graph.add_edge(VertexId(u), VertexId(w)).expect("ids checked");
    }
    let pairs: Vec<TerminalPair> = pairs
        .into_iter()
        .map(|(_, s, t)| TerminalPair::new(VertexId(s), VertexId(t)))
        .collect();
    let instance = Instance::new(graph, pairs).map_err(|e| end(e.to_string()))?;

    let metadata = if any_md {
        let edges = edge_md
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or_else(|| end(format!("edge {i} has no metadata record"))))
            .collect::<Result<Vec<_>, _>>()?;
        let pairs = pair_md
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or_else(|| end(format!("pair {i} has no metadata record"))))
            .collect::<Result<Vec<_>, _>>()?;
        Some(ReductionMetadata::from_records(edges, pairs).map_err(|e| end(e.to_string()))?)
    } else {
        None
    };
    Ok(InstanceFile { instance, metadata })
}

pub fn write_orientation(orientation: &Orientation) -> String {
    format!("orientation {}\n{}\n", orientation.len(), orientation)
}

pub fn parse_orientation(text: &str) -> Result<Orientation, ParseError> {
    let mut it = lines(text);
    let header = it.next().ok_or_else(|| ParseError::new(1, 1, "empty orientation file"))?;
    if header.tokens[0].1 != "orientation" {
        return Err(header.err(0, "expected `orientation` header"));
    }
    header.expect_len(2..=2, "orientation header")?;
    let m = header.usize_at(1)?;
    let mut states = Vec::with_capacity(m);
    let mut last = (header.number, 1);
    for line in it {
        for &(col, tok) in &line.tokens {
            for (k, c) in tok.chars().enumerate() {
                let s = EdgeState::from_char(c)
                    .ok_or_else(|| ParseError::new(line.number, col + k, format!("invalid edge state `{c}`")))?;
                if states.len() == m {
                    return Err(ParseError::new(line.number, col + k, format!("more than {m} edge states")));
                }
                states.push(s);
            }
            last = (line.number, col + tok.len());
        }
    }
    if states.len() != m {
        return Err(ParseError::new(
            last.0,
            last.1,
            format!("expected {m} edge states, found {}", states.len()),
        ));
    }
    Ok(Orientation::from_states(states))
}

/// Graphviz rendering: arcs as black arrows, undirected edges as bold red
/// lines, sources as boxes and targets as double circles.
pub fn write_dot(instance: &Instance) -> String {
    let g = instance.graph();
    let mut source = vec![false; g.num_vertices()];
    let mut target = vec![false; g.num_vertices()];
    for p in instance.pairs() {
        source[p.source.0] = true;
        target[p.target.0] = true;
    }
    let mut out = String::from("digraph steiner {\n  node [shape=point];\n");
    for (v, vx) in g.vertices() {
        let shape = match (source[v.0], target[v.0]) {
            (true, true) => "Mdiamond",
            (true, false) => "box",
            (false, true) => "doublecircle",
            (false, false) => "point",
        };
        write!(out, "  v{} [shape={shape}", v.0).unwrap();
        if let Some(l) = &vx.label {
            write!(out, ", label=\"{}\"", l.replace('\\', "\\\\").replace('"', "\\\"")).unwrap();
        }
        if let Some(p) = vx.pos {
            write!(out, ", pos=\"{},{}!\"", p.x, p.y).unwrap();
        }
        out.push_str("];\n");
    }
    for &(t, h) in g.arcs() {
        writeln!(out, "  v{} -> v{};", t.0, h.0).unwrap();
    }
    for (i, &(u, w)) in g.edges().iter().enumerate() {
        writeln!(
            out,
            "  v{} -> v{} [dir=none, color=red, style=bold, xlabel=\"e{i}\"];",
            u.0, w.0
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
