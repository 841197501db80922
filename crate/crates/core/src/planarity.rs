//! Planarity of the underlying simple undirected graph.
//!
//! Arcs and undirected edges are merged into one simple graph (parallel
//! edges collapsed, loops dropped). After an Euler-bound rejection the graph
//! is split into biconnected blocks and each block is tested with
//! Demoucron–Malgrange–Pertuiset path embedding: repeatedly pick a fragment,
//! and embed one of its attachment-to-attachment paths into a face that
//! contains all of its attachments. A fragment with no such face proves the
//! block non-planar.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::graph::MixedGraph;

/// Simple undirected graph with sorted neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, w) in edges {
            if u != w {
                sets[u].insert(w);
                sets[w].insert(u);
            }
        }
        SimpleGraph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn from_mixed(graph: &MixedGraph) -> Self {
        let edges = graph
            .arcs()
            .iter()
            .chain(graph.edges())
            .map(|&(u, w)| (u.0, w.0));
        Self::from_edges(graph.num_vertices(), edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&w| u < w).map(move |&w| (u, w)))
    }
}

/// `|E| > 3|V| - 6` with `|V| >= 3` rules out planarity.
pub fn euler_rejects(vertices: usize, edges: usize) -> bool {
    vertices >= 3 && edges > 3 * vertices - 6
}

pub fn check_planarity(graph: &MixedGraph) -> bool {
    is_planar(&SimpleGraph::from_mixed(graph))
}

pub fn is_planar(g: &SimpleGraph) -> bool {
    if euler_rejects(g.num_vertices(), g.num_edges()) {
        return false;
    }
    biconnected_blocks(g).into_iter().all(|block| block_is_planar(&block))
}

/// Edge sets of the biconnected components (iterative Hopcroft–Tarjan).
fn biconnected_blocks(g: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.num_vertices();
    const NONE: usize = usize::MAX;
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, NONE, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*next) {
                *next += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == NONE {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

fn block_is_planar(block: &[(usize, usize)]) -> bool {
    let mut index = std::collections::HashMap::new();
    let mut local_edges = Vec::with_capacity(block.len());
    for &(u, w) in block {
        let next = index.len();
        let lu = *index.entry(u).or_insert(next);
        let next = index.len();
        let lw = *index.entry(w).or_insert(next);
        local_edges.push((lu, lw));
    }
    let n = index.len();
    // K5 and K3,3 need at least 5 vertices and 9 edges.
    if n < 5 || local_edges.len() < 9 {
        return true;
    }
    if euler_rejects(n, local_edges.len()) {
        return false;
    }
    Embedder::new(SimpleGraph::from_edges(n, local_edges)).run()
}

fn key(u: usize, w: usize) -> (usize, usize) {
    if u < w {
        (u, w)
    } else {
        (w, u)
    }
}

struct Fragment {
    /// Component vertices not yet embedded; empty for a single chord edge.
    inner: Vec<usize>,
    attachments: Vec<usize>,
}

struct Embedder {
    g: SimpleGraph,
    embedded_vertex: Vec<bool>,
    embedded_edges: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
    faces_of: Vec<Vec<usize>>,
}

impl Embedder {
    fn new(g: SimpleGraph) -> Self {
        let n = g.num_vertices();
        Embedder {
            g,
            embedded_vertex: vec![false; n],
            embedded_edges: HashSet::new(),
            faces: Vec::new(),
            faces_of: vec![Vec::new(); n],
        }
    }

    fn run(mut self) -> bool {
        let cycle = self.find_cycle();
        for i in 0..cycle.len() {
            let (u, w) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            self.embedded_edges.insert(key(u, w));
            self.embedded_vertex[u] = true;
        }
        self.add_face(cycle.clone());
        self.add_face(cycle);

        let total = self.g.num_edges();
        while self.embedded_edges.len() < total {
            let fragments = self.fragments();
            let mut choice = None;
            for (i, frag) in fragments.iter().enumerate() {
                let faces = self.admissible_faces(&frag.attachments);
                match faces.len() {
                    0 => return false,
                    1 => {
                        choice = Some((i, faces[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((i, faces[0]));
                        }
                    }
                }
            }
            let (i, face) = choice.expect("unembedded edges imply a fragment");
            let path = self.fragment_path(&fragments[i]);
            self.embed_path(face, &path);
        }
        true
    }

    fn add_face(&mut self, face: Vec<usize>) -> usize {
        let id = self.faces.len();
        for &v in &face {
            self.faces_of[v].push(id);
        }
        self.faces.push(face);
        id
    }

    /// Any cycle; exists because the block is biconnected with >= 3 vertices.
    fn find_cycle(&self) -> Vec<usize> {
        let n = self.g.num_vertices();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        let mut stack = vec![(0usize, 0usize)];
        depth[0] = 0;
        while let Some((v, i)) = stack.pop() {
            if let Some(&w) = self.g.neighbors(v).get(i) {
                stack.push((v, i + 1));
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    stack.push((w, 0));
                } else if w != parent[v] && depth[w] < depth[v] {
                    let mut cycle = vec![v];
                    let mut x = v;
                    while x != w {
                        x = parent[x];
                        cycle.push(x);
                    }
                    return cycle;
                }
            }
        }
        unreachable!("biconnected block without a cycle")
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.g.num_vertices();
        let mut out = Vec::new();
        let mut assigned = vec![false; n];
        for start in 0..n {
            if self.embedded_vertex[start] || assigned[start] {
                continue;
            }
            let mut inner = vec![start];
            let mut attachments = BTreeSet::new();
            assigned[start] = true;
            let mut i = 0;
            while i < inner.len() {
                let v = inner[i];
                i += 1;
                for &w in self.g.neighbors(v) {
                    if self.embedded_vertex[w] {
                        attachments.insert(w);
                    } else if !assigned[w] {
                        assigned[w] = true;
                        inner.push(w);
                    }
                }
            }
            out.push(Fragment {
                inner,
                attachments: attachments.into_iter().collect(),
            });
        }
        for (u, w) in self.g.edges() {
            if self.embedded_vertex[u]
                && self.embedded_vertex[w]
                && !self.embedded_edges.contains(&(u, w))
            {
                out.push(Fragment {
                    inner: Vec::new(),
                    attachments: vec![u, w],
                });
            }
        }
        out
    }

    fn admissible_faces(&self, attachments: &[usize]) -> Vec<usize> {
        let pivot = attachments
            .iter()
            .copied()
            .min_by_key(|&v| self.faces_of[v].len())
            .expect("fragments in a biconnected block have attachments");
        let mut faces = self.faces_of[pivot].clone();
        for &a in attachments {
            if a != pivot {
                faces.retain(|f| self.faces_of[a].contains(f));
            }
        }
        faces.sort_unstable();
        faces
    }

    /// Path between two distinct attachments through the fragment.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if frag.inner.is_empty() {
            return frag.attachments.clone();
        }
        let a = frag.attachments[0];
        let in_frag: HashSet<usize> = frag.inner.iter().copied().collect();
        let first = *self
            .g
            .neighbors(a)
            .iter()
            .find(|w| in_frag.contains(w))
            .expect("attachment touches its fragment");
        let mut prev = std::collections::HashMap::new();
        let mut queue = VecDeque::from([first]);
        prev.insert(first, usize::MAX);
        while let Some(v) = queue.pop_front() {
            if let Some(&b) = self
                .g
                .neighbors(v)
                .iter()
                .find(|&&w| w != a && self.embedded_vertex[w])
            {
                let mut path = vec![b];
                let mut x = v;
                while x != usize::MAX {
                    path.push(x);
                    x = prev[&x];
                }
                path.push(a);
                path.reverse();
                return path;
            }
            for &w in self.g.neighbors(v) {
                if in_frag.contains(&w) && !prev.contains_key(&w) {
                    prev.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        unreachable!("fragment of a biconnected block has two attachments")
    }

    fn embed_path(&mut self, face: usize, path: &[usize]) {
        for w in path.windows(2) {
            self.embedded_edges.insert(key(w[0], w[1]));
        }
        for &v in path {
            self.embedded_vertex[v] = true;
        }
        let a = path[0];
        let b = *path.last().unwrap();
        let interior = &path[1..path.len() - 1];
        let old = std::mem::take(&mut self.faces[face]);
        let ia = old.iter().position(|&v| v == a).unwrap();
        let ib = old.iter().position(|&v| v == b).unwrap();
        let k = old.len();

        let mut first = Vec::new();
        let mut i = ia;
        loop {
            first.push(old[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % k;
        }
        first.extend(interior.iter().rev());

        let mut second = Vec::new();
        let mut i = ib;
        loop {
            second.push(old[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % k;
        }
        second.extend(interior.iter());

        for &v in &old {
            self.faces_of[v].retain(|&f| f != face);
        }
        for &v in &first {
            self.faces_of[v].push(face);
        }
        self.faces[face] = first;
        self.add_face(second);
    }
}
