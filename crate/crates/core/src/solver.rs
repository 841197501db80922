//! Exact Steiner Orientation solver: depth-first search over edge
//! directions with relaxed-reachability pruning and forced-direction
//! propagation.
//!
//! Treating unset edges as bidirectional can only add paths, so a partial
//! orientation whose relaxation disconnects some pair has no solving
//! extension. Propagation applies the same test one edge at a time: if one
//! direction disconnects a pair, the other direction is forced.

use crate::error::GraphError;
use crate::graph::{EdgeId, EdgeState, Instance, Orientation};
use crate::reach::Adjacency;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    pub propagate: bool,
    /// Worker threads; 1 runs the plain sequential search.
    pub threads: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            propagate: true,
            threads: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    /// Edge directions fixed by propagation rather than by branching.
    pub propagations: u64,
    pub peak_depth: usize,
}

impl SolveStats {
    fn merge(&mut self, other: SolveStats) {
        self.nodes += other.nodes;
        self.propagations += other.propagations;
        self.peak_depth = self.peak_depth.max(other.peak_depth);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Sat,
    Unsat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Total orientation connecting every pair; present iff `Sat`.
    pub witness: Option<Orientation>,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        self.status == SolveStatus::Sat
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Propagation {
    Fixpoint { orientation: Orientation, forced: usize },
    Conflict,
}

pub struct Solver<'a> {
    instance: &'a Instance,
    adj: Adjacency,
    options: SolverOptions,
}

impl<'a> Solver<'a> {
    pub fn new(instance: &'a Instance, options: SolverOptions) -> Self {
        Solver {
            instance,
            adj: Adjacency::new(instance.graph()),
            options,
        }
    }

    pub fn relaxed_feasible(&self, partial: &Orientation) -> bool {
        let mut scratch = Vec::new();
        self.instance
            .pairs()
            .iter()
            .all(|p| self.adj.reaches(partial.states(), p.source, p.target, true, &mut scratch))
    }

    /// Relaxed reachable sets of all pair sources, or `None` if some pair is
    /// already disconnected.
    fn relaxed_reach(&self, states: &[EdgeState]) -> Option<Vec<Vec<bool>>> {
        let mut sets = Vec::with_capacity(self.instance.pairs().len());
        for p in self.instance.pairs() {
            let mut seen = Vec::new();
            self.adj.sweep(states, p.source, true, None, &mut seen);
            if !seen[p.target.0] {
                return None;
            }
            sets.push(seen);
        }
        Some(sets)
    }

    /// Whether fixing `edge` to `dir` keeps every pair relaxed-connected.
    /// Only pairs whose (over-approximated) reach contains the tail of the
    /// traversal being removed can lose their path.
    fn direction_survives(
        &self,
        states: &mut [EdgeState],
        reach: &[Vec<bool>],
        edge: EdgeId,
        dir: EdgeState,
        scratch: &mut Vec<bool>,
    ) -> bool {
        let (u, w) = self.instance.graph().edge(edge);
        let blocked_tail = if dir == EdgeState::Forward { w } else { u };
        states[edge.0] = dir;
        let ok = self
            .instance
            .pairs()
            .iter()
            .zip(reach)
            .filter(|(_, r)| r[blocked_tail.0])
            .all(|(p, _)| self.adj.reaches(states, p.source, p.target, true, scratch));
        states[edge.0] = EdgeState::Unset;
        ok
    }

    /// Forces directions to a fixpoint. The fixpoint does not depend on the
    /// scan order: every forced direction holds in all solving extensions.
    pub fn propagate(&self, partial: &Orientation) -> Propagation {
        let mut states = partial.states().to_vec();
        let mut forced = 0;
        let mut scratch = Vec::new();
        loop {
            // Sets computed here only shrink as edges get fixed below, so they
            // stay valid over-approximations for the whole sweep.
            let Some(reach) = self.relaxed_reach(&states) else {
                return Propagation::Conflict;
            };
            let mut changed = false;
            for e in 0..states.len() {
                if states[e] != EdgeState::Unset {
                    continue;
                }
                let edge = EdgeId(e);
                let fwd = self.direction_survives(&mut states, &reach, edge, EdgeState::Forward, &mut scratch);
                let rev = self.direction_survives(&mut states, &reach, edge, EdgeState::Reverse, &mut scratch);
                match (fwd, rev) {
                    (false, false) => return Propagation::Conflict,
                    (true, false) => states[e] = EdgeState::Forward,
                    (false, true) => states[e] = EdgeState::Reverse,
                    (true, true) => continue,
                }
                forced += 1;
                changed = true;
            }
            if !changed {
                return Propagation::Fixpoint {
                    orientation: Orientation::from_states(states),
                    forced,
                };
            }
        }
    }

    pub fn solve(&self) -> SolveResult {
        let root = Orientation::unset(self.instance.num_edges());
        let mut stats = SolveStats::default();
        let witness = if self.options.threads > 1 {
            let split = split_depth(self.options.threads);
            match rayon::ThreadPoolBuilder::new()
                .num_threads(self.options.threads)
                .build()
            {
                Ok(pool) => pool.install(|| self.search(root, 0, split, &mut stats)),
                Err(_) => self.search(root, 0, 0, &mut stats),
            }
        } else {
            self.search(root, 0, 0, &mut stats)
        };
        SolveResult {
            status: if witness.is_some() {
                SolveStatus::Sat
            } else {
                SolveStatus::Unsat
            },
            witness,
            stats,
        }
    }

    fn search(
        &self,
        partial: Orientation,
        depth: usize,
        split: usize,
        stats: &mut SolveStats,
    ) -> Option<Orientation> {
        stats.nodes += 1;
        stats.peak_depth = stats.peak_depth.max(depth);
        if !self.relaxed_feasible(&partial) {
            return None;
        }
        let partial = if self.options.propagate {
            match self.propagate(&partial) {
                Propagation::Conflict => return None,
                Propagation::Fixpoint { orientation, forced } => {
                    stats.propagations += forced as u64;
                    orientation
                }
            }
        } else {
            partial
        };
        // A total orientation that is relaxed-feasible connects every pair.
        let Some(edge) = partial.first_unset() else {
            return Some(partial);
        };
        let child = |dir| {
            let mut o = partial.clone();
            o.set(edge, dir);
            o
        };
        if depth < split {
            // Both subtrees run to completion, so the reported witness and
            // counters do not depend on scheduling.
            let (mut fs, mut rs) = (SolveStats::default(), SolveStats::default());
            let (fwd, rev) = rayon::join(
                || self.search(child(EdgeState::Forward), depth + 1, split, &mut fs),
                || self.search(child(EdgeState::Reverse), depth + 1, split, &mut rs),
            );
            stats.merge(fs);
            stats.merge(rs);
            return fwd.or(rev);
        }
        self.search(child(EdgeState::Forward), depth + 1, split, stats)
            .or_else(|| self.search(child(EdgeState::Reverse), depth + 1, split, stats))
    }
}

fn split_depth(threads: usize) -> usize {
    (usize::BITS - (threads - 1).leading_zeros()) as usize + 2
}

/// True iff every pair stays connected with unset edges usable both ways.
pub fn relaxed_feasible(instance: &Instance, partial: &Orientation) -> Result<bool, GraphError> {
    partial.check_len(instance.graph())?;
    Ok(Solver::new(instance, SolverOptions::default()).relaxed_feasible(partial))
}

pub fn propagate(instance: &Instance, partial: &Orientation) -> Result<Propagation, GraphError> {
    partial.check_len(instance.graph())?;
    Ok(Solver::new(instance, SolverOptions::default()).propagate(partial))
}

pub fn solve(instance: &Instance) -> SolveResult {
    solve_with(instance, SolverOptions::default())
}

pub fn solve_with(instance: &Instance, options: SolverOptions) -> SolveResult {
    Solver::new(instance, options).solve()
}
