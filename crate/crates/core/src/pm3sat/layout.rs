//! Rectilinear layout of a monotone formula: variables on a horizontal line,
//! positive clauses as nested bars above it, negative clauses below.
//!
//! Two same-side clauses must have spans with disjoint interiors, or be
//! nested. When nested, the outer clause may not put a leg strictly inside
//! the inner clause's span; the inner clause's bar would be crossed.

use std::fmt;

use thiserror::Error;

use super::formula::{Clause, Formula, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("clauses {first} and {second} cross at variable {variable_name}")]
pub struct LayoutError {
    pub first: usize,
    pub second: usize,
    pub variable: usize,
    pub variable_name: String,
}

/// Nesting depths and per-variable attachment order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    depth: Vec<usize>,
    attachments: Vec<[Vec<usize>; 2]>,
}

impl Layout {
    /// 1 for a clause with no clause nested under its bar.
    pub fn depth(&self, clause: usize) -> usize {
        self.depth[clause]
    }

    pub fn depths(&self) -> &[usize] {
        &self.depth
    }

    /// Clauses attaching to `var` from `side`, ordered left to right by the
    /// horizontal position of their legs on the variable box.
    pub fn attachments(&self, var: usize, side: Side) -> &[usize] {
        &self.attachments[var][side.index()]
    }

    /// Sorted depths of the clauses on one side.
    pub fn depth_multiset(&self, formula: &Formula, side: Side) -> Vec<usize> {
        let mut d: Vec<usize> = formula
            .clauses()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.side() == side)
            .map(|(i, _)| self.depth[i])
            .collect();
        d.sort_unstable();
        d
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "depths {:?}", self.depth)
    }
}

fn interior_legs(c: &Clause, lo: usize, hi: usize) -> Option<usize> {
    c.vars().iter().copied().find(|&v| lo < v && v < hi)
}

pub fn validate_layout(formula: &Formula) -> Result<Layout, LayoutError> {
    let clauses = formula.clauses();
    let m = clauses.len();
    // inside[i] lists the clauses nested directly or indirectly under clause i
    let mut inside: Vec<Vec<usize>> = vec![Vec::new(); m];
    let crossing = |first: usize, second: usize, variable: usize| LayoutError {
        first,
        second,
        variable,
        variable_name: formula.name(variable).to_string(),
    };

    for i in 0..m {
        for j in i + 1..m {
            let (ci, cj) = (&clauses[i], &clauses[j]);
            if ci.side() != cj.side() {
                continue;
            }
            let (a, b) = (ci.leftmost(), ci.rightmost());
            let (c, d) = (cj.leftmost(), cj.rightmost());
            if b <= c || d <= a {
                continue;
            }
            let (outer, inner) = if (a, b) == (c, d) {
                match (interior_legs(ci, a, b), interior_legs(cj, c, d)) {
                    (None, None) => (j, i),
                    (None, Some(_)) => (i, j),
                    (Some(_), None) => (j, i),
                    (Some(v), Some(_)) => return Err(crossing(i, j, v)),
                }
            } else if a <= c && d <= b {
                (i, j)
            } else if c <= a && b <= d {
                (j, i)
            } else {
                let v = if a < c { c } else { a };
                return Err(crossing(i, j, v));
            };
            let (lo, hi) = (clauses[inner].leftmost(), clauses[inner].rightmost());
            if let Some(v) = interior_legs(&clauses[outer], lo, hi) {
                return Err(crossing(i, j, v));
            }
            inside[outer].push(inner);
        }
    }

    let mut depth = vec![0; m];
    let mut done = vec![false; m];
    let mut pending: Vec<usize> = (0..m).collect();
    while !pending.is_empty() {
        let before = pending.len();
        pending.retain(|&i| {
            if inside[i].iter().all(|&k| done[k]) {
                depth[i] = 1 + inside[i].iter().map(|&k| depth[k]).max().unwrap_or(0);
                done[i] = true;
                false
            } else {
                true
            }
        });
        assert!(pending.len() < before, "cyclic nesting relation");
    }

    let mut attachments = vec![[Vec::new(), Vec::new()]; formula.num_vars()];
    for (i, c) in clauses.iter().enumerate() {
        for &v in c.vars() {
            attachments[v][c.side().index()].push(i);
        }
    }
    for (v, sides) in attachments.iter_mut().enumerate() {
        for list in sides.iter_mut() {
            // Bars ending at v: inner ones attach further left.
            // Bars starting at v: outer ones attach further left.
            // A middle leg sits between the two groups.
            list.sort_by_key(|&i| {
                let c = &clauses[i];
                if c.rightmost() == v {
                    (0, depth[i], i)
                } else if c.leftmost() == v {
                    (2, usize::MAX - depth[i], i)
                } else {
                    (1, 0, i)
                }
            });
        }
    }

    Ok(Layout { depth, attachments })
}
