//! Planar monotone 3-SAT: formula model and text format, rectilinear layout
//! validation, and a brute-force satisfiability oracle.

mod corpus;
mod formula;
mod layout;
mod oracle;

pub use corpus::{enumerate_formulas, formula_corpus};
pub use formula::{parse_formula, Clause, Formula, FormulaError, Side};
pub use layout::{validate_layout, Layout, LayoutError};
pub use oracle::{sat_oracle, OracleLimit, MAX_ORACLE_VARS};
