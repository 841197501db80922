//! End-to-end check that a formula and its compiled instance agree: the
//! solver's verdict must match the SAT oracle, and a witness must decode to
//! a satisfying assignment.

use thiserror::Error;

use crate::compile::{compile_formula, decode, CompileError, Compiled, DecodeError};
use crate::pm3sat::{sat_oracle, Formula, OracleLimit};
use crate::reach::verify_orientation;
use crate::solver::{solve_with, SolveResult, SolverOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error("formula has {0} variables, too many for the SAT oracle")]
    Oracle(usize),
}

impl From<OracleLimit> for EquivalenceError {
    fn from(e: OracleLimit) -> Self {
        EquivalenceError::Oracle(e.0)
    }
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub compiled: Compiled,
    /// First satisfying assignment in oracle order, if any.
    pub oracle: Option<Vec<bool>>,
    pub result: SolveResult,
    /// Witness verification by reachability; `None` when unsatisfiable.
    pub witness_verified: Option<bool>,
    pub decoded: Option<Result<Vec<bool>, DecodeError>>,
    pub decoded_satisfies: Option<bool>,
}

impl EquivalenceReport {
    /// Verdicts agree and any witness verifies and decodes to a model.
    pub fn agrees(&self) -> bool {
        if self.oracle.is_some() != self.result.is_sat() {
            return false;
        }
        !self.result.is_sat() || (self.witness_verified == Some(true) && self.decoded_satisfies == Some(true))
    }
}

pub fn check_equivalence(formula: &Formula, options: SolverOptions) -> Result<EquivalenceReport, EquivalenceError> {
    let oracle = sat_oracle(formula)?;
    let compiled = compile_formula(formula)?;
    let result = solve_with(&compiled.instance, options);
    let (witness_verified, decoded, decoded_satisfies) = match &result.witness {
        Some(w) => {
            let verified = verify_orientation(&compiled.instance, w).unwrap_or(false);
            let decoded = decode(&compiled.metadata, w);
            let satisfies = decoded.as_ref().is_ok_and(|a| formula.evaluate(a));
            (Some(verified), Some(decoded), Some(satisfies))
        }
        None => (None, None, None),
    };
    Ok(EquivalenceReport {
        compiled,
        oracle,
        result,
        witness_verified,
        decoded,
        decoded_satisfies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pm3sat::parse_formula;

    #[test]
    fn minimal_formula_agrees() {
        let f = parse_formula("vars: X Y\npos: X Y\nneg: X Y\n").unwrap();
        let r = check_equivalence(&f, SolverOptions::default()).unwrap();
        assert!(r.result.is_sat());
        assert!(r.agrees());
    }

    #[test]
    fn pairwise_unsat_agrees() {
        let f = parse_formula(
            "vars: A B C\npos: A B\npos: B C\npos: A C\nneg: A B\nneg: B C\nneg: A C\n",
        )
        .unwrap();
        assert!(validate_ok(&f));
        let r = check_equivalence(&f, SolverOptions::default()).unwrap();
        assert_eq!(r.oracle, None);
        assert!(!r.result.is_sat());
        assert!(r.agrees());
    }

    fn validate_ok(f: &Formula) -> bool {
        crate::pm3sat::validate_layout(f).is_ok()
    }
}
