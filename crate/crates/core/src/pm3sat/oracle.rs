use thiserror::Error;

use super::formula::Formula;

/// Largest formula the exhaustive oracle accepts.
pub const MAX_ORACLE_VARS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("brute-force oracle limited to {MAX_ORACLE_VARS} variables, formula has {0}")]
pub struct OracleLimit(pub usize);

/// Scans assignments as a binary counter (variable `i` is bit `i`, false
/// before true) and returns the first one satisfying every clause.
pub fn sat_oracle(formula: &Formula) -> Result<Option<Vec<bool>>, OracleLimit> {
    let n = formula.num_vars();
    if n > MAX_ORACLE_VARS {
        return Err(OracleLimit(n));
    }
    let mut assignment = vec![false; n];
    for k in 0u32..1 << n {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = k >> i & 1 == 1;
        }
        if formula.evaluate(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
