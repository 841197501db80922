//! Exhaustive enumeration of small planar monotone formulas.

use std::collections::BTreeSet;

use super::formula::{Clause, Formula, Side};
use super::layout::validate_layout;

fn subsets_of_size(n: usize, min: usize, max: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| (min..=max).contains(&s.len()))
        .collect()
}

/// Every formula over `num_vars` variables with between 2 and `max_clauses`
/// distinct clauses that satisfies the formula invariants and has a valid
/// layout. Clause sets are canonical (sorted), so no formula repeats.
pub fn enumerate_formulas(num_vars: usize, max_clauses: usize) -> Vec<Formula> {
    let mut candidates = Vec::new();
    for side in [Side::Positive, Side::Negative] {
        for vars in subsets_of_size(num_vars, 2, 3) {
            candidates.push(Clause::new(side, vars).expect("2 or 3 distinct variables"));
        }
    }
    candidates.sort();

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(&candidates, 0, max_clauses, num_vars, &mut chosen, &mut out);
    out
}

fn extend(
    candidates: &[Clause],
    from: usize,
    budget: usize,
    num_vars: usize,
    chosen: &mut Vec<Clause>,
    out: &mut Vec<Formula>,
) {
    if let Ok(f) = Formula::with_default_names(num_vars, chosen.clone()) {
        if validate_layout(&f).is_ok() {
            out.push(f);
        }
    }
    if chosen.len() == budget {
        return;
    }
    for i in from..candidates.len() {
        chosen.push(candidates[i].clone());
        extend(candidates, i + 1, budget, num_vars, chosen, out);
        chosen.pop();
    }
}

/// Union of [`enumerate_formulas`] over a range of variable counts.
pub fn formula_corpus(vars: std::ops::RangeInclusive<usize>, max_clauses: usize) -> Vec<Formula> {
    let mut seen = BTreeSet::new();
    vars.flat_map(|n| enumerate_formulas(n, max_clauses))
        .filter(|f| seen.insert(f.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_variables_have_one_formula() {
        let fs = enumerate_formulas(2, 4);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].to_string(), "vars: X1 X2\npos: X1 X2\nneg: X1 X2\n");
    }

    #[test]
    fn three_variable_count() {
        // Covering families of {12,13,23,123} per side: 1 of size one, 6 of
        // size two, 4 of size three, 1 of size four. With at most four
        // clauses: 1*1 + 2*(1*6) + 2*(1*4) + 6*6 = 57. Every such clause set
        // happens to be layout-valid.
        assert_eq!(enumerate_formulas(3, 4).len(), 57);
    }

    #[test]
    fn corpus_is_distinct_and_valid() {
        let fs = formula_corpus(2..=3, 4);
        assert_eq!(fs.len(), 58);
        for f in &fs {
            assert!(validate_layout(f).is_ok());
            assert!(f.clauses().len() <= 4);
        }
    }

    #[test]
    fn four_variables_include_rejections() {
        let all = enumerate_formulas(4, 4);
        assert!(!all.is_empty());
        // {1,3} and {2,4} on one side never both appear
        for f in &all {
            for side in [Side::Positive, Side::Negative] {
                let has = |v: &[usize]| f.clauses().iter().any(|c| c.side() == side && c.vars() == v);
                assert!(!(has(&[0, 2]) && has(&[1, 3])));
            }
        }
    }
}
