//! Fixtures shared by the benchmarks.

use steiner_core::compile::{compile_formula, Compiled};
use steiner_core::pm3sat::parse_formula;

pub const APPENDIX_FORMULA: &str = "vars: X Y Z W\npos: X Y\nneg: X Z W\npos: Y Z W\nneg: X Y Z\n";

/// A chain of `n` variables with a positive and a negative 2-clause on each
/// neighboring pair; satisfiable by alternating values.
pub fn ladder_formula(n: usize) -> String {
    let names: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    let mut text = format!("vars: {}\n", names.join(" "));
    for w in names.windows(2) {
        text.push_str(&format!("pos: {} {}\nneg: {} {}\n", w[0], w[1], w[0], w[1]));
    }
    text
}

pub fn compiled(text: &str) -> Compiled {
    compile_formula(&parse_formula(text).expect("fixture parses")).expect("fixture has a valid layout")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_compile() {
        assert_eq!(compiled(APPENDIX_FORMULA).instance.pairs().len(), 78);
        assert_eq!(compiled(&ladder_formula(4)).metadata.variables().len(), 4);
    }
}
