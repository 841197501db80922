use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Which side of the variable row a monotone clause lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// All literals unnegated; drawn above the variables.
    Positive,
    /// All literals negated; drawn below the variables.
    Negative,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::Positive => 0,
            Side::Negative => 1,
        }
    }

    pub fn sign(self) -> char {
        match self {
            Side::Positive => '+',
            Side::Negative => '-',
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Side::Positive => "pos",
            Side::Negative => "neg",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<FormulaError>,
    },
    #[error("non-monotone clause: positive and negative literals mixed")]
    NonMonotone,
    #[error("clause has {0} variables, expected 2 or 3")]
    ClauseSize(usize),
    #[error("variable {0} appears twice in one clause")]
    DuplicateVariable(String),
    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("variable {name} never occurs {}", if *.side == Side::Positive { "positively" } else { "negatively" })]
    MissingOccurrence { name: String, side: Side },
    #[error("invalid variable name {0:?}")]
    InvalidName(String),
    #[error("variable {0} declared twice")]
    DuplicateDeclaration(String),
}

impl FormulaError {
    fn at(self, line: usize) -> FormulaError {
        FormulaError::AtLine {
            line,
            source: Box::new(self),
        }
    }
}

/// A monotone clause: 2 or 3 distinct variables, all on one side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clause {
    side: Side,
    vars: Vec<usize>,
}

impl Clause {
    /// Variables are stored sorted ascending.
    pub fn new(side: Side, mut vars: Vec<usize>) -> Result<Clause, FormulaError> {
        if !(2..=3).contains(&vars.len()) {
            return Err(FormulaError::ClauseSize(vars.len()));
        }
        vars.sort_unstable();
        if let Some(w) = vars.windows(2).find(|w| w[0] == w[1]) {
            return Err(FormulaError::DuplicateVariable(format!("#{}", w[0] + 1)));
        }
        Ok(Clause { side, vars })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn leftmost(&self) -> usize {
        self.vars[0]
    }

    pub fn rightmost(&self) -> usize {
        *self.vars.last().unwrap()
    }

    pub fn is_satisfied(&self, assignment: &[bool]) -> bool {
        let want = self.side == Side::Positive;
        self.vars.iter().any(|&v| assignment[v] == want)
    }
}

/// Planar monotone 3-SAT input: named variables in layout order and monotone
/// clauses. Every variable occurs at least once on each side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Formula {
    names: Vec<String>,
    clauses: Vec<Clause>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Formula {
    pub fn new(names: Vec<String>, clauses: Vec<Clause>) -> Result<Formula, FormulaError> {
        let mut seen = HashMap::new();
        for n in &names {
            if !valid_name(n) {
                return Err(FormulaError::InvalidName(n.clone()));
            }
            if seen.insert(n.as_str(), ()).is_some() {
                return Err(FormulaError::DuplicateDeclaration(n.clone()));
            }
        }
        let num_vars = names.len();
        let mut occurs = vec![[false; 2]; num_vars];
        for c in &clauses {
            for &v in c.vars() {
                if v >= num_vars {
                    return Err(FormulaError::VariableOutOfRange { index: v, num_vars });
                }
                occurs[v][c.side().index()] = true;
            }
        }
        for (v, occ) in occurs.iter().enumerate() {
            for side in [Side::Positive, Side::Negative] {
                if !occ[side.index()] {
                    return Err(FormulaError::MissingOccurrence {
                        name: names[v].clone(),
                        side,
                    });
                }
            }
        }
        Ok(Formula { names, clauses })
    }

    /// Variables named `X1..Xn`.
    pub fn with_default_names(num_vars: usize, clauses: Vec<Clause>) -> Result<Formula, FormulaError> {
        Formula::new((1..=num_vars).map(|i| format!("X{i}")).collect(), clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.num_vars(), "assignment length");
        self.clauses.iter().all(|c| c.is_satisfied(assignment))
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn incidence_count(&self) -> usize {
        self.clauses.iter().map(Clause::len).sum()
    }
}

/// Text form: `vars:` line, then `pos:`/`neg:` clause lines, variables in
/// declaration order and clause variables by position.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.names.join(" "))?;
        for c in &self.clauses {
            write!(f, "{}:", c.side().keyword())?;
            for &v in c.vars() {
                write!(f, " {}", self.names[v])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - line.as_ptr() as usize + 1, tok))
}

/// Parses the formula text format. In `neg:` lines a leading `~` on a name is
/// accepted but must then be used on every literal of the line.
pub fn parse_formula(text: &str) -> Result<Formula, FormulaError> {
    let mut names: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut clauses = Vec::new();
    let mut clause_lines = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let (head, rest) = match content.find(':') {
            Some(i) => (&content[..i], &content[i + 1..]),
            None => {
                let col = content.len() - content.trim_start().len() + 1;
                return Err(FormulaError::Syntax {
                    line: line_no,
                    column: col,
                    message: "expected `vars:`, `pos:` or `neg:`".into(),
                });
            }
        };
        let offset = head.len() + 1;
        let keyword = head.trim();
        match keyword {
            "vars" => {
                if names.is_some() {
                    return Err(FormulaError::Syntax {
                        line: line_no,
                        column: 1,
                        message: "second `vars:` line".into(),
                    });
                }
                let mut list = Vec::new();
                for (col, tok) in tokens(rest) {
                    if !valid_name(tok) {
                        return Err(FormulaError::Syntax {
                            line: line_no,
                            column: offset + col,
                            message: format!("invalid variable name {tok:?}"),
                        });
                    }
                    if index.insert(tok.to_string(), list.len()).is_some() {
                        return Err(FormulaError::DuplicateDeclaration(tok.into()).at(line_no));
                    }
                    list.push(tok.to_string());
                }
                names = Some(list);
            }
            "pos" | "neg" => {
                if names.is_none() {
                    return Err(FormulaError::Syntax {
                        line: line_no,
                        column: 1,
                        message: "clause before `vars:` line".into(),
                    });
                }
                let side = if keyword == "pos" { Side::Positive } else { Side::Negative };
                let mut vars = Vec::new();
                let mut tilde = Vec::new();
                for (col, tok) in tokens(rest) {
                    let (negated, name) = match tok.strip_prefix('~') {
                        Some(n) => (true, n),
                        None => (false, tok),
                    };
                    let Some(&v) = index.get(name) else {
                        return Err(FormulaError::Syntax {
                            line: line_no,
                            column: offset + col,
                            message: format!("undeclared variable {name:?}"),
                        });
                    };
                    if vars.contains(&v) {
                        return Err(FormulaError::DuplicateVariable(name.into()).at(line_no));
                    }
                    vars.push(v);
                    tilde.push(negated);
                }
                let mixed = tilde.iter().any(|&t| t != tilde[0]);
                if (side == Side::Positive && tilde.iter().any(|&t| t)) || mixed {
                    return Err(FormulaError::NonMonotone.at(line_no));
                }
                clauses.push(Clause::new(side, vars).map_err(|e| e.at(line_no))?);
                clause_lines.push(line_no);
            }
            other => {
                return Err(FormulaError::Syntax {
                    line: line_no,
                    column: content.find(other).unwrap_or(0) + 1,
                    message: format!("unknown keyword {other:?}"),
                });
            }
        }
    }
    let names = names.ok_or(FormulaError::Syntax {
        line: 1,
        column: 1,
        message: "missing `vars:` line".into(),
    })?;
    Formula::new(names, clauses)
}
