//! DIMACS CNF input: `c` comment lines, a `p cnf <vars> <clauses>` header,
//! and clauses of signed integers each terminated by `0`.

use edgedom_core::reduction::{validate_sat3, Literal, Sat3Instance, Violation};

use crate::format::ParseError;

#[derive(Clone, Debug)]
pub struct Cnf {
    pub instance: Sat3Instance,
    /// Line on which each clause starts.
    pub clause_lines: Vec<usize>,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

pub fn parse_dimacs(text: &str) -> Result<Cnf, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut clause_lines = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut current_line = 0;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        last_line = line;
        if trimmed.starts_with('p') {
            if header.is_some() {
                return err(line, "second problem line");
            }
            let parts: Vec<&str> = trimmed.split_whitespace().collect();
            let [_, "cnf", n, m] = parts.as_slice() else {
                return err(line, "expected `p cnf <variables> <clauses>`");
            };
            let (Ok(n), Ok(m)) = (n.parse(), m.parse()) else {
                return err(line, "header counts must be non-negative integers");
            };
            header = Some((line, n, m));
            continue;
        }
        let Some((_, n, _)) = header else {
            return err(line, "clause before the `p cnf` header");
        };
        for tok in trimmed.split_whitespace() {
            let Ok(x) = tok.parse::<i64>() else {
                return err(line, format!("{tok:?} is not an integer"));
            };
            if x == 0 {
                clauses.push(std::mem::take(&mut current));
                clause_lines.push(current_line);
                continue;
            }
            if current.is_empty() {
                current_line = line;
            }
            let lit = Literal::from_dimacs(x).expect("non-zero");
            if lit.var >= n {
                return err(
                    line,
                    format!("literal {x} exceeds the {n} declared variables"),
                );
            }
            current.push(lit);
        }
    }
    let Some((header_line, n, m)) = header else {
        return err(last_line.max(1), "missing `p cnf` header");
    };
    if !current.is_empty() {
        return err(current_line, "last clause is not terminated by 0");
    }
    if clauses.len() != m {
        return err(
            header_line,
            format!("header declares {m} clauses, found {}", clauses.len()),
        );
    }
    Ok(Cnf {
        instance: Sat3Instance::new(n, clauses),
        clause_lines,
    })
}

/// Occurrence-pattern violations, each prefixed with the lines involved.
pub fn violations_with_lines(cnf: &Cnf) -> Vec<String> {
    let inst = &cnf.instance;
    let lines_of = |var: usize, positive: bool| -> Vec<String> {
        inst.clauses
            .iter()
            .zip(&cnf.clause_lines)
            .filter(|(c, _)| c.iter().any(|l| l.var == var && l.positive == positive))
            .map(|(_, line)| line.to_string())
            .collect()
    };
    validate_sat3(inst)
        .violations
        .iter()
        .map(|v| match *v {
            Violation::EmptyClause { clause }
            | Violation::ClauseTooLong { clause, .. }
            | Violation::RepeatedLiteral { clause, .. }
            | Violation::UnknownVariable { clause, .. } => {
                format!("line {}: {v}", cnf.clause_lines[clause])
            }
            Violation::PositiveCount { var, .. } => {
                format!("lines [{}]: {v}", lines_of(var, true).join(", "))
            }
            Violation::NegativeCount { var, .. } => {
                format!("lines [{}]: {v}", lines_of(var, false).join(", "))
            }
        })
        .collect()
}

pub fn write_dimacs(inst: &Sat3Instance) -> String {
    let mut out = format!("p cnf {} {}\n", inst.num_vars, inst.clauses.len());
    for c in &inst.clauses {
        for l in c {
            out.push_str(&l.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}
