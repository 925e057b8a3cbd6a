use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A literal over variables numbered from 0. Displayed 1-based, as `x1`
/// or `¬x1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Literal {
        Literal {
            var,
            positive: false,
        }
    }

    /// From a DIMACS-style signed, 1-based integer.
    pub fn from_dimacs(x: i64) -> Option<Literal> {
        if x == 0 {
            return None;
        }
        let var = usize::try_from(x.unsigned_abs()).ok()? - 1;
        Some(Literal {
            var,
            positive: x > 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("¬")?;
        }
        write!(f, "x{}", self.var + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sat3Instance {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl Sat3Instance {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Sat3Instance {
        Sat3Instance { num_vars, clauses }
    }

    /// From DIMACS-style clauses such as `[[1, -2], [1, 2], [-1, 2]]`.
    pub fn from_dimacs(num_vars: usize, clauses: &[&[i64]]) -> Sat3Instance {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&x| Literal::from_dimacs(x).expect("non-zero"))
                    .collect()
            })
            .collect();
        Sat3Instance { num_vars, clauses }
    }

    /// A 3-literal clause whose literals share one sign.
    pub fn is_homogeneous(&self, clause: usize) -> bool {
        let c = &self.clauses[clause];
        c.len() == 3 && c.iter().all(|l| l.positive == c[0].positive)
    }

    /// True when some clause holds a variable together with its negation.
    pub fn has_complementary_clause(&self) -> bool {
        self.clauses.iter().any(|c| {
            c.iter()
                .any(|l| c.iter().any(|m| m.var == l.var && m.positive != l.positive))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyClause { clause: usize },
    ClauseTooLong { clause: usize, len: usize },
    RepeatedLiteral { clause: usize, literal: Literal },
    UnknownVariable { clause: usize, literal: Literal },
    PositiveCount { var: usize, count: usize },
    NegativeCount { var: usize, count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyClause { clause } => write!(f, "clause {} is empty", clause + 1),
            Violation::ClauseTooLong { clause, len } => {
                write!(
                    f,
                    "clause {} has {len} literals, at most 3 allowed",
                    clause + 1
                )
            }
            Violation::RepeatedLiteral { clause, literal } => {
                write!(f, "clause {} repeats {literal}", clause + 1)
            }
            Violation::UnknownVariable { clause, literal } => {
                write!(
                    f,
                    "clause {} uses undeclared variable in {literal}",
                    clause + 1
                )
            }
            Violation::PositiveCount { var, count } => {
                write!(
                    f,
                    "x{} occurs {count} times positively, expected 2",
                    var + 1
                )
            }
            Violation::NegativeCount { var, count } => {
                write!(f, "x{} occurs {count} times negated, expected 1", var + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the occurrence pattern: every variable twice positive and once
/// negated, 1 to 3 literals per clause, no literal repeated in a clause.
pub fn validate_sat3(inst: &Sat3Instance) -> ValidationReport {
    let n = inst.num_vars;
    let mut positive = vec![0; n];
    let mut negative = vec![0; n];
    let mut violations = Vec::new();
    for (ci, clause) in inst.clauses.iter().enumerate() {
        if clause.is_empty() {
            violations.push(Violation::EmptyClause { clause: ci });
        }
        if clause.len() > 3 {
            violations.push(Violation::ClauseTooLong {
                clause: ci,
                len: clause.len(),
            });
        }
        for (j, &lit) in clause.iter().enumerate() {
            if clause[..j].contains(&lit) {
                violations.push(Violation::RepeatedLiteral {
                    clause: ci,
                    literal: lit,
                });
                continue;
            }
            if lit.var >= n {
                violations.push(Violation::UnknownVariable {
                    clause: ci,
                    literal: lit,
                });
                continue;
            }
            if lit.positive {
                positive[lit.var] += 1;
            } else {
                negative[lit.var] += 1;
            }
        }
    }
    for var in 0..n {
        if positive[var] != 2 {
            violations.push(Violation::PositiveCount {
                var,
                count: positive[var],
            });
        }
        if negative[var] != 1 {
            violations.push(Violation::NegativeCount {
                var,
                count: negative[var],
            });
        }
    }
    ValidationReport {
        positive,
        negative,
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Assignment {
        Assignment { values }
    }

    pub fn satisfies(&self, inst: &Sat3Instance) -> bool {
        self.values.len() == inst.num_vars
            && inst
                .clauses
                .iter()
                .all(|c| c.iter().any(|l| self.values[l.var] == l.positive))
    }
}

/// Some satisfying assignment, by trying all 2^n.
pub fn brute_sat(inst: &Sat3Instance) -> Option<Assignment> {
    let n = inst.num_vars;
    assert!(n < 32, "exhaustive SAT is limited to 31 variables");
    (0u32..(1 << n))
        .map(|bits| Assignment::new((0..n).map(|i| bits >> i & 1 == 1).collect()))
        .find(|a| a.satisfies(inst))
}

/// Every valid instance on `n` variables, up to the order of clauses and of
/// literals within a clause. Clauses are sorted, and so is the clause list.
pub fn enumerate_instances(n: usize) -> Vec<Sat3Instance> {
    let mut literals = Vec::with_capacity(3 * n);
    for var in 0..n {
        literals.extend([Literal::pos(var), Literal::pos(var), Literal::neg(var)]);
    }
    let mut found = alloc::collections::BTreeSet::new();
    let mut blocks: Vec<Vec<Literal>> = Vec::new();
    fn place(
        literals: &[Literal],
        i: usize,
        blocks: &mut Vec<Vec<Literal>>,
        found: &mut alloc::collections::BTreeSet<Vec<Vec<Literal>>>,
    ) {
        if i == literals.len() {
            let mut clauses: Vec<Vec<Literal>> = blocks
                .iter()
                .map(|b| {
                    let mut b = b.clone();
                    b.sort_unstable();
                    b
                })
                .collect();
            clauses.sort_unstable();
            found.insert(clauses);
            return;
        }
        let lit = literals[i];
        for j in 0..blocks.len() {
            if blocks[j].len() < 3 && !blocks[j].contains(&lit) {
                blocks[j].push(lit);
                place(literals, i + 1, blocks, found);
                blocks[j].pop();
            }
        }
        blocks.push(vec![lit]);
        place(literals, i + 1, blocks, found);
        blocks.pop();
    }
    place(&literals, 0, &mut blocks, &mut found);
    found
        .into_iter()
        .map(|clauses| Sat3Instance::new(n, clauses))
        .collect()
}
