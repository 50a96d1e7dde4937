//! Exhaustive enumeration of constrained operation spaces and machine
//! re-verification of the finite-chain theorems at small scales.

mod suites;

pub use suites::{run_suite, suite_names, SuiteOptions, SuiteReport};

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::chain::FiniteChain;
use crate::error::{Error, Result};
use crate::properties::{is_associative, neutral_elements};
use crate::table::{decode_tuple, encode_tuple, table_size, OpTable, TupleCode};

/// Structural restrictions on the searched operation space. Quasitriviality
/// restricts each cell's candidates to its argument values, symmetry
/// collapses cells to multiset representatives, idempotency forces the
/// diagonal, monotonicity is enforced by pruning during the search, and
/// has-neutral is applied as a post-filter on complete tables.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Constraint {
    pub quasitrivial: bool,
    pub symmetric: bool,
    pub nondecreasing: bool,
    pub idempotent: bool,
    pub has_neutral: bool,
}

impl Constraint {
    pub const NONE: Constraint = Constraint {
        quasitrivial: false,
        symmetric: false,
        nondecreasing: false,
        idempotent: false,
        has_neutral: false,
    };
    pub const QT: Constraint = Constraint {
        quasitrivial: true,
        ..Constraint::NONE
    };
    pub const QT_SYM: Constraint = Constraint {
        quasitrivial: true,
        symmetric: true,
        ..Constraint::NONE
    };
    pub const QT_SYM_ND: Constraint = Constraint {
        quasitrivial: true,
        symmetric: true,
        nondecreasing: true,
        ..Constraint::NONE
    };
    pub const IDEMPOTENT: Constraint = Constraint {
        idempotent: true,
        ..Constraint::NONE
    };

    /// Parses `+`-separated flags: `qt`, `sym`, `nd`, `idem`, `neutral`,
    /// or `all` (no restriction).
    pub fn parse(s: &str) -> Result<Constraint> {
        let mut c = Constraint::NONE;
        for token in s.split('+') {
            match token.trim() {
                "all" | "" => {}
                "qt" => c.quasitrivial = true,
                "sym" => c.symmetric = true,
                "nd" => c.nondecreasing = true,
                "idem" => c.idempotent = true,
                "neutral" => c.has_neutral = true,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown constraint flag `{other}` (expected qt, sym, nd, idem, neutral, all)"
                    )))
                }
            }
        }
        Ok(c)
    }
}

impl std::fmt::Display for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.quasitrivial {
            parts.push("qt");
        }
        if self.symmetric {
            parts.push("sym");
        }
        if self.nondecreasing {
            parts.push("nd");
        }
        if self.idempotent {
            parts.push("idem");
        }
        if self.has_neutral {
            parts.push("neutral");
        }
        if parts.is_empty() {
            f.write_str("all")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Default cap on the candidate-table estimate explored by one enumeration.
pub const DEFAULT_ENUMERATION_GUARD: u64 = 100_000_000;

struct Cell {
    /// Codes sharing this cell's value (the multiset orbit under symmetry,
    /// otherwise just the cell itself).
    orbit: Vec<usize>,
    candidates: Vec<u32>,
}

fn build_cells(chain: FiniteChain, n: usize, constraint: Constraint) -> Result<Vec<Cell>> {
    let size = table_size(chain, n)?;
    let k = chain.k();
    // group codes by multiset representative (the sorted tuple's code)
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for code in 0..size {
        let tuple = decode_tuple(chain, n, TupleCode(code))?;
        let canon = if constraint.symmetric {
            let mut sorted = tuple.clone();
            sorted.sort_unstable();
            encode_tuple(chain, n, &sorted)?.0
        } else {
            code
        };
        groups.entry(canon).or_default().push(code);
    }
    let cells = groups
        .into_iter()
        .map(|(canon, orbit)| {
            let tuple = decode_tuple(chain, n, TupleCode(canon)).expect("canon code is valid");
            let candidates: Vec<u32> = if constraint.quasitrivial {
                let mut distinct = tuple.clone();
                distinct.sort_unstable();
                distinct.dedup();
                distinct
            } else if constraint.idempotent && tuple.iter().all(|&x| x == tuple[0]) {
                vec![tuple[0]]
            } else {
                (1..=k).collect()
            };
            Cell { orbit, candidates }
        })
        .collect();
    Ok(cells)
}

fn estimate_leaves(cells: &[Cell]) -> u128 {
    cells
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.candidates.len() as u128))
}

/// Upper bound on the number of tables the search may visit (the product of
/// per-cell candidate counts; monotonicity pruning only shrinks it).
pub fn population_estimate(chain: FiniteChain, n: usize, constraint: Constraint) -> Result<u128> {
    Ok(estimate_leaves(&build_cells(chain, n, constraint)?))
}

/// Deterministic backtracking enumeration of every operation satisfying the
/// constraints: cells are assigned in tuple-code order, candidate values
/// ascending, monotonicity violations pruned as soon as both endpoints of a
/// single-step pair are assigned.
pub struct OpEnumerator {
    chain: FiniteChain,
    arity: usize,
    constraint: Constraint,
    cells: Vec<Cell>,
    strides: Vec<usize>,
    table: Vec<u32>,
    cursor: Vec<usize>,
    depth: usize,
    resume_backtrack: bool,
    finished: bool,
}

/// Streams the constrained operation space, failing fast when the candidate
/// estimate exceeds `guard`.
pub fn enumerate_ops(
    chain: FiniteChain,
    n: usize,
    constraint: Constraint,
    guard: u64,
) -> Result<OpEnumerator> {
    if n == 0 {
        return Err(Error::InvalidParameter("arity must be positive".into()));
    }
    let cells = build_cells(chain, n, constraint)?;
    let estimate = estimate_leaves(&cells);
    if estimate > guard as u128 {
        return Err(Error::ResourceGuard {
            what: format!("enumeration of {constraint} tables (k={}, n={n})", chain.k()),
            estimate,
            guard,
        });
    }
    let size = table_size(chain, n)?;
    let k = chain.k() as usize;
    let mut strides = vec![1usize; n];
    for j in (0..n.saturating_sub(1)).rev() {
        strides[j] = strides[j + 1] * k;
    }
    let cursor = vec![0usize; cells.len()];
    Ok(OpEnumerator {
        chain,
        arity: n,
        constraint,
        cells,
        strides,
        table: vec![0; size],
        cursor,
        depth: 0,
        resume_backtrack: false,
        finished: false,
    })
}

impl OpEnumerator {
    fn place(&mut self, depth: usize, value: u32) -> bool {
        let k = self.chain.k() as usize;
        for i in 0..self.cells[depth].orbit.len() {
            let code = self.cells[depth].orbit[i];
            self.table[code] = value;
        }
        if self.constraint.nondecreasing {
            for i in 0..self.cells[depth].orbit.len() {
                let code = self.cells[depth].orbit[i];
                for &stride in &self.strides {
                    let digit = (code / stride) % k;
                    if digit > 0 {
                        let below = self.table[code - stride];
                        if below != 0 && below > value {
                            self.unplace(depth);
                            return false;
                        }
                    }
                    if digit + 1 < k {
                        let above = self.table[code + stride];
                        if above != 0 && above < value {
                            self.unplace(depth);
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn unplace(&mut self, depth: usize) {
        for i in 0..self.cells[depth].orbit.len() {
            let code = self.cells[depth].orbit[i];
            self.table[code] = 0;
        }
    }

    fn backtrack(&mut self) -> bool {
        if self.depth == 0 {
            return false;
        }
        self.depth -= 1;
        self.unplace(self.depth);
        true
    }

    fn passes_post_filter(&self, op: &OpTable) -> bool {
        !self.constraint.has_neutral || !neutral_elements(op).is_empty()
    }
}

impl Iterator for OpEnumerator {
    type Item = OpTable;

    fn next(&mut self) -> Option<OpTable> {
        if self.finished {
            return None;
        }
        if self.resume_backtrack {
            self.resume_backtrack = false;
            if !self.backtrack() {
                self.finished = true;
                return None;
            }
        }
        loop {
            let mut placed = false;
            while self.cursor[self.depth] < self.cells[self.depth].candidates.len() {
                let value = self.cells[self.depth].candidates[self.cursor[self.depth]];
                self.cursor[self.depth] += 1;
                if self.place(self.depth, value) {
                    placed = true;
                    break;
                }
            }
            if placed {
                self.depth += 1;
                if self.depth == self.cells.len() {
                    let op = OpTable::new(self.chain, self.arity, self.table.clone())
                        .expect("search assigns only valid values");
                    if self.passes_post_filter(&op) {
                        self.resume_backtrack = true;
                        return Some(op);
                    }
                    if !self.backtrack() {
                        self.finished = true;
                        return None;
                    }
                } else {
                    self.cursor[self.depth] = 0;
                }
            } else if !self.backtrack() {
                self.finished = true;
                return None;
            }
        }
    }
}

/// Draws `count` tables uniformly cell by cell under the cell-local
/// constraints. Monotonicity and has-neutral are not samplable this way and
/// are rejected.
pub fn sample_ops(
    chain: FiniteChain,
    n: usize,
    constraint: Constraint,
    count: u64,
    seed: u64,
) -> Result<Vec<OpTable>> {
    if constraint.nondecreasing || constraint.has_neutral {
        return Err(Error::InvalidParameter(
            "sampling supports only cell-local constraints (qt, sym, idem)".into(),
        ));
    }
    let cells = build_cells(chain, n, constraint)?;
    let size = table_size(chain, n)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let mut values = vec![0u32; size];
        for cell in &cells {
            let v = cell.candidates[rng.gen_range(0..cell.candidates.len())];
            for &code in &cell.orbit {
                values[code] = v;
            }
        }
        out.push(OpTable::new(chain, n, values).expect("sampled values are valid"));
    }
    Ok(out)
}

/// Number of quasitrivial, symmetric, nondecreasing, associative tables:
/// the idempotent n-ary uninorms. The associativity filter runs even at
/// n = 2 where it is implied.
pub fn count_uninorms(chain: FiniteChain, n: usize, guard: u64) -> Result<u64> {
    Ok(enumerate_uninorms(chain, n, guard)?.len() as u64)
}

/// The idempotent n-ary uninorms in enumeration order.
pub fn enumerate_uninorms(chain: FiniteChain, n: usize, guard: u64) -> Result<Vec<OpTable>> {
    Ok(enumerate_ops(chain, n, Constraint::QT_SYM_ND, guard)?
        .filter(|op| is_associative(op).holds)
        .collect())
}
