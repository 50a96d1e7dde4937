//! Decision procedures for the properties of n-ary operations on chains and
//! for single-peakedness of linear orderings. Every failing report carries a
//! replayable witness; scans run in tuple-code order so the witness is the
//! lexicographically first violation.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ordering::LinearOrdering;
use crate::report::{PropertyKind, PropertyReport, Witness};
use crate::table::{all_tuples, OpTable};

/// Size guard for the checks that quantify over n x n matrices.
#[derive(Debug, Clone, Copy)]
pub struct Guard {
    /// Maximum number of matrices `k^(n^2)` a single check may scan.
    pub max_evals: u64,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_evals: 1 << 24,
        }
    }
}

impl Guard {
    pub fn new(max_evals: u64) -> Self {
        Guard { max_evals }
    }

    fn admit(&self, op: &OpTable, what: &str) -> Result<u64> {
        let k = op.chain().k() as u128;
        let cells = op.arity() as u32 * op.arity() as u32;
        let mut estimate: u128 = 1;
        for _ in 0..cells {
            estimate = estimate.saturating_mul(k);
            if estimate > self.max_evals as u128 {
                return Err(Error::ResourceGuard {
                    what: format!("{what} over {}^{} matrices", op.chain().k(), cells),
                    estimate,
                    guard: self.max_evals,
                });
            }
        }
        Ok(estimate as u64)
    }
}

/// `F(n.x) = x` for every `x`.
pub fn is_idempotent(op: &OpTable) -> PropertyReport {
    let n = op.arity();
    for x in op.chain().elements() {
        let value = op.eval(&vec![x; n]).expect("diagonal tuple is valid");
        if value != x {
            return PropertyReport::failing(
                PropertyKind::Idempotent,
                Witness::Idempotency { x, value },
            );
        }
    }
    PropertyReport::holding(PropertyKind::Idempotent)
}

/// Every output is one of the inputs.
pub fn is_quasitrivial(op: &OpTable) -> PropertyReport {
    for (_, tuple, value) in op.cells() {
        if !tuple.contains(&value) {
            return PropertyReport::failing(
                PropertyKind::Quasitrivial,
                Witness::Quasitriviality { args: tuple, value },
            );
        }
    }
    PropertyReport::holding(PropertyKind::Quasitrivial)
}

/// Invariance under permutations of the arguments, checked against the
/// sorted representative of each tuple.
pub fn is_symmetric(op: &OpTable) -> PropertyReport {
    for (_, tuple, value) in op.cells() {
        let mut sorted = tuple.clone();
        sorted.sort_unstable();
        if sorted == tuple {
            continue;
        }
        let sorted_value = op.eval(&sorted).expect("sorted tuple is valid");
        if sorted_value != value {
            return PropertyReport::failing(
                PropertyKind::Symmetric,
                Witness::Symmetry {
                    args: tuple,
                    value,
                    permuted: sorted,
                    permuted_value: sorted_value,
                },
            );
        }
    }
    PropertyReport::holding(PropertyKind::Symmetric)
}

/// Monotonicity in every coordinate, decided by single-step increments
/// (sufficient by transitivity).
pub fn is_nondecreasing(op: &OpTable) -> PropertyReport {
    let k = op.chain().k();
    for (_, tuple, value) in op.cells() {
        for coord in 0..op.arity() {
            if tuple[coord] == k {
                continue;
            }
            let mut bumped = tuple.clone();
            bumped[coord] += 1;
            let bumped_value = op.eval(&bumped).expect("bumped tuple is valid");
            if value > bumped_value {
                return PropertyReport::failing(
                    PropertyKind::Nondecreasing,
                    Witness::Monotonicity {
                        args: tuple,
                        coord: coord + 1,
                        value,
                        bumped,
                        bumped_value,
                    },
                );
            }
        }
    }
    PropertyReport::holding(PropertyKind::Nondecreasing)
}

/// The two nested evaluations compared by associativity at split `i`
/// (1-based, `i` in `[n-1]`): inner application starting at position `i`
/// versus position `i+1` of the (2n-1)-tuple.
pub fn nested_pair(op: &OpTable, args: &[u32], i: usize) -> Option<(u32, u32)> {
    let n = op.arity();
    if args.len() != 2 * n - 1 || i == 0 || i > n - 1 {
        return None;
    }
    let nest = |start: usize| -> Option<u32> {
        let inner = op.eval(&args[start..start + n]).ok()?;
        let mut outer: Vec<u32> = Vec::with_capacity(n);
        outer.extend_from_slice(&args[..start]);
        outer.push(inner);
        outer.extend_from_slice(&args[start + n..]);
        op.eval(&outer).ok()
    };
    Some((nest(i - 1)?, nest(i)?))
}

/// Associativity in the nested sense: for every (2n-1)-tuple and every
/// split `i` in `[n-1]`, the two nested evaluations agree. Arity 1 holds
/// vacuously (there is no split to test).
pub fn is_associative(op: &OpTable) -> PropertyReport {
    let n = op.arity();
    if n == 1 {
        return PropertyReport::holding(PropertyKind::Associative);
    }
    for args in all_tuples(op.chain(), 2 * n - 1) {
        for i in 1..n {
            let (left, right) = nested_pair(op, &args, i).expect("valid split");
            if left != right {
                return PropertyReport::failing(
                    PropertyKind::Associative,
                    Witness::Associativity {
                        args,
                        split: i,
                        left,
                        right,
                    },
                );
            }
        }
    }
    PropertyReport::holding(PropertyKind::Associative)
}

fn matrix_count(op: &OpTable) -> usize {
    (op.chain().k() as usize).pow((op.arity() * op.arity()) as u32)
}

/// Nested aggregate of a row-major flat n x n matrix, with a caller-owned
/// scratch buffer for the row values.
fn outer_value(op: &OpTable, flat: &[u32], rows: &mut [u32]) -> u32 {
    let n = op.arity();
    for (i, slot) in rows.iter_mut().enumerate() {
        *slot = op.eval(&flat[i * n..(i + 1) * n]).expect("matrix row is valid");
    }
    op.eval(rows).expect("row aggregate is valid")
}

fn to_matrix(flat: &[u32], n: usize) -> Vec<Vec<u32>> {
    flat.chunks(n).map(|r| r.to_vec()).collect()
}

/// Row-wise then outer aggregation equals column-wise then outer
/// aggregation, over every n x n matrix. Guarded: the scan covers
/// `k^(n^2)` matrices.
pub fn is_bisymmetric(op: &OpTable, guard: &Guard) -> Result<PropertyReport> {
    guard.admit(op, "bisymmetry check")?;
    let n = op.arity();
    let k = op.chain().k();
    let mut flat = vec![1u32; n * n];
    let mut rows = vec![0u32; n];
    let mut col = vec![0u32; n];
    let mut cols = vec![0u32; n];
    for _ in 0..matrix_count(op) {
        let row_value = outer_value(op, &flat, &mut rows);
        for j in 0..n {
            for i in 0..n {
                col[i] = flat[i * n + j];
            }
            cols[j] = op.eval(&col).expect("matrix column is valid");
        }
        let col_value = op.eval(&cols).expect("column aggregate is valid");
        if row_value != col_value {
            return Ok(PropertyReport::failing(
                PropertyKind::Bisymmetric,
                Witness::Bisymmetry {
                    matrix: to_matrix(&flat, n),
                    row_value,
                    col_value,
                },
            ));
        }
        crate::table::advance_tuple(&mut flat, k);
    }
    Ok(PropertyReport::holding(PropertyKind::Bisymmetric))
}

/// The nested aggregate of every n x n matrix is invariant under exchanging
/// any two entries. Same guard as [`is_bisymmetric`].
pub fn is_ultrabisymmetric(op: &OpTable, guard: &Guard) -> Result<PropertyReport> {
    guard.admit(op, "ultrabisymmetry check")?;
    let n = op.arity();
    let k = op.chain().k();
    let cells = n * n;
    let mut flat = vec![1u32; cells];
    let mut rows = vec![0u32; n];
    for _ in 0..matrix_count(op) {
        let value = outer_value(op, &flat, &mut rows);
        for p in 0..cells {
            for q in (p + 1)..cells {
                if flat[p] == flat[q] {
                    continue;
                }
                flat.swap(p, q);
                let swapped_value = outer_value(op, &flat, &mut rows);
                flat.swap(p, q);
                if swapped_value != value {
                    return Ok(PropertyReport::failing(
                        PropertyKind::Ultrabisymmetric,
                        Witness::Ultrabisymmetry {
                            matrix: to_matrix(&flat, n),
                            first: (p / n + 1, p % n + 1),
                            second: (q / n + 1, q % n + 1),
                            value,
                            swapped_value,
                        },
                    ));
                }
            }
        }
        crate::table::advance_tuple(&mut flat, k);
    }
    Ok(PropertyReport::holding(PropertyKind::Ultrabisymmetric))
}

/// All `e` with `F((i-1).e, x, (n-i).e) = x` for every `x` and every
/// insertion position `i`.
pub fn neutral_elements(op: &OpTable) -> BTreeSet<u32> {
    let n = op.arity();
    op.chain()
        .elements()
        .filter(|&e| {
            op.chain().elements().all(|x| {
                (1..=n).all(|i| {
                    let mut args = vec![e; n];
                    args[i - 1] = x;
                    op.eval(&args).expect("neutral probe is valid") == x
                })
            })
        })
        .collect()
}

/// All argument tuples whose value is attained nowhere else.
pub fn isolated_points(op: &OpTable) -> BTreeSet<Vec<u32>> {
    let k = op.chain().k() as usize;
    let mut counts = vec![0usize; k];
    for &v in op.values() {
        counts[v as usize - 1] += 1;
    }
    op.cells()
        .filter(|(_, _, v)| counts[*v as usize - 1] == 1)
        .map(|(_, tuple, _)| tuple)
        .collect()
}

pub fn is_surjective(op: &OpTable) -> bool {
    let k = op.chain().k() as usize;
    let mut seen = vec![false; k];
    for &v in op.values() {
        seen[v as usize - 1] = true;
    }
    seen.into_iter().all(|b| b)
}

/// Single-peakedness of an ordering: among any `a < b < c` the middle
/// element is never ranked last.
pub fn is_single_peaked(ord: &LinearOrdering) -> PropertyReport {
    let k = ord.chain().k();
    for a in 1..=k {
        for b in (a + 1)..=k {
            for c in (b + 1)..=k {
                if ord.rank(b) > ord.rank(a) && ord.rank(b) > ord.rank(c) {
                    return PropertyReport::failing(
                        PropertyKind::SinglePeaked,
                        Witness::SinglePeaked { a, b, c },
                    );
                }
            }
        }
    }
    PropertyReport::holding(PropertyKind::SinglePeaked)
}

/// Equivalent decider: every down-set `{x : x <= t}` of the ordering is an
/// interval of the natural order.
pub fn single_peaked_via_convexity(ord: &LinearOrdering) -> PropertyReport {
    let k = ord.chain().k();
    for t in 1..=k {
        let down: Vec<u32> = (1..=k).filter(|&x| ord.rank(x) <= ord.rank(t)).collect();
        let lo = *down.first().expect("down-set contains t");
        let hi = *down.last().expect("down-set contains t");
        if (hi - lo + 1) as usize != down.len() {
            let b = (lo..=hi)
                .find(|x| !down.contains(x))
                .expect("non-interval down-set has a gap");
            return PropertyReport::failing(
                PropertyKind::SinglePeakedConvexity,
                Witness::Convexity { t, a: lo, b, c: hi },
            );
        }
    }
    PropertyReport::holding(PropertyKind::SinglePeakedConvexity)
}

/// Equivalent decider with the base point fixed to the minimal element of
/// the ordering: `x0 < x1 < x2` or `x2 < x1 < x0` must imply that `x1` is
/// ranked before `x2`.
pub fn single_peaked_via_sisd(ord: &LinearOrdering) -> PropertyReport {
    let k = ord.chain().k();
    let x0 = ord.minimum();
    for x1 in 1..=k {
        for x2 in 1..=k {
            let between = (x0 < x1 && x1 < x2) || (x2 < x1 && x1 < x0);
            if between && ord.rank(x1) >= ord.rank(x2) {
                return PropertyReport::failing(
                    PropertyKind::SinglePeakedSisd,
                    Witness::Sisd { x0, x1, x2 },
                );
            }
        }
    }
    PropertyReport::holding(PropertyKind::SinglePeakedSisd)
}

/// For a quasitrivial operation: every pair `(x, y)` admits a threshold
/// `t` in `[n]` with `F((t-1).x, (n-t+1).y) = y` and `F(t.x, (n-t).y) = x`.
pub fn check_lemma_cons65(op: &OpTable) -> Result<PropertyReport> {
    let qt = is_quasitrivial(op);
    if !qt.holds {
        return Err(Error::Precondition {
            property: "quasitrivial",
        });
    }
    let n = op.arity();
    for x in op.chain().elements() {
        for y in op.chain().elements() {
            let split_at = |t: usize| -> (u32, u32) {
                let mut first = vec![x; t - 1];
                first.resize(n, y);
                let mut second = vec![x; t];
                second.resize(n, y);
                (
                    op.eval(&first).expect("threshold tuple is valid"),
                    op.eval(&second).expect("threshold tuple is valid"),
                )
            };
            if !(1..=n).any(|t| split_at(t) == (y, x)) {
                return Ok(PropertyReport::failing(
                    PropertyKind::Cons65,
                    Witness::Cons65 { x, y },
                ));
            }
        }
    }
    Ok(PropertyReport::holding(PropertyKind::Cons65))
}

/// Runs one table check by kind, with the default guard for the matrix
/// checks.
pub fn check_table(op: &OpTable, kind: PropertyKind, guard: &Guard) -> Result<PropertyReport> {
    match kind {
        PropertyKind::Idempotent => Ok(is_idempotent(op)),
        PropertyKind::Quasitrivial => Ok(is_quasitrivial(op)),
        PropertyKind::Symmetric => Ok(is_symmetric(op)),
        PropertyKind::Nondecreasing => Ok(is_nondecreasing(op)),
        PropertyKind::Associative => Ok(is_associative(op)),
        PropertyKind::Bisymmetric => is_bisymmetric(op, guard),
        PropertyKind::Ultrabisymmetric => is_ultrabisymmetric(op, guard),
        PropertyKind::Cons65 => check_lemma_cons65(op),
        PropertyKind::SinglePeaked
        | PropertyKind::SinglePeakedConvexity
        | PropertyKind::SinglePeakedSisd => Err(Error::InvalidParameter(format!(
            "{kind} applies to linear orderings, not operation tables"
        ))),
    }
}
