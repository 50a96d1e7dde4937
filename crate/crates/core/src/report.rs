use crate::ordering::LinearOrdering;
use crate::table::OpTable;

/// The decidable properties this crate knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyKind {
    Idempotent,
    Quasitrivial,
    Symmetric,
    Nondecreasing,
    Associative,
    Bisymmetric,
    Ultrabisymmetric,
    SinglePeaked,
    SinglePeakedConvexity,
    SinglePeakedSisd,
    Cons65,
}

impl PropertyKind {
    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::Idempotent => "idempotent",
            PropertyKind::Quasitrivial => "quasitrivial",
            PropertyKind::Symmetric => "symmetric",
            PropertyKind::Nondecreasing => "nondecreasing",
            PropertyKind::Associative => "associative",
            PropertyKind::Bisymmetric => "bisymmetric",
            PropertyKind::Ultrabisymmetric => "ultrabisymmetric",
            PropertyKind::SinglePeaked => "single_peaked",
            PropertyKind::SinglePeakedConvexity => "single_peaked_convexity",
            PropertyKind::SinglePeakedSisd => "single_peaked_sisd",
            PropertyKind::Cons65 => "cons65",
        }
    }

    pub fn parse(s: &str) -> Option<PropertyKind> {
        Self::TABLE_CHECKS
            .iter()
            .chain(&[
                PropertyKind::SinglePeaked,
                PropertyKind::SinglePeakedConvexity,
                PropertyKind::SinglePeakedSisd,
                PropertyKind::Cons65,
            ])
            .copied()
            .find(|p| p.name() == s)
    }

    /// The checks that apply to an operation table.
    pub const TABLE_CHECKS: [PropertyKind; 7] = [
        PropertyKind::Idempotent,
        PropertyKind::Quasitrivial,
        PropertyKind::Symmetric,
        PropertyKind::Nondecreasing,
        PropertyKind::Associative,
        PropertyKind::Bisymmetric,
        PropertyKind::Ultrabisymmetric,
    ];
}

impl std::fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A counterexample sufficient to refute a property; replaying it against
/// the checked object reproduces the refutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Idempotency {
        x: u32,
        value: u32,
    },
    Quasitriviality {
        args: Vec<u32>,
        value: u32,
    },
    Symmetry {
        args: Vec<u32>,
        value: u32,
        permuted: Vec<u32>,
        permuted_value: u32,
    },
    Monotonicity {
        args: Vec<u32>,
        /// 1-based coordinate that was bumped by one step.
        coord: usize,
        value: u32,
        bumped: Vec<u32>,
        bumped_value: u32,
    },
    Associativity {
        /// The full (2n-1)-tuple.
        args: Vec<u32>,
        /// Split index i in [n-1]: the inner evaluation starts at position
        /// i on the left side and i+1 on the right side (1-based).
        split: usize,
        left: u32,
        right: u32,
    },
    Bisymmetry {
        matrix: Vec<Vec<u32>>,
        row_value: u32,
        col_value: u32,
    },
    Ultrabisymmetry {
        matrix: Vec<Vec<u32>>,
        /// 1-based (row, column) positions of the two exchanged entries.
        first: (usize, usize),
        second: (usize, usize),
        value: u32,
        swapped_value: u32,
    },
    /// `a < b < c` in the natural order yet `b` is ranked after both.
    SinglePeaked {
        a: u32,
        b: u32,
        c: u32,
    },
    /// The down-set of `t` contains `a < c` but not `b` in between.
    Convexity {
        t: u32,
        a: u32,
        b: u32,
        c: u32,
    },
    /// Condition (with the minimal element as base point) fails on the pair.
    Sisd {
        x0: u32,
        x1: u32,
        x2: u32,
    },
    /// No threshold splits the pair as the quasitriviality lemma requires.
    Cons65 {
        x: u32,
        y: u32,
    },
}

fn fmt_tuple(t: &[u32]) -> String {
    let inner: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

fn fmt_matrix(m: &[Vec<u32>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| fmt_tuple(r)).collect();
    format!("[{}]", rows.join(","))
}

impl Witness {
    /// Re-derives the refutation from `op`. Returns false if the recorded
    /// values disagree with the table or no longer refute the property.
    pub fn replays_on(&self, op: &OpTable) -> bool {
        let eval = |t: &[u32]| op.eval(t).ok();
        match self {
            Witness::Idempotency { x, value } => {
                let n = op.arity();
                eval(&vec![*x; n]) == Some(*value) && value != x
            }
            Witness::Quasitriviality { args, value } => {
                eval(args) == Some(*value) && !args.contains(value)
            }
            Witness::Symmetry {
                args,
                value,
                permuted,
                permuted_value,
            } => {
                let mut a = args.clone();
                let mut b = permuted.clone();
                a.sort_unstable();
                b.sort_unstable();
                a == b
                    && eval(args) == Some(*value)
                    && eval(permuted) == Some(*permuted_value)
                    && value != permuted_value
            }
            Witness::Monotonicity {
                args,
                coord,
                value,
                bumped,
                bumped_value,
            } => {
                let mut expect = args.clone();
                if *coord == 0 || *coord > expect.len() {
                    return false;
                }
                expect[coord - 1] += 1;
                expect == *bumped
                    && eval(args) == Some(*value)
                    && eval(bumped) == Some(*bumped_value)
                    && value > bumped_value
            }
            Witness::Associativity {
                args,
                split,
                left,
                right,
            } => {
                match crate::properties::nested_pair(op, args, *split) {
                    Some((l, r)) => l == *left && r == *right && l != r,
                    None => false,
                }
            }
            Witness::Bisymmetry {
                matrix,
                row_value,
                col_value,
            } => {
                let n = op.arity();
                if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
                    return false;
                }
                let rows: Option<Vec<u32>> = matrix.iter().map(|r| eval(r)).collect();
                let cols: Option<Vec<u32>> = (0..n)
                    .map(|j| {
                        let col: Vec<u32> = matrix.iter().map(|r| r[j]).collect();
                        eval(&col)
                    })
                    .collect();
                match (rows.and_then(|r| eval(&r)), cols.and_then(|c| eval(&c))) {
                    (Some(rv), Some(cv)) => rv == *row_value && cv == *col_value && rv != cv,
                    _ => false,
                }
            }
            Witness::Ultrabisymmetry {
                matrix,
                first,
                second,
                value,
                swapped_value,
            } => {
                let n = op.arity();
                if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
                    return false;
                }
                let outer = |m: &[Vec<u32>]| -> Option<u32> {
                    let rows: Option<Vec<u32>> = m.iter().map(|r| eval(r)).collect();
                    rows.and_then(|r| eval(&r))
                };
                let mut swapped = matrix.clone();
                let (a, b) = (*first, *second);
                if a == b || a.0 == 0 || a.1 == 0 || b.0 == 0 || b.1 == 0 {
                    return false;
                }
                let tmp = swapped[a.0 - 1][a.1 - 1];
                swapped[a.0 - 1][a.1 - 1] = swapped[b.0 - 1][b.1 - 1];
                swapped[b.0 - 1][b.1 - 1] = tmp;
                match (outer(matrix), outer(&swapped)) {
                    (Some(v), Some(s)) => v == *value && s == *swapped_value && v != s,
                    _ => false,
                }
            }
            _ => false,
        }
    }

    /// Counterpart of [`Witness::replays_on`] for ordering properties.
    pub fn replays_on_ordering(&self, ord: &LinearOrdering) -> bool {
        let prec = |x: u32, y: u32| ord.rank(x) < ord.rank(y);
        match *self {
            Witness::SinglePeaked { a, b, c } => {
                a < b && b < c && !prec(b, a) && !prec(b, c)
            }
            Witness::Convexity { t, a, b, c } => {
                a < b
                    && b < c
                    && !prec(t, a)
                    && !prec(t, c)
                    && prec(t, b)
            }
            Witness::Sisd { x0, x1, x2 } => {
                x0 == ord.minimum()
                    && ((x0 < x1 && x1 < x2) || (x2 < x1 && x1 < x0))
                    && !prec(x1, x2)
                    && x1 != x2
            }
            _ => false,
        }
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Idempotency { x, value } => write!(f, "x={x} value={value}"),
            Witness::Quasitriviality { args, value } => {
                write!(f, "args={} value={value}", fmt_tuple(args))
            }
            Witness::Symmetry {
                args,
                value,
                permuted,
                permuted_value,
            } => write!(
                f,
                "args={}->{value} permuted={}->{permuted_value}",
                fmt_tuple(args),
                fmt_tuple(permuted)
            ),
            Witness::Monotonicity {
                args,
                coord,
                value,
                bumped,
                bumped_value,
            } => write!(
                f,
                "args={}->{value} coord={coord} bumped={}->{bumped_value}",
                fmt_tuple(args),
                fmt_tuple(bumped)
            ),
            Witness::Associativity {
                args,
                split,
                left,
                right,
            } => write!(
                f,
                "args={} i={split} left={left} right={right}",
                fmt_tuple(args)
            ),
            Witness::Bisymmetry {
                matrix,
                row_value,
                col_value,
            } => write!(
                f,
                "matrix={} rows->{row_value} cols->{col_value}",
                fmt_matrix(matrix)
            ),
            Witness::Ultrabisymmetry {
                matrix,
                first,
                second,
                value,
                swapped_value,
            } => write!(
                f,
                "matrix={} swap=({},{})/({},{}) value={value} swapped={swapped_value}",
                fmt_matrix(matrix),
                first.0,
                first.1,
                second.0,
                second.1
            ),
            Witness::SinglePeaked { a, b, c } => write!(f, "triple=({a},{b},{c})"),
            Witness::Convexity { t, a, b, c } => write!(f, "t={t} gap=({a},{b},{c})"),
            Witness::Sisd { x0, x1, x2 } => write!(f, "x0={x0} x1={x1} x2={x2}"),
            Witness::Cons65 { x, y } => write!(f, "x={x} y={y}"),
        }
    }
}

/// Verdict of one property check, with a counterexample exactly when the
/// property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: PropertyKind,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    pub fn holding(property: PropertyKind) -> Self {
        PropertyReport {
            property,
            holds: true,
            witness: None,
        }
    }

    pub fn failing(property: PropertyKind, witness: Witness) -> Self {
        PropertyReport {
            property,
            holds: false,
            witness: Some(witness),
        }
    }
}

impl std::fmt::Display for PropertyReport {
    /// `PROP <name> HOLDS|FAILS [witness...]`
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PROP {} {}",
            self.property.name(),
            if self.holds { "HOLDS" } else { "FAILS" }
        )?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}
