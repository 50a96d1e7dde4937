//! Constructive representations: maximum with respect to an ordering,
//! binary lift and reduction, ordering extraction from a binary table,
//! single-peaked enumeration, contour construction, and the g-map form of
//! idempotent n-ary uninorms.

use crate::chain::FiniteChain;
use crate::error::{Error, Result};
use crate::gmap::GMap;
use crate::ordering::LinearOrdering;
use crate::properties::{
    is_associative, is_idempotent, is_nondecreasing, is_quasitrivial, is_symmetric,
    neutral_elements,
};
use crate::table::OpTable;

fn require_binary(op: &OpTable) -> Result<()> {
    if op.arity() != 2 {
        return Err(Error::WrongArity {
            got: op.arity(),
            expected: 2,
        });
    }
    Ok(())
}

fn require_n_at_least_2(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "arity must be at least 2, got {n}"
        )));
    }
    Ok(())
}

/// `F(x_1,...,x_n)` = the argument that is largest in the given ordering.
/// Always quasitrivial, symmetric, and associative.
pub fn max_wrt(ord: &LinearOrdering, n: usize) -> Result<OpTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("arity must be positive".into()));
    }
    OpTable::from_fn(ord.chain(), n, |t| ord.max_of(t))
}

/// `F(x_1,...,x_n) = G(min_i x_i, max_i x_i)` with min/max in the natural
/// order.
pub fn lift_binary(g: &OpTable, n: usize) -> Result<OpTable> {
    require_binary(g)?;
    require_n_at_least_2(n)?;
    OpTable::from_fn(g.chain(), n, |t| {
        let mn = *t.iter().min().expect("nonempty tuple");
        let mx = *t.iter().max().expect("nonempty tuple");
        g.eval(&[mn, mx]).expect("pair is valid")
    })
}

/// `G(x, y) = F((n-1).x, y)`. Under the hypotheses of the reduction theorem
/// this is the unique symmetric binary operation whose lift recovers `F`.
pub fn reduce_binary(op: &OpTable) -> Result<OpTable> {
    let n = op.arity();
    require_n_at_least_2(n)?;
    OpTable::from_fn(op.chain(), 2, |t| {
        let mut args = vec![t[0]; n - 1];
        args.push(t[1]);
        op.eval(&args).expect("repeated tuple is valid")
    })
}

/// Extracts the linear ordering defined by `x <= y iff H(x,y) = y` from a
/// quasitrivial associative binary table, auditing that the relation really
/// is a linear order.
pub fn order_from_binary(h: &OpTable) -> Result<LinearOrdering> {
    require_binary(h)?;
    if !is_quasitrivial(h).holds {
        return Err(Error::Precondition {
            property: "quasitrivial",
        });
    }
    if !is_associative(h).holds {
        return Err(Error::Precondition {
            property: "associative",
        });
    }
    let k = h.chain().k();
    let leq = |x: u32, y: u32| h.eval(&[x, y]).expect("pair is valid") == y;
    for x in 1..=k {
        if !leq(x, x) {
            return Err(Error::NotALinearOrder(format!("not reflexive at {x}")));
        }
        for y in (x + 1)..=k {
            if leq(x, y) == leq(y, x) {
                return Err(Error::NotALinearOrder(format!(
                    "totality/antisymmetry fails on ({x},{y})"
                )));
            }
        }
    }
    for x in 1..=k {
        for y in 1..=k {
            for z in 1..=k {
                if leq(x, y) && leq(y, z) && !leq(x, z) {
                    return Err(Error::NotALinearOrder(format!(
                        "transitivity fails on ({x},{y},{z})"
                    )));
                }
            }
        }
    }
    let mut seq: Vec<u32> = (1..=k).collect();
    seq.sort_by_key(|&x| (1..=k).filter(|&y| leq(y, x)).count());
    LinearOrdering::new(h.chain(), seq)
}

/// All linear orderings on the chain that are single-peaked with respect to
/// the natural order, each exactly once: depth-first, first element
/// ascending, then the nearest element below the current interval before the
/// nearest element above. There are exactly `2^(k-1)`.
pub fn enumerate_single_peaked(chain: FiniteChain) -> Vec<LinearOrdering> {
    let k = chain.k();
    let mut out = Vec::with_capacity(1 << (k - 1).min(20));
    let mut seq = Vec::with_capacity(k as usize);
    for start in 1..=k {
        seq.push(start);
        extend_interval(chain, start, start, &mut seq, &mut out);
        seq.pop();
    }
    out
}

fn extend_interval(
    chain: FiniteChain,
    lo: u32,
    hi: u32,
    seq: &mut Vec<u32>,
    out: &mut Vec<LinearOrdering>,
) {
    if seq.len() == chain.k() as usize {
        out.push(LinearOrdering::new(chain, seq.clone()).expect("built sequence is a permutation"));
        return;
    }
    if lo > 1 {
        seq.push(lo - 1);
        extend_interval(chain, lo - 1, hi, seq, out);
        seq.pop();
    }
    if hi < chain.k() {
        seq.push(hi + 1);
        extend_interval(chain, lo, hi + 1, seq, out);
        seq.pop();
    }
}

/// One step choice of the contour construction: extend the current interval
/// by its nearest element below or above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContourChoice {
    Below,
    Above,
}

/// One level set of a contour plot, in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContourClass {
    pub value: u32,
    /// Points in tuple-code order.
    pub points: Vec<Vec<u32>>,
}

/// Builds an idempotent n-ary uninorm level set by level set. The `k-1`
/// choices fix, step by step, whether the growing interval extends below or
/// above; the starting element is the one that leaves exactly the chosen
/// numbers of downward and upward steps, so every choice is honored and the
/// `2^(k-1)` choice strings address the `2^(k-1)` uninorms bijectively.
/// (If a choice ever pointed outside the chain it would be ignored and the
/// only available side taken.)
pub fn contour_construct(
    chain: FiniteChain,
    n: usize,
    choices: &[ContourChoice],
) -> Result<(OpTable, Vec<ContourClass>)> {
    let k = chain.k();
    if choices.len() != k as usize - 1 {
        return Err(Error::InvalidParameter(format!(
            "need {} choices for k={k}, got {}",
            k - 1,
            choices.len()
        )));
    }
    let below = choices
        .iter()
        .filter(|c| **c == ContourChoice::Below)
        .count() as u32;
    let start = below + 1;

    let mut lo = start;
    let mut hi = start;
    let mut elements = vec![start];
    for &c in choices {
        let take_below = match c {
            ContourChoice::Below => lo > 1,
            ContourChoice::Above => hi >= k, // ignored choice: only below available
        };
        if take_below {
            lo -= 1;
            elements.push(lo);
        } else {
            hi += 1;
            elements.push(hi);
        }
    }

    let mut classes = Vec::with_capacity(k as usize);
    let mut values = vec![0u32; crate::table::table_size(chain, n)?];
    let mut interval_lo = start;
    let mut interval_hi = start;
    for (i, &a) in elements.iter().enumerate() {
        interval_lo = interval_lo.min(a);
        interval_hi = interval_hi.max(a);
        let mut points = Vec::new();
        // C_i^n \ C_{i-1}^n: tuples over the grown interval using a at least once
        collect_class_points(interval_lo, interval_hi, a, n, i == 0, &mut points);
        for p in &points {
            let code = crate::table::encode_tuple(chain, n, p)?;
            values[code.0] = a;
        }
        classes.push(ContourClass { value: a, points });
    }
    Ok((OpTable::new(chain, n, values)?, classes))
}

fn collect_class_points(lo: u32, hi: u32, a: u32, n: usize, first: bool, out: &mut Vec<Vec<u32>>) {
    if first {
        out.push(vec![a; n]);
        return;
    }
    let mut tuple = vec![lo; n];
    loop {
        if tuple.contains(&a) {
            out.push(tuple.clone());
        }
        // advance over the interval [lo, hi]
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if tuple[pos] < hi {
                tuple[pos] += 1;
                for slot in tuple.iter_mut().skip(pos + 1) {
                    *slot = lo;
                }
                break;
            }
        }
    }
}

/// The uninorm determined by a g-map: minimum of the arguments when the
/// maximum stays under the extended map's bound, maximum otherwise.
pub fn from_gmap(gm: &GMap, n: usize) -> Result<OpTable> {
    require_n_at_least_2(n)?;
    let gbar = gm.gbar();
    OpTable::from_fn(gm.chain(), n, |t| {
        let mn = *t.iter().min().expect("nonempty tuple");
        let mx = *t.iter().max().expect("nonempty tuple");
        if mx <= gbar[mn as usize - 1] && mn <= gbar[0] {
            mn
        } else {
            mx
        }
    })
}

/// Checks that `op` is an idempotent n-ary uninorm: associative, symmetric,
/// nondecreasing, idempotent, with a neutral element. Returns the neutral
/// element (unique for such operations).
pub fn idempotent_uninorm_neutral(op: &OpTable) -> Result<u32> {
    for (report, name) in [
        (is_idempotent(op), "idempotent"),
        (is_symmetric(op), "symmetric"),
        (is_nondecreasing(op), "nondecreasing"),
        (is_associative(op), "associative"),
    ] {
        if !report.holds {
            return Err(Error::Precondition { property: name });
        }
    }
    let neutrals = neutral_elements(op);
    let e = *neutrals.first().ok_or(Error::NoNeutralElement)?;
    debug_assert_eq!(neutrals.len(), 1, "idempotent uninorms have a unique neutral element");
    Ok(e)
}

/// Inverse of [`from_gmap`]: recovers the unique g-map of an idempotent
/// n-ary uninorm by scanning `g(x) = max{y : F((n-1).x, y) = x}`.
pub fn gmap_of(op: &OpTable) -> Result<GMap> {
    let e = idempotent_uninorm_neutral(op)?;
    let n = op.arity();
    let g = (1..=e)
        .map(|x| {
            let mut args = vec![x; n - 1];
            args.push(0);
            op.chain()
                .elements()
                .filter(|&y| {
                    *args.last_mut().expect("nonempty") = y;
                    op.eval(&args).expect("probe tuple is valid") == x
                })
                .max()
                .expect("idempotency makes y = x qualify")
        })
        .collect();
    GMap::new(op.chain(), e, g)
}

/// `F(x_1,...,x_n) = x_1 o x_2 o ... o x_n`, the left fold of an associative
/// binary operation (bracketing is immaterial by associativity).
pub fn iterate_binary(h: &OpTable, n: usize) -> Result<OpTable> {
    require_binary(h)?;
    require_n_at_least_2(n)?;
    if !is_associative(h).holds {
        return Err(Error::Precondition {
            property: "associative",
        });
    }
    OpTable::from_fn(h.chain(), n, |t| {
        t.iter()
            .skip(1)
            .fold(t[0], |acc, &x| h.eval(&[acc, x]).expect("pair is valid"))
    })
}

/// `H(x, y) = F(x, (n-2).e, y)` for the least neutral element `e` of an
/// associative operation. The n-fold iterate of `H` recovers `F`.
pub fn neutral_reduction(op: &OpTable) -> Result<OpTable> {
    let n = op.arity();
    require_n_at_least_2(n)?;
    if !is_associative(op).holds {
        return Err(Error::Precondition {
            property: "associative",
        });
    }
    let neutrals = neutral_elements(op);
    let e = *neutrals.first().ok_or(Error::NoNeutralElement)?;
    OpTable::from_fn(op.chain(), 2, |t| {
        let mut args = vec![e; n];
        args[0] = t[0];
        args[n - 1] = t[1];
        op.eval(&args).expect("padded tuple is valid")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn chain(k: u32) -> FiniteChain {
        FiniteChain::new(k).unwrap()
    }

    fn ordering(k: u32, seq: &[u32]) -> LinearOrdering {
        LinearOrdering::new(chain(k), seq.to_vec()).unwrap()
    }

    fn nat_max(k: u32, n: usize) -> OpTable {
        OpTable::from_fn(chain(k), n, |t| *t.iter().max().unwrap()).unwrap()
    }

    fn nat_min(k: u32, n: usize) -> OpTable {
        OpTable::from_fn(chain(k), n, |t| *t.iter().min().unwrap()).unwrap()
    }

    fn fig1_left() -> OpTable {
        max_wrt(&ordering(4, &[3, 2, 4, 1]), 2).unwrap()
    }

    #[test]
    fn max_wrt_examples() {
        let left = fig1_left();
        assert_eq!(left.eval(&[2, 3]).unwrap(), 2);
        assert_eq!(left.eval(&[2, 4]).unwrap(), 4);
        assert_eq!(left.eval(&[1, 4]).unwrap(), 1);

        let right = max_wrt(&ordering(4, &[1, 2, 3, 4]), 2).unwrap();
        assert_eq!(right, nat_max(4, 2));

        let tiny = max_wrt(&ordering(1, &[1]), 3).unwrap();
        assert_eq!(tiny.values(), &[1]);
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_binary(&nat_max(3, 2), 3).unwrap(), nat_max(3, 3));
        assert_eq!(lift_binary(&nat_min(2, 2), 4).unwrap(), nat_min(2, 4));
        // lifting the left Figure-1 table gives the ternary max of the same ordering
        let lifted = lift_binary(&fig1_left(), 3).unwrap();
        assert_eq!(lifted, max_wrt(&ordering(4, &[3, 2, 4, 1]), 3).unwrap());
        assert!(matches!(
            lift_binary(&nat_max(3, 3), 2),
            Err(Error::WrongArity { .. })
        ));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_binary(&nat_max(3, 3)).unwrap(), nat_max(3, 2));
        let tern = max_wrt(&ordering(4, &[3, 2, 4, 1]), 3).unwrap();
        assert_eq!(reduce_binary(&tern).unwrap(), fig1_left());

        // ternary mod-2 sum reduces to the projection to the second argument
        let mod2 = OpTable::from_fn(chain(2), 3, |t| {
            (t.iter().map(|&x| x - 1).sum::<u32>() % 2) + 1
        })
        .unwrap();
        let reduced = reduce_binary(&mod2).unwrap();
        let proj2 = OpTable::from_fn(chain(2), 2, |t| t[1]).unwrap();
        assert_eq!(reduced, proj2);
    }

    #[test]
    fn order_from_binary_examples() {
        let ord = order_from_binary(&nat_max(3, 2)).unwrap();
        assert_eq!(ord.seq(), &[1, 2, 3]);

        let ord = order_from_binary(&fig1_left()).unwrap();
        assert_eq!(ord.seq(), &[3, 2, 4, 1]);

        let proj = OpTable::from_fn(chain(3), 2, |t| t[0]).unwrap();
        assert!(matches!(
            order_from_binary(&proj),
            Err(Error::NotALinearOrder(_))
        ));

        let z2 = OpTable::from_fn(chain(2), 2, |t| ((t[0] + t[1]) % 2) + 1).unwrap();
        assert!(matches!(
            order_from_binary(&z2),
            Err(Error::Precondition { property: "quasitrivial" })
        ));
    }

    #[test]
    fn max_wrt_round_trips_through_order_extraction() {
        for k in 1..=6u32 {
            for perm in (1..=k).permutations(k as usize) {
                let ord = ordering(k, &perm);
                let table = max_wrt(&ord, 2).unwrap();
                let back = order_from_binary(&table).unwrap();
                assert_eq!(back.seq(), ord.seq());
            }
        }
    }

    #[test]
    fn single_peaked_enumeration_matches_brute_force() {
        use crate::properties::is_single_peaked;
        assert_eq!(
            enumerate_single_peaked(chain(1))
                .iter()
                .map(|o| o.seq().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![1]]
        );
        let got: Vec<Vec<u32>> = enumerate_single_peaked(chain(3))
            .iter()
            .map(|o| o.seq().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![1, 2, 3],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 2, 1]
            ]
        );
        for k in 1..=6u32 {
            let enumerated: Vec<Vec<u32>> = enumerate_single_peaked(chain(k))
                .iter()
                .map(|o| o.seq().to_vec())
                .collect();
            assert_eq!(enumerated.len(), 1 << (k - 1));
            let filtered: Vec<Vec<u32>> = (1..=k)
                .permutations(k as usize)
                .filter(|p| is_single_peaked(&ordering(k, p)).holds)
                .collect();
            let mut sorted = enumerated.clone();
            sorted.sort();
            let mut filtered_sorted = filtered;
            filtered_sorted.sort();
            assert_eq!(sorted, filtered_sorted);
        }
        let four: Vec<Vec<u32>> = enumerate_single_peaked(chain(4))
            .iter()
            .map(|o| o.seq().to_vec())
            .collect();
        assert_eq!(four.len(), 8);
        assert!(four.contains(&vec![3, 2, 4, 1]));
    }

    #[test]
    fn contour_construction_matches_figure_one() {
        use ContourChoice::{Above, Below};
        // below, above, below starts at 3 and walks 2, 4, 1
        let (op, classes) = contour_construct(chain(4), 2, &[Below, Above, Below]).unwrap();
        assert_eq!(op, fig1_left());
        assert_eq!(classes.len(), 4);
        assert_eq!(classes[0].value, 3);
        assert_eq!(classes[0].points, vec![vec![3, 3]]);
        assert_eq!(classes[1].value, 2);
        assert_eq!(
            classes[1].points,
            vec![vec![2, 2], vec![2, 3], vec![3, 2]]
        );
        assert_eq!(classes[2].value, 4);
        assert_eq!(classes[2].points.len(), 5);
        assert_eq!(classes[3].value, 1);
        assert_eq!(classes[3].points.len(), 7);

        let (op, _) = contour_construct(chain(4), 2, &[Above, Above, Above]).unwrap();
        assert_eq!(op, nat_max(4, 2));

        let (op, classes) = contour_construct(chain(1), 3, &[]).unwrap();
        assert_eq!(op.values(), &[1]);
        assert_eq!(classes[0].points, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn contour_tables_equal_max_wrt_of_induced_ordering() {
        for k in 1..=5u32 {
            for bits in 0..(1u32 << (k - 1)) {
                let choices: Vec<ContourChoice> = (0..k - 1)
                    .map(|i| {
                        if bits >> i & 1 == 1 {
                            ContourChoice::Above
                        } else {
                            ContourChoice::Below
                        }
                    })
                    .collect();
                let (op, classes) = contour_construct(chain(k), 2, &choices).unwrap();
                let seq: Vec<u32> = classes.iter().map(|c| c.value).collect();
                let ord = ordering(k, &seq);
                assert_eq!(op, max_wrt(&ord, 2).unwrap());
            }
        }
    }

    #[test]
    fn from_gmap_examples() {
        let gm = GMap::new(chain(4), 3, vec![4, 3, 3]).unwrap();
        assert_eq!(from_gmap(&gm, 2).unwrap(), fig1_left());

        // g constantly k gives the n-ary minimum with neutral element k
        let gm = GMap::new(chain(3), 3, vec![3, 3, 3]).unwrap();
        assert_eq!(from_gmap(&gm, 2).unwrap(), nat_min(3, 2));

        let gm = GMap::new(chain(2), 1, vec![1]).unwrap();
        assert_eq!(from_gmap(&gm, 3).unwrap(), nat_max(2, 3));
    }

    #[test]
    fn gmap_of_examples() {
        let gm = gmap_of(&fig1_left()).unwrap();
        assert_eq!((gm.e(), gm.g_values()), (3, [4, 3, 3].as_slice()));

        let gm = gmap_of(&nat_max(5, 2)).unwrap();
        assert_eq!((gm.e(), gm.g_values()), (1, [1].as_slice()));

        let gm = gmap_of(&nat_min(4, 3)).unwrap();
        assert_eq!((gm.e(), gm.g_values()), (4, [4, 4, 4, 4].as_slice()));

        let med = OpTable::from_fn(chain(2), 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (x.min(y)).max(y.min(z)).max(z.min(x))
        })
        .unwrap();
        assert!(matches!(
            gmap_of(&med),
            Err(Error::Precondition { property: "associative" })
        ));
    }

    #[test]
    fn gmap_round_trip() {
        for k in 1..=6u32 {
            for gm in GMap::enumerate_all(chain(k)) {
                for n in [2usize, 3] {
                    let op = from_gmap(&gm, n).unwrap();
                    let back = gmap_of(&op).unwrap();
                    assert_eq!(back, gm, "k={k} n={n} gm={gm}");
                }
            }
        }
    }

    #[test]
    fn iterate_examples() {
        assert_eq!(iterate_binary(&nat_max(3, 2), 3).unwrap(), nat_max(3, 3));

        let mod2 = OpTable::from_fn(chain(2), 3, |t| {
            (t.iter().map(|&x| x - 1).sum::<u32>() % 2) + 1
        })
        .unwrap();
        let h = OpTable::from_fn(chain(2), 2, |t| ((t[0] - 1 + t[1] - 1) % 2) + 1).unwrap();
        let h_prime = OpTable::from_fn(chain(2), 2, |t| ((t[0] - 1 + t[1] - 1 + 1) % 2) + 1).unwrap();
        assert_eq!(iterate_binary(&h, 3).unwrap(), mod2);
        assert_eq!(iterate_binary(&h_prime, 3).unwrap(), mod2);

        let med = OpTable::from_fn(chain(2), 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            (x.min(y)).max(y.min(z)).max(z.min(x))
        })
        .unwrap();
        assert!(iterate_binary(&reduce_binary(&med).unwrap(), 3).is_ok());
        let not_assoc = OpTable::new(chain(2), 2, vec![2, 1, 1, 1]).unwrap();
        assert!(!is_associative(&not_assoc).holds);
        assert!(matches!(
            iterate_binary(&not_assoc, 3),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn neutral_reduction_examples() {
        let mod2 = OpTable::from_fn(chain(2), 3, |t| {
            (t.iter().map(|&x| x - 1).sum::<u32>() % 2) + 1
        })
        .unwrap();
        let h = neutral_reduction(&mod2).unwrap();
        let z2_h = OpTable::from_fn(chain(2), 2, |t| ((t[0] - 1 + t[1] - 1) % 2) + 1).unwrap();
        assert_eq!(h, z2_h);
        assert_eq!(iterate_binary(&h, 3).unwrap(), mod2);

        assert_eq!(neutral_reduction(&nat_max(3, 3)).unwrap(), nat_max(3, 2));

        let tern = max_wrt(&ordering(4, &[3, 2, 4, 1]), 3).unwrap();
        assert_eq!(neutral_reduction(&tern).unwrap(), fig1_left());

        let proj = OpTable::from_fn(chain(3), 2, |t| t[0]).unwrap();
        assert!(matches!(
            neutral_reduction(&proj),
            Err(Error::NoNeutralElement)
        ));
    }
}
