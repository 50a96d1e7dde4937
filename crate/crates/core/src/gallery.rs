//! Named example operations with their expected property profiles, used as
//! fixtures across the test suites and exposed by the `gallery` CLI command.
//! Tables are built programmatically, never from hand-typed value blobs.

use std::collections::{BTreeMap, BTreeSet};

use crate::chain::FiniteChain;
use crate::constructors::max_wrt;
use crate::error::{Error, Result};
use crate::ordering::LinearOrdering;
use crate::report::PropertyKind;
use crate::table::OpTable;

/// A fixture: the operation plus the verdict every property check must
/// reproduce, and the expected neutral-element and isolated-point sets.
#[derive(Debug, Clone)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub op: OpTable,
    pub expected: BTreeMap<PropertyKind, bool>,
    pub expected_neutrals: BTreeSet<u32>,
    pub expected_isolated: BTreeSet<Vec<u32>>,
}

const NAMES: [&str; 13] = [
    "median3_l2",
    "median3",
    "median3_l4",
    "projection_first",
    "projection_first_n3",
    "l3_flat",
    "mod2_sum",
    "z2_h",
    "z2_hprime",
    "majority_e",
    "ab_c_flat",
    "fig1_left",
    "fig1_right",
];

pub fn gallery_names() -> &'static [&'static str] {
    &NAMES
}

pub fn gallery_all() -> Vec<GalleryEntry> {
    NAMES.iter().map(|n| gallery_get(n).expect("fixed name")).collect()
}

fn chain(k: u32) -> FiniteChain {
    FiniteChain::new(k).expect("positive k")
}

fn median(t: &[u32]) -> u32 {
    let (x, y, z) = (t[0], t[1], t[2]);
    (x.min(y)).max(y.min(z)).max(z.min(x))
}

fn profile(
    holds: [bool; 7],
) -> BTreeMap<PropertyKind, bool> {
    PropertyKind::TABLE_CHECKS
        .iter()
        .copied()
        .zip(holds)
        .collect()
}

/// Looks up a fixture by name. The expected verdicts are frozen from
/// exhaustive scans and agree with every published claim about the
/// operation.
pub fn gallery_get(name: &str) -> Result<GalleryEntry> {
    // profile order: idempotent, quasitrivial, symmetric, nondecreasing,
    //                associative, bisymmetric, ultrabisymmetric
    let entry = match name {
        "median3_l2" | "median3" | "median3_l4" => {
            let k = match name {
                "median3_l2" => 2,
                "median3" => 3,
                _ => 4,
            };
            GalleryEntry {
                name: match name {
                    "median3_l2" => "median3_l2",
                    "median3" => "median3",
                    _ => "median3_l4",
                },
                description: "ternary median",
                op: OpTable::from_fn(chain(k), 3, median)?,
                expected: profile([true, true, true, true, false, false, false]),
                expected_neutrals: BTreeSet::new(),
                expected_isolated: BTreeSet::new(),
            }
        }
        "projection_first" => GalleryEntry {
            name: "projection_first",
            description: "binary projection to the first argument",
            op: OpTable::from_fn(chain(3), 2, |t| t[0])?,
            expected: profile([true, true, false, true, true, true, false]),
            expected_neutrals: BTreeSet::new(),
            expected_isolated: BTreeSet::new(),
        },
        "projection_first_n3" => GalleryEntry {
            name: "projection_first_n3",
            description: "ternary projection to the first argument",
            op: OpTable::from_fn(chain(3), 3, |t| t[0])?,
            expected: profile([true, true, false, true, true, true, false]),
            expected_neutrals: BTreeSet::new(),
            expected_isolated: BTreeSet::new(),
        },
        "l3_flat" => GalleryEntry {
            name: "l3_flat",
            description: "F(1,1,1)=1, F=2 whenever 2 occurs, else 3",
            op: OpTable::from_fn(chain(3), 3, |t| {
                if t.contains(&2) {
                    2
                } else if t.contains(&3) {
                    3
                } else {
                    1
                }
            })?,
            expected: profile([true, true, true, false, true, true, true]),
            expected_neutrals: BTreeSet::from([1]),
            expected_isolated: BTreeSet::from([vec![1, 1, 1]]),
        },
        "mod2_sum" => GalleryEntry {
            name: "mod2_sum",
            description: "ternary sum mod 2 on L_2 (1/2 encode 0/1)",
            op: OpTable::from_fn(chain(2), 3, |t| {
                (t.iter().map(|&x| x - 1).sum::<u32>() % 2) + 1
            })?,
            expected: profile([true, true, true, false, true, true, true]),
            expected_neutrals: BTreeSet::from([1, 2]),
            expected_isolated: BTreeSet::new(),
        },
        "z2_h" => GalleryEntry {
            name: "z2_h",
            description: "binary sum mod 2 on L_2",
            op: OpTable::from_fn(chain(2), 2, |t| ((t[0] - 1 + t[1] - 1) % 2) + 1)?,
            expected: profile([false, false, true, false, true, true, true]),
            expected_neutrals: BTreeSet::from([1]),
            expected_isolated: BTreeSet::new(),
        },
        "z2_hprime" => GalleryEntry {
            name: "z2_hprime",
            description: "binary sum-plus-one mod 2 on L_2",
            op: OpTable::from_fn(chain(2), 2, |t| ((t[0] + t[1] - 1) % 2) + 1)?,
            expected: profile([false, false, true, false, true, true, true]),
            expected_neutrals: BTreeSet::from([2]),
            expected_isolated: BTreeSet::new(),
        },
        "majority_e" => GalleryEntry {
            name: "majority_e",
            description: "majority of the two endpoints, tie goes to the middle (a,e,b = 1,2,3)",
            op: OpTable::from_fn(chain(3), 3, |t| {
                let a = t.iter().filter(|&&x| x == 1).count();
                let b = t.iter().filter(|&&x| x == 3).count();
                if a > b {
                    1
                } else if b > a {
                    3
                } else {
                    2
                }
            })?,
            expected: profile([true, true, true, true, false, false, false]),
            expected_neutrals: BTreeSet::from([2]),
            expected_isolated: BTreeSet::new(),
        },
        "ab_c_flat" => GalleryEntry {
            name: "ab_c_flat",
            description: "F(1,3)=1, every other pair maps to 2",
            op: OpTable::from_fn(chain(3), 2, |t| if t == [1, 3] { 1 } else { 2 })?,
            expected: profile([false, false, false, false, false, true, true]),
            expected_neutrals: BTreeSet::new(),
            expected_isolated: BTreeSet::from([vec![1, 3]]),
        },
        "fig1_left" => GalleryEntry {
            name: "fig1_left",
            description: "binary maximum for the single-peaked ordering 3,2,4,1 on L_4",
            op: max_wrt(&LinearOrdering::new(chain(4), vec![3, 2, 4, 1])?, 2)?,
            expected: profile([true, true, true, true, true, true, true]),
            expected_neutrals: BTreeSet::from([3]),
            expected_isolated: BTreeSet::from([vec![3, 3]]),
        },
        "fig1_right" => GalleryEntry {
            name: "fig1_right",
            description: "binary maximum for the natural ordering on L_4",
            op: max_wrt(&LinearOrdering::new(chain(4), vec![1, 2, 3, 4])?, 2)?,
            expected: profile([true, true, true, true, true, true, true]),
            expected_neutrals: BTreeSet::from([1]),
            expected_isolated: BTreeSet::from([vec![1, 1]]),
        },
        _ => {
            return Err(Error::UnknownGallery {
                name: name.to_string(),
                valid: NAMES.join(", "),
            })
        }
    };
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::{
        check_table, isolated_points, neutral_elements, Guard,
    };

    #[test]
    fn unknown_name_lists_valid_ones() {
        match gallery_get("nope") {
            Err(Error::UnknownGallery { valid, .. }) => {
                assert!(valid.contains("fig1_left"));
                assert!(valid.contains("mod2_sum"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn every_profile_reproduces() {
        let guard = Guard::default();
        for entry in gallery_all() {
            for (&kind, &expected) in &entry.expected {
                let report = check_table(&entry.op, kind, &guard).unwrap();
                assert_eq!(
                    report.holds, expected,
                    "{}: {} expected {}",
                    entry.name, kind, expected
                );
                if let Some(w) = &report.witness {
                    assert!(
                        w.replays_on(&entry.op),
                        "{}: witness for {} does not replay",
                        entry.name,
                        kind
                    );
                }
            }
            assert_eq!(
                neutral_elements(&entry.op),
                entry.expected_neutrals,
                "{}: neutral elements",
                entry.name
            );
            assert_eq!(
                isolated_points(&entry.op),
                entry.expected_isolated,
                "{}: isolated points",
                entry.name
            );
        }
    }

    #[test]
    fn median_refutes_associativity_already_on_l2() {
        let entry = gallery_get("median3_l2").unwrap();
        let report = check_table(&entry.op, PropertyKind::Associative, &Guard::default()).unwrap();
        assert!(!report.holds);
        assert!(report.witness.unwrap().replays_on(&entry.op));
    }

    #[test]
    fn majority_e_has_neutral_but_no_isolated_point() {
        // converse of the isolated-point lemma fails at n=3
        let entry = gallery_get("majority_e").unwrap();
        assert_eq!(entry.expected_neutrals, BTreeSet::from([2]));
        assert!(isolated_points(&entry.op).is_empty());
    }
}
