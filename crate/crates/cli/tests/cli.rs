//! End-to-end tests of the command-line surface: output shapes, exit codes,
//! and bit-exact round trips through the NOP format.

use std::path::PathBuf;
use std::process::{Command, Output};

fn chainops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chainops"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("chainops-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn construct_max_emits_the_expected_table() {
    let output = chainops(&["construct", "max", "--order", "3,2,4,1", "--n", "2"]);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output),
        "NOP 1\nk=4 n=2\n1 1 1 1\n1 2 2 4\n1 2 3 4\n1 4 4 4\n"
    );
}

#[test]
fn construct_output_round_trips_bit_exactly() {
    use chainops::constructors::max_wrt;
    use chainops::{FiniteChain, LinearOrdering};

    let output = chainops(&["construct", "max", "--order", "2,3,1", "--n", "3"]);
    assert!(output.status.success());
    let parsed = chainops::nop::parse(&stdout(&output)).unwrap();
    let chain = FiniteChain::new(3).unwrap();
    let ord = LinearOrdering::new(chain, vec![2, 3, 1]).unwrap();
    assert_eq!(parsed, max_wrt(&ord, 3).unwrap());
}

#[test]
fn construct_gmap_agrees_with_construct_max() {
    let from_gmap = chainops(&[
        "construct", "gmap", "--k", "4", "--e", "3", "--g", "4,3,3", "--n", "2",
    ]);
    let from_max = chainops(&["construct", "max", "--order", "3,2,4,1", "--n", "2"]);
    assert!(from_gmap.status.success());
    assert_eq!(stdout(&from_gmap), stdout(&from_max));
}

#[test]
fn construct_lift_reduce_derive_round_trip() {
    let binary = write_temp("fig1.nop", &stdout(&chainops(&[
        "construct", "max", "--order", "3,2,4,1", "--n", "2",
    ])));
    let lifted = chainops(&["construct", "lift", "--in", binary.to_str().unwrap(), "--n", "3"]);
    assert!(lifted.status.success());
    let ternary = write_temp("fig1-3.nop", &stdout(&lifted));
    let reduced = chainops(&["construct", "reduce", "--in", ternary.to_str().unwrap()]);
    assert_eq!(stdout(&reduced), std::fs::read_to_string(&binary).unwrap());
    let derived = chainops(&["construct", "derive", "--in", binary.to_str().unwrap(), "--n", "3"]);
    assert_eq!(stdout(&derived), stdout(&lifted));
}

#[test]
fn construct_derive_rejects_non_associative_input() {
    let median = write_temp(
        "median.nop",
        &stdout(&chainops(&["gallery", "median3_l2"])),
    );
    // gallery output is a valid NOP file (the profile lines are comments)
    let output = chainops(&["construct", "derive", "--in", median.to_str().unwrap(), "--n", "3"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn check_reports_all_properties_and_exits_zero_on_failing_properties() {
    let median = write_temp("median-check.nop", &stdout(&chainops(&["gallery", "median3_l2"])));
    let output = chainops(&["check", median.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0), "failing a property is not an error");
    let text = stdout(&output);
    assert!(text.contains("PROP quasitrivial HOLDS"));
    assert!(text.contains("PROP associative FAILS args=("));
    assert!(text.contains("NEUTRAL none"));
    assert!(text.contains("ISOLATED none"));
}

#[test]
fn check_subset_of_properties() {
    let table = write_temp("max3.nop", "NOP 1\nk=3 n=2\n1 2 3\n2 2 3\n3 3 3\n");
    let output = chainops(&[
        "check",
        table.to_str().unwrap(),
        "--properties",
        "associative,symmetric",
        "--format",
        "lines",
    ]);
    assert_eq!(
        stdout(&output),
        "PROP associative HOLDS\nPROP symmetric HOLDS\n"
    );
}

#[test]
fn check_rejects_truncated_files_with_parse_exit() {
    let broken = write_temp("broken.nop", "NOP 1\nk=3 n=2\n1 2 3\n");
    let output = chainops(&["check", broken.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let unknown_version = write_temp("v9.nop", "NOP 9\nk=2 n=2\n1 1 1 2\n");
    let output = chainops(&["check", unknown_version.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn check_guard_exit_is_three() {
    // 5^(3*3) matrices is over the tiny guard
    let table = write_temp(
        "big.nop",
        &stdout(&chainops(&["construct", "max", "--order", "1,2,3,4,5", "--n", "3"])),
    );
    let output = chainops(&[
        "check",
        table.to_str().unwrap(),
        "--properties",
        "bisymmetric",
        "--guard",
        "1000",
    ]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stdout(&output).contains("ERROR bisymmetric"));
}

#[test]
fn enumerate_orderings_matches_the_expected_listing() {
    let output = chainops(&["enumerate", "orderings", "--k", "3"]);
    assert_eq!(stdout(&output), "1,2,3\n2,1,3\n2,3,1\n3,2,1\ncount=4\n");
    let output = chainops(&["enumerate", "orderings", "--k", "1"]);
    assert_eq!(stdout(&output), "1\ncount=1\n");
}

#[test]
fn enumerate_uninorms_emits_nop_blocks_and_count() {
    let output = chainops(&["enumerate", "uninorms", "--k", "4", "--n", "2"]);
    let text = stdout(&output);
    assert_eq!(text.matches("NOP 1\n").count(), 8);
    assert!(text.ends_with("count=8\n"));
    // blocks are parseable and separated by blank lines
    let first_block: String = text.split("\n\n").next().unwrap().to_string();
    chainops::nop::parse(&first_block).unwrap();
}

#[test]
fn enumerate_guard_exit_is_three() {
    let output = chainops(&["enumerate", "uninorms", "--k", "9", "--n", "2", "--guard", "100"]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn verify_exits_zero_and_emits_the_suite_line() {
    let output = chainops(&[
        "verify", "cor24f", "--k", "3", "--n", "2", "--format", "lines",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "SUITE cor24f k=3 n=2 pop=8 verdict=holds\n");
}

#[test]
fn verify_population_override_and_jobs() {
    let output = chainops(&[
        "verify", "cor24f1", "--k", "3", "--n", "3", "--population", "qt+sym",
        "--jobs", "4", "--format", "lines",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        stdout(&output),
        "SUITE cor24f1 k=3 n=3 pop=192 verdict=holds\n"
    );
}

#[test]
fn verify_unknown_suite_exits_two() {
    let output = chainops(&["verify", "nope", "--k", "2", "--n", "2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_sampled_run_is_labeled() {
    let output = chainops(&[
        "verify", "open_q_search", "--k", "3", "--n", "3", "--samples", "50",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("population: 50 (sampled)"));
    assert!(text.contains("no claim"));
}

#[test]
fn render_rejects_unsupported_arity() {
    let table = write_temp("n4.nop", "NOP 1\nk=2 n=4\n1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 2\n");
    let output = chainops(&["render", table.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn render_single_cell() {
    let table = write_temp("k1.nop", "NOP 1\nk=1 n=2\n1\n");
    let output = chainops(&["render", table.to_str().unwrap()]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("1 | 1\n"));
}

#[test]
fn gallery_unknown_name_lists_the_valid_ones() {
    let output = chainops(&["gallery", "nope"]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("fig1_left"));
    assert!(err.contains("mod2_sum"));
}

#[test]
fn gallery_output_is_a_valid_nop_file_with_profile_comments() {
    let output = chainops(&["gallery", "fig1_left"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let op = chainops::nop::parse(&text).unwrap();
    assert_eq!(op, chainops::gallery::gallery_get("fig1_left").unwrap().op);
    assert!(text.contains("# PROP nondecreasing HOLDS"));
    assert!(text.contains("# NEUTRAL 3"));
    assert!(text.contains("# ISOLATED (3,3)"));
}
