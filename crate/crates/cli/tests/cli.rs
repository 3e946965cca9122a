//! End-to-end tests of the binary: the documented interface examples,
//! exit-status conventions, and output determinism.

use std::process::{Command, Output};

fn akfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_akfock"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn worked_a_sequence_example() {
    let out = akfock(&["aseq", "--e", "4", "--d", "3", "--charges", "0,2,3", "--mp", "1|3.1|2.1.1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3,2,2,1,1,3,0,0,0\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn semisimple_decmat_is_identity_tsv() {
    let out = akfock(&[
        "decmat", "--e", "7", "--d", "1", "--charges", "0", "--n", "3", "--order", "flotw",
        "--format", "tsv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "\t3\t2.1\t1.1.1\n3\t1\t0\t0\n2.1\t0\t1\t0\n1.1.1\t0\t0\t1\n"
    );
}

#[test]
fn non_flotw_input_is_a_domain_error() {
    let out = akfock(&["aseq", "--e", "4", "--d", "3", "--charges", "0,2,3", "--mp", "-|1.1.1.1|-"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("FLOTW"), "diagnostic: {err}");
}

#[test]
fn invalid_charges_are_a_domain_error() {
    let out = akfock(&["enumerate", "--e", "4", "--charges", "3,1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = akfock(&["enumerate", "--e", "4", "--charges", "0,4", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    // Unknown flag (handled by the parser).
    let out = akfock(&["aseq", "--oops"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown order value (validated before dispatch).
    let out = akfock(&[
        "decmat", "--e", "2", "--charges", "0", "--n", "2", "--order", "sideways",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Missing parameter datum.
    let out = akfock(&["enumerate", "--e", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn type_presets_expand_charges() {
    // Type A is d=1 with charge 0: Kleshchev layer = 2-regular partitions.
    let out = akfock(&["kleshchev", "--e", "2", "--type", "A", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n2.1\n");

    // Type B at even e expands to charges (1, e/2).
    let preset = akfock(&["flotw", "--e", "4", "--type", "B", "--n", "3", "--format", "json"]);
    let explicit = akfock(&[
        "flotw", "--e", "4", "--charges", "1,2", "--n", "3", "--format", "json",
    ]);
    assert_eq!(stdout(&preset), stdout(&explicit));

    // Type B at odd e is not a single charge datum.
    let out = akfock(&["flotw", "--e", "3", "--type", "B", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn crystal_dot_output() {
    let out = akfock(&["crystal", "--e", "2", "--charges", "0", "--n", "1", "--order", "am"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph crystal {"));
    assert!(text.contains("\"-\" -> \"1\" [label=\"0\"];"));
}

#[test]
fn json_outputs_have_expected_shape() {
    let out = akfock(&["basicset", "--type", "A", "--e", "2", "--n", "2"]);
    assert_eq!(stdout(&out), "{\"type\":\"A\",\"e\":2,\"n\":2,\"labels\":[\"2\"]}\n");

    let out = akfock(&[
        "avector", "--e", "2", "--charges", "0", "--mp", "2",
    ]);
    assert_eq!(
        stdout(&out),
        "[{\"mp\":\"1.1\",\"coef\":\"q\"},{\"mp\":\"2\",\"coef\":\"1\"}]\n"
    );

    let out = akfock(&[
        "decmat", "--e", "2", "--charges", "0", "--n", "2", "--order", "flotw", "--format", "json",
    ]);
    assert_eq!(
        stdout(&out),
        "{\"rows\":[\"2\",\"1.1\"],\"columns\":[\"2\"],\"entries\":[[1],[1]]}\n"
    );

    let out = akfock(&[
        "verify-cbs", "--e", "2", "--charges", "0,1", "--n", "2", "--format", "json",
    ]);
    assert!(stdout(&out).contains("\"matrices_agree\":{\"passed\":true"));
}

#[test]
fn with_q_requires_json() {
    let out = akfock(&[
        "decmat", "--e", "2", "--charges", "0", "--n", "2", "--order", "flotw", "--with-q",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "canbasis", "--e", "4", "--charges", "0,2,3", "--n", "4", "--order", "flotw",
    ];
    let first = akfock(&args);
    let second = akfock(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
}
