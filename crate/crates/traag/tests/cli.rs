//! Golden tests for the command-line interface: exact output bytes, the
//! exit-code contract (0 ok, 1 usage, 2 parse/I-O, 3 domain precondition),
//! and byte-determinism of reports.

use std::process::Command;

fn traag(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_traag"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn fixture(name: &str) -> String {
    format!("{}/graphs/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn analyze_klein_text_is_exact() {
    let (code, stdout, stderr) = traag(&["analyze", &fixture("klein.tg")]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert_eq!(
        stdout,
        "torsion-free: yes\n\
         left-orderable: yes (tower: b, a)\n\
         bi-orderable: no (oriented edge: b -> a)\n"
    );
}

#[test]
fn analyze_triangle_json_is_exact_and_deterministic() {
    let (code, stdout, _) = traag(&["analyze", &fixture("triangle.tg"), "--json"]);
    assert_eq!(code, 0);
    let expected = concat!(
        "{\"torsion_free\":false,\"left_orderable\":false,\"bi_orderable\":false,",
        "\"certificates\":[",
        "{\"type\":\"clique_cycle\",\"cycle\":{\"edges\":[",
        "{\"origin\":\"a\",\"target\":\"b\"},",
        "{\"origin\":\"b\",\"target\":\"c\"},",
        "{\"origin\":\"c\",\"target\":\"a\"}]},",
        "\"support\":[\"a\",\"b\",\"c\"],",
        "\"witness\":{\"status\":\"found\",\"word\":\"a b c\",\"order\":2}},",
        "{\"type\":\"non_orderability_chain\",\"steps\":[",
        "{\"index\":0,\"origin\":\"a\",\"target\":\"b\",\"relation\":\"b a b^-1 = a^-1\"},",
        "{\"index\":1,\"origin\":\"b\",\"target\":\"c\",\"relation\":\"c b c^-1 = b^-1\"},",
        "{\"index\":2,\"origin\":\"c\",\"target\":\"a\",\"relation\":\"a c a^-1 = c^-1\"}]},",
        "{\"type\":\"oriented_cycle\",\"edges\":[",
        "{\"origin\":\"a\",\"target\":\"b\"},",
        "{\"origin\":\"b\",\"target\":\"c\"},",
        "{\"origin\":\"c\",\"target\":\"a\"}]},",
        "{\"type\":\"oriented_edge\",\"origin\":\"a\",\"target\":\"b\"}]}\n",
    );
    assert_eq!(stdout, expected);
    // Byte-identical on a second run.
    let (_, again, _) = traag(&["analyze", &fixture("triangle.tg"), "--json"]);
    assert_eq!(stdout, again);
}

#[test]
fn analyze_missing_file_exits_2() {
    let (code, _, stderr) = traag(&["analyze", "no_such_file.tg"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cannot read"), "stderr: {stderr}");
}

#[test]
fn analyze_parse_error_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tg");
    std::fs::write(&path, "vertex a\nedge a x\n").unwrap();
    let (code, _, stderr) = traag(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("2:8"), "position missing from: {stderr}");
    assert!(stderr.contains("unknown vertex"), "stderr: {stderr}");
}

#[test]
fn word_reduce_prints_identity_as_1() {
    let (code, stdout, _) = traag(&["word", "reduce", &fixture("klein.tg"), "a b a^-1 b"]);
    assert_eq!((code, stdout.as_str()), (0, "1\n"));
    let (code, stdout, _) = traag(&["word", "reduce", &fixture("klein.tg"), "b a"]);
    assert_eq!((code, stdout.as_str()), (0, "b a\n"));
}

#[test]
fn word_errors_split_parse_vs_domain() {
    // Unknown generator: well-formed word, domain violation.
    let (code, _, stderr) = traag(&["word", "reduce", &fixture("klein.tg"), "a z"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("unknown vertex"), "stderr: {stderr}");
    // Zero exponent: scans fine, violates the nonzero invariant.
    let (code, _, _) = traag(&["word", "reduce", &fixture("klein.tg"), "a^0"]);
    assert_eq!(code, 3);
    // Malformed atom: syntax error.
    let (code, _, _) = traag(&["word", "reduce", &fixture("klein.tg"), "a^"]);
    assert_eq!(code, 2);
    let (code, _, _) = traag(&["word", "reduce", &fixture("klein.tg"), "3a"]);
    assert_eq!(code, 2);
}

#[test]
fn word_eq_and_torsion() {
    let (code, stdout, _) = traag(&["word", "eq", &fixture("path3.tg"), "a b", "b a"]);
    assert_eq!((code, stdout.as_str()), (0, "true\n"));
    let (code, stdout, _) = traag(&["word", "eq", &fixture("cycle4.tg"), "a c", "c a"]);
    assert_eq!((code, stdout.as_str()), (0, "false\n"));
    let (code, stdout, _) =
        traag(&["word", "torsion", &fixture("triangle.tg"), "a b c", "--max", "16"]);
    assert_eq!((code, stdout.as_str()), (0, "2\n"));
    let (code, stdout, _) = traag(&["word", "torsion", &fixture("klein.tg"), "b", "--max", "16"]);
    assert_eq!((code, stdout.as_str()), (0, "none\n"));
    let (code, _, stderr) =
        traag(&["word", "torsion", &fixture("klein.tg"), "b", "--max", "1"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("at least 2"), "stderr: {stderr}");
}

#[test]
fn certify_nonorderable_chain_is_exact() {
    let (code, stdout, _) = traag(&["certify", "nonorderable", &fixture("triangle.tg")]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "step 0: b a b^-1 = a^-1, so max(a, a^-1) < max(b, b^-1)\n\
         step 1: c b c^-1 = b^-1, so max(b, b^-1) < max(c, c^-1)\n\
         step 2: a c a^-1 = c^-1, so max(c, c^-1) < max(a, a^-1)\n\
         contradiction: max(a, a^-1) < max(a, a^-1)\n"
    );
    let (code, _, stderr) = traag(&["certify", "nonorderable", &fixture("klein.tg")]);
    assert_eq!(code, 3);
    assert!(stderr.contains("no oriented cycle"), "stderr: {stderr}");
}

#[test]
fn certify_tower_prints_order_or_blocking_cycle() {
    let (code, stdout, _) = traag(&["certify", "tower", &fixture("chain.tg")]);
    assert_eq!((code, stdout.as_str()), (0, "a b c\n"));
    let (code, stdout, _) = traag(&["certify", "tower", &fixture("triangle.tg")]);
    assert_eq!((code, stdout.as_str()), (0, "cycle: b -> c -> a -> b\n"));
}

#[test]
fn certify_klein_cmp_compares_under_the_cone() {
    let base = ["certify", "klein-cmp", &fixture("klein.tg")];
    let run = |extra: &[&str]| {
        let mut args: Vec<&str> = base.to_vec();
        args.extend_from_slice(extra);
        traag(&args)
    };
    let (code, stdout, _) =
        run(&["--edge", "b", "a", "--cone", "+1,+1", "b^1000000", "a"]);
    assert_eq!((code, stdout.as_str()), (0, "<\n"));
    let (code, stdout, _) = run(&["--edge", "b", "a", "--cone", "-1,+1", "a", "1"]);
    assert_eq!((code, stdout.as_str()), (0, "<\n"));
    let (code, stdout, _) = run(&["--edge", "b", "a", "--cone", "+1,+1", "a b", "b^-1 a"]);
    assert_eq!((code, stdout.as_str()), (0, "=\n"));
    // The edge must be oriented with that origin and target.
    let (code, _, stderr) = run(&["--edge", "a", "b", "--cone", "+1,+1", "a", "b"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("no oriented edge"), "stderr: {stderr}");
    // Foreign generators and malformed cones are domain errors.
    let (code, _, _) = run(&["--edge", "b", "a", "--cone", "2,1", "a", "b"]);
    assert_eq!(code, 3);
    let (code, _, stderr) =
        traag(&["certify", "klein-cmp", &fixture("triangle.tg"), "--edge", "a", "b", "--cone", "+1,+1", "a c", "b"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("ForeignGenerator") || stderr.contains("not one of"), "stderr: {stderr}");
}

#[test]
fn usage_errors_exit_1() {
    let (code, _, _) = traag(&[]);
    assert_eq!(code, 1);
    let (code, _, _) = traag(&["bogus"]);
    assert_eq!(code, 1);
    let (code, _, _) = traag(&["word", "reduce"]);
    assert_eq!(code, 1);
    // Help is not an error.
    let (code, stdout, _) = traag(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("analyze"));
}
