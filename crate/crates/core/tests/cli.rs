use std::process::Command;

use powergraph::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("powergraph").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn diam_cyclic_12() {
    let (code, out, _) = run(&["diam", "--group", "cyclic:12", "--kind", "power"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("3"));
    // e and the four generators of Z_12
    assert_eq!(out.lines().nth(1), Some("isolated: 0 1 5 7 11"));
}

#[test]
fn diam_cyclic_p_group_is_domain_error() {
    let (code, out, err) = run(&["diam", "--group", "cyclic:8", "--kind", "power"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("no edges"), "{err}");
}

#[test]
fn classify_quaternion_8() {
    let (code, out, _) = run(&["classify", "--group", "quaternion:8"]);
    assert_eq!(code, 0);
    assert!(out.contains("power: predicted 2 (Otherwise)"), "{out}");
    assert!(out.contains("enhanced: predicted 2 (Otherwise)"), "{out}");
    assert!(out.contains("psi: false"));
    assert!(out.contains("phi: false"));
}

#[test]
fn classify_reports_witness_orders() {
    let (_, out, _) = run(&["classify", "--group", "product(quaternion:8,cyclic:3)"]);
    assert!(out.contains("psi: true (prime=2 beta=1"), "{out}");
    assert!(out.contains("power: predicted 3 (Psi) witness"), "{out}");
    let (_, out, _) = run(&["classify", "--group", "product(dihedral:3,cyclic:6)"]);
    assert!(out.contains("enhanced: predicted 3 (Phi) witness"), "{out}");
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(run(&["info", "--group", "cyclic:"]).0, 2);
    assert_eq!(run(&["info", "--group", "symmetric:9"]).0, 2);
    assert_eq!(run(&["info"]).0, 2);
    assert_eq!(run(&["info", "--group", "cyclic:3", "--cay", "x.cay"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
}

#[test]
fn io_errors_exit_5() {
    let (code, _, err) = run(&["info", "--cay", "/nonexistent/file.cay"]);
    assert_eq!(code, 5);
    assert!(err.contains("/nonexistent/file.cay"));
}

#[test]
fn make_then_ingest_agrees() {
    let dir = tempfile::tempdir().unwrap();
    for expr in ["product(quaternion:8,cyclic:3)", "symmetric:4", "semidirect:6,4,5"] {
        let path = dir.path().join("g.cay");
        let path_s = path.to_str().unwrap();
        assert_eq!(run(&["make", "--group", expr, "--out", path_s]).0, 0);
        for sub in ["info", "classify"] {
            let (_, a, _) = run(&[sub, "--group", expr]);
            let (_, b, _) = run(&[sub, "--cay", path_s]);
            let strip = |s: &str| s.lines().filter(|l| !l.starts_with("name:")).collect::<Vec<_>>().join("\n");
            assert_eq!(strip(&a), strip(&b), "{sub} {expr}");
        }
        for kind in ["power", "enhanced"] {
            assert_eq!(
                run(&["diam", "--group", expr, "--kind", kind]),
                run(&["diam", "--cay", path_s, "--kind", kind])
            );
            assert_eq!(
                run(&["graph", "--group", expr, "--kind", kind]),
                run(&["graph", "--cay", path_s, "--kind", kind])
            );
        }
    }
}

#[test]
fn perm_source() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.perm");
    std::fs::write(&path, "3\n1 0 2\n1 2 0\n").unwrap();
    let (code, out, _) = run(&["diam", "--perm", path.to_str().unwrap(), "--kind", "enhanced"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("2"));
}

#[test]
fn graph_exports() {
    let (_, out, _) = run(&["graph", "--group", "abelian:2,2", "--raw"]);
    assert_eq!(out, "0 1\n0 2\n0 3\n");
    let (_, out, _) = run(&["graph", "--group", "abelian:2,2"]);
    assert_eq!(out, "0 1\n0 2\n1 2\n");
    let (_, out, _) = run(&["graph", "--group", "abelian:2,2", "--complement", "--format", "dot"]);
    assert!(out.starts_with("graph G {\n  0 [label=\"0 (o=1)\"];"), "{out}");
    assert!(out.contains("  1 -- 2;"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let (code, out, _) = run(&["graph", "--group", "symmetric:3", "--out", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    // 3-cycle/transposition pairs (6) and transposition pairs (3)
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 9);
}

#[test]
fn verify_is_byte_stable_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let (code, a, err) = run(&["verify", "--max-order", "40", "--report", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let (_, b, _) = run(&["verify", "--max-order", "40"]);
    assert_eq!(a, b);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
    assert!(err.contains("0 mismatches"));
}

#[test]
fn verify_only_extra() {
    let (code, out, _) = run(&["verify", "--only-extra", "--extra", "symmetric:3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert!(out.starts_with("{\"name\":\"symmetric:3\",\"order\":6,\"kind\":\"power\",\"applicable\":true,\"predicted\":2,\"reason\":\"Otherwise\",\"measured\":2,\"nontrivial_components\":1,\"isolated_count\":1,\"match\":true"));
}

#[test]
fn search_phi_small() {
    let (code, out, _) = run(&["search-phi", "--max-order", "24"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.ends_with("measured=3")), "{out}");
    assert!(out.contains("semidirect:6,4,5"), "{out}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_powergraph");
    let out = Command::new(bin).args(["diam", "--group", "cyclic:12"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().next(), Some("3"));
    let out = Command::new(bin).args(["diam", "--group", "cyclic:6", "--kind", "enhanced"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}
