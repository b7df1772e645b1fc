use cyclotomic_order::cli::{self, EXIT_CHECKPOINT, EXIT_OK, EXIT_USAGE};
use cyclotomic_order::comparator::Certificate;
use cyclotomic_order::order::ChainReport;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cyclord").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err, None);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn data_lines(out: &str) -> Vec<&str> {
    out.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn cyclo_prints_ascending_coefficients() {
    let (code, out, _) = run(&["cyclo", "6"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().next().unwrap().starts_with('#'));
    assert_eq!(data_lines(&out), vec!["1 -1 1"]);

    let (_, out, _) = run(&["cyclo", "6", "--q", "2"]);
    assert_eq!(data_lines(&out), vec!["1 -1 1", "3"]);

    let (_, out, _) = run(&["cyclo", "1"]);
    assert_eq!(data_lines(&out), vec!["-1 1"]);
}

#[test]
fn cyclo_evaluation_is_exact_decimal() {
    let (_, out, _) = run(&["cyclo", "2", "--q", "100000000000000000000000"]);
    assert_eq!(data_lines(&out)[1], "100000000000000000000001");
    let (_, out, _) = run(&["cyclo", "4", "--q", "3", "--format", "structured"]);
    assert_eq!(out.trim(), r#"{"n":4,"coefficients":[1,0,1],"value":10}"#);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["cyclo", "6", "--q", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["cyclo", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["compare", "x", "3"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "10", "--workers", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["nosuch"]).0, EXIT_USAGE);
}

#[test]
fn compare_verdicts() {
    assert_eq!(run(&["compare", "1", "2"]).1, "LESS\n");
    assert_eq!(run(&["compare", "5", "5"]).1, "EQUAL\n");
    assert_eq!(run(&["compare", "8", "5"]).1, "LESS\n");
    assert_eq!(run(&["compare", "5", "8"]).1, "GREATER\n");
}

#[test]
fn compare_certificate_round_trips() {
    let (code, out, _) = run(&["compare", "105", "210", "--certificate"]);
    assert_eq!(code, EXIT_OK);
    let line = out.lines().nth(1).unwrap();
    let cert = Certificate::from_line(line).unwrap();
    assert_eq!(cert.to_line(), line);
    assert_eq!((cert.m, cert.n), (105, 210));
    assert_eq!(cert.verdict.to_string(), out.lines().next().unwrap());

    let (_, out, _) = run(&["compare", "3", "10", "--fast", "--certificate"]);
    let v: serde_json::Value = serde_json::from_str(out.lines().nth(1).unwrap()).unwrap();
    assert_eq!(v["shortcut_tag"], "TOTIENT");
    assert_eq!(v["verdict"], "LESS");
}

#[test]
fn chain_formats() {
    let (code, out, err) = run(&["chain", "6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1\n2\n6\n4\n3\n");
    assert!(err.contains("stable prefix 5"));

    let (_, out, _) = run(&["chain", "1"]);
    assert_eq!(out, "");
    let (_, out, _) = run(&["chain", "1", "--format", "structured"]);
    let report: ChainReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.sequence, vec![1]);

    let (_, out, _) = run(&["chain", "31", "--format", "oeis-bfile"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(&lines[..3], &["1 1", "2 2", "3 6"]);
    assert_eq!(lines[19], "20 11");

    let (_, out, _) = run(&["chain", "12", "--format", "delimited"]);
    assert_eq!(out.lines().next().unwrap(), "position,index,totient,tie_flag");
    assert_eq!(out.lines().nth(6).unwrap(), "6,10,4,0");
}

#[test]
fn structured_report_round_trips() {
    let (_, out, _) = run(&["chain", "200", "--format", "structured", "-j", "3"]);
    let report: ChainReport = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap(), out.trim());
    assert_eq!(report.sequence.len(), 200);
}

#[test]
fn verify_reports_total_order() {
    let (code, out, err) = run(&["verify", "100"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l == "VERDICT TOTAL-ORDER"), "{out}");
    assert!(out.contains("ties 0"));
    assert!(err.lines().any(|l| l.starts_with("[1] phi=")));
}

#[test]
fn verify_resumes_and_rejects_bad_checkpoints() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cp.json");
    let p = path.to_str().unwrap();
    let (code, first, _) = run(&["verify", "300", "--checkpoint", p, "-q"]);
    assert_eq!(code, EXIT_OK);
    let (code, second, _) = run(&["verify", "300", "--checkpoint", p, "-q"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first, second);

    assert_eq!(run(&["verify", "301", "--checkpoint", p, "-q"]).0, EXIT_CHECKPOINT);

    let text = std::fs::read_to_string(&path).unwrap();
    let tampered = text.replacen("\"compares\":1,", "\"compares\":2,", 1);
    assert_ne!(text, tampered);
    std::fs::write(&path, tampered).unwrap();
    let (code, _, err) = run(&["verify", "300", "--checkpoint", p, "-q"]);
    assert_eq!(code, EXIT_CHECKPOINT);
    assert!(err.contains("hash mismatch"));
}

#[test]
fn conjecture2_lines() {
    let (code, out, _) = run(&["conjecture2", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "i=1 FAILS blockers=[4]\ni=2 HOLDS\n");
    assert_eq!(run(&["conjecture2", "1"]).1, "i=1 FAILS blockers=[4]\n");
}

#[test]
fn invtot_and_phi() {
    assert_eq!(run(&["invtot", "4"]).1, "5 8 10 12\n");
    assert_eq!(run(&["invtot", "14"]).1, "\n");
    assert_eq!(run(&["phi", "12"]).1, "4\n");
    assert_eq!(run(&["phi", "6", "--classes"]).1, "1: 1 2\n2: 3 4 6\n4: 5\n");
}
