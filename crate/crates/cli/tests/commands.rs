use std::path::PathBuf;

use biskit::{check_boolean, InvSemigroup};
use biskit_cli::{run, Cli, Output, Report};
use clap::Parser;

fn corpus(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    root.join(name).display().to_string()
}

fn biskit(args: &[&str]) -> Output {
    let cli = Cli::try_parse_from(std::iter::once("biskit").chain(args.iter().copied())).unwrap();
    run(&cli)
}

#[test]
fn analyze_reports() {
    let out = biskit(&["analyze", &corpus("i2.ist"), "--format", "json"]);
    assert_eq!(out.code, 0);
    let r: Report = serde_json::from_str(&out.stdout).unwrap();
    assert!(r.boolean && r.fundamental);
    assert_eq!(r.type_rank, Some(1));
    let sig = r.signature.unwrap();
    assert_eq!((sig.len(), sig[0].n, sig[0].group.as_str()), (1, 2, "trivial"));

    let r: Report = serde_json::from_str(&biskit(&["analyze", &corpus("b2.ist"), "--format", "json"]).stdout).unwrap();
    assert!(!r.boolean);
    assert_eq!(r.boolean_witness, Some(vec![1, 2]));

    let r: Report = serde_json::from_str(&biskit(&["analyze", &corpus("z2zero.ist"), "--format", "json"]).stdout).unwrap();
    assert!(!r.fundamental);
    assert_eq!(r.signature.unwrap()[0].group, "Z2");
}

#[test]
fn json_round_trips_and_is_deterministic() {
    for name in ["i2.ist", "b2.ist", "i2xz2zero.ist", "z2-group.ist"] {
        let first = biskit(&["analyze", &corpus(name), "--format", "json"]).stdout;
        let again = biskit(&["analyze", &corpus(name), "--format", "json"]).stdout;
        assert_eq!(first, again);
        let r: Report = serde_json::from_str(&first).unwrap();
        let back: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(r, back);
        assert!(r.timings.is_none());
    }
    let timed: Report =
        serde_json::from_str(&biskit(&["analyze", &corpus("i2.ist"), "--format", "json", "--timings"]).stdout).unwrap();
    assert!(timed.timings.is_some_and(|t| !t.is_empty()));
}

#[test]
fn booleanize_outputs_reingest() {
    let dir = tempfile::tempdir().unwrap();
    for (name, size) in [("b2.ist", 7), ("z2-group.ist", 3), ("chain3.ist", 4)] {
        let stdout = biskit(&["booleanize", &corpus(name)]).stdout;
        let s = InvSemigroup::parse(&stdout).unwrap();
        assert_eq!(s.size(), size);
        assert!(check_boolean(&s).boolean);
        assert!(stdout.contains("# beta:"));

        let out = dir.path().join(name);
        let o = biskit(&["booleanize", &corpus(name), "--out", out.to_str().unwrap()]);
        assert_eq!(o.code, 0);
        let written = InvSemigroup::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(written, s);
        let beta = std::fs::read_to_string(format!("{}.beta", out.display())).unwrap();
        assert!(beta.starts_with("beta:\n"));
    }
}

#[test]
fn iso_modes() {
    let yes = biskit(&["iso", &corpus("b2.ist"), &corpus("b2-relabeled.ist")]);
    assert!(yes.stdout.starts_with("true"));
    let no = biskit(&["iso", &corpus("b2.ist"), &corpus("z2zero.ist")]);
    assert!(no.stdout.starts_with("false"));
    let chains = biskit(&["iso", &corpus("chain3.ist"), &corpus("antichain3.ist")]);
    assert!(chains.stdout.starts_with("true"));
    let direct = biskit(&["iso", &corpus("b2.ist"), &corpus("b2-relabeled.ist"), "--mode", "direct"]);
    assert!(direct.stdout.contains("certificate"));
    let capped = biskit(&["iso", &corpus("i3.ist"), &corpus("i3.ist"), "--mode", "direct"]);
    assert_eq!(capped.code, 1);
    assert!(capped.stderr.contains("SizeCapExceeded"));
}

#[test]
fn decompose_and_type() {
    let d = biskit(&["decompose", &corpus("m2z2zero.ist")]);
    assert!(d.stdout.contains("signature {(2, Z2)}") && d.stdout.contains("verified  true"));
    let t = biskit(&["type", &corpus("i2xz2zero.ist")]);
    assert!(t.stdout.starts_with("rank 2"));
    for line in ["valuation true", "refinement true", "ideal lattices isomorphic true", "0-simplifying false", "mu invariant true", "matrix oracle (N=2) true"] {
        assert!(t.stdout.contains(line), "{line}");
    }
    let not_boolean = biskit(&["type", &corpus("b2.ist")]);
    assert_eq!(not_boolean.code, 1);
    assert!(not_boolean.stderr.contains("NotBoolean"));
}

#[test]
fn verify_corpus_and_failures() {
    let all = biskit(&["verify", "--corpus"]);
    assert_eq!(all.code, 0, "{}", all.stderr);
    assert!(all.stdout.contains(" 0 failed"));

    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.ist");
    std::fs::write(&empty, "").unwrap();
    let out = biskit(&["verify", empty.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("ParseError"));

    // swap two entries of i2
    let text = std::fs::read_to_string(corpus("i2.ist")).unwrap();
    let s = InvSemigroup::parse(&text).unwrap();
    let mut table = s.table().to_vec();
    table.swap(8, 13);
    let body: Vec<String> = table.chunks(7).map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
    let swapped = dir.path().join("swapped.ist");
    std::fs::write(&swapped, format!("n 7\n{}\n", body.join("\n"))).unwrap();
    let out = biskit(&["verify", swapped.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("first failure"));
}

#[test]
fn usage_errors() {
    assert!(Cli::try_parse_from(["biskit", "analyze"]).is_err());
    assert!(Cli::try_parse_from(["biskit", "iso", "a", "b", "--mode", "fast"]).is_err());
    let missing = biskit(&["analyze", "/nonexistent/x.ist"]);
    assert_eq!(missing.code, 2);
    assert_eq!(biskit(&["verify"]).code, 2);
}
