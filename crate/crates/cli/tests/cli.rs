//! The binary end to end: exit codes, the documented examples, and JSON
//! round trips.

use std::process::{Command, Output};

use paratorsion_cli::regression::Line;
use paratorsion_cli::report::{AlgebraSummary, AnalyzeReport, SearchSummary};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paratorsion")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Parse, re-emit, parse again: both the value and the text must survive.
fn json<T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug>(o: &Output) -> T {
    let text = stdout(o);
    let v: T = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    let again = serde_json::to_string_pretty(&v).unwrap();
    assert_eq!(serde_json::from_str::<T>(&again).unwrap(), v);
    assert_eq!(again.trim_end(), text.trim_end());
    v
}

fn analyze(args: &[&str]) -> AnalyzeReport {
    let mut a = vec!["analyze", "--json"];
    a.extend_from_slice(args);
    let o = run(&a);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    json(&o)
}

#[test]
fn check_exit_codes() {
    let o = run(&["check", "--json", "0,0,0,12"]);
    assert_eq!(code(&o), 0);
    let s: AlgebraSummary = json(&o);
    assert!(s.jacobi && s.nilpotent && s.unimodular);

    let o = run(&["check", "23,31,12,14"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("d(de^4) = 234"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "name: bad\nsalamon: 0,0,1?\n").unwrap();
    let o = run(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at byte"));

    assert_eq!(code(&run(&["check", "missing.alg"])), 2);
}

#[test]
fn check_reads_record_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heis.alg");
    std::fs::write(&path, "name: heisenberg\nd e^4 = 12\n").unwrap();
    let s: AlgebraSummary = json(&run(&["check", "--json", path.to_str().unwrap()]));
    assert_eq!((s.name.as_deref(), s.salamon.as_str(), s.dim), (Some("heisenberg"), "0,0,0,12", 4));
}

#[test]
fn analyze_examples() {
    let r = analyze(&["0,0,0,12"]);
    assert_eq!(r.torsion.class, "W2");
    assert!(r.curvature.ricci_flat && r.curvature.flat && !r.torsion.paracomplex);
    assert!(r.agreement.all);
    assert_eq!(r.torsion.components["tau2"], "2|12");

    let r = analyze(&["24,0,0,0,0,35"]);
    assert!(r.torsion.parakahler && r.curvature.ricci_flat && !r.curvature.flat);
    assert_eq!(r.curvature.riemann, "-34|34");

    let r = analyze(&["-14,0,0,0,45,46"]);
    assert_eq!((r.curvature.ric.as_str(), r.curvature.ric_s2v.as_str(), r.curvature.ric_s2v_star.as_str()), ("4|4", "4|4", "0"));
}

#[test]
fn neg_v_coframe_flips_s() {
    let plain = analyze(&["--coframe", "standard", "0,0,0,12"]);
    let flipped = analyze(&["--coframe", "neg-V", "0,0,0,12"]);
    assert_eq!(flipped.torsion.class, plain.torsion.class);
    assert_eq!(flipped.meta.coframe, "-1 0 0 0; 0 -1 0 0; 0 0 1 0; 0 0 0 1");

    let plain = analyze(&["aff3"]);
    let flipped = analyze(&["--coframe", "neg-V", "aff3"]);
    assert_eq!((plain.curvature.s.as_str(), flipped.curvature.s.as_str()), ("2", "-2"));
    assert!(flipped.agreement.all);
}

#[test]
fn analyze_errors() {
    assert_eq!(code(&run(&["analyze", "0,0,12"])), 3);
    assert_eq!(code(&run(&["analyze", "23,31,12,14"])), 3);
    assert_eq!(code(&run(&["analyze", "0,0,0,12", "--coframe", "1 0; 0 1"])), 3);
    assert_eq!(code(&run(&["analyze", "table1.alg", "--family", "1", "--params", "lambda"])), 2);
    assert_eq!(code(&run(&["analyze", "table1.alg", "--family", "1"])), 3);
}

#[test]
fn analyze_table1_record() {
    let r = analyze(&["table1.alg", "--family", "2", "--params", "lambda=2,mu=-3,k=1"]);
    assert_eq!(r.algebra.name.as_deref(), Some("table1-row2"));
    assert_eq!(r.torsion.class, "W1");
    assert!(r.curvature.ricci_flat && !r.curvature.flat && r.algebra.nilpotent);
}

#[test]
fn search_examples() {
    let o = run(&["search", "--json", "table1.alg", "--family", "1", "--params", "λ=1,μ=1,k=0"]);
    assert_eq!(code(&o), 0);
    let s: SearchSummary = json(&o);
    assert!(s.family.as_ref().unwrap().all);
    assert_eq!(s.successes, 1);
    let c = &s.candidates[0];
    assert_eq!(c.f_space.len(), 5);
    assert_eq!(c.witnesses.len(), 20);
    assert!(c.witnesses.iter().all(|w| w.ok && w.class == "W1" && w.ricci_flat));

    let o = run(&["search", "--json", "0,0,0,0,0,0", "--splitting", "coords"]);
    assert_eq!(code(&o), 0);
    let s: SearchSummary = json(&o);
    assert!(s.candidates.iter().all(|c| !c.conditions.rank3 && !c.success));

    let o = run(&["search", "--json", "table1.alg", "--family", "3", "--splitting", "coords", "--params", "lambda=1,mu=2,k=0"]);
    let s: SearchSummary = json(&o);
    assert_eq!(s.successes, 1);
    assert!(s.candidates[0].witnesses.iter().all(|w| w.class == "W1" && !w.flat));
}

#[test]
fn search_splitting_sources() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.txt");
    let rows: Vec<String> = (0..8).map(|i| (0..8).map(|j| if i == j { "1" } else { "0" }).collect::<Vec<_>>().join(" ")).collect();
    std::fs::write(&path, rows.join("\n")).unwrap();
    let file = format!("file:{}", path.display());
    let s: SearchSummary = json(&run(&["search", "--json", "table1-row1", "--splitting", &file]));
    assert_eq!(s.successes, 1);

    let s: SearchSummary = json(&run(&["search", "--json", "abelian-4", "--splitting", "enum:1", "--cap", "10"]));
    assert_eq!(s.candidates.len(), 10);
    assert!(s.truncated);

    assert_eq!(code(&run(&["search", "abelian-4", "--splitting", "enum:x"])), 2);
    assert_eq!(code(&run(&["search", "abelian-4", "--splitting", "grid"])), 3);
    assert_eq!(code(&run(&["search", "table1.alg", "--family", "1", "--params", "lambda=1,mu=0"])), 3);
}

#[test]
fn product_examples() {
    let o = run(&["product", "--json", "0,0,0,12", "0,0,0,0,0,45"]);
    assert_eq!(code(&o), 0);
    let r: AnalyzeReport = json(&o);
    assert_eq!(r.torsion.class, "W2+W3");
    assert!(r.curvature.ricci_flat);

    let r: AnalyzeReport = json(&run(&["product", "--json", "abelian", "abelian"]));
    assert_eq!(r.torsion.class, "0");
    let r: AnalyzeReport = json(&run(&["product", "--json", "0,0,0,12", "abelian-4"]));
    assert_eq!(r.torsion.class, "W2");
}

#[test]
fn corpus_regression() {
    let o = run(&["corpus", "--json"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<Line> = json(&o);
    assert!(lines.iter().all(|l| l.ok), "{lines:?}");
    assert!(lines.len() > 40);
    // deterministic order regardless of scheduling
    let again: Vec<Line> = json(&run(&["corpus", "--json"]));
    assert_eq!(again, lines);
}
