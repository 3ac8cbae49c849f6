use std::path::PathBuf;
use std::process::{Command, Output};

fn mellin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mellin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn latex_of_first_log_integral() {
    let o = mellin(&["closed-form", "log-odd", "--q", "0", "--n", "1", "--latex"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r"-3\,\frac{\zeta'(2)}{\pi^{2}} - \frac{1}{2} + \frac{1}{2} \ln \pi - \frac{2}{3} \ln 2"
    );
}

#[test]
fn divergent_parameters_exit_two_with_reason() {
    let o = mellin(&["closed-form", "log-odd", "--q", "3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2q+1 < 2n+1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mellin(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(mellin(&["phi-odd", "3", "--n", "1"]).status.code(), Some(2));
    assert_eq!(mellin(&["verify", "alt-binom-odd", "--range", "9..2"]).status.code(), Some(2));
    assert_eq!(mellin(&["--config", "max-n=10", "verify", "alt-binom-odd", "--range", "1..25"]).status.code(), Some(2));
    assert_eq!(mellin(&["--config", "colour=blue", "constants"]).status.code(), Some(2));
}

#[test]
fn suite_passes_and_reports_json() {
    let o = mellin(&["verify", "alt-binom-odd", "--range", "1..25"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS alt-binom-odd"));

    let a = mellin(&["verify", "lemma-euler-bernoulli", "--range", "1..6", "--json"]);
    let b = mellin(&["verify", "lemma-euler-bernoulli", "--range", "1..6", "--json"]);
    assert_eq!(stdout(&a), stdout(&b), "report must be deterministic");
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["family"], "lemma-euler-bernoulli");
    assert_eq!(v["failed"], 0);
    assert_eq!(v["exact"], true);
}

#[test]
fn numeric_suite_declares_precision() {
    let o = mellin(&["verify", "cross-rep", "--range", "1..2", "--prec", "30", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["precision"], 30);
    assert_eq!(v["tolerance"], "1e-25");
}

#[test]
fn phi_odd_prints_both_representations() {
    let o = mellin(&["phi-odd", "1", "--n", "1"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "(4/3)*eta'(-1) + (8/3)*eta'(-3)");
    assert!(lines[1].contains("zeta'(4)"));
}

#[test]
fn eval_reads_closed_forms_and_specs() {
    let cf = scratch("c2.json", r#"{"terms":[{"symbol":"beta_prime_ratio","p":0,"coeff":"-4"},{"symbol":"ln_pi","coeff":"1"},{"symbol":"ln2","coeff":"-1"}]}"#);
    let o = mellin(&["eval", "--json-file", cf.to_str().unwrap(), "--prec", "25"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().starts_with("0.2059731205121406923"));

    let spec = scratch("spec.json", r#"{"family":"log_odd_cosh","q":0,"n":1}"#);
    let o = mellin(&["eval", "--json-file", spec.to_str().unwrap(), "--quad"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1], lines[2].split_whitespace().next().unwrap());

    let junk = scratch("junk.json", "{\"hello\": 1}");
    assert_eq!(mellin(&["eval", "--json-file", junk.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn config_file_sets_precision() {
    let cfg = scratch("mellin.conf", "# defaults\nprec = 12\n");
    let o = mellin(&["--config-file", cfg.to_str().unwrap(), "constants"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().next().unwrap().ends_with("3.141592653590"));
}

#[test]
fn worked_corpus_reproduces() {
    let o = mellin(&["reproduce"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS worked-examples (37/37 cells)"));
}
