use std::path::Path;
use std::process::{Command, Output};

fn kreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kreg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn fit_is_deterministic() {
    let a = kreg(&["fit", "--method", "nw", "--bandwidth", "1.5", "--grid-points", "51"]);
    let b = kreg(&["fit", "--method", "nw", "--bandwidth", "1.5", "--grid-points", "51"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().next(), Some("x,value,defined"));
    assert_eq!(text.lines().count(), 52);
}

#[test]
fn cv_writes_profile_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("profile.csv");
    let o = kreg(&["cv", "--method", "gm", "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cw = summary["cw_star"].as_f64().unwrap();
    assert!((cw - 20.7).abs() < 0.1);
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 67);
    let saved: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.with_extension("json")).unwrap()).unwrap();
    assert_eq!(saved, summary);
}

#[test]
fn check_reports_pc_violation() {
    let o = kreg(&["check", "--method", "pc", "--bandwidth", "1"]);
    assert!(o.status.success());
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["pc_violation"]["status"], "found");
    assert!(r["shift_deviation"].as_f64().unwrap() > 1e-6);
    assert_eq!(r["log_concavity"]["passed"], true);
}

#[test]
fn check_existing_curve() {
    let dir = tempfile::tempdir().unwrap();
    let curve = write(dir.path(), "c.csv", "x,value,defined\n0,1,1\n1,0.5,1\n2,,0\n3,2,1\n");
    let o = kreg(&["check", "--curve", &curve]);
    assert!(o.status.success());
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["monotonicity"]["is_nondecreasing"], false);
    assert!((r["monotonicity"]["worst_violation"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn isotonic_and_app_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("iso.csv");
    let o = kreg(&["isotonic", "--method", "nw", "--bandwidth", "2", "-o", base.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(dir.path().join("iso_is.csv").exists() && dir.path().join("iso_si.csv").exists());

    let times = write(dir.path(), "t.csv", "t\n0.5\n1.2\n1.3\n4\n");
    let o = kreg(&["app", "--app", "counting", "--input", &times, "--bandwidth", "0.5", "--grid-points", "11"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("x,value,defined,intensity"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(kreg(&["fit", "--kernel", "triangle"]).status.code(), Some(2));
    assert_eq!(kreg(&["fit", "--bandwidth", "-1"]).status.code(), Some(2));
    let bad = write(dir.path(), "bad.csv", "x,y\n1,2\n3,oops\n");
    let o = kreg(&["fit", "--input", &bad]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error[parse-error]"));
    let missing = dir.path().join("nope.csv");
    assert_eq!(kreg(&["fit", "--input", missing.to_str().unwrap()]).status.code(), Some(5));
    let single = write(dir.path(), "one.csv", "1,2\n");
    assert_eq!(kreg(&["cv", "--input", &single]).status.code(), Some(2));
    let far = write(dir.path(), "far.csv", "0,1\n10,2\n");
    let o = kreg(&["cv", "--input", &far, "--method", "nw", "--kernel", "rectangular", "--h-lo", "0.1", "--h-hi", "1"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error[all-infinite-cv]"));
}
