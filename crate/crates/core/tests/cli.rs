use std::process::{Command, Output};

fn qcdesign(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcdesign")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn omega_sizes() {
    let o = qcdesign(&["omega", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = qcdesign(&["omega", "--n", "4"]);
    assert_eq!(stdout(&o).lines().count(), 120);
    let o = qcdesign(&["omega", "--n", "3", "--last-even", "--json"]);
    let v: Vec<String> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 12);
    assert!(v.iter().all(|g| (g.as_bytes()[2] - b'0').is_multiple_of(2)));
}

#[test]
fn omega_rejects_n1() {
    let o = qcdesign(&["omega", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n = 1"));
}

#[test]
fn ma_out_of_regime() {
    let o = qcdesign(&["ma", "--n", "3", "--runs", "64", "--q", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("48..=56"));
}

#[test]
fn ma_summary() {
    let o = qcdesign(&["ma", "--n", "4", "--runs", "128", "--q", "103"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("B = [1 2 12 3]"));
    assert!(text.contains("A3 = 1360"));
    assert!(text.contains("A4 = 35707"));
    assert!(text.contains("resolution = 7/2"));
}

#[test]
fn written_design_round_trips_through_wlp() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = qcdesign(&["ma", "--n", "3", "--runs", "64", "--q", "51", "--out", out, "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let record: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let csv = dir.path().join("qc_n3_N64_q51.csv");
    let on_disk: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("qc_n3_N64_q51.json")).unwrap()).unwrap();
    assert_eq!(record, on_disk);
    let o = qcdesign(&["wlp", csv.to_str().unwrap(), "--method", "both", "--max-k", "5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("A1 = 0"));
    assert!(text.contains("A2 = 0"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn wlp_reports_bad_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "1,-1\n1,1\n-1,x\n").unwrap();
    let o = qcdesign(&["wlp", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"));
}

#[test]
fn optimal_b_table_unsupported_n() {
    let o = qcdesign(&["table1", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qcdesign(&["table1", "--n", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("[1 2 12 3 13 23 123]"));
}

#[test]
fn search_matches_pipeline() {
    let o = qcdesign(&["search", "--n", "2", "--runs", "16", "--q", "9"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["q"], 9);
}

#[test]
fn verify_n2() {
    let o = qcdesign(&["verify", "--n", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}
