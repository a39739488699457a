use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystals")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_reports_isomorphic_models() {
    let o = run(&["verify", "--type", "B", "--rank", "2", "--weight", "1,0"]);
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["iso_ok"], true);
    assert_eq!(report["model_sizes"]["kn"], 5);
    assert_eq!(report["model_sizes"]["wall"], 5);
    assert_eq!(report["dims_vs_oracle"]["weyl_dim"], 5);
}

#[test]
fn enumerate_spin_tableaux() {
    let o = run(&["enumerate", "--type", "B", "--rank", "3", "--weight", "0,0,1", "--model", "rev"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().all(|l| l.starts_with("sp[")));
}

#[test]
fn enumerate_as_json() {
    let o = run(&["enumerate", "--type", "C", "--rank", "2", "--weight", "1,0", "--output", "json"]);
    let keys: Vec<String> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(keys.len(), 4);
}

#[test]
fn trivial_weight_is_one_node() {
    let o = run(&["graph", "--type", "B", "--rank", "2", "--weight", "0,0", "--output", "dot"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.lines().filter(|l| l.contains("label=")).count(), 1);
    assert!(!out.contains("->"));
}

#[test]
fn graph_json_shape() {
    let o = run(&["graph", "--type", "A", "--rank", "2", "--weight", "1,0", "--output", "json"]);
    let g: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(g["nodes"].as_array().unwrap().len(), 3);
    assert_eq!(g["edges"].as_array().unwrap().len(), 2);
    assert_eq!(g["highest"].as_array().unwrap().len(), 1);
}

#[test]
fn wall_model_matches_tableaux() {
    let walls = run(&["enumerate", "--type", "B", "--rank", "3", "--weight", "1,0,1", "--model", "wall"]);
    assert_eq!(stdout(&walls).lines().count(), 48);
    let o = run(&["enumerate", "--type", "C", "--rank", "3", "--weight", "1,0,0", "--model", "wall"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dims_table_passes() {
    let o = run(&["dims", "--type", "D", "--rank", "4", "--max-sum", "1"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(run(&["verify", "--type", "B", "--rank", "2", "--weight", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--type", "B", "--rank", "2", "--weight", "1,-1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--type", "E", "--rank", "6", "--weight", "1,0,0,0,0,0"]).status.code(), Some(2));
}

#[test]
fn node_cap_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_crystals"))
        .args(["graph", "--type", "B", "--rank", "3", "--weight", "1,1,1"])
        .env("CRYSTALS_NODE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn rev_policy_flags_are_accepted() {
    let base = run(&["enumerate", "--type", "B", "--rank", "3", "--weight", "0,1,1", "--model", "rev"]);
    let loose = run(&["enumerate", "--type", "B", "--rank", "3", "--weight", "0,1,1", "--model", "rev", "--first-two-column-diagonal"]);
    assert!(base.status.success() && loose.status.success());
    assert!(stdout(&loose).lines().count() >= stdout(&base).lines().count());
}
