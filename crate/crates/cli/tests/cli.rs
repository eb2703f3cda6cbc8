use std::process::{Command, Output};

fn ferrochi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ferrochi"))
        .args(args)
        .output()
        .expect("spawn ferrochi")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn chi_golden_outputs() {
    let o = ferrochi(&["chi", "--v", "1,2,3,4", "--method", "dperm"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"var\":\"t\",\"coeffs\":[-1,3,-3,1]}\n");

    let o = ferrochi(&["chi", "--v", "2,4", "--method", "dperm"]);
    assert_eq!(stdout(&o), "{\"var\":\"t\",\"coeffs\":[0,1]}\n");

    for method in ["dperm", "bond", "arrangement", "genfun", "dowling"] {
        let o = ferrochi(&["chi", "--nu", "2,1", "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        assert_eq!(
            json(&o),
            json(&ferrochi(&["chi", "--nu", "2,1", "--method", "bond"])),
            "{method}"
        );
    }
}

#[test]
fn all_methods_agree() {
    let o = ferrochi(&["chi", "--nu", "1,1", "--all-methods"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "agree");
    assert_eq!(v["chi"]["coeffs"], serde_json::json!([-1, 3, -3, 1]));
    assert_eq!(v["methods"].as_array().unwrap().len(), 4);

    let o = ferrochi(&["chi", "--nu", "1,1", "--all-methods", "--pretty"]);
    assert!(stdout(&o).contains("t³ − 3t² + 3t − 1"));
    assert!(stdout(&o).contains("verdict: agree"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["chi"][..],
        &["chi", "--v", "1,2", "--nu", "1"],
        &["chi", "--v", "1,x"],
        &["bogus"],
        &["chi", "--v", "1,2", "--method", "nope"],
        &["genfun", "--family", "k-staircase", "--order", "2", "--t0", "--t", "1"],
        &["verify", "--max-n", "0"],
        &["--threads", "0", "chi", "--v", "1,2"],
    ] {
        let o = ferrochi(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(ferrochi(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_one() {
    assert_eq!(ferrochi(&["chi", "--v", "0,2"]).status.code(), Some(1));
    assert_eq!(ferrochi(&["chi", "--v", "1,3", "--method", "genfun"]).status.code(), Some(1));
    assert_eq!(ferrochi(&["lambda", "--s", "1,3"]).status.code(), Some(1));
    assert_eq!(ferrochi(&["chi", "--v", "1,2,3,4,5,6,7,8,9,10,11,12,13,14"]).status.code(), Some(1));
}

#[test]
fn verification_failure_exits_two() {
    let dir = std::env::temp_dir().join(format!("ferrochi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("tight.toml");
    std::fs::write(&cfg, "hyperplane_max = 2\n").unwrap();
    let o = ferrochi(&["--config", cfg.to_str().unwrap(), "verify", "--suite", "lattice", "--max-n", "2", "--max-k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["status"], "fail");
    assert!(v["failed"].as_u64().unwrap() > 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_config_exits_one() {
    let dir = std::env::temp_dir().join(format!("ferrochi-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("bad.toml");
    std::fs::write(&cfg, "no_such_key = 3\n").unwrap();
    let o = ferrochi(&["--config", cfg.to_str().unwrap(), "chi", "--v", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = ferrochi(&["--config", "/nonexistent/ferrochi.toml", "chi", "--v", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tables_are_csv_with_header() {
    let o = ferrochi(&["table", "--family", "regions", "--nu-family", "k-staircase", "--k", "1", "--max-n", "2"]);
    assert_eq!(stdout(&o), "n,value\n1,2\n2,8\n");
    let o = ferrochi(&["table", "--family", "genocchi", "--k", "1", "--max-n", "4"]);
    assert_eq!(stdout(&o), "n,value\n1,1\n2,1\n3,3\n4,17\n");
    let o = ferrochi(&["genocchi", "--k", "1", "--n", "3", "--median"]);
    assert_eq!(stdout(&o), "n,value\n1,2\n2,8\n3,56\n");
    let o = ferrochi(&["table", "--family", "chromatic-bipartite", "--k", "2", "--max-n", "2"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0], "n,value");
}

#[test]
fn chromatic_table_matches_deletion_contraction() {
    use ferrochi_core::lattice::chromatic_deletion_contraction;
    let o = ferrochi(&["table", "--family", "chromatic-bipartite", "--k", "2", "--max-n", "2"]);
    let text = stdout(&o);
    let k12 = chromatic_deletion_contraction(3, &[(0, 1), (0, 2)]);
    let k22 = chromatic_deletion_contraction(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
    assert_eq!(text, format!("n,value\n1,{k12}\n2,{k22}\n"));
}

#[test]
fn genfun_evaluations() {
    let o = ferrochi(&["genfun", "--family", "k-staircase", "--k", "1", "--order", "3", "--t=-1"]);
    let v = json(&o);
    assert_eq!(v["coeffs"], serde_json::json!([0, -2, -8, -56]));
    let o = ferrochi(&["genfun", "--family", "k-staircase", "--k", "1", "--order", "4", "--t0"]);
    let v = json(&o);
    assert_eq!(v["coeffs"], serde_json::json!([0, -1, -1, -3, -17]));
    let o = ferrochi(&["genfun", "--family", "k-staircase", "--k", "2", "--order", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["order"], 5);
}

#[test]
fn lambda_and_enumerations() {
    let o = ferrochi(&["lambda", "--s", "1,2,3,4", "--method", "both"]);
    let v = json(&o);
    assert_eq!(v["agree"], true);
    assert_eq!(v["rec"]["terms"].as_array().unwrap().len(), 3);

    let o = ferrochi(&["staircases", "--s", "1,2,3,4", "--count-only"]);
    assert_eq!(json(&o)["count"], 3);

    let o = ferrochi(&["dperms", "--v", "1,2,3,4"]);
    let v = json(&o);
    let chi = json(&ferrochi(&["chi", "--v", "1,2,3,4", "--method", "bond"]));
    let unsigned: i64 = chi["coeffs"].as_array().unwrap().iter().map(|c| c.as_i64().unwrap().abs()).sum();
    assert_eq!(v["count"], unsigned);
    assert_eq!(v["dperms"].as_array().unwrap().len() as i64, unsigned);
}

#[test]
fn regions_and_map() {
    let o = ferrochi(&["regions", "--nu", "1,1"]);
    let v = json(&o);
    assert_eq!(v["regions"], 8);
    assert_eq!(v["hyperplane_count"], 3);
    let o = ferrochi(&["map", "--nu", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["chi", "--nu", "2,2", "--all-methods"][..],
        &["dperms", "--v", "1,2,4", "--q", "2"],
        &["verify", "--suite", "genocchi", "--max-n", "3", "--threads", "3"],
        &["verify", "--suite", "lambda", "--max-evens", "2", "--pretty"],
    ] {
        let a = ferrochi(args);
        let b = ferrochi(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_report() {
    let one = ferrochi(&["--threads", "1", "verify", "--suite", "dperm", "--max-n", "2"]);
    let four = ferrochi(&["--threads", "4", "verify", "--suite", "dperm", "--max-n", "2"]);
    assert_eq!(one.stdout, four.stdout);
}
