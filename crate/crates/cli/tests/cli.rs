use std::io::Write;
use std::process::{Command, Output, Stdio};

fn looprank(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_looprank"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn rank_of_inline_json_and_stdin() {
    let c4 = r#"{"order":4,"edges":[[0,1],[1,2],[2,3],[3,0]],"loops":[0,2]}"#;
    let o = looprank(&["rank", c4], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "rank: 3\n");

    let k5 = r#"{"order":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],"loops":[0,1,2,3,4]}"#;
    assert_eq!(stdout(&looprank(&["rank"], Some(k5))), "rank: 1\n");

    let p4 = r#"{"order":4,"edges":[[0,1],[1,2],[2,3]],"loops":[0]}"#;
    let o = looprank(&["rank", "-", "--witness"], Some(p4));
    assert_eq!(stdout(&o), "rank: 4\nwitness: P4_1 on vertices {0,1,2,3}\n");
}

#[test]
fn rank_from_file() {
    let path = std::env::temp_dir().join(format!("looprank-cli-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"order":2,"edges":[[0,1]],"loops":[0]}"#).unwrap();
    let o = looprank(&["rank", path.to_str().unwrap()], None);
    std::fs::remove_file(&path).ok();
    assert_eq!(stdout(&o), "rank: 2\n");
}

#[test]
fn family_json_output() {
    let o = looprank(&["family", "H2p", "--w", "3", "--out", "json"], None);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 7);
    assert_eq!(v["loops"], serde_json::json!([0, 2]));

    let o = looprank(&["family", "rank2", "--n", "5", "--sigma", "2"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["order"].as_u64(), v["loops"].as_array().unwrap().len()), (Some(5), 2));

    let o = looprank(&["family", "H1", "--w", "0"], None);
    assert_eq!(stdout(&o).trim(), r#"{"order":4,"edges":[[0,1],[0,3],[1,2],[2,3]],"loops":[0]}"#);
}

#[test]
fn family_members_pipe_into_rank() {
    for name in ["H1", "H2", "H2p", "H3", "H4", "H5"] {
        for w in 0..=5 {
            let json = stdout(&looprank(&["family", name, "--w", &w.to_string()], None));
            assert_eq!(stdout(&looprank(&["rank"], Some(&json))), "rank: 3\n", "{name} w={w}");
        }
    }
}

#[test]
fn dot_output() {
    let o = looprank(&["family", "H1", "--w", "1", "--format", "dot"], None);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph \"H1(w=1)\" {\n"), "{dot}");
    assert!(dot.contains("  0 -- 0;\n") && dot.contains("  1 -- 4;\n") && dot.ends_with("}\n"), "{dot}");

    let o = looprank(&["export"], Some(r#"{"order":2,"edges":[[0,1]],"loops":[1]}"#));
    assert_eq!(stdout(&o), "graph {\n  0;\n  1;\n  1 -- 1;\n  0 -- 1;\n}\n");
}

#[test]
fn errors_exit_nonzero_with_a_useful_message() {
    let o = looprank(&["family", "H9"], None);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(["H1", "H2p", "H5", "rank1", "rank2"].iter().all(|n| err.contains(n)), "{err}");

    let o = looprank(&["rank", r#"{"order":3,"edges":[[0,7]],"loops":[]}"#], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("edges[0]"), "{}", stderr(&o));

    let o = looprank(&["rank"], Some("{not json"));
    assert_eq!(o.status.code(), Some(2));

    let o = looprank(&["family", "rank2", "--n", "3", "--sigma", "3"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = looprank(&["verify", "c4-table"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "verified");
    assert_eq!(v["checked"], 16);

    let o = looprank(&["verify", "cycle-bound", "--n-max", "7"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).starts_with("cycle-bound: verified (221 checked"), "{}", stderr(&o));

    let o = looprank(&["verify", "cycle-bound", "--n-max", "12"], None);
    assert_eq!(o.status.code(), Some(2));

    let o = looprank(&["classify", "--order", "6"], None);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "refuted");
    assert_eq!(v["witnesses"]["counts"]["unmatched"], 2);

    let o = looprank(&["--jobs", "1", "verify", "classify", "--order", "5"], None);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn named_graphs() {
    let o = looprank(&["named", "p4_hat"], None);
    assert_eq!(stdout(&looprank(&["rank"], Some(&stdout(&o)))), "rank: 4\n");
    assert_eq!(looprank(&["named", "nope"], None).status.code(), Some(2));
}
