use std::process::{Command, Output};

use bricklayer::brickstack::BrickStack;
use bricklayer::seqcore::BitString;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bricklayer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn count_commands() {
    for (args, want) in [
        (
            vec!["count", "stacks", "--m", "6", "--q", "2"],
            "total=8 nonempty=7\n",
        ),
        (
            vec!["count", "stacks", "--m", "4", "--q", "1"],
            "total=6 nonempty=5\n",
        ),
        (
            vec!["count", "stacks", "--m", "1", "--q", "1"],
            "total=1 nonempty=0\n",
        ),
        (vec!["count", "gcatalan", "--n", "2", "--q", "2"], "3\n"),
        (vec!["count", "catalan", "--n", "30"], "3814986502092304\n"),
        (
            vec!["count", "satisfying", "--k", "2", "--p", "1", "--q", "1"],
            "2\n",
        ),
        (vec!["count", "trees", "--n", "3", "--q", "1"], "5\n"),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o), want, "{args:?}");
        assert!(o.stderr.is_empty());
    }
}

#[test]
fn missing_parameter_is_usage_error() {
    let o = run(&["count", "stacks", "--m", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--q"));
    assert!(o.stdout.is_empty());
}

#[test]
fn enumerate_commands() {
    let o = run(&["enumerate", "stacks", "--m", "4", "--q", "1"]);
    assert_eq!(stdout(&o).lines().count(), 6);

    let o = run(&[
        "enumerate",
        "sequences",
        "--m",
        "9",
        "--q",
        "2",
        "--ones",
        "3",
    ]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 12);
    assert!(lines.contains(&"000001101".to_string()));

    let o = run(&["enumerate", "trees", "--n", "0", "--q", "3"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn json_lines_round_trip() {
    let o = run(&[
        "enumerate",
        "stacks",
        "--m",
        "6",
        "--q",
        "2",
        "--format",
        "json",
    ]);
    for line in stdout(&o).lines() {
        let s: BrickStack = serde_json::from_str(line).unwrap();
        let text = s.to_string();
        assert_eq!(text.parse::<BrickStack>().unwrap(), s);
    }
    let o = run(&[
        "enumerate",
        "sequences",
        "--m",
        "5",
        "--q",
        "1",
        "--format",
        "json",
    ]);
    for line in stdout(&o).lines() {
        let s: String = serde_json::from_str(line).unwrap();
        s.parse::<BitString>().unwrap();
    }
}

#[test]
fn enumerate_cap() {
    let o = run(&[
        "enumerate",
        "stacks",
        "--m",
        "14",
        "--q",
        "1",
        "--cap",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--cap"));
    assert!(o.stdout.is_empty());
}

#[test]
fn map_commands() {
    let o = run(&["map", "seq-to-stack", "000101000100", "--q", "2"]);
    assert_eq!(stdout(&o), "q=2;m=12;rows=[0,3,7][1]\n");
    let o = run(&["map", "stack-to-seq", "q=2;m=12;rows=[0,3,7][1]"]);
    assert_eq!(stdout(&o), "000101000100\n");
    let o = run(&["map", "stack-to-seq", "q=1;m=3;rows=[]"]);
    assert_eq!(stdout(&o), "000\n");

    let o = run(&["map", "seq-to-stack", "110", "--q", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not q-satisfying"));
}

#[test]
fn render_commands() {
    let o = run(&["render", "q=1;m=5;rows=[]"]);
    assert_eq!(stdout(&o), "-----\n");
    let o = run(&["render", "q=2;m=12;rows=[0,3,7][1]"]);
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = run(&["render", "q=1;m=4;rows=[][0]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stderr(&o).is_empty());
}

#[test]
fn verify_commands() {
    for args in [
        vec!["verify", "cycle", "--max-size", "12"],
        vec!["verify", "bijection", "--m", "8", "--q", "2"],
        vec!["verify", "recurrences", "--m", "30", "--q", "3"],
        vec!["verify", "montagh", "--k", "200", "--seed", "5"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains("PASS"), "{args:?}");
    }
    let o = run(&["verify", "nothing"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "cycle", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--cap"));
}

#[test]
fn verify_is_deterministic() {
    let a = run(&[
        "verify", "montagh", "--k", "100", "--seed", "9", "--format", "json",
    ]);
    let b = run(&[
        "verify", "montagh", "--k", "100", "--seed", "9", "--format", "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let summary: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(summary["status"], "PASS");
}
