use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cqsym(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cqsym"))
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

const C3: &str = r#"{"n":3,"edges":[[1,2],[2,3],[3,1]]}"#;
const K21: &str = r#"{"n":3,"edges":[[1,3],[2,3]]}"#;

#[test]
fn compute_prints_rendering_and_json() {
    let o = cqsym(&["compute", "--graph", "-", "--basis", "e", "--method", "direct"], Some(C3));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "(3t+3t²)·e[3]\n{\"n\":3,\"basis\":\"e\",\"terms\":[{\"index\":[3],\"t\":[\"0\",\"3\",\"3\"]}]}\n"
    );
}

#[test]
fn output_flags_and_methods() {
    for method in ["direct", "f-basis", "p-basis", "series"] {
        let o = cqsym(&["compute", "--graph", "-", "--basis", "e", "--method", method, "--pretty"], Some(C3));
        assert_eq!(stdout(&o), "(3t+3t²)·e[3]\n", "{method}");
    }
    let o = cqsym(&["compute", "--graph", "-", "--basis", "M", "--json"], Some(r#"{"n":1,"edges":[]}"#));
    assert_eq!(stdout(&o), "{\"n\":1,\"basis\":\"M\",\"terms\":[{\"index\":[1],\"t\":[\"1\"]}]}\n");
}

#[test]
fn output_is_independent_of_worker_count() {
    let c5 = r#"{"n":5,"edges":[[1,2],[2,3],[3,4],[4,5],[5,1],[1,3]]}"#;
    let runs: Vec<String> = ["1", "2", "3"]
        .iter()
        .map(|j| stdout(&cqsym(&["compute", "--graph", "-", "--basis", "F", "--method", "f-basis", "--jobs", j], Some(c5))))
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn exit_codes() {
    let o = cqsym(&["compute", "--graph", "-", "--basis", "e"], Some(K21));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("M[1, 2] and M[2, 1]"));

    let o = cqsym(&["compute", "--graph", "-", "--budget-factorial", "2"], Some(C3));
    assert_eq!(o.status.code(), Some(3));

    assert_eq!(cqsym(&["compute", "--graph", "-"], Some("not json")).status.code(), Some(1));
    assert_eq!(cqsym(&["compute", "--graph", "-", "--method", "series"], Some(K21)).status.code(), Some(1));
    assert_eq!(cqsym(&["verify", "no-such-suite"], None).status.code(), Some(1));
    assert_eq!(cqsym(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(cqsym(&["verify", "cycle-p", "--max-n", "12"], None).status.code(), Some(3));
}

#[test]
fn classify_reports_witnesses() {
    let o = cqsym(&["classify", "--graph", "-", "--json"], Some(K21));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["proper_circular_arc"], false);
    assert_eq!(v["symmetric"], false);
    assert_eq!(v["circular_arc_witness"]["kind"], "in-star");
    assert_eq!(v["symmetry_witness"], serde_json::json!([[1, 2], [2, 1]]));

    let bent = r#"{"n":5,"edges":[[1,2],[2,3],[3,4],[4,5],[1,5]]}"#;
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&cqsym(&["classify", "--graph", "-", "--json"], Some(bent)))).unwrap();
    assert_eq!(v["proper_circular_arc"], false);
    assert_eq!(v["symmetric"], true);
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "f-basis", "--max-n", "4", "--samples", "20"],
        vec!["verify", "cycle-e", "--max-n", "7"],
        vec!["verify", "conjecture", "--family", "circular", "--max-n", "7"],
    ] {
        let o = cqsym(&[args.as_slice(), &["--json"]].concat(), None);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["status"], "pass");
        assert!(v.get("counterexample").is_none());
    }
}

#[test]
fn family_round_trips_into_compute() {
    let o = cqsym(&["family", "cycle", "4", "--json"], None);
    let graph = stdout(&o);
    assert_eq!(graph.trim(), r#"{"n":4,"edges":[[1,2],[2,3],[3,4],[4,1]]}"#);
    let o = cqsym(&["compute", "--graph", "-", "--basis", "e", "--pretty"], Some(&graph));
    assert_eq!(stdout(&o).trim(), "(4t+4t²+4t³)·e[4] + 2t²·e[2 2]");
}
