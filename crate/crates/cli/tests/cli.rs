use std::fs;
use std::process::{Command, Output};

fn semiperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiperm")).args(args).output().unwrap()
}

fn semiperm_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_semiperm"));
    c.args(args);
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn describe_sym3() {
    let o = semiperm(&["describe", "sym:3"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["order"], 6);
    assert_eq!(v["subgroups"], 6);
    let factors: Vec<u64> = v["chief_factors"].as_array().unwrap().iter().map(|f| f["order"].as_u64().unwrap()).collect();
    assert_eq!(factors, vec![3, 2]);
    let holds = |kind: &str| {
        v["classes"].as_array().unwrap().iter().find(|c| c["kind"] == kind).unwrap()["holds"].as_bool().unwrap()
    };
    assert!(holds("soluble"));
    assert!(holds("supersoluble"));
    assert!(!holds("nilpotent"));
}

#[test]
fn describe_trivial_and_simple() {
    let v = json(&semiperm(&["describe", "cyclic:1"]));
    assert_eq!(v["order"], 1);
    assert!(v["chief_factors"].as_array().unwrap().is_empty());

    let v = json(&semiperm(&["describe", "alt:5"]));
    assert_eq!(v["simple"], true);
    for c in v["classes"].as_array().unwrap() {
        let kind = c["kind"].as_str().unwrap();
        if kind.starts_with("p_soluble") {
            assert_eq!(c["holds"], false, "{kind}");
        }
        if kind == "quasinilpotent" {
            assert_eq!(c["holds"], true);
        }
    }
}

#[test]
fn describe_bundled_id() {
    let v = json(&semiperm(&["describe", "sg8_4"]));
    assert_eq!(v["order"], 8);
    assert_eq!(v["id"], "sg8_4");
}

#[test]
fn subgroups_lists_each_once() {
    let o = semiperm(&["subgroups", "sym:4"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 30);
    assert_eq!(lines.iter().filter(|l| l["normal"] == true).count(), 4);
}

#[test]
fn empty_corpus_is_clean() {
    let o = semiperm(&["hunt", "--corpus", "empty"]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
}

#[test]
fn check_sweep_exits_clean() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.jsonl");
    let o = semiperm(&[
        "check", "--theorem", "A", "--sigma-family", "singletons", "--corpus", "bundled-le-100", "--output",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert!(!text.is_empty());
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["theorem"], "A");
        assert_ne!(v["verdict"], "COUNTEREXAMPLE");
    }
}

#[test]
fn hunt_output_is_deterministic_across_widths() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    for (path, w) in [(&a, "1"), (&b, "3")] {
        let o = semiperm(&["hunt", "--corpus", "bundled-le-30", "--threads", w, "--output", path.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn lemmas_on_small_corpus() {
    let o = semiperm(&["lemmas", "--corpus", "bundled-le-12", "--lemma", "2.4,2.9,1.4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let recs: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // 24 groups of order at most 12
    assert_eq!(recs.len(), 3 * 24);
    assert!(recs.iter().all(|r| r["violations"].as_array().unwrap().is_empty()));
}

#[test]
fn corpus_file_and_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    fs::write(&good, "# dihedral\nd8 4 [(0 1 2 3), (0 2)]\n").unwrap();
    let o = semiperm(&["describe", "d8", "--corpus", good.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(json(&o)["order"], 8);

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "d8 4 [(0 1 2 3), (0 2)]\nx 4 [(0 9)]\n").unwrap();
    let o = semiperm(&["hunt", "--corpus", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let dup = dir.path().join("dup.txt");
    fs::write(&dup, "a 2 [(0 1)]\na 2 [(0 1)]\n").unwrap();
    assert_eq!(semiperm(&["hunt", "--corpus", dup.to_str().unwrap()]).status.code(), Some(2));

    let missing = dir.path().join("missing.txt");
    let o = semiperm(&["hunt", "--corpus", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("missing.txt"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(semiperm(&["check", "--sigma", "2|2", "--corpus", "sym:3"]).status.code(), Some(2));
    assert_eq!(semiperm(&["check", "--theorem", "Q", "--corpus", "sym:3"]).status.code(), Some(2));
    assert_eq!(semiperm(&["describe", "no-such-group"]).status.code(), Some(2));
    assert_eq!(semiperm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(semiperm(&["lemmas", "--corpus", "sym:3", "--lemma", "9.9"]).status.code(), Some(2));
    let o = semiperm_env(&["describe", "sym:3"], &[("SEMIPERM_LATTICE_CAP", "zero")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn caps_from_environment_skip_and_record() {
    let o = semiperm_env(&["hunt", "--corpus", "sym:4+cyclic:6"], &[("SEMIPERM_ELEMENT_CAP", "10")]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("skipped sym:4"));
    let last: serde_json::Value = serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap();
    assert_eq!(last["group"], "sym:4");
    assert!(last["skipped"].as_str().unwrap().contains("element cap"));

    let o = semiperm_env(&["hunt", "--corpus", "sym:4"], &[("SEMIPERM_LATTICE_CAP", "12")]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("lattice cap"));
}

#[test]
fn fixed_sigma_string() {
    let o = semiperm(&["check", "--theorem", "B", "--sigma", "2|3,5|*", "--corpus", "sym:4+alt:5+cyclic:7"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).lines().all(|l| l.contains("\"sigma\":\"2|3,5|*\"")));
}
