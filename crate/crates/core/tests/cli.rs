use std::process::{Command, Output};

use serde_json::Value;

fn jacsyz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacsyz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", stdout(o)))
}

#[test]
fn analyze_reports_json() {
    let o = jacsyz(&["analyze", "x*y*(x^4+y^4-z^4)", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["exponents"], serde_json::json!([4, 4, 5]));
    assert_eq!(v["tau"], 9);
    assert_eq!(v["nu"], 10);
    assert_eq!(v["subtype"], "3A");
    for key in ["name", "degree", "epsilons", "relation_degrees", "regularity", "n_table", "type", "checks", "timings_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn analyze_text_and_generators() {
    let o = jacsyz(&["analyze", "x^5+y^5+y*z*(x^3+y^2*z)"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("[3, 4, 4, 4, 4]") && s.contains("3C"), "{s}");

    let v = json(&jacsyz(&["analyze", "x^3+y^3+z^3", "--json", "--show-generators", "--timings", "--field", "rational"]));
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    assert_eq!(v["field"], "rational");
    assert_eq!(v["n_table_exact"], true);
    assert!(!v["timings_ms"].as_object().unwrap().is_empty());
}

#[test]
fn input_errors_exit_one() {
    for args in [
        vec!["analyze", "x^2+y^2"],
        vec!["analyze", "x^2+y"],
        vec!["analyze", "x*(y"],
        vec!["analyze", "x^2*y"],
        vec!["analyze", "x^3", "--field", "complex"],
        vec!["corpus", "--jobs", "0"],
        vec!["arrangement", "[\"x\", \"2*x\", \"y\"]"],
        vec!["bogus"],
    ] {
        let o = jacsyz(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn read_from_file() {
    let dir = std::env::temp_dir().join(format!("jacsyz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("curve.txt");
    std::fs::write(&p, "x*y*z*(x^3+y^3+z^3)\n").unwrap();
    let v = json(&jacsyz(&["analyze", &format!("@{}", p.display()), "--json"]));
    assert_eq!(v["exponents"], serde_json::json!([4, 4, 4]));
    assert_eq!(jacsyz(&["analyze", "@/nonexistent/curve"]).status.code(), Some(1));
}

#[test]
fn arrangement_flags_joined_triple_points() {
    let a = json(&jacsyz(&["arrangement", r#"["y","z","x-y","x+y","x-z","x+z","x-2*y+13*z","x+7*y+11*z"]"#, "--json"]));
    let b = json(&jacsyz(&["arrangement", r#"["x","x+y","x-y","x-z","x+z","x-2*y+13*z","x+7*y+11*z","y+13*z"]"#, "--json"]));
    for v in [&a, &b] {
        assert_eq!(v["multiplicity_counts"], serde_json::json!({"2": 22, "3": 2}));
        assert_eq!(v["report"]["exponents"], serde_json::json!([5, 5, 6, 6, 6]));
        assert_eq!(v["verdict"]["verdict"], "consistent");
    }
    assert_eq!(a["multiple_points_joined"], false);
    assert_eq!(b["multiple_points_joined"], true);
}

#[test]
fn corpus_filter_and_override() {
    let o = jacsyz(&["corpus", "--filter", "quartic", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("entries pass"));

    let dir = std::env::temp_dir().join(format!("jacsyz-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("corpus.json");
    std::fs::write(&p, r#"[{"name": "wrong", "group": "g", "polynomial": "x^3+y^3+z^3", "expected": {"tau": 1}}]"#).unwrap();
    let o = jacsyz(&["corpus", "--corpus", p.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["entries"][0]["status"], "failed");

    std::fs::write(&p, "not json").unwrap();
    assert_eq!(jacsyz(&["corpus", "--corpus", p.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn search_is_deterministic() {
    let args = ["search", "--degree", "4", "--target", "3,3,3", "--samples", "8", "--seed", "5", "--json"];
    let a = jacsyz(&args);
    let b = jacsyz(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["params"]["samples"], 8);
}

#[test]
fn empty_search_is_reported_as_such() {
    let o = jacsyz(&["search", "--degree", "4", "--target", "9,9", "--samples", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no witness found under these bounds"));
}

#[test]
fn json_is_byte_stable() {
    let args = ["analyze", "x*y*z*(x+y+z)*(x^2+y^2+z^2)", "--json"];
    assert_eq!(jacsyz(&args).stdout, jacsyz(&args).stdout);
}
