use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const LINEAR_CUBIC: &str = "x1 + x4\nx2 + x4\nx3^2 + x2\nx3^3 + x1\nx5 + x2\nx5 + x1 + x2\n";
const C4: &str = "a*b + 1\nb*c + 1\nc*d + 1\nd*a + 1\n";

fn bin(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordcad"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn workdir() -> TempDir {
    let d = TempDir::new().unwrap();
    std::fs::write(d.path().join("linear_cubic.txt"), LINEAR_CUBIC).unwrap();
    std::fs::write(d.path().join("c4.txt"), C4).unwrap();
    std::fs::write(d.path().join("empty.txt"), "# nothing\n").unwrap();
    std::fs::write(d.path().join("bad.txt"), "x1 + 1\nx1 x2\n").unwrap();
    d
}

fn json(path: PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Validates report files against the published schema with Python's
/// `jsonschema` package.
fn validate(reports: &[PathBuf]) {
    let schema = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let script = "import json, sys, jsonschema\n\
        schema = json.load(open(sys.argv[1]))\n\
        jsonschema.Draft202012Validator.check_schema(schema)\n\
        v = jsonschema.Draft202012Validator(schema)\n\
        for p in sys.argv[2:]:\n    v.validate(json.load(open(p)))\n";
    let out = Command::new("python3")
        .arg("-c")
        .arg(script)
        .arg(&schema)
        .args(reports)
        .output()
        .expect("python3 with jsonschema is needed to validate reports");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn analyze_given_ordering() {
    let d = workdir();
    let o = bin(
        &["analyze", "linear_cubic.txt", "--ordering", "x4>x5>x3>x2>x1", "--json", "r.json", "--dot-tree", "t.dot", "--dot-graph", "g.dot"],
        d.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("#proj: 21"));
    let r = json(d.path().join("r.json"));
    assert_eq!(r["trace"]["proj_count"], 21);
    assert_eq!(r["ordering"]["strategy"], "given");
    let tree = std::fs::read_to_string(d.path().join("t.dot")).unwrap();
    assert_eq!(tree.matches(" -> ").count(), 4);
    let graph = std::fs::read_to_string(d.path().join("g.dot")).unwrap();
    assert!(graph.starts_with("graph") && !graph.contains("dashed"));
}

#[test]
fn gen_then_compare_lattice() {
    let d = workdir();
    let g = bin(&["gen", "lattice", "8", "--out", "f8.txt"], d.path());
    assert_eq!(g.status.code(), Some(0), "{}", stderr(&g));
    let o = bin(
        &["compare", "f8.txt", "--ordering", "x1>x2>x3>x4>x5>x6>x7>x8", "--ordering", "x1>x2>x3>x8>x7>x6>x5>x4", "--json", "c.json"],
        d.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json(d.path().join("c.json"));
    let heights: Vec<u64> = r["rows"].as_array().unwrap().iter().map(|row| row["tree_height"].as_u64().unwrap()).collect();
    assert_eq!(heights, vec![7, 5]);

    let to_stdout = bin(&["gen", "grid", "1", "1"], d.path());
    assert_eq!(to_stdout.status.code(), Some(0));
    assert_eq!(stdout(&to_stdout).lines().count(), 5);
}

#[test]
fn exit_codes() {
    let d = workdir();
    let empty = bin(&["analyze", "empty.txt"], d.path());
    assert_eq!(empty.status.code(), Some(1));
    assert!(stderr(&empty).contains("empty system"));

    let bad = bin(&["analyze", "bad.txt"], d.path());
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("bad.txt:2:4"), "{}", stderr(&bad));

    assert_eq!(bin(&["analyze", "missing.txt"], d.path()).status.code(), Some(1));
    assert_eq!(bin(&["analyze", "linear_cubic.txt", "--ordering", "x1>x9"], d.path()).status.code(), Some(1));

    for args in [
        vec!["analyze"],
        vec!["frobnicate"],
        vec!["analyze", "linear_cubic.txt", "--strategy", "bogus"],
        vec!["analyze", "linear_cubic.txt", "--operator", "collins"],
        vec!["analyze", "linear_cubic.txt", "--strategy", "given"],
        vec!["analyze", "linear_cubic.txt", "--strategy", "min-fill", "--ordering", "x1>x2>x3>x4>x5"],
        vec!["analyze", "linear_cubic.txt", "--strategy", "enumerate", "--max-enumerate", "0"],
        vec!["gen", "lattice", "3"],
        vec!["gen", "lattice", "x"],
    ] {
        assert_eq!(bin(&args, d.path()).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(bin(&["--help"], d.path()).status.code(), Some(0));
}

#[test]
fn reports_are_reproducible() {
    let d = workdir();
    let gen = bin(&["gen", "lattice", "11", "--out", "f11.txt"], d.path());
    assert_eq!(gen.status.code(), Some(0));
    for (file, extra) in [
        ("linear_cubic.txt", vec!["--strategy", "enumerate", "--max-enumerate", "12", "--seed", "3"]),
        ("f11.txt", vec!["--strategy", "enumerate", "--max-enumerate", "6", "--seed", "5"]),
        ("c4.txt", vec!["--show-polys"]),
    ] {
        let mut outs = Vec::new();
        for run in 0..2 {
            let name = format!("r{run}.json");
            let mut args = vec!["analyze", file, "--json", &name];
            args.extend(extra.iter().copied());
            let o = bin(&args, d.path());
            assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
            outs.push((stdout(&o), std::fs::read(d.path().join(&name)).unwrap()));
        }
        assert_eq!(outs[0], outs[1], "{file}");
    }
    let runs: Vec<_> = (0..2)
        .map(|_| {
            let o = bin(&["compare", "f11.txt", "--max-enumerate", "5", "--seed", "9", "--json", "c.json"], d.path());
            (stdout(&o), std::fs::read(d.path().join("c.json")).unwrap())
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn reports_match_schema() {
    let d = workdir();
    let runs: [&[&str]; 5] = [
        &["analyze", "linear_cubic.txt", "--json", "a1.json", "--show-polys"],
        &["analyze", "c4.txt", "--json", "a2.json", "--timings", "--operator", "brown"],
        &["analyze", "c4.txt", "--json", "a3.json", "--strategy", "enumerate", "--max-enumerate", "3"],
        &["compare", "linear_cubic.txt", "--json", "c1.json", "--timings"],
        &["compare", "linear_cubic.txt", "--json", "c2.json", "--ordering", "x1>x2", "--ordering", "x5>x4>x3>x2>x1"],
    ];
    let mut files = Vec::new();
    for args in runs {
        let o = bin(args, d.path());
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let name = args[args.iter().position(|a| *a == "--json").unwrap() + 1];
        files.push(d.path().join(name));
    }
    let a2 = json(files[1].clone());
    assert_eq!(a2["chordality"]["chordal"], false);
    assert_eq!(a2["chordality"]["chordless_cycle"].as_array().unwrap().len(), 4);
    assert!(a2["timings"].is_object());
    let c2 = json(files[4].clone());
    assert!(c2["rows"][0]["error"].is_string());
    validate(&files);
}
