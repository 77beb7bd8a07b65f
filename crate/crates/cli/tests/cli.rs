use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_with_caps(args, None)
}

fn run_with_caps(args: &[&str], caps: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_graphstirling"));
    cmd.args(args).env_remove("GRAPHSTIRLING_CAPS");
    if let Some(c) = caps {
        cmd.env("GRAPHSTIRLING_CAPS", c);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn values(json: &str) -> Vec<u64> {
    let v: Value = serde_json::from_str(json.trim()).unwrap();
    v["values"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect()
}

#[test]
fn word_views() {
    assert_eq!(ok(&["word", "xxDxxDxDDD", "--board"]).trim(), "(1,3) (1,4) (1,5) (2,5)");
    assert_eq!(ok(&["word", "xD", "--turns"]).trim(), "(1,1)");
    assert_eq!(ok(&["word", "xxDxxDxDDD", "--below"]).trim(), "(1,2) (2,3) (2,4) (3,4) (3,5) (4,5)");
    assert_eq!(ok(&["word", "UURUURURRR"]).trim(), "xxDxxDxDDD");
    assert_eq!(ok(&["word", "(()(()()))"]).trim(), "xxDxxDxDDD");
    let graph = ok(&["word", "xxDxxDxDDD", "--graph"]);
    assert_eq!(graph.lines().next(), Some("n 5"));
    assert_eq!(graph.lines().count(), 7);
    let j: Value = serde_json::from_str(&ok(&["word", "xxDxxDxDDD", "--json"])).unwrap();
    assert_eq!(j["turns"], serde_json::json!([[1, 2], [2, 4], [3, 5]]));
    assert_eq!(j["n"], 5);
    assert!(j["decomposition"].is_object());
}

#[test]
fn word_errors() {
    let o = run(&["word", "xDDx"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("prefix violation at position 3"), "{}", stderr(&o));
    assert_eq!(run(&["word", "xq"]).status.code(), Some(2));
    assert_eq!(run(&["word", ""]).status.code(), Some(2));
    assert_eq!(run(&["word", "xxD"]).status.code(), Some(2));
}

#[test]
fn stirling_inputs_and_methods() {
    for method in ["enumerate", "weyl", "rook", "matching", "chromatic", "auto"] {
        let out = ok(&["stirling", "--word", "xxDxxDxDDD", "--method", method]);
        assert_eq!(values(&out), vec![0, 0, 0, 2, 4, 1], "{method}");
    }
    let j: Value = serde_json::from_str(&ok(&["stirling", "--word", "xD", "--method", "weyl"])).unwrap();
    assert_eq!((j["method"].as_str(), j["n"].as_u64()), (Some("weyl"), Some(1)));
    assert_eq!(values(&ok(&["stirling", "--family", "empty:3", "--method", "enumerate"])), vec![0, 1, 3, 1]);
}

#[test]
fn stirling_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = dir.path().join("p4.edges");
    fs::write(&p4, "# path\nn 4\n1 2\n2 3\n3 4\n").unwrap();
    let p4 = p4.to_str().unwrap();
    let o = run(&["stirling", "--graph", p4, "--method", "rook"]);
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
    assert!(stderr(&o).contains("not quasi-threshold"));
    for method in ["auto", "enumerate", "chromatic"] {
        assert_eq!(values(&ok(&["stirling", "--graph", p4, "--method", method])), vec![0, 0, 1, 3, 1], "{method}");
    }
    let star = dir.path().join("star.edges");
    fs::write(&star, "n 4\n1 2\n1 3\n1 4\n").unwrap();
    let star = star.to_str().unwrap();
    let expect = values(&ok(&["stirling", "--graph", star, "--method", "enumerate"]));
    for method in ["weyl", "rook", "matching", "chromatic", "auto"] {
        assert_eq!(values(&ok(&["stirling", "--graph", star, "--method", method])), expect, "{method}");
    }
    let bad = dir.path().join("bad.edges");
    fs::write(&bad, "n 3\n1 4\n").unwrap();
    assert_eq!(run(&["stirling", "--graph", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["stirling", "--graph", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn auto_matches_every_applicable_method() {
    for spec in ["empty:7", "star:6", "complete:5", "path:6", "random-qt:9"] {
        let auto = values(&ok(&["stirling", "--family", spec, "--seed", "3"]));
        for method in ["enumerate", "weyl", "rook", "matching", "chromatic"] {
            let other = values(&ok(&["stirling", "--family", spec, "--seed", "3", "--method", method]));
            assert_eq!(other, auto, "{spec} {method}");
        }
    }
    let forest = ["stirling", "--family", "forest:9", "--components", "3", "--seed", "5"];
    let auto = values(&ok(&forest));
    let mut enumerate = forest.to_vec();
    enumerate.extend(["--method", "enumerate"]);
    assert_eq!(values(&ok(&enumerate)), auto);
}

#[test]
fn caps_from_environment() {
    let args = ["stirling", "--family", "empty:11", "--method", "enumerate"];
    assert_eq!(run_with_caps(&args, Some("small")).status.code(), Some(3));
    assert_eq!(run_with_caps(&args, Some("desk")).status.code(), Some(0));
    let o = run_with_caps(&["stirling", "--family", "empty:30", "--method", "matching"], Some("small"));
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("exceeds cap"));
    // Rooks have no cap.
    assert_eq!(run_with_caps(&["stirling", "--family", "empty:30"], Some("small")).status.code(), Some(0));
}

#[test]
fn crosscheck_modes() {
    assert!(ok(&["crosscheck", "--word", "xxDxxDxDDD"]).contains("1 words checked, 0 disagreements"));
    assert!(ok(&["crosscheck", "--exhaustive", "6"]).contains("132 words checked, 0 disagreements"));
    let a = ok(&["crosscheck", "--random", "100", "--nmax", "10", "--seed", "7"]);
    assert!(a.contains("100 words checked, 0 disagreements"));
    let o = run_with_caps(&["crosscheck", "--exhaustive", "12"], Some("small"));
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains(" 0 route runs skipped"));
    assert_eq!(run(&["crosscheck", "--random", "5"]).status.code(), Some(2));
    assert_eq!(run(&["crosscheck", "--word", "xD", "--exhaustive", "3"]).status.code(), Some(2));
}

#[test]
fn normality_csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    let out = ok(&["normality", "--family", "empty", "--sweep", "400,50,200,100", "--csv", path.to_str().unwrap()]);
    let rows: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.iter().map(|r| r["n"].as_u64().unwrap()).collect::<Vec<_>>(), vec![50, 100, 200, 400]);

    let mut reader = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["n", "f", "chi", "g", "mean", "variance", "kolmogorov", "real_rooted", "ratio"]);
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 4);
    let d: Vec<f64> = records.iter().map(|r| r[6].parse().unwrap()).collect();
    assert!(d.windows(2).all(|w| w[1] < w[0]), "{d:?}");
    for (r, json) in records.iter().zip(&rows) {
        let k = json["report"]["kolmogorov"].as_f64().unwrap();
        let parsed: f64 = r[6].parse().unwrap();
        assert!((parsed - k).abs() <= 1e-10 * k.abs().max(1e-300) * 10.0, "{parsed} vs {k}");
        assert_eq!(&r[1], r[0].to_string().as_str());
        assert_eq!(&r[2], "1");
        assert_eq!(&r[3], format!("1/{}", &r[0]));
        let mean: f64 = r[4].parse().unwrap();
        let (num, den) = json["report"]["mean"].as_str().unwrap().split_once('/').unwrap();
        let exact = ratio_f64(num, den);
        assert!((mean - exact).abs() <= 1e-9 * exact, "{mean} vs {exact}");
        assert_eq!(&r[8], "1/1");
    }
    assert_eq!(&records[0][7], "verified");
}

#[test]
fn normality_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("forest.csv");
    ok(&["normality", "--family", "forest", "--components", "2", "--sweep", "20", "--csv", path.to_str().unwrap()]);
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let row = reader.records().next().unwrap().unwrap();
    assert_eq!((&row[0], &row[2], &row[3]), ("20", "2", "1/10"));

    let path = dir.path().join("complete.csv");
    let o = run(&["normality", "--family", "complete", "--sweep", "10", "--csv", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(j["report"]["degenerate"], true);
    let mut reader = csv::Reader::from_path(&path).unwrap();
    assert_eq!(&reader.records().next().unwrap().unwrap()[6], "degenerate");

    let sqrt = ok(&["normality", "--family", "forest", "--components", "sqrt", "--sweep", "100"]);
    let j: Value = serde_json::from_str(sqrt.trim()).unwrap();
    assert_eq!(j["kahn"]["chi"], 2);

    assert_eq!(run(&["normality", "--family", "cube", "--sweep", "3"]).status.code(), Some(2));
    assert_eq!(run(&["normality", "--family", "forest", "--components", "9", "--sweep", "5"]).status.code(), Some(2));
}

/// `num / den` for decimal strings too long for `f64`.
fn ratio_f64(num: &str, den: &str) -> f64 {
    let head = |s: &str| -> (f64, i32) {
        let k = s.len().min(17);
        (s[..k].parse().unwrap(), (s.len() - k) as i32)
    };
    let ((a, ea), (b, eb)) = (head(num), head(den));
    a / b * 10f64.powi(ea - eb)
}

fn edge_list(text: &str) -> (usize, Vec<(usize, usize)>) {
    let mut lines = text.lines();
    let n = lines.next().unwrap().strip_prefix("n ").unwrap().parse().unwrap();
    let edges = lines
        .map(|l| {
            let (u, v) = l.split_once(' ').unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    (n, edges)
}

fn find(parent: &mut [usize], v: usize) -> usize {
    if parent[v] != v {
        let r = find(parent, parent[v]);
        parent[v] = r;
    }
    parent[v]
}

#[test]
fn family_members() {
    assert_eq!(ok(&["family", "empty:3", "--emit", "word"]).trim(), "xDxDxD");
    assert_eq!(ok(&["family", "star:5", "--emit", "word"]).trim(), "xxDxDxDxDD");
    assert_eq!(ok(&["family", "complete:3"]).trim(), "xxxDDD");
    assert_eq!(ok(&["family", "path:4"]).trim(), "n 4\n1 2\n2 3\n3 4");
    for seed in 0..20u64 {
        let seed = seed.to_string();
        let out = ok(&["family", "forest:6", "--components", "2", "--emit", "graph", "--seed", &seed]);
        assert_eq!(out, ok(&["family", "forest:6", "--components", "2", "--emit", "graph", "--seed", &seed]));
        let (n, edges) = edge_list(&out);
        assert_eq!(n, 6);
        let mut parent: Vec<usize> = (0..=n).collect();
        for (u, v) in edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            assert_ne!(a, b, "cycle in {out}");
            parent[a] = b;
        }
        let roots = (1..=n).filter(|&v| find(&mut parent, v) == v).count();
        assert_eq!(roots, 2, "{out}");
    }
    assert_eq!(run(&["family", "forest:6", "--components", "7"]).status.code(), Some(2));
    assert_eq!(run(&["family", "star"]).status.code(), Some(2));
    assert_eq!(run(&["family", "star:0"]).status.code(), Some(2));
    assert_eq!(run(&["family", "empty:3", "--components", "2"]).status.code(), Some(2));
}
