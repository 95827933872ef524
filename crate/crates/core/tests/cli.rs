mod common;

use std::fs;
use std::path::Path;

use common::{fixture, random_graph, Shape};
use parm::{load_graph, save_graph, PathPattern};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn parm(args: &[&str]) -> Output {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = parm::cli::run(
        std::iter::once("parm").chain(args.iter().copied()),
        &mut stdout,
        &mut stderr,
    );
    Output {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn fig1_prefix() -> String {
    fixture("fig1").to_str().unwrap().to_owned()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

#[test]
fn mine_fig1_contains_r1() {
    let out = parm(&[
        "mine",
        &fig1_prefix(),
        "--theta",
        "2",
        "--k",
        "2",
        "--threads",
        "1",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let mut lines = out.stdout.lines();
    assert_eq!(
        lines.next(),
        Some("antecedent\tconsequent\tasupp\trsupp\tconf\tlift")
    );
    let r1 = out
        .stdout
        .lines()
        .find(|l| l.starts_with("{CS}-[Follows]->{Art}\t{CS}-[BelongTo]->{Uni}\t"))
        .expect("r1 in output");
    let cols: Vec<&str> = r1.split('\t').collect();
    assert_eq!(cols[2], "2");
    assert_eq!(cols[4], "1.0");
    assert_eq!(cols[5], "6.0");
    assert!(out.stderr.contains("theta=2"));
}

#[test]
fn relative_theta_scales_by_vertex_count() {
    let dir = tempfile::tempdir().unwrap();
    let report = path(dir.path(), "report.json");
    let rules = path(dir.path(), "rules.tsv");
    let out = parm(&[
        "mine",
        &fig1_prefix(),
        "--theta",
        "0.5",
        "--relative",
        "-o",
        &rules,
        "--report",
        &report,
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(report["effective_theta"], 6);
    assert_eq!(report["vertex_count"], 12);
    for phase in ["attributes", "simple", "reachability", "rules"] {
        let p = &report["phases"][phase];
        let outcomes = [
            "pruned_anti_monotone",
            "pruned_bound",
            "frequent",
            "infrequent",
        ]
        .iter()
        .map(|k| p[k].as_u64().unwrap())
        .sum::<u64>();
        assert_eq!(p["generated"].as_u64().unwrap(), outcomes, "{phase}");
    }
}

#[test]
fn baseline_and_pioneer_files_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let g = random_graph(
        77,
        Shape {
            vertices: 60,
            edges: 150,
            attrs: 5,
            labels: 3,
            max_attrs_per_vertex: 3,
        },
    );
    let (v, e) = (
        path(dir.path(), "g.vertices.tsv"),
        path(dir.path(), "g.edges.tsv"),
    );
    save_graph(&g, Path::new(&v), Path::new(&e)).unwrap();
    let mut files = Vec::new();
    for algo in ["baseline", "pioneer"] {
        for threads in ["1", "3"] {
            let rules = path(dir.path(), &format!("{algo}-{threads}.tsv"));
            let out = parm(&[
                "mine",
                &v,
                &e,
                "--algo",
                algo,
                "--theta",
                "3",
                "--threads",
                threads,
                "-o",
                &rules,
            ]);
            assert_eq!(out.code, 0, "{}", out.stderr);
            files.push(fs::read(rules).unwrap());
        }
    }
    assert!(files.len() == 4 && files.iter().all(|f| f == &files[0]));
    assert!(files[0].len() > 100);
}

#[test]
fn rules_file_round_trips_through_the_parser() {
    let g = common::fig1();
    let out = parm(&["mine", &fig1_prefix(), "--theta", "3", "--format", "tsv"]);
    assert_eq!(out.code, 0);
    for line in out.stdout.lines().skip(1) {
        let mut cols = line.split('\t');
        for text in [cols.next().unwrap(), cols.next().unwrap()] {
            assert_eq!(PathPattern::parse(text, &g).unwrap().to_text(&g), text);
        }
    }
}

#[test]
fn json_output_and_approximate_columns() {
    let out = parm(&["mine", &fig1_prefix(), "--format", "json", "--theta", "3"]);
    assert_eq!(out.code, 0);
    let first: serde_json::Value =
        serde_json::from_str(out.stdout.lines().next().unwrap()).unwrap();
    assert!(first["asupp"].as_u64().unwrap() >= 3);
    let out = parm(&[
        "mine",
        &fig1_prefix(),
        "--algo",
        "pioneer-approx",
        "--rho",
        "0.5",
        "--psi",
        "1",
        "--seed",
        "3",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out
        .stdout
        .lines()
        .next()
        .unwrap()
        .ends_with("\test\tci_low\tci_high"));
}

#[test]
fn mine_rejects_bad_configuration() {
    let out = parm(&["mine", &fig1_prefix(), "--psi", "0.5"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("pioneer-approx"));
    assert_eq!(parm(&["mine", &fig1_prefix(), "--k", "0"]).code, 1);
    assert_eq!(
        parm(&[
            "mine",
            &fig1_prefix(),
            "--algo",
            "pioneer-approx",
            "--rho",
            "1.5"
        ])
        .code,
        1
    );
    assert_eq!(parm(&["mine", &fig1_prefix(), "--threads", "0"]).code, 1);
    assert_eq!(parm(&["mine", &fig1_prefix(), "--bogus"]).code, 1);
    let missing = parm(&["mine", "/nonexistent/graph"]);
    assert_eq!(missing.code, 2);
    assert!(missing.stderr.starts_with("error:"));
}

#[test]
fn gen_is_deterministic_and_loadable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "a"), path(dir.path(), "b"));
    for prefix in [&a, &b] {
        let out = parm(&[
            "gen", "-n", "100", "-m", "500", "--dist", "uniform", "--seed", "7", "-o", prefix,
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
    }
    let g = load_graph(
        Path::new(&format!("{a}.vertices.tsv")),
        Path::new(&format!("{a}.edges.tsv")),
    )
    .unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (100, 500));
    for suffix in [".vertices.tsv", ".edges.tsv"] {
        assert_eq!(
            fs::read(format!("{a}{suffix}")).unwrap(),
            fs::read(format!("{b}{suffix}")).unwrap()
        );
    }

    let exp = path(dir.path(), "exp");
    assert_eq!(
        parm(&[
            "gen",
            "-n",
            "50",
            "-m",
            "200",
            "--dist",
            "exponential",
            "-o",
            &exp
        ])
        .code,
        0
    );
    let g = load_graph(
        Path::new(&format!("{exp}.vertices.tsv")),
        Path::new(&format!("{exp}.edges.tsv")),
    )
    .unwrap();
    assert_eq!(g.edge_count(), 200);

    let out = parm(&["gen", "-n", "2", "-m", "100", "--labels", "1", "-o", &exp]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("100"));
}

#[test]
fn eval_reports_all_measures() {
    let out = parm(&[
        "eval",
        &fig1_prefix(),
        "-r",
        "{CS}-[Follows]->{Art} => {Male}-[BelongTo]->{Uni}",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("asupp=2 rsupp="), "{}", out.stdout);
    for m in ["rsupp=", "conf=", "lift="] {
        assert!(out.stdout.contains(m));
    }
    let r1 = parm(&[
        "eval",
        &fig1_prefix(),
        "-r",
        "{CS}-[Follows]->{Art} => {CS}-[BelongTo]->{Uni}",
    ]);
    assert_eq!(
        r1.stdout.trim(),
        format!("asupp=2 rsupp={:?} conf=1.0 lift=6.0", 2.0 / 12.0)
    );
}

#[test]
fn eval_rejects_invalid_rules() {
    let dominated = parm(&[
        "eval",
        &fig1_prefix(),
        "-r",
        "{CS}-[Follows]->{Art} => {CS}",
    ]);
    assert_eq!(dominated.code, 1);
    assert!(
        dominated.stderr.contains("dominate"),
        "{}",
        dominated.stderr
    );

    let unknown = parm(&[
        "eval",
        &fig1_prefix(),
        "-r",
        "{Bogus}-[Follows]->{Art} => {CS}-[BelongTo]->{Uni}",
    ]);
    assert_eq!(unknown.code, 1);
    assert!(unknown.stderr.contains("Bogus"), "{}", unknown.stderr);

    let syntax = parm(&["eval", &fig1_prefix(), "-r", "{CS}-[Follows->{Art} => {CS}"]);
    assert_eq!(syntax.code, 1);
    assert!(
        syntax.stderr.contains("parse error at byte"),
        "{}",
        syntax.stderr
    );

    assert_eq!(
        parm(&["eval", &fig1_prefix(), "-r", "{CS}-[Follows]->{Art}"]).code,
        1
    );
}
