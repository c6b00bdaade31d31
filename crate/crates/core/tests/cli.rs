mod common;

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use common::*;
use simplex_graphs::families::{cycle, path};
use simplex_graphs::format::write_edge_list;
use simplex_graphs::*;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn sg(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_simplexgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn gen(family: &str, n: usize) -> String {
    let r = sg(&["gen", family, &n.to_string()], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("simplexgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn pipelines() {
    assert_eq!(sg(&["check", "simplex"], &gen("fibonacci_cube", 5)).code, 0);
    assert_eq!(sg(&["check", "daisy"], &gen("path", 4)).code, 1);
    assert_eq!(sg(&["check", "median"], &gen("cycle", 6)).code, 1);
}

#[test]
fn check_codes_match_library_predicates() {
    let limits = Limits::default();
    let p4 = path(4);
    let mut corpus: Vec<Graph> = median_corpus()
        .into_iter()
        .map(|(_, g)| g)
        .take(40)
        .collect();
    corpus.extend(non_median_partial_cubes().into_iter().map(|(_, g)| g));
    corpus.extend(non_partial_cubes().into_iter().map(|(_, g)| g));
    for mask in (0..1024).step_by(97) {
        corpus.push(
            simplex_graph(&graph_from_mask(5, mask), &limits)
                .unwrap()
                .graph()
                .clone(),
        );
    }
    for g in &corpus {
        let text = write_edge_list(g);
        let pc = is_partial_cube(g);
        let cube = pc.then(|| embed(g, 0).unwrap());
        let expected = [
            ("partial-cube", pc),
            ("median", is_median_graph(g)),
            (
                "daisy",
                cube.as_ref().is_some_and(|c| is_daisy(c).is_some()),
            ),
            (
                "simplex",
                is_median_graph(g) && simplex_preimage(g, &limits).unwrap().is_some(),
            ),
            (
                "p4-free",
                cube.as_ref()
                    .is_some_and(|c| has_pc_minor(c, &p4, &limits).unwrap().is_none()),
            ),
            (
                "peripheral",
                cube.as_ref()
                    .is_some_and(|c| theta::all_class_data(c).iter().all(|d| d.is_peripheral())),
            ),
            (
                "deg-idim",
                cube.as_ref().is_some_and(|c| g.max_degree() == c.idim()),
            ),
        ];
        for (pred, want) in expected {
            let r = sg(&["check", pred], &text);
            assert_eq!(r.code, if want { 0 } else { 1 }, "check {pred} on\n{text}");
            assert_eq!(r.stdout.trim(), want.to_string());
        }
    }
}

#[test]
fn malformed_input_names_the_line() {
    let r = sg(&["check", "median"], "4 2\n0 1\n1 q\n");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    assert_eq!(r.stderr.lines().count(), 1);
    let r = sg(&["check", "median", "--format", "labels"], "00\n01\n1\n");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    assert_eq!(sg(&["check", "nonsense"], "").code, 2);
    assert_eq!(sg(&["gen", "cycle", "2"], "").code, 2);
}

#[test]
fn embed_and_theta() {
    let r = sg(&["embed"], &gen("path", 4));
    assert_eq!(r.stdout, "000\n100\n110\n111\n");
    let r = sg(&["embed", "--base", "3"], &gen("path", 4));
    assert_eq!(r.stdout, "111\n011\n001\n000\n");
    assert_eq!(sg(&["embed"], &gen("cycle", 5)).code, 2);
    let r = sg(&["theta"], &gen("path", 4));
    assert_eq!(r.code, 0);
    assert!(
        r.stdout
            .contains("class 1 F=1 W0=2 W1=2 U0=1 U1=1 peripheral=none"),
        "{}",
        r.stdout
    );
}

#[test]
fn labels_round_trip_through_the_cli() {
    let labels = sg(&["gen", "hypercube", "3", "--emit", "labels"], "").stdout;
    assert_eq!(labels.lines().count(), 8);
    let r = sg(&["check", "simplex", "--format", "labels"], &labels);
    assert_eq!(r.code, 0);
    let r = sg(&["simplex-of", "--format", "labels"], "0\n1\n");
    assert_eq!(r.stdout, "00\n10\n01\n11\n");
    let dot = sg(&["gen", "path", "3", "--emit", "dot"], "").stdout;
    assert!(dot.starts_with("graph G {"));
}

#[test]
fn simplex_of_and_preimage() {
    let s = sg(&["simplex-of"], &write_edge_list(&cycle(5)));
    assert_eq!(s.stdout.lines().next(), Some("11 15"));
    let h = sg(&["preimage"], &s.stdout);
    assert_eq!(h.code, 0);
    let g = format::parse_edge_list(&h.stdout).unwrap();
    assert!(are_isomorphic(&g, &cycle(5)).unwrap().is_some());
    let r = sg(&["preimage"], &gen("path", 4));
    assert_eq!(r.code, 1);
}

#[test]
fn crossing_graph_and_polynomials() {
    let s = sg(&["simplex-of"], &write_edge_list(&path(4))).stdout;
    let r = sg(&["crossing-graph"], &s);
    assert_eq!(r.stdout, "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(sg(&["poly", "--cube"], &s).stdout, "8 10 3\n");
    assert_eq!(
        sg(&["poly", "--clique"], &write_edge_list(&path(4))).stdout,
        "1 4 3\n"
    );
    assert_eq!(sg(&["poly"], &s).code, 2);
}

#[test]
fn theorem1_report_lines() {
    let r = sg(&["theorem1"], &gen("gear", 4));
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("(i) simplex: true"));
    assert!(r.stdout.contains("(v) deg-idim: true"));
    let r = sg(&["theorem1"], &gen("path", 4));
    assert_eq!(r.code, 1);
    assert!(
        r.stdout
            .contains("(iv) peripheral: false non-peripheral-class=1"),
        "{}",
        r.stdout
    );
}

#[test]
fn minor_search_and_apply() {
    let c6 = temp_file("c6.txt", &write_edge_list(&cycle(6)));
    let q3m = temp_file("q3m.txt", &write_edge_list(&cube_minus(3, &[7])));
    let c6s = c6.to_str().unwrap();
    let q3ms = q3m.to_str().unwrap();
    let r = sg(
        &["minor", "--forbidden", q3ms, c6s],
        &write_edge_list(&cycle(8)),
    );
    assert_eq!(r.code, 1);
    assert!(
        r.stdout.starts_with(&format!("minor {c6s} spec ")),
        "{}",
        r.stdout
    );
    let r = sg(&["minor", "--forbidden", q3ms, c6s], &gen("hypercube", 3));
    assert_eq!((r.code, r.stdout.as_str()), (0, "free\n"));
    let r = sg(&["minor", "--apply", "CKK"], &gen("hypercube", 3));
    assert_eq!(r.stdout, "4 4\n0 1\n0 2\n1 3\n2 3\n");
    assert_eq!(
        sg(&["minor", "--apply", "CK"], &gen("hypercube", 3)).code,
        2
    );
}

#[test]
fn complexes() {
    let triangle = "3\n1 2\n2 3\n1 3\n";
    let r = sg(&["asc", "check"], triangle);
    assert_eq!(r.code, 1);
    assert!(
        r.stdout.contains("witness {1,2} {1,3} {2,3}"),
        "{}",
        r.stdout
    );
    assert_eq!(sg(&["asc", "check", "--weak"], triangle).code, 1);
    assert_eq!(sg(&["asc", "realize"], triangle).code, 1);
    let r = sg(&["asc", "realize"], "4\n1 2 3\n3 4\n");
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("4 4\n"));
    let r = sg(&["asc", "realize", "--emit", "complex"], "4\n1 2 3\n3 4\n");
    assert_eq!(r.stdout, "4\n1 2 3\n3 4\n");
    let r = sg(&["asc", "clique-complex"], &gen("path", 3));
    assert_eq!(r.stdout, "3\n1 2\n2 3\n");
    assert_eq!(sg(&["asc", "check"], "3\n1 4\n").code, 2);
}

#[test]
fn caps_and_threads() {
    let r = sg(&["check", "p4-free", "--cap-idim", "2"], &gen("path", 4));
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("too large"), "{}", r.stderr);
    let r = sg(&["simplex-of", "--cap-cliques", "3"], &gen("complete", 3));
    assert_eq!(r.code, 2);
    assert_eq!(
        sg(&["asc", "check", "--cap-triples", "5"], "4\n1 2 3 4\n").code,
        2
    );
    let r = sg(&["check", "p4-free", "--threads", "4"], &gen("gear", 5));
    assert_eq!(r.code, 0);
}
