use std::io::Write;
use std::process::{Command, Output, Stdio};

use kdegen::{load_graph, oracle, Format};

fn kdegen(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kdegen"))
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
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: &str) -> String {
    let out = kdegen(args, stdin);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn generated(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    stdout(&full, "")
}

#[test]
fn triangle_count_on_k4() {
    let k4 = generated(&["--family", "complete", "--n", "4"]);
    assert_eq!(stdout(&["triangles", "--count"], &k4), "4\n");
    assert_eq!(stdout(&["triangles"], &k4).lines().count(), 4);
}

#[test]
fn degeneracy_of_a_path() {
    let p10 = generated(&["--family", "path", "--n", "10"]);
    let out = stdout(&["degeneracy"], &p10);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k=1"));
    assert_eq!(lines.next().unwrap().split(' ').count(), 10);
}

#[test]
fn induced_biclique_in_c4() {
    let c4 = generated(&["--family", "cycle", "--n", "4"]);
    let out = stdout(
        &["biclique", "--r", "2", "--l", "2", "--induced", "--oracle"],
        &c4,
    );
    assert_eq!(out, "YES\n1 3 | 0 2\n");
    let k4 = generated(&["--family", "complete", "--n", "4"]);
    assert_eq!(
        stdout(&["biclique", "--r", "2", "--l", "2", "--induced"], &k4),
        "NO\n"
    );
}

#[test]
fn maximal_cliques_and_bicliques() {
    let k333 = generated(&["--family", "complete-multipartite", "--parts", "3x3"]);
    assert_eq!(
        stdout(&["maximal-cliques", "--count", "--oracle"], &k333),
        "27\n"
    );
    assert_eq!(
        stdout(&["maximal-cliques", "--threads", "2"], &k333)
            .lines()
            .count(),
        27
    );
    let c4 = generated(&["--family", "cycle", "--n", "4"]);
    assert_eq!(
        stdout(&["maximal-bicliques", "--oracle"], &c4),
        "0 2 | 1 3\n"
    );
}

#[test]
fn fixed_size_cliques() {
    let k5 = generated(&["--family", "complete", "--n", "5"]);
    assert_eq!(
        stdout(&["cliques", "--size", "3", "--count", "--oracle"], &k5),
        "10\n"
    );
    assert_eq!(
        stdout(&["cliques", "--size", "4", "--oracle"], &k5)
            .lines()
            .count(),
        5
    );
    assert_eq!(stdout(&["cliques", "--size", "2"], &k5).lines().count(), 10);
}

#[test]
fn cover_and_max_clique_output() {
    let star = "0 1\n0 2\n0 3\n0 4\n0 5\n";
    assert_eq!(
        stdout(&["vertex-cover", "--oracle"], star),
        "size=1\nlp_bound=1\n0\n"
    );
    let c5_chord = "0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n";
    assert_eq!(
        stdout(&["max-clique", "--oracle"], c5_chord),
        "size=3\n0 1 2\n"
    );
    let greedy = stdout(&["max-clique", "--solver", "greedy", "--count"], c5_chord);
    assert!(greedy.starts_with("size="));
}

#[test]
fn remove_triangles_round_trip() {
    let g = "0 1\n1 2\n0 2\n2 3\n3 4\n";
    let out = stdout(&["remove-triangles"], g);
    let h = load_graph(out.as_bytes(), Format::EdgeList).unwrap().graph;
    assert!(oracle::triangles(&h).unwrap().is_empty());
    assert_eq!(h.edges().collect::<Vec<_>>(), vec![(2, 3), (3, 4)]);

    let dimacs = stdout(
        &["remove-triangles", "--format", "dimacs"],
        "p edge 4 3\ne 1 2\ne 2 3\ne 1 3\n",
    );
    let h = load_graph(dimacs.as_bytes(), Format::Dimacs).unwrap().graph;
    assert_eq!((h.n(), h.m()), (4, 0));
}

#[test]
fn seeded_output_is_reproducible() {
    let args = [
        "generate",
        "--family",
        "random-k-degenerate",
        "--n",
        "200",
        "--k",
        "4",
        "--seed",
        "7",
    ];
    let a = stdout(&args, "");
    assert_eq!(a, stdout(&args, ""));
    assert_eq!(stdout(&["degeneracy", "--count"], &a), "k=4\n");
    assert_eq!(
        stdout(&["maximal-cliques"], &a),
        stdout(&["maximal-cliques"], &a)
    );
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let p = path.to_str().unwrap();
    let out = stdout(&["triangles", "--count", "--output", p], "0 1\n1 2\n2 0\n");
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1\n");
}

#[test]
fn input_file_and_dimacs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.col");
    std::fs::write(&path, "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(
            &["triangles", "--count", "--input", p, "--format", "dimacs"],
            ""
        ),
        "1\n"
    );
}

#[test]
fn bench_csv() {
    let out = stdout(
        &[
            "bench",
            "--family",
            "random-k-degenerate",
            "--sizes",
            "200,400",
            "--k",
            "3",
        ],
        "",
    );
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("family,n,k,op,phase,millis"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows
        .iter()
        .any(|r| r.starts_with("random-k-degenerate,400,3,maximal-cliques,dedup,")));
    assert!(rows.iter().all(|r| r.split(',').count() == 6));
}

#[test]
fn exit_codes() {
    assert_eq!(kdegen(&["no-such-command"], "").status.code(), Some(2));
    assert_eq!(kdegen(&["cliques"], "").status.code(), Some(2));
    assert_eq!(
        kdegen(&["triangles", "--format", "xml"], "").status.code(),
        Some(2)
    );
    let bad = kdegen(&["triangles"], "0 1\n1 x\n");
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));
    assert!(bad.stdout.is_empty());
    assert_eq!(
        kdegen(&["triangles", "--input", "/no/such/file"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        kdegen(&["biclique", "--r", "0", "--l", "1"], "0 1\n")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(kdegen(&["--help"], "").status.code(), Some(0));
}

#[test]
fn dropped_edges_are_reported() {
    let out = kdegen(&["triangles", "--count"], "0 0\n0 1\n1 0\n");
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("dropped 1 self-loops and 1 duplicate"));
}
