use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lexsearch::io::parse_edge_list;
use lexsearch::oracle::{check_lexdfs_order, verdict_changing_swaps};
use lexsearch::testkit::fixtures::{WORKED_EXAMPLE_EDGES, WORKED_EXAMPLE_TREE};
use tempfile::TempDir;

const PI: &str = "s d c b a h g f e j i";
const SIGMA: &str = "s d c h g j i f e b a";
const RHO: &str = "a b c d e f g h i j s";

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        let files = Files {
            dir: tempfile::tempdir().unwrap(),
        };
        let edges: String = WORKED_EXAMPLE_EDGES
            .iter()
            .map(|(a, b)| format!("{a} {b}\n"))
            .collect();
        files.put("fig.txt", &edges);
        let mut tree = String::from("root s\n");
        for (c, p) in WORKED_EXAMPLE_TREE {
            tree.push_str(&format!("{c} {p}\n"));
        }
        files.put("fig.tree", &tree);
        files.put("rho.txt", RHO);
        files.put("pi.txt", PI);
        files.put("sigma.txt", SIGMA);
        files
    }

    fn put(&self, name: &str, text: &str) -> PathBuf {
        let path = self.path(name);
        fs::write(&path, text).unwrap();
        path
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexsearch"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn sorted_tree(text: &str) -> Vec<String> {
    let mut lines: Vec<String> = text.lines().map(str::to_owned).collect();
    lines[1..].sort();
    lines
}

#[test]
fn lexbfs_command() {
    let f = Files::new();
    let d = f.dir.path();
    let out = run(
        d,
        &["lexbfs", "fig.txt", "--start", "s", "--tiebreak", "rho.txt"],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), format!("{PI}\n"));

    f.put("single.txt", "s\n");
    let out = run(d, &["lexbfs", "single.txt", "--start", "s"]);
    assert_eq!(stdout(&out), "s\n");

    f.put("bad_rho.txt", "s a b c d e f g h i j");
    let out = run(
        d,
        &[
            "lexbfs",
            "fig.txt",
            "--start",
            "s",
            "--tiebreak",
            "bad_rho.txt",
        ],
    );
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());

    let out = run(d, &["lexbfs", "missing.txt", "--start", "s"]);
    assert_eq!(code(&out), 2);
    let out = run(d, &["lexbfs", "fig.txt", "--start", "zz"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn lexdfs_command_and_emitted_tree() {
    let f = Files::new();
    let d = f.dir.path();
    let out = run(
        d,
        &[
            "lexdfs",
            "fig.txt",
            "--start",
            "s",
            "--tiebreak",
            "rho.txt",
            "--emit-tree",
            "out.tree",
        ],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), format!("{SIGMA}\n"));

    let emitted = fs::read_to_string(f.path("out.tree")).unwrap();
    let from_order = stdout(&run(d, &["tree", "fig.txt", "sigma.txt", "--kind", "l"]));
    assert_eq!(emitted, from_order);

    f.put("c4.txt", "a b\nb c\nc d\nd a\n");
    let out = run(d, &["lexdfs", "c4.txt", "--start", "a"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.starts_with("not-chordal\ncycle: "));
    assert_eq!(text.lines().nth(1).unwrap().split_whitespace().count(), 5);
}

#[test]
fn verify_order_command() {
    let f = Files::new();
    let d = f.dir.path();
    let out = run(d, &["verify-order", "fig.txt", "sigma.txt"]);
    assert_eq!(
        (code(&out), stdout(&out).as_str()),
        (0, "lexdfs-order: yes\n")
    );
    let out = run(d, &["verify-order", "fig.txt", "sigma.txt", "--oracle"]);
    assert_eq!(code(&out), 0);

    // a swap the four-point checker rejects
    let g = parse_edge_list(&fs::read_to_string(f.path("fig.txt")).unwrap()).unwrap();
    let tokens: Vec<&str> = SIGMA.split_whitespace().collect();
    let sigma = g.order_from_tokens(&tokens).unwrap();
    let bad = verdict_changing_swaps(&g, &sigma)
        .into_iter()
        .next()
        .unwrap();
    assert!(!check_lexdfs_order(&g, &bad));
    f.put("bad.txt", &g.format_order(&bad));
    for extra in [&[][..], &["--oracle"][..]] {
        let mut args = vec!["verify-order", "fig.txt", "bad.txt"];
        args.extend_from_slice(extra);
        let out = run(d, &args);
        assert_eq!(
            (code(&out), stdout(&out).as_str()),
            (1, "lexdfs-order: no\n")
        );
    }

    f.put("k4.txt", "a b\na c\na d\nb c\nb d\nc d\n");
    f.put("k4_order.txt", "c a d b");
    let out = run(d, &["verify-order", "k4.txt", "k4_order.txt"]);
    assert_eq!(code(&out), 0);

    f.put("c4.txt", "a b\nb c\nc d\nd a\n");
    f.put("c4_order.txt", "a b c d");
    let out = run(d, &["verify-order", "c4.txt", "c4_order.txt"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("not-chordal"));
    let out = run(d, &["verify-order", "c4.txt", "c4_order.txt", "--oracle"]);
    assert_eq!(
        (code(&out), stdout(&out).as_str()),
        (0, "lexdfs-order: yes\n")
    );

    f.put("short.txt", "s d c");
    assert_eq!(code(&run(d, &["verify-order", "fig.txt", "short.txt"])), 2);
}

#[test]
fn verify_tree_command() {
    let f = Files::new();
    let d = f.dir.path();
    let out = run(d, &["verify-tree", "fig.txt", "fig.tree"]);
    assert_eq!(
        (code(&out), stdout(&out).as_str()),
        (0, "lexdfs-ltree: yes\n")
    );

    // c and b both hang off a, yet bc is an edge
    f.put("tri.txt", "a b\na c\nb c\n");
    f.put("star.tree", "root a\nb a\nc a\n");
    let out = run(d, &["verify-tree", "tri.txt", "star.tree"]);
    assert_eq!(
        (code(&out), stdout(&out).as_str()),
        (1, "lexdfs-ltree: no\n")
    );

    for seed in 0..5 {
        let graph = stdout(&run(
            d,
            &["gen", "--n", "30", "--k", "4", "--seed", &seed.to_string()],
        ));
        f.put("g.txt", &graph);
        let start = graph
            .lines()
            .nth(1)
            .unwrap()
            .split_whitespace()
            .next()
            .unwrap()
            .to_owned();
        f.put(
            "o.txt",
            &stdout(&run(d, &["lexbfs", "g.txt", "--start", &start])),
        );
        f.put(
            "t.tree",
            &stdout(&run(d, &["tree", "g.txt", "o.txt", "--kind", "l"])),
        );
        let out = run(d, &["verify-tree", "g.txt", "t.tree"]);
        assert_eq!(code(&out), 0, "seed {seed}");
    }

    f.put("broken.tree", "root s\nd\n");
    assert_eq!(code(&run(d, &["verify-tree", "fig.txt", "broken.tree"])), 2);
    f.put("c4.txt", "a b\nb c\nc d\nd a\n");
    f.put("c4.tree", "root a\nb a\nc b\nd c\n");
    let out = run(d, &["verify-tree", "c4.txt", "c4.tree"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("not-chordal"));
}

#[test]
fn tree_command() {
    let f = Files::new();
    let d = f.dir.path();
    let expected = sorted_tree(&fs::read_to_string(f.path("fig.tree")).unwrap());
    for order in ["pi.txt", "sigma.txt"] {
        let out = run(d, &["tree", "fig.txt", order, "--kind", "l"]);
        assert_eq!(code(&out), 0);
        assert_eq!(sorted_tree(&stdout(&out)), expected);
    }

    f.put("k3.txt", "a b\na c\nb c\n");
    f.put("abc.txt", "a b c");
    let out = run(d, &["tree", "k3.txt", "abc.txt", "--kind", "f"]);
    assert_eq!(stdout(&out), "root a\nb a\nc a\n");
    let out = run(d, &["tree", "k3.txt", "abc.txt", "--kind", "l"]);
    assert_eq!(stdout(&out), "root a\nb a\nc b\n");

    f.put("p.txt", "a b\nb c\n");
    f.put("acb.txt", "a c b");
    assert_eq!(
        code(&run(d, &["tree", "p.txt", "acb.txt", "--kind", "l"])),
        2
    );
}

#[test]
fn gen_and_check_chordal() {
    let f = Files::new();
    let d = f.dir.path();
    let out = run(d, &["gen", "--n", "1", "--k", "1", "--seed", "0"]);
    assert_eq!(code(&out), 0);
    let g = parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!((g.n(), g.m()), (1, 0));

    let a = stdout(&run(d, &["gen", "--n", "50", "--k", "3", "--seed", "9"]));
    let b = stdout(&run(d, &["gen", "--n", "50", "--k", "3", "--seed", "9"]));
    assert_eq!(a, b);
    assert_eq!(code(&run(d, &["gen", "--n", "3", "--k", "0"])), 2);
    assert_eq!(code(&run(d, &["gen", "--n", "3"])), 2);

    let out = run(d, &["check-chordal", "fig.txt"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("chordal: yes\npeo: "));

    f.put("c5.txt", "a b\nb c\nc d\nd e\ne a\n");
    let out = run(d, &["check-chordal", "c5.txt"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("chordal: no\ncycle: "));
}

#[test]
fn oracle_commands() {
    let f = Files::new();
    let d = f.dir.path();
    let out = run(
        d,
        &[
            "oracle",
            "lexbfs",
            "fig.txt",
            "--start",
            "s",
            "--tiebreak",
            "rho.txt",
        ],
    );
    assert_eq!(stdout(&out), format!("{PI}\n"));
    let out = run(
        d,
        &[
            "oracle",
            "lexdfs",
            "fig.txt",
            "--start",
            "s",
            "--tiebreak",
            "rho.txt",
        ],
    );
    assert_eq!(stdout(&out), format!("{SIGMA}\n"));
    let out = run(d, &["oracle", "verify-order", "fig.txt", "sigma.txt"]);
    assert_eq!(code(&out), 0);
    f.put("path.txt", "a b\nb c\nc d\n");
    f.put("bcad.txt", "b c a d");
    let out = run(d, &["oracle", "check-dfs", "path.txt", "bcad.txt"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (1, "dfs-order: no\n"));
    f.put("bcda.txt", "b c d a");
    let out = run(d, &["oracle", "check-dfs", "path.txt", "bcda.txt"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "dfs-order: yes\n"));

    f.put("diamond.txt", "1 2\n1 3\n2 3\n2 4\n3 4\n");
    let out = run(d, &["oracle", "enumerate", "diamond.txt", "--start", "1"]);
    assert_eq!(stdout(&out), "1 2 3 4\n1 3 2 4\n");
    assert_eq!(
        code(&run(
            d,
            &[
                "oracle",
                "enumerate",
                "fig.txt",
                "--start",
                "s",
                "--limit",
                "5"
            ]
        )),
        2
    );

    f.put("c6.txt", "a b\nb c\nc d\nd e\ne f\nf a\n");
    let out = run(d, &["oracle", "chordless-cycle", "c6.txt"]);
    assert_eq!(
        (code(&out), stdout(&out).as_str()),
        (1, "cycle: a b c d e f\n")
    );
    let out = run(d, &["oracle", "chordless-cycle", "fig.txt"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "cycle: none\n"));
}

#[test]
fn bench_command() {
    let f = Files::new();
    let out = run(
        f.dir.path(),
        &[
            "bench",
            "--k",
            "3",
            "--sizes",
            "64,128",
            "--seed",
            "2",
            "--repeats",
            "1",
        ],
    );
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n m t_fast t_naive ratio"));
    assert!(lines.next().unwrap().starts_with("64 "));
    assert!(text.lines().any(|l| l.starts_with("linear: ")));
    assert_eq!(
        code(&run(
            f.dir.path(),
            &["bench", "--sizes", "64", "--repeats", "0"]
        )),
        2
    );
}
