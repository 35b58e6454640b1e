use std::path::Path;
use std::process::{Command, Output};

use scx_core::io::{self, FillPolicy};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scx"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn conductance_of_k3() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k3.scx", "%autoclose\nt 1 2 3\n");
    let o = run(
        dir.path(),
        &["conductance", "--input", "k3.scx", "--set", "1"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "cut=1\nvolS=1\nvolSbar=2\nphi=1\n");

    let o = run(
        dir.path(),
        &["conductance", "--input", "k3.scx", "--set", "1,2,3"],
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run(
        dir.path(),
        &["conductance", "--input", "k3.scx", "--set", "1;2"],
    );
    assert_eq!(o.status.code(), Some(1));
    let o = run(
        dir.path(),
        &["conductance", "--input", "k3.scx", "--set", "4"],
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn parse_and_usage_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["cluster", "--input", "missing.scx", "--output", "a.csv"],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.scx"));

    write(dir.path(), "bad.scx", "n 1\nx 2\n");
    let o = run(
        dir.path(),
        &["sweep", "--input", "bad.scx", "--output", "s.csv"],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    write(dir.path(), "open.scx", "t 1 2 3\n");
    let o = run(
        dir.path(),
        &["sweep", "--input", "open.scx", "--output", "s.csv"],
    );
    assert_eq!(o.status.code(), Some(1));

    let o = run(
        dir.path(),
        &["cluster", "--input", "bad.scx", "--no-such-flag"],
    );
    assert_eq!(o.status.code(), Some(1));
    let o = run(
        dir.path(),
        &[
            "cluster", "--input", "open.scx", "--method", "spectral", "--output", "a.csv",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(!dir.path().join("a.csv").exists());
}

#[test]
fn infeasible_exits_2_without_output() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "path.scx", "%autoclose\ne 1 2\ne 2 3\n");
    let o = run(
        dir.path(),
        &["sweep", "--input", "path.scx", "--output", "s.csv"],
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(!dir.path().join("s.csv").exists());
    let o = run(
        dir.path(),
        &["cluster", "--input", "path.scx", "--output", "a.csv"],
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(!dir.path().join("a.csv").exists());
    let o = run(
        dir.path(),
        &[
            "cluster", "--input", "path.scx", "--method", "graph", "--output", "a.csv",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sweep_profile_of_k3() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k3.scx", "%autoclose\nt 1 2 3\n");
    let o = run(
        dir.path(),
        &["sweep", "--input", "k3.scx", "--output", "s.csv"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("phi=1\n"));
    let csv = read(dir.path(), "s.csv");
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "k,node,phi");
    assert_eq!(rows.len(), 3);
    assert!(rows[1..].iter().all(|r| r.ends_with(",1")));
}

#[test]
fn nmi_command() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "p.csv", "node,cluster\n1,0\n2,0\n3,1\n4,1\n");
    write(
        dir.path(),
        "t.csv",
        "node,label\n1,\"a\"\n2,\"a\"\n3,\"a\"\n4,\"b\"\n",
    );
    let o = run(dir.path(), &["nmi", "--pred", "p.csv", "--truth", "p.csv"]);
    assert_eq!(stdout(&o), "nmi=1.000000\n");
    let o = run(dir.path(), &["nmi", "--pred", "p.csv", "--truth", "t.csv"]);
    assert_eq!(stdout(&o), "nmi=0.343711\n");
    write(dir.path(), "short.csv", "node,label\n1,a\n2,b\n");
    let o = run(
        dir.path(),
        &["nmi", "--pred", "p.csv", "--truth", "short.csv"],
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn fill_matches_library_removal() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["synth", "--kind", "zachary", "--output", "z_all.scx"],
    );
    assert_eq!(o.status.code(), Some(0));
    let removals: String = io::zachary_bridge_removals()
        .iter()
        .map(|[u, v, w]| format!("{u} {v} {w}\n"))
        .collect();
    write(dir.path(), "bridges.txt", &removals);
    let o = run(
        dir.path(),
        &[
            "fill",
            "--edges",
            "z_all.scx",
            "--mode",
            "all",
            "--remove",
            "bridges.txt",
            "--output",
            "z.scx",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let (want, _) = io::load_zachary(&FillPolicy::List(io::zachary_bridge_removals())).unwrap();
    assert_eq!(read(dir.path(), "z.scx"), io::write_complex(&want));

    let o = run(
        dir.path(),
        &[
            "fill",
            "--edges",
            "z_all.scx",
            "--mode",
            "all",
            "--remove-containing-edge",
            "31,9",
            "--remove-containing-edge",
            "9,34",
            "--output",
            "z2.scx",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read(dir.path(), "z2.scx"), read(dir.path(), "z.scx"));

    let o = run(
        dir.path(),
        &[
            "fill",
            "--edges",
            "z_all.scx",
            "--mode",
            "none",
            "--output",
            "n.scx",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("triangles=0\n"));
    assert!(!read(dir.path(), "n.scx").contains("\nt "));

    write(dir.path(), "notclique.txt", "1 2 34\n");
    let o = run(
        dir.path(),
        &[
            "fill",
            "--edges",
            "z_all.scx",
            "--mode",
            "all",
            "--remove",
            "notclique.txt",
            "--output",
            "x.scx",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(!dir.path().join("x.scx").exists());
}

#[test]
fn zachary_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    run(
        dir.path(),
        &[
            "synth",
            "--kind",
            "zachary",
            "--output",
            "z_all.scx",
            "--labels",
            "truth.csv",
        ],
    );
    run(
        dir.path(),
        &[
            "fill",
            "--edges",
            "z_all.scx",
            "--mode",
            "all",
            "--remove-containing-edge",
            "9,31",
            "--remove-containing-edge",
            "9,34",
            "--output",
            "z.scx",
        ],
    );
    let o = run(
        dir.path(),
        &[
            "cluster",
            "--input",
            "z.scx",
            "--method",
            "simplicial",
            "--k",
            "2",
            "--output",
            "a.csv",
            "--truth",
            "truth.csv",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("excluded=2\n"));
    assert!(out.contains("nmi=1.000000\n"));
    assert_eq!(read(dir.path(), "a.csv").lines().count(), 35);

    let phi_line = out
        .lines()
        .find(|l| l.starts_with("phi="))
        .unwrap()
        .to_string();
    let o = run(
        dir.path(),
        &["sweep", "--input", "z.scx", "--output", "s.csv"],
    );
    assert!(stdout(&o).contains(&format!("{phi_line}\n")));
    // 32 nodes lie in a filled triangle.
    assert_eq!(read(dir.path(), "s.csv").lines().count(), 32);

    let o = run(
        dir.path(),
        &[
            "cluster",
            "--input",
            "z.scx",
            "--method",
            "motif",
            "--output",
            "m.csv",
            "--truth",
            "truth.csv",
        ],
    );
    assert!(stdout(&o).contains("nmi=0.837169\n"));
}

#[test]
fn synth_then_cluster_recovers_planted_labels() {
    let dir = tempfile::tempdir().unwrap();
    for seed in ["0", "3"] {
        let o = run(
            dir.path(),
            &[
                "synth",
                "--kind",
                "hollow-bridge",
                "--seed",
                seed,
                "--output",
                "p.scx",
                "--labels",
                "p.csv",
            ],
        );
        assert_eq!(stdout(&o), "nodes=8\nedges=13\ntriangles=4\nclusters=2\n");
        let o = run(
            dir.path(),
            &[
                "cluster", "--input", "p.scx", "--output", "a.csv", "--truth", "p.csv",
            ],
        );
        assert!(stdout(&o).contains("nmi=1.000000\n"));
        let o = run(dir.path(), &["nmi", "--pred", "a.csv", "--truth", "p.csv"]);
        assert_eq!(stdout(&o), "nmi=1.000000\n");
    }
}

#[test]
fn synth_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let args = |out: &'static str, seed: &'static str| {
        vec![
            "synth", "--kind", "planted", "--seed", seed, "--p-tri", "0.5", "--output", out,
        ]
    };
    run(dir.path(), &args("a.scx", "1"));
    run(dir.path(), &args("b.scx", "1"));
    run(dir.path(), &args("c.scx", "2"));
    assert_eq!(read(dir.path(), "a.scx"), read(dir.path(), "b.scx"));
    assert_ne!(read(dir.path(), "a.scx"), read(dir.path(), "c.scx"));
    let o = run(
        dir.path(),
        &[
            "synth",
            "--kind",
            "planted",
            "--p-inter",
            "1.5",
            "--output",
            "d.scx",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn export_dot_colors() {
    let dir = tempfile::tempdir().unwrap();
    run(
        dir.path(),
        &[
            "synth",
            "--kind",
            "hollow-bridge",
            "--output",
            "p.scx",
            "--labels",
            "p.csv",
        ],
    );
    let o = run(
        dir.path(),
        &[
            "export-dot",
            "--input",
            "p.scx",
            "--assignment",
            "p.csv",
            "--output",
            "p.dot",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let dot = read(dir.path(), "p.dot");
    let mut colors: Vec<&str> = dot
        .lines()
        .filter_map(|l| l.split("fillcolor=").nth(1))
        .collect();
    colors.sort_unstable();
    colors.dedup();
    assert_eq!(colors.len(), 2);
    assert_eq!(dot.matches(" -- ").count(), 13);
    assert_eq!(dot.matches("// t ").count(), 4);

    write(dir.path(), "few.csv", "node,label\n1,a\n");
    let o = run(
        dir.path(),
        &[
            "export-dot",
            "--input",
            "p.scx",
            "--assignment",
            "few.csv",
            "--output",
            "q.dot",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn multiway_cluster_counts() {
    let dir = tempfile::tempdir().unwrap();
    run(
        dir.path(),
        &[
            "synth",
            "--kind",
            "planted",
            "--communities",
            "3",
            "--size",
            "6",
            "--p-tri",
            "0.9",
            "--p-inter",
            "0.05",
            "--seed",
            "4",
            "--output",
            "p.scx",
            "--labels",
            "p.csv",
        ],
    );
    let o = run(
        dir.path(),
        &[
            "cluster", "--input", "p.scx", "--k", "3", "--output", "a.csv", "--truth", "p.csv",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("clusters=3\n"));
    let o = run(
        dir.path(),
        &[
            "cluster", "--input", "p.scx", "--k", "40", "--output", "b.csv",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
}
