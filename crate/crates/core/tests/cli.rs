use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn edgedim(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgedim"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_from_file_and_inline() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("p5.txt"),
        "# path\n5 4\n0 1\n1 2\n2 3\n3 4\n",
    )
    .unwrap();
    let o = edgedim(&["compute", "dim", "p5.txt"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("value: 1\nwitness: [0]\n"));

    let o = edgedim(&["compute", "edim", "--construct", "F", "3"], dir.path());
    assert!(
        stdout(&o).contains("n: 11\nedges: 43\nvalue: 9\n"),
        "{}",
        stdout(&o)
    );

    fs::write(dir.path().join("k3.g6"), "Bw\n").unwrap();
    let o = edgedim(&["compute", "edim", "k3.g6", "--all-bases"], dir.path());
    assert!(stdout(&o).ends_with("bases: 3\nbasis: [0, 1]\nbasis: [0, 2]\nbasis: [1, 2]\n"));

    let o = edgedim(&["compute", "joint", "--g", "path:3", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k"], 1);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("split.txt"), "4 2\n0 1\n2 3\n").unwrap();
    fs::write(dir.path().join("bad.txt"), "3 2\n0 1\n1 1\n").unwrap();
    fs::write(dir.path().join("k1.txt"), "1 0\n").unwrap();
    let code = |args: &[&str]| edgedim(args, dir.path()).status.code();

    assert_eq!(code(&["compute", "dim", "split.txt"]), Some(3));
    assert_eq!(code(&["compute", "joint", "k1.txt"]), Some(3));
    assert_eq!(code(&["compute", "dim", "k1.txt"]), Some(0));
    let o = edgedim(&["compute", "dim", "bad.txt"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(code(&["compute", "dim", "missing.txt"]), Some(2));
    assert_eq!(code(&["compute", "dim"]), Some(2));
    assert_eq!(code(&["verify", "nonsense", "--g", "path:3"]), Some(2));
    assert_eq!(code(&["verify", "fk", "--kmax", "9"]), Some(2));
    assert_eq!(code(&["survey", "9"]), Some(2));
    assert_eq!(
        code(&["construct", "prod", "--g", "path:3", "--m", "1"]),
        Some(2)
    );
    assert_eq!(code(&["--threads", "0", "survey", "3"]), Some(2));
}

#[test]
fn construct_writes_graph_labels_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let o = edgedim(&["construct", "F", "2", "-o", "f2.g6"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(dir.path().join("f2.g6")).unwrap(),
        "Ed^w\n"
    );
    let labels: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("f2.g6.labels.json")).unwrap())
            .unwrap();
    assert_eq!(labels["labels"][0], "b1");
    assert_eq!(labels["labels"][5], "a{1,2}");
    let manifest = fs::read_to_string(dir.path().join("f2.g6.manifest.json")).unwrap();
    assert!(manifest.contains("\"command\": \"construct F 2\""));
    assert!(!manifest.contains(&*dir.path().to_string_lossy()));

    let o = edgedim(
        &["construct", "join", "--g", "path:3", "--h", "path:1"],
        dir.path(),
    );
    assert_eq!(stdout(&o), "4 5\n0 1\n0 3\n1 2\n1 3\n2 3\n");

    let o = edgedim(
        &[
            "construct",
            "prod",
            "--g",
            "path:3",
            "--m",
            "4",
            "-o",
            "grid.txt",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("grid.txt")).unwrap();
    assert!(text.starts_with("12 17\n"));

    let o = edgedim(&["construct", "family", "grid", "3", "4"], dir.path());
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).starts_with("12 17\n"));
}

#[test]
fn verify_records_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let o = edgedim(&["verify", "ncondition", "--g", "complete:4"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.starts_with("ncondition\tC~\tholds\t{\"kind\":\"ncondition\""),
        "{out}"
    );
    assert!(out.ends_with("instances=1 holds=1 fails=0 not_applicable=0\n"));

    let o = edgedim(&["verify", "product", "--g", "path:3"], dir.path());
    let out = stdout(&o);
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("product\tBgxP"))
            .count(),
        2
    );

    let o = edgedim(
        &["verify", "hk", "--kmax", "2", "--json", "hk.json"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("hk.json")).unwrap()).unwrap();
    assert_eq!(doc["summary"]["holds"], 2);
    assert_eq!(doc["reports"][1]["certificate"]["edim"], 6);
    assert!(dir.path().join("hk.json.manifest.json").exists());

    let o = edgedim(
        &[
            "verify",
            "join",
            "--sweep",
            "4",
            "--nmin",
            "2",
            "--failures-only",
        ],
        dir.path(),
    );
    assert_eq!(stdout(&o), "summary: theorem=join scope=\"sweep 2..=4\" instances=43 holds=43 fails=0 not_applicable=0\n");
}

#[test]
fn survey_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = edgedim(&["survey", "4"], dir.path());
    assert_eq!(
        stdout(&o),
        "n,dim,edim,count,example_graph6\n4,1,1,12,Ck\n4,2,2,19,Cs\n4,2,3,6,C}\n4,3,3,1,C~\n"
    );

    let o = edgedim(
        &["survey", "4", "-o", "s.csv", "--json", "s.json"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("max edim/dim: 3/2"));
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("s.csv.manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["outputs"], serde_json::json!(["s.csv", "s.json"]));
    assert_eq!(manifest["command"], "survey 4");
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("s.json")).unwrap()).unwrap();
    assert_eq!(doc["ratio"]["max_ratio"], "3/2");
}
