use std::path::Path;
use std::process::{Command, Output};

use order_spectra::export::PosetDump;
use order_spectra::group::{construct_group, format_cayley_table, GroupSpec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_order-spectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_table(dir: &Path, name: &str, spec: &GroupSpec) -> String {
    let g = construct_group(spec).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, format_cayley_table(&g.table_rows())).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_dihedral_twelve() {
    let o = run(&["analyze", "dihedral:12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("classes: 7"));
    assert!(out.contains("lattice: true"));
    assert!(out.contains("modular: false"));
    assert!(out.contains("N5: {1,2}, {1,2,3}, {1,2,3,6}, {1,2,4}, {1,2,3,4,6,12}"));
}

#[test]
fn analyze_large_dihedral_uses_closed_form() {
    let o = run(&["analyze", "dihedral:5000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 10000"));
}

#[test]
fn usage_errors() {
    for args in [
        &["analyze", "cyclic:0"][..],
        &["analyze", "dihedral"],
        &["analyze", "heisenberg:9"],
        &["analyze", "cayley:/nonexistent/table.txt"],
        &["verify", "theorem-2-11"],
        &["iso", "cyclic:4"],
        &[],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_modular_classification() {
    let o = run(&["verify", "modular-classification", "--max-n", "150"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("150 passed, 0 failed"));
}

#[test]
fn verify_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&[
        "verify",
        "no-m3",
        "--max-n",
        "20",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["theorem"], "no-m3");
    assert_eq!(v["summary"]["passed"], 20);
    assert_eq!(v["cases"].as_array().unwrap().len(), 20);
}

#[test]
fn atlas_of_cayley_tables() {
    let dir = tempfile::tempdir().unwrap();
    write_table(
        dir.path(),
        "klein.txt",
        &GroupSpec::ElementaryAbelian { p: 2, k: 2 },
    );
    write_table(dir.path(), "s3.txt", &GroupSpec::Dihedral(3));
    write_table(dir.path(), "heis.txt", &GroupSpec::Heisenberg(3));
    let atlas = dir.path().to_str().unwrap();
    for theorem in ["chain-iff-p-group", "c2-classification"] {
        let o = run(&["verify", theorem, "--atlas", atlas]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("68 cases, 68 passed"), "{}", stdout(&o));
    }

    std::fs::write(dir.path().join("broken.txt"), "2\n0 0\n1 1\n").unwrap();
    let o = run(&["verify", "chain-iff-p-group", "--atlas", atlas]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_cayley_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_table(dir.path(), "d6.txt", &GroupSpec::Dihedral(6));
    let spec = format!("cayley:{path}");
    let o = run(&["analyze", &spec]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("classes: 5"));
    assert!(out.contains("{1,2,3,6} (2 subgroups)"));

    let json = dir.path().join("d6.json");
    let o = run(&["analyze", &spec, "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dump = PosetDump::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(dump.group, spec);
    let p = dump.to_spectrum_poset(None).unwrap();
    assert_eq!(p.len(), 5);
}

#[test]
fn iso_between_groups() {
    let o = run(&["iso", "dihedral:15", "dihedral:15"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("isomorphic (8 classes)"));

    let o = run(&["iso", "cyclic:6", "dihedral:3"]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["iso", "dihedral:12", "cyclic:12"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not isomorphic (7 and 6 classes)"));
}

#[test]
fn dot_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.dot");
    let b = dir.path().join("b.dot");
    for p in [&a, &b] {
        assert_eq!(
            run(&["analyze", "dihedral:30", "--dot", p.to_str().unwrap()])
                .status
                .code(),
            Some(0)
        );
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    assert!(String::from_utf8(a)
        .unwrap()
        .starts_with("digraph pi_poset {"));
}
