use std::path::Path;
use std::process::{Command, Output};

fn polybound(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polybound")).args(args).current_dir(dir).output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stages_chain_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    stdout(&polybound(&["gen", "dwarfed-cube", "3", "-o", "gen"], d));
    let dd = stdout(&polybound(&["vertices", "gen/hrep.txt"], d));
    let brute = stdout(&polybound(&["vertices", "gen/hrep.txt", "--brute-force"], d));
    assert_eq!(dd, brute);
    assert!(dd.starts_with("polybound-vrep 1\ndim 3\nvertices 4\n"));

    let closure = stdout(&polybound(&["close", "gen/hrep.txt"], d));
    assert!(closure.starts_with("polybound-hrep 1\ndim 3 rows 7\n"));

    stdout(&polybound(&["incidences", "gen/hrep.txt", "-o", "inc"], d));
    let inc = std::fs::read_to_string(d.join("inc/inc.txt")).unwrap();
    assert!(inc.starts_with("polybound-inc 1\nfacets 7 vertices 10\n"));
    assert!(inc.contains("farface"));

    for alg in ["selective", "moebius", "filter"] {
        let json = stdout(&polybound(&["bounded", "inc/inc.txt", "--alg", alg, "--verify"], d));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["f_vector"], serde_json::json!([4, 3]), "{alg}");
    }
    let cut = stdout(&polybound(&["bounded", "inc/inc.txt", "--max-dim", "0"], d));
    let v: serde_json::Value = serde_json::from_str(&cut).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([4]));

    let f = stdout(&polybound(&["fvector", "gen/hrep.txt", "--simple"], d));
    assert!(f.contains("bounded: f = (4, 3, 0, 0)"), "{f}");
}

#[test]
fn moebius_reads_plain_incidences() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    stdout(&polybound(&["gen", "thrackle", "4", "-o", "."], d));
    stdout(&polybound(&["incidences", "hrep.txt", "--no-far", "-o", "p"], d));
    let json = stdout(&polybound(&["bounded", "p/inc.txt", "--alg", "moebius"], d));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["faces"].as_array().unwrap().len(), 18);
    let o = polybound(&["bounded", "p/inc.txt"], d);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn run_prints_table_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&polybound(&["run", "dwarfed-cube", "5", "--verify", "-o", "run"], dir.path()));
    assert!(out.starts_with("dwarfed-cube 5: d=5 m̄=11 n̄=26 α=130 φ′=12 ("), "{out}");
    for name in ["hrep.txt", "inc.txt", "hasse.json"] {
        assert!(dir.path().join("run").join(name).exists(), "{name}");
    }
}

#[test]
fn bench_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out =
        stdout(&polybound(&["bench", "--suite", "tropical-cyclic", "--max-size", "7", "--format", "csv"], dir.path()));
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split(',').collect()).collect();
    let phi: Vec<&str> = rows.iter().map(|r| r[5]).collect();
    assert_eq!(phi, vec!["14", "64"]);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(polybound(&["vertices", "missing.txt"], d).status.code(), Some(2));

    std::fs::write(d.join("bad.txt"), "polybound-hrep 1\ndim 2 rows 1\n1 2\n").unwrap();
    let o = polybound(&["vertices", "bad.txt"], d);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    stdout(&polybound(&["gen", "dwarfed-cube", "12", "-o", "."], d));
    let o = polybound(&["vertices", "hrep.txt", "--brute-force", "--budget", "100"], d);
    assert_eq!(o.status.code(), Some(3));
    let o = polybound(&["run", "tropical-permutohedron", "5", "--budget", "10"], d);
    assert_eq!(o.status.code(), Some(3));

    // dwarfed 3-cube closure with a far face that is not a face
    let rows = ["1111100000", "1100010110", "1001001101", "0000000111", "0001101000", "0110010000", "0010111011"];
    let text = format!("polybound-inc 1\nfacets 7 vertices 10\n{}\nfarface 0 2\n", rows.join("\n"));
    std::fs::write(d.join("inc.txt"), text).unwrap();
    let o = polybound(&["bounded", "inc.txt", "--verify"], d);
    assert_eq!(o.status.code(), Some(4), "{}", String::from_utf8_lossy(&o.stderr));
}
