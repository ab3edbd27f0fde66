mod common;

use polybound::exact::frac;
use polybound::generators::{random_metric, thrackle_metric, tight_span_hrep};
use polybound::io::{parse_hrep, parse_incidences, parse_vrep, write_hrep, write_incidences, write_vrep};
use polybound::pipeline::{
    format_csv, prepare, run_pipeline, run_suite, Algorithm, Family, RunOptions, Suite, SuiteRow,
};

use common::*;

#[test]
fn text_formats_round_trip() {
    for f in generated_families() {
        let p = prepared(&f);
        assert_eq!(parse_hrep(&write_hrep(&p.hrep)).unwrap(), p.hrep, "{f}");
        assert_eq!(parse_vrep(&write_vrep(&p.vertices)).unwrap(), p.vertices, "{f}");
        let inc = parse_incidences(&write_incidences(&p.incidences)).unwrap();
        assert_eq!(inc.rows(), p.incidences.rows(), "{f}");
        assert_eq!(inc.far_face(), p.incidences.far_face(), "{f}");
    }
}

#[test]
fn outputs_are_reproducible() {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    let f = Family::RandomMetric { d: 5, seed: 3 };
    let opts = RunOptions { verify: true, ..RunOptions::default() };
    for dir in &dirs {
        run_pipeline(&f, &opts, Some(dir.path())).unwrap();
    }
    for name in ["hrep.txt", "inc.txt", "hasse.json"] {
        let a = std::fs::read(dirs[0].path().join(name)).unwrap();
        let b = std::fs::read(dirs[1].path().join(name)).unwrap();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn hasse_json_is_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_pipeline(&Family::Thrackle(4), &RunOptions::default(), Some(dir.path())).unwrap();
    let text = std::fs::read_to_string(dir.path().join("hasse.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n_vertices"], 12);
    assert_eq!(v["faces"].as_array().unwrap().len(), 18);
    assert_eq!(v["arcs"].as_array().unwrap().len(), out.diagram.arcs.len());
    let f: Vec<usize> = serde_json::from_value(v["f_vector"].clone()).unwrap();
    assert_eq!(f.iter().sum::<usize>() + 1, out.row.phi_prime);
    let far: Vec<usize> = serde_json::from_value(v["far_face"].clone()).unwrap();
    assert_eq!(far, out.prepared.far_face().to_vec());
}

#[test]
fn tight_span_scaling_keeps_combinatorics() {
    for m in [thrackle_metric(5).unwrap(), random_metric(5, 9).unwrap()] {
        let base = prepare(tight_span_hrep(&m)).unwrap();
        let scaled = prepare(tight_span_hrep(&m.scaled(&frac(7, 3)))).unwrap();
        let count = |p: &polybound::pipeline::Prepared| {
            polybound::complex::selective_generation(&p.incidences, None).unwrap().f_vector()
        };
        assert_eq!(count(&base), count(&scaled));
    }
}

#[test]
fn every_algorithm_agrees_on_tables() {
    for f in [Family::DwarfedCube(5), Family::Thrackle(5), Family::TropicalCyclic { s: 3, t: 3 }] {
        let phi: Vec<usize> = [Algorithm::Selective, Algorithm::Moebius, Algorithm::Filter]
            .into_iter()
            .map(|algorithm| {
                run_pipeline(&f, &RunOptions { algorithm, ..RunOptions::default() }, None).unwrap().row.phi_prime
            })
            .collect();
        assert!(phi.windows(2).all(|w| w[0] == w[1]), "{f}: {phi:?}");
    }
}

#[test]
fn suites_report_table_values() {
    let rows = run_suite(Suite::Thrackle, Some(6), 0, &RunOptions::default());
    let phi: Vec<usize> = rows
        .iter()
        .map(|r| match r {
            SuiteRow::Instance(b) => b.phi_prime,
            other => panic!("{other:?}"),
        })
        .collect();
    assert_eq!(phi, vec![8, 18, 42, 100]);

    let rows = run_suite(Suite::Random, Some(5), 20, &RunOptions::default());
    match &rows[..] {
        [SuiteRow::Sample(s)] => {
            assert_eq!((s.count, s.phi_prime, s.phi_prime_stddev), (20, 42.0, 0.0));
        }
        other => panic!("{other:?}"),
    }
    let csv = format_csv(&rows);
    assert!(csv.lines().nth(1).unwrap().starts_with("random-metric 5,5,"));
}

#[test]
fn errors_carry_their_stage() {
    let err = run_pipeline(
        &Family::TropicalPermutohedron(5),
        &RunOptions { row_budget: Some(10), ..RunOptions::default() },
        None,
    )
    .err()
    .unwrap();
    assert!(matches!(err, polybound::Error::Stage { stage: "generate", .. }));
    assert!(matches!(err.root(), polybound::Error::Budget(_)));
}
