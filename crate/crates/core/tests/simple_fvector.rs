mod common;

use polybound::complex::{full_face_lattice, selective_generation};
use polybound::exact::{dot, rat};
use polybound::pipeline::{prepare, Family};
use polybound::polyhedron::vertex_edge_graph;
use polybound::simple::{edge_graph, f_from_h_difference, f_vector_simple, generic_ray_objective};
use polybound::{Error, HRep, Inequality};

use common::*;

fn simple_families() -> Vec<Family> {
    let mut v: Vec<Family> = (2..=8).map(Family::DwarfedCube).collect();
    v.extend([(3, 3), (4, 4), (3, 4)].map(|(s, t)| Family::TropicalCyclic { s, t }));
    v
}

#[test]
fn seeds_do_not_change_face_numbers() {
    for f in simple_families() {
        let p = prepared(&f);
        let a = f_vector_simple(&p.incidences, &p.vertices, f.dim(), 0).unwrap();
        for seed in 1..4 {
            let b = f_vector_simple(&p.incidences, &p.vertices, f.dim(), seed).unwrap();
            assert_eq!((&a.f_bounded, &a.f_all), (&b.f_bounded, &b.f_all), "{f}");
        }
    }
}

#[test]
fn bounded_counts_match_diagram_and_lattice() {
    for f in simple_families() {
        let p = prepared(&f);
        let d = f.dim();
        let fv = f_vector_simple(&p.incidences, &p.vertices, d, 5).unwrap();
        let mut hist = selective_generation(&p.incidences, None).unwrap().f_vector();
        hist.resize(d + 1, 0);
        assert_eq!(fv.f_bounded.0, hist, "{f}");
        let lattice = full_face_lattice(&p.incidences);
        assert_eq!(fv.f_all.total(), phi_from_lattice(&lattice, p.far_face()), "{f}");
        assert_eq!(fv.h.h.iter().sum::<usize>(), p.incidences.n() - p.far_face().len());
        assert_eq!(fv.h.h_inf.iter().sum::<usize>(), p.far_face().len());
    }
}

#[test]
fn out_degrees_count_arcs_leaving_polyhedron() {
    for f in simple_families() {
        let p = prepared(&f);
        let d = f.dim();
        let fv = f_vector_simple(&p.incidences, &p.vertices, d, 2).unwrap();
        let g = edge_graph(&p.incidences);
        let vals: Vec<_> = p.vertices.vertices.iter().map(|x| dot(&fv.objective, x)).collect();
        let far = p.far_face();
        let leaving = g.orient(|i| vals[i].clone()).iter().filter(|(a, _)| !far.contains(*a)).count();
        let weighted: usize = fv.h.h.iter().enumerate().map(|(k, h)| k * h).sum();
        assert_eq!(weighted, leaving, "{f}");
    }
}

/// With `h` taken over every vertex of a simple closure, the difference
/// formula gives the bounded face numbers.
#[test]
fn difference_formula_with_full_h_vector() {
    for f in simple_families() {
        let p = prepared(&f);
        let d = f.dim();
        if !polybound::polyhedron::is_simple(&p.incidences, d) {
            continue;
        }
        let far = p.far_face();
        let c = generic_ray_objective(&p.vertices, far, 0).unwrap();
        let vals: Vec<_> = p.vertices.vertices.iter().map(|x| dot(&c, x)).collect();
        let arcs = vertex_edge_graph(&p.incidences, d).unwrap().orient(|i| vals[i].clone());
        let mut out = vec![0; p.incidences.n()];
        let mut inn = vec![0; p.incidences.n()];
        for (a, b) in arcs {
            out[a] += 1;
            inn[b] += 1;
        }
        let mut h = vec![0; d + 1];
        let mut h_inf = vec![0; d + 1];
        for v in 0..p.incidences.n() {
            h[out[v]] += 1;
            if far.contains(v) {
                h_inf[inn[v]] += 1;
            }
        }
        let want = f_vector_simple(&p.incidences, &p.vertices, d, 0).unwrap().f_bounded;
        let got = f_from_h_difference(&h, &h_inf);
        assert_eq!(got, want.0.iter().map(|&x| x as i64).collect::<Vec<_>>(), "{f}");
    }
}

#[test]
fn dwarfed_star() {
    let p = prepared(&Family::DwarfedCube(2));
    let fv = f_vector_simple(&p.incidences, &p.vertices, 2, 0).unwrap();
    assert_eq!(fv.f_bounded.0, vec![3, 2, 0]);
    assert_eq!(fv.f_all.total(), 9);
    assert_eq!(fv.f_bounded.to_string(), "f = (3, 2, 0)");
}

#[test]
fn tropical_cyclic_three() {
    let p = prepared(&Family::TropicalCyclic { s: 3, t: 3 });
    let fv = f_vector_simple(&p.incidences, &p.vertices, 5, 0).unwrap();
    assert_eq!(fv.f_bounded.total(), 14);
}

#[test]
fn cone_apex_is_not_simple() {
    // z ≥ |x|, z ≥ |y|: four facets through the apex in dimension three
    let rows = [(1, 0), (-1, 0), (0, 1), (0, -1)]
        .map(|(a, b)| Inequality::new(vec![rat(a), rat(b), rat(-1)], rat(0)))
        .to_vec();
    let p = prepare(HRep::new(3, rows).unwrap()).unwrap();
    let err = f_vector_simple(&p.incidences, &p.vertices, 3, 0).unwrap_err();
    assert!(matches!(err, Error::NotSimple(_)));
}

#[test]
fn json_record() {
    let p = prepared(&Family::DwarfedCube(3));
    let fv = f_vector_simple(&p.incidences, &p.vertices, 3, 0).unwrap();
    let v: serde_json::Value = serde_json::from_str(&fv.to_json()).unwrap();
    assert_eq!(v["f_bounded"], serde_json::json!([4, 3, 0, 0]));
    for key in ["f_all", "h", "h_inf"] {
        assert!(v[key].is_array(), "{key}");
    }
}
