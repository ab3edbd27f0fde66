mod common;

use num_traits::{One, Signed, Zero};

use polybound::exact::{dot, frac, lp_solve, rat, LpStatus, Matrix, Sense};
use polybound::pipeline::Family;
use polybound::polyhedron::{
    compute_incidences, enumerate_vertices, enumerate_vertices_bruteforce, is_simple, projective_closure,
    vertex_edge_graph, Pulled, DEFAULT_BRUTE_FORCE_BUDGET,
};
use polybound::{HRep, Inequality, Rational, VRep};

use common::*;

fn brute(h: &HRep) -> VRep {
    enumerate_vertices_bruteforce(h, DEFAULT_BRUTE_FORCE_BUDGET).unwrap()
}

/// Pulls the closure's vertices back and compares with `P`'s own vertices
/// and rays.
fn check_bijection(h: &HRep) {
    let c = projective_closure(h).unwrap();
    let closed = enumerate_vertices(&c.closure).unwrap();
    assert!(closed.rays.is_empty());
    for x in &closed.vertices {
        assert!(x.iter().all(|t| !t.is_negative()));
        assert!(x.iter().sum::<Rational>() <= Rational::one());
    }
    let mut points = Vec::new();
    let mut dirs = Vec::new();
    for x in &closed.vertices {
        match c.pull_back(x) {
            Pulled::Point(p) => points.push(p),
            Pulled::Direction(r) => dirs.push(r),
        }
    }
    let pulled = VRep::new(h.dim(), points, dirs);
    let direct = brute(h);
    assert_eq!(pulled, direct);
    assert_eq!(enumerate_vertices(h).unwrap(), direct);
}

#[test]
fn quadrant_closure_is_triangle() {
    let h = HRep::new(
        2,
        vec![Inequality::new(vec![rat(-1), rat(0)], rat(0)), Inequality::new(vec![rat(0), rat(-1)], rat(0))],
    )
    .unwrap();
    let c = projective_closure(&h).unwrap();
    let v = brute(&c.closure);
    assert_eq!(v.vertices, vec![vec![rat(0), rat(0)], vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
    check_bijection(&h);
}

#[test]
fn dwarfed_reversal_square() {
    let p = prepared(&Family::DwarfedCube(2));
    assert_eq!(p.far_face().len(), 2);
    let near: Vec<Vec<Rational>> = (0..p.vertices.vertices.len())
        .filter(|&v| !p.far_face().contains(v))
        .map(|v| match p.closure.pull_back(&p.vertices.vertices[v]) {
            Pulled::Point(x) => x,
            Pulled::Direction(_) => panic!("near vertex pulled back to a direction"),
        })
        .collect();
    let expect = VRep::new(2, vec![vec![rat(0), rat(0)], vec![rat(2), rat(0)], vec![rat(0), rat(2)]], vec![]);
    assert_eq!(VRep::new(2, near, vec![]), expect);
}

#[test]
fn dwarfed_polytope_square() {
    let v = brute(&polybound::generators::dwarfed_cube(2).unwrap());
    let mut want = vec![
        vec![rat(0), rat(0)],
        vec![rat(1), rat(0)],
        vec![rat(0), rat(1)],
        vec![rat(1), frac(1, 2)],
        vec![frac(1, 2), rat(1)],
    ];
    want.sort();
    assert_eq!(v.vertices, want);
}

#[test]
fn generated_bijection() {
    for f in generated_families().into_iter().filter(|f| f.dim() <= 6) {
        let h = f.hrep(polybound::pipeline::DEFAULT_ROW_BUDGET).unwrap();
        if h.len() <= 22 {
            check_bijection(&h);
        }
    }
}

#[test]
fn random_bijection_and_double_description() {
    let mut rng = Rng::new(101);
    for _ in 0..60 {
        let h = random_pointed(&mut rng);
        check_bijection(&h);
        let c = projective_closure(&h).unwrap();
        assert_eq!(enumerate_vertices(&c.closure).unwrap(), brute(&c.closure));
    }
}

#[test]
fn column_sums_and_simplicity() {
    for f in generated_families() {
        let p = prepared(&f);
        let d = f.dim();
        let sums = p.incidences.column_sums();
        assert!(sums.iter().all(|&s| s >= d), "{f}");
        assert_eq!(is_simple(&p.incidences, d), sums.iter().all(|&s| s == d), "{f}");
    }
}

#[test]
fn dwarfed_graph_is_regular() {
    let p = prepared(&Family::DwarfedCube(3));
    let g = vertex_edge_graph(&p.incidences, 3).unwrap();
    assert_eq!(g.nodes, 10);
    assert!(g.degrees().iter().all(|&k| k == 3));
    let lattice = polybound::complex::full_face_lattice(&p.incidences);
    assert_eq!(g.edges.len(), lattice.nodes.iter().filter(|n| n.rank == 1).count());
}

#[test]
fn reverse_search_on_random_simple_polytopes() {
    let mut rng = Rng::new(202);
    let mut checked = 0;
    while checked < 40 {
        let h = random_pointed(&mut rng);
        let c = projective_closure(&h).unwrap();
        for g in [&h, &c.closure] {
            let want = brute(g);
            if rows_simple(g, &want) {
                assert_eq!(reverse_search(g).unwrap(), want);
                checked += 1;
            }
        }
    }
}

#[test]
fn incidences_reject_outside_points() {
    let h = polybound::generators::dwarfed_cube(2).unwrap();
    let v = VRep::new(2, vec![vec![rat(2), rat(0)]], vec![]);
    assert!(matches!(compute_incidences(&h, &v), Err(polybound::Error::PointOutside { .. })));
}

fn random_lp(rng: &mut Rng) -> (Matrix, Vec<Rational>, Vec<Rational>) {
    let d = rng.range(1, 4) as usize;
    let m = rng.range(1, 6) as usize;
    let rows: Vec<Vec<Rational>> = (0..m).map(|_| (0..d).map(|_| rat(rng.range(-3, 3))).collect()).collect();
    let b = (0..m).map(|_| rat(rng.range(-2, 5))).collect();
    let c = (0..d).map(|_| rat(rng.range(-3, 3))).collect();
    (Matrix::from_rows(d, rows).unwrap(), b, c)
}

#[test]
fn lp_max_min_symmetry() {
    let mut rng = Rng::new(303);
    for _ in 0..200 {
        let (a, b, c) = random_lp(&mut rng);
        let max = lp_solve(&a, &b, &c, Sense::Max).unwrap();
        let neg: Vec<Rational> = c.iter().map(|x| -x).collect();
        let min = lp_solve(&a, &b, &neg, Sense::Min).unwrap();
        assert_eq!(max.status, min.status);
        if max.status == LpStatus::Optimal {
            let obj = max.objective.clone().unwrap();
            assert_eq!(obj, -min.objective.clone().unwrap());
            for out in [&max, &min] {
                let x = out.point.as_ref().unwrap();
                assert!(a.mul_vec(x).iter().zip(&b).all(|(l, r)| l <= r));
                assert_eq!(dot(&c, x), obj);
            }
        }
    }
}

#[test]
fn lp_trivial_cases() {
    let a = Matrix::from_i64(&[&[1], &[-1]]);
    let out = lp_solve(&a, &[rat(1), rat(0)], &[rat(1)], Sense::Max).unwrap();
    assert_eq!(out.point, Some(vec![rat(1)]));
    let a = Matrix::from_i64(&[&[-1]]);
    assert_eq!(lp_solve(&a, &[rat(0)], &[rat(1)], Sense::Max).unwrap().status, LpStatus::Unbounded);
    let a = Matrix::from_i64(&[&[1], &[-1]]);
    let out = lp_solve(&a, &[rat(0), rat(-1)], &[Rational::zero()], Sense::Max).unwrap();
    assert_eq!(out.status, LpStatus::Infeasible);
}
