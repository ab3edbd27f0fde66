#![allow(dead_code)]

use num_bigint::BigInt;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use polybound::complex::HasseDiagram;
use polybound::exact::lp::active_rows;
use polybound::pipeline::{prepare, Family, Prepared, DEFAULT_ROW_BUDGET};
use polybound::polyhedron::{bounded_generic_objective, reverse_search_vertices};
use polybound::{Error, HRep, Inequality, Rational, VRep, VertexSet};

pub fn prepared(f: &Family) -> Prepared {
    prepare(f.hrep(DEFAULT_ROW_BUDGET).unwrap()).unwrap_or_else(|e| panic!("{f}: {e}"))
}

/// Every benchmark instance small enough for the oracles.
pub fn generated_families() -> Vec<Family> {
    let mut v: Vec<Family> = (2..=6).map(Family::DwarfedCube).collect();
    v.extend((3..=6).map(Family::Thrackle));
    for d in 4..=6 {
        v.extend((0..4).map(|seed| Family::RandomMetric { d, seed }));
    }
    v.extend([
        Family::TropicalCyclic { s: 3, t: 3 },
        Family::TropicalCyclic { s: 3, t: 4 },
        Family::TropicalCyclic { s: 4, t: 4 },
        Family::TropicalPermutohedron(3),
    ]);
    v
}

pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::seed_from_u64(seed))
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.0.next_u64() % (hi - lo + 1) as u64) as i64
    }
}

fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// `x ≥ 0` plus a few random rows with positive right-hand side, so the
/// origin is a vertex and the region is pointed.
pub fn random_pointed(rng: &mut Rng) -> HRep {
    let d = rng.range(2, 4) as usize;
    let extra = rng.range(1, 4) as usize;
    let mut rows: Vec<Inequality> = (0..d)
        .map(|i| {
            let mut a = vec![int(0); d];
            a[i] = int(-1);
            Inequality::new(a, int(0))
        })
        .collect();
    for _ in 0..extra {
        let a = (0..d).map(|_| int(rng.range(-3, 3))).collect();
        rows.push(Inequality::new(a, int(rng.range(1, 5))));
    }
    HRep::new(d, rows).unwrap()
}

/// Face count of `P` from the full lattice of its closure: nonempty faces
/// not inside the far face, plus the empty face.
pub fn phi_from_lattice(lattice: &HasseDiagram, far: &VertexSet) -> usize {
    1 + lattice.nodes.iter().filter(|n| n.rank >= 0 && !n.vertices.is_subset(far)).count()
}

/// True iff every vertex of `v` has exactly `d` tight rows in `h`.
pub fn rows_simple(h: &HRep, v: &VRep) -> bool {
    let (a, b) = (h.matrix(), h.rhs());
    v.vertices.iter().all(|x| active_rows(&a, &b, x).len() == h.dim())
}

/// Reverse search with the first generic objective among several tries.
pub fn reverse_search(h: &HRep) -> polybound::Result<VRep> {
    for attempt in 0..16 {
        let c = bounded_generic_objective(h, attempt)?;
        match reverse_search_vertices(h, &c) {
            Err(Error::ObjectiveNotGeneric) => continue,
            r => return r.map(|o| o.vrep),
        }
    }
    Err(Error::ObjectiveNotGeneric)
}
