//! Face numbers of simple polyhedra from the degrees of an oriented
//! vertex-edge graph.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::complex::{closure, Closed};
use crate::error::{Error, Result};
use crate::exact::{dot, Rational};
use crate::polyhedron::{is_simple, vertex_edge_graph, Graph, IncidenceMatrix, VRep};
use crate::set::VertexSet;

const OBJECTIVE_RETRIES: u32 = 64;

/// Face counts `f_0, …, f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// Number of faces including the empty face.
    pub fn total(&self) -> usize {
        self.0.iter().sum::<usize>() + 1
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "f = ({})", parts.join(", "))
    }
}

/// Out-degree histogram of the vertices of `P` and in-degree histogram of
/// the far vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector {
    pub h: Vec<usize>,
    pub h_inf: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleFVectors {
    /// Faces of the bounded subcomplex.
    pub f_bounded: FVector,
    /// Faces of `P`, including `P` itself.
    pub f_all: FVector,
    pub h: HVector,
    pub objective: Vec<Rational>,
}

#[derive(Serialize)]
struct Json<'a> {
    f_bounded: &'a FVector,
    f_all: &'a FVector,
    h: &'a [usize],
    h_inf: &'a [usize],
}

impl SimpleFVectors {
    pub fn to_json(&self) -> String {
        let doc = Json { f_bounded: &self.f_bounded, f_all: &self.f_all, h: &self.h.h, h_inf: &self.h.h_inf };
        let mut s = serde_json::to_string(&doc).expect("f-vectors serialize");
        s.push('\n');
        s
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(1, q, q², …)` for a seed-dependent `q` in `(1, 2]`.
fn perturbation(d: usize, rng: &mut SplitMix64) -> Vec<Rational> {
    let q = Rational::one() + Rational::new(BigInt::from(1 + rng.next_u64() % 1024), BigInt::from(1024));
    let mut p = Vec::with_capacity(d);
    let mut x = Rational::one();
    for _ in 0..d {
        p.push(x.clone());
        x *= &q;
    }
    p
}

/// An objective taking distinct values on all vertices of the closure,
/// with every far vertex above every other vertex.
///
/// Tries `c = 𝟙 + ε·(1, q, q², …)`, halving `ε` on each retry and drawing
/// a fresh `q` every eighth retry.
pub fn generic_ray_objective(v: &VRep, far: &VertexSet, seed: u64) -> Result<Vec<Rational>> {
    if far.is_empty() {
        return Err(Error::Invalid("far face is empty".into()));
    }
    let d = v.dim;
    let mut rng = SplitMix64::from_seed(seed.to_le_bytes());
    let mut p = perturbation(d, &mut rng);
    let mut eps = Rational::new(BigInt::one(), BigInt::from(8));
    for attempt in 0..OBJECTIVE_RETRIES {
        if attempt > 0 && attempt % 8 == 0 {
            p = perturbation(d, &mut rng);
        }
        let c: Vec<Rational> = p.iter().map(|x| Rational::one() + &eps * x).collect();
        if objective_ok(v, far, &c) {
            return Ok(c);
        }
        eps /= Rational::from_integer(BigInt::from(2));
    }
    Err(Error::Budget(format!("no generic objective after {OBJECTIVE_RETRIES} attempts")))
}

fn objective_ok(v: &VRep, far: &VertexSet, c: &[Rational]) -> bool {
    let vals: Vec<Rational> = v.vertices.iter().map(|x| dot(c, x)).collect();
    let mut sorted = vals.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let near_max = (0..vals.len()).filter(|&i| !far.contains(i)).map(|i| &vals[i]).max();
    let far_min = far.iter().map(|i| &vals[i]).min();
    match (near_max, far_min) {
        (Some(a), Some(b)) => a < b,
        _ => true,
    }
}

/// Vertex-edge graph of a polytope from its incidences: `u` and `v` span an
/// edge iff the smallest face containing both has no other vertex.
pub fn edge_graph(inc: &IncidenceMatrix) -> Graph {
    let n = inc.n();
    let mut edges = Vec::new();
    let mut s = VertexSet::empty(n);
    for u in 0..n {
        s.insert(u);
        for v in u + 1..n {
            s.insert(v);
            if closure(&s, inc) == Closed::Face(s.clone()) {
                edges.push((u, v));
            }
            s.remove(v);
        }
        s.remove(u);
    }
    Graph::new(n, edges)
}

/// Face numbers of `P` and of its bounded subcomplex for a simple `P`,
/// given the incidences of its closure (with far face) and the closure's
/// vertex coordinates.
///
/// With edges directed by increasing objective, a bounded `k`-face is
/// counted at its top vertex, which has `k` in-edges in it, and any face
/// of `P` at its bottom vertex. Hence `f_bounded_k = Σ C(d − i, k) h_i` and
/// `f_all_k = Σ C(i, k) h_i` with `h_i` the number of vertices of `P` with
/// out-degree `i`.
pub fn f_vector_simple(inc: &IncidenceMatrix, coords: &VRep, d: usize, seed: u64) -> Result<SimpleFVectors> {
    let far = inc.far_face().ok_or(Error::FarFaceRequired)?;
    if coords.vertices.len() != inc.n() || coords.dim != d {
        return Err(Error::DimensionMismatch("coordinates do not match incidences".into()));
    }
    let sums = inc.column_sums();
    if let Some(v) = (0..inc.n()).find(|&v| !far.contains(v) && sums[v] != d) {
        return Err(Error::NotSimple(format!("vertex {v} lies on {} facets", sums[v])));
    }
    let graph = if is_simple(inc, d) { vertex_edge_graph(inc, d)? } else { edge_graph(inc) };
    let c = generic_ray_objective(coords, far, seed)?;
    let vals: Vec<Rational> = coords.vertices.iter().map(|x| dot(&c, x)).collect();
    let arcs = graph.orient(|i| vals[i].clone());

    let mut out = vec![0usize; inc.n()];
    let mut inn = vec![0usize; inc.n()];
    for &(a, b) in &arcs {
        out[a] += 1;
        inn[b] += 1;
    }
    let mut h = vec![0usize; d + 1];
    for v in (0..inc.n()).filter(|&v| !far.contains(v)) {
        if out[v] > d {
            return Err(Error::Invariant(format!("vertex {v} has out-degree {}", out[v])));
        }
        h[out[v]] += 1;
    }
    let max_far = far.iter().map(|v| inn[v]).max().unwrap_or(0);
    let mut h_inf = vec![0usize; (d + 1).max(max_far + 1)];
    for v in far.iter() {
        h_inf[inn[v]] += 1;
    }

    let f_all = (0..=d).map(|k| (k..=d).map(|i| binomial(i, k) * h[i]).sum()).collect();
    let f_bounded = (0..=d).map(|k| (0..=d).map(|i| binomial(d - i, k) * h[i]).sum()).collect();
    Ok(SimpleFVectors { f_bounded: FVector(f_bounded), f_all: FVector(f_all), h: HVector { h, h_inf }, objective: c })
}

/// `f_k = Σ_{i ≥ k} C(i, k) (h_i − h̄_i)`, the bounded face count when `h`
/// is the out-degree histogram over all vertices of a simple closure.
pub fn f_from_h_difference(h: &[usize], h_inf: &[usize]) -> Vec<i64> {
    let d = h.len().max(h_inf.len());
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0) as i64;
    (0..d).map(|k| (k..d).map(|i| binomial(i, k) as i64 * (at(h, i) - at(h_inf, i))).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn segment_objective() {
        let v = VRep::new(1, vec![vec![rat(0)], vec![rat(1)]], vec![]);
        let far = VertexSet::from_indices(2, [1]);
        let c = generic_ray_objective(&v, &far, 0).unwrap();
        assert!(c[0] > rat(0));
    }

    #[test]
    fn triangle_objective() {
        let v = VRep::new(2, vec![vec![rat(0), rat(0)], vec![rat(0), rat(1)], vec![rat(1), rat(0)]], vec![]);
        let far = VertexSet::from_indices(3, [1, 2]);
        let c = generic_ray_objective(&v, &far, 3).unwrap();
        assert_ne!(c[0], c[1]);
        assert!(c[0] > rat(0) && c[1] > rat(0));
    }

    #[test]
    fn display() {
        assert_eq!(FVector(vec![3, 2, 0]).to_string(), "f = (3, 2, 0)");
        assert_eq!(FVector(vec![3, 2, 0]).total(), 6);
    }
}
