//! Avis–Fukuda reverse search over the vertices of a simple polyhedron.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use super::{Graph, HRep, VRep};
use crate::error::{Error, Result};
use crate::exact::lp::active_rows;
use crate::exact::{dot, lp_solve, normalize_direction, Echelon, LpStatus, Matrix, Rational, Sense};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverseSearchOutput {
    pub vrep: VRep,
    /// Vertex-edge graph over `vrep.vertices`.
    pub graph: Graph,
    /// `(vertex, direction)` for every unbounded edge found by the ratio test.
    pub unbounded_edges: Vec<(usize, Vec<Rational>)>,
}

/// A vertex together with its `d` tight rows.
struct Basis {
    point: Vec<Rational>,
    rows: Vec<usize>,
    /// Column `j` is the edge direction leaving row `rows[j]`.
    directions: Vec<Vec<Rational>>,
}

enum Step {
    Vertex(Vec<usize>, Vec<Rational>),
    Unbounded,
}

struct Walker<'a> {
    h: &'a HRep,
    a: Matrix,
    b: Vec<Rational>,
    c: &'a [Rational],
}

impl Walker<'_> {
    fn basis(&self, point: Vec<Rational>, rows: Vec<usize>) -> Result<Basis> {
        let d = self.h.dim();
        let m = Matrix::from_rows(d, rows.iter().map(|&i| self.a.row(i).to_vec()))?;
        let inv = m.inverse().ok_or_else(|| Error::NotSimple("singular basis".into()))?;
        // A_B δ_j = −e_j
        let directions = (0..d).map(|j| (0..d).map(|r| -inv[(r, j)].clone()).collect()).collect();
        Ok(Basis { point, rows, directions })
    }

    fn step(&self, from: &Basis, j: usize) -> Result<Step> {
        let dir = &from.directions[j];
        let mut best: Option<(Rational, usize)> = None;
        let mut tie = false;
        for i in 0..self.a.rows() {
            if from.rows.contains(&i) {
                continue;
            }
            let rate = dot(self.a.row(i), dir);
            if !rate.is_positive() {
                continue;
            }
            let t = (&self.b[i] - dot(self.a.row(i), &from.point)) / rate;
            if t.is_zero() {
                return Err(Error::NotSimple("degenerate vertex".into()));
            }
            match &best {
                Some((bt, _)) if *bt < t => {}
                Some((bt, _)) if *bt == t => tie = true,
                _ => {
                    best = Some((t, i));
                    tie = false;
                }
            }
        }
        let Some((t, i)) = best else { return Ok(Step::Unbounded) };
        if tie {
            return Err(Error::NotSimple("degenerate vertex".into()));
        }
        let point: Vec<Rational> = from.point.iter().zip(dir).map(|(x, r)| x + &t * r).collect();
        let mut rows = from.rows.clone();
        rows[j] = i;
        rows.sort_unstable();
        Ok(Step::Vertex(rows, point))
    }

    /// Local search: the improving edge leaving the smallest tight row.
    fn parent(&self, v: &Basis) -> Result<Option<Vec<usize>>> {
        let mut improving = None;
        for (j, dir) in v.directions.iter().enumerate() {
            let gain = dot(self.c, dir);
            if gain.is_zero() {
                return Err(Error::ObjectiveNotGeneric);
            }
            if gain.is_positive() && improving.is_none() {
                improving = Some(j);
            }
        }
        let Some(j) = improving else { return Ok(None) };
        match self.step(v, j)? {
            Step::Vertex(rows, _) => Ok(Some(rows)),
            Step::Unbounded => Err(Error::ObjectiveUnbounded),
        }
    }
}

/// Enumerates the vertices of the simple pointed polyhedron `h` by reverse
/// search, rooted at the vertex maximizing `c`.
///
/// `c` must be bounded above on `h` and generic: no edge may be orthogonal
/// to it.
pub fn reverse_search_vertices(h: &HRep, c: &[Rational]) -> Result<ReverseSearchOutput> {
    let d = h.dim();
    if c.len() != d {
        return Err(Error::DimensionMismatch(format!("objective has {} entries, expected {d}", c.len())));
    }
    let walker = Walker { h, a: h.matrix(), b: h.rhs(), c };
    let lp = lp_solve(&walker.a, &walker.b, c, Sense::Max)?;
    let root_point = match lp.status {
        LpStatus::Optimal => lp.point.expect("optimal point"),
        LpStatus::Infeasible => return Err(Error::EmptyPolyhedron),
        LpStatus::Unbounded => return Err(Error::ObjectiveUnbounded),
    };
    let tight = active_rows(&walker.a, &walker.b, &root_point);
    if tight.len() > d {
        return Err(Error::NotSimple(format!("root vertex lies on {} rows", tight.len())));
    }
    if tight.len() < d {
        return Err(Error::NotPointed);
    }
    let root = walker.basis(root_point, tight)?;

    let mut found: Vec<Vec<Rational>> = Vec::new();
    let mut edges: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut unbounded: Vec<(Vec<usize>, Vec<Rational>)> = Vec::new();
    let mut index_of: HashMap<Vec<usize>, usize> = HashMap::new();

    // each stack frame is a vertex and the next edge to try
    let mut stack: Vec<(Basis, usize)> = vec![(root, 0)];
    index_of.insert(stack[0].0.rows.clone(), 0);
    found.push(stack[0].0.point.clone());
    walker.parent(&stack[0].0)?;

    while let Some((v, j)) = stack.pop() {
        if j == d {
            continue;
        }
        let step = walker.step(&v, j)?;
        let child = match step {
            Step::Unbounded => {
                unbounded.push((v.rows.clone(), normalize_direction(&v.directions[j])));
                None
            }
            Step::Vertex(rows, point) => {
                if rows > v.rows {
                    edges.push((v.rows.clone(), rows.clone()));
                }
                if rows < v.rows {
                    edges.push((rows.clone(), v.rows.clone()));
                }
                let w = walker.basis(point, rows)?;
                if walker.parent(&w)?.as_ref() == Some(&v.rows) {
                    Some(w)
                } else {
                    None
                }
            }
        };
        stack.push((v, j + 1));
        if let Some(w) = child {
            if index_of.contains_key(&w.rows) {
                return Err(Error::Invariant("reverse search revisited a vertex".into()));
            }
            index_of.insert(w.rows.clone(), found.len());
            found.push(w.point.clone());
            stack.push((w, 0));
        }
    }

    let vrep_rays = extreme_rays(h, unbounded.iter().map(|(_, r)| r.clone()).collect());
    let vrep = VRep::new(d, found.clone(), vrep_rays);
    // renumber into the sorted order of vrep
    let sorted: HashMap<&Vec<Rational>, usize> = vrep.vertices.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let to_sorted = |rows: &Vec<usize>| sorted[&found[index_of[rows]]];
    let graph = Graph::new(found.len(), edges.iter().map(|(u, w)| (to_sorted(u), to_sorted(w))).collect());
    let mut unbounded_edges: Vec<(usize, Vec<Rational>)> =
        unbounded.iter().map(|(rows, r)| (to_sorted(rows), r.clone())).collect();
    unbounded_edges.sort();
    Ok(ReverseSearchOutput { vrep, graph, unbounded_edges })
}

/// Keeps the directions spanning extreme rays of the recession cone of `h`.
fn extreme_rays(h: &HRep, dirs: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let d = h.dim();
    dirs.into_iter()
        .filter(|r| {
            let mut ech = Echelon::new();
            for row in h.rows() {
                if dot(&row.a, r).is_zero() {
                    ech.insert(&row.a);
                }
            }
            ech.rank() + 1 == d
        })
        .collect()
}

/// An objective with a unique maximum on the simple polyhedron `h`, built
/// as a positive combination of the rows tight at an LP vertex. Different
/// `attempt` values give different weights; callers retry when reverse
/// search reports a non-generic objective.
pub fn bounded_generic_objective(h: &HRep, attempt: u32) -> Result<Vec<Rational>> {
    let d = h.dim();
    let a = h.matrix();
    let b = h.rhs();
    let lp = lp_solve(&a, &b, &vec![Rational::zero(); d], Sense::Max)?;
    let x = match lp.status {
        LpStatus::Optimal => lp.point.expect("optimal point"),
        _ => return Err(Error::EmptyPolyhedron),
    };
    let mut ech = Echelon::new();
    let mut basis = Vec::new();
    for i in active_rows(&a, &b, &x) {
        if ech.insert(a.row(i)) {
            basis.push(i);
        }
    }
    if basis.len() < d {
        return Err(Error::NotPointed);
    }
    // weights q^k with q = 1 + 1/(attempt + 7)
    let q = Rational::one() + Rational::new(1.into(), (attempt as i64 + 7).into());
    let mut w = Rational::one();
    let mut c = vec![Rational::zero(); d];
    for &i in &basis {
        for (cj, aj) in c.iter_mut().zip(a.row(i)) {
            *cj += &w * aj;
        }
        w *= &q;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::polyhedron::{enumerate_vertices_bruteforce, Inequality};

    fn ineq(a: &[i64], b: i64) -> Inequality {
        Inequality::new(a.iter().map(|&x| rat(x)).collect(), rat(b))
    }

    fn square() -> HRep {
        HRep::new(2, vec![ineq(&[-1, 0], 0), ineq(&[1, 0], 1), ineq(&[0, -1], 0), ineq(&[0, 1], 1)]).unwrap()
    }

    #[test]
    fn square_search() {
        let out = reverse_search_vertices(&square(), &[rat(1), rat(2)]).unwrap();
        assert_eq!(out.vrep, enumerate_vertices_bruteforce(&square(), 1000).unwrap());
        assert_eq!(out.graph.edges, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(out.unbounded_edges.is_empty());
    }

    #[test]
    fn quadrant_edges_unbounded() {
        let h = HRep::new(2, vec![ineq(&[-1, 0], 0), ineq(&[0, -1], 0)]).unwrap();
        let out = reverse_search_vertices(&h, &[rat(-1), rat(-2)]).unwrap();
        assert_eq!(out.vrep.vertices, vec![vec![rat(0), rat(0)]]);
        assert_eq!(out.unbounded_edges.len(), 2);
        assert_eq!(out.vrep.rays.len(), 2);
    }

    #[test]
    fn errors() {
        let h = square();
        assert_eq!(reverse_search_vertices(&h, &[rat(1), rat(0)]).unwrap_err(), Error::ObjectiveNotGeneric);
        let q = HRep::new(2, vec![ineq(&[-1, 0], 0), ineq(&[0, -1], 0)]).unwrap();
        assert_eq!(reverse_search_vertices(&q, &[rat(1), rat(1)]).unwrap_err(), Error::ObjectiveUnbounded);
    }

    #[test]
    fn generic_objective_for_square() {
        let c = bounded_generic_objective(&square(), 0).unwrap();
        let out = reverse_search_vertices(&square(), &c).unwrap();
        assert_eq!(out.vrep.vertices.len(), 4);
    }
}
