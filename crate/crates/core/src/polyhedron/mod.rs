//! Inequality and vertex/ray descriptions, the projective closure, vertex
//! enumeration and vertex-facet incidences.

mod closure;
mod enumerate;
mod incidence;
mod reverse_search;

pub use closure::{projective_closure, ClosureResult, Pulled};
pub use enumerate::{enumerate_vertices, enumerate_vertices_bruteforce, DEFAULT_BRUTE_FORCE_BUDGET};
pub use incidence::{compute_incidences, far_face_vertices, is_simple, vertex_edge_graph, Graph, IncidenceMatrix};
pub use reverse_search::{bounded_generic_objective, reverse_search_vertices, ReverseSearchOutput};

use crate::error::{Error, Result};
use crate::exact::{dot, normalize_direction, Matrix, Rational};

/// One row `a · x ≤ b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub a: Vec<Rational>,
    pub b: Rational,
}

impl Inequality {
    pub fn new(a: Vec<Rational>, b: Rational) -> Self {
        Self { a, b }
    }

    /// `b − a · x`; nonnegative iff `x` satisfies the row.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        &self.b - dot(&self.a, x)
    }
}

/// Polyhedron `{x ∈ ℚ^d : a_i · x ≤ b_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    dim: usize,
    rows: Vec<Inequality>,
}

impl HRep {
    pub fn new(dim: usize, rows: Vec<Inequality>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("dimension must be at least 1".into()));
        }
        if rows.is_empty() {
            return Err(Error::Invalid("at least one inequality required".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.a.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "row {i} has {} coefficients, expected {dim}",
                rows[i].a.len()
            )));
        }
        Ok(Self { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Inequality] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.dim, self.rows.iter().map(|r| r.a.clone())).unwrap()
    }

    pub fn rhs(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r.b.clone()).collect()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.rows.iter().all(|r| dot(&r.a, x) <= r.b)
    }

    /// True iff the coefficient matrix has full column rank, i.e. the
    /// polyhedron (when nonempty) contains no line.
    pub fn has_full_rank(&self) -> bool {
        self.matrix().rank() == self.dim
    }
}

/// Vertices and rays of a pointed polyhedron. Vertices are sorted and
/// distinct; rays are scaled so their first nonzero entry is ±1, sorted and
/// distinct.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<Vec<Rational>>,
    pub rays: Vec<Vec<Rational>>,
}

impl VRep {
    pub fn new(dim: usize, mut vertices: Vec<Vec<Rational>>, rays: Vec<Vec<Rational>>) -> Self {
        vertices.sort();
        vertices.dedup();
        let mut rays: Vec<Vec<Rational>> = rays.iter().map(|r| normalize_direction(r)).collect();
        rays.sort();
        rays.dedup();
        Self { dim, vertices, rays }
    }
}
