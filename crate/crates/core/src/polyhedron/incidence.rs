use num_traits::Zero;

use super::{ClosureResult, HRep, VRep};
use crate::error::{Error, Result};
use crate::exact::{dot, Echelon, Rational};
use crate::set::VertexSet;

/// Facet × vertex incidences, optionally with the far face of a projective
/// closure attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    rows: Vec<VertexSet>,
    far_face: Option<VertexSet>,
    /// Input row each facet came from, when built from an H-representation.
    source_rows: Vec<usize>,
}

impl IncidenceMatrix {
    /// Builds the matrix from facet rows given as vertex sets over `0..n`.
    pub fn new(n: usize, rows: Vec<VertexSet>) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.capacity() != n {
                return Err(Error::DimensionMismatch(format!("facet {i} has capacity {}, expected {n}", r.capacity())));
            }
            if r.is_empty() {
                return Err(Error::Invalid(format!("facet {i} contains no vertex")));
            }
        }
        let source_rows = (0..rows.len()).collect();
        Ok(Self { n, rows, far_face: None, source_rows })
    }

    pub fn with_far_face(mut self, far: VertexSet) -> Result<Self> {
        if far.capacity() != self.n {
            return Err(Error::DimensionMismatch("far face capacity".into()));
        }
        self.far_face = Some(far);
        Ok(self)
    }

    pub fn without_far_face(mut self) -> Self {
        self.far_face = None;
        self
    }

    /// Facet count.
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum()
    }

    pub fn get(&self, facet: usize, vertex: usize) -> bool {
        self.rows[facet].contains(vertex)
    }

    pub fn row(&self, facet: usize) -> &VertexSet {
        &self.rows[facet]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn far_face(&self) -> Option<&VertexSet> {
        self.far_face.as_ref()
    }

    pub fn source_rows(&self) -> &[usize] {
        &self.source_rows
    }

    /// Facets containing vertex `v`, as a set over `0..m`.
    pub fn facets_of(&self, v: usize) -> VertexSet {
        VertexSet::from_indices(self.m(), (0..self.m()).filter(|&f| self.rows[f].contains(v)))
    }

    pub fn columns(&self) -> Vec<VertexSet> {
        let mut cols = vec![VertexSet::empty(self.m()); self.n];
        for (f, r) in self.rows.iter().enumerate() {
            for v in r.iter() {
                cols[v].insert(f);
            }
        }
        cols
    }

    pub fn column_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.n];
        for r in &self.rows {
            for v in r.iter() {
                sums[v] += 1;
            }
        }
        sums
    }

    /// Incidences of `P` read off those of its closure: far vertices are
    /// dropped and facets contained in the far face are removed.
    ///
    /// Returns the new matrix (without far face) and, for each of its
    /// vertices, the index of the corresponding vertex of the closure.
    pub fn restrict_to_polyhedron(&self) -> Result<(IncidenceMatrix, Vec<usize>)> {
        let far = self.far_face.as_ref().ok_or(Error::FarFaceRequired)?;
        let keep: Vec<usize> = (0..self.n).filter(|&v| !far.contains(v)).collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (k, &v) in keep.iter().enumerate() {
            new_index[v] = k;
        }
        let mut rows = Vec::new();
        let mut source_rows = Vec::new();
        for (f, r) in self.rows.iter().enumerate() {
            if r.is_subset(far) {
                continue;
            }
            rows.push(VertexSet::from_indices(
                keep.len(),
                r.iter().filter(|&v| !far.contains(v)).map(|v| new_index[v]),
            ));
            source_rows.push(self.source_rows[f]);
        }
        Ok((IncidenceMatrix { n: keep.len(), rows, far_face: None, source_rows }, keep))
    }
}

/// Vertex-facet incidences of `h` at the vertices of `v`.
///
/// Rows that do not define facets (fewer incidences than a facet needs, or
/// a lower-dimensional incident face) are dropped, as are repeated
/// descriptions of the same facet. Rays of `v` are taken into account for
/// the facet test but do not appear as columns.
pub fn compute_incidences(h: &HRep, v: &VRep) -> Result<IncidenceMatrix> {
    let d = h.dim();
    if v.dim != d {
        return Err(Error::DimensionMismatch(format!("V-rep dim {} vs H-rep dim {d}", v.dim)));
    }
    let n = v.vertices.len();
    let mut rows = Vec::new();
    let mut ray_rows: Vec<VertexSet> = Vec::new();
    let mut source_rows = Vec::new();
    for (i, row) in h.rows().iter().enumerate() {
        let mut set = VertexSet::empty(n);
        for (k, x) in v.vertices.iter().enumerate() {
            let s = row.slack(x);
            if s < Rational::zero() {
                return Err(Error::PointOutside { row: i });
            }
            if s.is_zero() {
                set.insert(k);
            }
        }
        let mut rays = VertexSet::empty(v.rays.len());
        for (k, r) in v.rays.iter().enumerate() {
            let s = dot(&row.a, r);
            if s > Rational::zero() {
                return Err(Error::PointOutside { row: i });
            }
            if s.is_zero() {
                rays.insert(k);
            }
        }
        if set.is_empty() || set.len() + rays.len() < d {
            continue;
        }
        if rows.iter().zip(&ray_rows).any(|(r, q)| *r == set && *q == rays) {
            continue;
        }
        if face_dimension(v, &set, &rays) + 1 != d {
            continue;
        }
        rows.push(set);
        ray_rows.push(rays);
        source_rows.push(i);
    }
    Ok(IncidenceMatrix { n, rows, far_face: None, source_rows })
}

/// Dimension of the face spanned by the given vertices and rays.
fn face_dimension(v: &VRep, verts: &VertexSet, rays: &VertexSet) -> usize {
    let mut ech = Echelon::new();
    let mut it = verts.iter();
    let Some(first) = it.next() else { return 0 };
    let base = &v.vertices[first];
    for k in it {
        let diff: Vec<Rational> = v.vertices[k].iter().zip(base).map(|(a, b)| a - b).collect();
        ech.insert(&diff);
    }
    for k in rays.iter() {
        ech.insert(&v.rays[k]);
    }
    ech.rank()
}

/// Indices of the vertices of the closure lying on `Σ x_i = 1`.
pub fn far_face_vertices(c: &ClosureResult, v: &VRep) -> VertexSet {
    let far = &c.closure.rows()[c.far_inequality];
    VertexSet::from_indices(
        v.vertices.len(),
        v.vertices.iter().enumerate().filter(|(_, x)| far.slack(x).is_zero()).map(|(k, _)| k),
    )
}

/// True iff every vertex lies on exactly `d` facets.
pub fn is_simple(inc: &IncidenceMatrix, d: usize) -> bool {
    inc.column_sums().iter().all(|&s| s == d)
}

/// Undirected simple graph on `0..nodes` with sorted edges `(u, v)`, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(nodes: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges.retain(|e| e.0 != e.1);
        Self { nodes, edges }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Orients every edge from the smaller to the larger `key`. Keys must be
    /// distinct on the endpoints of each edge.
    pub fn orient<K: Ord>(&self, key: impl Fn(usize) -> K) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| if key(u) < key(v) { (u, v) } else { (v, u) }).collect()
    }
}

/// Vertex-edge graph of a simple polytope: two vertices are adjacent iff
/// they share `d − 1` facets.
pub fn vertex_edge_graph(inc: &IncidenceMatrix, d: usize) -> Result<Graph> {
    if !is_simple(inc, d) {
        return Err(Error::NotSimple("vertex_edge_graph needs a simple polytope".into()));
    }
    let cols = inc.columns();
    let mut edges = Vec::new();
    for u in 0..inc.n() {
        for v in u + 1..inc.n() {
            if cols[u].intersection_count(&cols[v]) + 1 == d {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(inc.n(), edges))
}
