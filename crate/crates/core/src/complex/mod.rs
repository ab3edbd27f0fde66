//! Closure operator, covers, the face tree, and Hasse diagrams of bounded
//! subcomplexes.

mod face_tree;
mod hasse;
mod selective;

pub use face_tree::FaceTree;
pub use hasse::{CanonicalDiagram, HasseDiagram, Node};
pub use selective::{filter_bounded, full_face_lattice, selective_generation};

use crate::polyhedron::IncidenceMatrix;
use crate::set::VertexSet;

/// Result of the closure operator: a face's vertex set, or the improper
/// face when no facet contains the input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Closed {
    Face(VertexSet),
    Whole,
}

/// Intersection of all facets containing `s`. The empty set is closed.
pub fn closure(s: &VertexSet, inc: &IncidenceMatrix) -> Closed {
    if s.is_empty() {
        return Closed::Face(s.clone());
    }
    let mut acc: Option<VertexSet> = None;
    for row in inc.rows() {
        if s.is_subset(row) {
            match &mut acc {
                Some(a) => a.intersect_with(row),
                None => acc = Some(row.clone()),
            }
        }
    }
    acc.map_or(Closed::Whole, Closed::Face)
}

/// Faces covering the closed set `h`: the inclusion-minimal proper
/// closures of `h ∪ {v}`, sorted.
pub fn covers(h: &VertexSet, inc: &IncidenceMatrix) -> Vec<VertexSet> {
    let mut candidates: Vec<VertexSet> = Vec::new();
    let mut s = h.clone();
    for v in 0..inc.n() {
        if h.contains(v) {
            continue;
        }
        s.insert(v);
        if let Closed::Face(g) = closure(&s, inc) {
            if !candidates.contains(&g) {
                candidates.push(g);
            }
        }
        s.remove(v);
    }
    let mut minimal: Vec<VertexSet> =
        candidates.iter().filter(|g| !candidates.iter().any(|o| o != *g && o.is_subset(g))).cloned().collect();
    minimal.sort();
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Square with vertices 0..3 in cyclic order.
    pub(crate) fn square() -> IncidenceMatrix {
        let rows =
            [[0, 1], [1, 2], [2, 3], [3, 0]].iter().map(|r| VertexSet::from_indices(4, r.iter().copied())).collect();
        IncidenceMatrix::new(4, rows).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(4, v.iter().copied())
    }

    #[test]
    fn square_closures() {
        let inc = square();
        assert_eq!(closure(&set(&[0]), &inc), Closed::Face(set(&[0])));
        assert_eq!(closure(&set(&[0, 2]), &inc), Closed::Whole);
        assert_eq!(closure(&set(&[]), &inc), Closed::Face(set(&[])));
    }

    #[test]
    fn square_covers() {
        let inc = square();
        assert_eq!(covers(&set(&[]), &inc), vec![set(&[0]), set(&[1]), set(&[2]), set(&[3])]);
        assert_eq!(covers(&set(&[0]), &inc), vec![set(&[0, 1]), set(&[0, 3])]);
        assert!(covers(&set(&[0, 1]), &inc).is_empty());
    }
}
