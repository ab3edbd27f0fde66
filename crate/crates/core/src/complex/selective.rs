use std::collections::VecDeque;

use super::{covers, FaceTree, HasseDiagram};
use crate::error::{Error, Result};
use crate::polyhedron::IncidenceMatrix;
use crate::set::VertexSet;

/// Breadth-first cover generation from the empty face. Faces rejected by
/// `keep` are neither stored nor expanded; faces of rank `max_dim` are not
/// expanded.
fn generate(inc: &IncidenceMatrix, max_dim: Option<usize>, keep: impl Fn(&VertexSet) -> bool) -> HasseDiagram {
    let mut hd = HasseDiagram::with_root(inc.n());
    let mut tree = FaceTree::new();
    tree.insert_or_find(&hd.nodes[0].vertices, inc);
    let mut queue = VecDeque::from([0usize]);
    while let Some(h) = queue.pop_front() {
        let rank = hd.nodes[h].rank;
        if max_dim.is_some_and(|k| rank + 1 > k as i32) {
            continue;
        }
        for g in covers(&hd.nodes[h].vertices, inc) {
            if !keep(&g) {
                continue;
            }
            let (id, fresh) = tree.insert_or_find(&g, inc);
            if fresh {
                let pushed = hd.push(g, rank + 1);
                debug_assert_eq!(pushed, id);
                queue.push_back(id);
            }
            hd.arcs.push((h, id));
        }
    }
    hd
}

/// Hasse diagram of the bounded subcomplex, generated from the incidences
/// of the projective closure: exactly the faces disjoint from the far face.
pub fn selective_generation(inc: &IncidenceMatrix, max_dim: Option<usize>) -> Result<HasseDiagram> {
    let far = inc.far_face().ok_or(Error::FarFaceRequired)?;
    Ok(generate(inc, max_dim, |g| g.is_disjoint(far)))
}

/// The complete face lattice of a polytope, with the improper face as top.
pub fn full_face_lattice(inc: &IncidenceMatrix) -> HasseDiagram {
    let mut hd = generate(inc, None, |_| true);
    let mut has_up = vec![false; hd.len()];
    for &(a, _) in &hd.arcs {
        has_up[a] = true;
    }
    let rank = hd.nodes.iter().map(|n| n.rank).max().unwrap_or(-1) + 1;
    let top = hd.push(VertexSet::full(inc.n()), rank);
    for (i, up) in has_up.into_iter().enumerate() {
        if !up {
            hd.arcs.push((i, top));
        }
    }
    hd.top = Some(top);
    hd
}

/// Drops the top node and every face meeting `far`.
pub fn filter_bounded(hd: &HasseDiagram, far: &VertexSet) -> HasseDiagram {
    let keep: Vec<bool> =
        hd.nodes.iter().enumerate().map(|(i, n)| Some(i) != hd.top && n.vertices.is_disjoint(far)).collect();
    hd.induced(&keep)
}
