use super::{closure, Closed};
use crate::polyhedron::IncidenceMatrix;
use crate::set::VertexSet;

#[derive(Clone, Debug, Default)]
struct TrieNode {
    /// `(vertex, child)` sorted by vertex.
    children: Vec<(usize, usize)>,
    face: Option<usize>,
}

/// Trie over canonical generator sequences of faces.
///
/// The canonical sequence of a face `F` starts empty and repeatedly appends
/// the smallest vertex of `F` outside the closure of the sequence so far,
/// until that closure is `F`. The empty face sits at the root.
#[derive(Clone, Debug)]
pub struct FaceTree {
    nodes: Vec<TrieNode>,
    faces: usize,
}

impl Default for FaceTree {
    fn default() -> Self {
        Self::new()
    }
}

impl FaceTree {
    pub fn new() -> Self {
        Self { nodes: vec![TrieNode::default()], faces: 0 }
    }

    /// Number of stored faces.
    pub fn len(&self) -> usize {
        self.faces
    }

    pub fn is_empty(&self) -> bool {
        self.faces == 0
    }

    /// Number of trie nodes, including the root.
    pub fn trie_size(&self) -> usize {
        self.nodes.len()
    }

    /// Walks the canonical path of `face`, calling `step` with the trie node
    /// and next generator; `step` returns the child to continue from.
    fn walk(
        &mut self,
        face: &VertexSet,
        inc: &IncidenceMatrix,
        mut step: impl FnMut(&mut Self, usize, usize) -> Option<usize>,
    ) -> Option<usize> {
        let mut node = 0;
        let mut gens = VertexSet::empty(face.capacity());
        let mut current = VertexSet::empty(face.capacity());
        while current != *face {
            let v = face.first_not_in(&current)?;
            gens.insert(v);
            current = match closure(&gens, inc) {
                Closed::Face(c) if c.is_subset(face) => c,
                _ => return None,
            };
            node = step(self, node, v)?;
        }
        Some(node)
    }

    /// Id of `face` if stored.
    pub fn find(&mut self, face: &VertexSet, inc: &IncidenceMatrix) -> Option<usize> {
        let node = self.walk(face, inc, |t, node, v| {
            let ch = &t.nodes[node].children;
            ch.binary_search_by_key(&v, |c| c.0).ok().map(|k| ch[k].1)
        })?;
        self.nodes[node].face
    }

    /// Returns the id of `face`, storing it with the next free id if absent.
    /// Ids count up from 0 in insertion order.
    ///
    /// # Panics
    ///
    /// If `face` is not closed with respect to `inc`.
    pub fn insert_or_find(&mut self, face: &VertexSet, inc: &IncidenceMatrix) -> (usize, bool) {
        let node = self
            .walk(face, inc, |t, node, v| {
                let pos = t.nodes[node].children.binary_search_by_key(&v, |c| c.0);
                Some(match pos {
                    Ok(k) => t.nodes[node].children[k].1,
                    Err(k) => {
                        let id = t.nodes.len();
                        t.nodes.push(TrieNode::default());
                        t.nodes[node].children.insert(k, (v, id));
                        id
                    }
                })
            })
            .expect("face tree input must be a closed set");
        match self.nodes[node].face {
            Some(id) => (id, false),
            None => {
                let id = self.faces;
                self.nodes[node].face = Some(id);
                self.faces += 1;
                (id, true)
            }
        }
    }
}
