use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub vertices: VertexSet,
    /// Dimension of the face; `−1` for the empty face.
    pub rank: i32,
}

/// Cover relation of a set of faces. Node `0` is the empty face; ids are
/// assigned in discovery order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<Node>,
    /// `(lower, upper)` node ids.
    pub arcs: Vec<(usize, usize)>,
    /// The improper face, present only in full face lattices.
    pub top: Option<usize>,
}

/// Id-free form of a diagram: faces as sorted vertex lists with ranks, and
/// arcs between positions in the sorted face list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDiagram {
    pub faces: Vec<(i32, Vec<usize>)>,
    pub arcs: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct JsonFace {
    id: usize,
    rank: i32,
    vertices: Vec<usize>,
}

#[derive(Serialize)]
struct JsonDiagram {
    n_vertices: usize,
    far_face: Vec<usize>,
    faces: Vec<JsonFace>,
    arcs: Vec<[usize; 2]>,
    f_vector: Vec<usize>,
}

impl HasseDiagram {
    /// A diagram holding only the empty face over `n` vertices.
    pub fn with_root(n: usize) -> Self {
        Self { nodes: vec![Node { vertices: VertexSet::empty(n), rank: -1 }], arcs: Vec::new(), top: None }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn n_vertices(&self) -> usize {
        self.nodes.first().map_or(0, |n| n.vertices.capacity())
    }

    pub fn push(&mut self, vertices: VertexSet, rank: i32) -> usize {
        self.nodes.push(Node { vertices, rank });
        self.nodes.len() - 1
    }

    /// Counts of proper nonempty faces by dimension, up to the largest
    /// dimension present.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for (id, n) in self.nodes.iter().enumerate() {
            if n.rank < 0 || Some(id) == self.top {
                continue;
            }
            let r = n.rank as usize;
            if f.len() <= r {
                f.resize(r + 1, 0);
            }
            f[r] += 1;
        }
        f
    }

    /// Nodes of rank at most `k` and the arcs among them.
    pub fn restrict_rank(&self, k: i32) -> HasseDiagram {
        let keep: Vec<bool> = self.nodes.iter().map(|n| n.rank <= k).collect();
        self.induced(&keep)
    }

    /// Sub-diagram on the nodes flagged in `keep`, renumbered in order.
    pub(crate) fn induced(&self, keep: &[bool]) -> HasseDiagram {
        let mut map = vec![usize::MAX; self.nodes.len()];
        let mut nodes = Vec::new();
        for (i, n) in self.nodes.iter().enumerate() {
            if keep[i] {
                map[i] = nodes.len();
                nodes.push(n.clone());
            }
        }
        let arcs = self.arcs.iter().filter(|(a, b)| keep[*a] && keep[*b]).map(|&(a, b)| (map[a], map[b])).collect();
        let top = self.top.filter(|&t| keep[t]).map(|t| map[t]);
        HasseDiagram { nodes, arcs, top }
    }

    /// Faces sorted by `(rank, vertices)` and the arcs renumbered to match.
    pub fn canonical(&self) -> CanonicalDiagram {
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        let key = |i: usize| (self.nodes[i].rank, self.nodes[i].vertices.to_vec());
        order.sort_by_cached_key(|&i| key(i));
        let mut pos = vec![0; self.nodes.len()];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        let faces = order.iter().map(|&i| key(i)).collect();
        let mut arcs: Vec<(usize, usize)> = self.arcs.iter().map(|&(a, b)| (pos[a], pos[b])).collect();
        arcs.sort_unstable();
        arcs.dedup();
        CanonicalDiagram { faces, arcs }
    }

    /// Checks the structural invariants: distinct vertex sets, arcs joining
    /// consecutive ranks along strict inclusions, and an in-arc for every
    /// node but the root.
    pub fn validate(&self) -> Result<()> {
        let c = self.canonical();
        if c.faces.windows(2).any(|w| w[0].1 == w[1].1) {
            return Err(Error::Invariant("repeated face".into()));
        }
        let mut has_in = vec![false; self.nodes.len()];
        for &(a, b) in &self.arcs {
            let (x, y) = (&self.nodes[a], &self.nodes[b]);
            if x.rank + 1 != y.rank || !x.vertices.is_subset(&y.vertices) || x.vertices == y.vertices {
                return Err(Error::Invariant(format!("bad arc ({a}, {b})")));
            }
            has_in[b] = true;
        }
        if let Some(i) = (1..self.nodes.len()).find(|&i| !has_in[i]) {
            return Err(Error::Invariant(format!("node {i} has no lower cover")));
        }
        Ok(())
    }

    /// JSON form with faces sorted by `(rank, vertices)` and ids equal to
    /// sorted positions.
    pub fn to_json(&self, far_face: Option<&VertexSet>) -> String {
        let c = self.canonical();
        let doc = JsonDiagram {
            n_vertices: self.n_vertices(),
            far_face: far_face.map(VertexSet::to_vec).unwrap_or_default(),
            faces: c
                .faces
                .into_iter()
                .enumerate()
                .map(|(id, (rank, vertices))| JsonFace { id, rank, vertices })
                .collect(),
            arcs: c.arcs.into_iter().map(|(a, b)| [a, b]).collect(),
            f_vector: self.f_vector(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("diagram serializes");
        s.push('\n');
        s
    }
}
