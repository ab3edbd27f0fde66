//! Bounded faces from the incidences of `P` alone, recognized by nonzero
//! Möbius numbers in the poset of vertex sets of faces.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::complex::{covers, FaceTree, HasseDiagram};
use crate::error::{Error, Result};
use crate::polyhedron::IncidenceMatrix;
use crate::set::VertexSet;

/// Default cap on the number of vertex poset elements.
pub const DEFAULT_POSET_BUDGET: usize = 1_000_000;

/// Vertex sets of the proper faces of `P` ordered by inclusion, with their
/// Möbius numbers and an artificial top element.
#[derive(Clone, Debug)]
pub struct VertexPoset {
    /// Sorted by cardinality, then lexicographically; the first is `∅`.
    pub elements: Vec<VertexSet>,
    pub mu: Vec<i128>,
    /// Möbius number of the artificial top.
    pub top_mu: i128,
}

impl VertexPoset {
    /// Number of elements including `∅`, excluding the top.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mu_of(&self, s: &VertexSet) -> Option<i128> {
        self.elements.iter().position(|e| e == s).map(|i| self.mu[i])
    }
}

/// All nonempty intersections of facet rows, plus `∅`, with Möbius numbers.
pub fn vertex_poset(inc: &IncidenceMatrix, budget: usize) -> Result<VertexPoset> {
    let mut seen: HashMap<VertexSet, ()> = HashMap::new();
    let mut frontier: Vec<VertexSet> = Vec::new();
    for r in inc.rows() {
        if seen.insert(r.clone(), ()).is_none() {
            frontier.push(r.clone());
        }
    }
    while let Some(e) = frontier.pop() {
        for r in inc.rows() {
            let x = e.intersection(r);
            if x.is_empty() || seen.contains_key(&x) {
                continue;
            }
            if seen.len() + 1 > budget {
                return Err(Error::Budget(format!("vertex poset exceeds {budget} elements")));
            }
            seen.insert(x.clone(), ());
            frontier.push(x);
        }
    }
    let mut elements: Vec<VertexSet> = seen.into_keys().collect();
    elements.push(VertexSet::empty(inc.n()));
    elements.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let mut mu = vec![0i128; elements.len()];
    mu[0] = 1;
    for i in 1..elements.len() {
        let s: i128 = (0..i)
            .filter(|&j| elements[j].len() < elements[i].len() && elements[j].is_subset(&elements[i]))
            .map(|j| mu[j])
            .sum();
        mu[i] = -s;
    }
    let top_mu = -mu.iter().sum::<i128>();
    Ok(VertexPoset { elements, mu, top_mu })
}

/// Elements with nonzero Möbius number: the vertex sets of bounded faces.
pub fn moebius_oracle_filter(vp: &VertexPoset) -> Vec<VertexSet> {
    vp.elements.iter().zip(&vp.mu).filter(|(_, &m)| m != 0).map(|(e, _)| e.clone()).collect()
}

/// Order in which Möbius generation processes poset elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MoebiusOrder {
    /// By cardinality: every strict subset is processed first, and the
    /// Möbius sum runs over all bounded elements found so far.
    #[default]
    Cardinality,
    /// Breadth-first with a FIFO queue, Möbius sums taken over the
    /// elements propagated from generating parents.
    Fifo,
}

/// Hasse diagram of the bounded subcomplex from the incidences of `P`,
/// without far-face information.
pub fn moebius_generation(inc: &IncidenceMatrix, max_dim: Option<usize>) -> HasseDiagram {
    moebius_generation_with(inc, max_dim, MoebiusOrder::Cardinality)
}

pub fn moebius_generation_with(inc: &IncidenceMatrix, max_dim: Option<usize>, order: MoebiusOrder) -> HasseDiagram {
    match order {
        MoebiusOrder::Cardinality => by_cardinality(inc, max_dim),
        MoebiusOrder::Fifo => by_fifo(inc, max_dim),
    }
}

fn expands(rank: i32, max_dim: Option<usize>) -> bool {
    max_dim.is_none_or(|k| rank < k as i32)
}

fn by_cardinality(inc: &IncidenceMatrix, max_dim: Option<usize>) -> HasseDiagram {
    let mut hd = HasseDiagram::with_root(inc.n());
    let mut mu: Vec<i128> = vec![1];
    let mut pending: BTreeMap<(usize, VertexSet), Vec<usize>> = BTreeMap::new();
    let expand = |hd: &HasseDiagram, id: usize, pending: &mut BTreeMap<(usize, VertexSet), Vec<usize>>| {
        if expands(hd.nodes[id].rank, max_dim) {
            for g in covers(&hd.nodes[id].vertices, inc) {
                pending.entry((g.len(), g)).or_default().push(id);
            }
        }
    };
    expand(&hd, 0, &mut pending);
    while let Some(((_, g), parents)) = pending.pop_first() {
        let below: i128 = hd
            .nodes
            .iter()
            .zip(&mu)
            .filter(|(n, _)| n.vertices.len() < g.len() && n.vertices.is_subset(&g))
            .map(|(_, m)| m)
            .sum();
        if below == 0 {
            continue;
        }
        let rank = hd.nodes[parents[0]].rank + 1;
        let id = hd.push(g, rank);
        mu.push(-below);
        hd.arcs.extend(parents.into_iter().map(|p| (p, id)));
        expand(&hd, id, &mut pending);
    }
    hd
}

struct Element {
    vertices: VertexSet,
    rank: i32,
    below: HashMap<VertexSet, i128>,
    parents: Vec<usize>,
}

fn by_fifo(inc: &IncidenceMatrix, max_dim: Option<usize>) -> HasseDiagram {
    let mut tree = FaceTree::new();
    let root = VertexSet::empty(inc.n());
    tree.insert_or_find(&root, inc);
    let mut elems = vec![Element { vertices: root, rank: -1, below: HashMap::new(), parents: Vec::new() }];
    let mut mu: Vec<Option<i128>> = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(h) = queue.pop_front() {
        let m = if h == 0 { 1 } else { -elems[h].below.values().sum::<i128>() };
        mu[h] = Some(m);
        if m == 0 || !expands(elems[h].rank, max_dim) {
            continue;
        }
        for g in covers(&elems[h].vertices, inc) {
            let (id, fresh) = tree.insert_or_find(&g, inc);
            if fresh {
                elems.push(Element {
                    vertices: g,
                    rank: elems[h].rank + 1,
                    below: HashMap::new(),
                    parents: Vec::new(),
                });
                mu.push(None);
                queue.push_back(id);
            }
            let inherited: Vec<(VertexSet, i128)> = elems[h].below.iter().map(|(k, v)| (k.clone(), *v)).collect();
            let key = elems[h].vertices.clone();
            let target = &mut elems[id];
            target.below.extend(inherited);
            target.below.insert(key, m);
            target.parents.push(h);
        }
    }
    // emit bounded elements in discovery order
    let mut hd = HasseDiagram::with_root(inc.n());
    let mut map = vec![usize::MAX; elems.len()];
    map[0] = 0;
    for (i, e) in elems.iter().enumerate().skip(1) {
        if mu[i].is_some_and(|m| m != 0) {
            map[i] = hd.push(e.vertices.clone(), e.rank);
        }
    }
    for (i, e) in elems.iter().enumerate() {
        if map[i] == usize::MAX {
            continue;
        }
        for &p in &e.parents {
            if map[p] != usize::MAX {
                hd.arcs.push((map[p], map[i]));
            }
        }
    }
    hd
}
