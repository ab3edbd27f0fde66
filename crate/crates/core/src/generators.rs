//! Exact constructors for the benchmark families: dwarfed cubes, tight
//! spans of finite metrics, and tropical polytopes.

use num_traits::{One, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::exact::{frac, rat, Rational};
use crate::polyhedron::{HRep, Inequality};

fn unit(d: usize, i: usize, s: i64) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[i] = rat(s);
    v
}

/// The dwarfed cube `0 ≤ x_i ≤ 1, Σ x_i ≤ 3/2`.
///
/// Rows are `−x_1 ≤ 0, …, −x_d ≤ 0`, then `x_1 ≤ 1, …, x_d ≤ 1`, then the
/// dwarfing row.
pub fn dwarfed_cube(d: usize) -> Result<HRep> {
    if d < 2 {
        return Err(Error::Invalid("dwarfed cube needs d ≥ 2".into()));
    }
    let mut rows = Vec::with_capacity(2 * d + 1);
    rows.extend((0..d).map(|i| Inequality::new(unit(d, i, -1), Rational::zero())));
    rows.extend((0..d).map(|i| Inequality::new(unit(d, i, 1), Rational::one())));
    rows.push(Inequality::new(vec![Rational::one(); d], frac(3, 2)));
    HRep::new(d, rows)
}

/// The unbounded polyhedron obtained from the dwarfed cube by sending the
/// dwarfing facet to infinity.
///
/// The projective map `y = x / (3/2 − Σ x)` turns `x_i ≥ 0` into `y_i ≥ 0`
/// and `x_i ≤ 1` into `(3 e_i − 2·𝟙) · y ≤ 2`. Its vertices are `0` and
/// `2 e_i`.
pub fn dwarfed_cube_reversal(d: usize) -> Result<HRep> {
    if d < 2 {
        return Err(Error::Invalid("dwarfed cube needs d ≥ 2".into()));
    }
    let mut rows = Vec::with_capacity(2 * d);
    rows.extend((0..d).map(|i| Inequality::new(unit(d, i, -1), Rational::zero())));
    for i in 0..d {
        let mut a = vec![rat(-2); d];
        a[i] = rat(1);
        rows.push(Inequality::new(a, rat(2)));
    }
    HRep::new(d, rows)
}

/// A finite metric on points `0..d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    d: usize,
    /// `M(i, j)` for `i < j` in lexicographic order.
    entries: Vec<Rational>,
}

impl Metric {
    /// Builds a metric from `M(i, j)`, `i < j`, listed lexicographically.
    pub fn new(d: usize, entries: Vec<Rational>) -> Result<Self> {
        if d < 2 || entries.len() != d * (d - 1) / 2 {
            return Err(Error::Invalid(format!("{} entries do not form a metric on {d} points", entries.len())));
        }
        if entries.iter().any(|x| *x <= Rational::zero()) {
            return Err(Error::Invalid("metric entries must be positive".into()));
        }
        Ok(Self { d, entries })
    }

    pub fn points(&self) -> usize {
        self.d
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        // pairs (0,1), (0,2), …, (0,d−1), (1,2), …
        i * (2 * self.d - i - 1) / 2 + (j - i - 1)
    }

    /// `M(i, j)` with `M(i, i) = 0`.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Rational::zero(),
            std::cmp::Ordering::Less => self.entries[self.offset(i, j)].clone(),
            std::cmp::Ordering::Greater => self.entries[self.offset(j, i)].clone(),
        }
    }

    pub fn satisfies_triangle_inequality(&self) -> bool {
        let d = self.d;
        (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| self.get(i, k) <= self.get(i, j) + self.get(j, k))))
    }

    pub fn scaled(&self, lambda: &Rational) -> Self {
        Self { d: self.d, entries: self.entries.iter().map(|x| x * lambda).collect() }
    }
}

/// The metric of the maximal circular split system on `d` points:
/// `M(i, j) = (j − i)(d − j + i)` for `i < j`.
pub fn thrackle_metric(d: usize) -> Result<Metric> {
    if d < 3 {
        return Err(Error::Invalid("thrackle metric needs d ≥ 3".into()));
    }
    let mut entries = Vec::with_capacity(d * (d - 1) / 2);
    for i in 0..d {
        for j in i + 1..d {
            entries.push(rat(((j - i) * (d - j + i)) as i64));
        }
    }
    Metric::new(d, entries)
}

/// Denominator of random metric entries.
pub const RANDOM_DENOMINATOR: u64 = 1 << 20;

/// A metric with entries `1 + k / 2^20`.
///
/// For each pair `i < j` in lexicographic order, `k` is the next output of
/// a SplitMix64 generator seeded with `seed`, reduced modulo `2^20 + 1`.
/// Entries lie in `[1, 2]`, so the triangle inequality always holds.
pub fn random_metric(d: usize, seed: u64) -> Result<Metric> {
    if d < 3 {
        return Err(Error::Invalid("random metric needs d ≥ 3".into()));
    }
    let mut rng = SplitMix64::from_seed(seed.to_le_bytes());
    let den = Rational::from_integer(RANDOM_DENOMINATOR.into());
    let mut entries = Vec::with_capacity(d * (d - 1) / 2);
    for _ in 0..d * (d - 1) / 2 {
        let k = rng.next_u64() % (RANDOM_DENOMINATOR + 1);
        entries.push(Rational::one() + Rational::from_integer(k.into()) / &den);
    }
    Metric::new(d, entries)
}

/// `{x : x_i + x_j ≥ M(i, j) for i ≤ j}` as rows `−x_i − x_j ≤ −M(i, j)`,
/// pairs `(i, j)` with `i ≤ j` in lexicographic order.
pub fn tight_span_hrep(m: &Metric) -> HRep {
    let d = m.points();
    let mut rows = Vec::with_capacity(d * (d + 1) / 2);
    for i in 0..d {
        for j in i..d {
            let mut a = vec![Rational::zero(); d];
            a[i] -= Rational::one();
            a[j] -= Rational::one();
            rows.push(Inequality::new(a, -m.get(i, j)));
        }
    }
    HRep::new(d, rows).expect("metric has at least two points")
}

/// An `s × t` matrix defining a tropical polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalMatrix {
    pub s: usize,
    pub t: usize,
    pub v: Vec<Vec<Rational>>,
}

impl TropicalMatrix {
    pub fn new(v: Vec<Vec<Rational>>) -> Result<Self> {
        let s = v.len();
        let t = v.first().map_or(0, Vec::len);
        if s < 2 || t < 2 || v.iter().any(|r| r.len() != t) {
            return Err(Error::Invalid("tropical matrix must be at least 2 × 2 and rectangular".into()));
        }
        Ok(Self { s, t, v })
    }
}

/// `v_ik = i · k` with 1-based indices.
pub fn cyclic_matrix(s: usize, t: usize) -> Result<TropicalMatrix> {
    TropicalMatrix::new((1..=s).map(|i| (1..=t).map(|k| rat((i * k) as i64)).collect()).collect())
}

/// All permutations of `(0, …, t − 1)` as rows, in lexicographic order.
/// Fails if `t!` exceeds `budget`.
pub fn permutohedron_matrix(t: usize, budget: u128) -> Result<TropicalMatrix> {
    let count: u128 = (1..=t as u128).product();
    if t < 2 || count > budget {
        return Err(Error::Budget(format!("{t}! = {count} rows exceeds budget {budget}")));
    }
    let mut perm: Vec<usize> = (0..t).collect();
    let mut rows = Vec::with_capacity(count as usize);
    loop {
        rows.push(perm.iter().map(|&x| rat(x as i64)).collect());
        // next lexicographic permutation
        let Some(i) = (0..t - 1).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..t).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    TropicalMatrix::new(rows)
}

/// `{(u, w) : u_i + w_k ≤ v_ik}` with `w_t = 0`, in variables
/// `(u_1, …, u_s, w_1, …, w_{t−1})`. Rows are ordered by `i`, then `k`.
pub fn tropical_hrep(v: &TropicalMatrix) -> HRep {
    let d = v.s + v.t - 1;
    let mut rows = Vec::with_capacity(v.s * v.t);
    for i in 0..v.s {
        for k in 0..v.t {
            let mut a = vec![Rational::zero(); d];
            a[i] = Rational::one();
            if k + 1 < v.t {
                a[v.s + k] = Rational::one();
            }
            rows.push(Inequality::new(a, v.v[i][k].clone()));
        }
    }
    HRep::new(d, rows).expect("tropical matrix is at least 2 × 2")
}
