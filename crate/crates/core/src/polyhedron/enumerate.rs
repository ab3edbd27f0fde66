//! Vertex enumeration.
//!
//! [`enumerate_vertices_bruteforce`] solves every `d × d` subsystem and is
//! the independent oracle. [`enumerate_vertices`] runs the double
//! description method on the homogenized cone and handles the degenerate,
//! non-simple instances the pipeline produces.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{projective_closure, HRep, Pulled, VRep};
use crate::error::{Error, Result};
use crate::exact::int::{combine, convert_rows, dot_int, make_primitive, ExactInt};
use crate::exact::{primitive_integer_row, Echelon, Matrix, Rational};

pub const DEFAULT_BRUTE_FORCE_BUDGET: u128 = 10_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Integer rows `[a | b]` scaled by positive factors.
fn integer_rows(h: &HRep) -> Vec<Vec<BigInt>> {
    h.rows()
        .iter()
        .map(|r| {
            let mut v = r.a.clone();
            v.push(r.b.clone());
            primitive_integer_row(&v)
        })
        .collect()
}

/// Vertices and rays by exhaustive subsystem solving.
///
/// Vertices come from every invertible `d`-subset of rows of `h`. Rays are
/// the far-face vertices of the projective closure, found the same way and
/// pulled back as directions.
pub fn enumerate_vertices_bruteforce(h: &HRep, budget: u128) -> Result<VRep> {
    let d = h.dim();
    for rows in [h.len(), h.len() + 1] {
        let subsets = binomial(rows, d);
        if subsets > budget {
            return Err(Error::BruteForceBudget { subsets, budget });
        }
    }
    let vertices = bruteforce_points(h);
    let closure = projective_closure(h)?;
    let mut rays = Vec::new();
    for x in bruteforce_points(&closure.closure) {
        if let Pulled::Direction(r) = closure.pull_back(&x) {
            rays.push(r);
        }
    }
    Ok(VRep::new(d, vertices, rays))
}

fn bruteforce_points(h: &HRep) -> Vec<Vec<Rational>> {
    let rows = integer_rows(h);
    if let Some(small) = convert_rows::<i128>(&rows) {
        if let Some(points) = bruteforce_kernel(&small, h.dim()) {
            return points;
        }
    }
    bruteforce_kernel::<BigInt>(&rows, h.dim()).expect("big integers never overflow")
}

/// One row of a fully reduced fraction-free echelon form.
#[derive(Clone)]
struct EchRow<T> {
    pivot: usize,
    row: Vec<T>,
}

struct Search<'a, T> {
    rows: &'a [Vec<T>],
    d: usize,
    overflow: &'a AtomicBool,
    found: HashSet<Vec<T>>,
}

impl<T: ExactInt> Search<'_, T> {
    /// Eliminates existing pivots from `row` and appends it, re-reducing
    /// the other rows. The inner `None` means `row` is dependent on the
    /// system; the outer one means overflow.
    fn extend(&self, ech: &[EchRow<T>], row: &[T]) -> Option<Option<Vec<EchRow<T>>>> {
        let d = self.d;
        let mut r = row.to_vec();
        for e in ech {
            let f = &r[e.pivot];
            if f.is_zero() {
                continue;
            }
            r = combine(&e.row[e.pivot], &r, f, &e.row)?;
            make_primitive(&mut r);
        }
        let Some(q) = r[..d].iter().position(|x| !x.is_zero()) else {
            return Some(None);
        };
        let mut out = Vec::with_capacity(ech.len() + 1);
        for e in ech {
            if e.row[q].is_zero() {
                out.push(e.clone());
            } else {
                let mut n = combine(&r[q], &e.row, &e.row[q], &r)?;
                make_primitive(&mut n);
                out.push(EchRow { pivot: e.pivot, row: n });
            }
        }
        out.push(EchRow { pivot: q, row: r });
        Some(Some(out))
    }

    fn leaf(&mut self, ech: &[EchRow<T>]) -> Option<()> {
        let d = self.d;
        // x_p = rhs / coeff; bring to a common positive denominator
        let mut den = T::zero();
        for e in ech {
            let c = e.row[e.pivot].abs()?;
            den = if den.is_zero() {
                c
            } else {
                let g = den.gcd(&c);
                den.div_exact(&g).mul(&c)?
            };
        }
        let mut point = vec![T::zero(); d + 1];
        for e in ech {
            let c = &e.row[e.pivot];
            point[e.pivot] = e.row[d].mul(&den.div_exact(c))?;
        }
        point[d] = den.neg()?;
        for r in self.rows {
            if dot_int(r, &point)?.signum() > 0 {
                return Some(());
            }
        }
        make_primitive(&mut point);
        self.found.insert(point);
        Some(())
    }

    fn dfs(&mut self, start: usize, ech: &[EchRow<T>]) -> Option<()> {
        if self.overflow.load(Ordering::Relaxed) {
            return None;
        }
        if ech.len() == self.d {
            return self.leaf(ech);
        }
        let need = self.d - ech.len();
        let m = self.rows.len();
        for i in start..m {
            if m - i < need {
                break;
            }
            if let Some(next) = self.extend(ech, &self.rows[i])? {
                self.dfs(i + 1, &next)?;
            }
        }
        Some(())
    }
}

/// Returns `None` if `T` overflowed somewhere.
fn bruteforce_kernel<T: ExactInt>(rows: &[Vec<T>], d: usize) -> Option<Vec<Vec<Rational>>> {
    let m = rows.len();
    let overflow = AtomicBool::new(false);
    // tasks are prefixes of length one or two
    let tasks: Vec<Vec<usize>> = if d >= 2 {
        (0..m).flat_map(|i| (i + 1..m).map(move |j| vec![i, j])).collect()
    } else {
        (0..m).map(|i| vec![i]).collect()
    };
    let next = AtomicUsize::new(0);
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(tasks.len().max(1));
    let results: Vec<HashSet<Vec<T>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|_| {
                scope.spawn(|| {
                    let mut s = Search { rows, d, overflow: &overflow, found: HashSet::new() };
                    loop {
                        let k = next.fetch_add(1, Ordering::Relaxed);
                        if k >= tasks.len() || overflow.load(Ordering::Relaxed) {
                            break;
                        }
                        let prefix = &tasks[k];
                        let last = *prefix.last().unwrap();
                        let run = |s: &mut Search<T>| -> Option<()> {
                            let mut ech = Vec::new();
                            for &i in prefix {
                                match s.extend(&ech, &rows[i])? {
                                    Some(e) => ech = e,
                                    None => return Some(()),
                                }
                            }
                            s.dfs(last + 1, &ech)
                        };
                        if run(&mut s).is_none() {
                            overflow.store(true, Ordering::Relaxed);
                            break;
                        }
                    }
                    s.found
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    if overflow.load(Ordering::Relaxed) {
        return None;
    }
    let mut all: HashSet<Vec<T>> = HashSet::new();
    for r in results {
        all.extend(r);
    }
    let mut points: Vec<Vec<Rational>> = all
        .into_iter()
        .map(|p| {
            let den = p[d].to_big();
            // stored as (X, −L) with L > 0
            let den = -den;
            p[..d].iter().map(|x| Rational::new(x.to_big(), den.clone())).collect()
        })
        .collect();
    points.sort();
    Some(points)
}

/// Vertices and rays of a pointed polyhedron by the double description
/// method.
pub fn enumerate_vertices(h: &HRep) -> Result<VRep> {
    let d = h.dim();
    // cone { (t, x) : t·b − a·x ≥ 0, t ≥ 0 }
    let mut cons: Vec<Vec<BigInt>> = Vec::with_capacity(h.len() + 1);
    let mut t_row = vec![<BigInt as Zero>::zero(); d + 1];
    t_row[0] = BigInt::one();
    cons.push(t_row);
    for r in h.rows() {
        let mut v = Vec::with_capacity(d + 1);
        v.push(r.b.clone());
        v.extend(r.a.iter().map(|x| -x));
        cons.push(primitive_integer_row(&v));
    }

    let mut ech = Echelon::new();
    let mut initial = Vec::with_capacity(d + 1);
    for (i, c) in cons.iter().enumerate() {
        let v: Vec<Rational> = c.iter().map(|x| Rational::from_integer(x.clone())).collect();
        if ech.insert(&v) {
            initial.push(i);
            if initial.len() == d + 1 {
                break;
            }
        }
    }
    if initial.len() < d + 1 {
        return Err(Error::NotPointed);
    }
    let basis = Matrix::from_rows(
        d + 1,
        initial.iter().map(|&i| cons[i].iter().map(|x| Rational::from_integer(x.clone())).collect()),
    )?;
    let inv = basis.inverse().ok_or_else(|| Error::Invariant("singular initial basis".into()))?;
    let initial_rays: Vec<Vec<BigInt>> = (0..=d)
        .map(|k| {
            let col: Vec<Rational> = (0..=d).map(|r| inv[(r, k)].clone()).collect();
            primitive_integer_row(&col)
        })
        .collect();

    let generators = match convert_rows::<i128>(&cons)
        .zip(convert_rows::<i128>(&initial_rays))
        .and_then(|(c, r)| dd_kernel(&c, &initial, r))
    {
        Some(g) => g.into_iter().map(|v| v.iter().map(|x| x.to_big()).collect()).collect(),
        None => dd_kernel::<BigInt>(&cons, &initial, initial_rays).expect("big integers never overflow"),
    };

    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for g in generators {
        let g: Vec<BigInt> = g;
        if Zero::is_zero(&g[0]) {
            rays.push(g[1..].iter().map(|x| Rational::from_integer(x.clone())).collect());
        } else {
            vertices.push(g[1..].iter().map(|x| Rational::new(x.clone(), g[0].clone())).collect());
        }
    }
    if vertices.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    Ok(VRep::new(d, vertices, rays))
}

struct DdRay<T> {
    coords: Vec<T>,
    zeros: FixedBitSet,
}

/// Extreme rays of `{y : c·y ≥ 0 for c in cons}`, starting from the
/// simplicial cone cut out by the `initial` constraints whose extreme rays
/// are `rays` (ray `k` is strictly positive on `initial[k]`).
fn dd_kernel<T: ExactInt>(cons: &[Vec<T>], initial: &[usize], rays: Vec<Vec<T>>) -> Option<Vec<Vec<T>>> {
    let k_total = cons.len();
    let dim = initial.len();
    let mut current: Vec<DdRay<T>> = rays
        .into_iter()
        .enumerate()
        .map(|(k, coords)| {
            let mut zeros = FixedBitSet::with_capacity(k_total);
            for (j, &c) in initial.iter().enumerate() {
                if j != k {
                    zeros.insert(c);
                }
            }
            DdRay { coords, zeros }
        })
        .collect();
    let mut is_initial = vec![false; k_total];
    for &i in initial {
        is_initial[i] = true;
    }

    for (j, con) in cons.iter().enumerate() {
        if is_initial[j] {
            continue;
        }
        let mut vals = Vec::with_capacity(current.len());
        for r in &current {
            vals.push(dot_int(con, &r.coords)?);
        }
        let neg: Vec<usize> = (0..current.len()).filter(|&i| vals[i].signum() < 0).collect();
        if neg.is_empty() {
            for (r, v) in current.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.insert(j);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..current.len()).filter(|&i| vals[i].signum() > 0).collect();
        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let mut common = current[p].zeros.clone();
                common.intersect_with(&current[n].zeros);
                if common.count_ones(..) + 2 < dim {
                    continue;
                }
                let adjacent = current.iter().enumerate().all(|(i, r)| i == p || i == n || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let s = &vals[p];
                let t = &vals[n];
                let mut coords = combine(s, &current[n].coords, t, &current[p].coords)?;
                make_primitive(&mut coords);
                common.insert(j);
                created.push(DdRay { coords, zeros: common });
            }
        }
        let mut next = Vec::with_capacity(current.len() - neg.len() + created.len());
        for (i, mut r) in current.into_iter().enumerate() {
            match vals[i].signum() {
                0 => {
                    r.zeros.insert(j);
                    next.push(r);
                }
                1 => next.push(r),
                _ => {}
            }
        }
        next.extend(created);
        current = next;
    }
    Some(current.into_iter().map(|r| r.coords).collect())
}
