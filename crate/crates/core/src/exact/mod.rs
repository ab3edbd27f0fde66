//! Exact rational scalars and dense linear algebra over them.
//!
//! Every coordinate in the crate lives in [`Rational`]; there is no
//! floating-point path. The LP solver in [`lp`] builds on the elimination
//! routines here.

pub(crate) mod int;
pub mod lp;

use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use lp::{lp_solve, LpOutcome, LpStatus, Sense};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`. Non-normalized input such as `"4/-6"` is accepted.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

/// Dot product of two equal-length rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Scales a nonzero vector so its first nonzero entry has absolute value 1.
pub fn normalize_direction(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(p) => {
            let s = p.abs();
            v.iter().map(|x| x / &s).collect()
        }
        None => v.to_vec(),
    }
}

/// Multiplies a rational row by the lcm of its denominators and divides by
/// the gcd of the resulting numerators. The sign is preserved.
pub fn primitive_integer_row(v: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must share the same
    /// length; `cols` is needed to describe a matrix with zero rows.
    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::new();
        let mut n = 0;
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {n} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r);
            n += 1;
        }
        Ok(Self { rows: n, cols, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect())).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Rational] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        self.iter_rows().map(|r| dot(r, x)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduces to reduced row echelon form in place, returning the pivot
    /// columns in order. Only the first `limit` columns are used as pivots.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit.min(self.cols) {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                if !self[(r, j)].is_zero() {
                    let v = &self[(r, j)] * &inv;
                    self[(r, j)] = v;
                }
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    if !self[(r, j)].is_zero() {
                        let v = &self[(r, j)] * &f;
                        self[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place(self.cols).len()
    }

    /// A basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rational::one();
        }
        if aug.rref_in_place(n).len() < n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = aug[(r, n + c)].clone();
            }
        }
        Some(inv)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in self.iter_rows() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally built echelon basis, used to pick linearly independent
/// rows in input order.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the rows so far; returns whether it
    /// was added.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        for (p, r) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= y * &f;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((p, v));
        true
    }
}

/// Solves `a · x = b` exactly. Returns `None` when the system is
/// inconsistent; free variables of an underdetermined system are set to 0.
pub fn solve_linear_system(a: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows but right-hand side has {} entries",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let pivots = aug.rref_in_place(n);
    for r in pivots.len()..a.rows() {
        if !aug[(r, n)].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[(r, n)].clone();
    }
    Ok(Some(x))
}

/// Dimension of the affine hull of a finite point set (−1 for no points).
pub fn affine_dimension(points: &[&[Rational]]) -> isize {
    let Some((first, rest)) = points.split_first() else {
        return -1;
    };
    if rest.is_empty() {
        return 0;
    }
    let d = first.len();
    let diffs = rest.iter().map(|p| p.iter().zip(first.iter()).map(|(x, y)| x - y).collect());
    Matrix::from_rows(d, diffs).map(|m| m.rank() as isize).unwrap_or(-1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(2);
        assert_eq!(solve_linear_system(&a, &v(&[3, 5])).unwrap(), Some(v(&[3, 5])));
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve_linear_system(&a, &v(&[1, 2])).unwrap(), None);
    }

    #[test]
    fn solve_diagonal() {
        let a = Matrix::from_i64(&[&[2, 0], &[0, 4]]);
        assert_eq!(solve_linear_system(&a, &v(&[1, 1])).unwrap(), Some(vec![frac(1, 2), frac(1, 4)]));
    }

    #[test]
    fn solve_underdetermined_pins_free_to_zero() {
        let a = Matrix::from_i64(&[&[1, 1, 0]]);
        assert_eq!(solve_linear_system(&a, &v(&[4])).unwrap(), Some(v(&[4, 0, 0])));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = Matrix::identity(2);
        assert!(solve_linear_system(&a, &v(&[1])).is_err());
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(parse_rational("4/-6"), Some(frac(-2, 3)));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(frac(-2, 3).to_string(), "-2/3");
        assert_eq!(frac(6, 3).to_string(), "2");
    }

    #[test]
    fn inverse_and_nullspace() {
        let a = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, Matrix::from_i64(&[&[1, -1], &[-1, 2]]));
        let s = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = s.nullspace();
        assert_eq!(ns.len(), 2);
        for n in ns {
            assert!(s.mul_vec(&n).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn primitive_rows() {
        let r = primitive_integer_row(&[frac(1, 2), frac(-3, 4), rat(0)]);
        assert_eq!(r, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_rat() -> impl Strategy<Value = Rational> {
            (-50i64..50, 1i64..20).prop_map(|(n, d)| frac(n, d))
        }

        proptest! {
            #[test]
            fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
                prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
                if !a.is_zero() {
                    prop_assert_eq!(&a * a.recip(), Rational::one());
                }
                prop_assert!(a.denom().is_positive());
            }

            #[test]
            fn parse_roundtrip_normalizes(n in -1000i64..1000, d in 1i64..1000) {
                let raw = format!("{n}/{d}");
                let x = parse_rational(&raw).unwrap();
                let again = parse_rational(&x.to_string()).unwrap();
                prop_assert_eq!(&x, &again);
                prop_assert_eq!(x.to_string(), again.to_string());
                prop_assert_eq!(x.numer().gcd(x.denom()), BigInt::one());
            }
        }
    }
}
