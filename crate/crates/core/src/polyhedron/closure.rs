use num_traits::{One, Signed, Zero};

use super::{HRep, Inequality};
use crate::error::{Error, Result};
use crate::exact::lp::active_rows;
use crate::exact::{dot, lp_solve, normalize_direction, Echelon, LpStatus, Matrix, Rational, Sense};

/// A polytope projectively equivalent to a pointed polyhedron `P`, lying in
/// the standard simplex, together with the transform that produced it.
///
/// The transform is `x ↦ μ(ρ(x − v))` where `v` is a vertex of `P`,
/// `ρ(y) = −B·y` for a basis `B` of rows active at `v`, and
/// `μ(z) = z / (1 + Σ z)`. Points at infinity of `P` land on `Σ x = 1`.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub closure: HRep,
    /// The vertex `v` of `P` moved to the origin.
    pub translation: Vec<Rational>,
    /// The matrix `−B` of the linear part.
    pub linear: Matrix,
    linear_inverse: Matrix,
    /// Row of `closure` reading `Σ x_i ≤ 1`.
    pub far_inequality: usize,
    /// Indices of the rows of `P` forming `B`, in input order.
    pub basis_rows: Vec<usize>,
}

/// Result of mapping a point of the closure back to `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pulled {
    Point(Vec<Rational>),
    /// A far-face point corresponds to a direction of unboundedness.
    Direction(Vec<Rational>),
}

impl ClosureResult {
    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    /// Image of a point of `P`.
    pub fn map_point(&self, p: &[Rational]) -> Vec<Rational> {
        let y: Vec<Rational> = p.iter().zip(&self.translation).map(|(a, b)| a - b).collect();
        let z = self.linear.mul_vec(&y);
        let s: Rational = Rational::one() + z.iter().sum::<Rational>();
        z.into_iter().map(|zi| zi / &s).collect()
    }

    /// Far-face point representing the direction `r` of `P`.
    pub fn map_direction(&self, r: &[Rational]) -> Vec<Rational> {
        let z = self.linear.mul_vec(r);
        let s: Rational = z.iter().sum();
        z.into_iter().map(|zi| zi / &s).collect()
    }

    pub fn pull_back(&self, x: &[Rational]) -> Pulled {
        let s: Rational = x.iter().sum();
        let rest = Rational::one() - s;
        if rest.is_zero() {
            let y = self.linear_inverse.mul_vec(x);
            Pulled::Direction(normalize_direction(&y))
        } else {
            let z: Vec<Rational> = x.iter().map(|xi| xi / &rest).collect();
            let y = self.linear_inverse.mul_vec(&z);
            Pulled::Point(y.into_iter().zip(&self.translation).map(|(a, b)| a + b).collect())
        }
    }
}

/// Computes a projective closure of the pointed polyhedron `h`.
///
/// Row `i` of the output is the image of row `i` of `h`; the final row is
/// the far inequality `Σ x_i ≤ 1`.
pub fn projective_closure(h: &HRep) -> Result<ClosureResult> {
    let d = h.dim();
    let a = h.matrix();
    let b = h.rhs();
    if a.rank() < d {
        return Err(Error::NotPointed);
    }
    let zero = vec![Rational::zero(); d];
    let lp = lp_solve(&a, &b, &zero, Sense::Max)?;
    let v = match lp.status {
        LpStatus::Optimal => lp.point.expect("optimal point"),
        LpStatus::Infeasible => return Err(Error::EmptyPolyhedron),
        LpStatus::Unbounded => unreachable!("zero objective is bounded"),
    };

    let mut ech = Echelon::new();
    let mut basis_rows = Vec::with_capacity(d);
    for i in active_rows(&a, &b, &v) {
        if ech.insert(a.row(i)) {
            basis_rows.push(i);
            if basis_rows.len() == d {
                break;
            }
        }
    }
    if basis_rows.len() < d {
        return Err(Error::NotPointed);
    }
    let basis = Matrix::from_rows(d, basis_rows.iter().map(|&i| a.row(i).to_vec()))?;
    let basis_inv = basis.inverse().ok_or_else(|| Error::Invariant("singular basis".into()))?;
    let mut linear = basis.clone();
    let mut linear_inverse = basis_inv.clone();
    for r in 0..d {
        for c in 0..d {
            linear[(r, c)] = -basis[(r, c)].clone();
            linear_inverse[(r, c)] = -basis_inv[(r, c)].clone();
        }
    }

    // a·y ≤ β with y = −B⁻¹ z becomes g·z ≤ β, g = −a·B⁻¹; then
    // z = x / (1 − Σx) turns it into (g + β·𝟙)·x ≤ β.
    let mut rows = Vec::with_capacity(h.len() + 1);
    for row in h.rows() {
        let beta = &row.b - dot(&row.a, &v);
        debug_assert!(!beta.is_negative());
        let coeffs: Vec<Rational> = (0..d)
            .map(|j| {
                let mut g = Rational::zero();
                for (k, ak) in row.a.iter().enumerate() {
                    if !ak.is_zero() {
                        g -= ak * &basis_inv[(k, j)];
                    }
                }
                g + &beta
            })
            .collect();
        rows.push(Inequality::new(coeffs, beta));
    }
    rows.push(Inequality::new(vec![Rational::one(); d], Rational::one()));
    let far_inequality = rows.len() - 1;

    Ok(ClosureResult {
        closure: HRep::new(d, rows)?,
        translation: v,
        linear,
        linear_inverse,
        far_inequality,
        basis_rows,
    })
}
