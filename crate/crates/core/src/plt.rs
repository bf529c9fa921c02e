//! Pseudo-linear transformations `T(v) = σ(v)·C + δ(v)` on `Aⁿ`.
//!
//! A left `A[t; σ, δ]`-module structure on `Aⁿ` is the same thing as a
//! pseudo-linear map: `t` acts as `T` and `p(t)` as `p(T) = Σ p_i T^i`. For
//! a monic `f` of degree `n` the companion map `T_f` models left
//! multiplication by `t` on `R/Rf`, which gives the coordinate bijection
//! `φ(p + Rf) = p(T_f)(1, 0, …, 0)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::{add_vectors, is_zero_vector, scale_vector, Matrix};
use crate::ring::{RingContext, RingElement};
use crate::skew::SkewPoly;

/// Companion matrix of a monic `f = a_0 + … + a_{n-1} t^{n-1} + t^n`:
/// ones on the superdiagonal and last row `(−a_0, …, −a_{n-1})`.
pub fn companion_matrix(f: &SkewPoly) -> Result<Matrix> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let ctx = f.context();
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Err(Error::Precondition(
            "companion matrix needs deg f >= 1".into(),
        ));
    }
    let mut c = Matrix::zeros(ctx, n, n);
    for i in 0..n - 1 {
        c.set(i, i + 1, ctx.one());
    }
    for j in 0..n {
        c.set(n - 1, j, ctx.neg(&f.coeff(j)));
    }
    Ok(c)
}

/// `v ↦ σ(v)·C + δ(v)` with `σ`, `δ` taken from the matrix's ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoLinearMap {
    matrix: Matrix,
}

impl PseudoLinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::Dimension {
                expected: matrix.rows(),
                got: matrix.cols(),
            });
        }
        Ok(PseudoLinearMap { matrix })
    }

    /// `T_f`, the map attached to the companion matrix of `f`.
    pub fn for_polynomial(f: &SkewPoly) -> Result<Self> {
        PseudoLinearMap::new(companion_matrix(f)?)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn context(&self) -> &Arc<RingContext> {
        self.matrix.context()
    }

    fn check_dim(&self, v: &[RingElement]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.dim(),
                got: v.len(),
            })
        }
    }

    pub fn apply(&self, v: &[RingElement]) -> Result<Vec<RingElement>> {
        self.check_dim(v)?;
        Ok(self.apply_unchecked(v))
    }

    fn apply_unchecked(&self, v: &[RingElement]) -> Vec<RingElement> {
        let ctx = self.context();
        let sv: Vec<_> = v.iter().map(|x| ctx.sigma(x)).collect();
        let dv: Vec<_> = v.iter().map(|x| ctx.delta(x)).collect();
        let image = self.matrix.left_mul_vector(&sv).expect("dimension checked");
        add_vectors(ctx, &image, &dv)
    }

    /// `T^k(v)`.
    pub fn power(&self, v: &[RingElement], k: usize) -> Result<Vec<RingElement>> {
        self.check_dim(v)?;
        Ok((0..k).fold(v.to_vec(), |acc, _| self.apply_unchecked(&acc)))
    }

    /// `[v, T(v), …, T^{count-1}(v)]`.
    pub fn orbit(&self, v: &[RingElement], count: usize) -> Result<Vec<Vec<RingElement>>> {
        self.check_dim(v)?;
        let mut out = Vec::with_capacity(count);
        let mut cur = v.to_vec();
        for i in 0..count {
            if i > 0 {
                cur = self.apply_unchecked(&cur);
            }
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// `p(T)(v) = Σ p_i·T^i(v)`.
    pub fn poly_apply(&self, p: &SkewPoly, v: &[RingElement]) -> Result<Vec<RingElement>> {
        self.check_dim(v)?;
        let ctx = self.context();
        let mut acc = vec![ctx.zero(); self.dim()];
        let mut cur = v.to_vec();
        for (i, c) in p.coeffs().iter().enumerate() {
            if i > 0 {
                cur = self.apply_unchecked(&cur);
            }
            if !c.is_zero() {
                acc = add_vectors(ctx, &acc, &scale_vector(ctx, c, &cur));
            }
        }
        Ok(acc)
    }
}

fn unit_vector(ctx: &RingContext, n: usize) -> Vec<RingElement> {
    let mut e = vec![ctx.zero(); n];
    e[0] = ctx.one();
    e
}

/// `φ(p + Rf)` computed as `p(T_f)(e_1)`.
pub fn phi_residue_via_plt(p: &SkewPoly, f: &SkewPoly) -> Result<Vec<RingElement>> {
    let t_f = PseudoLinearMap::for_polynomial(f)?;
    t_f.poly_apply(p, &unit_vector(p.context(), t_f.dim()))
}

/// `φ(p + Rf)` computed as the padded remainder of right division by `f`.
pub fn phi_residue_via_division(p: &SkewPoly, f: &SkewPoly) -> Result<Vec<RingElement>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree().unwrap_or(0);
    Ok(p.div_right(f)?.1.padded(n))
}

/// Coordinates of `p + Rf` in the basis `1, t, …, t^{n-1}`.
pub fn phi_residue(p: &SkewPoly, f: &SkewPoly) -> Result<Vec<RingElement>> {
    let by_division = phi_residue_via_division(p, f)?;
    debug_assert_eq!(Some(&by_division), phi_residue_via_plt(p, f).ok().as_ref());
    Ok(by_division)
}

/// Whether `p·q ∈ Rf`, decided as `p(T_f)(q̄) = 0` and cross-checked by
/// division. Requires `deg q < deg f`.
pub fn membership_check(p: &SkewPoly, q: &SkewPoly, f: &SkewPoly) -> Result<bool> {
    let t_f = PseudoLinearMap::for_polynomial(f)?;
    let n = t_f.dim();
    if q.degree().is_some_and(|d| d >= n) {
        return Err(Error::Precondition(format!("deg q must be < deg f = {n}")));
    }
    let via_plt = is_zero_vector(&t_f.poly_apply(p, &q.padded(n))?);
    debug_assert_eq!(via_plt, (p * q).right_divisible_by(f)?);
    Ok(via_plt)
}

/// `f^n_i(α)`: the sum of `w(α)` over all words `w` in `σ`, `δ` with `i`
/// letters `σ` and `n − i` letters `δ`.
pub fn word_operator(
    ctx: &RingContext,
    n: usize,
    i: usize,
    alpha: &RingElement,
) -> Result<RingElement> {
    if i > n {
        return Err(Error::WordIndex { n, i });
    }
    let mut acc = ctx.zero();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != i {
            continue;
        }
        // bit k set: the k-th letter applied is σ
        let value = (0..n).fold(alpha.clone(), |x, k| {
            if mask >> k & 1 == 1 {
                ctx.sigma(&x)
            } else {
                ctx.delta(&x)
            }
        });
        acc = ctx.add(&acc, &value);
    }
    Ok(acc)
}

/// [`word_operator`] applied component-wise.
pub fn word_operator_vector(
    ctx: &RingContext,
    n: usize,
    i: usize,
    v: &[RingElement],
) -> Result<Vec<RingElement>> {
    v.iter().map(|x| word_operator(ctx, n, i, x)).collect()
}

/// `N_j(C)`: `N_0 = I`, `N_{j+1} = σ(N_j)·C + δ(N_j)` entry-wise.
pub fn ni_matrix(c: &Matrix, j: usize) -> Result<Matrix> {
    if c.rows() != c.cols() {
        return Err(Error::Dimension {
            expected: c.rows(),
            got: c.cols(),
        });
    }
    let ctx = c.context().clone();
    let mut n = Matrix::identity(&ctx, c.rows());
    for _ in 0..j {
        let s = n.map(|x| ctx.sigma(x));
        let d = n.map(|x| ctx.delta(x));
        n = s.try_mul(c)?.try_add(&d)?;
    }
    Ok(n)
}
