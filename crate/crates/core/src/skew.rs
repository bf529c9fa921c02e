//! The Ore extension `R = A[t; σ, δ]`.
//!
//! Polynomials are added coefficient-wise and multiplied through the
//! commutation law `t·a = σ(a)·t + δ(a)`. Division by a monic (or
//! unit-led) polynomial is available on both sides; right evaluation at
//! `a ∈ A` is the remainder of right division by `t − a`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{RingContext, RingElement};

/// `a_0 + a_1 t + … + a_n t^n` with trailing zeros stripped; the zero
/// polynomial (degree `−∞`) has no coefficients.
#[derive(Clone)]
pub struct SkewPoly {
    ctx: Arc<RingContext>,
    coeffs: Vec<RingElement>,
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ctx, &other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for SkewPoly {}

impl PartialOrd for SkewPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by coefficients from the top down.
impl Ord for SkewPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl std::hash::Hash for SkewPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

pub(crate) fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SkewPoly {
    pub fn new(ctx: &Arc<RingContext>, coeffs: Vec<RingElement>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| ctx.contains(c)));
        SkewPoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    /// Like [`Self::new`] but rejects coefficients from another ring.
    pub fn try_new(ctx: &Arc<RingContext>, coeffs: Vec<RingElement>) -> Result<Self> {
        if coeffs.iter().all(|c| ctx.contains(c)) {
            Ok(Self::new(ctx, coeffs))
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Self::new(ctx, Vec::new())
    }

    pub fn one(ctx: &Arc<RingContext>) -> Self {
        Self::constant(ctx, ctx.one())
    }

    pub fn constant(ctx: &Arc<RingContext>, a: RingElement) -> Self {
        Self::new(ctx, vec![a])
    }

    /// `a·t^i`.
    pub fn monomial(ctx: &Arc<RingContext>, a: RingElement, i: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); i];
        coeffs.push(a);
        Self::new(ctx, coeffs)
    }

    pub fn t(ctx: &Arc<RingContext>) -> Self {
        Self::monomial(ctx, ctx.one(), 1)
    }

    /// `t − a`.
    pub fn linear(ctx: &Arc<RingContext>, a: &RingElement) -> Self {
        Self::new(ctx, vec![ctx.neg(a), ctx.one()])
    }

    /// Monic polynomial from its lower coefficients: `c_0 + … + c_{r-1} t^{r-1} + t^r`.
    pub fn monic(ctx: &Arc<RingContext>, lower: &[RingElement]) -> Self {
        let mut coeffs = lower.to_vec();
        coeffs.push(ctx.one());
        Self::new(ctx, coeffs)
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&RingElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(&self.ctx.one())
    }

    /// Coefficients padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<RingElement> {
        (0..n).map(|i| self.coeff(i)).collect()
    }

    fn check_ctx(&self, other: &SkewPoly) -> Result<()> {
        if same_ring(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn zip_with(
        &self,
        other: &SkewPoly,
        op: impl Fn(&RingElement, &RingElement) -> RingElement,
    ) -> SkewPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| op(&self.coeff(i), &other.coeff(i)))
            .collect();
        SkewPoly::new(&self.ctx, coeffs)
    }

    pub fn try_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ctx(other)?;
        Ok(self.zip_with(other, |a, b| self.ctx.add(a, b)))
    }

    pub fn try_sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ctx(other)?;
        Ok(self.zip_with(other, |a, b| self.ctx.sub(a, b)))
    }

    /// `a·f`.
    pub fn scale_left(&self, a: &RingElement) -> SkewPoly {
        let coeffs = self.coeffs.iter().map(|c| self.ctx.mul(a, c)).collect();
        SkewPoly::new(&self.ctx, coeffs)
    }

    /// `f·a`, which is not coefficient-wise when `σ ≠ id` or `δ ≠ 0`.
    pub fn scale_right(&self, a: &RingElement) -> SkewPoly {
        self.mul_unchecked(&SkewPoly::constant(&self.ctx, a.clone()))
    }

    /// `t·f = Σ σ(a_i) t^{i+1} + δ(a_i) t^i`.
    pub fn mul_t_left(&self) -> SkewPoly {
        let ctx = &self.ctx;
        let mut out = vec![ctx.zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = ctx.add(&out[i + 1], &ctx.sigma(c));
            out[i] = ctx.add(&out[i], &ctx.delta(c));
        }
        SkewPoly::new(ctx, out)
    }

    /// `f·t^k`, a plain shift.
    pub fn mul_t_pow_right(&self, k: usize) -> SkewPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ctx.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        SkewPoly::new(&self.ctx, coeffs)
    }

    pub fn try_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ctx(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &SkewPoly) -> SkewPoly {
        let ctx = &self.ctx;
        let mut acc = SkewPoly::zero(ctx);
        // cur = t^i · other
        let mut cur = other.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                cur = cur.mul_t_left();
            }
            if !a.is_zero() {
                acc = acc.zip_with(&cur.scale_left(a), |x, y| ctx.add(x, y));
            }
        }
        acc
    }

    /// Applies `σ^k` to every coefficient, fixing `t`.
    pub fn map_sigma(&self, k: usize) -> SkewPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| self.ctx.sigma_pow(c, k))
            .collect();
        SkewPoly::new(&self.ctx, coeffs)
    }

    /// `(q, r)` with `self = q·g + r` and `deg r < deg g`.
    ///
    /// `g` must be monic or have a unit leading coefficient `u`; in the
    /// latter case `g` is normalised to `u⁻¹·g` and the quotient corrected
    /// by a right factor `u⁻¹`.
    pub fn div_right(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check_ctx(g)?;
        let ctx = &self.ctx;
        let lead = g
            .leading()
            .ok_or_else(|| Error::DivisionUnavailable("0".into()))?;
        if *lead != ctx.one() {
            let u_inv = ctx
                .invert(lead)
                .ok_or_else(|| Error::DivisionUnavailable(ctx.format_element(lead)))?;
            let (q, r) = self.div_right(&g.scale_left(&u_inv))?;
            return Ok((q.scale_right(&u_inv), r));
        }
        let r = g.coeffs.len() - 1;
        let mut rem = self.clone();
        if rem.coeffs.len() <= r {
            return Ok((SkewPoly::zero(ctx), rem));
        }
        let top = rem.coeffs.len() - 1 - r;
        // shifted[k] = t^k · g, all monic
        let mut shifted = Vec::with_capacity(top + 1);
        shifted.push(g.clone());
        for k in 1..=top {
            shifted.push(shifted[k - 1].mul_t_left());
        }
        let mut quot = vec![ctx.zero(); top + 1];
        while rem.coeffs.len() > r {
            let d = rem.coeffs.len() - 1;
            let c = rem.coeffs[d].clone();
            let sub = shifted[d - r].scale_left(&c);
            quot[d - r] = c;
            rem = rem.zip_with(&sub, |x, y| ctx.sub(x, y));
        }
        Ok((SkewPoly::new(ctx, quot), rem))
    }

    /// `(q, r)` with `self = g·q + r` and `deg r < deg g`. Needs `σ`
    /// invertible.
    pub fn div_left(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check_ctx(g)?;
        let ctx = &self.ctx;
        let lead = g
            .leading()
            .ok_or_else(|| Error::DivisionUnavailable("0".into()))?;
        let u_inv = ctx
            .invert(lead)
            .ok_or_else(|| Error::DivisionUnavailable(ctx.format_element(lead)))?;
        let ord = ctx.sigma_order().ok_or(Error::LeftDivisionUnavailable)?;
        let r = g.coeffs.len() - 1;
        let mut rem = self.clone();
        if rem.coeffs.len() <= r {
            return Ok((SkewPoly::zero(ctx), rem));
        }
        let mut quot = vec![ctx.zero(); rem.coeffs.len() - r];
        // σ^{-r} = σ^{(ord - r mod ord)}
        let back = (ord - r % ord) % ord;
        while rem.coeffs.len() > r {
            let d = rem.coeffs.len() - 1;
            let k = d - r;
            let c = ctx.sigma_pow(&ctx.mul(&u_inv, &rem.coeffs[d]), back);
            let sub = g.scale_right(&c).mul_t_pow_right(k);
            debug_assert_eq!(sub.degree(), Some(d));
            quot[k] = ctx.add(&quot[k], &c);
            rem = rem.zip_with(&sub, |x, y| ctx.sub(x, y));
        }
        Ok((SkewPoly::new(ctx, quot), rem))
    }

    pub fn right_divisible_by(&self, g: &SkewPoly) -> Result<bool> {
        Ok(self.div_right(g)?.1.is_zero())
    }

    pub fn left_divisible_by(&self, g: &SkewPoly) -> Result<bool> {
        Ok(self.div_left(g)?.1.is_zero())
    }

    /// Right evaluation `f(a) = Σ b_i N_i(a)`.
    pub fn eval_right(&self, a: &RingElement) -> RingElement {
        let ctx = &self.ctx;
        let mut n_i = ctx.one();
        let mut acc = ctx.zero();
        for (i, b) in self.coeffs.iter().enumerate() {
            if i > 0 {
                n_i = next_ni(ctx, &n_i, a);
            }
            acc = ctx.add(&acc, &ctx.mul(b, &n_i));
        }
        acc
    }

    /// Right evaluation via the remainder of division by `t − a`.
    pub fn eval_right_by_division(&self, a: &RingElement) -> RingElement {
        let (_, r) = self
            .div_right(&SkewPoly::linear(&self.ctx, a))
            .expect("t - a is monic");
        r.coeff(0)
    }

    pub fn parse(ctx: &Arc<RingContext>, s: &str) -> Result<SkewPoly> {
        let coeffs = s
            .split(';')
            .map(|c| ctx.parse_element(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(SkewPoly::new(ctx, coeffs))
    }

    /// Semicolon-separated coefficient literals; inverse of [`Self::parse`].
    pub fn to_literal(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| self.ctx.format_element(c))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({})", self)
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => "t".to_string(),
                    _ => format!("t^{i}"),
                };
                let coeff = self.ctx.pretty(c);
                if i == 0 {
                    coeff
                } else if *c == self.ctx.one() {
                    mono
                } else if coeff.contains(' ') {
                    format!("({coeff}){mono}")
                } else {
                    format!("{coeff}{mono}")
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr for &SkewPoly {
            type Output = SkewPoly;
            /// Panics when the operands live in different rings; use the
            /// `try_` method to get an error instead.
            fn $method(self, rhs: &SkewPoly) -> SkewPoly {
                self.$try(rhs)
                    .expect("skew polynomials from different rings")
            }
        }
        impl $tr for SkewPoly {
            type Output = SkewPoly;
            fn $method(self, rhs: SkewPoly) -> SkewPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        let coeffs = self.coeffs.iter().map(|c| self.ctx.neg(c)).collect();
        SkewPoly::new(&self.ctx, coeffs)
    }
}

fn next_ni(ctx: &RingContext, n_i: &RingElement, a: &RingElement) -> RingElement {
    ctx.add(&ctx.mul(&ctx.sigma(n_i), a), &ctx.delta(n_i))
}

/// `N_i(a)`: `N_0 = 1`, `N_{i+1} = σ(N_i)·a + δ(N_i)`.
pub fn ni_value(ctx: &RingContext, a: &RingElement, i: usize) -> RingElement {
    (0..i).fold(ctx.one(), |n, _| next_ni(ctx, &n, a))
}

/// `[N_0(a), …, N_{len-1}(a)]`.
pub fn ni_values(ctx: &RingContext, a: &RingElement, len: usize) -> Vec<RingElement> {
    let mut out = Vec::with_capacity(len);
    let mut n = ctx.one();
    for i in 0..len {
        if i > 0 {
            n = next_ni(ctx, &n, a);
        }
        out.push(n.clone());
    }
    out
}

/// Monic common left multiple of `t − a_1, …, t − a_r` by conjugation
/// closure: `g_1 = t − a_1` and `g_{k+1} = (t − c)·g_k` with
/// `c = (σ(v)·a_{k+1} + δ(v))·v⁻¹`, `v = g_k(a_{k+1})`; points with
/// `v = 0` are skipped. Over a division ring this is the least left common
/// multiple.
pub fn lclm_linear(ctx: &Arc<RingContext>, points: &[RingElement]) -> Result<SkewPoly> {
    let (first, rest) = points
        .split_first()
        .ok_or_else(|| Error::Precondition("lclm of an empty point list".into()))?;
    let mut g = SkewPoly::linear(ctx, first);
    for (k, a) in rest.iter().enumerate() {
        let v = g.eval_right(a);
        if v.is_zero() {
            continue;
        }
        let v_inv = ctx.invert(&v).ok_or_else(|| Error::LclmStepFailed {
            index: k + 1,
            value: ctx.format_element(&v),
        })?;
        let c = ctx.mul(
            &ctx.add(&ctx.mul(&ctx.sigma(&v), a), &ctx.delta(&v)),
            &v_inv,
        );
        g = SkewPoly::linear(ctx, &c).mul_unchecked(&g);
    }
    Ok(g)
}

/// Outcome of [`is_invariant`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariance {
    Invariant,
    NotInvariant,
    /// `fR ⊆ Rf` holds but `σ` is not invertible, so `Rf ⊆ fR` could not
    /// be checked.
    RightInclusionOnly,
}

/// Decides `Rf = fR` for monic `f` by testing the generators `a ∈ A` and
/// `t` on both sides.
pub fn is_invariant(f: &SkewPoly) -> Result<Invariance> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let ctx = f.context();
    let t = SkewPoly::t(ctx);
    let right_ok = ctx
        .elements()
        .map(|a| SkewPoly::constant(ctx, a))
        .chain(std::iter::once(t.clone()))
        .try_fold(true, |ok, x| {
            Ok::<_, Error>(ok && (f * &x).right_divisible_by(f)?)
        })?;
    if !right_ok {
        return Ok(Invariance::NotInvariant);
    }
    if !ctx.sigma_is_invertible() {
        return Ok(Invariance::RightInclusionOnly);
    }
    let left_ok = ctx
        .elements()
        .map(|a| SkewPoly::constant(ctx, a))
        .chain(std::iter::once(t))
        .try_fold(true, |ok, x| {
            Ok::<_, Error>(ok && (&x * f).left_divisible_by(f)?)
        })?;
    Ok(if left_ok {
        Invariance::Invariant
    } else {
        Invariance::NotInvariant
    })
}

/// `f·a = σ^k(a)·f` for every `a ∈ A` and `f·t = t·f`.
pub fn check_semi_invariant(f: &SkewPoly, k: usize) -> bool {
    let ctx = f.context();
    let commutes_with_t = f.mul_t_pow_right(1) == f.mul_t_left();
    commutes_with_t
        && ctx
            .elements()
            .all(|a| f.scale_right(&a) == f.scale_left(&ctx.sigma_pow(&a, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::shipped;

    fn el(ctx: &RingContext, r: &[i64]) -> RingElement {
        ctx.reduce(r.iter().copied())
    }

    #[test]
    fn f4_factorization_of_t4_plus_1() {
        let ctx = shipped("f4").unwrap();
        let a = ctx.generator();
        let a2 = ctx.mul(&a, &a);
        let left = SkewPoly::monic(&ctx, &[a.clone(), a.clone()]);
        let right = SkewPoly::monic(&ctx, &[a2, a]);
        let expected = SkewPoly::parse(&ctx, "1;0;0;0;1").unwrap();
        assert_eq!(&left * &right, expected);
        assert_eq!(&left * &SkewPoly::one(&ctx), left);
    }

    #[test]
    fn derivation_square() {
        let ctx = shipped("f5x").unwrap();
        let a = ctx.generator();
        let g = SkewPoly::new(&ctx, vec![ctx.neg(&a), ctx.zero(), ctx.one()]);
        let da = ctx.delta(&a);
        let dda = ctx.delta(&da);
        let expected = SkewPoly::new(
            &ctx,
            vec![
                ctx.add(&ctx.neg(&dda), &ctx.mul(&a, &a)),
                ctx.scale(&da, -2),
                ctx.scale(&a, -2),
                ctx.zero(),
                ctx.one(),
            ],
        );
        assert_eq!(&g * &g, expected);
    }

    #[test]
    fn right_division_examples() {
        let ctx = shipped("f4").unwrap();
        let a = ctx.generator();
        let t2 = SkewPoly::monomial(&ctx, ctx.one(), 2);
        let (q, r) = t2.div_right(&SkewPoly::linear(&ctx, &a)).unwrap();
        assert_eq!(q, SkewPoly::monic(&ctx, &[ctx.mul(&a, &a)]));
        assert_eq!(r, SkewPoly::one(&ctx));
        let (q, r) = t2.div_right(&t2).unwrap();
        assert_eq!((q, r), (SkewPoly::one(&ctx), SkewPoly::zero(&ctx)));
    }

    #[test]
    fn left_division_example() {
        let ctx = shipped("f4").unwrap();
        let a = ctx.generator();
        let a2 = ctx.mul(&a, &a);
        let f = SkewPoly::parse(&ctx, "1;0;0;0;1").unwrap();
        let g = SkewPoly::monic(&ctx, &[a2, a.clone()]);
        let (q, r) = f.div_left(&g).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, SkewPoly::monic(&ctx, &[a.clone(), a]));
    }

    #[test]
    fn unit_leading_coefficient_is_normalised() {
        let ctx = shipped("f4").unwrap();
        let a = ctx.generator();
        let f = SkewPoly::parse(&ctx, "1;1;0;1").unwrap();
        let g = SkewPoly::new(&ctx, vec![ctx.one(), a.clone()]);
        let (q, r) = f.div_right(&g).unwrap();
        assert_eq!(&(&q * &g) + &r, f);
        let (q, r) = f.div_left(&g).unwrap();
        assert_eq!(&(&g * &q) + &r, f);
    }

    #[test]
    fn non_unit_leading_coefficient_is_rejected() {
        let ctx = shipped("f5x").unwrap();
        let f = SkewPoly::parse(&ctx, "1;0;1").unwrap();
        let g = SkewPoly::new(&ctx, vec![ctx.one(), el(&ctx, &[-1, 1])]);
        assert!(matches!(
            f.div_right(&g),
            Err(Error::DivisionUnavailable(_))
        ));
        assert!(matches!(f.div_left(&g), Err(Error::DivisionUnavailable(_))));
    }

    #[test]
    fn evaluation_examples() {
        let ctx = shipped("f4").unwrap();
        let a = ctx.generator();
        let t2 = SkewPoly::monomial(&ctx, ctx.one(), 2);
        assert_eq!(t2.eval_right(&a), ctx.one());
        assert_eq!(t2.eval_right_by_division(&a), ctx.one());
        assert!(SkewPoly::linear(&ctx, &a).eval_right(&a).is_zero());

        let q = shipped("f5x").unwrap();
        assert_eq!(ni_value(&q, &q.generator(), 2), el(&q, &[1, 0, 1]));
        assert_eq!(ni_value(&q, &q.generator(), 0), q.one());
        let g = SkewPoly::parse(&q, "-1,0,1; 0,-2; 1").unwrap();
        assert!(g.eval_right(&el(&q, &[0, 1, 0, 0, 1])).is_zero());
    }

    #[test]
    fn lclm_examples() {
        let q = shipped("f5x").unwrap();
        let x = q.generator();
        let y = el(&q, &[0, 1, 0, 0, 1]);
        let g = lclm_linear(&q, &[x.clone(), y]).unwrap();
        assert_eq!(g, SkewPoly::parse(&q, "-1,0,1; 0,-2; 1").unwrap());
        assert_eq!(
            lclm_linear(&q, std::slice::from_ref(&x)).unwrap(),
            SkewPoly::linear(&q, &x)
        );
        assert!(lclm_linear(&q, &[]).is_err());

        let f4 = shipped("f4").unwrap();
        let a = f4.generator();
        let pts = [f4.one(), a.clone(), f4.mul(&a, &a)];
        // all nonzero points are θ-conjugate, so the closure is t^2 - 1
        let g = lclm_linear(&f4, &pts).unwrap();
        assert_eq!(g, SkewPoly::parse(&f4, "1;0;1").unwrap());
        assert!(pts.iter().all(|p| g.eval_right(p).is_zero()));
    }

    #[test]
    fn lclm_reports_non_unit_step() {
        let q = shipped("f5x").unwrap();
        // g_1 = t, v = g_1(x - 1) = x - 1 divides x^5 - 1
        let err = lclm_linear(&q, &[q.zero(), el(&q, &[-1, 1])]).unwrap_err();
        assert!(matches!(err, Error::LclmStepFailed { index: 1, .. }));
    }

    #[test]
    fn invariance() {
        let q = shipped("f5x").unwrap();
        let f = SkewPoly::parse(&q, "-1;0;0;0;0;1").unwrap();
        assert_eq!(is_invariant(&f).unwrap(), Invariance::Invariant);

        let f4 = shipped("f4").unwrap();
        let big_g = SkewPoly::parse(&f4, "0;1;0;1").unwrap();
        assert_eq!(is_invariant(&big_g).unwrap(), Invariance::Invariant);
        let linear = SkewPoly::linear(&f4, &f4.generator());
        assert_eq!(is_invariant(&linear).unwrap(), Invariance::NotInvariant);
        assert!(check_semi_invariant(&big_g, 1));
        assert!(!check_semi_invariant(&big_g, 0));
        let big_g0 = SkewPoly::parse(&f4, "1;0;1").unwrap();
        assert!(check_semi_invariant(&big_g0, 0));
        let non_monic = SkewPoly::t(&f4).scale_left(&f4.generator());
        assert_eq!(is_invariant(&non_monic), Err(Error::NotMonic));

        let commutative = crate::ring::RingContext::new(
            crate::ring::RingKind::PrimeField { p: 3 },
            crate::ring::SigmaKind::Identity,
            crate::ring::DeltaKind::Zero,
        )
        .unwrap();
        let f = SkewPoly::parse(&commutative, "2;1;0;1").unwrap();
        assert_eq!(is_invariant(&f).unwrap(), Invariance::Invariant);
    }

    #[test]
    fn literal_round_trip_and_display() {
        let q = shipped("f5x").unwrap();
        let f = SkewPoly::parse(&q, "0,4,0,0,0; 0,3; 1").unwrap();
        assert_eq!(f.to_literal(), "0,4; 0,3; 1");
        assert_eq!(SkewPoly::parse(&q, &f.to_literal()).unwrap(), f);
        assert_eq!(f.to_string(), "t^2 + 3xt + 4x");
        assert_eq!(SkewPoly::zero(&q).to_literal(), "0");
        assert!(SkewPoly::parse(&q, "0").unwrap().is_zero());
    }

    #[test]
    fn mixing_rings_is_an_error() {
        let a = SkewPoly::one(&shipped("f4").unwrap());
        let b = SkewPoly::one(&shipped("f8").unwrap());
        assert_eq!(a.try_mul(&b), Err(Error::ContextMismatch));
        assert!(a.div_right(&b).is_err());
    }
}
