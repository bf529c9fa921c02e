//! Wedderburn polynomials and the structure of `F_q[t; θ]`.
//!
//! A monic `g` of degree `r` is a Wedderburn (W-) polynomial when
//! `Rg = ⋂ R(t − a_i)` for some `a_1, …, a_r`. The code `Rg/Rf` is then
//! cut out by the generalized Vandermonde matrix `V_n(a_1, …, a_r)` with
//! entries `N_{i}(a_j)`, since `c·V_n = (c(a_1), …, c(a_r))`.
//!
//! Over `F_q` with `q = pⁿ` and `θ` the Frobenius, every element is a
//! right root of `G = t^{(p−1)n+1} − t` and every nonzero element of
//! `G₀ = t^{(p−1)n} − 1`. `G` is semi-invariant (`G·h = θ(h)·G`), `G₀` is
//! central, and the W-polynomials are exactly the right factors of `G`.
//! `θ` acts on `R` coefficient-wise with `θ(t) = t`.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::codes::SEARCH_BUDGET;
use crate::error::{Error, Result};
use crate::matrix::{is_zero_vector, Matrix};
use crate::plt::PseudoLinearMap;
use crate::ring::{RingContext, RingElement, RingKind, SigmaKind};
use crate::skew::{check_semi_invariant, lclm_linear, ni_value, SkewPoly};

/// Which of the two distinguished polynomials of `F_q[t; θ]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    G,
    G0,
}

/// A W-polynomial together with a root set certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPolynomial {
    g: SkewPoly,
    roots: Vec<RingElement>,
}

impl WPolynomial {
    /// `lclm(t − a_i)`; fails unless its degree equals the number of roots.
    pub fn from_roots(ctx: &Arc<RingContext>, roots: &[RingElement]) -> Result<Self> {
        let g = lclm_linear(ctx, roots)?;
        if g.degree() != Some(roots.len()) {
            return Err(Error::Precondition(format!(
                "roots are dependent: lclm {g} has degree below {}",
                roots.len()
            )));
        }
        Ok(WPolynomial {
            g,
            roots: roots.to_vec(),
        })
    }

    pub fn polynomial(&self) -> &SkewPoly {
        &self.g
    }

    pub fn roots(&self) -> &[RingElement] {
        &self.roots
    }

    pub fn vandermonde(&self, n: usize) -> Matrix {
        vandermonde_matrix(self.g.context(), &self.roots, n)
    }
}

/// The `n × r` matrix with entry `(i, j) = N_i(a_j)`, rows indexed from 0.
///
/// ```
/// use sdcodes::{config, wedderburn::vandermonde_matrix};
///
/// let q = config::shipped("f5x").unwrap();
/// let x = q.generator();
/// let y = q.parse_element("0,1,0,0,1").unwrap();
/// let v = vandermonde_matrix(&q, &[x, y], 3);
/// assert_eq!(v.to_text(), "1 | 1\n0,1 | 0,1,0,0,1\n1,0,1 | 3,0,1\n");
/// ```
pub fn vandermonde_matrix(ctx: &Arc<RingContext>, roots: &[RingElement], n: usize) -> Matrix {
    let rows = (0..n)
        .map(|i| roots.iter().map(|a| ni_value(ctx, a, i)).collect())
        .collect();
    Matrix::from_rows(ctx, roots.len(), rows).expect("consistent shape")
}

/// `c·V_n(roots) = 0`, i.e. `c(t)` vanishes at every root.
pub fn w_code_membership(
    ctx: &Arc<RingContext>,
    c: &[RingElement],
    roots: &[RingElement],
) -> Result<bool> {
    let v = vandermonde_matrix(ctx, roots, c.len());
    Ok(is_zero_vector(&v.left_mul_vector(c)?))
}

/// `(p, n)` for `F_{pⁿ}` with Frobenius `θ` and `δ = 0`.
pub fn frobenius_field(ctx: &RingContext) -> Result<(u32, usize)> {
    let wrong = Error::WrongRingKind("a finite field with Frobenius sigma and zero delta");
    if !ctx.has_zero_delta() {
        return Err(wrong);
    }
    match (ctx.kind(), ctx.sigma_kind()) {
        (RingKind::PrimeField { p }, SigmaKind::Identity) => Ok((*p, 1)),
        (RingKind::ExtensionField { p, n, .. }, _) => {
            let a = ctx.generator();
            if ctx.sigma(&a) == ctx.pow(&a, u64::from(*p)) {
                Ok((*p, *n))
            } else {
                Err(wrong)
            }
        }
        _ => Err(wrong),
    }
}

/// `G = t^{(p−1)n+1} − t`.
pub fn big_g(ctx: &Arc<RingContext>) -> Result<SkewPoly> {
    let (p, n) = frobenius_field(ctx)?;
    let d = (p as usize - 1) * n + 1;
    let top = SkewPoly::monomial(ctx, ctx.one(), d);
    Ok(&top - &SkewPoly::t(ctx))
}

/// `G₀ = t^{(p−1)n} − 1`.
pub fn big_g0(ctx: &Arc<RingContext>) -> Result<SkewPoly> {
    let (p, n) = frobenius_field(ctx)?;
    let d = (p as usize - 1) * n;
    let top = SkewPoly::monomial(ctx, ctx.one(), d);
    Ok(&top - &SkewPoly::one(ctx))
}

fn big(ctx: &Arc<RingContext>, which: Which) -> Result<SkewPoly> {
    match which {
        Which::G => big_g(ctx),
        Which::G0 => big_g0(ctx),
    }
}

fn random_poly(ctx: &Arc<RingContext>, rng: &mut StdRng, max_deg: usize) -> SkewPoly {
    SkewPoly::new(
        ctx,
        (0..=max_deg).map(|_| ctx.random_element(rng)).collect(),
    )
}

/// Checks `G·h = θ(h)·G` on every constant, on `t` and on `samples` random
/// `h` of degree at most 3, and that `G₀` is central.
pub fn check_theorem_b(ctx: &Arc<RingContext>, samples: usize, seed: u64) -> Result<bool> {
    let g = big_g(ctx)?;
    let g0 = big_g0(ctx)?;
    if !check_semi_invariant(&g, 1) || !check_semi_invariant(&g0, 0) {
        return Ok(false);
    }
    let mut rng = StdRng::seed_from_u64(seed);
    Ok((0..samples).all(|_| {
        let h = random_poly(ctx, &mut rng, 3);
        &g * &h == &h.map_sigma(1) * &g
    }))
}

/// Given `h·g = G` (resp. `G₀`), returns `θ(g)` (resp. `g`), the left
/// factor of the swapped factorization with right factor `h`.
pub fn factor_swap(g: &SkewPoly, h: &SkewPoly, which: Which) -> Result<SkewPoly> {
    if !g.is_monic() || !h.is_monic() {
        return Err(Error::NotMonic);
    }
    let target = big(g.context(), which)?;
    if h.try_mul(g)? != target {
        return Err(Error::Precondition(format!("({h})·({g}) is not {target}")));
    }
    let swapped = match which {
        Which::G => g.map_sigma(1),
        Which::G0 => g.clone(),
    };
    if &swapped * h != target {
        return Err(Error::Precondition(format!("swap identity fails for {g}")));
    }
    Ok(swapped)
}

/// `g` right-divides `G`.
pub fn is_w_polynomial(g: &SkewPoly) -> Result<bool> {
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    big_g(g.context())?.right_divisible_by(g)
}

/// All right roots of `g` in `A`, in element order.
pub fn right_roots(g: &SkewPoly) -> Vec<RingElement> {
    let ctx = g.context();
    ctx.elements()
        .filter(|a| g.eval_right(a).is_zero())
        .collect()
}

/// Searches for `deg g` distinct right roots whose `lclm` is `g`. Returns
/// the first such set in lexicographic order.
pub fn certify_w_roots(g: &SkewPoly) -> Result<Option<Vec<RingElement>>> {
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let ctx = g.context();
    let r = g.degree().unwrap_or(0);
    let size = u32::try_from(r)
        .ok()
        .and_then(|e| ctx.cardinality().checked_pow(e))
        .unwrap_or(u128::MAX);
    if size > SEARCH_BUDGET {
        return Err(Error::BudgetExceeded {
            size,
            budget: SEARCH_BUDGET,
        });
    }
    let roots = right_roots(g);
    let mut chosen = Vec::with_capacity(r);
    Ok(search_subsets(ctx, g, &roots, r, 0, &mut chosen))
}

fn search_subsets(
    ctx: &Arc<RingContext>,
    g: &SkewPoly,
    pool: &[RingElement],
    r: usize,
    start: usize,
    chosen: &mut Vec<RingElement>,
) -> Option<Vec<RingElement>> {
    if chosen.len() == r {
        return match lclm_linear(ctx, chosen) {
            Ok(l) if &l == g => Some(chosen.clone()),
            // the empty set has no lclm; it certifies g = 1
            Err(_) if r == 0 && g.degree() == Some(0) => Some(Vec::new()),
            _ => None,
        };
    }
    for i in start..pool.len() {
        chosen.push(pool[i].clone());
        if let Some(found) = search_subsets(ctx, g, pool, r, i + 1, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Least `l ≥ 1` with `θ^l(g) = g`, for a right factor `g` of `G`. Also
/// checks `G = h·g = g·θ^{l−1}(h)`.
pub fn orbit_exponent(g: &SkewPoly) -> Result<usize> {
    let ctx = g.context();
    let (_, n) = frobenius_field(ctx)?;
    let big_g = big_g(ctx)?;
    let (h, rem) = big_g.div_right(g)?;
    if !rem.is_zero() {
        return Err(Error::NotRightFactor {
            dividend: big_g.to_string(),
            divisor: g.to_string(),
            remainder: rem.to_string(),
        });
    }
    let l = (1..=n)
        .find(|&l| &g.map_sigma(l) == g)
        .ok_or_else(|| Error::Precondition(format!("no l <= {n} with θ^l(g) = g")))?;
    if g * &h.map_sigma(l - 1) != big_g {
        return Err(Error::Precondition(format!(
            "G != g·θ^{}(h) for g = {g}",
            l - 1
        )));
    }
    Ok(l)
}

/// Control matrix of `Rg/RG` (resp. `Rg/RG₀`) built from a one-sided
/// cofactor, without the roots of `g`.
#[derive(Debug, Clone)]
pub struct WControl {
    pub matrix: Matrix,
    /// `θ^{l−1}(h)` for `G = h·g`, or `h'` for `G₀ = h'·g`.
    pub cofactor: SkewPoly,
    /// The cofactor also equals the left-division cofactor of `g`.
    pub cofactors_agree: bool,
}

pub fn w_control_matrix_corollary(g: &SkewPoly, which: Which) -> Result<WControl> {
    let ctx = g.context();
    let big = big(ctx, which)?;
    if which == Which::G0 && g.coeff(0).is_zero() {
        return Err(Error::Precondition("g(0) must be nonzero for G0".into()));
    }
    let (h, rem) = big.div_right(g)?;
    if !rem.is_zero() {
        return Err(Error::NotRightFactor {
            dividend: big.to_string(),
            divisor: g.to_string(),
            remainder: rem.to_string(),
        });
    }
    let cofactor = match which {
        Which::G => h.map_sigma(orbit_exponent(g)? - 1),
        Which::G0 => h,
    };
    let cofactors_agree = match big.div_left(g) {
        Ok((left, rem)) => rem.is_zero() && left == cofactor,
        Err(_) => false,
    };
    let n = big.degree().unwrap_or(0);
    let t = PseudoLinearMap::for_polynomial(&big)?;
    // the cofactor is G itself when g = 1
    let residue = cofactor.div_right(&big)?.1.padded(n);
    let matrix = Matrix::from_rows(ctx, n, t.orbit(&residue, n)?)?;
    Ok(WControl {
        matrix,
        cofactor,
        cofactors_agree,
    })
}
