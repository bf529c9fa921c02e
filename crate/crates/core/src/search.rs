//! Bounded exhaustive searches over monic skew polynomials.
//!
//! Every search checks its candidate count against a hard budget up front
//! and refuses with [`Error::BudgetExceeded`] rather than truncating.

use std::sync::Arc;

use crate::codes::SEARCH_BUDGET;
use crate::error::{Error, Result};
use crate::ring::RingContext;
use crate::skew::SkewPoly;

fn check_budget(size: u128) -> Result<()> {
    if size > SEARCH_BUDGET {
        Err(Error::BudgetExceeded {
            size,
            budget: SEARCH_BUDGET,
        })
    } else {
        Ok(())
    }
}

fn pow_saturating(base: u128, exp: usize) -> u128 {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .unwrap_or(u128::MAX)
}

/// All monic polynomials of degree `deg`, in the order of their lower
/// coefficients read as a base-`|A|` number with `t⁰` least significant.
pub fn monic_polys(ctx: &Arc<RingContext>, deg: usize) -> Result<impl Iterator<Item = SkewPoly>> {
    let q = ctx.cardinality();
    let size = pow_saturating(q, deg);
    check_budget(size)?;
    let ctx = ctx.clone();
    Ok((0..size).map(move |mut index| {
        let lower: Vec<_> = (0..deg)
            .map(|_| {
                let e = ctx.element_at(index % q);
                index /= q;
                e
            })
            .collect();
        SkewPoly::monic(&ctx, &lower)
    }))
}

/// Every monic right factor `g` of degree `r` of `f`, paired with its left
/// cofactor `h` (`f = h·g`), sorted by `g`.
///
/// ```
/// use sdcodes::{config, search::factor_search, SkewPoly};
///
/// let f4 = config::shipped("f4").unwrap();
/// let big_g = SkewPoly::parse(&f4, "0;1;0;1").unwrap();
/// assert_eq!(factor_search(&big_g, 1).unwrap().len(), 4);
/// ```
pub fn factor_search(f: &SkewPoly, r: usize) -> Result<Vec<(SkewPoly, SkewPoly)>> {
    let ctx = f.context();
    check_budget(pow_saturating(ctx.cardinality(), r + 1))?;
    let mut found = Vec::new();
    for g in monic_polys(ctx, r)? {
        let (h, rem) = f.div_right(&g)?;
        if rem.is_zero() {
            found.push((g, h));
        }
    }
    found.sort();
    Ok(found)
}
