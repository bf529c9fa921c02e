//! Cyclic `(f, σ, δ)`-codes.
//!
//! For monic `f` of degree `n` and a monic right factor `g` of degree `r`,
//! the code is the image of the left module `Rg/Rf` in `Aⁿ` under
//! `p + Rf ↦ (coefficients of p mod f)`. It is a free left `A`-module of
//! rank `k = n − r`, stable under the companion map `T_f`, with basis
//! `T_f^i(ḡ)` for `0 ≤ i < k`.
//!
//! When `f` also factors as `f = g·h` the code is the left annihilator of
//! the `n × n` matrix with rows `T_f^i(h̄)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::{add_vectors, is_zero_vector, scale_vector, Matrix};
use crate::plt::{ni_matrix, word_operator_vector, PseudoLinearMap};
use crate::ring::{RingContext, RingElement};
use crate::skew::SkewPoly;

/// Refuse exhaustive searches larger than this many candidates.
pub const SEARCH_BUDGET: u128 = 1_000_000;

#[derive(Clone, Debug)]
pub struct SigmaDeltaCode {
    f: SkewPoly,
    g: SkewPoly,
    // f = g·h, when it exists
    h: Option<SkewPoly>,
    // f = h'·g, always exists for a valid code
    h_prime: SkewPoly,
    n: usize,
    k: usize,
    t_f: PseudoLinearMap,
    generator: Matrix,
    control: std::result::Result<Matrix, String>,
}

/// The answers of the three membership tests for one word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MembershipRoutes {
    /// `Σ c_i T_f^i(h̄) = 0`; `None` without a cofactor `h`.
    pub plt_annihilator: Option<bool>,
    /// `c(t) ∈ Rg`.
    pub division: bool,
    /// `c·H = 0`; `None` without a control matrix.
    pub control_matrix: Option<bool>,
}

impl MembershipRoutes {
    pub fn agree(&self) -> bool {
        [self.plt_annihilator, self.control_matrix]
            .iter()
            .flatten()
            .all(|&b| b == self.division)
    }
}

/// Coordinates of `p + Rf`; `h` reaches degree `deg f` when `g = 1`.
fn residue(p: &SkewPoly, f: &SkewPoly) -> Result<Vec<RingElement>> {
    Ok(p.div_right(f)?.1.padded(f.degree().unwrap_or(0)))
}

impl SigmaDeltaCode {
    /// Builds the code `Rg/Rf`. Fails when `g` is not a right factor of
    /// `f`; a missing left cofactor only disables the control matrix.
    pub fn new(f: &SkewPoly, g: &SkewPoly) -> Result<Self> {
        if !f.is_monic() || !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = f.degree().unwrap_or(0);
        let r = g.degree().unwrap_or(0);
        if n == 0 {
            return Err(Error::Precondition("code length deg f must be >= 1".into()));
        }
        if r > n {
            return Err(Error::Precondition(format!(
                "deg g = {r} exceeds deg f = {n}"
            )));
        }
        let (h_prime, rem) = f.div_right(g)?;
        if !rem.is_zero() {
            return Err(Error::NotRightFactor {
                dividend: f.to_string(),
                divisor: g.to_string(),
                remainder: rem.to_string(),
            });
        }
        let (h, control_missing) = match f.div_left(g) {
            Ok((h, rem)) if rem.is_zero() => (Some(h), None),
            Ok((_, rem)) => (
                None,
                Some(format!("{g} is not a left factor of {f} (remainder {rem})")),
            ),
            Err(Error::LeftDivisionUnavailable) => (
                None,
                Some("right cofactor missing: sigma is not invertible".into()),
            ),
            Err(e) => return Err(e),
        };
        let t_f = PseudoLinearMap::for_polynomial(f)?;
        let ctx = f.context();
        let k = n - r;
        let generator = Matrix::from_rows(ctx, n, t_f.orbit(&g.padded(n), k)?)?;
        let control = match (&h, control_missing) {
            (Some(h), _) => Ok(Matrix::from_rows(ctx, n, t_f.orbit(&residue(h, f)?, n)?)?),
            (None, reason) => Err(reason.unwrap_or_default()),
        };
        Ok(SigmaDeltaCode {
            f: f.clone(),
            g: g.clone(),
            h,
            h_prime,
            n,
            k,
            t_f,
            generator,
            control,
        })
    }

    pub fn context(&self) -> &Arc<RingContext> {
        self.f.context()
    }

    pub fn f(&self) -> &SkewPoly {
        &self.f
    }

    pub fn g(&self) -> &SkewPoly {
        &self.g
    }

    /// `h` with `f = g·h`.
    pub fn h(&self) -> Option<&SkewPoly> {
        self.h.as_ref()
    }

    /// `h'` with `f = h'·g`.
    pub fn h_prime(&self) -> &SkewPoly {
        &self.h_prime
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn companion_map(&self) -> &PseudoLinearMap {
        &self.t_f
    }

    /// `k × n`, row `i` is `T_f^i(ḡ)`.
    pub fn generator_matrix(&self) -> &Matrix {
        &self.generator
    }

    /// `n × n`, row `i` is `T_f^i(h̄)`; the code is its left annihilator.
    pub fn control_matrix(&self) -> Result<&Matrix> {
        self.control
            .as_ref()
            .map_err(|reason| Error::ControlMatrixUnavailable(reason.clone()))
    }

    /// The columns of the control matrix picked by
    /// [`Matrix::independent_columns`]; over a field these still cut out
    /// the code.
    pub fn reduced_control_matrix(&self) -> Result<Matrix> {
        let h = self.control_matrix()?;
        Ok(h.select_columns(&h.independent_columns()?))
    }

    fn check_len(&self, c: &[RingElement], expected: usize) -> Result<()> {
        if c.len() == expected {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected,
                got: c.len(),
            })
        }
    }

    /// `Σ msg_i · (row i of the generator matrix)`.
    pub fn encode(&self, msg: &[RingElement]) -> Result<Vec<RingElement>> {
        self.check_len(msg, self.k)?;
        let ctx = self.context();
        Ok(msg
            .iter()
            .zip(self.generator.row_vectors())
            .fold(vec![ctx.zero(); self.n], |acc, (m, row)| {
                add_vectors(ctx, &acc, &scale_vector(ctx, m, &row))
            }))
    }

    pub fn word_polynomial(&self, c: &[RingElement]) -> SkewPoly {
        SkewPoly::new(self.context(), c.to_vec())
    }

    pub fn membership_routes(&self, c: &[RingElement]) -> Result<MembershipRoutes> {
        self.check_len(c, self.n)?;
        let ctx = self.context();
        let plt_annihilator = match &self.h {
            Some(h) => {
                let mut acc = vec![ctx.zero(); self.n];
                let mut cur = residue(h, &self.f)?;
                for (i, ci) in c.iter().enumerate() {
                    if i > 0 {
                        cur = self.t_f.apply(&cur)?;
                    }
                    acc = add_vectors(ctx, &acc, &scale_vector(ctx, ci, &cur));
                }
                Some(is_zero_vector(&acc))
            }
            None => None,
        };
        let division = self.word_polynomial(c).right_divisible_by(&self.g)?;
        let control_matrix = match &self.control {
            Ok(h) => Some(is_zero_vector(&h.left_mul_vector(c)?)),
            Err(_) => None,
        };
        Ok(MembershipRoutes {
            plt_annihilator,
            division,
            control_matrix,
        })
    }

    /// Membership by division; the other routes are cross-checked in debug
    /// builds.
    pub fn is_codeword(&self, c: &[RingElement]) -> Result<bool> {
        if cfg!(debug_assertions) {
            let routes = self.membership_routes(c)?;
            debug_assert!(routes.agree(), "membership routes disagree: {routes:?}");
            return Ok(routes.division);
        }
        self.check_len(c, self.n)?;
        self.word_polynomial(c).right_divisible_by(&self.g)
    }

    /// Coefficients of `c(t) mod Rg`, length `deg g`; zero exactly on codewords.
    pub fn syndrome(&self, c: &[RingElement]) -> Result<Vec<RingElement>> {
        self.check_len(c, self.n)?;
        let r = self.n - self.k;
        Ok(self.word_polynomial(c).div_right(&self.g)?.1.padded(r))
    }

    /// `Σ_j (Σ_{i≥j} c_i f^i_j(h̄)) N_j(C_f)`, which vanishes exactly on
    /// codewords. Words in `σ`, `δ` act component-wise on `h̄`.
    pub fn annihilator_contraction(&self, c: &[RingElement]) -> Result<Vec<RingElement>> {
        self.check_len(c, self.n)?;
        let h = self
            .h
            .as_ref()
            .ok_or_else(|| Error::ControlMatrixUnavailable("no cofactor h with f = g·h".into()))?;
        let ctx = self.context();
        let h_bar = residue(h, &self.f)?;
        let mut acc = vec![ctx.zero(); self.n];
        for j in 0..self.n {
            let mut inner = vec![ctx.zero(); self.n];
            for (i, ci) in c.iter().enumerate().skip(j) {
                let w = word_operator_vector(ctx, i, j, &h_bar)?;
                inner = add_vectors(ctx, &inner, &scale_vector(ctx, ci, &w));
            }
            let nj = ni_matrix(self.t_f.matrix(), j)?;
            acc = add_vectors(ctx, &acc, &nj.left_mul_vector(&inner)?);
        }
        Ok(acc)
    }

    /// `T_f(row)` is a codeword for every generator row.
    pub fn tf_stability(&self) -> Result<bool> {
        for row in self.generator.row_vectors() {
            if !self.is_codeword(&self.t_f.apply(&row)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimum Hamming weight over all nonzero codewords, by enumerating
    /// every message. Refuses when `|A|^k` exceeds [`SEARCH_BUDGET`].
    pub fn min_distance_bruteforce(&self) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::NoNonzeroCodewords);
        }
        let ctx = self.context();
        let size = ctx
            .cardinality()
            .checked_pow(self.k as u32)
            .unwrap_or(u128::MAX);
        if size > SEARCH_BUDGET {
            return Err(Error::BudgetExceeded {
                size,
                budget: SEARCH_BUDGET,
            });
        }
        let q = ctx.cardinality();
        let mut best = usize::MAX;
        for index in 1..size {
            let mut rest = index;
            let msg: Vec<_> = (0..self.k)
                .map(|_| {
                    let e = ctx.element_at(rest % q);
                    rest /= q;
                    e
                })
                .collect();
            let weight = self.encode(&msg)?.iter().filter(|x| !x.is_zero()).count();
            best = best.min(weight);
        }
        Ok(best)
    }
}
