//! Ore extensions `A[t; σ, δ]` over finite rings and the cyclic
//! `(f, σ, δ)`-codes they define.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: finite coefficient rings with an endomorphism `σ` and a
//!   `σ`-derivation `δ`,
//! * [`skew`]: skew polynomial arithmetic, two-sided division, right
//!   evaluation and least left common multiples of linear factors,
//! * [`plt`]: pseudo-linear transformations and the module `R/Rf ≅ Aⁿ`,
//! * [`codes`]: generator and control matrices, encoding and membership,
//! * [`wedderburn`]: Wedderburn polynomials, Vandermonde control matrices
//!   and the structure of `F_q[t; θ]`,
//! * [`search`]: bounded exhaustive factor searches,
//! * [`worked_examples`]: a replay suite of classic worked examples.
//!
//! ```
//! use sdcodes::{config, SkewPoly};
//!
//! let f4 = config::shipped("f4").unwrap();
//! let a = f4.generator();
//! let left = SkewPoly::monic(&f4, &[a.clone(), a.clone()]);
//! let right = SkewPoly::monic(&f4, &[f4.mul(&a, &a), a]);
//! assert_eq!((&left * &right).to_string(), "t^4 + 1");
//! ```

pub mod codes;
pub mod config;
pub mod error;
mod fp_poly;
pub mod matrix;
pub mod plt;
pub mod ring;
pub mod search;
pub mod skew;
pub mod wedderburn;
pub mod worked_examples;

pub use codes::SigmaDeltaCode;
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use plt::PseudoLinearMap;
pub use ring::{DeltaKind, RingContext, RingElement, RingKind, RingOp, SigmaKind};
pub use skew::SkewPoly;

// The guide under book/ is compiled as doc-tests so its snippets stay in
// sync with the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/rings.md")]
    pub struct Rings;
    #[doc = include_str!("../../../book/src/skew_polynomials.md")]
    pub struct SkewPolynomials;
    #[doc = include_str!("../../../book/src/pseudo_linear.md")]
    pub struct PseudoLinear;
    #[doc = include_str!("../../../book/src/codes.md")]
    pub struct Codes;
    #[doc = include_str!("../../../book/src/wedderburn.md")]
    pub struct Wedderburn;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
