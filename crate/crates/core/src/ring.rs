//! Finite coefficient rings `A` together with an endomorphism `σ` and a
//! `σ`-derivation `δ`.
//!
//! Four families are supported:
//!
//! * `F_p`,
//! * `F_{p^n} = F_p[α]/(m)` for a monic irreducible `m`,
//! * `F_p[x]/(m)` for any monic `m` (zero divisors allowed),
//! * the triangular ring `{[[a, b], [0, a]] : a ∈ F_p, b ∈ F_{p^n}}`.
//!
//! Elements are canonical coefficient vectors of residues mod `p`. For the
//! field and quotient families the vector is ascending in the generator and
//! has exactly `deg m` entries. A triangular element `[[a, b], [0, a]]` is
//! stored as `[a, b_0, …, b_{n-1}]`.
//!
//! Every supported `σ` and `δ` is `F_p`-linear, so both are tabulated on the
//! `F_p`-basis once at construction and applied by a matrix–vector product.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::fp_poly;

/// Canonical representation of an element of a [`RingContext`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement(Vec<u32>);

impl RingElement {
    /// Wraps raw residues. The vector is only canonical once it has gone
    /// through [`RingContext::reduce`]; contexts reject foreign elements.
    pub fn from_residues(residues: Vec<u32>) -> Self {
        RingElement(residues)
    }

    pub fn residues(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    PrimeField { p: u32 },
    ExtensionField { p: u32, n: usize, modulus: Vec<u32> },
    QuotientRing { p: u32, modulus: Vec<u32> },
    TriangularRing { p: u32, n: usize, modulus: Vec<u32> },
}

impl RingKind {
    pub fn characteristic(&self) -> u32 {
        match *self {
            RingKind::PrimeField { p }
            | RingKind::ExtensionField { p, .. }
            | RingKind::QuotientRing { p, .. }
            | RingKind::TriangularRing { p, .. } => p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SigmaKind {
    Identity,
    /// `x ↦ x^(p^k)`.
    FrobeniusPower(u32),
    /// Frobenius applied to both entries of a triangular matrix.
    EntrywiseFrobenius,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DeltaKind {
    Zero,
    /// Formal `d/dx` on `F_p[x]/(m)`; requires `m' ≡ 0 (mod m)`.
    FormalDdx,
    /// The inner derivation `r ↦ c·r − σ(r)·c`.
    Inner(RingElement),
    /// `[[a, b], [0, a]] ↦ [[0, σ(b)], [0, 0]]`.
    Triangular,
}

/// Ring operations accepted by [`RingContext::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// A finite ring `A` with its `σ` and `δ`. Immutable once built.
#[derive(Debug, PartialEq, Eq)]
pub struct RingContext {
    kind: RingKind,
    sigma: SigmaKind,
    delta: DeltaKind,
    p: u32,
    width: usize,
    // modulus of the field/quotient part; `[0, 1]` for F_p
    modulus: Vec<u32>,
    sigma_table: Vec<Vec<u32>>,
    delta_table: Vec<Vec<u32>>,
    sigma_order: Option<usize>,
}

impl RingContext {
    pub fn new(kind: RingKind, sigma: SigmaKind, delta: DeltaKind) -> Result<Arc<Self>> {
        let p = kind.characteristic();
        if !fp_poly::is_prime(p) {
            return Err(Error::InvalidRing(format!("p = {p} is not prime")));
        }
        let (width, modulus) = match &kind {
            RingKind::PrimeField { .. } => (1, vec![0, 1]),
            RingKind::ExtensionField { n, modulus, .. }
            | RingKind::TriangularRing { n, modulus, .. } => {
                let m = check_monic(modulus, p)?;
                if m.len() != n + 1 {
                    return Err(Error::InvalidRing(format!(
                        "modulus has degree {}, expected n = {n}",
                        m.len() - 1
                    )));
                }
                if !fp_poly::is_irreducible(&m, p) {
                    return Err(Error::InvalidRing("modulus is not irreducible".into()));
                }
                let width = if matches!(kind, RingKind::TriangularRing { .. }) {
                    n + 1
                } else {
                    *n
                };
                (width, m)
            }
            RingKind::QuotientRing { modulus, .. } => {
                let m = check_monic(modulus, p)?;
                if m.len() < 2 {
                    return Err(Error::InvalidRing("modulus must have degree >= 1".into()));
                }
                (m.len() - 1, m)
            }
        };

        let triangular = matches!(kind, RingKind::TriangularRing { .. });
        match (&sigma, &kind) {
            (SigmaKind::Identity, _) => {}
            (SigmaKind::FrobeniusPower(_), RingKind::PrimeField { .. })
            | (SigmaKind::FrobeniusPower(_), RingKind::ExtensionField { .. }) => {}
            (SigmaKind::EntrywiseFrobenius, RingKind::TriangularRing { .. }) => {}
            (s, _) => {
                return Err(Error::InvalidRing(format!(
                    "sigma {s:?} is not available on this ring kind"
                )))
            }
        }
        match &delta {
            DeltaKind::Zero | DeltaKind::Inner(_) => {}
            DeltaKind::FormalDdx => {
                if !matches!(kind, RingKind::QuotientRing { .. }) || sigma != SigmaKind::Identity {
                    return Err(Error::InvalidRing(
                        "ddx requires a quotient ring with identity sigma".into(),
                    ));
                }
                let dm = fp_poly::derivative(&modulus, p);
                if !fp_poly::rem(&dm, &modulus, p).is_empty() {
                    return Err(Error::InvalidRing(
                        "d/dx is not well defined: m' is not divisible by m".into(),
                    ));
                }
            }
            DeltaKind::Triangular => {
                if !triangular || sigma != SigmaKind::EntrywiseFrobenius {
                    return Err(Error::InvalidRing(
                        "triangular delta requires a triangular ring with entrywise_frobenius"
                            .into(),
                    ));
                }
            }
        }
        if matches!(kind, RingKind::QuotientRing { .. }) && sigma != SigmaKind::Identity {
            return Err(Error::InvalidRing(
                "quotient rings only support identity sigma".into(),
            ));
        }

        let mut ctx = RingContext {
            kind,
            sigma,
            delta: DeltaKind::Zero,
            p,
            width,
            modulus,
            sigma_table: Vec::new(),
            delta_table: Vec::new(),
            sigma_order: None,
        };
        ctx.sigma_table = (0..width).map(|j| ctx.sigma_of_basis(j)).collect();
        ctx.sigma_order = ctx.find_sigma_order();

        let delta = match delta {
            DeltaKind::Inner(c) => DeltaKind::Inner(ctx.reduce(c.0.iter().map(|&r| r as i64))),
            d => d,
        };
        ctx.delta = delta;
        ctx.delta_table = (0..width).map(|j| ctx.delta_of_basis(j)).collect();
        Ok(Arc::new(ctx))
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn sigma_kind(&self) -> &SigmaKind {
        &self.sigma
    }

    pub fn delta_kind(&self) -> &DeltaKind {
        &self.delta
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Number of residues in a canonical element.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn cardinality(&self) -> u128 {
        (self.p as u128).pow(self.width as u32)
    }

    pub fn is_field(&self) -> bool {
        matches!(
            self.kind,
            RingKind::PrimeField { .. } | RingKind::ExtensionField { .. }
        )
    }

    pub fn has_zero_delta(&self) -> bool {
        self.delta_table.iter().all(|v| v.iter().all(|&c| c == 0))
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![0; self.width])
    }

    pub fn one(&self) -> RingElement {
        let mut v = vec![0; self.width];
        v[0] = 1;
        RingElement(v)
    }

    /// `α` (extension field), `x` (quotient ring), `[[0, 1], [0, 0]]`
    /// (triangular ring) or `1` (prime field).
    pub fn generator(&self) -> RingElement {
        let mut v = vec![0; self.width];
        v[if self.width > 1 { 1 } else { 0 }] = 1;
        RingElement(v)
    }

    pub fn from_int(&self, k: i64) -> RingElement {
        self.reduce([k])
    }

    /// Reduces arbitrary integer residues to canonical form. For field and
    /// quotient kinds surplus entries are reduced modulo the ring modulus.
    pub fn reduce<I: IntoIterator<Item = i64>>(&self, residues: I) -> RingElement {
        let p = self.p as i64;
        let raw: Vec<u32> = residues
            .into_iter()
            .map(|c| c.rem_euclid(p) as u32)
            .collect();
        match self.kind {
            RingKind::TriangularRing { .. } => {
                let a = raw.first().copied().unwrap_or(0);
                let b = if raw.len() > 1 { &raw[1..] } else { &[][..] };
                let b = fp_poly::rem(b, &self.modulus, self.p);
                let mut v = vec![a];
                v.extend(self.pad(b, self.width - 1));
                RingElement(v)
            }
            _ => RingElement(self.pad(fp_poly::rem(&raw, &self.modulus, self.p), self.width)),
        }
    }

    fn pad(&self, mut v: Vec<u32>, len: usize) -> Vec<u32> {
        v.resize(len, 0);
        v
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        x.0.len() == self.width && x.0.iter().all(|&c| c < self.p)
    }

    fn check(&self, x: &RingElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Checked entry point for the four ring operations.
    pub fn arith(
        &self,
        op: RingOp,
        x: &RingElement,
        y: Option<&RingElement>,
    ) -> Result<RingElement> {
        self.check(x)?;
        if op == RingOp::Neg {
            return Ok(self.neg(x));
        }
        let y = y.ok_or_else(|| Error::Precondition(format!("{op:?} needs two operands")))?;
        self.check(y)?;
        Ok(match op {
            RingOp::Add => self.add(x, y),
            RingOp::Sub => self.sub(x, y),
            RingOp::Mul => self.mul(x, y),
            RingOp::Neg => unreachable!(),
        })
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> RingElement {
        debug_assert!(self.contains(x) && self.contains(y));
        let p = self.p;
        RingElement(x.0.iter().zip(&y.0).map(|(&a, &b)| (a + b) % p).collect())
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> RingElement {
        debug_assert!(self.contains(x) && self.contains(y));
        let p = self.p;
        RingElement(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| (a + p - b) % p)
                .collect(),
        )
    }

    pub fn neg(&self, x: &RingElement) -> RingElement {
        let p = self.p;
        RingElement(x.0.iter().map(|&a| (p - a) % p).collect())
    }

    /// Multiplication by an integer (repeated addition).
    pub fn scale(&self, x: &RingElement, k: i64) -> RingElement {
        let p = self.p as u64;
        let k = k.rem_euclid(self.p as i64) as u64;
        RingElement(x.0.iter().map(|&a| (a as u64 * k % p) as u32).collect())
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        debug_assert!(self.contains(x) && self.contains(y));
        match self.kind {
            RingKind::TriangularRing { .. } => {
                let p = self.p as u64;
                let (a, b) = (x.0[0], &x.0[1..]);
                let (c, d) = (y.0[0], &y.0[1..]);
                let ac = (a as u64 * c as u64 % p) as u32;
                let ad = fp_poly::scale(d, a, self.p);
                let bc = fp_poly::scale(b, c, self.p);
                let mut v = vec![ac];
                v.extend(self.pad(fp_poly::add(&ad, &bc, self.p), self.width - 1));
                RingElement(v)
            }
            _ => {
                let prod = fp_poly::mul(&x.0, &y.0, self.p);
                RingElement(self.pad(fp_poly::rem(&prod, &self.modulus, self.p), self.width))
            }
        }
    }

    pub fn pow(&self, x: &RingElement, mut e: u64) -> RingElement {
        let mut acc = self.one();
        let mut b = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// Two-sided inverse, or `None` for a non-unit.
    pub fn invert(&self, x: &RingElement) -> Option<RingElement> {
        match self.kind {
            RingKind::TriangularRing { .. } => {
                let a_inv = fp_poly::inv_scalar(x.0[0], self.p)?;
                let a_inv2 = (a_inv as u64 * a_inv as u64 % self.p as u64) as u32;
                let b = fp_poly::scale(&x.0[1..], (self.p - a_inv2) % self.p, self.p);
                let mut v = vec![a_inv];
                v.extend(self.pad(b, self.width - 1));
                Some(RingElement(v))
            }
            _ => {
                let inv = fp_poly::inv_mod(&x.0, &self.modulus, self.p)?;
                Some(RingElement(self.pad(inv, self.width)))
            }
        }
    }

    pub fn is_unit(&self, x: &RingElement) -> bool {
        self.invert(x).is_some()
    }

    fn basis(&self, j: usize) -> Vec<u32> {
        let mut v = vec![0; self.width];
        v[j] = 1;
        v
    }

    fn frobenius_power_poly(&self, j: usize, k: u32) -> Vec<u32> {
        // α^j ↦ α^(j p^k)
        let e = (j as u128) * (self.p as u128).pow(k);
        fp_poly::powmod(&[0, 1], e, &self.modulus, self.p)
    }

    fn sigma_of_basis(&self, j: usize) -> Vec<u32> {
        match (&self.sigma, &self.kind) {
            (SigmaKind::Identity, _) => self.basis(j),
            (SigmaKind::FrobeniusPower(_), RingKind::PrimeField { .. }) => self.basis(j),
            (SigmaKind::FrobeniusPower(k), _) => {
                self.pad(self.frobenius_power_poly(j, *k), self.width)
            }
            (SigmaKind::EntrywiseFrobenius, _) => {
                if j == 0 {
                    self.basis(0)
                } else {
                    let mut v = vec![0];
                    v.extend(self.pad(self.frobenius_power_poly(j - 1, 1), self.width - 1));
                    v
                }
            }
        }
    }

    fn delta_of_basis(&self, j: usize) -> Vec<u32> {
        let e = RingElement(self.basis(j));
        match &self.delta {
            DeltaKind::Zero => vec![0; self.width],
            DeltaKind::FormalDdx => {
                let d = fp_poly::derivative(&e.0, self.p);
                self.pad(fp_poly::rem(&d, &self.modulus, self.p), self.width)
            }
            DeltaKind::Inner(c) => {
                let cr = self.mul(c, &e);
                let sc = self.mul(&self.sigma(&e), c);
                self.sub(&cr, &sc).0
            }
            DeltaKind::Triangular => {
                let s = self.sigma(&e);
                let mut v = s.0;
                v[0] = 0;
                v
            }
        }
    }

    fn apply_table(&self, table: &[Vec<u32>], x: &RingElement) -> RingElement {
        let p = self.p as u64;
        let mut out = vec![0u64; self.width];
        for (&c, image) in x.0.iter().zip(table) {
            if c == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(image) {
                *o = (*o + c as u64 * v as u64) % p;
            }
        }
        RingElement(out.into_iter().map(|c| c as u32).collect())
    }

    pub fn sigma(&self, x: &RingElement) -> RingElement {
        self.apply_table(&self.sigma_table, x)
    }

    pub fn delta(&self, x: &RingElement) -> RingElement {
        self.apply_table(&self.delta_table, x)
    }

    pub fn sigma_pow(&self, x: &RingElement, k: usize) -> RingElement {
        let k = match self.sigma_order {
            Some(ord) => k % ord,
            None => k,
        };
        (0..k).fold(x.clone(), |acc, _| self.sigma(&acc))
    }

    fn find_sigma_order(&self) -> Option<usize> {
        let cap = 4 * self.width.max(1) * (self.p as usize).max(2);
        let mut images: Vec<RingElement> = (0..self.width)
            .map(|j| RingElement(self.basis(j)))
            .collect();
        for k in 1..=cap {
            images = images.iter().map(|v| self.sigma(v)).collect();
            if images.iter().enumerate().all(|(j, v)| v.0 == self.basis(j)) {
                return Some(k);
            }
        }
        None
    }

    /// Smallest `k ≥ 1` with `σ^k = id`, or `None` when `σ` is not bijective.
    pub fn sigma_order(&self) -> Option<usize> {
        self.sigma_order
    }

    pub fn sigma_is_invertible(&self) -> bool {
        self.sigma_order.is_some()
    }

    pub fn sigma_inverse(&self, x: &RingElement) -> Option<RingElement> {
        let ord = self.sigma_order?;
        Some(self.sigma_pow(x, ord - 1))
    }

    /// `δ(ab) = σ(a)δ(b) + δ(a)b` for every pair. Quadratic in `|A|`.
    pub fn satisfies_leibniz(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                let lhs = self.delta(&self.mul(&a, &b));
                let rhs = self.add(
                    &self.mul(&self.sigma(&a), &self.delta(&b)),
                    &self.mul(&self.delta(&a), &b),
                );
                lhs == rhs
            })
        })
    }

    /// Some `m` with `δ(r) = m·r − σ(r)·m` for every `r`, if one exists.
    pub fn inner_witness(&self) -> Option<RingElement> {
        self.elements().find(|m| {
            self.elements().all(|r| {
                self.delta(&r) == self.sub(&self.mul(m, &r), &self.mul(&self.sigma(&r), m))
            })
        })
    }

    /// The element with the given index in lexicographic order of canonical
    /// coefficient vectors.
    pub fn element_at(&self, mut index: u128) -> RingElement {
        let p = self.p as u128;
        let mut v = vec![0u32; self.width];
        for slot in v.iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
        RingElement(v)
    }

    /// Every element exactly once, lexicographically ordered.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.cardinality()).map(move |i| self.element_at(i))
    }

    pub fn units(&self) -> impl Iterator<Item = RingElement> + '_ {
        self.elements().filter(move |x| self.is_unit(x))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> RingElement {
        RingElement((0..self.width).map(|_| rng.gen_range(0..self.p)).collect())
    }

    /// Parses a comma-separated literal of ascending residues, e.g. `"0,1"`.
    pub fn parse_element(&self, s: &str) -> Result<RingElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty element literal".into()));
        }
        let residues = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad residue {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if matches!(self.kind, RingKind::TriangularRing { .. }) && residues.len() > self.width {
            return Err(Error::Parse(format!(
                "triangular element takes at most {} residues",
                self.width
            )));
        }
        Ok(self.reduce(residues))
    }

    /// Inverse of [`Self::parse_element`] on canonical forms: trailing zeros
    /// are dropped and zero prints as `0`.
    pub fn format_element(&self, x: &RingElement) -> String {
        let end = x.0.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
        x.0[..end]
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Human-readable form such as `4x^3 + 3x` or `a + 1`.
    pub fn pretty(&self, x: &RingElement) -> String {
        match self.kind {
            RingKind::PrimeField { .. } => x.0[0].to_string(),
            RingKind::ExtensionField { .. } => pretty_poly(&x.0, "a"),
            RingKind::QuotientRing { .. } => pretty_poly(&x.0, "x"),
            RingKind::TriangularRing { .. } => {
                format!("({}, {})", x.0[0], pretty_poly(&x.0[1..], "a"))
            }
        }
    }
}

fn check_monic(modulus: &[u32], p: u32) -> Result<Vec<u32>> {
    let m = fp_poly::trim(modulus.iter().map(|c| c % p).collect());
    if m.last() != Some(&1) {
        return Err(Error::InvalidRing("modulus must be monic".into()));
    }
    Ok(m)
}

pub(crate) fn pretty_poly(coeffs: &[u32], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Arc<RingContext> {
        RingContext::new(
            RingKind::ExtensionField {
                p: 2,
                n: 2,
                modulus: vec![1, 1, 1],
            },
            SigmaKind::FrobeniusPower(1),
            DeltaKind::Zero,
        )
        .unwrap()
    }

    fn f5x() -> Arc<RingContext> {
        RingContext::new(
            RingKind::QuotientRing {
                p: 5,
                modulus: vec![4, 0, 0, 0, 0, 1],
            },
            SigmaKind::Identity,
            DeltaKind::FormalDdx,
        )
        .unwrap()
    }

    fn tri2() -> Arc<RingContext> {
        RingContext::new(
            RingKind::TriangularRing {
                p: 2,
                n: 2,
                modulus: vec![1, 1, 1],
            },
            SigmaKind::EntrywiseFrobenius,
            DeltaKind::Triangular,
        )
        .unwrap()
    }

    #[test]
    fn alpha_squared_is_alpha_plus_one() {
        let r = f4();
        let a = r.generator();
        assert_eq!(r.mul(&a, &a), r.reduce([1, 1]));
        assert_eq!(r.arith(RingOp::Mul, &a, Some(&r.one())).unwrap(), a);
    }

    #[test]
    fn x4_times_x_is_one() {
        let r = f5x();
        let x4 = r.reduce([0, 0, 0, 0, 1]);
        assert_eq!(r.mul(&x4, &r.generator()), r.one());
    }

    #[test]
    fn arith_rejects_foreign_elements() {
        let r = f4();
        let foreign = f5x().generator();
        assert_eq!(
            r.arith(RingOp::Add, &r.one(), Some(&foreign)),
            Err(Error::ContextMismatch)
        );
        assert!(r.arith(RingOp::Add, &r.one(), None).is_err());
    }

    #[test]
    fn inversion() {
        let r = f4();
        let a = r.generator();
        assert_eq!(r.invert(&a), Some(r.mul(&a, &a)));
        assert_eq!(r.invert(&r.zero()), None);

        let q = f5x();
        assert_eq!(q.invert(&q.reduce([0, 0, 0, 0, 1])), Some(q.generator()));
        assert_eq!(q.invert(&q.reduce([-1, 1])), None);
    }

    #[test]
    fn sigma_and_delta_examples() {
        let r = f4();
        assert_eq!(r.sigma(&r.generator()), r.reduce([1, 1]));

        let t = tri2();
        let alpha_entry = t.reduce([1, 0, 1]);
        // σ((1, α)) = (1, α²) and δ((1, α)) = (0, α²), α² = α + 1
        assert_eq!(t.sigma(&alpha_entry), t.reduce([1, 1, 1]));
        assert_eq!(t.delta(&alpha_entry), t.reduce([0, 1, 1]));

        let q = f5x();
        assert_eq!(q.delta(&q.reduce([0, 0, 0, 0, 1])), q.reduce([0, 0, 0, 4]));
        let z = RingContext::new(
            RingKind::PrimeField { p: 3 },
            SigmaKind::Identity,
            DeltaKind::Zero,
        )
        .unwrap();
        assert!(z.delta(&z.one()).is_zero());
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(f4().elements().count(), 4);
        assert_eq!(f5x().elements().count(), 3125);
        assert_eq!(tri2().elements().count(), 8);
        let all: Vec<_> = f4().elements().collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn sigma_orders() {
        assert_eq!(f4().sigma_order(), Some(2));
        assert_eq!(f5x().sigma_order(), Some(1));
        assert_eq!(tri2().sigma_order(), Some(2));
        let r = f4();
        let a = r.generator();
        assert_eq!(r.sigma_inverse(&r.sigma(&a)), Some(a));
    }

    #[test]
    fn invalid_configurations() {
        let reducible = RingContext::new(
            RingKind::ExtensionField {
                p: 2,
                n: 2,
                modulus: vec![1, 0, 1],
            },
            SigmaKind::Identity,
            DeltaKind::Zero,
        );
        assert!(reducible.is_err());
        let not_prime = RingContext::new(
            RingKind::PrimeField { p: 4 },
            SigmaKind::Identity,
            DeltaKind::Zero,
        );
        assert!(not_prime.is_err());
        let ddx_on_field = RingContext::new(
            RingKind::ExtensionField {
                p: 2,
                n: 2,
                modulus: vec![1, 1, 1],
            },
            SigmaKind::Identity,
            DeltaKind::FormalDdx,
        );
        assert!(ddx_on_field.is_err());
        // x^2 + 1 over F_3: m' = 2x is not a multiple of m
        let bad_ddx = RingContext::new(
            RingKind::QuotientRing {
                p: 3,
                modulus: vec![1, 0, 1],
            },
            SigmaKind::Identity,
            DeltaKind::FormalDdx,
        );
        assert!(bad_ddx.is_err());
        let frob_on_quotient = RingContext::new(
            RingKind::QuotientRing {
                p: 5,
                modulus: vec![4, 0, 0, 0, 0, 1],
            },
            SigmaKind::FrobeniusPower(1),
            DeltaKind::Zero,
        );
        assert!(frob_on_quotient.is_err());
    }

    #[test]
    fn literals_round_trip() {
        let q = f5x();
        let x = q.parse_element("0,4,0,0,0").unwrap();
        assert_eq!(q.format_element(&x), "0,4");
        assert_eq!(q.parse_element(&q.format_element(&x)).unwrap(), x);
        assert_eq!(q.format_element(&q.zero()), "0");
        // x^5 reduces to 1
        assert_eq!(q.parse_element("0,0,0,0,0,1").unwrap(), q.one());
        assert_eq!(q.parse_element("-1").unwrap(), q.from_int(4));
        assert!(q.parse_element("").is_err());
        assert!(q.parse_element("1,y").is_err());
        assert_eq!(q.pretty(&q.reduce([0, 3, 0, 4])), "4x^3 + 3x");
    }

    #[test]
    fn leibniz_and_inner_witnesses() {
        let t = tri2();
        assert!(t.satisfies_leibniz());
        assert_eq!(t.inner_witness(), None);

        let r = f4();
        assert_eq!(r.inner_witness(), Some(r.zero()));
        let a = r.generator();
        let inner = RingContext::new(
            RingKind::ExtensionField {
                p: 2,
                n: 2,
                modulus: vec![1, 1, 1],
            },
            SigmaKind::FrobeniusPower(1),
            DeltaKind::Inner(a.clone()),
        )
        .unwrap();
        assert!(inner.satisfies_leibniz());
        // c = α is central with c − σ(c) = 1 a unit, so δ is inner
        assert_eq!(inner.inner_witness(), Some(a));
    }
}
