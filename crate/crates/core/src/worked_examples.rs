//! Replays classic worked examples against the library and reports one
//! line per fixture: `PASS|FAIL <name> <detail>`.
//!
//! Printed matrices are transcribed as integer coefficient vectors and
//! reduced in the ring, so `6x` and `x` compare equal over `F_5`. When a
//! transcription disagrees with recomputation the recomputed value wins and
//! the disagreement is listed in the detail as `printed X, oracle Y`.

use std::fmt;
use std::sync::Arc;

use crate::codes::SigmaDeltaCode;
use crate::config::shipped;
use crate::error::Result;
use crate::matrix::{add_vectors, is_zero_vector, Matrix};
use crate::ring::{DeltaKind, RingContext, RingElement, RingKind, SigmaKind};
use crate::search::{factor_search, monic_polys};
use crate::skew::{lclm_linear, ni_value, SkewPoly};
use crate::wedderburn::{
    big_g, big_g0, certify_w_roots, check_theorem_b, factor_swap, is_w_polynomial, orbit_exponent,
    w_control_matrix_corollary, Which,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.name, self.detail)
    }
}

type Outcome = Result<(bool, String)>;

fn run(name: &str, body: impl FnOnce() -> Outcome) -> Fixture {
    let (passed, detail) = body().unwrap_or_else(|e| (false, format!("error: {e}")));
    Fixture {
        name: name.to_string(),
        passed,
        detail,
    }
}

type Check = fn() -> Outcome;

const FIXTURES: &[(&str, Check)] = &[
    ("f4-t4-plus-1-factorizations", f4_factorizations),
    ("f5x-lclm-of-two-roots", f5x_lclm),
    ("f5x-generator-matrix", f5x_generator_matrix),
    ("f5x-cofactor", f5x_cofactor),
    ("f5x-control-matrix", f5x_control_matrix),
    ("f5x-root-census", f5x_root_census),
    ("derivation-square-code", derivation_square_code),
    ("f4-big-g-roots", || big_g_roots("f4")),
    ("f8-big-g-roots", || big_g_roots("f8")),
    ("f4-big-g-minimal", f4_big_g_minimal),
    ("f8-big-g-minimal", f8_big_g_minimal),
    ("f4-semi-invariance", || semi_invariance("f4")),
    ("f8-semi-invariance", || semi_invariance("f8")),
    ("f4-factor-swap", || factor_swaps("f4")),
    ("f8-factor-swap", || factor_swaps("f8")),
    ("f4-w-polynomials", f4_w_polynomials),
    ("f4-cofactor-control", f4_cofactor_control),
    ("tri2-non-inner-derivation", tri2_non_inner),
];

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(name, _)| *name)
}

/// Every fixture, in a fixed order.
pub fn run_all() -> Vec<Fixture> {
    FIXTURES
        .iter()
        .map(|(name, body)| run(name, body))
        .collect()
}

pub fn run_fixture(name: &str) -> Option<Fixture> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, body)| run(n, body))
}

pub fn all_passed(fixtures: &[Fixture]) -> bool {
    fixtures.iter().all(|f| f.passed)
}

fn transcribe(ctx: &RingContext, rows: &[&[&[i64]]]) -> Vec<Vec<RingElement>> {
    rows.iter()
        .map(|row| row.iter().map(|e| ctx.reduce(e.iter().copied())).collect())
        .collect()
}

/// `(i, j) printed X, oracle Y` for every differing entry, 1-based.
fn discrepancies(ctx: &RingContext, printed: &[Vec<RingElement>], oracle: &Matrix) -> Vec<String> {
    let mut out = Vec::new();
    for (i, row) in printed.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if e != oracle.get(i, j) {
                out.push(format!(
                    "({},{}) printed {}, oracle {}",
                    i + 1,
                    j + 1,
                    ctx.pretty(e),
                    ctx.pretty(oracle.get(i, j))
                ));
            }
        }
    }
    out
}

fn flagged(list: &[String]) -> String {
    if list.is_empty() {
        "no discrepancies".to_string()
    } else {
        format!("flagged: {}", list.join("; "))
    }
}

fn f4_factorizations() -> Outcome {
    let f4 = shipped("f4")?;
    let p = |s: &str| SkewPoly::parse(&f4, s);
    let f = p("1;0;0;0;1")?;
    // (h, g) with f = h·g
    let displayed = [
        ("1;0;1", "1;0;1"),
        ("0,1;0,1;1", "1,1;0,1;1"),
        ("1,1;1,1;1", "0,1;1,1;1"),
        ("1,1;0,1;1", "0,1;0,1;1"),
    ];
    let found = factor_search(&f, 2)?;
    let mut products = 0;
    let mut listed = 0;
    for (h, g) in displayed {
        let (h, g) = (p(h)?, p(g)?);
        if h.try_mul(&g)? == f {
            products += 1;
        }
        if found.contains(&(g, h)) {
            listed += 1;
        }
    }
    Ok((
        products == 4 && listed == 4,
        format!(
            "{products}/4 products equal {f}; {listed}/4 among {} quadratic right factors",
            found.len()
        ),
    ))
}

fn f5x_setup() -> Result<(Arc<RingContext>, SkewPoly, SkewPoly)> {
    let q = shipped("f5x")?;
    let f = SkewPoly::parse(&q, "-1;0;0;0;0;1")?;
    let g = SkewPoly::parse(&q, "-1,0,1; 0,-2; 1")?;
    Ok((q, f, g))
}

fn f5x_lclm() -> Outcome {
    let (q, f, g) = f5x_setup()?;
    let roots = [q.generator(), q.parse_element("0,1,0,0,1")?];
    let l = lclm_linear(&q, &roots)?;
    let ok = l == g && f.right_divisible_by(&l)?;
    Ok((ok, format!("lclm(t - x, t - (x + x^4)) = {l}")))
}

fn f5x_generator_matrix() -> Outcome {
    let (q, f, g) = f5x_setup()?;
    let code = SigmaDeltaCode::new(&f, &g)?;
    let printed = transcribe(
        &q,
        &[
            &[&[-1, 0, 1], &[0, -2], &[1], &[0], &[0]],
            &[&[0, 2], &[2, 0, 1], &[0, -2], &[1], &[0]],
            &[&[2], &[0, 4], &[0, 0, 1], &[0, -2], &[1]],
        ],
    );
    let diff = discrepancies(&q, &printed, code.generator_matrix());
    Ok((
        code.dimension() == 3 && diff.is_empty(),
        format!("k = {}, 3x5 matrix {}", code.dimension(), flagged(&diff)),
    ))
}

fn f5x_cofactor() -> Outcome {
    let (q, f, g) = f5x_setup()?;
    let printed = SkewPoly::parse(&q, "0,3,0,4; 2,0,3; 0,2; 1")?;
    let (h_prime, rem) = f.div_right(&g)?;
    let (h, rem_left) = f.div_left(&g)?;
    let ok = rem.is_zero()
        && rem_left.is_zero()
        && h == printed
        && h_prime == printed
        && (&g * &h) == f
        && (&h * &g) == f;
    Ok((ok, format!("h = h' = {h}")))
}

fn f5x_control_matrix() -> Outcome {
    let (q, f, g) = f5x_setup()?;
    let code = SigmaDeltaCode::new(&f, &g)?;
    let h = code.control_matrix()?;
    let printed = transcribe(
        &q,
        &[
            &[&[0, 3, 0, 4], &[2, 0, 3], &[0, 2], &[1], &[0]],
            &[&[3, 0, 2], &[4, 0, 0, 4], &[4, 0, 3], &[0, 2], &[1]],
            &[&[1, 4], &[2, 0, 4], &[0, 0, 0, 4], &[1, 0, 3], &[0, 2]],
            &[&[4, 2], &[1, 2], &[2, 0, 1], &[0, 6, 0, 4], &[3, 0, 3]],
            &[&[0, 0, 3], &[1, 2], &[1, 4], &[3, 0, 3], &[0, 2, 0, 4]],
        ],
    );
    let gh_zero = code.generator_matrix().try_mul(h)?.is_zero();
    let g_bar_zero = is_zero_vector(&h.left_mul_vector(&g.padded(5))?);
    let diff = discrepancies(&q, &printed, h);
    Ok((
        gh_zero && g_bar_zero,
        format!(
            "G·H = 0: {gh_zero}, g·H = 0: {g_bar_zero}; {}",
            flagged(&diff)
        ),
    ))
}

fn f5x_root_census() -> Outcome {
    let (q, f, _) = f5x_setup()?;
    let mut roots = 0;
    let mut mismatches = 0;
    for a in q.elements() {
        let is_root = ni_value(&q, &a, 5) == q.one();
        debug_assert_eq!(is_root, f.eval_right(&a).is_zero());
        let sum: u32 = a.residues()[..4].iter().sum();
        if is_root != (sum % 5 == 1) {
            mismatches += 1;
        }
        roots += usize::from(is_root);
    }
    Ok((
        roots == 625 && mismatches == 0,
        format!(
            "{roots} right roots of {f} among {} elements, {mismatches} violate a0+a1+a2+a3 = 1",
            q.cardinality()
        ),
    ))
}

/// `(t² − a)²` with `g = h = t² − a` over a ring with a derivation.
fn square_code(ctx: &Arc<RingContext>, a: &RingElement) -> Result<(SkewPoly, SigmaDeltaCode)> {
    let g = SkewPoly::monic(ctx, &[ctx.neg(a), ctx.zero()]);
    let f = &g * &g;
    let code = SigmaDeltaCode::new(&f, &g)?;
    Ok((f, code))
}

fn times(ctx: &RingContext, v: &[RingElement], s: &RingElement) -> Vec<RingElement> {
    v.iter().map(|x| ctx.mul(x, s)).collect()
}

fn derivation_square_code() -> Outcome {
    let q = shipped("f5x")?;
    let a = q.generator();
    let da = q.delta(&a);
    let dda = q.delta(&da);
    let (f, code) = square_code(&q, &a)?;
    let mut notes = Vec::new();

    // f = t⁴ − 2at² − 2δ(a)t − δ²(a) + a²
    let expected = SkewPoly::new(
        &q,
        vec![
            q.add(&q.neg(&dda), &q.mul(&a, &a)),
            q.scale(&da, -2),
            q.scale(&a, -2),
            q.zero(),
            q.one(),
        ],
    );
    let expansion_ok = f == expected;

    let h = code.control_matrix()?;
    let gh_equal = code.generator_matrix().row_vectors() == h.row_vectors()[..2].to_vec();
    let neg = |x: &RingElement| q.neg(x);
    let sq = q.mul(&a, &a);
    let printed = vec![
        vec![neg(&a), q.zero(), q.one(), q.zero()],
        vec![neg(&da), neg(&a), q.zero(), q.one()],
        vec![neg(&sq), q.zero(), a.clone(), q.zero()],
        vec![
            q.sub(&q.mul(&a, &da), &q.mul(&da, &a)),
            neg(&sq),
            da.clone(),
            a.clone(),
        ],
    ];
    notes.extend(discrepancies(&q, &printed, h));

    let g_bar_zero = is_zero_vector(&h.left_mul_vector(&code.g().padded(4))?);
    let (h1, h2, h3, h4) = (h.column(0), h.column(1), h.column(2), h.column(3));
    let relation_1 = add_vectors(
        &q,
        &add_vectors(&q, &h1, &times(&q, &h3, &a)),
        &times(&q, &h4, &da),
    );
    let printed_relation_1 = add_vectors(
        &q,
        &add_vectors(&q, &h1, &times(&q, &h3, &neg(&a))),
        &times(&q, &h4, &da),
    );
    let relation_2 = add_vectors(&q, &h2, &times(&q, &h4, &a));
    if !is_zero_vector(&printed_relation_1) {
        notes.push(
            "column relation printed H1 + H3(-a) + H4·δ(a) = 0, oracle H1 + H3·a + H4·δ(a) = 0"
                .into(),
        );
    }
    let relations_ok = is_zero_vector(&relation_1) && is_zero_vector(&relation_2);

    let lann_ok = small_lann_check()?;
    let ok = expansion_ok && gh_equal && g_bar_zero && relations_ok && lann_ok;
    Ok((
        ok,
        format!(
            "a = x: expansion {expansion_ok}, G rows = H rows {gh_equal}, g·H = 0 {g_bar_zero}, \
             column relations {relations_ok}, lann(H3,H4) = lann(H) = C over F2[x]/(x^2+1) {lann_ok}; {}",
            flagged(&notes)
        ),
    ))
}

/// Exhaustive `lann(H) = lann((H₃, H₄)) = C` on `F_2[x]/(x² + 1)` with
/// `d/dx` and `a = x`.
fn small_lann_check() -> Result<bool> {
    let r = RingContext::new(
        RingKind::QuotientRing {
            p: 2,
            modulus: vec![1, 0, 1],
        },
        SigmaKind::Identity,
        DeltaKind::FormalDdx,
    )?;
    let (_, code) = square_code(&r, &r.generator())?;
    let h = code.control_matrix()?;
    let reduced = h.select_columns(&[2, 3]);
    let q = r.cardinality();
    for index in 0..q.pow(4) {
        let mut rest = index;
        let c: Vec<_> = (0..4)
            .map(|_| {
                let e = r.element_at(rest % q);
                rest /= q;
                e
            })
            .collect();
        let full = is_zero_vector(&h.left_mul_vector(&c)?);
        let part = is_zero_vector(&reduced.left_mul_vector(&c)?);
        if full != part || full != code.is_codeword(&c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn big_g_roots(name: &str) -> Outcome {
    let ctx = shipped(name)?;
    let g = big_g(&ctx)?;
    let g0 = big_g0(&ctx)?;
    let all = ctx.elements().all(|a| g.eval_right(&a).is_zero());
    let nonzero = ctx
        .elements()
        .all(|a| g0.eval_right(&a).is_zero() != a.is_zero());
    Ok((
        all && nonzero,
        format!(
            "G = {g} vanishes on all {} elements: {all}; G0 = {g0} exactly on units: {nonzero}",
            ctx.cardinality()
        ),
    ))
}

fn f4_big_g_minimal() -> Outcome {
    let f4 = shipped("f4")?;
    let mut vanishing = 0;
    for d in 0..=2 {
        for p in monic_polys(&f4, d)? {
            if f4.elements().all(|a| p.eval_right(&a).is_zero()) {
                vanishing += 1;
            }
        }
    }
    Ok((
        vanishing == 0,
        format!("{vanishing} monic polynomials of degree <= 2 vanish on F4"),
    ))
}

fn f8_big_g_minimal() -> Outcome {
    let f8 = shipped("f8")?;
    let all: Vec<_> = f8.elements().collect();
    let l = lclm_linear(&f8, &all)?;
    let g = big_g(&f8)?;
    Ok((l == g, format!("lclm of all t - a is {l}")))
}

fn semi_invariance(name: &str) -> Outcome {
    let ctx = shipped(name)?;
    let ok = check_theorem_b(&ctx, 100, 2024)?;
    Ok((
        ok,
        "G·h = θ(h)·G on constants, t and 100 random h; G0 central".to_string(),
    ))
}

fn factor_swaps(name: &str) -> Outcome {
    let ctx = shipped(name)?;
    let mut checked = 0;
    let mut moved = 0;
    for which in [Which::G, Which::G0] {
        let big = match which {
            Which::G => big_g(&ctx)?,
            Which::G0 => big_g0(&ctx)?,
        };
        for (g, h) in factor_search(&big, 1)? {
            let swapped = factor_swap(&g, &h, which)?;
            checked += 1;
            moved += usize::from(swapped != g);
        }
    }
    Ok((
        checked > 0,
        format!("{checked} linear factorizations swapped, {moved} with θ(g) != g"),
    ))
}

fn f4_w_polynomials() -> Outcome {
    let f4 = shipped("f4")?;
    let g = big_g(&f4)?;
    let mut factors = 0;
    let mut certified = 0;
    for d in 0..=3 {
        for cand in monic_polys(&f4, d)? {
            if is_w_polynomial(&cand)? {
                factors += 1;
                if let Some(roots) = certify_w_roots(&cand)? {
                    certified += usize::from(roots.is_empty() || lclm_linear(&f4, &roots)? == cand);
                }
            }
        }
    }
    // every lclm of distinct roots divides G
    let elems: Vec<_> = f4.elements().collect();
    let mut lclms = 0;
    let mut dividing = 0;
    for mask in 1u32..(1 << elems.len()) {
        let set: Vec<_> = (0..elems.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| elems[i].clone())
            .collect();
        let l = lclm_linear(&f4, &set)?;
        lclms += 1;
        dividing += usize::from(g.right_divisible_by(&l)?);
    }
    Ok((
        factors == certified && lclms == dividing,
        format!("{certified}/{factors} right factors of G certified by roots; {dividing}/{lclms} root-set lclms divide G"),
    ))
}

fn f4_cofactor_control() -> Outcome {
    let f4 = shipped("f4")?;
    let alpha = f4.generator();
    let g = SkewPoly::linear(&f4, &alpha);
    let l = orbit_exponent(&g)?;
    let w = w_control_matrix_corollary(&g, Which::G)?;
    let code = SigmaDeltaCode::new(&big_g(&f4)?, &g)?;
    let same = &w.matrix == code.control_matrix()?;
    let g1 = SkewPoly::linear(&f4, &f4.one());
    let w0 = w_control_matrix_corollary(&g1, Which::G0)?;
    let code0 = SigmaDeltaCode::new(&big_g0(&f4)?, &g1)?;
    let same0 = &w0.matrix == code0.control_matrix()?;
    Ok((
        l == 2 && same && same0 && w.cofactors_agree && w0.cofactors_agree,
        format!("orbit exponent of {g} is {l}; cofactor-built matrices match the code control matrices: {same}, {same0}"),
    ))
}

fn tri2_non_inner() -> Outcome {
    let t = shipped("tri2")?;
    let leibniz = t.satisfies_leibniz();
    let witness = t.inner_witness();
    Ok((
        leibniz && witness.is_none(),
        format!(
            "Leibniz rule on all {} pairs: {leibniz}; inner witness: {witness:?}",
            t.cardinality().pow(2)
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_passes() {
        let report = run_all();
        for f in &report {
            assert!(f.passed, "{f}");
        }
        assert_eq!(report.len(), fixture_names().count());
        assert!(run_fixture("nope").is_none());
    }

    #[test]
    fn control_matrix_report_flags_known_entry() {
        let f = run_fixture("f5x-control-matrix").unwrap();
        assert!(
            f.detail
                .contains("(2,2) printed 4x^3 + 4, oracle 4x^3 + 4x"),
            "{}",
            f.detail
        );
    }

    #[test]
    fn report_line_format() {
        let f = Fixture {
            name: "x".into(),
            passed: false,
            detail: "d".into(),
        };
        assert_eq!(f.to_string(), "FAIL x d");
    }
}
