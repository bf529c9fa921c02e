//! Line-oriented `key=value` ring configuration files.
//!
//! ```text
//! kind=extension_field
//! p=2
//! n=2
//! modulus=1,1,1
//! sigma=frobenius^1
//! delta=zero
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::codes::SigmaDeltaCode;
use crate::error::{Error, Result};
use crate::ring::{DeltaKind, RingContext, RingElement, RingKind, SigmaKind};
use crate::skew::SkewPoly;

const SHIPPED: &[(&str, &str)] = &[
    ("f4", include_str!("../../../rings/f4.ring")),
    ("f8", include_str!("../../../rings/f8.ring")),
    ("f5x", include_str!("../../../rings/f5x.ring")),
    ("tri2", include_str!("../../../rings/tri2.ring")),
];

/// One of the rings shipped under `rings/`: `f4`, `f8`, `f5x` or `tri2`.
pub fn shipped(name: &str) -> Result<Arc<RingContext>> {
    let name = name.trim_end_matches(".ring");
    SHIPPED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::InvalidRing(format!("no shipped ring named {name:?}")))
        .and_then(|(_, text)| parse_ring_config(text))
}

/// A ring given either as a path to a config file or as a shipped name.
/// Relative paths are tried against `base` first.
pub fn resolve_ring(spec: &str, base: Option<&Path>) -> Result<Arc<RingContext>> {
    let candidates = base
        .map(|b| b.join(spec))
        .into_iter()
        .chain(std::iter::once(PathBuf::from(spec)));
    for path in candidates {
        if path.is_file() {
            return load_ring_config(&path);
        }
    }
    shipped(spec)
}

/// Parses a code description: `ring`, `f` and `g` keys, the last two as
/// polynomial literals.
///
/// ```text
/// ring=f5x
/// f=-1;0;0;0;0;1
/// g=-1,0,1; 0,-2; 1
/// ```
pub fn parse_code_description(text: &str, base: Option<&Path>) -> Result<SigmaDeltaCode> {
    let map = parse_key_values(text)?;
    let get = |k: &str| {
        map.get(k)
            .map(String::as_str)
            .ok_or_else(|| Error::Parse(format!("code description is missing {k:?}")))
    };
    let ctx = resolve_ring(get("ring")?, base)?;
    let f = SkewPoly::parse(&ctx, get("f")?)?;
    let g = SkewPoly::parse(&ctx, get("g")?)?;
    SigmaDeltaCode::new(&f, &g)
}

pub fn load_code_description(path: &Path) -> Result<SigmaDeltaCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_code_description(&text, path.parent())
}

pub fn load_ring_config(path: &Path) -> Result<Arc<RingContext>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidRing(format!("{}: {e}", path.display())))?;
    parse_ring_config(&text)
}

pub fn parse_key_values(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key=value", lineno + 1)))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn residues(s: &str, p: u32) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map(|c| c.rem_euclid(i64::from(p)) as u32)
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        })
        .collect()
}

pub fn parse_ring_config(text: &str) -> Result<Arc<RingContext>> {
    let map = parse_key_values(text)?;
    let get = |k: &str| {
        map.get(k)
            .map(String::as_str)
            .ok_or_else(|| Error::InvalidRing(format!("missing key {k:?}")))
    };
    let int = |k: &str| -> Result<i64> {
        get(k)?
            .parse::<i64>()
            .map_err(|_| Error::InvalidRing(format!("{k} must be an integer")))
    };

    let p = int("p")?;
    if p < 2 || p > u32::MAX as i64 {
        return Err(Error::InvalidRing(format!("p = {p} out of range")));
    }
    let p = p as u32;
    // negative residues are accepted and reduced mod p
    let modulus = |m: &BTreeMap<String, String>| -> Result<Vec<u32>> {
        let raw = m
            .get("modulus")
            .ok_or_else(|| Error::InvalidRing("missing key \"modulus\"".into()))?;
        residues(raw, p)
    };
    let n = || -> Result<usize> {
        let n = int("n")?;
        if n < 1 {
            return Err(Error::InvalidRing("n must be >= 1".into()));
        }
        Ok(n as usize)
    };

    let kind = match get("kind")? {
        "prime_field" => {
            if map.get("n").is_some_and(|n| n != "1") {
                return Err(Error::InvalidRing("prime_field requires n = 1".into()));
            }
            RingKind::PrimeField { p }
        }
        "extension_field" => RingKind::ExtensionField {
            p,
            n: n()?,
            modulus: modulus(&map)?,
        },
        "quotient_ring" => RingKind::QuotientRing {
            p,
            modulus: modulus(&map)?,
        },
        "triangular_ring" => RingKind::TriangularRing {
            p,
            n: n()?,
            modulus: modulus(&map)?,
        },
        other => return Err(Error::InvalidRing(format!("unknown kind {other:?}"))),
    };

    let sigma = match map.get("sigma").map(String::as_str).unwrap_or("identity") {
        "identity" => SigmaKind::Identity,
        "frobenius" => SigmaKind::FrobeniusPower(1),
        "entrywise_frobenius" => SigmaKind::EntrywiseFrobenius,
        s => match s.strip_prefix("frobenius^") {
            Some(k) => SigmaKind::FrobeniusPower(
                k.parse()
                    .map_err(|_| Error::InvalidRing(format!("bad frobenius power {k:?}")))?,
            ),
            None => return Err(Error::InvalidRing(format!("unknown sigma {s:?}"))),
        },
    };

    let delta = match map.get("delta").map(String::as_str).unwrap_or("zero") {
        "zero" => DeltaKind::Zero,
        "ddx" => DeltaKind::FormalDdx,
        "triangular" => DeltaKind::Triangular,
        d => match d.strip_prefix("inner:") {
            Some(lit) => DeltaKind::Inner(RingElement::from_residues(residues(lit, p)?)),
            None => return Err(Error::InvalidRing(format!("unknown delta {d:?}"))),
        },
    };

    RingContext::new(kind, sigma, delta)
}
