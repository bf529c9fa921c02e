//! Dense univariate polynomials over the prime field F_p.
//!
//! Coefficients are ascending residues in `0..p`; a trimmed vector has no
//! trailing zeros and the zero polynomial is the empty vector. This is the
//! commutative workhorse behind extension fields and quotient rings.

pub(crate) fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn inv_scalar(x: u32, p: u32) -> Option<u32> {
    if x.is_multiple_of(p) {
        return None;
    }
    Some(pow_scalar(x, p - 2, p))
}

pub(crate) fn pow_scalar(base: u32, mut e: u32, p: u32) -> u32 {
    let m = p as u64;
    let mut acc = 1u64 % m;
    let mut b = base as u64 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u32
}

pub(crate) fn add(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn scale(a: &[u32], c: u32, p: u32) -> Vec<u32> {
    trim(
        a.iter()
            .map(|&x| ((x as u64 * c as u64) % p as u64) as u32)
            .collect(),
    )
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let m = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % m;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Euclidean division `a = q*b + r`. `b` must be nonzero (its leading
/// coefficient is a unit because `p` is prime).
pub(crate) fn divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let m = p as u64;
    let lead_inv = inv_scalar(*b.last().unwrap(), p).unwrap() as u64;
    let mut q = vec![0u32; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = (*r.last().unwrap() as u64 * lead_inv % m) as u32;
        q[shift] = c;
        for (j, &y) in b.iter().enumerate() {
            let t = (c as u64 * y as u64) % m;
            r[shift + j] = ((r[shift + j] as u64 + m - t) % m) as u32;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    divrem(a, b, p).1
}

fn make_monic(a: Vec<u32>, p: u32) -> Vec<u32> {
    match a.last() {
        None => a,
        Some(&lead) => scale(&a, inv_scalar(lead, p).unwrap(), p),
    }
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(x, p)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub(crate) fn inv_mod(a: &[u32], m: &[u32], p: u32) -> Option<Vec<u32>> {
    // invariant: s_i * a == r_i (mod m)
    let mut r0 = trim(m.to_vec());
    let mut r1 = rem(a, m, p);
    let mut s0: Vec<u32> = Vec::new();
    let mut s1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = inv_scalar(r0[0], p)?;
    Some(rem(&scale(&s0, c, p), m, p))
}

pub(crate) fn powmod(base: &[u32], mut e: u128, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn derivative(a: &[u32], p: u32) -> Vec<u32> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ((i as u64 % p as u64) * c as u64 % p as u64) as u32)
            .collect(),
    )
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic `m` of degree `n`.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let m = trim(m.to_vec());
    if m.len() < 2 {
        return false;
    }
    let n = m.len() - 1;
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    let q = p as u128;
    let frob = |k: usize| powmod(&x, q.pow(k as u32), &m, p);
    if sub(&frob(n), &x, p) != rem(&[], &m, p) {
        return false;
    }
    prime_factors(n).into_iter().all(|d| {
        let diff = sub(&frob(n / d), &x, p);
        gcd(&diff, &m, p) == vec![1]
    })
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}
