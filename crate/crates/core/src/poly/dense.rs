//! Slice-level polynomial kernels over a [`Field`].
//!
//! Coefficients are low-to-high and trimmed (no trailing zeros); the empty
//! vector is the zero polynomial. Moduli passed to the `*mod` routines must
//! be monic.

use crate::field::{prime_factors, Field, FieldElem};

pub type Coeffs = Vec<FieldElem>;

#[inline]
pub fn trim(v: &mut Coeffs) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

#[inline]
pub fn degree(a: &[FieldElem]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn x(f: &Field) -> Coeffs {
    vec![f.zero(), f.one()]
}

pub fn add(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Coeffs {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    trim(&mut out);
    out
}

pub fn sub(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Coeffs {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), f.zero());
    }
    for (o, &s) in out.iter_mut().zip(b) {
        *o = f.sub(*o, s);
    }
    trim(&mut out);
    out
}

pub fn neg(f: &Field, a: &[FieldElem]) -> Coeffs {
    a.iter().map(|&c| f.neg(c)).collect()
}

pub fn scale(f: &Field, a: &[FieldElem], c: FieldElem) -> Coeffs {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|&x| f.mul(x, c)).collect()
}

pub fn mul(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a.len() + b.len() - 1;
    if let Some(p) = f.small_prime() {
        // products stay below 2^32, so a u64 accumulator never overflows here
        let mut acc = vec![0u64; n];
        for (i, &x) in a.iter().enumerate() {
            if x.0 == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += x.0 * y.0;
            }
        }
        let mut out: Coeffs = acc.into_iter().map(|v| FieldElem(v % p)).collect();
        trim(&mut out);
        return out;
    }
    let mut out = vec![f.zero(); n];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

pub fn monic(f: &Field, a: &[FieldElem]) -> Coeffs {
    match a.last() {
        None => Vec::new(),
        Some(&lc) if lc == f.one() => a.to_vec(),
        Some(&lc) => scale(f, a, f.inv(lc).expect("trimmed leading coefficient")),
    }
}

/// Reduces `a` modulo the monic `m` in place.
pub fn rem_monic_in_place(f: &Field, a: &mut Coeffs, m: &[FieldElem]) {
    let dm = m.len() - 1;
    if a.len() <= dm {
        trim(a);
        return;
    }
    for i in (dm..a.len()).rev() {
        let c = a[i];
        if c.is_zero() {
            continue;
        }
        let base = i - dm;
        for (j, &mj) in m[..dm].iter().enumerate() {
            if !mj.is_zero() {
                a[base + j] = f.sub(a[base + j], f.mul(c, mj));
            }
        }
    }
    a.truncate(dm);
    trim(a);
}

/// Quotient and remainder; `b` must be nonzero.
pub fn div_rem(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> (Coeffs, Coeffs) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let inv_lc = f.inv(b[db]).expect("nonzero divisor");
    let mut r = a.to_vec();
    let mut quo = vec![f.zero(); a.len() - db];
    for i in (db..a.len()).rev() {
        let c = f.mul(r[i], inv_lc);
        quo[i - db] = c;
        if c.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bj));
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut quo);
    (quo, r)
}

pub fn rem(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Coeffs {
    div_rem(f, a, b).1
}

pub fn mulmod(f: &Field, a: &[FieldElem], b: &[FieldElem], m: &[FieldElem]) -> Coeffs {
    let mut prod = mul(f, a, b);
    rem_monic_in_place(f, &mut prod, m);
    prod
}

pub fn powmod(f: &Field, base: &[FieldElem], e: u64, m: &[FieldElem]) -> Coeffs {
    powmod_u128(f, base, e as u128, m)
}

pub fn powmod_u128(f: &Field, base: &[FieldElem], e: u128, m: &[FieldElem]) -> Coeffs {
    let mut b = base.to_vec();
    rem_monic_in_place(f, &mut b, m);
    let mut acc = vec![f.one()];
    rem_monic_in_place(f, &mut acc, m);
    for i in (0..128 - e.leading_zeros()).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if (e >> i) & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
    }
    acc
}

/// Monic gcd; zero when both inputs are zero.
pub fn gcd(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Coeffs {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let r = rem(f, &r0, &r1);
        r0 = r1;
        r1 = r;
    }
    monic(f, &r0)
}

pub fn derivative(f: &Field, a: &[FieldElem]) -> Coeffs {
    let mut out: Coeffs = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(c, f.from_int(i as u64)))
        .collect();
    trim(&mut out);
    out
}

/// `outer(inner)` by Horner's rule.
pub fn compose(f: &Field, outer: &[FieldElem], inner: &[FieldElem]) -> Coeffs {
    let mut acc: Coeffs = Vec::new();
    for &c in outer.iter().rev() {
        acc = mul(f, &acc, inner);
        if acc.is_empty() {
            acc.push(c);
        } else {
            acc[0] = f.add(acc[0], c);
        }
        trim(&mut acc);
    }
    acc
}

pub fn eval(f: &Field, a: &[FieldElem], x: FieldElem) -> FieldElem {
    a.iter()
        .rev()
        .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
}

/// The `q`-power Frobenius on `F_q[x]/(m)`, as the matrix whose row `i` is
/// `x^(q i) mod m`. Applying it costs one vector-matrix product.
pub struct FrobeniusMap {
    rows: Vec<Coeffs>,
    xq: Coeffs,
    dim: usize,
}

impl FrobeniusMap {
    pub fn new(f: &Field, m: &[FieldElem]) -> Self {
        let dim = m.len() - 1;
        let xq = powmod(f, &x(f), f.order(), m);
        let mut rows = Vec::with_capacity(dim);
        let mut cur = vec![f.one()];
        for i in 0..dim {
            if i > 0 {
                cur = mulmod(f, &cur, &xq, m);
            }
            rows.push(cur.clone());
        }
        FrobeniusMap { rows, xq, dim }
    }

    /// `x^q mod m`.
    pub fn x_q(&self) -> &[FieldElem] {
        &self.xq
    }

    /// `a^q mod m` for `a` already reduced mod `m`.
    pub fn apply(&self, f: &Field, a: &[FieldElem]) -> Coeffs {
        if let Some(p) = f.small_prime() {
            let mut acc = vec![0u64; self.dim];
            for (&c, row) in a.iter().zip(&self.rows) {
                if c.0 == 0 {
                    continue;
                }
                for (o, &r) in acc.iter_mut().zip(row) {
                    *o += c.0 * r.0;
                }
            }
            let mut out: Coeffs = acc.into_iter().map(|v| FieldElem(v % p)).collect();
            trim(&mut out);
            return out;
        }
        let mut out = vec![f.zero(); self.dim];
        for (&c, row) in a.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, r));
            }
        }
        trim(&mut out);
        out
    }
}

/// Rabin's irreducibility test. `a` must have degree at least 1.
pub fn is_irreducible(f: &Field, a: &[FieldElem]) -> bool {
    let n = a.len() - 1;
    if n == 1 {
        return true;
    }
    let m = monic(f, a);
    let xs = x(f);
    let mut checkpoints: Vec<usize> = prime_factors(n as u64)
        .into_iter()
        .map(|l| n / l as usize)
        .collect();
    checkpoints.sort_unstable();
    let frob = FrobeniusMap::new(f, &m);
    let mut cur = frob.x_q().to_vec();
    let mut next = checkpoints.iter().peekable();
    for i in 1..=n {
        if i > 1 {
            cur = frob.apply(f, &cur);
        }
        while next.peek() == Some(&&i) {
            next.next();
            let g = gcd(f, &m, &sub(f, &cur, &xs));
            if g.len() > 1 {
                return false;
            }
        }
    }
    cur == xs
}

/// Degree of the smallest irreducible factor of a squarefree `a`, found by
/// distinct-degree sieving with early exit.
pub fn smallest_factor_degree(f: &Field, a: &[FieldElem]) -> usize {
    let n = a.len() - 1;
    let m = monic(f, a);
    let xs = x(f);
    let frob = FrobeniusMap::new(f, &m);
    let mut cur = frob.x_q().to_vec();
    for d in 1..=n / 2 {
        if d > 1 {
            cur = frob.apply(f, &cur);
        }
        if gcd(f, &m, &sub(f, &cur, &xs)).len() > 1 {
            return d;
        }
    }
    n
}
