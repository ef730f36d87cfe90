//! Exact arithmetic in prime fields `F_p` and extension fields `F_{p^k}`.
//!
//! A [`Field`] is an immutable context: the characteristic, the extension
//! degree and a monic irreducible modulus of degree `k` over `F_p`. Elements
//! are [`FieldElem`] values, a packed coefficient vector `(c_0, .., c_{k-1})`
//! of the residue class `c_0 + c_1 x + .. + c_{k-1} x^{k-1}`.
//!
//! The packing puts `c_0` in the most significant base-`p` digit, so the
//! integer order of codes is the lexicographic order of coefficient vectors
//! (constant term first). Enumeration, root ordering and the modulus search
//! all use that order.

mod embed;

pub use embed::Embedding;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::dense;

/// Largest field for which full addition/multiplication tables are built.
const TABLE_LIMIT: u64 = 256;
/// Largest field for which a discrete-log table is built on demand.
const LOG_TABLE_LIMIT: u64 = 1 << 22;

/// An element of a [`Field`], stored as its lexicographic code in `[0, q)`.
///
/// Elements carry no reference to their field; the field checks ranges at
/// the checked entry points ([`Field::arith`], [`Field::check`]).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(pub(crate) u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    /// The lexicographic code of this element.
    #[inline]
    pub fn code(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// The four checked arithmetic operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

enum Repr {
    Prime,
    /// `p = 2`, `k >= 2`: carry-less multiplication, `full` is the modulus
    /// bit pattern including the leading `x^k` term (bit `i` = coeff of `x^i`).
    Binary {
        full: u64,
    },
    /// Small extension fields: flat `q x q` tables indexed by code.
    Tables {
        add: Vec<u8>,
        mul: Vec<u8>,
        neg: Vec<u8>,
        inv: Vec<u8>,
    },
    Generic,
}

/// A finite field `F_q`, `q = p^k`.
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, low-to-high, length `k + 1`. For `k = 1` this is the
    /// placeholder `x`.
    modulus: Vec<u64>,
    /// `p^(k-1)`: the weight of `c_0` in the packed code.
    top: u64,
    repr: Repr,
    primitive: OnceLock<FieldElem>,
    logs: OnceLock<Vec<u32>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Clone for Field {
    fn clone(&self) -> Self {
        Field::build(self.p, self.k, self.modulus.clone())
    }
}

impl Field {
    /// Builds `F_{p^k}` whose modulus is the lexicographically least monic
    /// irreducible polynomial of degree `k` over `F_p` (coefficient vectors
    /// compared from the constant term upwards).
    pub fn new(p: u64, k: u32) -> Result<Arc<Field>> {
        Self::validate(p, k)?;
        if k == 1 {
            return Ok(Arc::new(Field::build(p, 1, vec![0, 1])));
        }
        let prime = Field::build(p, 1, vec![0, 1]);
        let count = p.pow(k);
        // Codes enumerate (c_0, .., c_{k-1}) lexicographically; c_0 = 0 is
        // skipped since x would divide the candidate.
        for code in p.pow(k - 1)..count {
            let mut coeffs = prime_digits(p, k, code);
            coeffs.push(1);
            let poly: Vec<FieldElem> = coeffs.iter().map(|&c| FieldElem(c)).collect();
            if dense::is_irreducible(&prime, &poly) {
                return Ok(Arc::new(Field::build(p, k, coeffs)));
            }
        }
        Err(Error::Internal(format!(
            "no irreducible polynomial of degree {k} over F_{p}"
        )))
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Arc<Field>> {
        Field::new(p, 1)
    }

    /// Builds `F_p[x]/(modulus)` for an explicit monic irreducible modulus
    /// given low-to-high over `F_p`.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Arc<Field>> {
        let k = modulus
            .len()
            .checked_sub(1)
            .filter(|&k| k >= 1)
            .ok_or(Error::ZeroDegree)? as u32;
        Self::validate(p, k)?;
        if modulus.iter().any(|&c| c >= p) || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidArgument(
                "modulus must be monic with coefficients in [0, p)".into(),
            ));
        }
        if k == 1 {
            return Ok(Arc::new(Field::build(p, 1, vec![0, 1])));
        }
        let prime = Field::build(p, 1, vec![0, 1]);
        let poly: Vec<FieldElem> = modulus.iter().map(|&c| FieldElem(c)).collect();
        if !dense::is_irreducible(&prime, &poly) {
            return Err(Error::Reducible(format!("modulus {modulus:?} over F_{p}")));
        }
        Ok(Arc::new(Field::build(p, k, modulus.to_vec())))
    }

    fn validate(p: u64, k: u32) -> Result<()> {
        if k < 1 {
            return Err(Error::ZeroDegree);
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        p.checked_pow(k).ok_or(Error::FieldTooLarge { p, k })?;
        Ok(())
    }

    fn build(p: u64, k: u32, modulus: Vec<u64>) -> Field {
        let q = p.pow(k);
        let top = p.pow(k - 1);
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            top,
            repr: if k == 1 { Repr::Prime } else { Repr::Generic },
            primitive: OnceLock::new(),
            logs: OnceLock::new(),
        };
        if k >= 2 && p == 2 {
            let mut full = 0u64;
            for (i, &c) in field.modulus.iter().enumerate() {
                if c == 1 {
                    full |= 1 << i;
                }
            }
            field.repr = Repr::Binary { full };
        }
        if k >= 2 && q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0u8; n * n];
            let mut mul = vec![0u8; n * n];
            let mut neg = vec![0u8; n];
            let mut inv = vec![0u8; n];
            for a in 0..q {
                neg[a as usize] = field.neg(FieldElem(a)).0 as u8;
                for b in 0..q {
                    let i = (a * q + b) as usize;
                    add[i] = field.add(FieldElem(a), FieldElem(b)).0 as u8;
                    mul[i] = field.mul(FieldElem(a), FieldElem(b)).0 as u8;
                    if mul[i] as u64 == top {
                        inv[a as usize] = b as u8;
                    }
                }
            }
            field.repr = Repr::Tables { add, mul, neg, inv };
        }
        field
    }

    #[inline]
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.q
    }

    /// `Some(p)` for prime fields small enough that sums of products can be
    /// accumulated in a `u64` before reduction.
    #[inline]
    pub(crate) fn small_prime(&self) -> Option<u64> {
        (self.k == 1 && self.p < 1 << 16).then_some(self.p)
    }

    /// The defining modulus, low-to-high over `F_p`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    #[inline]
    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElem {
        FieldElem(self.top)
    }

    /// The class of `x` (the root of the modulus). For a prime field this is
    /// the class of the placeholder modulus `x`, i.e. zero.
    pub fn x(&self) -> FieldElem {
        if self.k == 1 {
            FieldElem(0)
        } else {
            FieldElem(self.top / self.p)
        }
    }

    /// The image of an integer in the prime subfield.
    #[inline]
    pub fn from_int(&self, c: u64) -> FieldElem {
        FieldElem((c % self.p) * self.top)
    }

    /// Signed integer into the prime subfield.
    pub fn from_i64(&self, c: i64) -> FieldElem {
        let v = self.from_int(c.unsigned_abs());
        if c < 0 {
            self.neg(v)
        } else {
            v
        }
    }

    /// If `a` lies in the prime subfield, its value in `[0, p)`.
    pub fn to_prime(&self, a: FieldElem) -> Option<u64> {
        a.0.is_multiple_of(self.top).then_some(a.0 / self.top)
    }

    /// Element from its coefficient vector (low-to-high); missing high
    /// coefficients are zero.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidArgument(format!(
                "coefficient vector {coeffs:?} is not canonical for F_{}^{}",
                self.p, self.k
            )));
        }
        let mut code = 0u64;
        for i in 0..self.k as usize {
            code = code * self.p + coeffs.get(i).copied().unwrap_or(0);
        }
        Ok(FieldElem(code))
    }

    /// Coefficient vector (low-to-high, length `k`).
    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        prime_digits(self.p, self.k, a.0)
    }

    /// Errors unless `a` is a canonical element of this field.
    pub fn check(&self, a: FieldElem) -> Result<()> {
        if a.0 < self.q {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// All `q` elements in lexicographic order of coefficient vectors.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + Clone + Send + '_ {
        (0..self.q).map(FieldElem)
    }

    /// Checked arithmetic; fails on foreign elements and division by zero.
    pub fn arith(&self, a: FieldElem, b: FieldElem, op: ArithOp) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.repr {
            Repr::Prime => FieldElem(add_mod(a.0, b.0, self.p)),
            Repr::Binary { .. } => FieldElem(a.0 ^ b.0),
            Repr::Tables { add, .. } => FieldElem(add[(a.0 * self.q + b.0) as usize] as u64),
            Repr::Generic => self.digitwise(a, b, add_mod),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        match &self.repr {
            Repr::Prime => FieldElem(if a.0 == 0 { 0 } else { self.p - a.0 }),
            Repr::Binary { .. } => a,
            Repr::Tables { neg, .. } => FieldElem(neg[a.0 as usize] as u64),
            Repr::Generic => {
                self.digitwise(a, FieldElem(0), |x, _, p| if x == 0 { 0 } else { p - x })
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.repr {
            Repr::Prime => FieldElem(add_mod(
                a.0,
                if b.0 == 0 { 0 } else { self.p - b.0 },
                self.p,
            )),
            Repr::Binary { .. } => FieldElem(a.0 ^ b.0),
            _ => self.add(a, self.neg(b)),
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.repr {
            Repr::Prime => FieldElem(mul_mod(a.0, b.0, self.p)),
            Repr::Tables { mul, .. } => FieldElem(mul[(a.0 * self.q + b.0) as usize] as u64),
            Repr::Binary { full } => {
                let k = self.k;
                let mut x = bits_natural(a.0, k);
                let mut y = bits_natural(b.0, k);
                let mut r = 0u64;
                while y != 0 {
                    if y & 1 == 1 {
                        r ^= x;
                    }
                    y >>= 1;
                    x <<= 1;
                    if (x >> k) & 1 == 1 {
                        x ^= full;
                    }
                }
                FieldElem(bits_natural(r, k))
            }
            Repr::Generic => self.mul_generic(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.0 == 0 {
            return None;
        }
        Some(match &self.repr {
            Repr::Prime => FieldElem(inv_mod(a.0, self.p)),
            Repr::Tables { inv, .. } => FieldElem(inv[a.0 as usize] as u64),
            _ => self.pow(a, self.q - 2),
        })
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// Exponent given as a big integer, most significant bit first.
    pub fn pow_u128(&self, a: FieldElem, e: u128) -> FieldElem {
        let mut acc = self.one();
        for i in (0..128 - e.leading_zeros()).rev() {
            acc = self.mul(acc, acc);
            if (e >> i) & 1 == 1 {
                acc = self.mul(acc, a);
            }
        }
        acc
    }

    /// The Frobenius map `a -> a^p`.
    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.p)
    }

    /// The unique `p`-th root (the inverse Frobenius), `a^(q/p)`.
    pub fn pth_root(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.q / self.p)
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(&self, a: FieldElem) -> Result<bool> {
        if self.p == 2 {
            return Err(Error::NeedsOddCharacteristic);
        }
        self.check(a)?;
        Ok(a.0 == 0 || self.pow(a, (self.q - 1) / 2) == self.one())
    }

    /// Absolute trace `Tr_{F_q/F_p}(a) = sum_{i<k} a^(p^i)`, as a value in `[0, p)`.
    pub fn abs_trace(&self, a: FieldElem) -> u64 {
        let mut acc = self.zero();
        let mut cur = a;
        for _ in 0..self.k {
            acc = self.add(acc, cur);
            cur = self.frobenius(cur);
        }
        self.to_prime(acc)
            .expect("trace of an element lies in the prime field")
    }

    /// Lexicographically least element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> FieldElem {
        *self.primitive.get_or_init(|| {
            let order = self.q - 1;
            if order == 1 {
                return self.one();
            }
            let primes = prime_factors(order);
            self.elements()
                .skip(1)
                .find(|&a| primes.iter().all(|&l| self.pow(a, order / l) != self.one()))
                .expect("multiplicative group of a finite field is cyclic")
        })
    }

    /// Discrete logarithm to the base [`Field::primitive_element`].
    pub fn log(&self, a: FieldElem) -> Option<u64> {
        if a.0 == 0 || a.0 >= self.q {
            return None;
        }
        if self.q <= LOG_TABLE_LIMIT {
            let table = self.logs.get_or_init(|| {
                let g = self.primitive_element();
                let mut t = vec![0u32; self.q as usize];
                let mut cur = self.one();
                for i in 0..self.q - 1 {
                    t[cur.0 as usize] = i as u32;
                    cur = self.mul(cur, g);
                }
                t
            });
            return Some(table[a.0 as usize] as u64);
        }
        let g = self.primitive_element();
        let mut cur = self.one();
        for i in 0..self.q - 1 {
            if cur == a {
                return Some(i);
            }
            cur = self.mul(cur, g);
        }
        None
    }

    fn digitwise(
        &self,
        a: FieldElem,
        b: FieldElem,
        op: impl Fn(u64, u64, u64) -> u64,
    ) -> FieldElem {
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut w = 1u64;
        for i in 0..self.k {
            let d = op(x % self.p, y % self.p, self.p);
            out += d * w;
            x /= self.p;
            y /= self.p;
            if i + 1 < self.k {
                w *= self.p;
            }
        }
        FieldElem(out)
    }

    fn mul_generic(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let k = self.k as usize;
        let p = self.p;
        let da = self.coeffs(a);
        let db = self.coeffs(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = add_mod(prod[i + j], mul_mod(x, y, p), p);
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let m = self.modulus[j];
                if m != 0 {
                    let t = mul_mod(c, m, p);
                    prod[i - k + j] = add_mod(prod[i - k + j], p - t, p);
                }
            }
        }
        let mut code = 0u64;
        for &c in prod.iter().take(k) {
            code = code * p + c;
        }
        FieldElem(code)
    }
}

/// Digits of a lexicographic code, returned low-to-high (`c_0` first).
fn prime_digits(p: u64, k: u32, mut code: u64) -> Vec<u64> {
    let mut out = vec![0u64; k as usize];
    for i in (0..k as usize).rev() {
        out[i] = code % p;
        code /= p;
    }
    out
}

/// Converts between the lexicographic bit layout (bit `k-1-i` = `c_i`) and
/// the natural one (bit `i` = `c_i`). The map is an involution.
#[inline]
fn bits_natural(code: u64, k: u32) -> u64 {
    code.reverse_bits() >> (64 - k)
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= p - b {
        a - (p - b)
    } else {
        a + b
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p as i128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_modulus_and_omega() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let w = f.x();
        assert_eq!(f.mul(w, w), f.add(w, f.one()));
        assert_eq!(f.abs_trace(w), 1);
        assert_eq!(f.abs_trace(f.one()), 0);
    }

    #[test]
    fn prime_field_placeholder() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 3);
        let two = f.from_int(2);
        assert_eq!(f.div(two, two).unwrap(), f.one());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(5, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(
            Field::new(2, 64),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(Field::new(2, 63).is_ok());
    }

    #[test]
    fn division_by_zero_and_foreign_elements() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(
            f.arith(f.one(), f.zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            f.arith(FieldElem(7), f.one(), ArithOp::Add),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn squares_mod_5_and_f9() {
        let f = Field::new(5, 1).unwrap();
        assert!(f.is_square(f.from_int(4)).unwrap());
        assert!(!f.is_square(f.from_int(2)).unwrap());
        let f9 = Field::new(3, 2).unwrap();
        let w = f9.x();
        assert!(f9.is_square(f9.mul(w, w)).unwrap());
        assert_eq!(
            Field::new(2, 3).unwrap().is_square(FieldElem(1)),
            Err(Error::NeedsOddCharacteristic)
        );
    }

    #[test]
    fn enumeration_orders() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(
            f2.elements().collect::<Vec<_>>(),
            vec![FieldElem(0), FieldElem(1)]
        );
        let f27 = Field::new(3, 3).unwrap();
        let all: Vec<_> = f27.elements().collect();
        assert_eq!(all.len(), 27);
        // lexicographic: coefficient vectors are increasing
        for w in all.windows(2) {
            assert!(f27.coeffs(w[0]) < f27.coeffs(w[1]));
        }
    }

    #[test]
    fn miller_rabin() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime_u64(18446744073709551557));
        assert!(!is_prime_u64(3215031751));
    }

    #[test]
    fn generic_and_table_paths_agree() {
        // F_625 uses the generic path; compare with schoolbook on coefficient vectors
        let f = Field::new(5, 4).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.pow(g, 624), f.one());
        assert_ne!(f.pow(g, 312), f.one());
        assert_eq!(f.log(g), Some(1));
        let f2_10 = Field::new(2, 10).unwrap();
        for a in f2_10.elements().skip(1).step_by(37) {
            assert_eq!(f2_10.mul(a, f2_10.inv(a).unwrap()), f2_10.one());
        }
    }
}
