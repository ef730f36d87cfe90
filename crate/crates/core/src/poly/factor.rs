//! Squarefree decomposition, distinct-degree factorization and
//! Cantor-Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dense::{self, Coeffs, FrobeniusMap};
use super::FactType;
use crate::field::{Field, FieldElem};

/// Global seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_0f_f1e1d;

/// Squarefree decomposition of a monic nonconstant polynomial.
pub(crate) fn squarefree(f: &Field, a: &[FieldElem]) -> Vec<(Coeffs, usize)> {
    let mut out = Vec::new();
    squarefree_into(f, a, 1, &mut out);
    out
}

fn squarefree_into(f: &Field, a: &[FieldElem], scale: usize, out: &mut Vec<(Coeffs, usize)>) {
    let p = f.characteristic() as usize;
    let mut c = dense::gcd(f, a, &dense::derivative(f, a));
    let mut w = dense::div_rem(f, a, &c).0;
    let mut i = 1;
    while w.len() > 1 {
        let y = dense::gcd(f, &w, &c);
        let fac = dense::div_rem(f, &w, &y).0;
        if fac.len() > 1 {
            out.push((fac, i * scale));
        }
        c = dense::div_rem(f, &c, &y).0;
        w = y;
        i += 1;
    }
    if c.len() > 1 {
        // only exponents divisible by p remain
        let root: Coeffs = c.iter().step_by(p).map(|&x| f.pth_root(x)).collect();
        squarefree_into(f, &root, scale * p, out);
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// `(d, product of all irreducible factors of degree d)`.
pub(crate) fn distinct_degree(f: &Field, a: &[FieldElem]) -> Vec<(usize, Coeffs)> {
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let xs = dense::x(f);
    let mut d = 1;
    // x^(q^d) mod the original polynomial; reductions modulo `rest` follow
    // since rest divides a.
    let frob = FrobeniusMap::new(f, a);
    let mut cur = frob.x_q().to_vec();
    while rest.len() > 2 * d {
        if d > 1 {
            cur = frob.apply(f, &cur);
        }
        let mut probe = cur.clone();
        dense::rem_monic_in_place(f, &mut probe, &rest);
        let g = dense::gcd(f, &rest, &dense::sub(f, &probe, &xs));
        if g.len() > 1 {
            rest = dense::div_rem(f, &rest, &g).0;
            out.push((d, g));
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push((rest.len() - 1, rest));
    }
    out
}

pub(crate) fn fact_type(f: &Field, a: &[FieldElem]) -> FactType {
    let m = dense::monic(f, a);
    let mut parts = Vec::new();
    for (s, e) in squarefree(f, &m) {
        for (d, block) in distinct_degree(f, &s) {
            let count = (block.len() - 1) / d * e;
            parts.extend(std::iter::repeat_n(d, count));
        }
    }
    parts.sort_unstable();
    FactType::from_sorted(parts)
}

/// Fact type of a polynomial already known to be squarefree.
pub(crate) fn fact_type_squarefree(f: &Field, a: &[FieldElem]) -> FactType {
    let m = dense::monic(f, a);
    let mut parts = Vec::new();
    for (d, block) in distinct_degree(f, &m) {
        parts.extend(std::iter::repeat_n(d, (block.len() - 1) / d));
    }
    parts.sort_unstable();
    FactType::from_sorted(parts)
}

/// Per-call generator keyed on the global seed and the polynomial.
pub(crate) fn rng_for(seed: u64, a: &[FieldElem]) -> ChaCha8Rng {
    // FNV-1a over the coefficient codes, folded into the seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for c in a {
        for b in c.code().to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100_0000_01b3);
        }
    }
    ChaCha8Rng::seed_from_u64(h)
}

fn random_below(f: &Field, deg: usize, rng: &mut ChaCha8Rng) -> Coeffs {
    let q = f.order();
    let mut v: Coeffs = (0..deg).map(|_| FieldElem(rng.gen_range(0..q))).collect();
    dense::trim(&mut v);
    v
}

/// Splits a monic squarefree product of irreducibles of degree `d` into its
/// factors.
pub(crate) fn equal_degree(
    f: &Field,
    a: &[FieldElem],
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Coeffs> {
    let n = a.len() - 1;
    if n == d {
        return vec![a.to_vec()];
    }
    let frob = FrobeniusMap::new(f, a);
    loop {
        let r = random_below(f, n, rng);
        if r.len() < 2 {
            continue;
        }
        let witness = if f.characteristic() == 2 {
            // absolute trace from F_{q^d} down to F_2
            let steps = f.degree() as usize * d;
            let mut acc = r.clone();
            let mut cur = r;
            for _ in 1..steps {
                cur = dense::mulmod(f, &cur, &cur, a);
                acc = dense::add(f, &acc, &cur);
            }
            acc
        } else {
            // r^((q^d - 1)/2) = (r * r^q * .. * r^(q^(d-1)))^((q-1)/2)
            let mut norm = r.clone();
            let mut cur = r;
            for _ in 1..d {
                cur = frob.apply(f, &cur);
                norm = dense::mulmod(f, &norm, &cur, a);
            }
            let h = dense::powmod(f, &norm, (f.order() - 1) / 2, a);
            dense::sub(f, &h, &[f.one()])
        };
        let g = dense::gcd(f, a, &witness);
        if g.len() > 1 && g.len() < a.len() {
            let rest = dense::div_rem(f, a, &g).0;
            let mut out = equal_degree(f, &g, d, rng);
            out.extend(equal_degree(f, &dense::monic(f, &rest), d, rng));
            return out;
        }
    }
}

/// Full factorization, factors sorted by degree and then coefficients.
pub(crate) fn factor(f: &Field, a: &[FieldElem], seed: u64) -> Vec<(Coeffs, usize)> {
    let m = dense::monic(f, a);
    let mut rng = rng_for(seed, &m);
    let mut out = Vec::new();
    for (s, e) in squarefree(f, &m) {
        for (d, block) in distinct_degree(f, &s) {
            for fac in equal_degree(f, &block, d, &mut rng) {
                out.push((fac, e));
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
    });
    out
}
