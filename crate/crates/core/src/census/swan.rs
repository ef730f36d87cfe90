use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::poly::{dense, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwanReport {
    pub q: u64,
    pub degree_bound: usize,
    pub candidates: u64,
    /// Largest `deg(g^8 + t^3)` examined.
    pub max_degree: usize,
    /// Degree of the smallest irreducible factor of `g^8 + t^3` -> count.
    pub smallest_factor_degrees: BTreeMap<usize, u64>,
    /// `g` with `g^8 + t^3` irreducible.
    pub counterexamples: Vec<Poly>,
}

/// Smallest irreducible factor degree of `h = g^8 + t^3`.
fn smallest_factor(f: &Field, g: &[FieldElem]) -> usize {
    if g[0].is_zero() {
        // t divides h, and deg h >= 8 > 1
        return 1;
    }
    let g2 = dense::mul(f, g, g);
    let g4 = dense::mul(f, &g2, &g2);
    let mut h = dense::mul(f, &g4, &g4);
    h[3] = f.add(h[3], f.one());
    // h' = t^2 and t does not divide h, so h is squarefree
    dense::smallest_factor_degree(f, &h)
}

/// Checks every monic `g` with `1 <= deg g <= degree_bound` over a field of
/// characteristic 2 for irreducibility of `g(t)^8 + t^3`.
pub fn swan_mode(field: &Arc<Field>, degree_bound: usize) -> Result<SwanReport> {
    if field.characteristic() != 2 {
        return Err(Error::NeedsCharacteristicTwo);
    }
    if degree_bound == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let q = field.order();
    let mut candidates: u64 = 0;
    for d in 1..=degree_bound {
        let layer =
            q.checked_pow(d as u32)
                .filter(|&c| c <= 1 << 26)
                .ok_or(Error::GuardExceeded {
                    subject: "number of substitutions",
                    limit: 1 << 26,
                    got: (q as u128).saturating_pow(d as u32),
                })?;
        candidates = candidates
            .checked_add(layer)
            .filter(|&c| c <= 1 << 26)
            .ok_or(Error::GuardExceeded {
                subject: "number of substitutions",
                limit: 1 << 26,
                got: candidates as u128 + layer as u128,
            })?;
    }
    let f = &**field;
    let per_degree: Vec<(BTreeMap<usize, u64>, Vec<Vec<FieldElem>>)> = (1..=degree_bound)
        .map(|d| {
            let layer = q.pow(d as u32);
            (0..layer)
                .into_par_iter()
                .map(|idx| {
                    // idx in base q gives a_d (constant term) first
                    let mut g = Vec::with_capacity(d + 1);
                    let mut rest = idx;
                    for _ in 0..d {
                        g.push(FieldElem(rest % q));
                        rest /= q;
                    }
                    g.push(f.one());
                    let s = smallest_factor(f, &g);
                    let mut hist = BTreeMap::new();
                    hist.insert(s, 1u64);
                    let bad = if s == 8 * d { vec![g] } else { Vec::new() };
                    (hist, bad)
                })
                .reduce(
                    || (BTreeMap::new(), Vec::new()),
                    |(mut ha, mut ba), (hb, bb)| {
                        for (k, v) in hb {
                            *ha.entry(k).or_insert(0) += v;
                        }
                        ba.extend(bb);
                        (ha, ba)
                    },
                )
        })
        .collect();
    let mut smallest_factor_degrees = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for (hist, bad) in per_degree {
        for (k, v) in hist {
            *smallest_factor_degrees.entry(k).or_insert(0) += v;
        }
        counterexamples.extend(bad.into_iter().map(|g| Poly::from_raw(field, g)));
    }
    counterexamples.sort_by(|a, b| {
        a.coeffs()
            .len()
            .cmp(&b.coeffs().len())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    Ok(SwanReport {
        q,
        degree_bound,
        candidates,
        max_degree: 8 * degree_bound,
        smallest_factor_degrees,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bound_has_no_counterexamples() {
        let f2 = Field::new(2, 1).unwrap();
        let rep = swan_mode(&f2, 4).unwrap();
        assert_eq!(rep.candidates, 30);
        assert!(rep.counterexamples.is_empty());
        assert_eq!(rep.smallest_factor_degrees.values().sum::<u64>(), 30);
    }

    #[test]
    fn smallest_factor_matches_factorization() {
        let f2 = Field::new(2, 1).unwrap();
        let t = Poly::x(&f2);
        for g in [
            Poly::from_ints(&f2, &[1, 1]),
            Poly::from_ints(&f2, &[1, 1, 1]),
            t.clone(),
        ] {
            let h = &g.pow(8) + &t.pow(3);
            let min = h.fact_type().unwrap().parts()[0];
            assert_eq!(smallest_factor(&f2, g.coeffs()), min);
            assert!(!h.is_irreducible().unwrap());
        }
    }
}
