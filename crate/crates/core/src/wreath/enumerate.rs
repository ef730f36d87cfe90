//! Exhaustive enumeration of `ζ ∈ S_n^Ω` for a fixed `σ`.

use num_rational::Ratio;
use rayon::prelude::*;

use super::perm::{rank_images, Perm};
use super::{DensityTable, OrbitSetup};
use crate::error::{Error, Result};
use crate::poly::FactType;

/// Largest `(n!)^ν` any enumeration will visit.
pub const ENUMERATION_LIMIT: u128 = 100_000_000;

/// Largest inner degree with a materialized `S_n`.
const MAX_N: usize = 8;

struct Engine<'a> {
    setup: &'a OrbitSetup,
    n: usize,
    nu: usize,
    /// `S_n` in lexicographic order, flattened `n` images per permutation.
    perms: Vec<u8>,
    nf: usize,
}

impl<'a> Engine<'a> {
    fn new(setup: &'a OrbitSetup) -> Result<Engine<'a>> {
        let n = setup.n();
        if n > MAX_N {
            return Err(Error::GuardExceeded {
                subject: "inner degree n",
                limit: MAX_N as u128,
                got: n as u128,
            });
        }
        let total = setup.group_order().unwrap_or(u128::MAX);
        if total > ENUMERATION_LIMIT {
            return Err(Error::GuardExceeded {
                subject: "(n!)^nu",
                limit: ENUMERATION_LIMIT,
                got: total,
            });
        }
        let all = Perm::all(n);
        let perms = all
            .iter()
            .flat_map(|p| p.images().iter().map(|&i| i as u8))
            .collect();
        Ok(Engine {
            setup,
            n,
            nu: setup.nu(),
            perms,
            nf: all.len(),
        })
    }

    fn total(&self) -> u64 {
        (self.nf as u64).pow(self.nu as u32)
    }

    #[inline]
    fn image(&self, digit: usize, k: usize) -> usize {
        self.perms[digit * self.n + k] as usize
    }

    #[inline]
    fn act(&self, digits: &[usize], k: usize, w: usize) -> (usize, usize) {
        let w2 = self.setup.sigma().apply(w);
        (self.image(digits[w2], k), w2)
    }

    /// Length of the `<ζσ>`-cycle through `(0, first point of orbit)`.
    fn first_cycle_len(&self, digits: &[usize], orbit: &[usize]) -> usize {
        let start = (0, orbit[0]);
        let mut pt = self.act(digits, start.0, start.1);
        let mut len = 1;
        while pt != start {
            pt = self.act(digits, pt.0, pt.1);
            len += 1;
        }
        len
    }

    fn is_transitive(&self, digits: &[usize]) -> bool {
        self.setup
            .orbits()
            .iter()
            .all(|o| self.first_cycle_len(digits, o) == self.n * o.len())
    }

    fn orbit_types(&self, digits: &[usize], seen: &mut [bool]) -> Vec<FactType> {
        seen.fill(false);
        self.setup
            .orbits()
            .iter()
            .map(|orbit| {
                let mut parts = Vec::new();
                for &w in orbit {
                    for k in 0..self.n {
                        if seen[w * self.n + k] {
                            continue;
                        }
                        let mut len = 0;
                        let mut pt = (k, w);
                        while !seen[pt.1 * self.n + pt.0] {
                            seen[pt.1 * self.n + pt.0] = true;
                            pt = self.act(digits, pt.0, pt.1);
                            len += 1;
                        }
                        parts.push(len);
                    }
                }
                parts.sort_unstable();
                FactType::from_sorted(parts)
            })
            .collect()
    }

    /// Folds `step` over every `ζ`, split on `ζ(ω_0)` across the rayon pool.
    fn fold<T, I, S, M>(&self, init: I, step: S, merge: M) -> T
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        S: Fn(&mut T, &[usize]) + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        (0..self.nf)
            .into_par_iter()
            .map(|d0| {
                let mut acc = init();
                let mut digits = vec![0usize; self.nu];
                digits[0] = d0;
                loop {
                    step(&mut acc, &digits);
                    // odometer over positions 1..nu
                    let mut i = 1;
                    while i < self.nu {
                        digits[i] += 1;
                        if digits[i] < self.nf {
                            break;
                        }
                        digits[i] = 0;
                        i += 1;
                    }
                    if i >= self.nu {
                        break;
                    }
                }
                acc
            })
            .reduce(&init, &merge)
    }

    fn index(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &d| acc * self.nf + d)
    }

    fn decode(&self, mut idx: usize, digits: &mut [usize]) {
        for d in digits.iter_mut() {
            *d = idx % self.nf;
            idx /= self.nf;
        }
    }
}

/// Number of `ζ` with `ζσ` column-transitive. Equals `(n!)^ν / n^r`.
pub fn count_transitive(setup: &OrbitSetup) -> Result<u64> {
    let e = Engine::new(setup)?;
    Ok(e.fold(
        || 0u64,
        |acc, digits| {
            if e.is_transitive(digits) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    ))
}

/// Number of orbits of `S_n^Ω` acting on the column-transitive set by
/// conjugation.
pub fn conjugation_orbit_on_t(setup: &OrbitSetup) -> Result<usize> {
    let e = Engine::new(setup)?;
    let total = e.total() as usize;
    let words = total.div_ceil(64);
    let in_t = e.fold(
        || vec![0u64; words],
        |acc, digits| {
            if e.is_transitive(digits) {
                let i = e.index(digits);
                acc[i / 64] |= 1 << (i % 64);
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x |= y;
            }
            a
        },
    );
    let n = e.n;
    // generators of S_n, with left multiplication by s and right
    // multiplication by s^-1 tabulated on permutation ranks
    let gens: Vec<Perm> = if n >= 2 {
        vec![Perm::transposition(n, 0, 1), Perm::rotation(n)]
    } else {
        Vec::new()
    };
    let all = Perm::all(n);
    let tables: Vec<(Vec<usize>, Vec<usize>)> = gens
        .iter()
        .map(|s| {
            let s_inv = s.inverse();
            let left = all
                .iter()
                .map(|p| rank_images(s.compose(p).images()))
                .collect();
            let right = all
                .iter()
                .map(|p| rank_images(p.compose(&s_inv).images()))
                .collect();
            (left, right)
        })
        .collect();
    let sigma = setup.sigma();
    let mut visited = vec![0u64; words];
    let mut orbits = 0;
    let mut stack = Vec::new();
    let mut digits = vec![0usize; e.nu];
    for start in 0..total {
        let bit = 1u64 << (start % 64);
        if in_t[start / 64] & bit == 0 || visited[start / 64] & bit != 0 {
            continue;
        }
        orbits += 1;
        visited[start / 64] |= bit;
        stack.push(start);
        while let Some(idx) = stack.pop() {
            for w in 0..e.nu {
                for (left, right) in &tables {
                    e.decode(idx, &mut digits);
                    // ζ'(v) = ξ(v) ζ(v) ξ(σ⁻¹v)⁻¹ with ξ = s at w only
                    digits[w] = left[digits[w]];
                    let w2 = sigma.apply(w);
                    digits[w2] = right[digits[w2]];
                    let j = e.index(&digits);
                    let b = 1u64 << (j % 64);
                    if visited[j / 64] & b == 0 {
                        debug_assert!(in_t[j / 64] & b != 0, "conjugation left T");
                        visited[j / 64] |= b;
                        stack.push(j);
                    }
                }
            }
        }
    }
    Ok(orbits)
}

/// Counts of every tuple of per-orbit orbit types over all `ζ`.
pub fn density_table(setup: &OrbitSetup) -> Result<DensityTable> {
    let e = Engine::new(setup)?;
    let points = e.n * e.nu;
    Ok(e.fold(
        || (DensityTable::new(), vec![false; points]),
        |(table, seen), digits| {
            *table.entry(e.orbit_types(digits, seen)).or_insert(0) += 1;
        },
        |(mut a, seen), (b, _)| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            (a, seen)
        },
    )
    .0)
}

/// Fraction of `ζ ∈ S_n^Ω` whose `ζσ` has orbit type `targets[i]` on
/// `[n] × Ω_i` for every `i`.
pub fn predict_density(setup: &OrbitSetup, targets: &[FactType]) -> Result<Ratio<u64>> {
    setup.check_targets(targets)?;
    let e = Engine::new(setup)?;
    let points = e.n * e.nu;
    let hits = e.fold(
        || (0u64, vec![false; points]),
        |(count, seen), digits| {
            if e.orbit_types(digits, seen) == targets {
                *count += 1;
            }
        },
        |(a, seen), (b, _)| (a + b, seen),
    );
    Ok(Ratio::new(hits.0, e.total()))
}
