//! Brute-force check, on random subgroups `H ≤ S_n^r`, that surjectivity
//! of every coordinate projection together with surjectivity of
//! `H -> (S_n / A_n)^r` forces `H = S_n^r`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::wreath::Perm;

/// What one generating set gives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaInstance {
    pub projections_surjective: bool,
    pub signs_surjective: bool,
    pub order: u64,
    pub full_order: u64,
}

impl LemmaInstance {
    /// The implication holds for this subgroup.
    pub fn consistent(&self) -> bool {
        !(self.projections_surjective && self.signs_surjective) || self.order == self.full_order
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub r: usize,
    pub trials: usize,
    pub seed: u64,
    /// Trials where the sign map was surjective as well.
    pub hypothesis_held: usize,
    pub counterexamples: usize,
    pub consistent: bool,
}

struct Sym {
    n: usize,
    all: Vec<Perm>,
    /// `mul[a * nf + b]` is the rank of `all[a] ∘ all[b]`.
    mul: Vec<u32>,
    odd: Vec<bool>,
}

impl Sym {
    fn new(n: usize) -> Sym {
        let all = Perm::all(n);
        let nf = all.len();
        let mut mul = vec![0; nf * nf];
        for (a, pa) in all.iter().enumerate() {
            for (b, pb) in all.iter().enumerate() {
                mul[a * nf + b] = pa.compose(pb).rank() as u32;
            }
        }
        let odd = all.iter().map(|p| !p.is_even()).collect();
        Sym { n, all, mul, odd }
    }

    fn nf(&self) -> usize {
        self.all.len()
    }

    /// Order of the subgroup of `S_n^r` generated by rank tuples.
    fn closure_order(&self, gens: &[Vec<usize>], r: usize) -> u64 {
        let nf = self.nf();
        let total = nf.pow(r as u32);
        let mut seen = vec![false; total];
        let encode = |t: &[usize]| t.iter().rev().fold(0, |acc, &d| acc * nf + d);
        let id = vec![0usize; r];
        let mut stack = vec![encode(&id)];
        seen[stack[0]] = true;
        let mut count = 1u64;
        let mut cur = vec![0usize; r];
        while let Some(idx) = stack.pop() {
            let mut rest = idx;
            for c in cur.iter_mut() {
                *c = rest % nf;
                rest /= nf;
            }
            for g in gens {
                let j = cur
                    .iter()
                    .zip(g)
                    .rev()
                    .fold(0, |acc, (&a, &b)| acc * nf + self.mul[a * nf + b] as usize);
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count
    }

    fn instance(&self, gens: &[Vec<usize>], r: usize) -> LemmaInstance {
        let full_order = (self.nf() as u64).pow(r as u32);
        let projections_surjective = (0..r).all(|c| {
            let coord: Vec<Vec<usize>> = gens.iter().map(|g| vec![g[c]]).collect();
            self.closure_order(&coord, 1) == self.nf() as u64
        });
        // rank over F_2 of the sign vectors
        let mut basis: Vec<u32> = Vec::new();
        for g in gens {
            let mut v: u32 = g
                .iter()
                .enumerate()
                .filter(|&(_, &p)| self.odd[p])
                .map(|(i, _)| 1 << i)
                .sum();
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        let signs_surjective = basis.len() == r;
        let order = if projections_surjective && signs_surjective {
            self.closure_order(gens, r)
        } else {
            0
        };
        LemmaInstance {
            projections_surjective,
            signs_surjective,
            order,
            full_order,
        }
    }
}

fn check_range(n: usize, r: usize) -> Result<()> {
    if !(2..=5).contains(&n) || !(1..=3).contains(&r) {
        return Err(Error::InvalidArgument(format!(
            "need 2 <= n <= 5 and 1 <= r <= 3, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

/// Evaluates the implication for the subgroup generated by explicit tuples
/// of permutations of degree `n`. The order is only computed when both
/// hypotheses hold (and is reported as 0 otherwise).
pub fn lemma_instance(n: usize, gens: &[Vec<Perm>]) -> Result<LemmaInstance> {
    let r = gens.first().map_or(0, Vec::len);
    check_range(n, r)?;
    if gens
        .iter()
        .any(|g| g.len() != r || g.iter().any(|p| p.degree() != n))
    {
        return Err(Error::InvalidArgument(
            "generator tuples of mixed shape".into(),
        ));
    }
    let sym = Sym::new(n);
    let ranks: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| g.iter().map(Perm::rank).collect())
        .collect();
    Ok(sym.instance(&ranks, r))
}

/// Runs `trials` random subgroups generated by 1 to 4 random tuples,
/// resampled until every coordinate projection is onto `S_n`.
pub fn check_lemma_alt_sym(n: usize, r: usize, trials: usize, seed: u64) -> Result<LemmaReport> {
    check_range(n, r)?;
    let sym = Sym::new(n);
    let nf = sym.nf();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hypothesis_held = 0;
    let mut counterexamples = 0;
    for _ in 0..trials {
        let mut attempts = 0;
        let inst = loop {
            attempts += 1;
            if attempts > 100_000 {
                return Err(Error::Internal(
                    "could not sample surjective projections".into(),
                ));
            }
            let k = rng.gen_range(1..=4);
            let gens: Vec<Vec<usize>> = (0..k)
                .map(|_| (0..r).map(|_| rng.gen_range(0..nf)).collect())
                .collect();
            let inst = sym.instance(&gens, r);
            if inst.projections_surjective {
                break inst;
            }
        };
        if inst.signs_surjective {
            hypothesis_held += 1;
        }
        if !inst.consistent() {
            counterexamples += 1;
        }
    }
    debug_assert_eq!(sym.n, n);
    Ok(LemmaReport {
        n,
        r,
        trials,
        seed,
        hypothesis_held,
        counterexamples,
        consistent: counterexamples == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_transposition_is_vacuous() {
        let tau = Perm::transposition(2, 0, 1);
        let inst = lemma_instance(2, &[vec![tau.clone(), tau]]).unwrap();
        assert!(inst.projections_surjective);
        assert!(!inst.signs_surjective);
        assert!(inst.consistent());
    }

    #[test]
    fn explicit_full_group() {
        // (transposition, id), (id, transposition), (3-cycle, 3-cycle)
        let t = Perm::transposition(3, 0, 1);
        let c = Perm::rotation(3);
        let id = Perm::identity(3);
        let inst = lemma_instance(
            3,
            &[vec![t.clone(), id.clone()], vec![id, t], vec![c.clone(), c]],
        )
        .unwrap();
        assert!(inst.projections_surjective && inst.signs_surjective);
        assert_eq!(inst.order, 36);
    }

    #[test]
    fn random_runs() {
        let rep = check_lemma_alt_sym(3, 2, 200, 1).unwrap();
        assert!(rep.consistent);
        assert!(rep.hypothesis_held > 0);
        assert!(check_lemma_alt_sym(6, 1, 1, 1).is_err());
    }
}
