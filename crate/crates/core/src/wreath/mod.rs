//! Permutational wreath products `S_n ≀_Ω <σ>` with a cyclic top group.
//!
//! An element `ζσ` acts on `[n] × Ω` by `(k, ω) -> (ζ(σω)(k), σω)`.
//! Points of `[n] × Ω` are indexed as `ω * n + k`.

mod enumerate;
mod perm;

use std::collections::BTreeMap;

use num_rational::Ratio;

pub use enumerate::{
    conjugation_orbit_on_t, count_transitive, density_table, predict_density, ENUMERATION_LIMIT,
};
pub use perm::Perm;

use crate::error::{Error, Result};
use crate::poly::FactType;

/// `ζσ` with `ζ: Ω -> S_n` stored densely by the index of `ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElem {
    zeta: Vec<Perm>,
    sigma: Perm,
}

impl WreathElem {
    pub fn new(zeta: Vec<Perm>, sigma: Perm) -> Result<WreathElem> {
        if zeta.len() != sigma.degree() {
            return Err(Error::InvalidArgument(format!(
                "zeta has {} entries but sigma moves {} points",
                zeta.len(),
                sigma.degree()
            )));
        }
        if let Some(first) = zeta.first() {
            if zeta.iter().any(|z| z.degree() != first.degree()) {
                return Err(Error::InvalidArgument(
                    "zeta values have different degrees".into(),
                ));
            }
        }
        Ok(WreathElem { zeta, sigma })
    }

    pub fn identity(n: usize, nu: usize) -> WreathElem {
        WreathElem {
            zeta: vec![Perm::identity(n); nu],
            sigma: Perm::identity(nu),
        }
    }

    /// Inner degree `n`.
    pub fn n(&self) -> usize {
        self.zeta.first().map_or(0, Perm::degree)
    }

    /// `ν = |Ω|`.
    pub fn nu(&self) -> usize {
        self.sigma.degree()
    }

    pub fn zeta(&self) -> &[Perm] {
        &self.zeta
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    /// `(ζσ).(k, ω) = (ζ(σω)(k), σω)`.
    pub fn act(&self, k: usize, omega: usize) -> Result<(usize, usize)> {
        if k >= self.n() || omega >= self.nu() {
            return Err(Error::InvalidArgument(format!(
                "point ({k}, {omega}) outside [{}] x [{}]",
                self.n(),
                self.nu()
            )));
        }
        Ok(self.act_unchecked(k, omega))
    }

    #[inline]
    fn act_unchecked(&self, k: usize, omega: usize) -> (usize, usize) {
        let w = self.sigma.apply(omega);
        (self.zeta[w].apply(k), w)
    }

    /// The group law: `act(a.mul(b), x) = act(a, act(b, x))`.
    pub fn mul(&self, other: &WreathElem) -> Result<WreathElem> {
        if self.n() != other.n() || self.nu() != other.nu() {
            return Err(Error::InvalidArgument(
                "wreath elements of different shapes".into(),
            ));
        }
        let inv = self.sigma.inverse();
        let zeta = (0..self.nu())
            .map(|w| self.zeta[w].compose(&other.zeta[inv.apply(w)]))
            .collect();
        Ok(WreathElem {
            zeta,
            sigma: self.sigma.compose(&other.sigma),
        })
    }

    pub fn inverse(&self) -> WreathElem {
        let zeta = (0..self.nu())
            .map(|u| self.zeta[self.sigma.apply(u)].inverse())
            .collect();
        WreathElem {
            zeta,
            sigma: self.sigma.inverse(),
        }
    }

    /// The permutation of `[n] × Ω` (points `ω * n + k`).
    pub fn as_perm(&self) -> Perm {
        let n = self.n();
        let images = (0..n * self.nu())
            .map(|pt| {
                let (k, w) = self.act_unchecked(pt % n, pt / n);
                w * n + k
            })
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// Cycle type of `<w>` on `[n] × Ω_i` for each orbit of the setup.
    pub fn orbit_types(&self, setup: &OrbitSetup) -> Result<Vec<FactType>> {
        setup.check_sigma(&self.sigma)?;
        let n = self.n();
        let perm = self.as_perm();
        let mut seen = vec![false; n * self.nu()];
        Ok(setup
            .orbits
            .iter()
            .map(|orbit| {
                let mut parts = Vec::new();
                for &w in orbit {
                    for k in 0..n {
                        let start = w * n + k;
                        let mut len = 0;
                        let mut pt = start;
                        while !seen[pt] {
                            seen[pt] = true;
                            pt = perm.apply(pt);
                            len += 1;
                        }
                        if len > 0 {
                            parts.push(len);
                        }
                    }
                }
                parts.sort_unstable();
                FactType::from_sorted(parts)
            })
            .collect())
    }
}

/// `Ω` with the cyclic action of `σ`, split into its orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSetup {
    n: usize,
    sigma: Perm,
    /// Each orbit listed as `ω, σω, σ²ω, ..` from its least element.
    orbits: Vec<Vec<usize>>,
}

impl OrbitSetup {
    pub fn new(n: usize, sigma: Perm) -> Result<OrbitSetup> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "inner degree n must be at least 1".into(),
            ));
        }
        if sigma.degree() == 0 {
            return Err(Error::InvalidArgument("Ω must be nonempty".into()));
        }
        let mut seen = vec![false; sigma.degree()];
        let mut orbits = Vec::new();
        for start in 0..sigma.degree() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut w = start;
            while !seen[w] {
                seen[w] = true;
                orbit.push(w);
                w = sigma.apply(w);
            }
            orbits.push(orbit);
        }
        Ok(OrbitSetup { n, sigma, orbits })
    }

    /// Consecutive blocks of the given sizes, each cycled by `σ`.
    pub fn from_orbit_sizes(n: usize, sizes: &[usize]) -> Result<OrbitSetup> {
        if sizes.contains(&0) {
            return Err(Error::InvalidArgument(
                "orbit sizes must be positive".into(),
            ));
        }
        let mut images = Vec::new();
        let mut base = 0;
        for &s in sizes {
            images.extend((0..s).map(|i| base + (i + 1) % s));
            base += s;
        }
        Self::new(n, Perm::from_images_unchecked(images))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nu(&self) -> usize {
        self.sigma.degree()
    }

    /// Number of orbits `r`.
    pub fn r(&self) -> usize {
        self.orbits.len()
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    fn check_sigma(&self, sigma: &Perm) -> Result<()> {
        if *sigma != self.sigma {
            return Err(Error::InvalidArgument(
                "element's sigma differs from the setup's".into(),
            ));
        }
        Ok(())
    }

    /// `(n!)^ν`, if it fits.
    pub fn group_order(&self) -> Option<u128> {
        let nf = (1..=self.n as u128).product::<u128>();
        nf.checked_pow(self.nu() as u32)
    }

    /// `(n!)^ν / n^r`, the size of the column-transitive set.
    pub fn transitive_formula(&self) -> Option<u128> {
        let denom = (self.n as u128).checked_pow(self.r() as u32)?;
        Some(self.group_order()? / denom)
    }

    /// `n^(-r)`.
    pub fn transitive_density(&self) -> Ratio<u128> {
        Ratio::new(1, (self.n as u128).pow(self.r() as u32))
    }

    /// Checks that `targets` has one partition of `n * |Ω_i|` per orbit.
    pub fn check_targets(&self, targets: &[FactType]) -> Result<()> {
        if targets.len() != self.r() {
            return Err(Error::InvalidArgument(format!(
                "{} targets for {} orbits",
                targets.len(),
                self.r()
            )));
        }
        for (t, o) in targets.iter().zip(&self.orbits) {
            if t.degree() != self.n * o.len() {
                return Err(Error::InvalidArgument(format!(
                    "target {{{t}}} does not partition {}",
                    self.n * o.len()
                )));
            }
        }
        Ok(())
    }
}

/// `<w>` is transitive on `[n] × Ω_i` for every orbit `Ω_i`.
pub fn is_column_transitive(w: &WreathElem, setup: &OrbitSetup) -> Result<bool> {
    setup.check_sigma(&w.sigma)?;
    if w.n() != setup.n {
        return Err(Error::InvalidArgument(
            "inner degree differs from the setup's".into(),
        ));
    }
    Ok(setup.orbits.iter().all(|orbit| {
        let target = setup.n * orbit.len();
        let start = (0, orbit[0]);
        let mut pt = w.act_unchecked(start.0, start.1);
        let mut len = 1;
        while pt != start {
            pt = w.act_unchecked(pt.0, pt.1);
            len += 1;
        }
        len == target
    }))
}

/// Counts of orbit-type tuples, keyed by the tuple.
pub type DensityTable = BTreeMap<Vec<FactType>, u64>;

#[cfg(test)]
mod tests {
    use super::*;

    fn tau() -> Perm {
        Perm::transposition(2, 0, 1)
    }

    #[test]
    fn action_examples() {
        let id = WreathElem::identity(3, 2);
        for k in 0..3 {
            for w in 0..2 {
                assert_eq!(id.act(k, w).unwrap(), (k, w));
            }
        }
        let rot = WreathElem::new(vec![Perm::identity(3); 2], Perm::rotation(2)).unwrap();
        assert_eq!(rot.act(2, 0).unwrap(), (2, 1));
        let t = WreathElem::new(vec![tau()], Perm::identity(1)).unwrap();
        assert_eq!(t.act(0, 0).unwrap(), (1, 0));
        assert!(t.act(2, 0).is_err());
    }

    #[test]
    fn mul_matches_action_exhaustively() {
        let setup = OrbitSetup::from_orbit_sizes(2, &[2]).unwrap();
        let sigmas = [Perm::identity(2), setup.sigma().clone()];
        let mut elems = Vec::new();
        for s in &sigmas {
            for a in Perm::all(2) {
                for b in Perm::all(2) {
                    elems.push(WreathElem::new(vec![a.clone(), b], s.clone()).unwrap());
                }
            }
        }
        for a in &elems {
            for b in &elems {
                let ab = a.mul(b).unwrap();
                for k in 0..2 {
                    for w in 0..2 {
                        let (k1, w1) = b.act(k, w).unwrap();
                        assert_eq!(ab.act(k, w).unwrap(), a.act(k1, w1).unwrap());
                    }
                }
            }
            assert_eq!(a.mul(&a.inverse()).unwrap(), WreathElem::identity(2, 2));
        }
    }

    #[test]
    fn pure_sigma_powers() {
        let sigma = Perm::rotation(3);
        let w = WreathElem::new(vec![Perm::identity(2); 3], sigma.clone()).unwrap();
        let w2 = w.mul(&w).unwrap();
        assert_eq!(w2.sigma(), &sigma.compose(&sigma));
        assert!(w2.zeta().iter().all(Perm::is_identity));
    }

    #[test]
    fn column_transitivity_examples() {
        let one = OrbitSetup::from_orbit_sizes(2, &[1]).unwrap();
        let t = WreathElem::new(vec![tau()], Perm::identity(1)).unwrap();
        assert!(is_column_transitive(&t, &one).unwrap());
        assert!(!is_column_transitive(&WreathElem::identity(2, 1), &one).unwrap());

        // n = 3, Ω of size 2 swapped by σ; ζ(ω1)ζ(ω2) a 3-cycle
        let setup = OrbitSetup::from_orbit_sizes(3, &[2]).unwrap();
        let a = Perm::new(vec![1, 0, 2]).unwrap();
        let b = Perm::new(vec![0, 2, 1]).unwrap();
        assert_eq!(a.compose(&b).cycle_type(), vec![3]);
        let w = WreathElem::new(vec![a, b], setup.sigma().clone()).unwrap();
        assert!(is_column_transitive(&w, &setup).unwrap());
        assert_eq!(
            w.orbit_types(&setup).unwrap(),
            vec![FactType::irreducible(6)]
        );
    }

    #[test]
    fn setup_shapes() {
        let s = OrbitSetup::from_orbit_sizes(2, &[1, 3]).unwrap();
        assert_eq!(s.nu(), 4);
        assert_eq!(s.r(), 2);
        assert_eq!(s.orbits(), &[vec![0], vec![1, 2, 3]]);
        assert_eq!(s.group_order(), Some(16));
        assert_eq!(s.transitive_formula(), Some(4));
        assert!(s
            .check_targets(&[FactType::irreducible(2), FactType::irreducible(6)])
            .is_ok());
        assert!(s.check_targets(&[FactType::irreducible(2)]).is_err());
        assert!(s
            .check_targets(&[FactType::irreducible(2), FactType::irreducible(5)])
            .is_err());
    }
}
