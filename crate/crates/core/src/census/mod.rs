//! Censuses over monic substitutions `g(t) = t^n + a_1 t^(n-1) + .. + a_n`:
//! the factorization types of every `f_i(g(t))`, tallied and compared with
//! the wreath-product densities.

mod corr;
mod swan;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use corr::{correlation_mode, CorrReport};
pub use swan::{swan_mode, SwanReport};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::poly::{dense, fact_type_squarefree, FactType, Poly};
use crate::wreath::{density_table, OrbitSetup};

/// Largest `q^n` an exhaustive census will walk.
pub const EXHAUSTIVE_LIMIT: u128 = 100_000_000;

/// Samples drawn from one independently seeded stream.
pub const SAMPLE_BLOCK: u64 = 4096;

/// Name of the sampling generator, recorded in reports.
pub const SAMPLER: &str = "ChaCha8";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample { samples: u64, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct CensusSpec {
    pub field: Arc<Field>,
    pub n: usize,
    pub fs: Vec<Poly>,
    pub mode: Mode,
    /// One target type per `f_i`; defaults to all irreducible.
    pub targets: Option<Vec<FactType>>,
    /// Allows reducible `f_i`; no prediction is made.
    pub raw: bool,
}

impl CensusSpec {
    pub fn new(field: &Arc<Field>, n: usize, fs: Vec<Poly>) -> CensusSpec {
        CensusSpec {
            field: Arc::clone(field),
            n,
            fs,
            mode: Mode::Exhaustive,
            targets: None,
            raw: false,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_targets(mut self, targets: Vec<FactType>) -> Self {
        self.targets = Some(targets);
        self
    }

    pub fn raw(mut self) -> Self {
        self.raw = true;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument(
                "substitution degree n must be at least 1".into(),
            ));
        }
        if self.fs.is_empty() {
            return Err(Error::InvalidArgument("at least one f is required".into()));
        }
        for (i, f) in self.fs.iter().enumerate() {
            if **f.field() != *self.field {
                return Err(Error::FieldMismatch);
            }
            if f.is_constant() {
                return Err(Error::ConstantPolynomial);
            }
            if !f.is_monic() {
                return Err(Error::NotMonic);
            }
            if !f.is_separable() {
                return Err(Error::Inseparable);
            }
            if !self.raw && !f.is_irreducible()? {
                return Err(Error::Reducible(f.to_string()));
            }
            if self.fs[..i].contains(f) {
                return Err(Error::InvalidArgument(format!("f = {f} listed twice")));
            }
        }
        if self.mode == Mode::Exhaustive {
            let points = (self.field.order() as u128)
                .checked_pow(self.n as u32)
                .unwrap_or(u128::MAX);
            if points > EXHAUSTIVE_LIMIT {
                return Err(Error::GuardExceeded {
                    subject: "q^n",
                    limit: EXHAUSTIVE_LIMIT,
                    got: points,
                });
            }
        }
        if let Some(t) = &self.targets {
            if t.len() != self.fs.len() {
                return Err(Error::InvalidArgument(format!(
                    "{} targets for {} polynomials",
                    t.len(),
                    self.fs.len()
                )));
            }
            for (t, f) in t.iter().zip(&self.fs) {
                let d = self.n * f.degree().unwrap();
                if t.degree() != d {
                    return Err(Error::InvalidArgument(format!(
                        "target {{{t}}} does not partition deg f(g) = {d}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The target tuple: explicit targets or all irreducible.
    pub fn target_types(&self) -> Vec<FactType> {
        self.targets.clone().unwrap_or_else(|| {
            self.fs
                .iter()
                .map(|f| FactType::irreducible(self.n * f.degree().unwrap_or(0)))
                .collect()
        })
    }

    pub fn total(&self) -> u64 {
        match self.mode {
            Mode::Exhaustive => (self.field.order()).pow(self.n as u32),
            Mode::Sample { samples, .. } => samples,
        }
    }
}

/// `Ω` as the disjoint union of the root sets of the `f_i`, with Frobenius
/// cycling each root set.
pub fn derive_setup(spec: &CensusSpec) -> Result<OrbitSetup> {
    let mut sizes = Vec::with_capacity(spec.fs.len());
    for f in &spec.fs {
        if !f.is_irreducible()? {
            return Err(Error::Reducible(f.to_string()));
        }
        sizes.push(f.degree().unwrap());
    }
    OrbitSetup::from_orbit_sizes(spec.n, &sizes)
}

/// One row of the histogram.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeCount {
    pub types: Vec<FactType>,
    pub count: u64,
    /// Wreath-product density of this tuple, when a prediction exists.
    pub predicted: Option<Ratio<u64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CensusReport {
    pub q: u64,
    pub n: usize,
    pub fs: Vec<Poly>,
    pub mode: Mode,
    pub total: u64,
    pub separable_total: u64,
    /// Substitutions where some `f_i(g)` has a repeated factor.
    pub inseparable: u64,
    pub targets: Vec<FactType>,
    pub hits: u64,
    /// Observed tuples, plus predicted tuples that were never observed, in
    /// tuple order.
    pub histogram: Vec<TypeCount>,
    pub predicted_density: Option<Ratio<u64>>,
    /// `hits - density * q^n` (sample counts are scaled up to `q^n`).
    pub deviation: Option<f64>,
    /// `deviation / q^(n - 1/2)`.
    pub normalized_deviation: Option<f64>,
    /// Sampling standard error of the hit rate.
    pub standard_error: Option<f64>,
    /// Largest `|observed - predicted|` frequency over all tuples, with
    /// frequencies taken among separable substitutions.
    pub max_frequency_gap: Option<f64>,
    /// Tuples observed with positive count but zero predicted density.
    pub shadow_violations: Vec<Vec<FactType>>,
    /// Irreducible `f_i(g)` whose degree is not `n * deg f_i`.
    pub degree_law_violations: u64,
}

impl CensusReport {
    /// Observed frequency of a tuple among separable substitutions.
    pub fn frequency(&self, types: &[FactType]) -> f64 {
        let count = self
            .histogram
            .iter()
            .find(|r| r.types == types)
            .map_or(0, |r| r.count);
        count as f64 / self.separable_total.max(1) as f64
    }
}

#[derive(Default)]
struct Tally {
    inseparable: u64,
    degree_law_violations: u64,
    counts: HashMap<Vec<FactType>, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.inseparable += other.inseparable;
        self.degree_law_violations += other.degree_law_violations;
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self
    }
}

/// Per-substitution classifier over raw coefficient vectors.
struct Classifier<'a> {
    field: &'a Field,
    fs: Vec<Vec<FieldElem>>,
    n: usize,
}

impl Classifier<'_> {
    fn classify(&self, g: &[FieldElem], tally: &mut Tally) {
        let f = self.field;
        let mut types = Vec::with_capacity(self.fs.len());
        for outer in &self.fs {
            let h = if outer.len() == 2 && outer[0].is_zero() {
                g.to_vec()
            } else {
                dense::compose(f, outer, g)
            };
            if dense::gcd(f, &h, &dense::derivative(f, &h)).len() != 1 {
                tally.inseparable += 1;
                return;
            }
            let ty = fact_type_squarefree(f, &h);
            if ty.is_irreducible() && ty.degree() != self.n * (outer.len() - 1) {
                tally.degree_law_violations += 1;
            }
            types.push(ty);
        }
        *tally.counts.entry(types).or_insert(0) += 1;
    }
}

fn exhaustive(cl: &Classifier, q: u64) -> Tally {
    let n = cl.n;
    (0..q)
        .into_par_iter()
        .map(|a1| {
            let mut tally = Tally::default();
            // g low-to-high: a_n, .., a_1, 1
            let mut g = vec![FieldElem(0); n + 1];
            g[n] = cl.field.one();
            g[n - 1] = FieldElem(a1);
            loop {
                cl.classify(&g, &mut tally);
                // odometer over a_2..a_n, a_n fastest
                let mut i = 0;
                while i + 1 < n {
                    g[i].0 += 1;
                    if g[i].0 < q {
                        break;
                    }
                    g[i].0 = 0;
                    i += 1;
                }
                if i + 1 >= n {
                    break;
                }
            }
            tally
        })
        .reduce(Tally::default, Tally::merge)
}

fn sampled(cl: &Classifier, q: u64, samples: u64, seed: u64) -> Tally {
    let n = cl.n;
    let blocks = samples.div_ceil(SAMPLE_BLOCK);
    (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let mut tally = Tally::default();
            let len = SAMPLE_BLOCK.min(samples - b * SAMPLE_BLOCK);
            let mut g = vec![FieldElem(0); n + 1];
            g[n] = cl.field.one();
            for _ in 0..len {
                for c in &mut g[..n] {
                    *c = FieldElem(rng.gen_range(0..q));
                }
                cl.classify(&g, &mut tally);
            }
            tally
        })
        .reduce(Tally::default, Tally::merge)
}

/// Runs the census on the current rayon pool. Results do not depend on the
/// pool size.
pub fn run_census(spec: &CensusSpec) -> Result<CensusReport> {
    spec.validate()?;
    let field = &*spec.field;
    let q = field.order();
    let cl = Classifier {
        field,
        fs: spec.fs.iter().map(|f| f.coeffs().to_vec()).collect(),
        n: spec.n,
    };
    let tally = match spec.mode {
        Mode::Exhaustive => exhaustive(&cl, q),
        Mode::Sample { samples, seed } => sampled(&cl, q, samples, seed),
    };
    let total = spec.total();
    let separable_total = total - tally.inseparable;
    let targets = spec.target_types();

    let table = if spec.raw {
        None
    } else {
        let setup = derive_setup(spec)?;
        let order = setup.group_order().expect("guarded by enumeration") as u64;
        Some((density_table(&setup)?, order))
    };
    let mut rows: BTreeMap<Vec<FactType>, (u64, Option<Ratio<u64>>)> = tally
        .counts
        .into_iter()
        .map(|(k, v)| (k, (v, None)))
        .collect();
    if let Some((table, order)) = &table {
        for row in rows.iter_mut() {
            row.1 .1 = Some(Ratio::new(0, 1));
        }
        for (k, &v) in table {
            rows.entry(k.clone()).or_insert((0, None)).1 = Some(Ratio::new(v, *order));
        }
    }
    let histogram: Vec<TypeCount> = rows
        .into_iter()
        .map(|(types, (count, predicted))| TypeCount {
            types,
            count,
            predicted,
        })
        .collect();
    let hits = histogram
        .iter()
        .find(|r| r.types == targets)
        .map_or(0, |r| r.count);

    let predicted_density = table
        .as_ref()
        .map(|(t, order)| Ratio::new(t.get(&targets).copied().unwrap_or(0), *order));
    let space = (q as f64).powi(spec.n as i32);
    let scale = space.powf(1.0 - 0.5 / spec.n as f64);
    let hit_rate = hits as f64 / total.max(1) as f64;
    let deviation = predicted_density.map(|d| (hit_rate - ratio_f64(d)) * space);
    let normalized_deviation = deviation.map(|d| d / scale);
    let standard_error = match spec.mode {
        Mode::Sample { samples, .. } => {
            Some((hit_rate * (1.0 - hit_rate) / samples.max(1) as f64).sqrt())
        }
        Mode::Exhaustive => None,
    };
    let shadow_violations = histogram
        .iter()
        .filter(|r| r.count > 0 && r.predicted.is_some_and(|p| *p.numer() == 0))
        .map(|r| r.types.clone())
        .collect();
    let max_frequency_gap = table.as_ref().map(|_| {
        histogram
            .iter()
            .map(|r| {
                let obs = r.count as f64 / separable_total.max(1) as f64;
                (obs - r.predicted.map_or(0.0, ratio_f64)).abs()
            })
            .fold(0.0, f64::max)
    });

    Ok(CensusReport {
        q,
        n: spec.n,
        fs: spec.fs.clone(),
        mode: spec.mode,
        total,
        separable_total,
        inseparable: tally.inseparable,
        targets,
        hits,
        histogram,
        predicted_density,
        deviation,
        normalized_deviation,
        standard_error,
        max_frequency_gap,
        shadow_violations,
        degree_law_violations: tally.degree_law_violations,
    })
}

/// A census whose hits are the substitutions with the given type tuple.
pub fn type_census(spec: &CensusSpec) -> Result<CensusReport> {
    if spec.targets.is_none() {
        return Err(Error::InvalidArgument(
            "type census needs target types".into(),
        ));
    }
    run_census(spec)
}

pub(crate) fn ratio_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
