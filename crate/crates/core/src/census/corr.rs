use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::disc::even_sum_criterion;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::poly::dense;

#[derive(Clone, Debug, PartialEq)]
pub struct CorrReport {
    pub q: u64,
    pub omega: Vec<FieldElem>,
    pub total: u64,
    /// Bitmask of the shifts `ω` with `g - ω` irreducible -> count.
    pub joint: BTreeMap<u32, u64>,
    /// Count of irreducible `g - ω` per shift.
    pub marginals: Vec<u64>,
    pub all_irreducible: u64,
    /// `q^2 / 2^|Ω|`.
    pub independent_prediction: f64,
    /// `(all_irreducible - prediction) / prediction`.
    pub relative_deviation: f64,
    pub even_sum: bool,
}

/// Walks every monic quadratic `g` over `F_q`, `q` even, and records which
/// of the shifts `g - ω` are irreducible.
pub fn correlation_mode(field: &Arc<Field>, n: usize, omega: &[FieldElem]) -> Result<CorrReport> {
    if field.characteristic() != 2 {
        return Err(Error::NeedsCharacteristicTwo);
    }
    if n != 2 {
        return Err(Error::InvalidArgument(format!(
            "correlation mode needs n = 2, got {n}"
        )));
    }
    if omega.is_empty() {
        return Err(Error::InvalidArgument("empty shift set".into()));
    }
    let even_sum = even_sum_criterion(field, omega)?;
    let f = &**field;
    let q = field.order();
    let m = omega.len();
    let joint = (0..q)
        .into_par_iter()
        .map(|a| {
            let mut joint: BTreeMap<u32, u64> = BTreeMap::new();
            for b in 0..q {
                let mut mask = 0u32;
                for (i, &w) in omega.iter().enumerate() {
                    let g = [f.sub(FieldElem(b), w), FieldElem(a), f.one()];
                    if dense::is_irreducible(f, &g) {
                        mask |= 1 << i;
                    }
                }
                *joint.entry(mask).or_insert(0) += 1;
            }
            joint
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_insert(0) += v;
            }
            x
        });
    let marginals = (0..m)
        .map(|i| {
            joint
                .iter()
                .filter(|(&mask, _)| mask & (1 << i) != 0)
                .map(|(_, &c)| c)
                .sum()
        })
        .collect();
    let all = (1u32 << m) - 1;
    let all_irreducible = joint.get(&all).copied().unwrap_or(0);
    let total = q * q;
    let independent_prediction = total as f64 / (1u64 << m) as f64;
    Ok(CorrReport {
        q,
        omega: omega.to_vec(),
        total,
        joint,
        marginals,
        all_irreducible,
        independent_prediction,
        relative_deviation: (all_irreducible as f64 - independent_prediction)
            / independent_prediction,
        even_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_shift_counts_irreducibles() {
        let f = Field::new(2, 3).unwrap();
        let rep = correlation_mode(&f, 2, &[f.zero()]).unwrap();
        assert_eq!(rep.all_irreducible, 28);
        assert!(rep.relative_deviation.abs() <= 1.0 / 8.0 + 1e-12);
        assert!(correlation_mode(&f, 3, &[f.zero()]).is_err());
    }
}
