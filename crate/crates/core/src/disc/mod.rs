//! Discriminant classes: square classes in odd characteristic and the
//! Artin-Schreier class of the Berlekamp element in characteristic 2.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::poly::{Poly, SplittingField};

/// Largest shift set accepted by [`even_sum_criterion`].
pub const MAX_SHIFTS: usize = 20;

/// Class of `A(h)` in `F_q / ℘(F_q) ≅ F_2`, detected by the absolute trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ASClass {
    /// 0 for the trivial class.
    pub value: u8,
    /// `A(h)` itself, as an element of the base field.
    pub a: FieldElem,
}

#[derive(Clone, Debug)]
pub struct Berlekamp {
    pub splitting: SplittingField,
    /// `A(h)` in the splitting field.
    pub a_split: FieldElem,
    pub class: ASClass,
}

/// `A(h) = Σ_{i<j} x_i x_j / (x_i + x_j)^2` over the roots of a separable
/// `h` in characteristic 2, and its class.
pub fn berlekamp_element(h: &Poly) -> Result<Berlekamp> {
    let f = h.field();
    if f.characteristic() != 2 {
        return Err(Error::NeedsCharacteristicTwo);
    }
    let n = h.degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    if !h.is_separable() {
        return Err(Error::Inseparable);
    }
    let sf = h.roots_in_splitting_field()?;
    let big = &*sf.field;
    let mut a = big.zero();
    for (i, &xi) in sf.roots.iter().enumerate() {
        for &xj in &sf.roots[i + 1..] {
            let s = big.add(xi, xj);
            let term = big.div(big.mul(xi, xj), big.mul(s, s))?;
            a = big.add(a, term);
        }
    }
    let base = sf
        .embedding
        .preimage(a)
        .ok_or_else(|| Error::Internal("Berlekamp element is not fixed by Frobenius".into()))?;
    let value = f.abs_trace(base) as u8;
    Ok(Berlekamp {
        splitting: sf,
        a_split: a,
        class: ASClass { value, a: base },
    })
}

/// Whether `Disc(h)` is a square in `F_q`, `q` odd (true: trivial class).
pub fn disc_class_odd(h: &Poly) -> Result<bool> {
    let f = h.field();
    if f.characteristic() == 2 {
        return Err(Error::NeedsOddCharacteristic);
    }
    let d = h.discriminant()?;
    if d.is_zero() {
        return Err(Error::Inseparable);
    }
    f.is_square(d)
}

#[derive(Clone, Debug, Serialize)]
pub struct ParityViolation {
    pub h: String,
    pub degree: usize,
    pub factors: usize,
    pub class: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParityReport {
    pub degree_bound: usize,
    pub samples: usize,
    pub seed: u64,
    /// Samples whose class was trivial.
    pub trivial_class: usize,
    pub violations: Vec<ParityViolation>,
}

/// Samples random separable monic `h` with `2 <= deg h <= degree_bound` and
/// checks `r ≡ deg h (mod 2)` against a trivial Berlekamp class, where `r`
/// is the number of irreducible factors.
pub fn parity_law_check(
    field: &Arc<Field>,
    degree_bound: usize,
    samples: usize,
    seed: u64,
) -> Result<ParityReport> {
    if field.characteristic() != 2 {
        return Err(Error::NeedsCharacteristicTwo);
    }
    if degree_bound < 2 {
        return Err(Error::DegreeTooSmall {
            min: 2,
            got: degree_bound,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.order();
    let mut violations = Vec::new();
    let mut trivial_class = 0;
    let mut taken = 0;
    while taken < samples {
        let n = rng.gen_range(2..=degree_bound);
        let mut coeffs: Vec<FieldElem> = (0..n).map(|_| FieldElem(rng.gen_range(0..q))).collect();
        coeffs.push(field.one());
        let h = Poly::new(field, coeffs)?;
        if !h.is_separable() {
            continue;
        }
        taken += 1;
        let r = h.fact_type()?.parts().len();
        let class = berlekamp_element(&h)?.class.value;
        if class == 0 {
            trivial_class += 1;
        }
        if ((n - r) % 2 == 0) != (class == 0) {
            violations.push(ParityViolation {
                h: h.to_string_var("t"),
                degree: n,
                factors: r,
                class,
            });
        }
    }
    Ok(ParityReport {
        degree_bound,
        samples,
        seed,
        trivial_class,
        violations,
    })
}

/// Every nonempty even-size subset of `omega` has nonzero sum
/// (characteristic 2, distinct elements).
pub fn even_sum_criterion(field: &Field, omega: &[FieldElem]) -> Result<bool> {
    if field.characteristic() != 2 {
        return Err(Error::NeedsCharacteristicTwo);
    }
    if omega.len() > MAX_SHIFTS {
        return Err(Error::GuardExceeded {
            subject: "shift set size",
            limit: MAX_SHIFTS as u128,
            got: omega.len() as u128,
        });
    }
    for &w in omega {
        field.check(w)?;
    }
    let mut sorted = omega.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(
            "shift set has repeated elements".into(),
        ));
    }
    // Gray-code walk over subsets, keeping the running sum
    let mut sum = field.zero();
    let mut mask = 0u32;
    for i in 1u32..(1 << omega.len()) {
        let bit = i.trailing_zeros();
        mask ^= 1 << bit;
        sum = field.add(sum, omega[bit as usize]);
        if mask.count_ones().is_multiple_of(2) && sum.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
