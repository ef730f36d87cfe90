use std::sync::Arc;

use num_integer::Integer;

use super::dense::{self, Coeffs};
use super::factor::{equal_degree, fact_type_squarefree, rng_for};
use super::Poly;
use crate::error::{Error, Result};
use crate::field::{Embedding, Field, FieldElem};

/// A splitting field `F_{q^m}` of a separable polynomial over `F_q`.
#[derive(Clone, Debug)]
pub struct SplittingField {
    /// `m`, the lcm of the irreducible-factor degrees.
    pub relative_degree: u32,
    /// `F_{q^m}`, built over `F_p` with its own lexicographically least modulus.
    pub field: Arc<Field>,
    /// The subfield embedding of `F_q` into `field`.
    pub embedding: Embedding,
    /// All roots, each once, sorted lexicographically.
    pub roots: Vec<FieldElem>,
}

/// Roots in the field of definition, sorted.
pub(crate) fn roots_in_own_field(f: &Field, a: &[FieldElem], seed: u64) -> Vec<FieldElem> {
    if a.len() < 2 {
        return Vec::new();
    }
    let m = dense::monic(f, a);
    let xq = dense::powmod(f, &dense::x(f), f.order(), &m);
    let split = dense::gcd(f, &m, &dense::sub(f, &xq, &dense::x(f)));
    if split.len() < 2 {
        return Vec::new();
    }
    let mut rng = rng_for(seed, &split);
    let mut roots: Vec<FieldElem> = equal_degree(f, &split, 1, &mut rng)
        .into_iter()
        .map(|lin: Coeffs| f.neg(lin[0]))
        .collect();
    roots.sort_unstable();
    roots
}

pub(crate) fn splitting_field(poly: &Poly) -> Result<SplittingField> {
    let f = poly.field();
    if poly.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !poly.is_separable() {
        return Err(Error::Inseparable);
    }
    let ty = fact_type_squarefree(f, poly.coeffs());
    let m = ty.parts().iter().fold(1usize, |acc, &d| acc.lcm(&d)) as u32;
    let big_k = f.degree().checked_mul(m).ok_or(Error::FieldTooLarge {
        p: f.characteristic(),
        k: u32::MAX,
    })?;
    let big = if m == 1 {
        Arc::clone(f)
    } else {
        Field::new(f.characteristic(), big_k)?
    };
    let embedding = Embedding::new(f, &big)?;
    let lifted: Coeffs = poly.coeffs().iter().map(|&c| embedding.apply(c)).collect();
    let roots = roots_in_own_field(&big, &lifted, super::DEFAULT_SEED);
    if roots.len() != poly.degree().unwrap() {
        return Err(Error::Internal(format!(
            "found {} roots of a separable polynomial of degree {}",
            roots.len(),
            poly.degree().unwrap()
        )));
    }
    Ok(SplittingField {
        relative_degree: m,
        field: big,
        embedding,
        roots,
    })
}
