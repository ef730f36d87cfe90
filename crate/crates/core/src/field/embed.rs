use std::sync::Arc;

use super::{add_mod, inv_mod, mul_mod, Field, FieldElem};
use crate::error::{Error, Result};

/// The embedding `F_{p^j} -> F_{p^k}` (`j | k`) sending the class of `x` to
/// the lexicographically least root of the small field's modulus.
#[derive(Clone, Debug)]
pub struct Embedding {
    small: Arc<Field>,
    big: Arc<Field>,
    /// Images of `1, x, .., x^(j-1)`.
    basis: Vec<FieldElem>,
}

impl Embedding {
    pub fn new(small: &Arc<Field>, big: &Arc<Field>) -> Result<Embedding> {
        let (j, k) = (small.degree(), big.degree());
        if small.characteristic() != big.characteristic() || k % j != 0 {
            return Err(Error::NoEmbedding { small: j, big: k });
        }
        let basis = if j == 1 {
            vec![big.one()]
        } else if small == big {
            (0..j as usize)
                .map(|i| big.pow(big.x(), i as u64))
                .collect()
        } else {
            let modulus: Vec<FieldElem> =
                small.modulus().iter().map(|&c| big.from_int(c)).collect();
            let root = *crate::poly::roots_in_own_field(big, &modulus, crate::poly::DEFAULT_SEED)
                .first()
                .ok_or_else(|| Error::Internal("modulus has no root in the extension".into()))?;
            let mut out = Vec::with_capacity(j as usize);
            let mut cur = big.one();
            for _ in 0..j {
                out.push(cur);
                cur = big.mul(cur, root);
            }
            out
        };
        Ok(Embedding {
            small: Arc::clone(small),
            big: Arc::clone(big),
            basis,
        })
    }

    pub fn source(&self) -> &Arc<Field> {
        &self.small
    }

    pub fn target(&self) -> &Arc<Field> {
        &self.big
    }

    /// Image of the generator class `x` (or of 1 for a prime field).
    pub fn generator_image(&self) -> FieldElem {
        self.basis.get(1).copied().unwrap_or(self.basis[0])
    }

    pub fn apply(&self, a: FieldElem) -> FieldElem {
        let big = &*self.big;
        self.small
            .coeffs(a)
            .iter()
            .zip(&self.basis)
            .fold(big.zero(), |acc, (&c, &b)| {
                if c == 0 {
                    acc
                } else {
                    big.add(acc, big.mul(big.from_int(c), b))
                }
            })
    }

    /// The preimage of `b`, if `b` lies in the image of the embedding.
    /// Solves the `F_p`-linear system in the coefficient basis.
    pub fn preimage(&self, b: FieldElem) -> Option<FieldElem> {
        let p = self.big.characteristic();
        let j = self.basis.len();
        let k = self.big.degree() as usize;
        // rows: k equations, columns: j unknowns + rhs
        let cols: Vec<Vec<u64>> = self.basis.iter().map(|&e| self.big.coeffs(e)).collect();
        let rhs = self.big.coeffs(b);
        let mut mat: Vec<Vec<u64>> = (0..k)
            .map(|r| {
                let mut row: Vec<u64> = cols.iter().map(|c| c[r]).collect();
                row.push(rhs[r]);
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..j {
            let Some(pr) = (row..k).find(|&r| mat[r][col] != 0) else {
                continue;
            };
            mat.swap(row, pr);
            let inv = inv_mod(mat[row][col], p);
            for c in col..=j {
                mat[row][c] = mul_mod(mat[row][c], inv, p);
            }
            for r in 0..k {
                if r != row && mat[r][col] != 0 {
                    let factor = mat[r][col];
                    for c in col..=j {
                        let t = mul_mod(factor, mat[row][c], p);
                        mat[r][c] = add_mod(mat[r][c], p - t, p);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if mat[row..].iter().any(|r| r[j] != 0) {
            return None;
        }
        let mut sol = vec![0u64; j];
        for (r, &c) in pivots.iter().enumerate() {
            sol[c] = mat[r][j];
        }
        let a = self.small.from_coeffs(&sol).ok()?;
        (self.apply(a) == b).then_some(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_into_f64_is_a_ring_map() {
        let f4 = Field::new(2, 2).unwrap();
        let f64_ = Field::new(2, 6).unwrap();
        let e = Embedding::new(&f4, &f64_).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(e.apply(f4.add(a, b)), f64_.add(e.apply(a), e.apply(b)));
                assert_eq!(e.apply(f4.mul(a, b)), f64_.mul(e.apply(a), e.apply(b)));
            }
            assert_eq!(e.preimage(e.apply(a)), Some(a));
        }
        let w = e.generator_image();
        assert_eq!(f64_.add(f64_.mul(w, w), w), f64_.one());
        // something outside the image of F_4
        let outside = f64_.elements().find(|&b| e.preimage(b).is_none());
        assert!(outside.is_some());
    }

    #[test]
    fn degree_must_divide() {
        let f4 = Field::new(2, 2).unwrap();
        let f8 = Field::new(2, 3).unwrap();
        assert!(matches!(
            Embedding::new(&f4, &f8),
            Err(Error::NoEmbedding { .. })
        ));
    }
}
