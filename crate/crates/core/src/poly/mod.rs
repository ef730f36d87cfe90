//! Univariate polynomials over a finite field.

mod count;
pub mod dense;
mod factor;
mod roots;
mod text;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

pub use count::{count_monic_irreducible, mobius};
pub(crate) use factor::fact_type_squarefree;
pub use factor::DEFAULT_SEED;
pub(crate) use roots::roots_in_own_field;
pub use roots::SplittingField;
pub(crate) use text::parse_multi;

use dense::Coeffs;

/// A dense polynomial over a [`Field`], low-to-high, trailing zeros trimmed.
#[derive(Clone)]
pub struct Poly {
    field: Arc<Field>,
    coeffs: Coeffs,
}

impl Poly {
    /// Builds a polynomial from field elements (low-to-high).
    pub fn new(field: &Arc<Field>, coeffs: Vec<FieldElem>) -> Result<Poly> {
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(Self::from_raw(field, coeffs))
    }

    pub(crate) fn from_raw(field: &Arc<Field>, mut coeffs: Coeffs) -> Poly {
        dense::trim(&mut coeffs);
        Poly {
            field: Arc::clone(field),
            coeffs,
        }
    }

    /// Integer coefficients (low-to-high) mapped into the prime subfield.
    pub fn from_ints(field: &Arc<Field>, coeffs: &[i64]) -> Poly {
        let raw = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Self::from_raw(field, raw)
    }

    pub fn zero(field: &Arc<Field>) -> Poly {
        Self::from_raw(field, Vec::new())
    }

    pub fn constant(field: &Arc<Field>, c: FieldElem) -> Poly {
        Self::from_raw(field, vec![c])
    }

    pub fn one(field: &Arc<Field>) -> Poly {
        Self::constant(field, field.one())
    }

    /// The polynomial `x`.
    pub fn x(field: &Arc<Field>) -> Poly {
        Self::from_raw(field, dense::x(field))
    }

    /// `c x^e`.
    pub fn monomial(field: &Arc<Field>, c: FieldElem, e: usize) -> Poly {
        let mut v = vec![field.zero(); e + 1];
        v[e] = c;
        Self::from_raw(field, v)
    }

    /// Parses the `X^3 + 2*X + 1` grammar; see [`Poly::to_string_var`].
    pub fn parse(field: &Arc<Field>, src: &str) -> Result<Poly> {
        text::parse(field, src)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        dense::degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<FieldElem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(self.field.one())
    }

    pub fn monic(&self) -> Poly {
        self.with(dense::monic(&self.field, &self.coeffs))
    }

    pub fn same_field(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, coeffs: Coeffs) -> Poly {
        Poly {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    /// Re-homes this polynomial on an equal field context (for example a
    /// per-thread copy).
    pub fn rehome(&self, field: &Arc<Field>) -> Result<Poly> {
        if *self.field != **field {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::from_raw(field, self.coeffs.clone()))
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        self.with(dense::scale(&self.field, &self.coeffs, c))
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.with(dense::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.with(dense::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.with(dense::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = dense::div_rem(&self.field, &self.coeffs, &divisor.coeffs);
        Ok((self.with(q), self.with(r)))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(g)`.
    pub fn compose(&self, g: &Poly) -> Result<Poly> {
        self.check_field(g)?;
        Ok(self.with(dense::compose(&self.field, &self.coeffs, &g.coeffs)))
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        dense::eval(&self.field, &self.coeffs, x)
    }

    pub fn derivative(&self) -> Poly {
        self.with(dense::derivative(&self.field, &self.coeffs))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.with(dense::gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// `gcd(f, f')` is a nonzero constant. The zero polynomial is not separable.
    pub fn is_separable(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        dense::gcd(
            &self.field,
            &self.coeffs,
            &dense::derivative(&self.field, &self.coeffs),
        )
        .len()
            == 1
    }

    /// Rabin's test on the monic associate. Constants are rejected.
    pub fn is_irreducible(&self) -> Result<bool> {
        match self.degree() {
            None | Some(0) => Err(Error::ConstantPolynomial),
            Some(_) => Ok(dense::is_irreducible(&self.field, &self.coeffs)),
        }
    }

    /// Resultant with formal degrees equal to the actual degrees; see
    /// [`Poly::resultant_formal`].
    pub fn resultant(&self, other: &Poly) -> Result<FieldElem> {
        let m = self.degree().ok_or(Error::ZeroPolynomial)?;
        let n = other.degree().ok_or(Error::ZeroPolynomial)?;
        self.resultant_formal(other, m, n)
    }

    /// Determinant of the Sylvester matrix of `self` (formal degree `m`) and
    /// `other` (formal degree `n`), rows of `self` first. Coefficients above
    /// the actual degree are taken as zero.
    pub fn resultant_formal(&self, other: &Poly, m: usize, n: usize) -> Result<FieldElem> {
        self.check_field(other)?;
        if self.degree().is_some_and(|d| d > m) || other.degree().is_some_and(|d| d > n) {
            return Err(Error::InvalidArgument(
                "formal degree below actual degree".into(),
            ));
        }
        let f = &*self.field;
        let size = m + n;
        if size == 0 {
            return Ok(f.one());
        }
        let mut mat = vec![vec![f.zero(); size]; size];
        for r in 0..n {
            for i in 0..=m {
                mat[r][r + i] = self.coeff(m - i);
            }
        }
        for r in 0..m {
            for i in 0..=n {
                mat[n + r][r + i] = other.coeff(n - i);
            }
        }
        Ok(determinant(f, mat))
    }

    /// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)` with `f'` at formal degree `n - 1`.
    pub fn discriminant(&self) -> Result<FieldElem> {
        let n = self.degree().unwrap_or(0);
        if n < 2 {
            return Err(Error::DegreeTooSmall { min: 2, got: n });
        }
        let f = &*self.field;
        let res = self.resultant_formal(&self.derivative(), n, n - 1)?;
        let mut disc = f.div(res, self.leading_coeff().unwrap())?;
        if (n * (n - 1) / 2) % 2 == 1 {
            disc = f.neg(disc);
        }
        Ok(disc)
    }

    /// Squarefree decomposition of the monic associate: pairs
    /// `(squarefree factor, multiplicity)` with pairwise coprime factors.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        Ok(
            factor::squarefree(&self.field, &dense::monic(&self.field, &self.coeffs))
                .into_iter()
                .map(|(c, e)| (self.with(c), e))
                .collect(),
        )
    }

    /// Factorization type: degrees of the irreducible factors with
    /// multiplicity.
    pub fn fact_type(&self) -> Result<FactType> {
        if self.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        Ok(factor::fact_type(&self.field, &self.coeffs))
    }

    /// Full factorization into monic irreducibles with multiplicities, using
    /// the default seed for the equal-degree splitting.
    pub fn factor(&self) -> Result<Vec<(Poly, usize)>> {
        self.factor_seeded(DEFAULT_SEED)
    }

    /// As [`Poly::factor`] with an explicit global seed. The output does not
    /// depend on the seed; only the work done to find it does.
    pub fn factor_seeded(&self, seed: u64) -> Result<Vec<(Poly, usize)>> {
        if self.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        Ok(factor::factor(&self.field, &self.coeffs, seed)
            .into_iter()
            .map(|(c, e)| (self.with(c), e))
            .collect())
    }

    /// Roots lying in the field of definition, sorted.
    pub fn roots(&self) -> Result<Vec<FieldElem>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(roots::roots_in_own_field(
            &self.field,
            &self.coeffs,
            DEFAULT_SEED,
        ))
    }

    /// The splitting field `F_{q^m}` together with all roots, each once.
    pub fn roots_in_splitting_field(&self) -> Result<SplittingField> {
        roots::splitting_field(self)
    }

    /// Renders with the given variable name.
    pub fn to_string_var(&self, var: &str) -> String {
        text::render(self, var)
    }
}

/// Gaussian elimination determinant over a field.
pub(crate) fn determinant(f: &Field, mut mat: Vec<Vec<FieldElem>>) -> FieldElem {
    let n = mat.len();
    let mut det = f.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !mat[r][col].is_zero()) else {
            return f.zero();
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = f.neg(det);
        }
        let pv = mat[col][col];
        det = f.mul(det, pv);
        let inv = f.inv(pv).expect("nonzero pivot");
        for r in col + 1..n {
            let factor = f.mul(mat[r][col], inv);
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let t = f.mul(factor, mat[col][c]);
                mat[r][c] = f.sub(mat[r][c], t);
            }
        }
    }
    det
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.same_field(other)
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("X"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Poly[F_{}^{}]({})",
            self.field.characteristic(),
            self.field.degree(),
            self
        )
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;

            /// Panics if the operands live in different fields.
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs)
                    .expect("polynomials over different fields")
            }
        }

        impl $trait<Poly> for Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.with(dense::neg(&self.field, &self.coeffs))
    }
}

/// A factorization type: the multiset of irreducible-factor degrees, kept
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactType(Vec<usize>);

impl FactType {
    pub fn new(mut parts: Vec<usize>) -> Result<FactType> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "a factorization type needs positive parts".into(),
            ));
        }
        parts.sort_unstable();
        Ok(FactType(parts))
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> FactType {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        FactType(parts)
    }

    /// The type `{d}` of an irreducible polynomial of degree `d`.
    pub fn irreducible(d: usize) -> FactType {
        FactType(vec![d])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for FactType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for FactType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad factorization type `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        FactType::new(parts)
    }
}

impl Serialize for FactType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> Arc<Field> {
        Field::new(p, 1).unwrap()
    }

    #[test]
    fn compose_examples() {
        let f3 = fp(3);
        let x2 = Poly::from_ints(&f3, &[0, 0, 1]);
        let g = Poly::from_ints(&f3, &[1, 1]);
        assert_eq!(x2.compose(&g).unwrap(), Poly::from_ints(&f3, &[1, 2, 1]));
        let x = Poly::x(&f3);
        let g = Poly::from_ints(&f3, &[2, 0, 1, 1]);
        assert_eq!(x.compose(&g).unwrap(), g);

        let f2 = fp(2);
        let x8 = Poly::monomial(&f2, f2.one(), 8);
        let t = Poly::x(&f2);
        let t3 = Poly::monomial(&f2, f2.one(), 3);
        assert_eq!(
            &x8.compose(&t).unwrap() + &t3,
            Poly::from_ints(&f2, &[0, 0, 0, 1, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn compose_rejects_foreign_field() {
        let a = Poly::x(&fp(3));
        let b = Poly::x(&fp(5));
        assert_eq!(a.compose(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(Poly::from_ints(&fp(3), &[1, 0, 1])
            .is_irreducible()
            .unwrap());
        // q = 5 is 1 mod 4, so X^2 + 1 has the roots 2 and 3
        assert!(!Poly::from_ints(&fp(5), &[1, 0, 1])
            .is_irreducible()
            .unwrap());
        let swan = Poly::from_ints(&fp(2), &[1, 0, 0, 1, 0, 0, 0, 0, 1]);
        assert!(!swan.is_irreducible().unwrap());
        assert_eq!(
            Poly::one(&fp(7)).is_irreducible(),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn fact_type_examples() {
        let f2 = fp(2);
        assert_eq!(
            Poly::from_ints(&f2, &[0, 1, 1])
                .fact_type()
                .unwrap()
                .parts(),
            &[1, 1]
        );
        assert_eq!(
            Poly::from_ints(&f2, &[1, 1, 1])
                .fact_type()
                .unwrap()
                .parts(),
            &[2]
        );
        let f3 = fp(3);
        let a = Poly::from_ints(&f3, &[1, 0, 1]);
        let b = Poly::from_ints(&f3, &[2, 1, 1]);
        assert!(a.is_irreducible().unwrap() && b.is_irreducible().unwrap());
        assert_eq!((&a * &b).fact_type().unwrap().parts(), &[2, 2]);
        assert_eq!(Poly::one(&f3).fact_type(), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn derivative_gcd_separable() {
        let f3 = fp(3);
        let f = Poly::from_ints(&f3, &[0, 1, 0, 1]);
        assert_eq!(f.derivative(), Poly::one(&f3));
        let f2 = fp(2);
        let a = Poly::from_ints(&f2, &[0, 1, 1]);
        let t = Poly::x(&f2);
        assert_eq!(a.gcd(&t).unwrap(), t);
        assert!(!Poly::from_ints(&f2, &[0, 0, 1]).is_separable());
    }

    #[test]
    fn discriminant_examples() {
        let f5 = fp(5);
        let q = Poly::from_ints(&f5, &[1, 1, 1]);
        assert_eq!(q.discriminant().unwrap(), f5.from_int(2));
        let f3 = fp(3);
        let c = Poly::from_ints(&f3, &[1, 0, 2, 1]);
        assert_eq!(c.discriminant().unwrap(), f3.one());
        let f2 = fp(2);
        assert_eq!(
            Poly::from_ints(&f2, &[0, 0, 1]).discriminant().unwrap(),
            f2.zero()
        );
        assert!(matches!(
            Poly::x(&f2).discriminant(),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        let z = Poly::zero(&fp(7));
        assert_eq!(z.degree(), None);
        assert!(!z.is_separable());
        assert_eq!(z.fact_type(), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn fact_type_parse_and_display() {
        let t: FactType = "{2,1,1}".parse().unwrap();
        assert_eq!(t.to_string(), "1,1,2");
        assert_eq!(t.degree(), 4);
        assert!("1,0".parse::<FactType>().is_err());
    }
}
