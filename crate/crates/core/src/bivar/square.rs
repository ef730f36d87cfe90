use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest family accepted by [`square_classes_independent`].
pub const MAX_INDEPENDENCE_CLASSES: usize = 20;

/// The class of `u ∈ F_q(T)^*` modulo squares: a monic squarefree `rep` and
/// whether the leading coefficient of `u` is a nonsquare in `F_q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SquareClass {
    rep: Poly,
    nonsquare_unit: bool,
}

impl SquareClass {
    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn nonsquare_unit(&self) -> bool {
        self.nonsquare_unit
    }

    /// The class of a square.
    pub fn is_trivial(&self) -> bool {
        self.rep.is_one() && !self.nonsquare_unit
    }

    /// Class of the product: `rep = r1 r2 / gcd(r1, r2)^2`.
    pub fn mul(&self, other: &SquareClass) -> Result<SquareClass> {
        let g = self.rep.gcd(&other.rep)?;
        let a = self.rep.div_rem(&g)?.0;
        let b = other.rep.div_rem(&g)?.0;
        Ok(SquareClass {
            rep: a.checked_mul(&b)?,
            nonsquare_unit: self.nonsquare_unit ^ other.nonsquare_unit,
        })
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rep = self.rep.to_string_var("T");
        if self.nonsquare_unit {
            write!(f, "[nonsquare * ({rep})]")
        } else {
            write!(f, "[{rep}]")
        }
    }
}

impl Serialize for SquareClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SquareClass", 2)?;
        st.serialize_field("rep", &self.rep.to_string_var("T"))?;
        st.serialize_field("nonsquare_unit", &self.nonsquare_unit)?;
        st.end()
    }
}

/// Square class of a nonzero `u ∈ F_q[T]`, `q` odd.
pub fn squarefree_part(u: &Poly) -> Result<SquareClass> {
    let f = u.field();
    if f.characteristic() == 2 {
        return Err(Error::NeedsOddCharacteristic);
    }
    let lc = u.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    let nonsquare_unit = !f.is_square(lc)?;
    let mut rep = Poly::one(f);
    if !u.is_constant() {
        for (s, e) in u.squarefree_decomposition()? {
            if e % 2 == 1 {
                rep = rep.checked_mul(&s)?;
            }
        }
    }
    Ok(SquareClass {
        rep,
        nonsquare_unit,
    })
}

/// No nonempty subfamily multiplies to a square. Walks all `2^m - 1`
/// subsets in Gray-code order.
pub fn square_classes_independent(classes: &[SquareClass]) -> Result<bool> {
    let m = classes.len();
    if m > MAX_INDEPENDENCE_CLASSES {
        return Err(Error::GuardExceeded {
            subject: "number of square classes",
            limit: MAX_INDEPENDENCE_CLASSES as u128,
            got: m as u128,
        });
    }
    let Some(first) = classes.first() else {
        return Ok(true);
    };
    let f = first.rep.field();
    if f.characteristic() == 2 {
        return Err(Error::NeedsOddCharacteristic);
    }
    if classes.iter().any(|c| !c.rep.same_field(&first.rep)) {
        return Err(Error::FieldMismatch);
    }
    let mut cur = SquareClass {
        rep: Poly::one(f),
        nonsquare_unit: false,
    };
    for i in 1u32..(1 << m) {
        // Gray code: consecutive subsets differ in the lowest set bit of i
        cur = cur.mul(&classes[i.trailing_zeros() as usize])?;
        if cur.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}
