//! Polynomials in `X` over `F_q[T]`, symbolic resultants and discriminants,
//! and square classes in `F_q(T)^* / (F_q(T)^*)^2`.

mod lemma;
mod square;

use std::fmt;
use std::sync::Arc;

pub use lemma::{check_lemma_alt_sym, lemma_instance, LemmaInstance, LemmaReport};
pub use square::{
    square_classes_independent, squarefree_part, SquareClass, MAX_INDEPENDENCE_CLASSES,
};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::poly::{dense, parse_multi, Poly};

/// `Σ c_i(T) X^i`, low-to-high in `X`, with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct RPoly {
    field: Arc<Field>,
    coeffs: Vec<Poly>,
}

impl RPoly {
    pub fn new(field: &Arc<Field>, mut coeffs: Vec<Poly>) -> Result<RPoly> {
        for c in &coeffs {
            if **c.field() != **field {
                return Err(Error::FieldMismatch);
            }
        }
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        Ok(RPoly {
            field: Arc::clone(field),
            coeffs,
        })
    }

    /// Parses text in the variables `X` and `T`, e.g. `X^3 + 2*X^2 + T`.
    pub fn parse(field: &Arc<Field>, src: &str) -> Result<RPoly> {
        let terms = parse_multi(field, src, &['X', 'T'])?;
        let f = &**field;
        let xdeg = terms.iter().map(|(_, d)| d[0]).max().unwrap_or(0);
        let mut raw: Vec<Vec<FieldElem>> = vec![Vec::new(); xdeg + 1];
        for (c, d) in terms {
            let row = &mut raw[d[0]];
            if row.len() <= d[1] {
                row.resize(d[1] + 1, f.zero());
            }
            row[d[1]] = f.add(row[d[1]], c);
        }
        let coeffs = raw
            .into_iter()
            .map(|r| Poly::new(field, r))
            .collect::<Result<_>>()?;
        RPoly::new(field, coeffs)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `X^i` as a polynomial in `T`.
    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Poly::zero(&self.field))
    }

    /// `None` for the zero polynomial.
    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic_in_x(&self) -> bool {
        self.coeffs
            .last()
            .is_some_and(|c| c.is_constant() && c.leading_coeff() == Some(self.field.one()))
    }

    /// `∂/∂X`.
    pub fn derivative_x(&self) -> RPoly {
        let f = &*self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(f.from_int(i as u64 % f.characteristic())))
            .collect();
        RPoly::new(&self.field, coeffs).expect("same field")
    }

    /// The polynomial in `X` obtained by setting `T = a`.
    pub fn specialize(&self, a: FieldElem) -> Poly {
        let raw = self.coeffs.iter().map(|c| c.eval(a)).collect();
        Poly::new(&self.field, raw).expect("evaluations lie in the field")
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let inner = c.to_string_var("T");
            let mono = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            terms.push(match (mono.is_empty(), c.is_one(), c.coeffs().len() > 1) {
                (true, _, _) => inner,
                (false, true, _) => mono,
                (false, false, true) => format!("({inner})*{mono}"),
                (false, false, false) => format!("{inner}*{mono}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RPoly({self})")
    }
}

/// Exact division in `F_q[T]`; panics on a nonzero remainder.
fn exact_div(f: &Field, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let (q, r) = dense::div_rem(f, a, b);
    assert!(r.is_empty(), "Bareiss division was not exact");
    q
}

/// Determinant over `F_q[T]` by Bareiss fraction-free elimination.
pub(crate) fn bareiss_det(f: &Field, mut m: Vec<Vec<Vec<FieldElem>>>) -> Vec<FieldElem> {
    let n = m.len();
    if n == 0 {
        return vec![f.one()];
    }
    let mut prev = vec![f.one()];
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_empty()) else {
                return Vec::new();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = dense::mul(f, &m[i][j], &m[k][k]);
                let b = dense::mul(f, &m[i][k], &m[k][j]);
                m[i][j] = exact_div(f, &dense::sub(f, &a, &b), &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        dense::neg(f, &det)
    } else {
        det
    }
}

/// `Res_X(f, g)` with the actual `X`-degrees as formal degrees.
pub fn sym_resultant(f: &RPoly, g: &RPoly) -> Result<Poly> {
    let m = f.x_degree().unwrap_or(0);
    let n = g.x_degree().unwrap_or(0);
    if m == 0 || n == 0 {
        return Err(Error::DegreeTooSmall {
            min: 1,
            got: m.min(n),
        });
    }
    sym_resultant_formal(f, g, m, n)
}

/// Sylvester determinant of `f` (formal `X`-degree `m`) and `g` (formal
/// `X`-degree `n`), rows of `f` first, coefficients high-to-low.
pub fn sym_resultant_formal(f: &RPoly, g: &RPoly, m: usize, n: usize) -> Result<Poly> {
    if *f.field != *g.field {
        return Err(Error::FieldMismatch);
    }
    if f.x_degree().is_some_and(|d| d > m) || g.x_degree().is_some_and(|d| d > n) {
        return Err(Error::InvalidArgument(
            "formal degree below actual degree".into(),
        ));
    }
    let size = m + n;
    let mut mat = vec![vec![Vec::new(); size]; size];
    for r in 0..n {
        for i in 0..=m {
            mat[r][r + i] = f.coeff(m - i).coeffs().to_vec();
        }
    }
    for r in 0..m {
        for i in 0..=n {
            mat[n + r][r + i] = g.coeff(n - i).coeffs().to_vec();
        }
    }
    Poly::new(&f.field, bareiss_det(&f.field, mat))
}

/// `(-1)^(n(n-1)/2) Res_X(h, ∂h/∂X)` for `h` monic in `X` of degree `n ≥ 2`,
/// with the derivative taken at formal degree `n - 1`.
pub fn sym_discriminant(h: &RPoly) -> Result<Poly> {
    let n = h.x_degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    if !h.is_monic_in_x() {
        return Err(Error::NotMonic);
    }
    let res = sym_resultant_formal(h, &h.derivative_x(), n, n - 1)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        -&res
    } else {
        res
    })
}
