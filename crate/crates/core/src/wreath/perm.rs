use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., m-1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i >= m || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Perm {
        Perm { images }
    }

    pub fn identity(m: usize) -> Perm {
        Perm {
            images: (0..m).collect(),
        }
    }

    /// The cycle `i -> i+1 mod m`.
    pub fn rotation(m: usize) -> Perm {
        Perm {
            images: (0..m).map(|i| (i + 1) % m).collect(),
        }
    }

    pub fn transposition(m: usize, a: usize, b: usize) -> Perm {
        let mut images: Vec<usize> = (0..m).collect();
        images.swap(a, b);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "permutation degrees differ");
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// Cycle lengths, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    pub fn is_even(&self) -> bool {
        let ct = self.cycle_type();
        (self.degree() - ct.len()).is_multiple_of(2)
    }

    /// All permutations of degree `m` in lexicographic order of images.
    pub fn all(m: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (0..m).collect();
        let mut out = vec![Perm::from_images_unchecked(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Perm::from_images_unchecked(cur.clone()));
        }
        out
    }

    /// Position of `self` in [`Perm::all`] (Lehmer code).
    pub fn rank(&self) -> usize {
        rank_images(&self.images)
    }
}

pub(crate) fn rank_images(images: &[usize]) -> usize {
    let m = images.len();
    let mut rank = 0;
    for i in 0..m {
        let smaller = images[i + 1..].iter().filter(|&&j| j < images[i]).count();
        rank = rank * (m - i) + smaller;
    }
    rank
}

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation with 1-based points, e.g. `(1 2)(3 4)`; the identity is `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_rank() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        for (i, p) in all.iter().enumerate() {
            assert_eq!(p.rank(), i);
        }
        assert_eq!(all.iter().filter(|p| p.is_even()).count(), 12);
    }

    #[test]
    fn compose_order() {
        let a = Perm::new(vec![1, 0, 2]).unwrap();
        let b = Perm::new(vec![0, 2, 1]).unwrap();
        // a ∘ b sends 1 -> b -> 2 -> a -> 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&b).cycle_type(), vec![3]);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.compose(&b).to_string(), "(1 2 3)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::new(vec![0, 2]).is_err());
    }
}
