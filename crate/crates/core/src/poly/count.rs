use crate::error::{Error, Result};
use crate::field::prime_factors;

/// The Möbius function.
pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1);
    let primes = prime_factors(n);
    let squarefree = primes.iter().product::<u64>() == n;
    match (squarefree, primes.len() % 2) {
        (false, _) => 0,
        (true, 0) => 1,
        (true, _) => -1,
    }
}

/// Number of monic irreducible polynomials of degree `n` over `F_q`:
/// `(1/n) * sum_{d | n} mu(d) q^(n/d)`.
pub fn count_monic_irreducible(q: u64, n: u32) -> Result<u128> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let overflow = || Error::GuardExceeded {
        subject: "q^n",
        limit: u128::MAX,
        got: u128::MAX,
    };
    let mut pos: u128 = 0;
    let mut neg: u128 = 0;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let term = (q as u128).checked_pow(n / d).ok_or_else(overflow)?;
        match mobius(d as u64) {
            1 => pos = pos.checked_add(term).ok_or_else(overflow)?,
            -1 => neg += term,
            _ => {}
        }
    }
    Ok((pos - neg) / n as u128)
}
