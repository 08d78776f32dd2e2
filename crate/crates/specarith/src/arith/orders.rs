//! r-parts, multiplicative orders, and the lifting-the-exponent closed forms.

use super::factor::factor;
use super::primes::{is_prime, is_prime_u64};
use super::ArithError;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Largest power of the prime `r` dividing `n` (the r-part `(n)_r`).
pub fn r_part(n: &BigInt, r: &BigUint) -> Result<BigUint, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    if !is_prime(r) {
        return Err(ArithError::NotPrime(r.clone()));
    }
    let mut rest = n.magnitude().clone();
    let mut part = BigUint::one();
    while (&rest % r).is_zero() {
        rest /= r;
        part *= r;
    }
    Ok(part)
}

/// Machine-word convenience for [`r_part`].
pub fn r_part_u64(n: &BigInt, r: u64) -> Result<BigUint, ArithError> {
    r_part(n, &BigUint::from(r))
}

/// The complementary part `(n)_{r'} = |n| / (n)_r`.
pub fn r_coprime_part(n: &BigInt, r: &BigUint) -> Result<BigUint, ArithError> {
    let part = r_part(n, r)?;
    Ok(n.magnitude() / part)
}

/// Multiplicative order `e(r, a)`.
///
/// For odd primes r this is the least i with a^i = 1 (mod r). For r = 2 the
/// convention is e(2, a) = 1 if a = 1 (mod 4) and e(2, a) = 2 if a = 3 (mod 4).
pub fn mult_order(r: &BigUint, a: &BigInt) -> Result<BigUint, ArithError> {
    if !is_prime(r) {
        return Err(ArithError::NotPrime(r.clone()));
    }
    let two = BigUint::from(2u32);
    if *r == two {
        if a.is_even() {
            return Err(ArithError::NotCoprime);
        }
        let residue = a.mod_floor(&BigInt::from(4)).to_u32().unwrap();
        return Ok(if residue == 1 { BigUint::one() } else { two });
    }
    let rb = BigInt::from(r.clone());
    let a_mod = a.mod_floor(&rb).to_biguint().expect("mod_floor >= 0");
    if a_mod.is_zero() {
        return Err(ArithError::NotCoprime);
    }
    // reduce d = r - 1 by removing prime factors while a^(d/s) stays 1
    let mut d = r - 1u32;
    let group = d.clone();
    let fac = factor(&BigInt::from(group))?;
    for (s, _) in fac.factors() {
        while (&d % s).is_zero() {
            let cand = &d / s;
            if a_mod.modpow(&cand, r).is_one() {
                d = cand;
            } else {
                break;
            }
        }
    }
    Ok(d)
}

/// Machine-word convenience for [`mult_order`].
pub fn mult_order_u64(r: u64, a: &BigInt) -> Result<u64, ArithError> {
    mult_order(&BigUint::from(r), a).map(|d| d.to_u64().expect("order fits u64 for u64 modulus"))
}

/// Which hypothesis of the lifting-the-exponent lemma applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LteCase {
    /// odd r with a = 1 (mod r): (a^m - 1)_r = (m)_r (a - 1)_r
    OddPrime,
    /// r = 2 with a = 1 (mod 4) or m odd: (a^m - 1)_2 = (m)_2 (a - 1)_2
    TwoPlus,
    /// r = 2 with a = -1 (mod 4) and m even: (a^m - 1)_2 = (m)_2 (a + 1)_2
    TwoMinus,
}

/// Decide which closed-form case applies to `(a^m - 1)_r`, if any.
pub fn lte_case(a: &BigInt, m: u64, r: u64) -> Result<LteCase, ArithError> {
    if !is_prime_u64(r) {
        return Err(ArithError::NotPrime(BigUint::from(r)));
    }
    if m == 0 {
        return Err(ArithError::ZeroInput);
    }
    if a.magnitude() <= &BigUint::one() {
        return Err(ArithError::ArgumentTooSmall);
    }
    if r == 2 {
        let res4 = a.mod_floor(&BigInt::from(4)).to_u32().unwrap();
        return if res4 == 1 || m % 2 == 1 {
            Ok(LteCase::TwoPlus)
        } else if res4 == 3 {
            Ok(LteCase::TwoMinus)
        } else {
            Err(ArithError::NoLteCase)
        };
    }
    let rb = BigInt::from(r);
    if a.mod_floor(&rb).is_one() {
        Ok(LteCase::OddPrime)
    } else {
        Err(ArithError::NoLteCase)
    }
}

/// `(a^m - 1)_r` by the closed form of the matching hypothesis.
///
/// Errors with [`ArithError::NoLteCase`] when no hypothesis applies, so the
/// caller can fall back to direct computation.
pub fn lte_r_part(a: &BigInt, m: u64, r: u64) -> Result<BigUint, ArithError> {
    let case = lte_case(a, m, r)?;
    let rb = BigUint::from(r);
    let m_big = BigInt::from(m);
    let m_part = r_part(&m_big, &rb)?;
    let base_part = match case {
        LteCase::OddPrime | LteCase::TwoPlus => r_part(&(a - 1), &rb)?,
        LteCase::TwoMinus => r_part(&(a + 1), &rb)?,
    };
    Ok(m_part * base_part)
}
