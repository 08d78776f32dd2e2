//! Primitive prime divisors of a^i - 1 and the derived quantities k_i(a).

use super::cyclotomic::{cyclotomic_eval, prime_divisors};
use super::factor::factor;
use super::orders::r_part_u64;
use super::ArithError;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

fn require_magnitude(a: &BigInt) -> Result<(), ArithError> {
    if a.magnitude() <= &BigUint::one() {
        Err(ArithError::ArgumentTooSmall)
    } else {
        Ok(())
    }
}

/// The exception families where a^i - 1 has no primitive prime divisor:
/// a = 2, i in {1, 6}; a = -2, i in {2, 3}; a = 3, i = 1; a = -3, i = 2.
pub fn is_zsigmondy_exception(a: &BigInt, i: u64) -> bool {
    match a.to_i64() {
        Some(2) => i == 1 || i == 6,
        Some(-2) => i == 2 || i == 3,
        Some(3) => i == 1,
        Some(-3) => i == 2,
        _ => false,
    }
}

/// Product of `(a^i - 1)_r` over all primitive prime divisors r of a^i - 1.
///
/// For i >= 3 this is computed by stripping from a^i - 1 every prime that
/// already divides some a^(i/s) - 1 (s prime, s | i), which removes exactly
/// the primes of multiplicative order below i. For i = 1, 2 the e(2, a)
/// convention is applied directly. The result is 1 iff R_i(a) is empty.
pub fn primitive_part(a: &BigInt, i: u64) -> Result<BigUint, ArithError> {
    require_magnitude(a)?;
    assert!(i >= 1);
    if i == 1 {
        let n = a - 1;
        let two_part = r_part_u64(&n, 2)?;
        let odd = n.magnitude() / &two_part;
        // 2 is primitive at i = 1 only when a = 1 (mod 4)
        let keep_two = a.is_odd() && a.mod_floor(&BigInt::from(4)).to_u32() == Some(1);
        return Ok(if keep_two { odd * two_part } else { odd });
    }
    if i == 2 {
        // odd primes of a + 1 never divide a - 1; their multiplicity in
        // a^2 - 1 equals that in a + 1
        let ap1: BigInt = a + 1i32;
        let odd = ap1.magnitude() / r_part_u64(&ap1, 2)?;
        let keep_two = a.is_odd() && a.mod_floor(&BigInt::from(4)).to_u32() == Some(3);
        return Ok(if keep_two {
            odd * r_part_u64(&(a * a - 1), 2)?
        } else {
            odd
        });
    }
    let exp: u32 = i.try_into().expect("index fits u32");
    let total = (a.pow(exp) - 1i32).magnitude().clone();
    let mut strip = BigUint::one();
    for s in prime_divisors(i) {
        let sub: u32 = (i / s).try_into().unwrap();
        strip *= (a.pow(sub) - 1i32).magnitude();
    }
    let mut part = total;
    loop {
        let g = part.gcd(&strip);
        if g.is_one() {
            return Ok(part);
        }
        part /= g;
    }
}

/// The set R_i(a) of primitive prime divisors of a^i - 1.
pub fn primitive_prime_divisors(a: &BigInt, i: u64) -> Result<BTreeSet<BigUint>, ArithError> {
    let part = primitive_part(a, i)?;
    if part.is_one() {
        return Ok(BTreeSet::new());
    }
    let fac = factor(&BigInt::from(part))?;
    Ok(fac.primes().cloned().collect())
}

/// k_i(a): the product of `(a^i - 1)_r` over r in R_i(a), via the closed form
/// `Phi_i(a) / (r, Phi_l(a))` with r the largest prime divisor of i and
/// l the r-coprime part of i. Defined for i >= 3 only.
pub fn k_i(a: &BigInt, i: u64) -> Result<BigUint, ArithError> {
    if i < 3 {
        return Err(ArithError::IndexTooSmall { index: i });
    }
    require_magnitude(a)?;
    let r = *prime_divisors(i)
        .last()
        .expect("i >= 3 has a prime divisor");
    let mut l = i;
    while l.is_multiple_of(r) {
        l /= r;
    }
    let phi_i = cyclotomic_eval(i, a);
    let phi_l = cyclotomic_eval(l, a);
    let g = if (phi_l % BigInt::from(r)).is_zero() {
        r
    } else {
        1
    };
    // the divisor can only fire when l divides r - 1
    debug_assert!(g == 1 || (r - 1).is_multiple_of(l));
    let value = phi_i / BigInt::from(g);
    debug_assert!(value.is_positive());
    Ok(value.magnitude().clone())
}

/// k_i at a machine-word signed argument.
pub fn k_i_signed(a: i64, i: u64) -> Result<BigUint, ArithError> {
    k_i(&BigInt::from(a), i)
}
