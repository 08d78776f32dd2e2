//! Exact multiplicative number theory.
//!
//! Everything here is a pure function of its inputs; values are immutable and
//! safe to share across parallel sweeps. The only lazily built state is the
//! write-once small-prime table.

mod cyclotomic;
mod factor;
mod orders;
pub mod primes;
mod zsig;

pub use cyclotomic::{
    cyclotomic_coeffs, cyclotomic_eval, divisors, euler_phi, moebius, prime_divisors,
};
pub use factor::{factor, factor_u64, factor_with_cap, FactoredInteger, DEFAULT_CAP_BITS};
pub use orders::{
    lte_case, lte_r_part, mult_order, mult_order_u64, r_coprime_part, r_part, r_part_u64, LteCase,
};
pub use primes::{is_prime, is_prime_power_u64, is_prime_u64, prime_powers_up_to};
pub use zsig::{is_zsigmondy_exception, k_i, k_i_signed, primitive_part, primitive_prime_divisors};

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("|n| has {bits} bits, which exceeds the magnitude cap of 2^{cap_bits}; raise the cap to proceed")]
    MagnitudeCapExceeded { bits: u64, cap_bits: u32 },
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("arguments are not coprime")]
    NotCoprime,
    #[error("|a| must exceed 1")]
    ArgumentTooSmall,
    #[error("no lifting-the-exponent hypothesis applies; compute the r-part directly")]
    NoLteCase,
    #[error("k_i requires i >= 3, got {index}")]
    IndexTooSmall { index: u64 },
    #[error("quotient is not exact")]
    NotDivisible,
}

/// A signed prime power: value = sign * base^exponent, with base prime.
///
/// This encodes the signed arguments that appear throughout: field sizes q
/// and the products eps*q / tau*u fed to the k and Phi functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedPrimePower {
    sign: i8,
    base: u64,
    exponent: u32,
}

impl SignedPrimePower {
    pub fn new(sign: i8, base: u64, exponent: u32) -> Result<Self, ArithError> {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        assert!(exponent >= 1, "exponent must be positive");
        if !is_prime_u64(base) {
            return Err(ArithError::NotPrime(BigUint::from(base)));
        }
        let mut v: u64 = 1;
        for _ in 0..exponent {
            v = v
                .checked_mul(base)
                .ok_or(ArithError::MagnitudeCapExceeded {
                    bits: 64,
                    cap_bits: 63,
                })?;
        }
        Ok(SignedPrimePower {
            sign,
            base,
            exponent,
        })
    }

    /// Parse a positive or negative prime power from its integer value.
    pub fn from_value(value: i64) -> Option<Self> {
        let mag = value.unsigned_abs();
        let (base, exponent) = is_prime_power_u64(mag)?;
        Some(SignedPrimePower {
            sign: if value < 0 { -1 } else { 1 },
            base,
            exponent,
        })
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The unsigned magnitude base^exponent.
    pub fn magnitude(&self) -> u64 {
        self.base.pow(self.exponent)
    }

    pub fn value(&self) -> i64 {
        let m = self.magnitude() as i64;
        if self.sign < 0 {
            -m
        } else {
            m
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    #[test]
    fn signed_prime_power_basics() {
        let p = SignedPrimePower::new(-1, 2, 7).unwrap();
        assert_eq!(p.value(), -128);
        assert_eq!(p.magnitude(), 128);
        assert!(SignedPrimePower::new(1, 6, 1).is_err());
        assert_eq!(SignedPrimePower::from_value(-27).unwrap().base(), 3);
        assert_eq!(SignedPrimePower::from_value(12), None);
    }

    proptest! {
        #[test]
        fn factorization_round_trips(n in prop::num::i64::ANY.prop_filter("nonzero", |n| *n != 0)) {
            let f = factor(&BigInt::from(n)).unwrap();
            prop_assert_eq!(f.recompose(), BigInt::from(n).magnitude().clone());
            let mut prev: Option<BigUint> = None;
            for (p, e) in f.factors() {
                prop_assert!(is_prime(p));
                prop_assert!(*e >= 1);
                if let Some(q) = prev {
                    prop_assert!(*p > q);
                }
                prev = Some(p.clone());
            }
        }

        #[test]
        fn lte_matches_direct_r_part(a in -50i64..=50, m in 1u64..=40, ridx in 0usize..15) {
            prop_assume!(a.abs() > 1);
            let r = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47][ridx];
            let ab = BigInt::from(a);
            if let Ok(v) = lte_r_part(&ab, m, r) {
                let direct = ab.pow(m as u32) - 1;
                prop_assert_eq!(v, r_part_u64(&direct, r).unwrap());
            }
        }

        #[test]
        fn primitive_part_divides_a_pow_i_minus_1(a in -30i64..=30, i in 1u64..=20) {
            prop_assume!(a.abs() > 1);
            let ab = BigInt::from(a);
            let part = primitive_part(&ab, i).unwrap();
            let total = (ab.pow(i as u32) - 1i32).magnitude().clone();
            prop_assert!((total % &part).is_zero() || part.is_one());
        }

        #[test]
        fn cyclotomic_value_divides_power_minus_one(a in -40i64..=40, i in 1u64..=24) {
            prop_assume!(a.abs() > 1);
            let ab = BigInt::from(a);
            let phi = cyclotomic_eval(i, &ab);
            let total = ab.pow(i as u32) - 1i32;
            prop_assert!((total % &phi).is_zero());
            // k_i divides the cyclotomic value it is cut from
            if i >= 3 {
                let k = k_i(&ab, i).unwrap();
                prop_assert!((phi.magnitude() % &k).is_zero());
            }
        }
    }

    #[test]
    fn r_part_times_coprime_part_recomposes() {
        let n = BigInt::from(-10584);
        for r in [2u64, 3, 7, 11] {
            let rb = BigUint::from(r);
            let p = r_part(&n, &rb).unwrap();
            let c = r_coprime_part(&n, &rb).unwrap();
            assert_eq!(p * c, n.magnitude().clone());
        }
    }

    #[test]
    fn euler_phi_known_values() {
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(7), 6);
    }

    #[test]
    fn primitive_part_is_one_exactly_on_exceptions_medium() {
        for a in (-40i64..=40).filter(|a| a.abs() > 1) {
            let ab = BigInt::from(a);
            for i in 1..=24u64 {
                assert_eq!(
                    primitive_part(&ab, i).unwrap().is_one(),
                    is_zsigmondy_exception(&ab, i),
                    "a = {a}, i = {i}"
                );
            }
        }
    }
}
