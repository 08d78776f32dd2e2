//! Primality testing, small-prime sieving, and prime-power enumeration.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

/// Trial-division bound used by the factorizer.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Miller-Rabin with these bases is deterministic for n < 3_317_044_064_679_887_385_961_981.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn sieve_to(limit: usize) -> Vec<u32> {
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for n in 2..=limit {
        if !composite[n] {
            primes.push(n as u32);
            let mut m = n * n;
            while m <= limit {
                composite[m] = true;
                m += n;
            }
        }
    }
    primes
}

/// Primes below [`TRIAL_DIVISION_BOUND`], computed once.
pub fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve_to(TRIAL_DIVISION_BOUND as usize))
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'bases: for &a in MR_BASES.iter() {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn mr_witness(n: &BigUint, base: u64) -> bool {
    // returns true if `base` witnesses compositeness
    let nm1 = n - 1u32;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let b = BigUint::from(base) % n;
    if b.is_zero() {
        return false;
    }
    let mut x = b.modpow(&d, n);
    if x.is_one() || x == nm1 {
        return false;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == nm1 {
            return false;
        }
    }
    true
}

fn jacobi(a: &num_bigint::BigInt, n: &BigUint) -> i32 {
    use num_bigint::BigInt;
    // n odd positive
    let mut a = a.mod_floor(&BigInt::from(n.clone()));
    let mut n = n.clone();
    let mut result = 1i32;
    while !a.is_zero() {
        let mut au = a.to_biguint().expect("non-negative after mod_floor");
        while au.is_even() {
            au >>= 1;
            let r = (&n % 8u32).to_u32().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut au, &mut n);
        if (&au % 4u32).to_u32().unwrap() == 3 && (&n % 4u32).to_u32().unwrap() == 3 {
            result = -result;
        }
        a = BigInt::from(au % &n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
fn strong_lucas_prp(n: &BigUint) -> bool {
    use num_bigint::BigInt;
    // find D in 5, -7, 9, -11, ... with jacobi(D, n) == -1
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            // a shared factor with small |D|; n is far larger, hence composite
            0 => return false,
            _ => {}
        }
        d = if d.sign() == num_bigint::Sign::Plus {
            -(d + BigInt::from(2))
        } else {
            -(d - BigInt::from(2))
        };
        if d.magnitude().to_u64() == Some(51) {
            // perfect squares admit no D with jacobi -1
            let r = n.sqrt();
            if &r * &r == *n {
                return false;
            }
        }
    }
    // P = 1, Q = (1 - D) / 4
    let q_int: BigInt = (BigInt::one() - &d) / 4;
    let n_big = BigInt::from(n.clone());
    let modn = |x: &BigInt| -> BigInt { x.mod_floor(&n_big) };

    let delta = n + 1u32;
    let s = delta.trailing_zeros().unwrap_or(0);
    let dd = &delta >> s;

    // Lucas sequences U_k, V_k by binary ladder on dd
    let mut u = BigInt::one();
    let mut v = BigInt::one();
    let mut qk = modn(&q_int);
    let bits = dd.bits();
    for i in (0..bits - 1).rev() {
        // double: U_{2k} = U_k V_k;  V_{2k} = V_k^2 - 2 Q^k
        u = modn(&(&u * &v));
        v = modn(&(&v * &v - 2 * &qk));
        qk = modn(&(&qk * &qk));
        if dd.bit(i) {
            // increment: U_{k+1} = (P U_k + V_k)/2, V_{k+1} = (D U_k + P V_k)/2
            let mut u1 = &u + &v;
            let mut v1 = &d * &u + &v;
            if u1.is_odd() {
                u1 += &n_big;
            }
            if v1.is_odd() {
                v1 += &n_big;
            }
            u = modn(&(u1 >> 1));
            v = modn(&(v1 >> 1));
            qk = modn(&(&qk * &q_int));
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 0..s.saturating_sub(1) {
        v = modn(&(&v * &v - 2 * &qk));
        if v.is_zero() {
            return true;
        }
        qk = modn(&(&qk * &qk));
    }
    false
}

/// Primality test for arbitrary-precision integers.
///
/// Deterministic (fixed Miller-Rabin bases) below 3.3e24; beyond that it is a
/// Baillie-PSW-style combination (the same bases plus a strong Lucas test),
/// which has no known counterexamples.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    for &p in MR_BASES.iter() {
        if (n % p).is_zero() {
            return false;
        }
    }
    for &b in MR_BASES.iter() {
        if mr_witness(n, b) {
            return false;
        }
    }
    // deterministic threshold for the fixed base set
    let threshold = BigUint::parse_bytes(b"3317044064679887385961981", 10).unwrap();
    if *n < threshold {
        return true;
    }
    strong_lucas_prp(n)
}

/// All prime powers p^k (k >= 1) in `[2, bound]`, ascending.
pub fn prime_powers_up_to(bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for n in 2..=bound {
        if is_prime_power_u64(n).is_some() {
            out.push(n);
        }
    }
    out
}

/// Decompose `n` as p^k with p prime, if possible.
pub fn is_prime_power_u64(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    if is_prime_u64(n) {
        return Some((n, 1));
    }
    let mut p = n;
    // the prime base must divide n; find the smallest factor by trial division
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    if p == n {
        return None;
    }
    let mut m = n;
    let mut k = 0u32;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    if m == 1 {
        Some((p, k))
    } else {
        None
    }
}
