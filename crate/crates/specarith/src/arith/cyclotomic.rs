//! Cyclotomic polynomial values and coefficients, totient, Moebius.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    assert!(n >= 1, "totient of zero is undefined");
    let mut out = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut pk = 1u64;
            while n.is_multiple_of(p) {
                n /= p;
                pk *= p;
            }
            out *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        out *= n - 1;
    }
    out
}

/// Moebius function.
pub fn moebius(mut n: u64) -> i8 {
    assert!(n >= 1);
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// dense little-endian polynomial helpers, enough for coefficient extraction

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic; division is exact by construction
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn cyclotomic_coeffs_memo(
    n: u64,
    memo: &mut std::collections::HashMap<u64, Vec<BigInt>>,
) -> Vec<BigInt> {
    if let Some(c) = memo.get(&n) {
        return c.clone();
    }
    let coeffs = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        // x^n - 1 divided by the product of Phi_d for proper divisors d
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        let mut den = vec![BigInt::one()];
        for d in divisors(n) {
            if d < n {
                den = poly_mul(&den, &cyclotomic_coeffs_memo(d, memo));
            }
        }
        poly_div_exact(&num, &den)
    };
    memo.insert(n, coeffs.clone());
    coeffs
}

/// Coefficients of the i-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_coeffs(i: u64) -> Vec<BigInt> {
    assert!(i >= 1);
    let mut memo = std::collections::HashMap::new();
    cyclotomic_coeffs_memo(i, &mut memo)
}

fn horner(coeffs: &[BigInt], a: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * a + c;
    }
    acc
}

/// Exact value of the i-th cyclotomic polynomial at an integer point.
pub fn cyclotomic_eval(i: u64, a: &BigInt) -> BigInt {
    assert!(i >= 1);
    if a.magnitude() <= &num_bigint::BigUint::one() {
        return horner(&cyclotomic_coeffs(i), a);
    }
    // Moebius product: Phi_i(a) = prod over d | i of (a^d - 1)^mu(i/d)
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for d in divisors(i) {
        let term = a.pow((d).try_into().expect("exponent fits u32")) - 1;
        match moebius(i / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    q
}
