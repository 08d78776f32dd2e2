//! Integer factorization: trial division by the small-prime table, then
//! Brent-cycle Pollard rho with primality certification of every cofactor.

use super::primes::{is_prime, small_primes};
use super::ArithError;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Default cap on |n| for [`factor`]: inputs must satisfy |n| <= 2^512.
pub const DEFAULT_CAP_BITS: u32 = 512;

/// An integer together with its full prime factorization.
///
/// Invariants: the product of `p^e` over `factors` equals `|value|`, primes
/// are strictly ascending, and every listed prime is certified prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: BigInt,
    factors: Vec<(BigUint, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// Ordered `(prime, multiplicity)` pairs.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn multiplicity_of(&self, p: &BigUint) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Recompose `p^e` over all factors; equals `|value|` by construction.
    pub fn recompose(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }

    /// Raise to a nonnegative power by scaling multiplicities.
    pub fn pow(&self, e: u32) -> FactoredInteger {
        if e == 0 {
            return FactoredInteger {
                value: BigInt::one(),
                factors: Vec::new(),
            };
        }
        FactoredInteger {
            value: self.value.pow(e),
            factors: self
                .factors
                .iter()
                .map(|(p, k)| (p.clone(), k * e))
                .collect(),
        }
    }

    /// Product of two factored integers.
    pub fn mul(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut merged = self.factors.clone();
        for (p, e) in &other.factors {
            match merged.binary_search_by(|(q, _)| q.cmp(p)) {
                Ok(i) => merged[i].1 += e,
                Err(i) => merged.insert(i, (p.clone(), *e)),
            }
        }
        FactoredInteger {
            value: &self.value * &other.value,
            factors: merged,
        }
    }

    /// Exact quotient; errors unless `other` divides `self` with multiplicity.
    pub fn div_exact(&self, other: &FactoredInteger) -> Result<FactoredInteger, ArithError> {
        let mut merged = self.factors.clone();
        for (p, e) in &other.factors {
            match merged.binary_search_by(|(q, _)| q.cmp(p)) {
                Ok(i) if merged[i].1 >= *e => {
                    merged[i].1 -= e;
                }
                _ => return Err(ArithError::NotDivisible),
            }
        }
        merged.retain(|(_, e)| *e > 0);
        Ok(FactoredInteger {
            value: &self.value / &other.value,
            factors: merged,
        })
    }
}

impl fmt::Display for FactoredInteger {
    /// Renders as `p1^e1 * p2^e2` with ascending primes (`1` for a unit).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_negative() {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn brent_rho(n: &BigUint) -> BigUint {
    // n odd, composite, no factors below the trial-division bound
    let two = BigUint::from(2u32);
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = two.clone();
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            // backtrack one step at a time
            g = BigUint::one();
            while g.is_one() {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
            }
        }
        if g != *n && !g.is_one() {
            return g;
        }
        c += 1u32;
    }
}

/// Factor a nonzero integer, subject to the default magnitude cap of 2^512.
pub fn factor(n: &BigInt) -> Result<FactoredInteger, ArithError> {
    factor_with_cap(n, DEFAULT_CAP_BITS)
}

/// Factor with an explicit magnitude cap: requires |n| <= 2^cap_bits.
pub fn factor_with_cap(n: &BigInt, cap_bits: u32) -> Result<FactoredInteger, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let mag = n.magnitude().clone();
    if mag > (BigUint::one() << cap_bits) {
        return Err(ArithError::MagnitudeCapExceeded {
            bits: mag.bits(),
            cap_bits,
        });
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = mag;
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        if (&rest % p).is_zero() {
            let mut e = 0u32;
            while (&rest % p).is_zero() {
                rest /= p;
                e += 1;
            }
            factors.push((pb, e));
        }
    }
    if !rest.is_one() {
        let mut stack = vec![rest];
        while let Some(m) = stack.pop() {
            if is_prime(&m) {
                match factors.binary_search_by(|(q, _)| q.cmp(&m)) {
                    Ok(i) => factors[i].1 += 1,
                    Err(i) => factors.insert(i, (m, 1)),
                }
            } else {
                let d = brent_rho(&m);
                stack.push(&m / &d);
                stack.push(d);
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    // merge any duplicate primes produced by repeated rho splits
    let mut merged: Vec<(BigUint, u32)> = Vec::with_capacity(factors.len());
    for (p, e) in factors {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    Ok(FactoredInteger {
        value: n.clone(),
        factors: merged,
    })
}

/// Convenience wrapper for machine-word inputs.
pub fn factor_u64(n: u64) -> FactoredInteger {
    factor(&BigInt::from(n)).expect("nonzero u64 is always below the cap")
}
