//! Integer polynomials and Bezout divisibility certificates.
//!
//! A [`GcdCertificate`] witnesses the exact identity `f·u + g·v = m·h` over
//! the integers, where h is the primitive rational gcd of f and g and m is
//! the least positive integer clearing the reduced rational cofactors. The
//! pointwise consequence, gcd(f(a), g(a)) | m·h(a) for every integer a, is
//! what the downstream gcd checks consume.

pub mod families;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("both inputs are zero")]
    BothZero,
    #[error("malformed certificate text: {0}")]
    Parse(String),
    #[error("internal Bezout identity verification failed")]
    IdentityCheckFailed,
}

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first. The leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, a: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    /// Gcd of all coefficients (zero polynomial has content zero).
    pub fn content(&self) -> BigUint {
        let mut g = BigUint::zero();
        for c in &self.coeffs {
            g = g.gcd(c.magnitude());
        }
        g
    }

    /// Content-1 multiple with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let content = BigInt::from(self.content());
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().map(|c| c / &content).collect();
        if coeffs.last().unwrap().is_negative() {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        IntPolynomial { coeffs }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPolynomial::new(out)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPolynomial::new(out)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Substitute x -> inner(x), e.g. x^2.
    pub fn compose(&self, inner: &IntPolynomial) -> IntPolynomial {
        let mut acc = IntPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&IntPolynomial::constant(c.clone()));
        }
        acc
    }

    /// Space-separated decimal coefficients, constant term first.
    pub fn to_coeff_line(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn from_coeff_line(line: &str) -> Result<IntPolynomial, PolyError> {
        let coeffs: Result<Vec<BigInt>, _> = line
            .split_whitespace()
            .map(|tok| tok.parse::<BigInt>())
            .collect();
        match coeffs {
            Ok(c) if !c.is_empty() => Ok(IntPolynomial::new(c)),
            Ok(_) => Err(PolyError::Parse("empty coefficient line".to_string())),
            Err(e) => Err(PolyError::Parse(e.to_string())),
        }
    }
}

impl fmt::Display for IntPolynomial {
    /// Human rendering like `x^4 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

// rational polynomials, internal to the Euclidean machinery

#[derive(Debug, Clone, PartialEq, Eq)]
struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn from_int(p: &IntPolynomial) -> RatPoly {
        RatPoly {
            coeffs: p
                .coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        }
    }

    fn zero() -> RatPoly {
        RatPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trim(mut self) -> RatPoly {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        RatPoly { coeffs: out }.trim()
    }

    fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly { coeffs: out }.trim()
    }

    fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
        .trim()
    }

    /// Quotient and remainder with deg rem < deg divisor.
    fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero());
        let dlc = divisor.coeffs.last().unwrap().clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &dlc;
            if c.is_zero() {
                continue;
            }
            quot[i] = c.clone();
            for (j, djc) in divisor.coeffs.iter().enumerate() {
                let delta = &c * djc;
                rem[i + j] -= delta;
            }
        }
        (
            RatPoly { coeffs: quot }.trim(),
            RatPoly { coeffs: rem }.trim(),
        )
    }

    /// Clear denominators: returns (den, integer polynomial den*self).
    fn clear_denominators(&self) -> (BigUint, IntPolynomial) {
        let mut den = BigUint::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom().magnitude());
        }
        let den_int = BigInt::from(den.clone());
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * BigRational::from(den_int.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect();
        (den, IntPolynomial::new(coeffs))
    }
}

/// A witness that gcd(f(a), g(a)) divides m·h(a) for every integer a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdCertificate {
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    /// Primitive gcd of f and g over the rationals, positive leading coefficient.
    pub h: IntPolynomial,
    /// Least positive integer admitting integer cofactors.
    pub m: BigUint,
    pub u: IntPolynomial,
    pub v: IntPolynomial,
}

impl GcdCertificate {
    /// Re-verify the defining identity f·u + g·v = m·h coefficient by coefficient.
    pub fn identity_holds(&self) -> bool {
        let lhs = self.f.mul(&self.u).add(&self.g.mul(&self.v));
        let rhs = self.h.scale(&BigInt::from(self.m.clone()));
        lhs == rhs
    }

    /// The bound value m·h(a).
    pub fn bound_at(&self, a: &BigInt) -> BigInt {
        self.h.eval(a) * BigInt::from(self.m.clone())
    }

    /// Minimality witness: for every prime r | m, clearing by m/r leaves a
    /// cofactor coefficient not divisible by r.
    pub fn m_is_minimal(&self) -> bool {
        let m_int = BigInt::from(self.m.clone());
        for (r, _) in crate::arith::factor(&m_int)
            .expect("m is positive")
            .factors()
        {
            let r_int = BigInt::from(r.clone());
            let all_divisible = self
                .u
                .coeffs()
                .iter()
                .chain(self.v.coeffs().iter())
                .all(|c| (c % &r_int).is_zero());
            if all_divisible {
                return false;
            }
        }
        true
    }

    /// Six-line text form: f, g, h on coefficient lines, then m, then u, v.
    pub fn to_text(&self) -> String {
        format!(
            "{}\n{}\n{}\n{}\n{}\n{}\n",
            self.f.to_coeff_line(),
            self.g.to_coeff_line(),
            self.h.to_coeff_line(),
            self.m,
            self.u.to_coeff_line(),
            self.v.to_coeff_line()
        )
    }

    pub fn from_text(text: &str) -> Result<GcdCertificate, PolyError> {
        let lines: Vec<&str> = text.lines().collect();
        if lines.len() < 6 {
            return Err(PolyError::Parse(format!(
                "expected 6 lines, got {}",
                lines.len()
            )));
        }
        let m: BigUint = lines[3]
            .trim()
            .parse()
            .map_err(|e| PolyError::Parse(format!("bad m: {e}")))?;
        Ok(GcdCertificate {
            f: IntPolynomial::from_coeff_line(lines[0])?,
            g: IntPolynomial::from_coeff_line(lines[1])?,
            h: IntPolynomial::from_coeff_line(lines[2])?,
            m,
            u: IntPolynomial::from_coeff_line(lines[4])?,
            v: IntPolynomial::from_coeff_line(lines[5])?,
        })
    }
}

/// Primitive greatest common divisor over the rationals, normalized to a
/// positive leading coefficient.
pub fn poly_gcd_rational(f: &IntPolynomial, g: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::BothZero);
    }
    if f.is_zero() {
        return Ok(g.primitive_part());
    }
    if g.is_zero() {
        return Ok(f.primitive_part());
    }
    let mut a = RatPoly::from_int(f);
    let mut b = RatPoly::from_int(g);
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    let (_, h) = a.clear_denominators();
    Ok(h.primitive_part())
}

/// Build a full Bezout certificate for nonzero f, g.
pub fn certify(f: &IntPolynomial, g: &IntPolynomial) -> Result<GcdCertificate, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    // extended Euclid over Q[x]: maintain s_a, s_b with
    //   f*s_a + g*t_a = a  and  f*s_b + g*t_b = b
    let mut a = RatPoly::from_int(f);
    let mut b = RatPoly::from_int(g);
    let mut s_a = RatPoly {
        coeffs: vec![BigRational::one()],
    };
    let mut s_b = RatPoly::zero();
    while !b.is_zero() {
        let (q, r) = a.div_rem(&b);
        let s_r = s_a.sub(&q.mul(&s_b));
        a = b;
        b = r;
        s_a = s_b;
        s_b = s_r;
    }
    // a is a rational gcd; normalize to the primitive integer h
    let (den, a_cleared) = a.clear_denominators();
    let h = a_cleared.primitive_part();
    // a = rho * h with rho rational
    let rho = {
        let num = a_cleared.leading().expect("gcd of nonzero is nonzero");
        let hl = h.leading().unwrap();
        BigRational::new(num.clone(), BigInt::from(den)) / BigRational::from(hl.clone())
        // note: a_cleared = den * a, so rho = lc(a_cleared)/(den * lc(h))
    };
    // f*s_a + g*t_a = a = rho*h, so u0 = s_a/rho gives f*u0 + g*v0 = h
    let u_full = s_a.scale(&rho.recip());
    // reduce u modulo g/h for the canonical minimal-degree cofactor pair
    let g_rat = RatPoly::from_int(g);
    let h_rat = RatPoly::from_int(&h);
    let (g_over_h, rem_check) = g_rat.div_rem(&h_rat);
    debug_assert!(rem_check.is_zero());
    let u_red = if g_over_h.degree() > 0 {
        u_full.div_rem(&g_over_h).1
    } else {
        RatPoly::zero()
    };
    // v = (h - f*u) / g exactly
    let f_rat = RatPoly::from_int(f);
    let (v_red, vrem) = h_rat.sub(&f_rat.mul(&u_red)).div_rem(&g_rat);
    debug_assert!(vrem.is_zero());
    // m = lcm of reduced-cofactor denominators
    let (du, _) = u_red.clear_denominators();
    let (dv, _) = v_red.clear_denominators();
    let m = du.lcm(&dv);
    let m_rat = BigRational::from(BigInt::from(m.clone()));
    let (_, u) = u_red.scale(&m_rat).clear_denominators();
    let (_, v) = v_red.scale(&m_rat).clear_denominators();
    let cert = GcdCertificate {
        f: f.clone(),
        g: g.clone(),
        h,
        m,
        u,
        v,
    };
    if !cert.identity_holds() {
        return Err(PolyError::IdentityCheckFailed);
    }
    Ok(cert)
}

/// Outcome of sweeping a certificate over an integer interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointwiseOutcome {
    pub checked: u64,
    /// Points where f(a) = g(a) = 0, skipped because gcd(0, 0) carries no bound.
    pub degenerate: Vec<i64>,
    /// Points where gcd(f(a), g(a)) does not divide m·h(a) (expected empty).
    pub violations: Vec<(i64, BigUint, BigInt)>,
}

/// Confirm gcd(f(a), g(a)) | m·h(a) for every a in the closed interval.
pub fn check_certificate_pointwise(cert: &GcdCertificate, lo: i64, hi: i64) -> PointwiseOutcome {
    let mut out = PointwiseOutcome {
        checked: 0,
        degenerate: Vec::new(),
        violations: Vec::new(),
    };
    for a in lo..=hi {
        let ab = BigInt::from(a);
        let fa = cert.f.eval(&ab);
        let ga = cert.g.eval(&ab);
        out.checked += 1;
        if fa.is_zero() && ga.is_zero() {
            out.degenerate.push(a);
            continue;
        }
        let d = fa.magnitude().gcd(ga.magnitude());
        let bound = cert.bound_at(&ab);
        if !(bound.magnitude() % &d).is_zero() {
            out.violations.push((a, d, bound));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    /// (x^7 - 7x + 6) / (x - 1) = x^6 + x^5 + x^4 + x^3 + x^2 + x - 6
    fn g_seventh() -> IntPolynomial {
        p(&[-6, 1, 1, 1, 1, 1, 1])
    }

    #[test]
    fn display_and_eval() {
        let f = p(&[-1, 0, 0, 0, 1]);
        assert_eq!(f.to_string(), "x^4 - 1");
        assert_eq!(f.eval(&BigInt::from(3)), BigInt::from(80));
        assert_eq!(f.degree(), Some(4));
        assert_eq!(p(&[2, -3]).to_string(), "-3x + 2");
    }

    #[test]
    fn gcd_examples() {
        let f = p(&[-1, 0, 0, 0, 1]);
        assert_eq!(poly_gcd_rational(&f, &g_seventh()).unwrap(), p(&[-1, 1]));
        // (f, f) -> primitive part of f
        let ff = p(&[-2, 0, 2]);
        assert_eq!(poly_gcd_rational(&ff, &ff).unwrap(), p(&[-1, 0, 1]));
        // (x^2 - 1, x^3 - 1) -> x - 1
        assert_eq!(
            poly_gcd_rational(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])).unwrap(),
            p(&[-1, 1])
        );
        assert!(poly_gcd_rational(&IntPolynomial::zero(), &IntPolynomial::zero()).is_err());
    }

    #[test]
    fn certificate_headline_case() {
        let cert = certify(&p(&[-1, 0, 0, 0, 1]), &g_seventh()).unwrap();
        assert_eq!(cert.h, p(&[-1, 1]));
        assert_eq!(cert.m, BigUint::from(75u32));
        assert!(cert.identity_holds());
        assert!(cert.m_is_minimal());
    }

    #[test]
    fn certificate_constant_cases() {
        // (x - 1, x + 1): h = 1, m = 2
        let cert = certify(&p(&[-1, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(cert.h, IntPolynomial::one());
        assert_eq!(cert.m, BigUint::from(2u32));
        // (f, 1): h = 1, m = 1
        let cert = certify(&p(&[4, 0, 9]), &IntPolynomial::one()).unwrap();
        assert_eq!(cert.h, IntPolynomial::one());
        assert_eq!(cert.m, BigUint::one());
        // (x^2 - 1, x^3 - 1): h = x - 1, integer cofactors, m = 1
        let cert = certify(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(cert.h, p(&[-1, 1]));
        assert_eq!(cert.m, BigUint::one());
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            certify(&IntPolynomial::zero(), &p(&[1])),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn pointwise_check_with_degenerate_point() {
        // f and g share the root 1
        let cert = certify(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])).unwrap();
        let out = check_certificate_pointwise(&cert, -5, 5);
        assert_eq!(out.checked, 11);
        assert_eq!(out.degenerate, vec![1]);
        assert!(out.violations.is_empty());
    }

    #[test]
    fn pointwise_soundness_random_points() {
        let cert = certify(&p(&[-1, 0, 0, 0, 1]), &g_seventh()).unwrap();
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..10_000 {
            let a: i64 = rng.gen_range(-1_000_000..=1_000_000);
            let ab = BigInt::from(a);
            let fa = cert.f.eval(&ab);
            let ga = cert.g.eval(&ab);
            if fa.is_zero() && ga.is_zero() {
                continue;
            }
            let d = fa.magnitude().gcd(ga.magnitude());
            assert!(
                (cert.bound_at(&ab).magnitude() % &d).is_zero(),
                "violation at a = {a}"
            );
        }
    }

    #[test]
    fn text_round_trip() {
        let cert = certify(&p(&[-1, 0, 0, 0, 1]), &g_seventh()).unwrap();
        let text = cert.to_text();
        assert_eq!(GcdCertificate::from_text(&text).unwrap(), cert);
    }

    #[test]
    fn compose_substitutes() {
        // Phi_3(x^2) = x^4 + x^2 + 1
        let phi3 = p(&[1, 1, 1]);
        let x2 = p(&[0, 0, 1]);
        assert_eq!(phi3.compose(&x2), p(&[1, 0, 1, 0, 1]));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn nonzero_poly() -> impl Strategy<Value = IntPolynomial> {
            prop::collection::vec(-9i64..=9, 1..=5)
                .prop_map(|c| IntPolynomial::from_i64(&c))
                .prop_filter("nonzero", |p| !p.is_zero())
        }

        proptest! {
            #[test]
            fn certificates_hold_for_random_pairs(f in nonzero_poly(), g in nonzero_poly()) {
                let cert = certify(&f, &g).unwrap();
                prop_assert!(cert.identity_holds());
                prop_assert!(cert.m_is_minimal());
                // h is the primitive rational gcd
                prop_assert_eq!(&cert.h, &poly_gcd_rational(&f, &g).unwrap());
                // pointwise consequence on a window
                for a in -20i64..=20 {
                    let ab = BigInt::from(a);
                    let fa = cert.f.eval(&ab);
                    let ga = cert.g.eval(&ab);
                    if fa.is_zero() && ga.is_zero() {
                        continue;
                    }
                    let d = fa.magnitude().gcd(ga.magnitude());
                    prop_assert!((cert.bound_at(&ab).magnitude() % &d).is_zero());
                }
            }

            #[test]
            fn gcd_divides_both_inputs(f in nonzero_poly(), g in nonzero_poly()) {
                let h = poly_gcd_rational(&f, &g).unwrap();
                // h(a) divides the content-scaled values everywhere it is nonzero
                for a in -10i64..=10 {
                    let ab = BigInt::from(a);
                    let ha = h.eval(&ab);
                    if ha.is_zero() {
                        prop_assert!(f.eval(&ab).is_zero() && g.eval(&ab).is_zero());
                    }
                }
            }
        }
    }
}
