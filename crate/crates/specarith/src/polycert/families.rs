//! Precomputed certificate families for the pairwise gcd bounds on k-values.
//!
//! Each case fixes a congruence class of the argument a, an integer
//! polynomial pair (f, g) that is a small multiple of the two quantities
//! being gcd'd on that class, the expected certificate constants (h, m), and
//! the bound the case is required to reproduce. Since the gcd of the actual
//! quantities divides gcd(f(a), g(a)), the certified m·h(a) bounds it too.

use super::{certify, GcdCertificate, IntPolynomial};
use crate::arith;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Which quantity the polynomial multiplies on the left/right of the gcd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// k_8(a) - 1
    K8Minus1,
    /// k_7(a) - 1
    K7Minus1,
    /// k_5(a) - 1
    K5Minus1,
    /// k_10(a) - 1
    K10Minus1,
    /// 7·k_8(a) - 1
    SevenK8Minus1,
    /// 7·k_5(a) - 1
    SevenK5Minus1,
    /// a^3 + 2a^2 + 3a + 4
    CubicF,
    /// Phi_i(a)
    Phi(u64),
    /// Phi_i(a^2)
    PhiSquare(u64),
}

impl Quantity {
    /// Evaluate the quantity itself (not the polynomial multiple) at a.
    pub fn eval(&self, a: &BigInt) -> BigInt {
        match self {
            Quantity::K8Minus1 => big_k(a, 8) - 1,
            Quantity::K7Minus1 => big_k(a, 7) - 1,
            Quantity::K5Minus1 => big_k(a, 5) - 1,
            Quantity::K10Minus1 => big_k(a, 10) - 1,
            Quantity::SevenK8Minus1 => big_k(a, 8) * 7 - 1,
            Quantity::SevenK5Minus1 => big_k(a, 5) * 7 - 1,
            Quantity::CubicF => IntPolynomial::from_i64(&[4, 3, 2, 1]).eval(a),
            Quantity::Phi(i) => arith::cyclotomic_eval(*i, a),
            Quantity::PhiSquare(i) => arith::cyclotomic_eval(*i, &(a * a)),
        }
    }
}

fn big_k(a: &BigInt, i: u64) -> BigInt {
    BigInt::from(arith::k_i(a, i).expect("|a| > 1 in family sweeps"))
}

/// Congruence hypothesis selecting the arguments a case applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypothesis {
    /// Required parity of a, if any (true = odd, false = even).
    pub parity: Option<bool>,
    /// Required residue condition: (modulus, residue) meaning a = residue (mod modulus).
    pub residue: Option<(i64, i64)>,
    /// Residues of a mod `modulus` that must NOT hold (used for coprimality).
    pub excluded: &'static [(i64, i64)],
}

impl Hypothesis {
    pub fn admits(&self, a: i64) -> bool {
        if a.abs() <= 1 {
            return false;
        }
        if let Some(odd) = self.parity {
            if (a.rem_euclid(2) == 1) != odd {
                return false;
            }
        }
        if let Some((m, r)) = self.residue {
            if a.rem_euclid(m) != r.rem_euclid(m) {
                return false;
            }
        }
        for (m, r) in self.excluded {
            if a.rem_euclid(*m) == r.rem_euclid(*m) {
                return false;
            }
        }
        true
    }
}

const ANY: Hypothesis = Hypothesis {
    parity: None,
    residue: None,
    excluded: &[],
};

const fn odd() -> Hypothesis {
    Hypothesis {
        parity: Some(true),
        residue: None,
        excluded: &[],
    }
}

const fn even() -> Hypothesis {
    Hypothesis {
        parity: Some(false),
        residue: None,
        excluded: &[],
    }
}

/// One certificate case: the lemma id, hypothesis, polynomial pair with the
/// multipliers tying it to the underlying quantities, the expected
/// certificate constants, and the stated bound scalar·poly(a).
pub struct CertCase {
    pub id: &'static str,
    pub check_id: &'static str,
    pub hypothesis: Hypothesis,
    pub lhs: Quantity,
    pub rhs: Quantity,
    /// f = lhs_multiplier · lhs as a polynomial identity on the hypothesis class.
    pub lhs_multiplier: u64,
    pub rhs_multiplier: u64,
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    pub expected_h: IntPolynomial,
    pub expected_m: u64,
    /// The bound to reproduce: scalar · bound_poly(a).
    pub bound_scalar: u64,
    pub bound_poly: IntPolynomial,
}

impl CertCase {
    pub fn stated_bound_at(&self, a: &BigInt) -> BigInt {
        self.bound_poly.eval(a) * BigInt::from(self.bound_scalar)
    }

    pub fn build_certificate(&self) -> GcdCertificate {
        certify(&self.f, &self.g).expect("family polynomials are nonzero")
    }
}

fn p(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(coeffs)
}

fn phi(i: u64) -> IntPolynomial {
    IntPolynomial::new(arith::cyclotomic_coeffs(i))
}

fn phi_sq(i: u64) -> IntPolynomial {
    phi(i).compose(&p(&[0, 0, 1]))
}

/// The certificate cases for the three pairwise-gcd bound suites.
#[allow(clippy::vec_init_then_push)]
pub fn families() -> Vec<CertCase> {
    use Quantity::*;
    let x4m1 = p(&[-1, 0, 0, 0, 1]);
    let mut out = Vec::new();

    // gcd(k_8(a)-1, k_7(a)-1) for odd a
    out.push(CertCase {
        id: "k8k7-coprime7",
        check_id: "igcd",
        hypothesis: Hypothesis {
            parity: Some(true),
            residue: None,
            excluded: &[(7, 1)],
        },
        lhs: K8Minus1,
        rhs: K7Minus1,
        lhs_multiplier: 2,
        rhs_multiplier: 1,
        f: x4m1.clone(),
        // x(x^6-1)/(x-1)
        g: p(&[0, 1, 1, 1, 1, 1, 1]),
        expected_h: p(&[1, 1]),
        expected_m: 3,
        bound_scalar: 3,
        bound_poly: p(&[1, 1]),
    });
    out.push(CertCase {
        id: "k8k7-div7",
        check_id: "igcd",
        hypothesis: Hypothesis {
            parity: Some(true),
            residue: Some((7, 1)),
            excluded: &[],
        },
        lhs: K8Minus1,
        rhs: K7Minus1,
        lhs_multiplier: 2,
        rhs_multiplier: 7,
        f: x4m1.clone(),
        // (x^7 - 7x + 6)/(x - 1)
        g: p(&[-6, 1, 1, 1, 1, 1, 1]),
        expected_h: p(&[-1, 1]),
        expected_m: 75,
        bound_scalar: 75,
        bound_poly: p(&[-1, 1]),
    });

    // gcd(k_8(a)-1, k_5(a)-1) for odd a
    out.push(CertCase {
        id: "k8k5-coprime5",
        check_id: "igcd",
        hypothesis: Hypothesis {
            parity: Some(true),
            residue: None,
            excluded: &[(5, 1)],
        },
        lhs: K8Minus1,
        rhs: K5Minus1,
        lhs_multiplier: 2,
        rhs_multiplier: 1,
        f: x4m1.clone(),
        // x(x^4-1)/(x-1)
        g: p(&[0, 1, 1, 1, 1]),
        expected_h: p(&[1, 1, 1, 1]),
        expected_m: 1,
        bound_scalar: 1,
        // (a^2+1)(a+1)
        bound_poly: p(&[1, 1, 1, 1]),
    });
    out.push(CertCase {
        id: "k8k5-div5",
        check_id: "igcd",
        hypothesis: Hypothesis {
            parity: Some(true),
            residue: Some((5, 1)),
            excluded: &[],
        },
        lhs: K8Minus1,
        rhs: K5Minus1,
        lhs_multiplier: 2,
        rhs_multiplier: 5,
        f: x4m1.clone(),
        // (x^5 - 5x + 4)/(x - 1)
        g: p(&[-4, 1, 1, 1, 1]),
        expected_h: p(&[-1, 1]),
        expected_m: 4,
        bound_scalar: 4,
        bound_poly: p(&[-1, 1]),
    });

    // gcd(k_5(a)-1, k_10(a)-1) for odd a; the bound sign tracks which of
    // a -+ 1 carries the factor 5
    out.push(CertCase {
        id: "k5k10-coprime5",
        check_id: "igcd",
        hypothesis: Hypothesis {
            parity: Some(true),
            residue: None,
            excluded: &[(5, 1), (5, -1)],
        },
        lhs: K5Minus1,
        rhs: K10Minus1,
        lhs_multiplier: 1,
        rhs_multiplier: 1,
        f: p(&[0, 1, 1, 1, 1]),
        g: p(&[0, -1, 1, -1, 1]),
        expected_h: p(&[0, 1, 0, 1]),
        expected_m: 2,
        bound_scalar: 2,
        // 2a(a^2+1)
        bound_poly: p(&[0, 1, 0, 1]),
    });
    out.push(CertCase {
        id: "k5k10-div5-minus",
        check_id: "igcd",
        hypothesis: Hypothesis {
            parity: Some(true),
            residue: Some((5, 1)),
            excluded: &[],
        },
        lhs: K5Minus1,
        rhs: K10Minus1,
        lhs_multiplier: 5,
        rhs_multiplier: 1,
        f: p(&[-4, 1, 1, 1, 1]),
        g: p(&[0, -1, 1, -1, 1]),
        expected_h: p(&[-1, 1]),
        expected_m: 4,
        bound_scalar: 4,
        bound_poly: p(&[-1, 1]),
    });
    out.push(CertCase {
        id: "k5k10-div5-plus",
        check_id: "igcd",
        hypothesis: Hypothesis {
            parity: Some(true),
            residue: Some((5, -1)),
            excluded: &[],
        },
        lhs: K5Minus1,
        rhs: K10Minus1,
        lhs_multiplier: 1,
        rhs_multiplier: 5,
        f: p(&[0, 1, 1, 1, 1]),
        g: p(&[-4, -1, 1, -1, 1]),
        expected_h: p(&[1, 1]),
        expected_m: 4,
        bound_scalar: 4,
        bound_poly: p(&[1, 1]),
    });

    // gcd(7 k_8(a) - 1, Phi_i(a)) split by parity
    for (i, m_even, m_odd) in [(5u64, 31 * 61, 11 * 151), (3, 43, 39), (4, 13, 12)] {
        out.push(CertCase {
            id: match i {
                5 => "7k8-phi5-even",
                3 => "7k8-phi3-even",
                _ => "7k8-phi4-even",
            },
            check_id: "igcd1",
            hypothesis: even(),
            lhs: SevenK8Minus1,
            rhs: Phi(i),
            lhs_multiplier: 1,
            rhs_multiplier: 1,
            f: p(&[6, 0, 0, 0, 7]),
            g: phi(i),
            expected_h: IntPolynomial::one(),
            expected_m: m_even,
            bound_scalar: m_even,
            bound_poly: IntPolynomial::one(),
        });
        out.push(CertCase {
            id: match i {
                5 => "7k8-phi5-odd",
                3 => "7k8-phi3-odd",
                _ => "7k8-phi4-odd",
            },
            check_id: "igcd1",
            hypothesis: odd(),
            lhs: SevenK8Minus1,
            rhs: Phi(i),
            lhs_multiplier: 2,
            rhs_multiplier: 1,
            f: p(&[5, 0, 0, 0, 7]),
            g: phi(i),
            expected_h: IntPolynomial::one(),
            expected_m: m_odd,
            bound_scalar: m_odd,
            bound_poly: IntPolynomial::one(),
        });
    }

    // gcd(7 k_5(a) - 1, Phi_i(a^2)) and gcd(k_5(a) - 1, Phi_i(a^2)) when 5 | a - 1
    let div5 = Hypothesis {
        parity: None,
        residue: Some((5, 1)),
        excluded: &[],
    };
    for (i, m7, m1) in [(4u64, 2 * 1297, 2 * 97), (3, 3 * 13 * 109, 3 * 7 * 31)] {
        out.push(CertCase {
            id: if i == 4 {
                "7k5-phisq4-div5"
            } else {
                "7k5-phisq3-div5"
            },
            check_id: "igcd1",
            hypothesis: div5,
            lhs: SevenK5Minus1,
            rhs: PhiSquare(i),
            lhs_multiplier: 5,
            rhs_multiplier: 1,
            // 7*Phi_5(x) - 5
            f: p(&[2, 7, 7, 7, 7]),
            g: phi_sq(i),
            expected_h: IntPolynomial::one(),
            expected_m: m7,
            bound_scalar: m7,
            bound_poly: IntPolynomial::one(),
        });
        out.push(CertCase {
            id: if i == 4 {
                "k5-phisq4-div5"
            } else {
                "k5-phisq3-div5"
            },
            check_id: "igcd1",
            hypothesis: div5,
            lhs: K5Minus1,
            rhs: PhiSquare(i),
            lhs_multiplier: 5,
            rhs_multiplier: 1,
            // Phi_5(x) - 5
            f: p(&[-4, 1, 1, 1, 1]),
            g: phi_sq(i),
            expected_h: IntPolynomial::one(),
            expected_m: m1,
            bound_scalar: m1,
            bound_poly: IntPolynomial::one(),
        });
    }

    // gcd(7 k_5(a) - 1, Phi_i(a^2)) when (5, a - 1) = 1
    let coprime5 = Hypothesis {
        parity: None,
        residue: None,
        excluded: &[(5, 1)],
    };
    for (i, m) in [(4u64, 2 * 337), (3, 3 * 19 * 43)] {
        out.push(CertCase {
            id: if i == 4 {
                "7k5-phisq4-coprime5"
            } else {
                "7k5-phisq3-coprime5"
            },
            check_id: "igcd1",
            hypothesis: coprime5,
            lhs: SevenK5Minus1,
            rhs: PhiSquare(i),
            lhs_multiplier: 1,
            rhs_multiplier: 1,
            // 7*Phi_5(x) - 1
            f: p(&[6, 7, 7, 7, 7]),
            g: phi_sq(i),
            expected_h: IntPolynomial::one(),
            expected_m: m,
            bound_scalar: m,
            bound_poly: IntPolynomial::one(),
        });
    }

    // gcd(a^3 + 2a^2 + 3a + 4, Phi_i(a^2)) for every a
    for (i, m) in [(1u64, 10), (2, 4), (3, 7 * 31), (4, 2 * 97)] {
        out.push(CertCase {
            id: match i {
                1 => "cubic-phisq1",
                2 => "cubic-phisq2",
                3 => "cubic-phisq3",
                _ => "cubic-phisq4",
            },
            check_id: "igcd2",
            hypothesis: ANY,
            lhs: CubicF,
            rhs: PhiSquare(i),
            lhs_multiplier: 1,
            rhs_multiplier: 1,
            f: p(&[4, 3, 2, 1]),
            g: phi_sq(i),
            expected_h: IntPolynomial::one(),
            expected_m: m,
            bound_scalar: m,
            bound_poly: IntPolynomial::one(),
        });
    }

    out
}

/// True when m·h(a) divides the stated bound at a (both nonzero by hypothesis).
pub fn certified_bound_divides_stated(case: &CertCase, cert: &GcdCertificate, a: &BigInt) -> bool {
    let certified = cert.bound_at(a);
    let stated = case.stated_bound_at(a);
    if certified.magnitude().is_one() {
        return true;
    }
    (stated.magnitude() % certified.magnitude()).is_zero()
}

/// The multiplier identity tying the family polynomial to the quantity:
/// f(a) = lhs_multiplier·lhs(a) and g(a) = rhs_multiplier·rhs(a).
pub fn multiplier_identity_holds(case: &CertCase, a: &BigInt) -> bool {
    case.f.eval(a) == case.lhs.eval(a) * BigInt::from(case.lhs_multiplier)
        && case.g.eval(a) == case.rhs.eval(a) * BigInt::from(case.rhs_multiplier)
}

/// gcd of the two underlying quantities at a.
pub fn quantity_gcd(case: &CertCase, a: &BigInt) -> BigUint {
    use num_integer::Integer;
    case.lhs
        .eval(a)
        .magnitude()
        .gcd(case.rhs.eval(a).magnitude())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn all_family_certificates_reproduce_expected_constants() {
        for case in families() {
            let cert = case.build_certificate();
            assert!(cert.identity_holds(), "{}", case.id);
            assert!(cert.m_is_minimal(), "{}", case.id);
            assert_eq!(cert.h, case.expected_h, "h mismatch in {}", case.id);
            assert_eq!(
                cert.m,
                BigUint::from(case.expected_m),
                "m mismatch in {}",
                case.id
            );
        }
    }

    #[test]
    fn multiplier_identities_hold_on_hypothesis_classes() {
        for case in families() {
            let mut tested = 0;
            for a in -150i64..=150 {
                if !case.hypothesis.admits(a) {
                    continue;
                }
                tested += 1;
                assert!(
                    multiplier_identity_holds(&case, &BigInt::from(a)),
                    "{} at a = {a}",
                    case.id
                );
            }
            assert!(
                tested > 10,
                "hypothesis of {} admits too few points",
                case.id
            );
        }
    }

    #[test]
    fn certified_bounds_divide_stated_bounds() {
        for case in families() {
            let cert = case.build_certificate();
            for a in -500i64..=500 {
                if !case.hypothesis.admits(a) {
                    continue;
                }
                let ab = BigInt::from(a);
                if case.stated_bound_at(&ab).is_zero() {
                    continue;
                }
                assert!(
                    certified_bound_divides_stated(&case, &cert, &ab),
                    "{} at a = {a}",
                    case.id
                );
            }
        }
    }

    #[test]
    fn quantity_gcds_divide_stated_bounds() {
        for case in families() {
            for a in -120i64..=120 {
                if !case.hypothesis.admits(a) {
                    continue;
                }
                let ab = BigInt::from(a);
                let g = quantity_gcd(&case, &ab);
                let stated = case.stated_bound_at(&ab);
                assert!(
                    (stated.magnitude() % &g).is_zero(),
                    "{} at a = {a}: gcd {g} does not divide {stated}",
                    case.id
                );
            }
        }
    }

    #[test]
    fn shipped_certificates_sound_on_random_points() {
        use num_integer::Integer;
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x715);
        for case in families() {
            let cert = case.build_certificate();
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
                    "{} at a = {a}",
                    case.id
                );
            }
        }
    }

    #[test]
    fn bound_sign_tracks_congruence_in_k5_k10_cases() {
        // at a = 9 the gcd is 20; the plus-branch bound 4(a+1) = 40 absorbs
        // it while 4(a-1) = 32 does not
        let fams = families();
        let case = fams.iter().find(|c| c.id == "k5k10-div5-plus").unwrap();
        let a = BigInt::from(9);
        assert_eq!(quantity_gcd(case, &a), BigUint::from(20u32));
        assert_eq!(case.stated_bound_at(&a), BigInt::from(40));
    }
}
