//! Inequality sweeps for the k-value lower bounds and product bounds.
//!
//! All comparisons are exact: a claim like k > q^4/6 + 1 is tested as
//! 6k > q^4 + 6 on integers.

use super::{CaseOutcome, CheckContext, CheckReport};
use crate::arith::{euler_phi, k_i_signed, prime_powers_up_to};
use num_bigint::BigUint;
use rayon::prelude::*;
use std::time::Instant;

fn signed_args(q_max: u64) -> Vec<(i8, u64)> {
    let mut out = Vec::new();
    for q in prime_powers_up_to(q_max) {
        out.push((1i8, q));
        out.push((-1i8, q));
    }
    out
}

fn q4(q: u64) -> BigUint {
    BigUint::from(q).pow(4)
}

fn cx(parts: &[(&str, String)]) -> String {
    let body = parts
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",");
    format!("({body})")
}

/// k_i(eps q) > q^4 for every index with phi(i) > 4 (indices up to 30); the
/// cited growth bound k_i(eps q) > q^{phi(i)/2} is checked empirically
/// alongside for phi(i) >= 8.
pub fn check_bounds_1(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let q_max = ctx.range(150, 2000);
    let indices: Vec<u64> = (3..=30).filter(|i| euler_phi(*i) > 4).collect();
    let params = signed_args(q_max);
    let outcomes: Vec<CaseOutcome> = params
        .par_iter()
        .map(|&(eps, q)| {
            let mut o = CaseOutcome::default();
            let a = eps as i64 * q as i64;
            let floor = q4(q);
            for &i in &indices {
                o.cases += 1;
                let k = k_i_signed(a, i).expect("|a| > 1");
                if k <= floor {
                    o.counterexamples.push(cx(&[
                        ("eps", eps.to_string()),
                        ("q", q.to_string()),
                        ("i", i.to_string()),
                        ("k", k.to_string()),
                    ]));
                }
                let phi = euler_phi(i);
                if phi >= 8 {
                    o.cases += 1;
                    if k <= BigUint::from(q).pow((phi / 2) as u32) {
                        o.counterexamples.push(cx(&[
                            ("eps", eps.to_string()),
                            ("q", q.to_string()),
                            ("i", i.to_string()),
                            ("claim", "k > q^(phi/2)".to_string()),
                        ]));
                    }
                }
            }
            o
        })
        .collect();
    let (cases, cxs, deg) = CaseOutcome::merge(outcomes);
    CheckReport::from_outcome(
        "bounds1",
        format!(
            "prime powers q <= {q_max}, both signs, indices i <= 30 with phi(i) > 4; \
             includes the empirical q^(phi/2) growth floor for phi(i) >= 8"
        ),
        cases,
        cxs,
        deg,
        start.elapsed(),
    )
}

/// k_12(q) = q^4 - q^2 + 1, k_8(q) = (q^4 + 1)/(2, q - 1), both >= (q^4+1)/2.
pub fn check_bounds_2(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let q_max = ctx.range(150, 2000);
    let params = prime_powers_up_to(q_max);
    let outcomes: Vec<CaseOutcome> = params
        .par_iter()
        .map(|&q| {
            let mut o = CaseOutcome::default();
            let qb = BigUint::from(q);
            let k12 = k_i_signed(q as i64, 12).expect("q >= 2");
            let k8 = k_i_signed(q as i64, 8).expect("q >= 2");
            let q4v = q4(q);
            let expected_k12 = &q4v - qb.pow(2) + 1u32;
            // (2, q - 1) is 2 for odd q and 1 for even q
            let expected_k8 = (&q4v + 1u32) / BigUint::from(1 + (q % 2));
            o.cases += 3;
            if k12 != expected_k12 {
                o.counterexamples.push(cx(&[
                    ("q", q.to_string()),
                    ("k12", k12.to_string()),
                    ("expected", expected_k12.to_string()),
                ]));
            }
            if k8 != expected_k8 {
                o.counterexamples.push(cx(&[
                    ("q", q.to_string()),
                    ("k8", k8.to_string()),
                    ("expected", expected_k8.to_string()),
                ]));
            }
            let floor = &q4v + 1u32;
            if &k12 * 2u32 < floor || &k8 * 2u32 < floor {
                o.counterexamples.push(cx(&[
                    ("q", q.to_string()),
                    ("bound", "2k >= q^4+1".to_string()),
                ]));
            }
            o
        })
        .collect();
    let (cases, cxs, deg) = CaseOutcome::merge(outcomes);
    CheckReport::from_outcome(
        "bounds2",
        format!("prime powers q <= {q_max}: closed forms and 2k >= q^4 + 1"),
        cases,
        cxs,
        deg,
        start.elapsed(),
    )
}

/// 5 k_5(q) k_10(q) > q^8 + 5, and 6 k_5(eps q) > q^4 + 6 unless eps q = -4.
pub fn check_bounds_3(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let q_max = ctx.range(150, 2000);
    let params = signed_args(q_max);
    let outcomes: Vec<CaseOutcome> = params
        .par_iter()
        .map(|&(eps, q)| {
            let mut o = CaseOutcome::default();
            let a = eps as i64 * q as i64;
            if eps == 1 {
                o.cases += 1;
                let prod = k_i_signed(a, 5).unwrap() * k_i_signed(a, 10).unwrap();
                let rhs = BigUint::from(q).pow(8) + 5u32;
                if prod * 5u32 <= rhs {
                    o.counterexamples.push(cx(&[
                        ("q", q.to_string()),
                        ("claim", "5*k5*k10 > q^8+5".to_string()),
                    ]));
                }
            }
            if a != -4 {
                o.cases += 1;
                let k5 = k_i_signed(a, 5).unwrap();
                if k5 * 6u32 <= q4(q) + 6u32 {
                    o.counterexamples.push(cx(&[
                        ("eps", eps.to_string()),
                        ("q", q.to_string()),
                        ("claim", "6*k5 > q^4+6".to_string()),
                    ]));
                }
            } else {
                // stated exception: the k_5 bound is exempt at eps q = -4
                o.cases += 1;
                o.degenerate += 1;
            }
            o
        })
        .collect();
    let (cases, cxs, deg) = CaseOutcome::merge(outcomes);
    CheckReport::from_outcome(
        "bounds3",
        format!("prime powers q <= {q_max}, both signs; eps*q = -4 exempt from the k_5 bound"),
        cases,
        cxs,
        deg,
        start.elapsed(),
    )
}

/// 8 k_7(eps q) > q^6 + 8.
pub fn check_bounds_4(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let q_max = ctx.range(150, 2000);
    let params = signed_args(q_max);
    let outcomes: Vec<CaseOutcome> = params
        .par_iter()
        .map(|&(eps, q)| {
            let mut o = CaseOutcome::ok(1);
            let a = eps as i64 * q as i64;
            let k7 = k_i_signed(a, 7).expect("|a| > 1");
            if k7 * 8u32 <= BigUint::from(q).pow(6) + 8u32 {
                o.counterexamples
                    .push(cx(&[("eps", eps.to_string()), ("q", q.to_string())]));
            }
            o
        })
        .collect();
    let (cases, cxs, deg) = CaseOutcome::merge(outcomes);
    CheckReport::from_outcome(
        "bounds4",
        format!("prime powers q <= {q_max}, both signs"),
        cases,
        cxs,
        deg,
        start.elapsed(),
    )
}

/// m_8(eps q) = (q^8-1)/((8, q-eps)(q-eps)): 28 m_8 > 3 q^7 always, and
/// 12 m_8 < 7 q^7 for odd q unless eps q = 3.
pub fn check_bounds_5(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let q_max = ctx.range(150, 2000);
    let params = signed_args(q_max);
    let outcomes: Vec<CaseOutcome> = params
        .par_iter()
        .map(|&(eps, q)| {
            let mut o = CaseOutcome::default();
            let diff = q as i64 - eps as i64;
            let d = num_integer::gcd(8u64, diff.unsigned_abs());
            let m8 = (BigUint::from(q).pow(8) - 1u32)
                / (BigUint::from(d) * BigUint::from(diff.unsigned_abs()));
            let q7 = BigUint::from(q).pow(7);
            o.cases += 1;
            if &m8 * 28u32 <= &q7 * 3u32 {
                o.counterexamples.push(cx(&[
                    ("eps", eps.to_string()),
                    ("q", q.to_string()),
                    ("claim", "28*m8 > 3*q^7".to_string()),
                ]));
            }
            let a = eps as i64 * q as i64;
            if q % 2 == 1 {
                if a != 3 {
                    o.cases += 1;
                    if &m8 * 12u32 >= &q7 * 7u32 {
                        o.counterexamples.push(cx(&[
                            ("eps", eps.to_string()),
                            ("q", q.to_string()),
                            ("claim", "12*m8 < 7*q^7".to_string()),
                        ]));
                    }
                } else {
                    // stated exception: the upper bound is exempt at eps q = 3
                    o.cases += 1;
                    o.degenerate += 1;
                }
            }
            o
        })
        .collect();
    let (cases, cxs, deg) = CaseOutcome::merge(outcomes);
    CheckReport::from_outcome(
        "bounds5",
        format!("prime powers q <= {q_max}, both signs; eps*q = 3 exempt from the upper bound"),
        cases,
        cxs,
        deg,
        start.elapsed(),
    )
}

/// Product bound: for I with |I| in {2, 3, 4}, all phi(i) > 2, i <= 30:
/// prod k_i(eps q) >= C q^{4|I|} + 1/2 with C = 1/12 (pairs) or 1/24.
pub fn check_ineq(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let q_max = ctx.range(60, 2000);
    let indices: Vec<u64> = (3..=30).filter(|i| euler_phi(*i) > 2).collect();
    // odd prime powers, plus q = 4 where the tight special case lives
    let mut params: Vec<(i8, u64)> = Vec::new();
    for q in prime_powers_up_to(q_max) {
        if q % 2 == 1 || q == 4 {
            params.push((1, q));
            params.push((-1, q));
        }
    }
    let outcomes: Vec<CaseOutcome> = params
        .par_iter()
        .map(|&(eps, q)| {
            let mut o = CaseOutcome::default();
            let a = eps as i64 * q as i64;
            let kv: Vec<BigUint> = indices
                .iter()
                .map(|&i| k_i_signed(a, i).expect("|a| > 1"))
                .collect();
            let n = kv.len();
            let q8 = BigUint::from(q).pow(8);
            let rhs2 = &q8 + 6u32;
            for x in 0..n {
                for y in (x + 1)..n {
                    o.cases += 1;
                    let prod = &kv[x] * &kv[y];
                    if prod * 12u32 < rhs2 {
                        o.counterexamples.push(cx(&[
                            ("eps", eps.to_string()),
                            ("q", q.to_string()),
                            ("I", format!("{}+{}", indices[x], indices[y])),
                        ]));
                    }
                }
            }
            let rhs3 = BigUint::from(q).pow(12) + 12u32;
            let rhs4 = BigUint::from(q).pow(16) + 12u32;
            for x in 0..n {
                for y in (x + 1)..n {
                    let pxy = &kv[x] * &kv[y];
                    for z in (y + 1)..n {
                        o.cases += 1;
                        let pxyz = &pxy * &kv[z];
                        if &pxyz * 24u32 < rhs3 {
                            o.counterexamples.push(cx(&[
                                ("eps", eps.to_string()),
                                ("q", q.to_string()),
                                ("I", format!("{}+{}+{}", indices[x], indices[y], indices[z])),
                            ]));
                        }
                        for w in (z + 1)..n {
                            o.cases += 1;
                            if &pxyz * &kv[w] * 24u32 < rhs4 {
                                o.counterexamples.push(cx(&[
                                    ("eps", eps.to_string()),
                                    ("q", q.to_string()),
                                    (
                                        "I",
                                        format!(
                                            "{}+{}+{}+{}",
                                            indices[x], indices[y], indices[z], indices[w]
                                        ),
                                    ),
                                ]));
                            }
                        }
                    }
                }
            }
            o
        })
        .collect();
    let (cases, cxs, deg) = CaseOutcome::merge(outcomes);
    CheckReport::from_outcome(
        "ineq",
        format!(
            "odd prime powers q <= {q_max} and q = 4, both signs; all index sets of size 2..4 \
             from the {} indices i <= 30 with phi(i) > 2",
            indices.len()
        ),
        cases,
        cxs,
        deg,
        start.elapsed(),
    )
}
