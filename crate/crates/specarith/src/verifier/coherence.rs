//! Coherence sweeps for the z/y invariant table and the exponent parts.

use super::{CaseOutcome, CheckContext, CheckReport};
use crate::groups::{self, zy_series, GroupDescriptor, GroupError, ZOrY};
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use std::time::Instant;

fn odd_prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    crate::arith::prime_powers_up_to(hi)
        .into_iter()
        .filter(|&q| q >= lo && q % 2 == 1)
        .collect()
}

/// For every in-scope series and odd prime power q: the two invariants are
/// coprime, both divide the group order, the k-values divide them, and the
/// k-value floor/ceiling bounds hold with exact comparison.
pub fn check_zy_coherence(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let q_max = ctx.range(200, 2000);
    let qs = odd_prime_powers(5, q_max);
    let outcomes: Vec<CaseOutcome> = qs
        .par_iter()
        .map(|&q| {
            let mut o = CaseOutcome::default();
            for (name, fam, n) in zy_series() {
                o.cases += 1;
                let g = match GroupDescriptor::new(fam, n, q) {
                    Ok(g) => g,
                    Err(e) => {
                        o.counterexamples
                            .push(format!("({name},q={q},claim=constructible,err={e})"));
                        continue;
                    }
                };
                let inv = match groups::zy_invariants(&g) {
                    Ok(inv) => inv,
                    Err(e) => {
                        o.counterexamples
                            .push(format!("({name},q={q},claim=branch-total,err={e})"));
                        continue;
                    }
                };
                let complain =
                    |claim: &str| format!("({name},q={q},branch={},claim={claim})", inv.branch);
                if num_integer::Integer::gcd(&inv.m_z, &inv.m_y) != BigUint::from(1u32) {
                    o.counterexamples.push(complain("coprime"));
                }
                let order = g.order_value();
                if !(&order % &inv.m_z).is_zero() || !(&order % &inv.m_y).is_zero() {
                    o.counterexamples.push(complain("m-divides-order"));
                }
                let kz = groups::k_x_of(&g, ZOrY::Z).expect("odd q in range");
                let ky = groups::k_x_of(&g, ZOrY::Y).expect("odd q in range");
                if !(&inv.m_z % &kz).is_zero() || !(&inv.m_y % &ky).is_zero() {
                    o.counterexamples.push(complain("k-divides-m"));
                }
                let q4 = BigUint::from(q).pow(4);
                let kmax = kz.clone().max(ky.clone());
                let kmin = kz.min(ky);
                if kmax * 2u32 < &q4 + 1u32 {
                    o.counterexamples.push(complain("2*max(kz,ky) >= q^4+1"));
                }
                if kmin * 6u32 < &q4 + 6u32 {
                    o.counterexamples.push(complain("6*min(kz,ky) >= q^4+6"));
                }
            }
            o
        })
        .collect();
    let (cases, cxs, deg) = CaseOutcome::merge(outcomes);
    CheckReport::from_outcome(
        "zy-coherence",
        format!("odd prime powers 5 <= q <= {q_max}, all five series"),
        cases,
        cxs,
        deg,
        start.elapsed(),
    )
}

/// Exponent r-parts divide the group order for every prime 7 <= r < 200
/// dividing the order.
pub fn check_exp_orders(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let q_max = ctx.range(30, 60);
    let qs = odd_prime_powers(5, q_max);
    let primes: Vec<u64> = (7..200)
        .filter(|&r| crate::arith::is_prime_u64(r))
        .collect();
    let outcomes: Vec<CaseOutcome> = qs
        .par_iter()
        .map(|&q| {
            let mut o = CaseOutcome::default();
            for (name, fam, n) in zy_series() {
                let g = GroupDescriptor::new(fam, n, q).expect("valid series");
                let order = g.order_value();
                for &r in &primes {
                    match groups::exp_r(&g, r) {
                        Ok(e) => {
                            o.cases += 1;
                            if !(&order % &e).is_zero() {
                                o.counterexamples.push(format!(
                                    "({name},q={q},r={r},exp={e},claim=divides-order)"
                                ));
                            }
                        }
                        Err(GroupError::NotInOrder { .. }) => {}
                        Err(e) => {
                            o.counterexamples
                                .push(format!("({name},q={q},r={r},err={e})"));
                        }
                    }
                }
            }
            o
        })
        .collect();
    let (cases, cxs, deg) = CaseOutcome::merge(outcomes);
    CheckReport::from_outcome(
        "exp-orders",
        format!(
            "odd prime powers 5 <= q <= {q_max}, all five series, primes 7 <= r < 200 in pi(L)"
        ),
        cases,
        cxs,
        deg,
        start.elapsed(),
    )
}
