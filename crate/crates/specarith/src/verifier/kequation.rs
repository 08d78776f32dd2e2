//! Complete searches for k_i(u) = target over signed prime powers, and the
//! k_5 collision sweep.

use super::{CaseOutcome, CheckContext, CheckReport};
use crate::arith::{euler_phi, k_i_signed, prime_powers_up_to};
use num_bigint::BigUint;
use rayon::prelude::*;
use std::time::Instant;

/// Which signs of the argument to search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignMode {
    PositiveOnly,
    Both,
}

/// Result of a complete bounded search for k_i(u) = target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KEquationOutcome {
    /// All signed prime powers u with k_i(u) = target, ascending by |u|.
    pub solutions: Vec<i64>,
    /// Bound B such that |u| > B forces k_i(u) > target; searching up to B
    /// makes the solution list complete.
    pub sufficient_bound: u64,
    /// Which growth bound produced B.
    pub bound_rationale: &'static str,
    pub candidates_tested: u64,
}

/// The lower-bound family for k_i, keyed by phi(i): returns (B, rationale)
/// with k_i(u) > target guaranteed for every |u| > B.
fn sufficient_bound(i: u64, target: &BigUint) -> (u64, &'static str) {
    use num_traits::ToPrimitive;
    let phi = euler_phi(i);
    let (scaled, root, why): (BigUint, u32, &'static str) = match phi {
        2 => (target * 3u32, 2, "k_i > (|u|-1)^2/3 for phi(i) = 2"),
        4 => (target * 6u32, 4, "k_i > |u|^4/6 + 1 for phi(i) = 4"),
        6 => (target * 8u32, 6, "k_i > |u|^6/8 + 1 for phi(i) = 6"),
        _ => (target.clone(), 4, "k_i > |u|^4 for phi(i) > 4"),
    };
    let b = scaled.nth_root(root).to_u64().unwrap_or(u64::MAX) + 2;
    (b, why)
}

/// Exhaustive search for prime powers u (signed per `signs`) with
/// k_i(u) = target, out to the derived sufficient bound (or further when a
/// larger explicit bound is supplied).
pub fn solve_k_equation(
    i: u64,
    target: &BigUint,
    signs: SignMode,
    u_bound: Option<u64>,
) -> Result<KEquationOutcome, crate::arith::ArithError> {
    if i < 3 {
        return Err(crate::arith::ArithError::IndexTooSmall { index: i });
    }
    let (derived, why) = sufficient_bound(i, target);
    let bound = derived.max(u_bound.unwrap_or(0));
    let mut solutions = Vec::new();
    let mut tested = 0u64;
    for u in prime_powers_up_to(bound) {
        let signs_iter: &[i8] = match signs {
            SignMode::PositiveOnly => &[1],
            SignMode::Both => &[1, -1],
        };
        for &s in signs_iter {
            let a = s as i64 * u as i64;
            tested += 1;
            if k_i_signed(a, i)? == *target {
                solutions.push(a);
            }
        }
    }
    Ok(KEquationOutcome {
        solutions,
        sufficient_bound: bound,
        bound_rationale: why,
        candidates_tested: tested,
    })
}

fn keq_check(
    check_id: &'static str,
    i: u64,
    target_arg: i64,
    target_index: u64,
    signs: SignMode,
    ctx: &CheckContext,
) -> CheckReport {
    let start = Instant::now();
    let target = k_i_signed(target_arg, target_index).expect("|arg| > 1");
    let out = solve_k_equation(i, &target, signs, ctx.range_override).expect("index is at least 3");
    let mut cxs = Vec::new();
    for s in &out.solutions {
        cxs.push(format!("(u={s},k{i}={target})"));
    }
    CheckReport::from_outcome(
        check_id,
        format!(
            "k_{i}(u) = k_{target_index}({target_arg}) = {target} over {} prime powers |u| <= {} ({}); expected no solutions",
            match signs {
                SignMode::PositiveOnly => "positive",
                SignMode::Both => "signed",
            },
            out.sufficient_bound,
            out.bound_rationale,
        ),
        out.candidates_tested,
        cxs,
        0,
        start.elapsed(),
    )
}

/// k_8(u) = k_7(-13) has no prime-power solutions.
pub fn check_keq_k8(ctx: &CheckContext) -> CheckReport {
    keq_check("keq-k8", 8, -13, 7, SignMode::PositiveOnly, ctx)
}

/// k_5(+-u) = k_7(-25) has no prime-power solutions.
pub fn check_keq_k5(ctx: &CheckContext) -> CheckReport {
    keq_check("keq-k5", 5, -25, 7, SignMode::Both, ctx)
}

/// Sweep pairs of signed prime powers for k_5 collisions. Every collision
/// with distinct magnitudes must have distinct (5, a-1) and distinct twisted
/// values k_5(-a); compliant collisions are reported in the domain line.
pub fn check_k5_collisions(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let n = ctx.range(60, 200);
    let pps = prime_powers_up_to(n);
    let args: Vec<i64> = pps.iter().flat_map(|&u| [u as i64, -(u as i64)]).collect();
    let values: Vec<BigUint> = args
        .iter()
        .map(|&a| k_i_signed(a, 5).expect("|a| > 1"))
        .collect();
    let outcomes: Vec<(CaseOutcome, Vec<String>)> = (0..args.len())
        .into_par_iter()
        .map(|x| {
            let mut o = CaseOutcome::default();
            let mut collisions = Vec::new();
            for y in (x + 1)..args.len() {
                let (a, b) = (args[x], args[y]);
                if a.abs() == b.abs() {
                    continue;
                }
                o.cases += 1;
                if values[x] != values[y] {
                    continue;
                }
                let gcd_a = num_integer::gcd(5i64, a - 1);
                let gcd_b = num_integer::gcd(5i64, b - 1);
                let twisted_equal =
                    k_i_signed(-a, 5).unwrap() == k_i_signed(-b, 5).unwrap();
                let compliant = gcd_a != gcd_b && !twisted_equal;
                collisions.push(format!(
                    "(a={a},b={b},k5={},compliant={compliant})",
                    values[x]
                ));
                if !compliant {
                    o.counterexamples.push(format!(
                        "(a={a},b={b},k5={},gcd_a={gcd_a},gcd_b={gcd_b},twisted_equal={twisted_equal})",
                        values[x]
                    ));
                }
            }
            (o, collisions)
        })
        .collect();
    let mut collision_list = Vec::new();
    let mut case_outcomes = Vec::new();
    for (o, c) in outcomes {
        case_outcomes.push(o);
        collision_list.extend(c);
    }
    let (cases, cxs, deg) = CaseOutcome::merge(case_outcomes);
    let collisions_desc = if collision_list.is_empty() {
        "none".to_string()
    } else {
        collision_list.join(" ")
    };
    CheckReport::from_outcome(
        "k5-collisions",
        format!("signed prime-power pairs with distinct magnitudes <= {n}; collisions: {collisions_desc}"),
        cases,
        cxs,
        deg,
        start.elapsed(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{Profile, Status};

    #[test]
    fn equation_with_a_solution() {
        let out = solve_k_equation(8, &BigUint::from(41u32), SignMode::PositiveOnly, None).unwrap();
        assert_eq!(out.solutions, vec![3]);
        assert!(out.sufficient_bound >= 3);
    }

    #[test]
    fn headline_equations_are_empty() {
        let ctx = CheckContext::new(Profile::Full);
        let r = check_keq_k8(&ctx);
        assert_eq!(r.status, Status::Pass);
        assert!(r.domain_description.contains("640291"));
        let r = check_keq_k5(&ctx);
        assert_eq!(r.status, Status::Pass);
        assert!(r.domain_description.contains("234750601"));
    }

    #[test]
    fn derived_bounds_are_modest() {
        let out =
            solve_k_equation(8, &BigUint::from(640291u32), SignMode::PositiveOnly, None).unwrap();
        assert!(out.sufficient_bound < 60, "{}", out.sufficient_bound);
        let out = solve_k_equation(5, &BigUint::from(234750601u64), SignMode::Both, None).unwrap();
        assert!(out.sufficient_bound < 260, "{}", out.sufficient_bound);
    }

    #[test]
    fn explicit_bound_extends_the_search() {
        let out =
            solve_k_equation(8, &BigUint::from(41u32), SignMode::PositiveOnly, Some(500)).unwrap();
        assert_eq!(out.sufficient_bound, 500);
        assert_eq!(out.solutions, vec![3]);
    }

    #[test]
    fn small_index_rejected() {
        assert!(solve_k_equation(2, &BigUint::from(5u32), SignMode::Both, None).is_err());
    }

    #[test]
    fn collision_sweep_passes_at_full_range() {
        let r = check_k5_collisions(&CheckContext {
            profile: Profile::Full,
            range_override: None,
        });
        assert_eq!(r.status, Status::Pass);
        assert!(r.domain_description.ends_with("collisions: none"));
        assert!(r.cases_checked > 5_000);
    }
}
