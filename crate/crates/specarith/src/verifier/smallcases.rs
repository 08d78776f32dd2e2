//! Bounded eliminations: the u = 2 ceiling, the q = 5 divisor sweep up to
//! u = 23, the 7 <= q <= 43 exceptional sweep, the cubic-polynomial cases,
//! and the seventh-power exponent enumeration.

use super::{CheckContext, CheckReport};
use crate::arith::{is_prime_power_u64, k_i_signed, prime_powers_up_to, r_part_u64};
use crate::groups::{tables, zy_series, Family, GroupDescriptor, ZOrY};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::time::Instant;

fn descriptor(family: Family, n: u32, q: u64) -> GroupDescriptor {
    GroupDescriptor::new(family, n, q).expect("series parameters are valid")
}

/// The three bounded eliminations that pin down q >= 7 and u >= 3.
///
/// (a) Every divisor ceiling K(S) of a t = 4 candidate at u = 2 is at most
///     73 = k_9(2), which no k-invariant of an in-scope group with q >= 5
///     can respect.
/// (b) At q = 5 the field sizes 3 <= u <= 23 (u coprime to 5) admit exactly
///     one divisibility hit, k_5(5) = 781 dividing k_10(17) = 78881, and the
///     hit dies because 101 does not divide the group order.
/// (c) Candidates S with special (disconnected-graph) parameters admit no
///     k_z divisibility for 7 <= q <= 43.
pub fn check_small_cases(_ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let mut cases = 0u64;
    let mut cxs: Vec<String> = Vec::new();

    // --- step (a): u = 2 ceiling
    let rows_u2 = tables::t4_rows_at(2);
    let max_k = rows_u2
        .iter()
        .flat_map(|r| r.k_values.iter())
        .max()
        .cloned()
        .unwrap_or_default();
    cases += rows_u2.iter().map(|r| r.k_values.len() as u64).sum::<u64>();
    let k9_2 = k_i_signed(2, 9).unwrap();
    if max_k != BigUint::from(73u32) || k9_2 != BigUint::from(73u32) {
        cxs.push(format!("(step=a,max_k={max_k},k9_2={k9_2})"));
    }
    // the smallest admissible q already beats the ceiling: q^4 > 6(73 - 1)
    cases += 1;
    if 5u64.pow(4) <= 6 * 72 {
        cxs.push("(step=a,claim=q^4>6*72,q=5)".to_string());
    }

    // --- step (b): q = 5, prime powers 3 <= u <= 23 coprime to 5
    let meo_cap = BigUint::from(2u32) * BigUint::from(5u64.pow(7));
    let u_max = prime_powers_up_to(40)
        .into_iter()
        .filter(|&u| (BigUint::from(u).pow(4) + 1u32) <= &meo_cap * 2u32)
        .max()
        .unwrap_or(0);
    cases += 1;
    if u_max != 23 {
        cxs.push(format!("(step=b,claim=u_max=23,got={u_max})"));
    }
    let mut candidates: Vec<(String, &'static str, BigUint)> = Vec::new();
    for (name, fam, n) in zy_series() {
        let g = descriptor(fam, n, 5);
        for (x, label) in [(ZOrY::Z, "z"), (ZOrY::Y, "y")] {
            let k = crate::groups::k_x_of(&g, x).expect("q = 5 is odd");
            candidates.push((name.to_string(), label, k));
        }
    }
    let mut hits: Vec<(u64, BigUint, BigUint, Vec<String>)> = Vec::new();
    for u in prime_powers_up_to(u_max) {
        if u < 3 || u % 5 == 0 {
            continue;
        }
        for row in tables::t4_rows_at(u) {
            for k_s in &row.k_values {
                for (lname, xlabel, c) in &candidates {
                    cases += 1;
                    if c > &BigUint::one() && (k_s % c).is_zero() {
                        let source = format!("{lname}.k_{xlabel}");
                        match hits
                            .iter_mut()
                            .find(|(hu, hc, hk, _)| *hu == u && hc == c && hk == k_s)
                        {
                            Some((_, _, _, sources)) => {
                                if !sources.contains(&source) {
                                    sources.push(source);
                                }
                            }
                            None => hits.push((u, c.clone(), k_s.clone(), vec![source])),
                        }
                    }
                }
            }
        }
    }
    let mut hit_desc: Vec<String> = hits
        .iter()
        .map(|(u, c, k, sources)| format!("(u={u},divisor={c},k={k},via={})", sources.join("/")))
        .collect();
    hit_desc.sort();
    let expected_hit = hits.len() == 1
        && hits[0].0 == 17
        && hits[0].1 == BigUint::from(781u32)
        && hits[0].2 == BigUint::from(78881u32);
    if !expected_hit {
        cxs.push(format!(
            "(step=b,claim=single-hit-u17-781-78881,hits={})",
            if hit_desc.is_empty() {
                "none".to_string()
            } else {
                hit_desc.join(";")
            }
        ));
    } else {
        // the hit dies: 101 divides the candidate value but not the order of
        // any q = 5 group realizing the divisor
        cases += 1;
        if !(&hits[0].2 % 101u32).is_zero() {
            cxs.push("(step=b,claim=101-divides-78881)".to_string());
        }
        for (fam, n) in [(Family::PlusOrthogonal, 5), (Family::PlusOrthogonal, 6)] {
            cases += 1;
            let order = descriptor(fam, n, 5).order_value();
            if (order % 101u32).is_zero() {
                cxs.push(format!("(step=b,claim=101-outside-order,n={n})"));
            }
        }
    }

    // --- step (c): exceptional candidates, 7 <= q <= 43
    let mut exceptional: Vec<(Family, u32, u64)> =
        zy_series().iter().map(|&(_, fam, n)| (fam, n, 3)).collect();
    exceptional.extend([
        (Family::PlusOrthogonal, 5, 5),
        (Family::Linear, 8, 5),
        (Family::Linear, 8, 9),
        (Family::Unitary, 8, 7),
    ]);
    let max_exc = exceptional
        .iter()
        .flat_map(|&(fam, n, u)| tables::candidate_table(fam, n, u).unwrap().k_values)
        .max()
        .unwrap();
    cases += 1;
    let k7_9 = k_i_signed(9, 7).unwrap();
    if max_exc != k7_9 || max_exc != BigUint::from(597871u32) {
        cxs.push(format!("(step=c,max_exceptional_k={max_exc},k7_9={k7_9})"));
    }
    for q in prime_powers_up_to(43) {
        if q < 7 || q % 2 == 0 {
            continue;
        }
        let p = is_prime_power_u64(q).unwrap().0;
        for (_, fam, n) in zy_series() {
            let g = descriptor(fam, n, q);
            let kz = crate::groups::k_x_of(&g, ZOrY::Z).expect("odd q");
            for &(sfam, sn, su) in &exceptional {
                if is_prime_power_u64(su).unwrap().0 == p {
                    continue;
                }
                let k_values = tables::candidate_table(sfam, sn, su).unwrap().k_values;
                for k_s in k_values {
                    cases += 1;
                    if (&k_s % &kz).is_zero() {
                        cxs.push(format!("(step=c,q={q},L={g},k_z={kz},divides={k_s})"));
                    }
                }
            }
        }
    }

    CheckReport::from_outcome(
        "small-cases",
        format!(
            "u = 2 ceiling over the t=4 table; q = 5 sweep over prime powers 3 <= u <= 23 \
             coprime to 5, both z and y invariants (the known hit arises from the y side: {}); \
             exceptional sweep over odd prime powers 7 <= q <= 43; table snapshot {}",
            if hit_desc.is_empty() {
                "no hit".to_string()
            } else {
                hit_desc.join(";")
            },
            tables::table_snapshot()
        ),
        cases,
        cxs,
        0,
        start.elapsed(),
    )
}

/// The cubic f(x) = x^3 + 2x^2 + 3x + 4 at eps q for odd prime powers with
/// 5 | q - eps: 5-part exactly 5, value 2 mod 4, and no divisor of
/// 10 * 7 * 31 * 97.
pub fn check_fpoly(ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let q_max = ctx.range_override.unwrap_or(59);
    let ceiling = BigInt::from(10 * 7 * 31 * 97);
    let mut cases = 0u64;
    let mut cxs = Vec::new();
    for q in prime_powers_up_to(q_max) {
        if q % 2 == 0 {
            continue;
        }
        for eps in [1i64, -1] {
            if num_integer::gcd(5, q as i64 - eps) != 5 {
                continue;
            }
            let a = BigInt::from(eps * q as i64);
            let v = a.pow(3) + 2 * a.pow(2) + 3 * &a + 4;
            cases += 3;
            if r_part_u64(&v, 5).unwrap() != BigUint::from(5u32) {
                cxs.push(format!("(q={q},eps={eps},claim=5-part,f={v})"));
            }
            if v.mod_floor(&BigInt::from(4)) != BigInt::from(2) {
                cxs.push(format!("(q={q},eps={eps},claim=2-mod-4,f={v})"));
            }
            if (ceiling.magnitude() % v.magnitude()).is_zero() {
                cxs.push(format!("(q={q},eps={eps},claim=not-dividing-210490,f={v})"));
            }
        }
    }
    CheckReport::from_outcome(
        "fpoly",
        format!("odd prime powers q <= {q_max}, eps with 5 | q - eps"),
        cases,
        cxs,
        0,
        start.elapsed(),
    )
}

/// The only prime power below 272 whose exponent is a multiple of 7 is
/// 2^7 = 128; its k_3 value splits as 49 * 337, and a field size forced to
/// q >= 14*337 - 1 violates the q^4/6 + 1 <= u^6 + u^3 + 1 window.
pub fn check_seventh_powers(_ctx: &CheckContext) -> CheckReport {
    let start = Instant::now();
    let mut cases = 0u64;
    let mut cxs = Vec::new();
    let mut sevenths = Vec::new();
    for u in prime_powers_up_to(272) {
        cases += 1;
        let (_, alpha) = is_prime_power_u64(u).unwrap();
        if alpha % 7 == 0 {
            sevenths.push(u);
        }
    }
    if sevenths != vec![128] {
        cxs.push(format!("(claim=seventh-powers-eq-128,got={sevenths:?})"));
    }
    let k3 = k_i_signed(128, 3).unwrap();
    cases += 3;
    if k3 != BigUint::from(16513u32) {
        cxs.push(format!("(claim=k3-128-eq-16513,got={k3})"));
    }
    let seven_part = r_part_u64(&BigInt::from(k3.clone()), 7).unwrap();
    if seven_part != BigUint::from(49u32) {
        cxs.push(format!("(claim=7-part-49,got={seven_part})"));
    }
    let seven_prime = &k3 / &seven_part;
    if seven_prime != BigUint::from(337u32) {
        cxs.push(format!("(claim=7'-part-337,got={seven_prime})"));
    }
    // the k_6 route does not carry the needed 7-part, forcing index 3
    cases += 1;
    let k6_seven = r_part_u64(&BigInt::from(k_i_signed(128, 6).unwrap()), 7).unwrap();
    if k6_seven != BigUint::one() {
        cxs.push(format!("(claim=k6-7-part-1,got={k6_seven})"));
    }
    // minimal q with 2*7*337 | q - eps: q >= 4717, against q^4 <= 6(u^6 + u^3)
    cases += 1;
    let q0 = BigUint::from(14u32 * 337 - 1);
    let window = (BigUint::from(128u32).pow(6) + BigUint::from(128u32).pow(3)) * 6u32;
    if q0.pow(4) <= window {
        cxs.push("(claim=q0^4-exceeds-window)".to_string());
    }
    // the window's ceiling is an aggregate over the t = 5 rows: recompute
    // each row's K maximum rather than trusting it (the two rows pinned to
    // u = 2 are excluded before the ceiling is invoked)
    for row in tables::TABLE_T5 {
        if row.u_range == tables::URange::ExactlyTwo {
            continue;
        }
        for u in prime_powers_up_to(272) {
            if u == 2 && row.u_range == tables::URange::NotTwo {
                continue;
            }
            cases += 1;
            let ceiling = BigUint::from(u).pow(6) + BigUint::from(u).pow(3) + 1u32;
            for entry in row.k_entries {
                if entry.eval(u) > ceiling {
                    cxs.push(format!(
                        "(claim=row-max,family={:?},n={},u={u})",
                        row.family, row.n
                    ));
                }
            }
        }
    }
    CheckReport::from_outcome(
        "seventh-powers",
        "prime powers u <= 272 with exponent divisible by 7; per-row K maxima of the t=5 \
         table against u^6 + u^3 + 1"
            .to_string(),
        cases,
        cxs,
        0,
        start.elapsed(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{Profile, Status};

    fn ctx() -> CheckContext {
        CheckContext::new(Profile::Full)
    }

    #[test]
    fn small_cases_finds_exactly_the_known_hit() {
        let r = check_small_cases(&ctx());
        assert_eq!(r.status, Status::Pass, "{:?}", r.counterexamples);
        assert!(r.domain_description.contains("y side"));
        assert!(r.cases_checked > 500);
    }

    #[test]
    fn fpoly_passes_to_59() {
        let r = check_fpoly(&ctx());
        assert_eq!(r.status, Status::Pass, "{:?}", r.counterexamples);
        // 8 qualifying (q, eps) pairs below 59: 11, 31, 41 on the plus side
        // and 9, 19, 29, 49, 59 on the minus side, three claims each
        assert_eq!(r.cases_checked, 24);
    }

    #[test]
    fn fpoly_spot_values() {
        // f(11) = 1610 with 5-part 5; f(-9) = -590
        let f = |a: i64| a.pow(3) + 2 * a.pow(2) + 3 * a + 4;
        assert_eq!(f(11), 1610);
        assert_eq!(f(-9), -590);
        assert_ne!(210490 % 1610, 0);
        assert_ne!(210490 % 590, 0);
    }

    #[test]
    fn seventh_powers_pass() {
        let r = check_seventh_powers(&ctx());
        assert_eq!(r.status, Status::Pass, "{:?}", r.counterexamples);
    }
}
