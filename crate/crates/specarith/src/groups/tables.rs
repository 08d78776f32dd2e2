//! Static candidate data for the classical groups with independence number
//! 4, 5, or 6: the coclique index sets I, the coclique descriptions
//! Theta/Theta', and the divisor ceilings K(S).
//!
//! Rows are versioned and checksummed so a report can state exactly which
//! snapshot was verified.

use super::{Family, GroupError};
use crate::arith;
use num_bigint::{BigInt, BigUint};

pub const TABLE_VERSION: &str = "v1";

/// A K(S) entry: either k_i evaluated at the field size, or a fixed constant
/// (used by the rows pinned to u = 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KEntry {
    KI(u64),
    Const(u64),
}

impl KEntry {
    pub fn eval(&self, u: u64) -> BigUint {
        match self {
            KEntry::KI(i) => arith::k_i(&BigInt::from(u), *i).expect("u >= 2 and i >= 3"),
            KEntry::Const(c) => BigUint::from(*c),
        }
    }
}

/// A symbolic entry of Theta/Theta': a primitive-divisor class r_i(u), or the
/// defining characteristic of S itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaSym {
    Ri(u64),
    DefiningChar,
}

/// Constraint tying a row to its field sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum URange {
    Any,
    NotTwo,
    ExactlyTwo,
}

impl URange {
    fn admits(&self, u: u64) -> bool {
        match self {
            URange::Any => true,
            URange::NotTwo => u != 2,
            URange::ExactlyTwo => u == 2,
        }
    }
}

/// One row of the candidate tables.
#[derive(Debug, Clone)]
pub struct CandidateRow {
    pub family: Family,
    pub n: u32,
    pub u_range: URange,
    /// Independence number t(S) of the row.
    pub t: u32,
    /// Index set I (tables with t = 5, 6).
    pub i_set: &'static [u64],
    /// Divisor ceilings K(S) (absent for the t = 6 table).
    pub k_entries: &'static [KEntry],
    pub theta: &'static [ThetaSym],
    pub theta_prime: &'static [ThetaSym],
}

/// Evaluated view of a row at a specific field size.
#[derive(Debug, Clone)]
pub struct CandidateSData {
    pub family: Family,
    pub n: u32,
    pub u: u64,
    pub t: u32,
    pub i_set: Vec<u64>,
    pub k_values: Vec<BigUint>,
    pub theta: Vec<ThetaSym>,
    pub theta_prime: Vec<ThetaSym>,
}

use KEntry::{Const, KI};
use ThetaSym::{DefiningChar, Ri};

/// Groups with t(S) = 6.
pub static TABLE_T6: &[CandidateRow] = &[
    row(
        Family::Linear,
        11,
        URange::NotTwo,
        6,
        &[6, 7, 8, 9, 10, 11],
        &[],
        &[],
        &[],
    ),
    row(
        Family::Linear,
        12,
        URange::Any,
        6,
        &[7, 8, 9, 10, 11, 12],
        &[],
        &[],
        &[],
    ),
    row(
        Family::Unitary,
        11,
        URange::Any,
        6,
        &[3, 5, 8, 14, 18, 22],
        &[],
        &[],
        &[],
    ),
    row(
        Family::Unitary,
        12,
        URange::Any,
        6,
        &[5, 8, 12, 14, 18, 22],
        &[],
        &[],
        &[],
    ),
    row(
        Family::Symplectic,
        7,
        URange::Any,
        6,
        &[5, 7, 8, 10, 12, 14],
        &[],
        &[],
        &[],
    ),
    row(
        Family::OddOrthogonal,
        7,
        URange::Any,
        6,
        &[5, 7, 8, 10, 12, 14],
        &[],
        &[],
        &[],
    ),
    row(
        Family::PlusOrthogonal,
        7,
        URange::Any,
        6,
        &[3, 5, 7, 8, 10, 12],
        &[],
        &[],
        &[],
    ),
    row(
        Family::PlusOrthogonal,
        8,
        URange::Any,
        6,
        &[5, 7, 8, 10, 12, 14],
        &[],
        &[],
        &[],
    ),
    row(
        Family::MinusOrthogonal,
        7,
        URange::NotTwo,
        6,
        &[5, 6, 8, 10, 12, 14],
        &[],
        &[],
        &[],
    ),
];

/// Groups with t(S) = 5, with their K(S).
pub static TABLE_T5: &[CandidateRow] = &[
    row(
        Family::Linear,
        9,
        URange::NotTwo,
        5,
        &[5, 6, 7, 8, 9],
        &[KI(9), KI(8)],
        &[],
        &[],
    ),
    row(
        Family::Linear,
        10,
        URange::NotTwo,
        5,
        &[6, 7, 8, 9, 10],
        &[KI(10), KI(9)],
        &[],
        &[],
    ),
    row(
        Family::Linear,
        11,
        URange::ExactlyTwo,
        5,
        &[7, 8, 9, 10, 11],
        &[Const(2047), Const(11)],
        &[],
        &[],
    ),
    row(
        Family::Unitary,
        9,
        URange::Any,
        5,
        &[3, 8, 10, 14, 18],
        &[KI(18), KI(8)],
        &[],
        &[],
    ),
    row(
        Family::Unitary,
        10,
        URange::Any,
        5,
        &[3, 5, 8, 14, 18],
        &[KI(5), KI(18)],
        &[],
        &[],
    ),
    row(
        Family::Symplectic,
        5,
        URange::NotTwo,
        5,
        &[3, 5, 6, 8, 10],
        &[KI(5), KI(10)],
        &[],
        &[],
    ),
    row(
        Family::OddOrthogonal,
        5,
        URange::NotTwo,
        5,
        &[3, 5, 6, 8, 10],
        &[KI(5), KI(10)],
        &[],
        &[],
    ),
    row(
        Family::Symplectic,
        6,
        URange::Any,
        5,
        &[3, 5, 8, 10, 12],
        &[KI(12)],
        &[],
        &[],
    ),
    row(
        Family::OddOrthogonal,
        6,
        URange::Any,
        5,
        &[3, 5, 8, 10, 12],
        &[KI(12)],
        &[],
        &[],
    ),
    row(
        Family::MinusOrthogonal,
        6,
        URange::Any,
        5,
        &[3, 5, 8, 10, 12],
        &[KI(12), KI(5), KI(10)],
        &[],
        &[],
    ),
    row(
        Family::MinusOrthogonal,
        7,
        URange::ExactlyTwo,
        5,
        &[5, 8, 10, 12, 14],
        &[Const(43), Const(13)],
        &[],
        &[],
    ),
];

/// Groups with t(S) = 4 (the L3/U3 series is out of scope here).
pub static TABLE_T4: &[CandidateRow] = &[
    row(
        Family::Linear,
        7,
        URange::NotTwo,
        4,
        &[],
        &[KI(7), KI(6)],
        &[Ri(7), Ri(6), Ri(5), Ri(4)],
        &[],
    ),
    row(
        Family::Linear,
        8,
        URange::NotTwo,
        4,
        &[],
        &[KI(8), KI(7)],
        &[Ri(7), Ri(6), Ri(5)],
        &[Ri(8), Ri(4)],
    ),
    row(
        Family::Linear,
        9,
        URange::ExactlyTwo,
        4,
        &[],
        &[Const(73), Const(17)],
        &[],
        &[],
    ),
    row(
        Family::Linear,
        10,
        URange::ExactlyTwo,
        4,
        &[],
        &[Const(73), Const(11)],
        &[],
        &[],
    ),
    row(
        Family::Unitary,
        7,
        URange::Any,
        4,
        &[],
        &[KI(14), KI(3)],
        &[Ri(14), Ri(3), Ri(10), Ri(4)],
        &[],
    ),
    row(
        Family::Unitary,
        8,
        URange::Any,
        4,
        &[],
        &[KI(8), KI(14)],
        &[Ri(14), Ri(3), Ri(10)],
        &[Ri(8), Ri(4)],
    ),
    row(
        Family::Symplectic,
        4,
        URange::NotTwo,
        4,
        &[],
        &[KI(8)],
        &[Ri(8), Ri(6), Ri(3), Ri(4)],
        &[],
    ),
    row(
        Family::OddOrthogonal,
        4,
        URange::NotTwo,
        4,
        &[],
        &[KI(8)],
        &[Ri(8), Ri(6), Ri(3), Ri(4)],
        &[],
    ),
    row(
        Family::Symplectic,
        5,
        URange::ExactlyTwo,
        4,
        &[],
        &[Const(31), Const(11)],
        &[],
        &[],
    ),
    row(
        Family::PlusOrthogonal,
        5,
        URange::ExactlyTwo,
        4,
        &[],
        &[Const(31), Const(17)],
        &[],
        &[],
    ),
    row(
        Family::PlusOrthogonal,
        5,
        URange::NotTwo,
        4,
        &[],
        &[KI(8), KI(5)],
        &[Ri(5), Ri(8), Ri(3)],
        &[Ri(6), Ri(4)],
    ),
    row(
        Family::PlusOrthogonal,
        6,
        URange::Any,
        4,
        &[],
        &[KI(5), KI(10)],
        &[Ri(10), Ri(5), Ri(8)],
        &[Ri(3), Ri(6)],
    ),
    row(
        Family::MinusOrthogonal,
        4,
        URange::NotTwo,
        4,
        &[],
        &[KI(8), KI(6), KI(3)],
        &[Ri(8), Ri(6), Ri(3)],
        &[Ri(4), DefiningChar],
    ),
    row(
        Family::MinusOrthogonal,
        5,
        URange::NotTwo,
        4,
        &[],
        &[KI(8), KI(10)],
        &[Ri(10), Ri(8), Ri(6)],
        &[Ri(3), Ri(4)],
    ),
];

#[allow(clippy::too_many_arguments)]
const fn row(
    family: Family,
    n: u32,
    u_range: URange,
    t: u32,
    i_set: &'static [u64],
    k_entries: &'static [KEntry],
    theta: &'static [ThetaSym],
    theta_prime: &'static [ThetaSym],
) -> CandidateRow {
    CandidateRow {
        family,
        n,
        u_range,
        t,
        i_set,
        k_entries,
        theta,
        theta_prime,
    }
}

/// All rows of all three tables.
pub fn all_rows() -> impl Iterator<Item = &'static CandidateRow> {
    TABLE_T6
        .iter()
        .chain(TABLE_T5.iter())
        .chain(TABLE_T4.iter())
}

/// Look up the candidate row for (family, n) at field size u and evaluate it.
///
/// When both a u = 2 pinned row and a generic row exist for the series, the
/// pinned row wins at u = 2.
pub fn candidate_table(family: Family, n: u32, u: u64) -> Result<CandidateSData, GroupError> {
    let matching: Vec<&CandidateRow> = all_rows()
        .filter(|r| r.family == family && r.n == n && r.u_range.admits(u))
        .collect();
    let chosen = matching
        .iter()
        .find(|r| r.u_range == URange::ExactlyTwo)
        .or_else(|| matching.first())
        .ok_or_else(|| GroupError::NoTableRow(format!("{family:?} n={n} u={u}")))?;
    Ok(CandidateSData {
        family,
        n,
        u,
        t: chosen.t,
        i_set: chosen.i_set.to_vec(),
        k_values: chosen.k_entries.iter().map(|k| k.eval(u)).collect(),
        theta: chosen.theta.to_vec(),
        theta_prime: chosen.theta_prime.to_vec(),
    })
}

/// The rows of the t = 4 table admissible at field size u (used by the
/// bounded eliminations, which sweep every candidate S at once).
pub fn t4_rows_at(u: u64) -> Vec<CandidateSData> {
    let mut seen: Vec<(Family, u32)> = Vec::new();
    let mut out = Vec::new();
    for r in TABLE_T4 {
        if !r.u_range.admits(u) {
            continue;
        }
        if r.u_range != URange::ExactlyTwo && u == 2 {
            // a pinned row may shadow the generic one
            if TABLE_T4
                .iter()
                .any(|p| p.family == r.family && p.n == r.n && p.u_range == URange::ExactlyTwo)
            {
                continue;
            }
        }
        if seen.contains(&(r.family, r.n)) {
            continue;
        }
        seen.push((r.family, r.n));
        out.push(CandidateSData {
            family: r.family,
            n: r.n,
            u,
            t: r.t,
            i_set: r.i_set.to_vec(),
            k_values: r.k_entries.iter().map(|k| k.eval(u)).collect(),
            theta: r.theta.to_vec(),
            theta_prime: r.theta_prime.to_vec(),
        });
    }
    out
}

/// Stable fingerprint of the embedded table data.
pub fn table_snapshot() -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    let mut feed = |bytes: &[u8]| {
        for b in bytes {
            hash ^= *b as u64;
            hash = hash.wrapping_mul(0x100000001b3);
        }
    };
    for r in all_rows() {
        feed(format!("{:?}|{}|{:?}|{}", r.family, r.n, r.u_range, r.t).as_bytes());
        feed(
            format!(
                "{:?}|{:?}|{:?}|{:?}",
                r.i_set, r.k_entries, r.theta, r.theta_prime
            )
            .as_bytes(),
        );
    }
    format!("{TABLE_VERSION}/{hash:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn kvals(family: Family, n: u32, u: u64) -> Vec<u64> {
        candidate_table(family, n, u)
            .unwrap()
            .k_values
            .iter()
            .map(|v| v.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn pinned_rows() {
        assert_eq!(kvals(Family::Linear, 11, 2), vec![2047, 11]);
        assert_eq!(kvals(Family::MinusOrthogonal, 7, 2), vec![43, 13]);
        assert_eq!(kvals(Family::Linear, 9, 2), vec![73, 17]);
        assert_eq!(kvals(Family::Symplectic, 5, 2), vec![31, 11]);
        assert_eq!(kvals(Family::PlusOrthogonal, 5, 2), vec![31, 17]);
    }

    #[test]
    fn symbolic_rows_evaluate() {
        assert_eq!(kvals(Family::PlusOrthogonal, 6, 17), vec![88741, 78881]);
        assert_eq!(kvals(Family::PlusOrthogonal, 6, 2), vec![31, 11]);
        // unitary entries evaluate k_i at positive u
        assert_eq!(kvals(Family::Unitary, 8, 2), vec![17, 43]);
    }

    #[test]
    fn pinned_beats_generic_at_two() {
        // L_9 has a generic t=5 row for u != 2 and a pinned t=4 row at u = 2
        let at2 = candidate_table(Family::Linear, 9, 2).unwrap();
        assert_eq!(at2.t, 4);
        let at3 = candidate_table(Family::Linear, 9, 3).unwrap();
        assert_eq!(at3.t, 5);
        assert_eq!(at3.i_set, vec![5, 6, 7, 8, 9]);
    }

    #[test]
    fn missing_rows_error() {
        assert!(candidate_table(Family::Linear, 13, 3).is_err());
        // O_10^- has no row at u = 2
        assert!(candidate_table(Family::MinusOrthogonal, 5, 2).is_err());
    }

    #[test]
    fn i_set_sizes_match_t() {
        for r in TABLE_T6.iter().chain(TABLE_T5.iter()) {
            assert_eq!(r.i_set.len() as u32, r.t);
        }
    }

    #[test]
    fn t4_rows_at_two_max_k_is_73() {
        let rows = t4_rows_at(2);
        let max = rows
            .iter()
            .flat_map(|r| r.k_values.iter())
            .max()
            .unwrap()
            .clone();
        assert_eq!(max, BigUint::from(73u32));
        // O_8^- and O_10^- carry a u != 2 marker, so they are absent
        assert!(!rows.iter().any(|r| r.family == Family::MinusOrthogonal));
    }

    #[test]
    fn theta_prime_of_o8_minus_carries_the_characteristic() {
        let row = candidate_table(Family::MinusOrthogonal, 4, 3).unwrap();
        assert!(row.theta_prime.contains(&ThetaSym::DefiningChar));
    }

    #[test]
    fn snapshot_is_stable() {
        let a = table_snapshot();
        let b = table_snapshot();
        assert_eq!(a, b);
        assert!(a.starts_with("v1/"));
    }
}
