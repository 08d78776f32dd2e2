//! Registered re-verification checks with deterministic reports.
//!
//! Every check sweeps a parameter range with exact integer arithmetic
//! (inequalities are compared by cross-multiplication, never floats) and
//! returns a [`CheckReport`]. Reports are deterministic for a fixed
//! configuration: parameter enumeration order is canonical and independent
//! of the worker count; only the elapsed time varies between runs.

mod bounds;
mod coherence;
mod gcdchecks;
mod kequation;
pub mod report;
mod smallcases;

pub use kequation::{solve_k_equation, KEquationOutcome, SignMode};

use std::time::Duration;
use thiserror::Error;

/// One part (1..=5) of the k-value bound sweep over prime powers up to q_max.
pub fn check_bounds_lemma(part: u8, q_max: u64) -> CheckReport {
    let ctx = CheckContext {
        profile: Profile::Full,
        range_override: Some(q_max),
    };
    match part {
        1 => bounds::check_bounds_1(&ctx),
        2 => bounds::check_bounds_2(&ctx),
        3 => bounds::check_bounds_3(&ctx),
        4 => bounds::check_bounds_4(&ctx),
        5 => bounds::check_bounds_5(&ctx),
        other => panic!("bound part must be 1..=5, got {other}"),
    }
}

/// The product bound sweep over odd prime powers up to q_max (plus q = 4).
pub fn check_ineq_lemma(q_max: u64) -> CheckReport {
    bounds::check_ineq(&CheckContext {
        profile: Profile::Full,
        range_override: Some(q_max),
    })
}

/// Brute-force k_5 collision sweep over signed prime powers up to n.
pub fn search_k5_collisions(n: u64) -> CheckReport {
    kequation::check_k5_collisions(&CheckContext {
        profile: Profile::Full,
        range_override: Some(n),
    })
}

/// The three bounded eliminations (fixed ranges).
pub fn check_small_cases() -> CheckReport {
    smallcases::check_small_cases(&CheckContext::new(Profile::Full))
}

/// The cubic-polynomial cases up to the given q bound (59 reproduces the
/// stated window).
pub fn check_fpoly_cases(q_bound: u64) -> CheckReport {
    smallcases::check_fpoly(&CheckContext {
        profile: Profile::Full,
        range_override: Some(q_bound),
    })
}

/// The seventh-power exponent enumeration below 272.
pub fn check_t5_seventh_power_case() -> CheckReport {
    smallcases::check_seventh_powers(&CheckContext::new(Profile::Full))
}

/// The three gcd-bound suites over qualifying |a| <= range.
pub fn check_gcd_lemmas(range: u64) -> Vec<CheckReport> {
    let ctx = CheckContext {
        profile: Profile::Full,
        range_override: Some(range),
    };
    vec![
        gcdchecks::check_igcd(&ctx),
        gcdchecks::check_igcd1(&ctx),
        gcdchecks::check_igcd2(&ctx),
    ]
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifierError {
    #[error("unknown check id `{unknown}`; available: {available}")]
    UnknownCheck { unknown: String, available: String },
    #[error("no checks registered")]
    EmptyRegistry,
}

/// Outcome status of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// No violations, but some points were degenerate and skipped.
    DegenerateCasesPresent,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DegenerateCasesPresent => "degenerate-cases-present",
        }
    }
}

/// Outcome of one check: what was swept, how many cases, and any
/// counterexamples (rendered as canonical parameter tuples).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check_id: String,
    pub domain_description: String,
    pub cases_checked: u64,
    pub status: Status,
    pub counterexamples: Vec<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    /// Build a report, deriving the status from the evidence: fail iff
    /// counterexamples exist, degenerate-cases-present when only skips occurred.
    pub fn from_outcome(
        check_id: &str,
        domain_description: String,
        cases_checked: u64,
        counterexamples: Vec<String>,
        degenerate: u64,
        elapsed: Duration,
    ) -> CheckReport {
        let status = if !counterexamples.is_empty() {
            Status::Fail
        } else if degenerate > 0 {
            Status::DegenerateCasesPresent
        } else {
            Status::Pass
        };
        CheckReport {
            check_id: check_id.to_string(),
            domain_description,
            cases_checked,
            status,
            counterexamples,
            elapsed,
        }
    }
}

/// Range profile: quick keeps every sweep in the seconds range, full runs
/// the ranges the acceptance criteria pin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

/// Configuration handed to every check.
#[derive(Debug, Clone, Copy)]
pub struct CheckContext {
    pub profile: Profile,
    /// Overrides the check's primary range (q-bound, |a|-bound, ...).
    pub range_override: Option<u64>,
}

impl CheckContext {
    pub fn new(profile: Profile) -> Self {
        CheckContext {
            profile,
            range_override: None,
        }
    }

    /// The check's primary range: override if given, else by profile.
    pub fn range(&self, quick: u64, full: u64) -> u64 {
        self.range_override.unwrap_or(match self.profile {
            Profile::Quick => quick,
            Profile::Full => full,
        })
    }
}

/// One registered check.
pub struct CheckDef {
    pub id: &'static str,
    pub summary: &'static str,
    pub run: fn(&CheckContext) -> CheckReport,
}

/// All registered checks, in canonical execution order.
pub fn registry() -> &'static [CheckDef] {
    &[
        CheckDef {
            id: "bounds1",
            summary: "k_i(eps*q) > q^4 whenever phi(i) > 4",
            run: bounds::check_bounds_1,
        },
        CheckDef {
            id: "bounds2",
            summary: "closed forms and lower bound for k_12(q), k_8(q)",
            run: bounds::check_bounds_2,
        },
        CheckDef {
            id: "bounds3",
            summary: "k_5 k_10 product bound and k_5 bound with the eps*q = -4 exception",
            run: bounds::check_bounds_3,
        },
        CheckDef {
            id: "bounds4",
            summary: "k_7(eps*q) > q^6/8 + 1",
            run: bounds::check_bounds_4,
        },
        CheckDef {
            id: "bounds5",
            summary: "two-sided bounds for m_8(eps*q) with the eps*q = 3 exception",
            run: bounds::check_bounds_5,
        },
        CheckDef {
            id: "ineq",
            summary: "products of k_i over index sets beat C q^{4|I|} + 1/2",
            run: bounds::check_ineq,
        },
        CheckDef {
            id: "k5-collisions",
            summary: "k_5 collisions across prime powers keep distinct gcd and twisted values",
            run: kequation::check_k5_collisions,
        },
        CheckDef {
            id: "keq-k8",
            summary: "k_8(u) never equals k_7(-13)",
            run: kequation::check_keq_k8,
        },
        CheckDef {
            id: "keq-k5",
            summary: "k_5(+-u) never equals k_7(-25)",
            run: kequation::check_keq_k5,
        },
        CheckDef {
            id: "igcd",
            summary: "pairwise gcd bounds for k_8, k_7, k_5, k_10 minus one",
            run: gcdchecks::check_igcd,
        },
        CheckDef {
            id: "igcd1",
            summary: "gcd bounds of 7k_8 - 1 and 7k_5/k_5 - 1 against cyclotomic values",
            run: gcdchecks::check_igcd1,
        },
        CheckDef {
            id: "igcd2",
            summary: "gcd bounds of x^3+2x^2+3x+4 against Phi_i(a^2)",
            run: gcdchecks::check_igcd2,
        },
        CheckDef {
            id: "zy-coherence",
            summary: "z/y invariants: coprimality, divisibility, and k-value bounds",
            run: coherence::check_zy_coherence,
        },
        CheckDef {
            id: "exp-orders",
            summary: "exponent r-parts divide the group order",
            run: coherence::check_exp_orders,
        },
        CheckDef {
            id: "small-cases",
            summary: "bounded eliminations at u = 2, q = 5 (u <= 23), and 7 <= q <= 43",
            run: smallcases::check_small_cases,
        },
        CheckDef {
            id: "fpoly",
            summary: "5-part, parity, and non-divisibility of x^3+2x^2+3x+4 at eps*q",
            run: smallcases::check_fpoly,
        },
        CheckDef {
            id: "seventh-powers",
            summary: "prime powers below 272 with seventh-power exponent",
            run: smallcases::check_seventh_powers,
        },
    ]
}

fn available_ids() -> String {
    registry()
        .iter()
        .map(|d| d.id)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Run the selected checks (registry order, duplicates collapsed) on a
/// dedicated thread pool with `jobs` workers.
pub fn run_selected(
    ids: &[String],
    ctx: &CheckContext,
    jobs: usize,
) -> Result<Vec<CheckReport>, VerifierError> {
    let defs = registry();
    if defs.is_empty() {
        return Err(VerifierError::EmptyRegistry);
    }
    for id in ids {
        if !defs.iter().any(|d| d.id == id) {
            return Err(VerifierError::UnknownCheck {
                unknown: id.clone(),
                available: available_ids(),
            });
        }
    }
    let selected: Vec<&CheckDef> = defs
        .iter()
        .filter(|d| ids.iter().any(|i| i == d.id))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool construction");
    Ok(pool.install(|| selected.iter().map(|d| (d.run)(ctx)).collect()))
}

/// Run every registered check.
pub fn run_all(ctx: &CheckContext, jobs: usize) -> Result<Vec<CheckReport>, VerifierError> {
    let ids: Vec<String> = registry().iter().map(|d| d.id.to_string()).collect();
    run_selected(&ids, ctx, jobs)
}

/// Per-case result merged into a report in canonical order.
#[derive(Debug, Default, Clone)]
pub(crate) struct CaseOutcome {
    pub cases: u64,
    pub counterexamples: Vec<String>,
    pub degenerate: u64,
}

impl CaseOutcome {
    pub(crate) fn ok(cases: u64) -> CaseOutcome {
        CaseOutcome {
            cases,
            counterexamples: Vec::new(),
            degenerate: 0,
        }
    }

    pub(crate) fn merge(outcomes: Vec<CaseOutcome>) -> (u64, Vec<String>, u64) {
        let mut cases = 0;
        let mut cxs = Vec::new();
        let mut degenerate = 0;
        for o in outcomes {
            cases += o.cases;
            cxs.extend(o.counterexamples);
            degenerate += o.degenerate;
        }
        (cases, cxs, degenerate)
    }
}
