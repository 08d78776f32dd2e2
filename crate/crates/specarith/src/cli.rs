//! Command-line front end: invariant sheets, certificate construction, and
//! the verification suites.
//!
//! Exit codes: 0 when everything selected passes, 1 when any check fails,
//! 2 on usage or parse errors.

use crate::groups::{self, ZOrY};
use crate::polycert::{certify, IntPolynomial};
use crate::verifier::{self, report, CheckContext, Profile};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "specarith",
    about = "Arithmetic invariants of classical groups and exhaustive lemma re-verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant sheet for a group descriptor, e.g. `O12+ q=5`
    Invariants {
        /// Descriptor tokens: series then key=value, e.g. `L8+ q=9`
        #[arg(required = true, num_args = 1..)]
        descriptor: Vec<String>,
    },
    /// Run verification checks and report pass/fail per check
    Verify(VerifyArgs),
    /// Build and print a gcd divisibility certificate for two polynomials
    Certify {
        /// Coefficients of f, constant term first, space or comma separated
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Coefficients of g, constant term first, space or comma separated
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every registered check
    #[arg(long, conflicts_with = "check")]
    all: bool,
    /// Run specific checks by id (repeatable)
    #[arg(long = "check")]
    check: Vec<String>,
    #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
    profile: ProfileArg,
    /// Override the primary sweep range of each selected check
    #[arg(long)]
    range: Option<u64>,
    /// Worker threads (defaults to the available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Records,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Invariants { descriptor } => cmd_invariants(&descriptor.join(" ")),
        Command::Verify(args) => cmd_verify(args),
        Command::Certify { f, g } => cmd_certify(&f, &g),
    }
}

fn cmd_invariants(text: &str) -> i32 {
    let desc = match groups::parse_descriptor(text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let inv = match groups::zy_invariants(&desc) {
        Ok(inv) => inv,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let kz = groups::k_x_of(&desc, ZOrY::Z).expect("invariants computed above");
    let ky = groups::k_x_of(&desc, ZOrY::Y).expect("invariants computed above");
    let order = match desc.group_order() {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let show = |n: &num_bigint::BigUint| match crate::arith::factor(&BigInt::from(n.clone())) {
        Ok(f) => format!("{n} = {f}"),
        Err(_) => format!("{n}"),
    };
    println!("group: {desc}");
    println!(
        "q = {} (p = {}, alpha = {}), untwisted rank {}",
        desc.q(),
        desc.p(),
        desc.alpha(),
        desc.untwisted_rank()
    );
    println!("branch: {}", inv.branch);
    println!("z = {}, y = {}", inv.z, inv.y);
    println!("m_z = {}", show(&inv.m_z));
    println!("m_y = {}", show(&inv.m_y));
    println!(
        "gcd(m_z, m_y) = {}",
        num_integer::Integer::gcd(&inv.m_z, &inv.m_y)
    );
    println!("k_z = {}", show(&kz));
    println!("k_y = {}", show(&ky));
    println!(
        "meo upper bound: q^{} = {}",
        desc.untwisted_rank(),
        desc.meo_upper_bound()
    );
    println!("|L| = {order}");
    0
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    if !args.all && args.check.is_empty() {
        eprintln!("error: select checks with --all or --check <id>");
        return 2;
    }
    if args.jobs == Some(0) {
        eprintln!("error: --jobs must be at least 1");
        return 2;
    }
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let ctx = CheckContext {
        profile: match args.profile {
            ProfileArg::Quick => Profile::Quick,
            ProfileArg::Full => Profile::Full,
        },
        range_override: args.range,
    };
    let result = if args.all {
        verifier::run_all(&ctx, jobs)
    } else {
        verifier::run_selected(&args.check, &ctx, jobs)
    };
    let reports = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let rendered = match args.format {
        FormatArg::Human => report::render_human(&reports),
        FormatArg::Records => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&report::to_record_line(r));
                s.push('\n');
            }
            s
        }
    };
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 2;
        }
    } else {
        print!("{rendered}");
    }
    let failed = reports
        .iter()
        .filter(|r| r.status == verifier::Status::Fail)
        .count();
    if failed > 0 {
        eprintln!("{failed} check(s) failed");
        1
    } else {
        0
    }
}

fn parse_poly(text: &str) -> Result<IntPolynomial, String> {
    let coeffs: Result<Vec<BigInt>, _> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BigInt>())
        .collect();
    match coeffs {
        Ok(c) if c.is_empty() => Err("no coefficients given".to_string()),
        Ok(c) => Ok(IntPolynomial::new(c)),
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_certify(f_text: &str, g_text: &str) -> i32 {
    let f = match parse_poly(f_text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: bad coefficients for f: {e}");
            return 2;
        }
    };
    let g = match parse_poly(g_text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: bad coefficients for g: {e}");
            return 2;
        }
    };
    let cert = match certify(&f, &g) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    println!("f = {}", cert.f);
    println!("g = {}", cert.g);
    println!("h = {}", cert.h);
    println!("m = {}", cert.m);
    println!("u = {}", cert.u);
    println!("v = {}", cert.v);
    println!("identity: f*u + g*v = {}*h", cert.m);
    // 100-point spot check of the pointwise consequence
    let mut ok = 0u32;
    let mut degenerate = 0u32;
    let mut violations = 0u32;
    for a in -50i64..50 {
        let ab = BigInt::from(a);
        let fa = cert.f.eval(&ab);
        let ga = cert.g.eval(&ab);
        if fa.is_zero() && ga.is_zero() {
            degenerate += 1;
            continue;
        }
        let d = num_integer::Integer::gcd(fa.magnitude(), ga.magnitude());
        if (cert.bound_at(&ab).magnitude() % &d).is_zero() {
            ok += 1;
        } else {
            violations += 1;
        }
    }
    println!(
        "spot check on 100 points in [-50, 49]: {ok} ok, {degenerate} degenerate, {violations} violations"
    );
    if violations > 0 {
        1
    } else {
        0
    }
}
