//! Arithmetic invariants of finite simple classical groups, exact polynomial
//! gcd certificates, and an exhaustive re-verification harness.
//!
//! The crate is organized around four layers:
//!
//! * [`arith`] — exact multiplicative number theory: factorization, r-parts,
//!   multiplicative orders, lifting-the-exponent closed forms, cyclotomic
//!   values, primitive prime divisors and the derived quantities `k_i(a)`.
//! * [`polycert`] — integer polynomials and Bezout divisibility certificates
//!   of the form "gcd(f(a), g(a)) divides m·h(a) for every integer a".
//! * [`groups`] — descriptors for the classical-group series in scope, their
//!   orders, the z/y invariants, exponent parts, and the candidate tables.
//! * [`verifier`] — registered checks that sweep parameter ranges and emit
//!   deterministic pass/fail reports with counterexamples.
//!
//! The `specarith` binary exposes the whole stack on the command line.

pub mod arith;
pub mod cli;
pub mod groups;
pub mod polycert;
pub mod verifier;
