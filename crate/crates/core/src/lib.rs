//! Exact, certified isolation of the real solutions of a system of two
//! bivariate polynomials with integer coefficients.
//!
//! The pipeline projects the system onto both axes with resultants, isolates
//! the real roots of both projections, and decides every cell of the induced
//! grid with exact interval exclusion, interval Newton inclusion, and a
//! subresultant-based count of the solutions above each x-coordinate.
//!
//! Everything is exact: integers are arbitrary precision, interval endpoints
//! are dyadic rationals, and no floating-point rounding is involved in any
//! certificate.
//!
//! # `no_std` support
//!
//! The crate is `no_std` and only needs `alloc`. IO, parsing, clocks and file
//! formats live in the `bisolve` companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod bisolve;
mod error;
pub mod isolate;
pub mod poly;

pub use error::{Error, Result};
