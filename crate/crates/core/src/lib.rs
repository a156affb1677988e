//! Exact-arithmetic toolkit for finite-dimensional Hom-Lie algebras over ℚ.
//!
//! Every operation works with exact rationals, and every checker returns a
//! [`report::CheckReport`] whose counterexample is the first failing basis
//! tuple. Cocycles of non-abelian extensions appear in three guises: as
//! extensions ([`extensions`]), as morphisms into a derivation 2-algebra
//! ([`homlie2`]) and as Maurer-Cartan elements ([`dghla`]).

pub mod alt;
pub mod cli;
pub mod deriv;
pub mod dghla;
pub mod error;
pub mod exactlin;
pub mod extensions;
pub mod fixtures;
pub mod homlie;
pub mod homlie2;
pub mod io;
pub mod repcoh;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
