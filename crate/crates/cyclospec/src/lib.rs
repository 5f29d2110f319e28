//! Exact characteristic polynomials and spectra of Laplacians of Cayley
//! graphs of cyclic groups, with mechanical verification of the identity,
//! divisibility, and spectral-closure theorems they satisfy.
//!
//! Everything algebraic runs in exact big-integer arithmetic on polynomials
//! in the variable `a = 2 - lambda`; eigenvalue identity is decided on exact
//! rotation indices. Floating point appears only in the numeric eigensolver
//! and in spectrum realizations.

pub mod cayley;
pub mod cli;
pub mod oracle;
pub mod polyalg;
pub mod report;
pub mod sequences;
pub mod spectra;

pub use polyalg::IntPoly;
pub use report::VerificationReport;
pub use sequences::SequenceCache;
