//! Exact-arithmetic toolkit for the modular representation theory of
//! Ariki-Koike algebras at roots of unity.
//!
//! The crate computes, end to end and without any floating point:
//!
//! - the two `U_q(sl_e-hat)`-module structures on the level-`d` Fock space
//!   (the Hayashi action driven by the AM node order and the JMMO action
//!   driven by the FLOTW node order), see [`fock`];
//! - the crystal graphs of the highest weight submodule generated by the
//!   empty multipartition for both orders, Kleshchev and FLOTW
//!   multipartitions, and the canonical bijection between them, see
//!   [`crystal`];
//! - the combinatorial a-function and the a-sequence of residues of a FLOTW
//!   multipartition, see [`afun`];
//! - canonical bases of the highest weight module by triangular elimination
//!   of divided-power monomial vectors, and the resulting decomposition
//!   matrices at `q = 1`, see [`llt`];
//! - the explicit canonical basic sets for Weyl types A, B and D, see
//!   [`basicsets`].
//!
//! All coefficients are sparse Laurent polynomials over arbitrary-precision
//! integers ([`LaurentPolynomial`]); all a-values are exact rationals
//! ([`Rational`]).

pub mod afun;
pub mod basicsets;
pub mod combinat;
pub mod crystal;
pub mod exactmath;
pub mod fock;
pub mod llt;

pub use afun::ASequence;
pub use combinat::{ChargeParams, Multipartition, Node, Partition};
pub use crystal::CrystalGraph;
pub use exactmath::{LaurentPoly, Rational};
pub use fock::{FockVector, OrderKind};
pub use llt::{CanonicalBasisColumn, DecompositionMatrix};

use std::fmt;

/// Laurent polynomials with arbitrary-precision integer coefficients.
///
/// This is the concrete scalar instantiation used throughout the crate:
/// canonical-basis coefficients grow beyond machine words at moderate rank,
/// so correctness requires `BigInt` here.
pub type LaurentPolynomial = LaurentPoly<num_bigint::BigInt>;

/// Errors raised by the library.
///
/// The variants `NonDivisibility`, `EliminationStuck`, `PathReplayFailure`
/// and `NoValidResidue` are structural self-checks: they cannot fire on
/// valid input unless an algorithm is implemented incorrectly, and the test
/// suite asserts that they never do.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Exact polynomial division was requested but no exact quotient exists.
    NonDivisibility,
    /// A pair `(lambda, mu)` passed to a node statistic is not related by
    /// the addition of a single node of the stated residue.
    InvalidPair(String),
    /// A multipartition's rank does not match the stated rank.
    RankMismatch { expected: u32, found: u32 },
    /// The multipartition is not FLOTW, but the operation requires it.
    NotFlotw(String),
    /// The a-sequence peeling step found no admissible residue.
    NoValidResidue(String),
    /// A crystal path could not be replayed or computed.
    PathReplayFailure(String),
    /// Triangular elimination hit a coefficient it cannot clear.
    EliminationStuck(String),
    /// Invalid parameter datum (charges out of range, unsorted, `e < 2`...).
    InvalidParameters(String),
    /// A textual form failed to parse.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonDivisibility => write!(f, "non-divisibility: no exact quotient exists"),
            Error::InvalidPair(s) => write!(f, "invalid pair: {s}"),
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::NotFlotw(s) => write!(f, "not a FLOTW multipartition: {s}"),
            Error::NoValidResidue(s) => write!(f, "no valid residue: {s}"),
            Error::PathReplayFailure(s) => write!(f, "crystal path replay failure: {s}"),
            Error::EliminationStuck(s) => write!(f, "elimination stuck: {s}"),
            Error::InvalidParameters(s) => write!(f, "invalid parameters: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for Error {}
