//! Exact arithmetic for the centre of the Iwahori–Hecke algebra of the
//! symmetric group, over the integral polynomial ring of the deformation
//! parameter.
//!
//! The centre has an integral basis of class elements; monomial symmetric
//! polynomials in the Jucys–Murphy elements are central but — except in tiny
//! ranks — no family of them alone forms an integral basis. This crate
//! computes, entirely without fractions or floats:
//!
//! * the block transition matrices `M(k)`, `N(k)` between monomials and
//!   minimal class coefficients, by a direct Hecke-algebra evaluation and
//!   independently by a composition-indexed recursion ([`tower`]);
//! * an integral basis of the centre made of explicit integral combinations
//!   of monomials, one per partition of the rank, and the class elements
//!   recovered from it by exact triangular inversion ([`center`]);
//! * the complete rank-3 classification: the coefficient table of class
//!   sums in monomials, closed forms, recurrences, and the proof-by-
//!   computation that exactly four monomial families are integral bases of
//!   the specialized centre, exactly one of which survives deformation
//!   ([`s3`]).
//!
//! Core arithmetic is generic over the integer scalar (see [`scalar::Scalar`]);
//! the aliases below fix the default arbitrary-precision instantiation.
//!
//! ```
//! use hecke_center::{comp, global_store, center};
//!
//! let basis = center::basis(global_store(), 3).unwrap();
//! assert_eq!(basis.len(), 3);
//! assert_eq!(basis[2].label(), &comp![2]);
//! ```

use std::fmt;
use std::sync::OnceLock;

pub mod center;
pub mod combinat;
pub mod hecke;
pub mod matrix;
pub mod perm;
pub mod poly;
pub mod qsym;
pub mod s3;
pub mod scalar;
pub mod tower;
pub mod verify;

pub use combinat::Composition;
pub use perm::Permutation;
pub use scalar::Scalar;

/// Default coefficient scalar: arbitrary-precision integers.
pub type Int = num_bigint::BigInt;
/// The ground ring with default coefficients.
pub type PolyZxi = poly::Poly<Int>;
/// Hecke-algebra elements over the default scalar.
pub type HeckeElt = hecke::HeckeElement<Int>;
/// Labelled polynomial matrices over the default scalar.
pub type Matrix = matrix::LabeledMatrix<Int>;
/// Central elements over the default scalar.
pub type Central = center::CentralElement<Int>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// No increasing element of this shape exists in the given rank.
    ShapeNotRealizable { lambda: Composition, n: u32 },
    /// Exhaustive work at this rank (or block) is refused.
    RankTooLarge { n: usize, max: usize },
    NotDivisible,
    DivisionByZero,
    /// Inversion requested for a matrix whose determinant is not `±1`.
    NotUnimodular { det: String },
    /// No candidate convention for the symmetrization matrix validated.
    UnresolvedHatConvention { report: String },
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeNotRealizable { lambda, n } => {
                write!(f, "no element of shape {lambda} in rank {n} (need |λ|+ℓ(λ) ≤ n)")
            }
            Error::RankTooLarge { n, max } => {
                write!(f, "size {n} exceeds the supported bound {max}")
            }
            Error::NotDivisible => write!(f, "quotient does not exist in the polynomial ring"),
            Error::DivisionByZero => write!(f, "division by the zero polynomial"),
            Error::NotUnimodular { det } => {
                write!(f, "matrix is not invertible over the ring: determinant {det}")
            }
            Error::UnresolvedHatConvention { report } => {
                write!(f, "symmetrization convention unresolved: {report}")
            }
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

/// Process-wide matrix store for the default scalar; the heavy direct
/// evaluations run at most once per process.
pub fn global_store() -> &'static tower::MatrixStore<Int> {
    static STORE: OnceLock<tower::MatrixStore<Int>> = OnceLock::new();
    STORE.get_or_init(tower::MatrixStore::new)
}
