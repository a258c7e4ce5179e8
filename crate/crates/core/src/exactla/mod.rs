//! Exact rational scalars, dense matrices, reduced row-echelon form and
//! canonical subspaces.
//!
//! Everything here is exact. Subspaces are stored by their reduced
//! row-echelon basis, so two subspaces are equal exactly when their stored
//! bases are identical.

mod matrix;
mod subspace;

pub use matrix::{rank, rref, Matrix};
pub use subspace::Subspace;

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseRationalError {
    pub literal: String,
    pub reason: &'static str,
}

/// `numer / denom` as an exact rational. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"` or `"p"` (sign on the numerator, optional leading `+`).
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        literal: String::from(text),
        reason,
    };
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (trimmed, None),
    };
    let numer = numer.strip_prefix('+').unwrap_or(numer);
    if numer.is_empty() {
        return Err(err("missing numerator"));
    }
    let numer = BigInt::from_str(numer).map_err(|_| err("numerator is not an integer"))?;
    let denom = match denom {
        None => BigInt::one(),
        Some(q) => {
            if q.starts_with('-') || q.starts_with('+') {
                return Err(err("sign must be on the numerator"));
            }
            BigInt::from_str(q).map_err(|_| err("denominator is not an integer"))?
        }
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}
