//! Exact arithmetic for sparse Laurent polynomials in the variables
//! `u1..ur, t1..tn`, factored rational functions over those polynomials,
//! and the operator toolbox built on top of them (substitution, Demazure
//! operators, Schur polynomials, ratio rewriting).
//!
//! Coefficients are arbitrary-precision rationals throughout. Integrality of
//! the classes computed elsewhere in the crate is checked at the boundaries
//! that need it, never assumed here.

mod demazure;
mod laurent;
mod monomial;
mod parse;
mod ratfunc;
mod ratio;
mod symmetric;

use std::fmt;

use thiserror::Error;

pub use demazure::{demazure_t, demazure_t_reversed};
pub use laurent::{LaurentPoly, Term};
pub use monomial::Monomial;
pub use ratfunc::{rat_sum, substitute, DenomFactor, Image, RatFunc};
pub use ratio::{beta_rewrite, ratio_rewrite, NotExpressible, RatioPoly};
pub use symmetric::{
    complete_homogeneous_u, partitions_in_box, schur_expand_u, schur_u, Composition, Partition,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Which block a variable belongs to: `u` (row torus) or `t` (column torus).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    U,
    T,
}

/// A single variable `u_i` or `t_j`, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub kind: VarKind,
    pub index: usize,
}

impl VarId {
    pub fn u(index: usize) -> Self {
        VarId {
            kind: VarKind::U,
            index,
        }
    }

    pub fn t(index: usize) -> Self {
        VarId {
            kind: VarKind::T,
            index,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::U => write!(f, "u{}", self.index),
            VarKind::T => write!(f, "t{}", self.index),
        }
    }
}

/// The variable context `(r, n)`: `u1..ur` followed by `t1..tn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ambient {
    pub r: usize,
    pub n: usize,
}

impl Ambient {
    pub fn new(r: usize, n: usize) -> Self {
        Ambient { r, n }
    }

    pub fn nvars(&self) -> usize {
        self.r + self.n
    }

    /// Position of a variable inside an exponent vector.
    pub fn position(&self, var: VarId) -> Result<usize, PolyError> {
        match var.kind {
            VarKind::U if (1..=self.r).contains(&var.index) => Ok(var.index - 1),
            VarKind::T if (1..=self.n).contains(&var.index) => Ok(self.r + var.index - 1),
            _ => Err(PolyError::VariableOutOfRange {
                var,
                ambient: *self,
            }),
        }
    }

    pub fn var_at(&self, pos: usize) -> VarId {
        if pos < self.r {
            VarId::u(pos + 1)
        } else {
            VarId::t(pos - self.r + 1)
        }
    }

    /// Range of exponent-vector positions occupied by a block.
    pub fn block(&self, kind: VarKind) -> std::ops::Range<usize> {
        match kind {
            VarKind::U => 0..self.r,
            VarKind::T => self.r..self.r + self.n,
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, n={})", self.r, self.n)
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PolyError {
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(Ambient, Ambient),
    #[error("variable {var} is outside the ambient {ambient}")]
    VariableOutOfRange { var: VarId, ambient: Ambient },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: LaurentPoly },
    #[error("zero substituted into a negative power of {0}")]
    ZeroSubstitutionIntoNegativePower(VarId),
    #[error("image of {0} is not invertible in the factored rational-function ring")]
    NotInvertible(VarId),
    #[error("numerator is not a monomial times differences t_a - t_b")]
    NotAUnit,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation needs non-negative exponents, found {0}")]
    NegativeExponent(String),
    #[error("polynomial is not symmetric in the u variables")]
    NotSymmetric,
    #[error("polynomial must not contain {0:?} variables")]
    UnexpectedVariables(VarKind),
    #[error("coefficient {0} is not an integer")]
    NonIntegral(BigRational),
    #[error("cannot evaluate: {0}")]
    Evaluation(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("Demazure index {index} is outside 1..{max}")]
    BadOperatorIndex { index: usize, max: usize },
}

/// Convenience constructor for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` as an exact rational.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
