//! Error type shared by all validation and computation routines.
//!
//! Every constructor in this crate validates its input exhaustively and
//! reports the first failing axiom together with a concrete witness, so a
//! rejected instance can be debugged from the error alone.

use std::fmt;

/// Which side of a two-sided structure a check failed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The stated modulus is not a prime number.
    NotPrime { p: u64 },
    /// Multiplication defined by the structure constants fails associativity
    /// on the basis triple `(i, j, k)`.
    NotAssociative { i: usize, j: usize, k: usize },
    /// The designated unit vector is not a two-sided identity; `witness` is a
    /// basis index where `1·e_i` or `e_i·1` differs from `e_i`.
    NoUnit { witness: usize, side: Side },
    /// The element has no two-sided multiplicative inverse.
    NotAUnit,
    /// An exhaustive enumeration would exceed the configured budget.
    TooLarge { needed: u128, budget: u64 },
    /// The multiplication table does not define a group.
    NotAGroup { reason: String },
    /// `maps[elem]` is not a unital ring automorphism; the optional witness is
    /// a basis pair where multiplicativity fails.
    NotAnAutomorphism {
        elem: usize,
        witness: Option<(usize, usize)>,
    },
    /// The per-element automorphisms do not compose along the group law at
    /// the pair `(x, y)`.
    NotAnAction { x: usize, y: usize },
    /// The action matrices are not a unital associative representation;
    /// `(i, j)` is a failing algebra-basis pair.
    NotARepresentation { side: Side, i: usize, j: usize },
    /// Left and right actions fail to commute on the algebra-basis pair.
    ActionsDoNotCommute { i: usize, j: usize },
    /// A map fails A-linearity against the algebra basis element `alg` on the
    /// module basis vector `basis`.
    NotBilinear {
        side: Side,
        alg: usize,
        basis: usize,
    },
    /// A map on a tensor quotient does not kill the balancing subspace.
    NotWellDefined { generator: usize },
    /// Coassociativity fails on the carrier basis vector `witness`.
    NotCoassociative { witness: usize },
    /// A counit law fails on the carrier basis vector `witness`.
    CounitFails { witness: usize, side: Side },
    /// The element does not satisfy the grouplike equations; `condition`
    /// names the failed one.
    NotAGrouplike { condition: &'static str },
    /// The coring map is not an automorphism (not invertible, or it breaks
    /// the comultiplication or counit).
    NotACoringAut { condition: &'static str },
    /// The values fail the 1-cocycle identity at the group pair `(x, y)`.
    NotACocycle { x: usize, y: usize },
    /// The grouplike is not Galois, but the operation requires it.
    NotGalois,
    /// The coring has no grouplike elements, so the pointed sets are undefined.
    EmptyGrouplikeSet,
    /// A spanning set is not closed under multiplication or misses the unit.
    NotASubring { reason: &'static str },
    /// Two objects that must share a parent algebra (or matching dimensions)
    /// do not.
    Mismatch { expected: String, got: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime { p } => write!(f, "{p} is not prime"),
            Error::NotAssociative { i, j, k } => {
                write!(f, "(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})")
            }
            Error::NoUnit { witness, side } => {
                write!(f, "unit fails as {side} identity on basis vector {witness}")
            }
            Error::NotAUnit => write!(f, "element has no two-sided inverse"),
            Error::TooLarge { needed, budget } => {
                write!(
                    f,
                    "enumeration of {needed} candidates exceeds budget {budget}"
                )
            }
            Error::NotAGroup { reason } => write!(f, "not a group: {reason}"),
            Error::NotAnAutomorphism { elem, witness } => match witness {
                Some((i, j)) => write!(
                    f,
                    "map of group element {elem} is not multiplicative at basis pair ({i}, {j})"
                ),
                None => write!(
                    f,
                    "map of group element {elem} is not a unital automorphism"
                ),
            },
            Error::NotAnAction { x, y } => {
                write!(f, "maps do not compose along the group law at ({x}, {y})")
            }
            Error::NotARepresentation { side, i, j } => {
                write!(
                    f,
                    "{side} action is not a representation at basis pair ({i}, {j})"
                )
            }
            Error::ActionsDoNotCommute { i, j } => {
                write!(
                    f,
                    "left action of e{i} does not commute with right action of e{j}"
                )
            }
            Error::NotBilinear { side, alg, basis } => write!(
                f,
                "map is not {side} A-linear for algebra basis {alg} on module basis {basis}"
            ),
            Error::NotWellDefined { generator } => {
                write!(f, "map does not kill balancing generator {generator}")
            }
            Error::NotCoassociative { witness } => {
                write!(f, "coassociativity fails on carrier basis vector {witness}")
            }
            Error::CounitFails { witness, side } => {
                write!(
                    f,
                    "{side} counit law fails on carrier basis vector {witness}"
                )
            }
            Error::NotAGrouplike { condition } => {
                write!(f, "element is not grouplike: {condition} fails")
            }
            Error::NotACoringAut { condition } => {
                write!(f, "map is not a coring automorphism: {condition} fails")
            }
            Error::NotACocycle { x, y } => {
                write!(f, "cocycle identity fails at group pair ({x}, {y})")
            }
            Error::NotGalois => write!(f, "grouplike is not Galois"),
            Error::EmptyGrouplikeSet => write!(f, "the coring has no grouplike elements"),
            Error::NotASubring { reason } => write!(f, "not a subring: {reason}"),
            Error::Mismatch { expected, got } => {
                write!(f, "mismatched objects: expected {expected}, got {got}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
