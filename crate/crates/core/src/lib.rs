//! Exact computations with free quadratic algebras over commutative rings.
//!
//! A free quadratic algebra with basis `1, x` over a ring `R` is
//! `R[x]/(x^2 - t x + n)` and is encoded by the pair `(t, n)`. This crate
//! provides:
//!
//! * [`ring`]: the base rings `Z`, `Z/n` and `(Z/n)[x]/(f)`;
//! * [`monoid`]: finite commutative monoids, congruences, exactness and `K0`;
//! * [`quad`]: algebra arithmetic, the monoid product
//!   `(t, n) * (s, m) = (st, m t^2 + n s^2 - 4nm)`, isomorphism testing and
//!   classification over finite rings;
//! * [`disc`]: discriminants, discriminant classes and rank-one forms;
//! * [`artin_schreier`]: the group `R[4] / wp(R)[4]` and its action on the
//!   fibers of the discriminant map;
//! * [`symbolic`]: exact multivariate polynomials over `Z` and a catalogue of
//!   polynomial identities underlying the constructions above.

pub mod artin_schreier;
pub mod disc;
pub mod monoid;
pub mod quad;
pub mod ring;
pub mod symbolic;

use thiserror::Error;

pub use artin_schreier::{AsGroup, FiberReport};
pub use disc::{DiscClass, DiscClasses, Rank1Form};
pub use monoid::{AbelianGroup, Congruence, FiniteCommMonoid, MonoidError, MonoidHom};
pub use quad::{AlgElement, BasisChange, Classification, IsoClass, QuadAlg};
pub use ring::{Ring, RingElement, RingError, RingSpec};
pub use symbolic::{MultiPoly, TensorElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("algebra with discriminant {0} is not separable")]
    NotSeparable(String),
    #[error("{0} is not a discriminant (no square root modulo 4R)")]
    NotADiscriminant(String),
    #[error("{0} is not 4-torsion")]
    NotFourTorsion(String),
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
    #[error("invalid witness {witness} for discriminant {d}")]
    BadWitness { d: String, witness: String },
    /// An internal consistency check failed; indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
