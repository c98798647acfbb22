//! Exact scalar arithmetic for algebra computations that must never round:
//! arbitrary-precision rationals, the cyclotomic field Q(zeta_M), Laurent
//! polynomials in q over it, and normalized rational functions together
//! with root-of-unity specializations of q.
//!
//! Everything here is immutable and cheap to clone; field handles are
//! reference counted and safe to share across threads.

pub mod cyclo;
pub mod laurent;
pub mod scalar;
pub mod serial;
pub mod special;

pub use cyclo::{rat, rat_frac, CycloField, CycloNumber, Rat};
pub use laurent::LaurentPoly;
pub use scalar::Scalar;
pub use serial::{CycloRepr, LaurentRepr, ScalarRepr};
pub use special::Specialization;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at specialization")]
    PoleAtSpecialization,
    #[error("order {sub} does not divide the ambient cyclotomic order {amb}")]
    IncompatibleOrder { sub: u64, amb: u64 },
    #[error("malformed serialized value: {0}")]
    BadSerialization(String),
}
