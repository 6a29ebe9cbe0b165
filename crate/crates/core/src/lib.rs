//! Exact computations in truncated tensor algebras, Cohen groups and
//! James–Hopf maps, with checks of the identities relating them.

pub mod cohen;
pub mod combination;
pub mod error;
pub mod freealg;
pub mod hopfcheck;
pub mod modarith;

pub use error::{Error, Result};
pub use modarith::{Coeff, CoefficientRing, Valuation};
