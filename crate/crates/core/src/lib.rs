//! Finite MV-algebras, MV-lattices and MV-topologies.
//!
//! Values live in the rational unit interval ([`Unit`]); algebras are finite
//! carriers with precomputed operation tables ([`algebra::FinAlgebra`]).

pub mod algebra;
pub mod duality;
pub mod error;
pub mod ideal;
pub mod mvtop;
pub mod order;
pub mod poset;
pub mod qunit;
pub mod samples;
pub mod term;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use qunit::{Scalar, Unit};

/// Exact rational in `[0,1]` with arbitrary precision.
pub type UnitRational = Unit<BigInt>;

/// Rational in `[0,1]` backed by machine integers.
pub type UnitRational64 = Unit<i64>;
