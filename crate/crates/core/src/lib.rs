//! Torus-equivariant Schubert classes of Grassmannians restricted to fixed
//! points, computed by several independent formulas.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod eyd;
pub mod factorial;
pub mod latticepaths;
pub mod localization;
pub mod multiplicity;
pub mod polyalg;
pub mod shapes;
pub mod weyl;

pub use error::{Error, Result};
