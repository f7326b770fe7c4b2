//! Exact computations for semi-infinite Plücker relations and Weyl module
//! characters of `sl_n` current algebras.

pub mod charformula;
pub mod charring;
pub mod columns;
pub mod error;
pub mod fusion;
pub mod linalg;
pub mod minors;
pub mod pluecker;
pub mod sp4c2;

pub use charring::{CharPoly, QPoly, TruncatedSeries};
pub use columns::Column;
pub use error::{Error, Result};
