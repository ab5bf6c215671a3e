//! Exact computations with colored and uncolored bosonic lattice models.
//!
//! The crate evaluates partition functions of six-vertex-style models whose
//! vertical edges may carry many paths, the Demazure-Lusztig operators that
//! govern them, and Hall-Littlewood polynomials. Everything is exact: the
//! coefficient ring is `Z[z_i^{±1}, t^{±1}]` with arbitrary precision
//! integers.
//!
//! ```
//! use bosonic::demazure::r_polynomial;
//! use bosonic::lattice::{partition_function, SystemSpec};
//! use bosonic::{Family, LaurentPoly};
//!
//! let r = r_polynomial(&[2, 0]).unwrap();
//! assert_eq!(r, LaurentPoly::parse(2, "z1^2 + z1*z2 + z2^2 - t*z1*z2").unwrap());
//!
//! let spec = SystemSpec::uncolored(Family::R, &[2, 0]).unwrap();
//! assert_eq!(partition_function(&spec), r);
//! ```

pub mod cli;
pub mod demazure;
pub mod error;
pub mod lattice;
pub mod laurent;
pub mod spherical;
pub mod verify;
pub mod weights;
pub mod weyl;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Monomial};
pub use weights::{Color, Family, HSpin, USpin, VSpinC};
pub use weyl::Permutation;
