//! Exact Clifford-valued operator calculus on the lattice `hZ^n`.
//!
//! The crate works in `P = R[x_1..x_n] ⊗ Cl_{0,n}` with exact rational
//! coefficients throughout:
//!
//! - [`clifford`]: blades, multivectors and the geometric product of `Cl_{0,n}`.
//! - [`poly`]: Clifford-valued polynomials, translations and lattice evaluation.
//! - [`ops`] and [`expr`]: finite differences, Dirac and Euler operators, the
//!   weight multiplication operators, and an operator AST with a generic
//!   commutator.
//! - [`su11`]: ladder bases, Appell sequences, the Casimir operator,
//!   hypergeometric coefficients and the joint-eigenspace decomposition.
//! - [`evolution`]: the semigroup `exp(t(E_h^- - E_h^+))` and its Cauchy problem.
//! - [`verify`]: a registry of identities checked with zero residual.
//!
//! ```
//! use cliflat::{apply, CliffordPoly, LatticeParams, OperatorExpr, Sign};
//! use cliflat::ops::WeightKind;
//!
//! let params = LatticeParams::standard(2).unwrap();
//! let p = CliffordPoly::var(&params, 1).unwrap();
//! // [∂_h^{+1}, W_h^{-1}] = I
//! let bracket = OperatorExpr::commutator(
//!     OperatorExpr::fdiff(Sign::Plus, 1),
//!     OperatorExpr::weight(WeightKind::Minus, 1),
//! );
//! assert_eq!(apply(&bracket, &p).unwrap(), p);
//! ```

pub mod clifford;
pub mod error;
pub mod evolution;
pub mod expr;
pub mod io;
pub mod linalg;
pub mod ops;
pub mod poly;
pub mod rational;
pub mod su11;
pub mod verify;

#[cfg(doctest)]
mod book;

pub use clifford::{bilinear_form, blade_product, mv_mul, Blade, Multivector};
pub use error::{Error, Result};
pub use expr::{apply, OperatorExpr, Primitive};
pub use poly::{CliffordPoly, LatticeParams, MultiIndex, Sign};
pub use rational::{format_rational, parse_rational, Rational};
