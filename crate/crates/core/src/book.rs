// The guide's chapters, compiled as doc-tests so every snippet in book/ runs
// under `cargo test`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/clifford.md")]
pub mod clifford {}
#[doc = include_str!("../../../book/src/lattice.md")]
pub mod lattice {}
#[doc = include_str!("../../../book/src/operators.md")]
pub mod operators {}
#[doc = include_str!("../../../book/src/su11.md")]
pub mod su11 {}
#[doc = include_str!("../../../book/src/hypergeometric.md")]
pub mod hypergeometric {}
#[doc = include_str!("../../../book/src/evolution.md")]
pub mod evolution {}
#[doc = include_str!("../../../book/src/verifier.md")]
pub mod verifier {}
