//! Rank-metric codes whose codewords are symmetric, alternating or Hermitian
//! forms: field tower arithmetic, linearized-polynomial machinery, evaluation
//! encoding, rank-error channel simulation, and interpolation-based unique
//! decoding up to ⌊(d-1)/2⌋.

pub mod basis;
pub mod channel;
pub mod code;
pub mod decoder;
pub mod field;
pub mod linalg;
pub mod linpoly;
pub mod oracle;

pub use code::{make_code_spec, CodeParams, CodeSpec, Family};
pub use field::{Element, FieldCtx};
