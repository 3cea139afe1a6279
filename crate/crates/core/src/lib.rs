//! Intrinsic torsion and Ricci curvature of left-invariant almost
//! parahermitian `SL(n,R)`-structures on Lie algebras, in exact rational
//! arithmetic.
//!
//! The pipeline is: parse structure constants ([`liealg`]), fix an adapted
//! coframe ([`pstruct`]), extract the torsion from `dF`, `dα`, `dβ`
//! ([`torsion`]), then compute Ricci curvature twice, once through the
//! Levi-Civita connection ([`curvature`]) and once from the torsion alone
//! ([`ricforms`]). [`search`] looks for nearly parakähler Ricci-flat
//! structures and [`analysis`] ties everything into one record.

pub mod analysis;
pub mod corpus;
pub mod curvature;
pub mod exalg;
pub mod liealg;
pub mod pstruct;
pub mod ricforms;
pub mod search;
pub mod torsion;

pub use exalg::{KForm, Matrix, Scalar};
pub use liealg::LieAlgebra;
pub use pstruct::Structure;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("odd dimension {0}: an SL(n,R)-structure needs dimension 2n")]
    OddDimension(usize),
    #[error("singular matrix")]
    Singular,
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("linear system has no unique solution")]
    NotUnique,
    #[error("decomposition by F is not direct on bidegree ({r},{s}) for n = {n}")]
    NotDirect { n: usize, r: usize, s: usize },
    #[error("unsupported bidegree ({0},{1})")]
    UnsupportedBidegree(usize, usize),
    #[error("Jacobi identity fails: d(de^{index}) = {witness}")]
    Jacobi { index: usize, witness: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parameter {0} must be nonzero")]
    ParamZero(String),
}
