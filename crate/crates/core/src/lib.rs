pub mod colie;
pub mod error;
pub mod fixtures;
pub mod gradedalg;
pub mod grading;
pub mod linear;
pub mod matched;
pub mod report;
pub mod scalar;

pub use colie::{CobracketTable, GradedCoalgebra};
pub use error::{Error, Result, ScalarError};
pub use gradedalg::{BilinearTable, GradedAlgebra, GradedBasis, GradedLieAlgebra};
pub use grading::{Bicharacter, FiniteAbelianGroup, GroupElement, TwoCocycle};
pub use linear::{GradedVector, LinComb, Tensor2, Tensor3};
pub use matched::{CobrackedPair, LeftAction, MatchedPair, RightAction};
pub use report::{Check, Status, VerificationReport, VerifyOptions, Witness};
pub use scalar::{FieldDescriptor, Scalar};
