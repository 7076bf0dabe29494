//! Grading groups and the scalar-valued forms on them.

mod forms;
mod group;

pub(crate) use forms::same_context;
pub use forms::{
    bichar_verify, cocycle_verify, twist_bicharacter, twist_bicharacter_unchecked, Bicharacter, TwoCocycle,
};
pub use group::{FiniteAbelianGroup, GroupElement};
