//! Exact integer linear algebra.

mod group;
mod matrix;
mod rational;
mod smith;

pub use group::{cokernel_presentation, AbelianGroup};
pub use matrix::IntegerMatrix;
pub use rational::{rational_rank, rational_rank_of_rows};
pub use smith::{invariant_factors, smith_normal_form, SmithForm};

pub(crate) use smith::invariant_factors_i64;
