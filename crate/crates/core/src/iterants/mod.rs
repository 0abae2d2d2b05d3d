//! The iterant algebra over a finite group and its matrix image.

mod iterant;
mod matrix;

pub use iterant::{element_matrix, CoefficientDisplay, Iterant};
pub use matrix::{perm_matrix, Matrix};
