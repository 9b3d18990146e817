//! Exact rational arithmetic and the tensors everything else is built from.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::{flatten, unflatten, Matrix};
pub use scalar::Scalar;
pub use tensor::{basis, comul_apply, endo_inverse, mul_apply, BiForm, Comul, Elem2, Elem3, Endo, Mul};
