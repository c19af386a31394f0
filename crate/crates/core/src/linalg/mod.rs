//! Exact linear algebra over cyclotomic fields and over the integers.

mod integer;
mod matrix;

pub use integer::{column_hnf, hermite_kernel, kernel_mod, row_hnf, same_lattice, smith_normal_form, IntMatrix, Smith};
pub use matrix::Matrix;
