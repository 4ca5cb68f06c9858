//! Exact finite-dimensional Hopf algebra computations.
//!
//! Everything is reduced to dense-in-spirit, sparse-in-storage matrices over
//! the rationals or a prime field. Tensor products of spaces with dimensions
//! `m` and `n` index `e_i ⊗ f_j` as `i·n + j`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod field;
pub mod hopf;
pub mod linsys;
pub mod matrix;
pub mod quasi;
pub mod rep;
pub mod report;
pub mod subspace;
pub mod trimodule;
pub mod yd;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use report::{Report, Status, Witness};
