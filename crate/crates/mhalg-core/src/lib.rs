//! Exact construction and verification of finite-dimensional multiplier
//! bialgebroids and regular multiplier Hopf algebroids.
//!
//! All arithmetic is exact over the rationals or the Gaussian rationals. The
//! crate is `no_std` and only needs an allocator.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bialgebroid;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod field;
pub mod hopf;
pub mod linalg;
pub mod tensor;
