//! Exact divided-difference calculus on quadratic, Wilson and linear lattices,
//! the bivariate Racah/Wilson/continuous Hahn families built on them, their
//! fourth-order partial difference equations and three-term recurrences.

pub mod error;
pub mod exactfield;
pub mod families;
pub mod fbasis;
pub mod formula;
pub mod latticeops;
pub mod matrix;
pub mod pdeverify;
pub mod poly;
pub mod ttrr;

pub use error::{Error, Result};
pub use exactfield::{GaussianRational, Rational, C};
