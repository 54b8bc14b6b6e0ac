//! Computational toolkit for matched pairs of finite groups, crossed actions on
//! based rings, equivariantization, and the Hopf algebras that realize them.

pub mod cli;
pub mod crossed;
pub mod error;
pub mod groups;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod matched;
pub mod report;
pub mod repth;
pub mod rings;

pub use error::{Error, Result};
pub use report::{Report, Witness};
