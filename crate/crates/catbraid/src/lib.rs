//! Categorical actions of ADE braid groups on complexes of zigzag-algebra
//! modules, and the homological computation of Garside normal forms.

pub mod braid_action;
mod chain;
pub mod complexes;
pub mod coxeter;
pub mod error;
pub mod garside;
pub mod garside_dual;
pub mod garside_std;
pub mod hom_algorithms;
mod linalg;
pub mod word;
pub mod zigzag;

pub use error::{Error, Result};
