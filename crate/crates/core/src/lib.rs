//! Exact computations on the Berkovich line over non-archimedean fields.

pub mod cli;
pub mod domain;
pub mod error;
pub mod exponent;
pub mod field;
pub mod graph;
pub mod hyper;
pub mod line;
pub mod parse;
pub mod poly;
pub mod spectra;
