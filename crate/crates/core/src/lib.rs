//! Commutative, Chevalley-Eilenberg and Leibniz cohomology of finite-dimensional
//! algebras over GF(2), with Hochschild-Serre type and comparison spectral sequences.

pub mod error;
pub mod algebra;
pub mod catalog;
pub mod cochain;
pub mod cohomology;
pub mod comparison;
pub mod f2la;
pub mod format;
pub mod report;
pub mod sample;
pub mod spectral;
pub mod survey;

pub use error::{Error, Result};
