#![no_std]
//! Exact computations on finite-dimensional Zinbiel superalgebras given by
//! structure constants.

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod exactla;
pub mod graded;
pub mod maps;
pub mod polysys;
pub mod series;
pub mod spectra;
pub mod structure;
pub mod superalg;
