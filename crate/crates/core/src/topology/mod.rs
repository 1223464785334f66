//! Chain complexes, order complexes, characters via the Hopf trace formula,
//! alternating forests and the cluster parking complex.

mod cluster;
mod complex;
mod forests;
mod order;

pub use cluster::*;
pub use complex::*;
pub use forests::*;
pub use order::*;
