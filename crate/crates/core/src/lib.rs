//! Parking functions, noncrossing partitions and the poset of noncrossing 2-partitions.

pub mod error;
pub mod nc;
pub mod parking;
pub mod poset;
pub mod shelling;
pub mod enumeration;
pub mod topology;
pub mod kdivisible;
pub mod verify;

pub use error::{Error, Result};
