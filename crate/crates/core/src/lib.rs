//! Box-ball systems and the Robinson-Schensted-Knuth correspondence.
//!
//! A box-ball state is encoded as a bi-word of `(box label, ball color)`
//! columns. Under RSK its P-symbol is conserved by the time evolution, and
//! its Q-symbol evolves on its own through a carrier of vacant box labels.

pub mod bbs;
pub mod cli;
pub mod error;
pub mod knuth;
pub mod notation;
pub mod oracle;
pub mod rsk;
pub mod sample;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};

/// Letters of words and entries of tableaux.
pub type Letter = i64;
/// Box labels.
pub type Label = i64;
/// Slot indices; a box of capacity `k` spans `k` consecutive slots.
pub type Slot = i64;
/// Ball colors, `1..=n`.
pub type Color = u32;
