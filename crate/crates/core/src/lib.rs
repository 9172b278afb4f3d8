//! Exact character theory of small finite groups together with the
//! Stickelberger pairing, the map Theta, and tame local resolvends.
//!
//! Groups come from a builtin catalog or a text file ([`grp`]), character
//! tables are exact over cyclotomic fields ([`chartab`], [`cyclo`]), and
//! [`localtame`] works in a model of the maximal tame extension of a local field.

pub mod arith;
pub mod chartab;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod grp;
pub mod lattice;
pub mod linalg;
pub mod localtame;
pub mod stick;

pub use cyclo::Cyclotomic;
pub use error::{Error, Result};
pub use grp::FiniteGroup;
