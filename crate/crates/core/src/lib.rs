//! Exact linear algebra over the free algebra `K<x,z>` and its dihedral
//! quotients: the Lie algebra `ls`, double shuffle spaces, and the dual
//! dihedral coalgebra.

pub mod cache;
pub mod cli;
pub mod combinat;
pub mod commring;
pub mod context;
pub mod dihedral;
pub mod error;
pub mod linalg;
pub mod lsspace;
pub mod lincomb;
pub mod ncalg;
pub mod rational;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
