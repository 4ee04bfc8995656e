//! Twisted Baxter permutations, diagonal rectangulations and the Hopf
//! algebras MR, tBax, Bax and dRec.
//!
//! Permutations map to rectangulations through [`rect::rho`]; its fibers
//! are the ΘtB congruence classes of the weak order, with minimal elements
//! the twisted Baxter permutations ([`rect::DiagonalRectangulation::tau`])
//! and one Baxter permutation each ([`rect::DiagonalRectangulation::beta`]).
#![allow(clippy::needless_range_loop)]

pub mod congruence;
pub mod enumerate;
pub mod error;
pub mod hopf;
pub mod lattice;
pub mod perm;
pub mod rect;
pub mod render;
pub mod tree;
pub mod verify;

pub use congruence::{congruence_class, project_down, project_up, CongruenceKind};
pub use enumerate::baxter_number;
pub use error::{Error, Result};
pub use perm::{is_baxter, is_twisted_baxter, Permutation};
pub use rect::{rho, DiagonalRectangulation};
