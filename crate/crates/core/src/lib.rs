//! The minimal Euclidean function on the Gaussian integers.
//!
//! [`bset::phi`] evaluates it in closed form through the digit sets `B_n`.
//! [`motzkin`] rebuilds the same sets from coset coverage alone.
//! [`bset::expand_min`] finds shortest base-`(1+i)` expansions by search.
//! [`euclid`] turns the function into a division algorithm.

pub mod bset;
pub mod cli;
pub mod error;
pub mod euclid;
pub mod gaussint;
pub mod motzkin;
pub mod render;
pub mod wseq;

pub use bset::{b_member, enumerate_b, eval_expansion, expand_min, phi, phi_int, Digit, Expansion};
pub use error::{Error, Result};
pub use euclid::{
    div_min, div_norm, euclidean_property_check, gcd_chain, ChainReport, DivResult, MinPhiDivider, Strategy,
};
pub use gaussint::{GaussInt, Unit};
pub use motzkin::{
    covers, int_levels_up_to, levels_up_to, next_level, residue_key, residue_system, CosetIndex, MotzkinLevel,
    ResidueKey,
};
pub use wseq::{oct_contains, oct_spec, w, OctSpec};
