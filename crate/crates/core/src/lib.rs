//! Exact combinatorial machinery for planar open books with page a holed
//! sphere: mapping classes of the 4-holed sphere, Dehn twist factorizations,
//! Hurwitz equivalence with replayable certificates, PSL(2,Z) word
//! decomposition, and the integer homology engine for the associated
//! Lefschetz fibration handle decompositions.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable and all
//! operations are pure, so everything is safe to use from any thread.

#![no_std]

extern crate alloc;

pub mod curve;
pub mod error;
pub mod factor;
pub mod kirby;
pub mod mcg;
pub mod psl2;
pub mod snf;
pub mod word;

pub use error::Error;
