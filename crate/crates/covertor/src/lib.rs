//! Exact computation of the order of the first homology group of finite
//! abelian coverings of a homology 3-sphere branched along a link.
//!
//! The main entry point is [`engine::branched_order`], which evaluates the
//! Alexander polynomials of all character-support sublinks at roots of unity
//! and assembles the order as a certified integer. An independent
//! group-theoretic oracle ([`oracle`]) recomputes the same order by
//! Reidemeister-Schreier rewriting and Smith normal form, and the
//! [`torsion`] module carries the Reidemeister torsion machinery for based
//! chain complexes that the formula rests on.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals, and
//! power-basis cyclotomic numbers. Floating point is never used.
//!
//! Values are immutable after construction and all operations are pure, so
//! callers are free to evaluate independent characters or oracle runs in
//! parallel.

pub mod abelian;
pub mod algebra;
pub mod engine;
pub mod error;
pub mod link;
pub mod oracle;
pub mod torsion;

pub use error::Error;
