//! Plane bicolored trees as pairs of edge permutations: enumeration up to
//! isotopy, Galois-invariant data (automorphisms, rotation groups, reductions,
//! power lifts), exact Shabat polynomial verification, and regeneration of the
//! reference catalog of ten-edge trees.
//!
//! The crate is `no_std` + `alloc`; IO, JSON and the command line live in the
//! companion `dessin-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod enumerate;
pub mod group;
pub mod invariants;
pub mod perm;
pub mod poly;
pub mod tree;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

pub use enumerate::{enumerate_trees, goulden_jackson, weighted_sum, TypeBucket};
pub use invariants::{invariant_vector, power_bases, power_lift, reductions, InvariantVector};
pub use perm::Perm;
pub use poly::{parse_poly, verify_shabat, RatPoly, ShabatCertificate};
pub use tree::{CanonicalKey, Passport, PlaneTree, TreeError};
