//! Exact verification of Tverberg partition counts and their signed index.
//!
//! Given a configuration of `(q-1)(d+1)+1` points in affine d-space, this
//! crate enumerates all partitions into `q` nonempty parts, decides by exact
//! rational linear programming which partitions have intersecting convex
//! hulls, attaches to each such partition a sign computed from a pair of
//! cyclotomic determinants, and checks two facts:
//!
//! * the number of Tverberg partitions is at least `((q-1)!)^d`, and
//! * their signed count equals `((q-1)!)^d` exactly.
//!
//! All geometry is done over arbitrary-precision rationals and all signs over
//! the group ring of the q-th roots of unity, so every verdict is exact.
//!
//! The crate is `no_std` (with `alloc`); file formats, CLI, and parallel
//! drivers live in the companion `tverberg-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod exactnum;
pub mod geometry;
pub mod index;
pub mod intersect;
pub mod partitions;

pub use exactnum::{Cyclotomic, Rational};
pub use geometry::{GenericityVerdict, Parameters, PointConfig};
pub use index::{IndexReport, SignEvaluation, TverbergEntry};
pub use intersect::Witness;
pub use partitions::{Labeling, OrderedPartition, UnorderedPartition};
