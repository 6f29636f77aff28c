//! Exact-arithmetic combinatorics of split reductive groups: root data and
//! Langlands duals, the Iwahori–Weyl group and Schubert strata on (Witt
//! vector) affine flag varieties, Kostka–Foulkes polynomials, the spherical
//! Hecke ring with its Satake transform, and the Grothendieck ring of the
//! Satake category with trace-of-Frobenius down to the Hecke ring.
//!
//! Everything is computed over the integers (no floats, no numeric square
//! roots); the square root of the residue cardinality `q` is the formal
//! variable `v` with `q = v^2`.

pub mod affine_weyl;
pub mod dual_group;
pub mod error;
pub mod flag_strata;
pub mod hecke;
pub mod k0;
pub mod linalg;
pub mod poly;
pub mod q_analog;
pub mod ratio;
pub mod rep_ring;
pub mod root_datum;
pub mod verify;

pub use error::{Error, Result};
pub use poly::Laurent;
pub use ratio::Rat;
pub use root_datum::{BasedRootDatum, Coweight, Weight, WeylElement};

/// Integer scalar used throughout; desk-scale data never approaches overflow.
pub type Int = i64;
