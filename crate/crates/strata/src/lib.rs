//! Exact commutative algebra over `Q[t_1, ..., t_d]`: Groebner bases and
//! ideal arithmetic, certified prime ideals with height/coheight
//! bookkeeping, torsion radicals for specialization-closed subsets of the
//! spectrum, CRT decomposition of cyclic modules, and chain searches along
//! shift-automorphism relations.
//!
//! Coefficients are exact rationals throughout; every boolean question
//! (membership, comaximality, radical membership, dimension) is decided
//! from reduced Groebner bases and is therefore stable under extension of
//! the base field.

pub mod error;
pub mod hc;
pub mod ideal;
pub mod poly;
pub mod session;
pub mod spectrum;
pub mod torsion;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use poly::{parse_poly, Monomial, MonomialOrder, Poly, PolyRing};
pub use spectrum::{Certificate, PrimeIdeal, SpecSubset};
pub use torsion::{CyclicModule, SubquotientHandle};
