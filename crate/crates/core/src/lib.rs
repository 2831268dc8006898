//! Exact Kostka-Foulkes and parabolic Kostka polynomials computed by several
//! independent methods: charge on tableaux, fermionic sums over
//! configurations, alternating sums of q-Kostant partition functions and
//! Hall-Littlewood expansions, together with Kronecker products,
//! generalized exponents and lattice-point counts of Gelfand-Tsetlin
//! polytopes.

pub mod error;
pub mod fermionic;
pub mod kostant;
pub mod partition;
pub mod polytopes;
pub mod qpoly;
pub mod repth;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use partition::{partitions, Composition, Partition, Rect, RectSequence};
pub use qpoly::QPoly;
