//! Exact computations with symbolic powers of square-free monomial ideals.
//!
//! The crate covers monomial ideal arithmetic, minimal primes via minimal
//! vertex covers, symbolic and differential powers, the König and packing
//! properties of clutters, edge ideals of graphs and their odd-cycle
//! thresholds, the Stanley–Reisner correspondence, and exact asymptotic
//! invariants (Waldschmidt constant, resurgence bounds).

pub mod asymptotics;
pub mod clutter;
pub mod decomposition;
pub mod edge_ideals;
mod error;
pub mod hunt;
pub mod io;
mod limits;
pub mod lp;
pub mod monomial;
pub mod random;
pub mod stanley_reisner;
pub mod symbolic;

pub use asymptotics::ExactRational;
pub use decomposition::{Clutter, VertexSet};
pub use edge_ideals::Graph;
pub use error::{Error, Result};
pub use limits::Limits;
pub use monomial::{Monomial, MonomialIdeal};
pub use stanley_reisner::SimplicialComplex;
pub use symbolic::SymbolicIdeal;
