//! Exact computations around quotients of the Bruhat–Tits building of
//! `PGL_n` over `F_q((1/T))` by unit groups of maximal orders in division
//! algebras over `F_q(T)`.
//!
//! - [`exactnum`]: big integers, rationals, polynomials and rational
//!   functions in a formal `q`.
//! - [`qcombinatorics`]: q-brackets, Gaussian multinomials, vertex degrees
//!   of the building, and brute-force subspace and flag counts.
//! - [`simplicial`]: simplicial complexes with parallel simplices, finite
//!   group actions and their quotients.
//! - [`building`]: lattice classes, neighbors, flags and balls in the
//!   building over `F_p((π))`.
//! - [`arithmetic`]: ramification data, embedding numbers, volumes, Euler
//!   characteristics and simplex counts of the quotient.
//! - [`cli`]: the `btquot` command line.
//!
//! The `examples/` directory has one runnable program per area.

pub mod arithmetic;
pub mod building;
pub mod cli;
pub mod exactnum;
pub mod fqspace;
pub mod qcombinatorics;
pub mod simplicial;
