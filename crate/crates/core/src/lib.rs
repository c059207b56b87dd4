//! Exact computation of chromatic quasisymmetric functions of directed
//! graphs.
//!
//! For a digraph on `1..=n` the function `X(x, t)` sums
//! `t^{asc(κ)} x_{κ(1)} ... x_{κ(n)}` over proper colorings `κ`, where an
//! ascent is an arc whose head gets the larger color. The crate computes it
//!
//! - directly from colorings ([`cqsf::chromatic_qsym_direct`]),
//! - from permutations and graph descents in the fundamental basis
//!   ([`cqsf::chromatic_qsym_via_f`]),
//! - in the power sum basis from the sets `N_{G,λ}`
//!   ([`cqsf::p_expansion_via_n`]),
//! - and, for directed cycles, from a generating function in the
//!   elementary basis ([`cycle_series`]).
//!
//! All arithmetic is over the rationals; nothing is approximated.

pub mod combinatorics;
pub mod cqsf;
pub mod cycle_series;
pub mod error;
pub mod qsym;
pub mod tpoly;
pub mod verify;

pub use combinatorics::{Digraph, Graph, Partition, Permutation};
pub use error::{Error, Result};
pub use qsym::{Basis, Function, QSymT, SymT};
pub use tpoly::TPoly;
