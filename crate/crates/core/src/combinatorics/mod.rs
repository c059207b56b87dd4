//! Graphs, digraphs, permutations, partitions and compositions, acyclic
//! orientations, and the small closed-form polynomials built from them.

mod digraph;
mod family;
mod gadgets;
mod orientation;
mod partition;
mod permutation;
mod recognize;

pub use digraph::{Digraph, DigraphJson, Graph, MAX_VERTICES};
pub use family::{family_generator, FamilyKind};
pub use gadgets::{eulerian_polynomial, factorial, z_lambda};
pub use orientation::{acyclic_orientations, OrientationRecord, MAX_ORIENTATION_EDGES};
pub use partition::{compositions, partitions, Composition, Partition};
pub use permutation::{next_permutation, Permutation, Permutations};
pub use recognize::{is_proper_circular_arc, is_unit_interval_digraph, CircularArcCheck, Obstruction};
