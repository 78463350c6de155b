//! Reeder's puzzle on Dynkin-type diagrams.
//!
//! A labeling assigns 0 or 1 to every vertex of a diagram. The move at a
//! vertex adds the labels of its neighbors to its own label mod 2, where a
//! longer vertex ignores a shorter neighbor across an even multiple edge.
//! This crate enumerates the equivalence classes generated by the moves,
//! builds the classical families of diagrams together with their class
//! counts and representatives, predicts classes for trees containing E6
//! and for flower diagrams, and checks the duality with the lit-only
//! sigma game.

pub mod classifiers;
pub mod corpus;
pub mod diagram;
pub mod dsl;
pub mod error;
pub mod f2;
pub mod families;
pub mod labeling;
pub mod moves;
pub mod partition;
pub mod sigma;

pub use diagram::{Diagram, DiagramBuilder, Edge};
pub use error::{Error, Result};
pub use f2::F2Matrix;
pub use labeling::Labeling;
pub use moves::{apply_move, apply_sequence, move_matrix, MoveOperator};
pub use partition::{
    count_classes, enumerate_classes, enumerate_classes_with_cap, ClassPartition, ClassSummary,
    DEFAULT_CAP,
};
