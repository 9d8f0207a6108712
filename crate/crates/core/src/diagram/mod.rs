//! Finite-window wiring diagrams: the semigroup generated by permutations,
//! the markers `A_i`, loops `C_k` and projections `P_n`, modulo `C_1 = 1`.

mod relations;
mod wiring;

pub use relations::{
    verify_relations, verify_relations_with, RelationFailure, RelationReport, RELATIONS_MAX_WINDOW,
};
pub use wiring::{Point, Side, WiringDiagram};
