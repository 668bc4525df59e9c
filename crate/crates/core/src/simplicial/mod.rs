//! Finite simplicial complexes whose simplices carry their own identity, so
//! that two distinct simplices of positive dimension may share a vertex set.
//! Finite group actions on them, quotients, and the orbit-counting identity
//! relating the Euler characteristics of a complex and its quotient.

mod action;
mod complex;
mod dump;
mod quotient;
pub mod random;

pub use action::{validate_action, Action, ActionReport, GeneratorSpec, Offender, OffenseKind};
pub use complex::{
    build_complex, euler_characteristic, generalized_degree, Complex, ComplexSpec, SimplexId,
    SimplexRef, SimplexSpec, VertexId, VertexSpec,
};
pub use dump::{parse_dump, to_dump, DUMP_HEADER};
pub use quotient::{
    quotient, quotient_euler_check, OrbitInfo, QuotientEulerReport, QuotientResult,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimplicialError {
    #[error("{dim}-simplex {id} has face {face:?} with no matching simplex")]
    ClosureViolation { dim: usize, id: u64, face: Vec<u64> },
    #[error("simplex {id} repeats vertex {vertex}")]
    DuplicateVertexInSimplex { id: u64, vertex: u64 },
    #[error("simplex {id} refers to unknown vertex {vertex}")]
    UnknownVertex { id: u64, vertex: u64 },
    #[error("duplicate id {id} in dimension {dim}")]
    DuplicateId { dim: usize, id: u64 },
    #[error("simplex {id} has no vertices")]
    EmptySimplex { id: u64 },
    #[error("no {dim}-simplex with id {id}")]
    UnknownSimplex { dim: usize, id: u64 },
    #[error("inconsistent action: {0}")]
    InconsistentAction(String),
    #[error("generated group exceeds {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("an element fixes a simplex without fixing its vertices")]
    StarViolation,
    #[error("a simplex has two vertices in one orbit")]
    NotAdmissible,
    #[error("dump line {line}: {message}")]
    Parse { line: usize, message: String },
}
