use thiserror::Error;

use crate::polygon::{Diagonal, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a polygon needs at least 4 vertices, got {0}")]
    PolygonTooSmall(usize),

    #[error("{{{u},{v}}} is not a diagonal of the {size}-gon")]
    NotADiagonal { u: Vertex, v: Vertex, size: usize },

    #[error("{{{u},{v}}} is not an arc of the {size}-gon")]
    NotAnArc { u: Vertex, v: Vertex, size: usize },

    #[error("malformed diagram document: {0}")]
    Parse(String),

    #[error("the diagram is not a Ptolemy diagram: {a} and {b} cross but {missing} is missing")]
    NotPtolemy {
        a: Diagonal,
        b: Diagonal,
        missing: Diagonal,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("{a} and {c} do not cross")]
    NotCrossing { a: Diagonal, c: Diagonal },

    #[error("{diagonal} is not a member of the diagram")]
    NotAMember { diagonal: Diagonal },

    #[error("{diagonal} is not Ext-projective: {witness} crosses it")]
    NotExtProjective {
        diagonal: Diagonal,
        witness: Diagonal,
    },

    #[error("{diagonal} is not Ext-injective: {witness} crosses it")]
    NotExtInjective {
        diagonal: Diagonal,
        witness: Diagonal,
    },

    #[error("polygon size {size} is outside the supported range 4..={max}")]
    SizeLimit { size: usize, max: usize },
}

impl Error {
    /// Stable machine-readable code used by the CLI and the HTTP service.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_)
            | Error::PolygonTooSmall(_)
            | Error::NotADiagonal { .. }
            | Error::NotAnArc { .. } => "PARSE_ERROR",
            Error::NotPtolemy { .. } => "NOT_PTOLEMY",
            Error::PreconditionViolation(_) => "PRECONDITION_VIOLATION",
            Error::NotCrossing { .. } => "NOT_CROSSING",
            // a non-member is in particular not Ext-projective in the diagram
            Error::NotAMember { .. } => "NOT_EXT_PROJECTIVE",
            Error::NotExtProjective { .. } => "NOT_EXT_PROJECTIVE",
            Error::NotExtInjective { .. } => "NOT_EXT_INJECTIVE",
            Error::SizeLimit { .. } => "SIZE_LIMIT",
        }
    }

    /// A diagonal of the diagram that witnesses the failure, if any.
    pub fn witness(&self) -> Option<Diagonal> {
        match self {
            Error::NotExtProjective { witness, .. } | Error::NotExtInjective { witness, .. } => {
                Some(*witness)
            }
            _ => None,
        }
    }
}
