//! The JSON encoding shared by the CLI and the HTTP service.

use serde::Serialize;

use ptolemy_core::{Diagonal, Error, Polygon, Vertex};

/// Compact JSON followed by a newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("reports serialize infallibly");
    out.push('\n');
    out
}

/// Machine-readable error body: `{"error": CODE, "message": ..., "witness": [u, v]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorBody {
    pub error: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Diagonal>,
}

impl From<&Error> for ErrorBody {
    fn from(e: &Error) -> Self {
        ErrorBody {
            error: e.code(),
            message: e.to_string(),
            witness: e.witness(),
        }
    }
}

/// Parses `u,v` into a diagonal of `polygon`.
pub fn parse_diagonal(polygon: &Polygon, text: &str) -> Result<Diagonal, Error> {
    let (u, v) = text
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected `u,v`, got `{text}`")))?;
    let vertex = |s: &str| {
        s.trim()
            .parse::<Vertex>()
            .map_err(|_| Error::Parse(format!("`{s}` is not a vertex index")))
    };
    polygon.diagonal(vertex(u)?, vertex(v)?)
}
