//! Stateless HTTP service: every request carries the whole diagram.

use std::path::PathBuf;

use axum::extract::rejection::QueryRejection;
use axum::extract::Query;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::{Deserialize, Serialize};
use tower_http::services::ServeDir;

use ptolemy_core::hom::ar_quiver;
use ptolemy_core::mutation::replace;
use ptolemy_core::ptolemy::ptolemy_closure;
use ptolemy_core::{Diagram, DiagramDocument, Error, MutationDirection, Polygon, Vertex};

use crate::analysis::analyze;
use crate::wire::{to_json, ErrorBody};

/// Largest polygon accepted by the service, keeping every request cheap.
pub const MAX_POLYGON_SIZE: usize = 64;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MutateRequest {
    pub document: DiagramDocument,
    pub diagonal: [Vertex; 2],
    pub direction: MutationDirection,
}

#[derive(Debug, Deserialize)]
struct QuiverQuery {
    size: usize,
}

fn json_response(status: StatusCode, body: String) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn ok<T: Serialize>(value: &T) -> Response {
    json_response(StatusCode::OK, to_json(value))
}

fn bad_request(error: &Error) -> Response {
    json_response(StatusCode::BAD_REQUEST, to_json(&ErrorBody::from(error)))
}

fn check_size(size: usize) -> Result<Polygon, Error> {
    if size > MAX_POLYGON_SIZE {
        return Err(Error::SizeLimit {
            size,
            max: MAX_POLYGON_SIZE,
        });
    }
    Polygon::new(size)
}

fn parse_body<T: for<'de> Deserialize<'de>>(body: &str) -> Result<T, Error> {
    serde_json::from_str(body).map_err(|e| Error::Parse(e.to_string()))
}

fn document(doc: &DiagramDocument) -> Result<Diagram, Error> {
    check_size(doc.polygon_size)?;
    doc.to_diagram()
}

fn respond<T: Serialize>(result: Result<T, Error>) -> Response {
    match result {
        Ok(value) => ok(&value),
        Err(e) => bad_request(&e),
    }
}

async fn analyze_handler(body: String) -> Response {
    respond(
        parse_body(&body)
            .and_then(|doc| document(&doc))
            .map(|d| analyze(&d)),
    )
}

async fn closure_handler(body: String) -> Response {
    respond(
        parse_body(&body)
            .and_then(|doc| document(&doc))
            .map(|d| DiagramDocument::from_diagram(&ptolemy_closure(&d))),
    )
}

async fn mutate_handler(body: String) -> Response {
    respond(parse_body::<MutateRequest>(&body).and_then(|req| {
        let diagram = document(&req.document)?;
        let [u, v] = req.diagonal;
        let d = diagram.polygon().diagonal(u, v)?;
        replace(&diagram, d, req.direction)
    }))
}

async fn quiver_handler(query: Result<Query<QuiverQuery>, QueryRejection>) -> Response {
    respond(
        query
            .map_err(|e| Error::Parse(e.body_text()))
            .and_then(|Query(q)| check_size(q.size))
            .map(|p| ar_quiver(&p)),
    )
}

/// The API routes, with `static_dir` served for every other path.
pub fn router(static_dir: impl Into<PathBuf>) -> Router {
    api().fallback_service(ServeDir::new(static_dir.into()))
}

/// The API routes alone.
pub fn api() -> Router {
    Router::new()
        .route("/api/analyze", post(analyze_handler))
        .route("/api/closure", post(closure_handler))
        .route("/api/mutate", post(mutate_handler))
        .route("/api/quiver", get(quiver_handler))
}

pub async fn serve(port: u16, static_dir: PathBuf) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    axum::serve(listener, router(static_dir)).await
}
