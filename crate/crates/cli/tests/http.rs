use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use ptolemy_core::fixtures;
use ptolemy_core::mutation::replace;
use ptolemy_core::{DiagramDocument, MutationDirection};
use ptolemy_lab::service::{api, router};
use ptolemy_lab::{analyze, to_json};

async fn call(app: axum::Router, req: Request<Body>) -> (StatusCode, String) {
    let resp = app.oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, String::from_utf8(bytes.to_vec()).unwrap())
}

async fn post(path: &str, body: String) -> (StatusCode, String) {
    let req = Request::post(path)
        .header("content-type", "application/json")
        .body(Body::from(body))
        .unwrap();
    call(api(), req).await
}

async fn get(path: &str) -> (StatusCode, String) {
    call(api(), Request::get(path).body(Body::empty()).unwrap()).await
}

fn dodecagon_json() -> String {
    serde_json::to_string(&fixtures::dodecagon()).unwrap()
}

#[tokio::test]
async fn analyze_dodecagon() {
    let (status, body) = post("/api/analyze", dodecagon_json()).await;
    assert_eq!(status, StatusCode::OK);
    let report: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(report["ptolemy"], true);
    assert_eq!(report["dissecting"].as_array().unwrap().len(), 7);
    // same bytes as the CLI serializer
    assert_eq!(body, to_json(&analyze(&fixtures::dodecagon())));
}

#[tokio::test]
async fn analyze_rejects_bad_payloads() {
    for body in [
        "",
        "{",
        r#"{"polygon_size":6,"diagonals":[[0,1]]}"#,
        r#"{"polygon_size":2,"diagonals":[]}"#,
    ] {
        let (status, text) = post("/api/analyze", body.to_string()).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{body}");
        let err: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(err["error"], "PARSE_ERROR");
    }
    let (status, text) = post(
        "/api/analyze",
        r#"{"polygon_size":65,"diagonals":[]}"#.into(),
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(
        serde_json::from_str::<Value>(&text).unwrap()["error"],
        "SIZE_LIMIT"
    );
}

#[tokio::test]
async fn closure_returns_canonical_document() {
    let (status, body) = post(
        "/api/closure",
        r#"{"polygon_size":6,"diagonals":[[1,3],[0,2]]}"#.into(),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    let doc: DiagramDocument = serde_json::from_str(&body).unwrap();
    assert_eq!(doc.diagonals, vec![[0, 2], [0, 3], [1, 3]]);
}

#[tokio::test]
async fn mutate_dodecagon_both_branches() {
    let req =
        |doc: String| format!(r#"{{"document":{doc},"diagonal":[9,3],"direction":"backward"}}"#);
    let (status, body) = post("/api/mutate", req(dodecagon_json())).await;
    assert_eq!(status, StatusCode::OK);
    let report: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(report["extension_closed"], false);
    assert!(report["reason"]
        .as_str()
        .unwrap()
        .starts_with("clique cell with ≥ 4 vertices"));
    let expected = replace(
        &fixtures::dodecagon(),
        fixtures::dodecagon().polygon().diagonal(3, 9).unwrap(),
        MutationDirection::Backward,
    )
    .unwrap();
    assert_eq!(body, to_json(&expected));

    let emptied = serde_json::to_string(&fixtures::dodecagon_emptied()).unwrap();
    let (status, body) = post("/api/mutate", req(emptied)).await;
    assert_eq!(status, StatusCode::OK);
    let report: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(report["extension_closed"], true);
}

#[tokio::test]
async fn mutate_invalid_diagonal_names_witness() {
    let body = format!(
        r#"{{"document":{},"diagonal":[3,11],"direction":"forward"}}"#,
        dodecagon_json()
    );
    let (status, text) = post("/api/mutate", body).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let err: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(err["error"], "NOT_EXT_INJECTIVE");
    assert_eq!(err["witness"], json!([1, 9]));

    let body = format!(
        r#"{{"document":{},"diagonal":[3,11],"direction":"backward"}}"#,
        dodecagon_json()
    );
    let (status, text) = post("/api/mutate", body).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let err: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(err["error"], "NOT_EXT_PROJECTIVE");
    assert_eq!(err["witness"], json!([1, 9]));
}

#[tokio::test]
async fn mutate_rejects_malformed_requests() {
    let cases = [
        format!(
            r#"{{"document":{},"diagonal":[3,4],"direction":"backward"}}"#,
            dodecagon_json()
        ),
        format!(
            r#"{{"document":{},"diagonal":[3,9],"direction":"sideways"}}"#,
            dodecagon_json()
        ),
        format!(r#"{{"document":{},"diagonal":[3,9]}}"#, dodecagon_json()),
    ];
    for body in cases {
        let (status, text) = post("/api/mutate", body).await;
        assert_eq!(status, StatusCode::BAD_REQUEST);
        assert_eq!(
            serde_json::from_str::<Value>(&text).unwrap()["error"],
            "PARSE_ERROR"
        );
    }
    let bad = r#"{"document":{"polygon_size":6,"diagonals":[[0,2],[1,3]]},"diagonal":[0,2],"direction":"backward"}"#;
    let (status, text) = post("/api/mutate", bad.into()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(
        serde_json::from_str::<Value>(&text).unwrap()["error"],
        "NOT_PTOLEMY"
    );
}

#[tokio::test]
async fn quiver_endpoint() {
    let (status, body) = get("/api/quiver?size=6").await;
    assert_eq!(status, StatusCode::OK);
    let quiver: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(quiver["polygon_size"], 6);
    assert_eq!(quiver["nodes"].as_array().unwrap().len(), 9);

    for path in [
        "/api/quiver?size=3",
        "/api/quiver",
        "/api/quiver?size=x",
        "/api/quiver?size=100",
    ] {
        let (status, body) = get(path).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{path}");
        assert!(serde_json::from_str::<Value>(&body).unwrap()["error"].is_string());
    }
}

#[tokio::test]
async fn static_bundle_is_served() {
    let dir = tempfile::TempDir::new().unwrap();
    std::fs::write(dir.path().join("index.html"), "<html>explorer</html>").unwrap();
    let (status, body) = call(
        router(dir.path()),
        Request::get("/").body(Body::empty()).unwrap(),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert!(body.contains("explorer"));
    let (status, _) = call(
        router(dir.path()),
        Request::get("/missing.js").body(Body::empty()).unwrap(),
    )
    .await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn serve_binds_and_answers() {
    let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await.unwrap();
    let addr = listener.local_addr().unwrap();
    tokio::spawn(async move { axum::serve(listener, api()).await.unwrap() });
    let mut stream = tokio::net::TcpStream::connect(addr).await.unwrap();
    use tokio::io::{AsyncReadExt, AsyncWriteExt};
    stream
        .write_all(b"GET /api/quiver?size=5 HTTP/1.1\r\nHost: x\r\nConnection: close\r\n\r\n")
        .await
        .unwrap();
    let mut response = String::new();
    stream.read_to_string(&mut response).await.unwrap();
    assert!(response.starts_with("HTTP/1.1 200"));
    assert!(response.contains("\"polygon_size\":5"));
}
