//! The HTTP service, driven in-process.

use std::net::TcpListener;
use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use tower::ServiceExt;

use larch_cli::server::{router, AppState, DEFAULT_BODY_LIMIT};
use larch_core::generation::{GenerationConfig, RetryPolicy};
use larch_core::ranker::pretrained;
use larch_core::repo_model::{scan_repository, ScanLimits};

fn state(cfg: GenerationConfig) -> Arc<AppState> {
    Arc::new(AppState {
        model: pretrained(),
        generation: cfg,
        seed: 0,
    })
}

fn upload(name: Option<&str>) -> serde_json::Value {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/repos/larch");
    let snap = scan_repository(&root, &ScanLimits::default()).unwrap();
    let files: Vec<_> = snap
        .files()
        .iter()
        .map(|f| serde_json::json!({ "path": f.path(), "content": f.content() }))
        .collect();
    match name {
        Some(n) => serde_json::json!({ "project_name": n, "files": files }),
        None => serde_json::json!({ "files": files }),
    }
}

async fn call(app: axum::Router, method: &str, uri: &str, body: Vec<u8>) -> (StatusCode, serde_json::Value) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body))
        .unwrap();
    let resp = app.oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let json = serde_json::from_slice(&bytes).unwrap_or(serde_json::Value::Null);
    (status, json)
}

fn app() -> axum::Router {
    router(state(GenerationConfig::default()), DEFAULT_BODY_LIMIT)
}

#[tokio::test]
async fn health_reports_model_version() {
    let (status, body) = call(app(), "GET", "/health", vec![]).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, serde_json::json!({ "status": "ok", "model_version": 1 }));
}

#[tokio::test]
async fn identify_ranks_uploaded_files() {
    let (status, body) = call(app(), "POST", "/api/v1/identify", upload(None).to_string().into_bytes()).await;
    assert_eq!(status, StatusCode::OK);
    let c = body["candidates"].as_array().unwrap();
    assert_eq!(c.len(), 10);
    assert_eq!(c[0]["path"], "larch/cli.py");
}

#[tokio::test]
async fn generate_returns_readme() {
    let (status, body) = call(app(), "POST", "/api/v1/generate", upload(Some("larch")).to_string().into_bytes()).await;
    assert_eq!(status, StatusCode::OK, "{body}");
    assert_eq!(body["representative_path"], "larch/cli.py");
    assert!(body["readme"].as_str().unwrap().starts_with("# larch\n"));
    assert!(body["prompt_tokens"].as_u64().unwrap() <= 3000);
    assert_eq!(body["truncated"], false);
}

#[tokio::test]
async fn request_errors_carry_codes() {
    let cases: Vec<(Vec<u8>, StatusCode, &str)> = vec![
        (b"{not json".to_vec(), StatusCode::BAD_REQUEST, "BAD_REQUEST"),
        (br#"{"files": []}"#.to_vec(), StatusCode::BAD_REQUEST, "NO_FILES"),
        (
            br##"{"files": [{"path": "README.md", "content": "# hi"}]}"##.to_vec(),
            StatusCode::BAD_REQUEST,
            "NO_PYTHON_FILES",
        ),
        (
            br#"{"files": [{"path": "../escape.py", "content": "x = 1"}]}"#.to_vec(),
            StatusCode::BAD_REQUEST,
            "INVALID_FILES",
        ),
        (
            br#"{"files": [{"path": "a.py", "content": "x"}, {"path": "a.py", "content": "y"}]}"#.to_vec(),
            StatusCode::BAD_REQUEST,
            "INVALID_FILES",
        ),
    ];
    for uri in ["/api/v1/identify", "/api/v1/generate"] {
        for (body, status, code) in &cases {
            let (got, json) = call(app(), "POST", uri, body.clone()).await;
            assert_eq!(got, *status, "{uri} {}", String::from_utf8_lossy(body));
            assert_eq!(json["code"], *code, "{uri} {json}");
            assert!(json["error"].as_str().is_some_and(|e| !e.is_empty()));
        }
    }
}

#[tokio::test]
async fn oversized_body_is_rejected() {
    let small = router(state(GenerationConfig::default()), 1024);
    let (status, _) = call(small, "POST", "/api/v1/identify", upload(None).to_string().into_bytes()).await;
    assert_eq!(status, StatusCode::PAYLOAD_TOO_LARGE);
}

#[tokio::test]
async fn backend_failure_is_bad_gateway() {
    let port = TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port();
    let cfg = GenerationConfig {
        endpoint_url: format!("http://127.0.0.1:{port}/v1/completions"),
        api_key: Some("sk-secret-value".into()),
        retry: RetryPolicy { attempts: 1, backoff_ms: 0 },
        ..GenerationConfig::default()
    };
    let app = router(state(cfg), DEFAULT_BODY_LIMIT);
    let (status, body) = call(app, "POST", "/api/v1/generate", upload(None).to_string().into_bytes()).await;
    assert_eq!(status, StatusCode::BAD_GATEWAY);
    assert_eq!(body["code"], "BACKEND_ERROR");
    assert!(!body.to_string().contains("sk-secret-value"));
}
