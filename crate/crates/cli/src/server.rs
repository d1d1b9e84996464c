//! HTTP service: `/health`, `/api/v1/identify` and `/api/v1/generate`.

use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{DefaultBodyLimit, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};

use larch_core::generation::{backend_for, GenerationConfig, GenerationError};
use larch_core::pipeline::{self, PipelineError, Selector};
use larch_core::ranker::{RankedFile, RankerError};
use larch_core::repo_model::{RepoSnapshot, SourceFile};
use larch_core::RankModel;

pub const DEFAULT_BODY_LIMIT: usize = 64 * 1024 * 1024;

pub struct AppState {
    pub model: RankModel,
    pub generation: GenerationConfig,
    pub seed: u64,
}

#[derive(Debug, Deserialize)]
pub struct UploadFile {
    pub path: String,
    pub content: String,
}

#[derive(Debug, Deserialize)]
pub struct UploadRequest {
    #[serde(default)]
    pub project_name: Option<String>,
    pub files: Vec<UploadFile>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IdentifyResponse {
    pub candidates: Vec<RankedFile>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GenerateResponse {
    pub readme: String,
    pub representative_path: String,
    pub prompt_tokens: usize,
    pub truncated: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
    pub code: String,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> Self {
        ApiError {
            status,
            code,
            message: message.into(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody {
            error: self.message,
            code: self.code.to_string(),
        };
        (self.status, Json(body)).into_response()
    }
}

impl From<PipelineError> for ApiError {
    fn from(e: PipelineError) -> Self {
        let msg = e.to_string();
        match e {
            PipelineError::Ranker(RankerError::NoPythonFiles) => {
                ApiError::new(StatusCode::BAD_REQUEST, "NO_PYTHON_FILES", msg)
            }
            PipelineError::Repo(_) => ApiError::new(StatusCode::BAD_REQUEST, "INVALID_FILES", msg),
            PipelineError::Generation(
                GenerationError::BackendUnreachable(_)
                | GenerationError::BackendRejected { .. }
                | GenerationError::EmptyCompletion,
            ) => ApiError::new(StatusCode::BAD_GATEWAY, "BACKEND_ERROR", msg),
            PipelineError::Generation(GenerationError::EmptyCode(_)) => {
                ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "EMPTY_REPRESENTATIVE", msg)
            }
            _ => ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "INTERNAL", msg),
        }
    }
}

fn parse_upload(body: &[u8]) -> Result<(Option<String>, RepoSnapshot), ApiError> {
    let req: UploadRequest = serde_json::from_slice(body)
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "BAD_REQUEST", format!("invalid request body: {e}")))?;
    if req.files.is_empty() {
        return Err(ApiError::new(StatusCode::BAD_REQUEST, "NO_FILES", "request contains no files"));
    }
    let files = req
        .files
        .into_iter()
        .map(|f| SourceFile::new(f.path, f.content))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "INVALID_FILES", e.to_string()))?;
    let name = req.project_name.filter(|n| !n.trim().is_empty());
    let snapshot = RepoSnapshot::new(name.clone(), files)
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "INVALID_FILES", e.to_string()))?;
    Ok((name, snapshot))
}

async fn blocking<T: Send + 'static>(f: impl FnOnce() -> Result<T, ApiError> + Send + 'static) -> Result<T, ApiError> {
    tokio::task::spawn_blocking(f)
        .await
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "INTERNAL", e.to_string()))?
}

async fn health(State(state): State<Arc<AppState>>) -> Json<serde_json::Value> {
    Json(serde_json::json!({ "status": "ok", "model_version": state.model.version }))
}

async fn identify(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Json<IdentifyResponse>, ApiError> {
    blocking(move || {
        let (_, snapshot) = parse_upload(&body)?;
        let candidates = pipeline::identify(&state.model, &snapshot)?;
        Ok(Json(IdentifyResponse { candidates }))
    })
    .await
}

async fn generate(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Json<GenerateResponse>, ApiError> {
    blocking(move || {
        let (name, snapshot) = parse_upload(&body)?;
        let backend = backend_for(&state.generation).map_err(PipelineError::from)?;
        let out = pipeline::generate(
            &state.model,
            &snapshot,
            name.as_deref(),
            Selector::Representative,
            state.seed,
            &state.generation,
            backend.as_ref(),
        )?;
        Ok(Json(GenerateResponse {
            readme: out.completion.readme_text,
            representative_path: out.representative_path,
            prompt_tokens: out.prompt.token_estimate,
            truncated: out.prompt.truncated,
        }))
    })
    .await
}

pub fn router(state: Arc<AppState>, max_body_bytes: usize) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/api/v1/identify", post(identify))
        .route("/api/v1/generate", post(generate))
        .layer(DefaultBodyLimit::max(max_body_bytes))
        .with_state(state)
}
