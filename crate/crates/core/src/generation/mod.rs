//! Prompt assembly and readme generation through a completion backend.

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod backend;
mod prompt;

pub use backend::{backend_for, Backend, Completion, HttpBackend, StubBackend, Usage};
pub use prompt::{
    build_prompt, build_prompt_with, estimate_tokens, header_line, sample_file_names, CharEstimator, Prompt,
    TokenEstimator, FILES_HEADER, INSTRUCTION, MAX_LISTED_FILES,
};

pub const STUB_ENDPOINT: &str = "stub:";

#[derive(Debug, Error)]
pub enum GenerationError {
    #[error("representative file {0} is empty")]
    EmptyCode(String),
    #[error("prompt scaffold needs {scaffold} tokens but the budget is {budget}")]
    BudgetTooSmall { scaffold: usize, budget: usize },
    #[error("invalid generation config: {0}")]
    InvalidConfig(String),
    #[error("backend unreachable: {0}")]
    BackendUnreachable(String),
    #[error("backend rejected the request with status {status}: {body}")]
    BackendRejected { status: u16, body: String },
    #[error("backend returned an empty completion")]
    EmptyCompletion,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetryPolicy {
    pub attempts: u32,
    /// Delay before the second attempt; doubles after each further failure.
    pub backoff_ms: u64,
}

impl Default for RetryPolicy {
    fn default() -> Self {
        RetryPolicy {
            attempts: 3,
            backoff_ms: 500,
        }
    }
}

impl RetryPolicy {
    /// Delay after failed attempt `n` (1-based).
    pub fn delay(&self, n: u32) -> Duration {
        Duration::from_millis(self.backoff_ms.saturating_mul(1u64 << (n - 1).min(16)))
    }
}

#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationConfig {
    pub endpoint_url: String,
    pub model_name: String,
    #[serde(skip)]
    pub api_key: Option<String>,
    pub max_prompt_tokens: usize,
    pub max_gen_tokens: usize,
    pub temperature: f64,
    pub request_timeout_seconds: u64,
    pub retry: RetryPolicy,
}

impl Default for GenerationConfig {
    fn default() -> Self {
        GenerationConfig {
            endpoint_url: STUB_ENDPOINT.to_string(),
            model_name: "gpt-3.5-turbo-instruct".to_string(),
            api_key: None,
            max_prompt_tokens: 3000,
            max_gen_tokens: 910,
            temperature: 0.2,
            request_timeout_seconds: 60,
            retry: RetryPolicy::default(),
        }
    }
}

impl fmt::Debug for GenerationConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GenerationConfig")
            .field("endpoint_url", &self.endpoint_url)
            .field("model_name", &self.model_name)
            .field("api_key", &self.api_key.as_ref().map(|_| "<redacted>"))
            .field("max_prompt_tokens", &self.max_prompt_tokens)
            .field("max_gen_tokens", &self.max_gen_tokens)
            .field("temperature", &self.temperature)
            .field("request_timeout_seconds", &self.request_timeout_seconds)
            .field("retry", &self.retry)
            .finish()
    }
}

impl GenerationConfig {
    pub fn is_stub(&self) -> bool {
        self.endpoint_url.trim() == STUB_ENDPOINT
    }

    pub fn validate(&self) -> Result<(), GenerationError> {
        if self.max_prompt_tokens == 0 || self.max_gen_tokens == 0 {
            return Err(GenerationError::InvalidConfig("token budgets must be positive".into()));
        }
        if !(self.temperature >= 0.0 && self.temperature.is_finite()) {
            return Err(GenerationError::InvalidConfig("temperature must be a finite value >= 0".into()));
        }
        Ok(())
    }
}

/// Asks the backend for a readme and trims the result.
pub fn generate_readme(
    prompt: &Prompt,
    cfg: &GenerationConfig,
    backend: &dyn Backend,
) -> Result<Completion, GenerationError> {
    cfg.validate()?;
    let mut completion = backend.complete(prompt, cfg)?;
    let trimmed = completion.readme_text.trim();
    if trimmed.is_empty() {
        return Err(GenerationError::EmptyCompletion);
    }
    completion.readme_text = trimmed.to_string();
    Ok(completion)
}
