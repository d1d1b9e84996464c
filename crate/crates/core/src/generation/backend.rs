use std::sync::OnceLock;
use std::thread;
use std::time::Duration;

use regex::Regex;
use serde::{Deserialize, Serialize};

use super::prompt::Prompt;
use super::{GenerationConfig, GenerationError};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Usage {
    pub prompt_tokens: Option<u64>,
    pub completion_tokens: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Completion {
    pub readme_text: String,
    pub usage: Usage,
    /// Requests made, retries included.
    pub attempts: u32,
}

pub trait Backend: Send + Sync {
    fn complete(&self, prompt: &Prompt, cfg: &GenerationConfig) -> Result<Completion, GenerationError>;
}

/// Offline backend producing a fixed markdown skeleton from the prompt.
#[derive(Debug, Clone, Copy, Default)]
pub struct StubBackend;

fn first_function(code: &str) -> Option<&str> {
    static DEF: OnceLock<Regex> = OnceLock::new();
    let def = DEF.get_or_init(|| Regex::new(r"(?m)^\s*(?:async\s+)?def\s+([A-Za-z_]\w*)").unwrap());
    def.captures(code).map(|c| c.get(1).unwrap().as_str())
}

impl Backend for StubBackend {
    fn complete(&self, prompt: &Prompt, _cfg: &GenerationConfig) -> Result<Completion, GenerationError> {
        let name = prompt.project_name.as_deref().unwrap_or("project");
        let mut out = format!("# {name}\n\n");
        out.push_str("Generated overview of the project entry point.\n\n## Usage\n\n");
        match first_function(&prompt.code) {
            Some(f) => out.push_str(&format!("Start with `{f}()`.\n")),
            None => out.push_str("Run the entry point script directly.\n"),
        }
        if !prompt.included_file_names.is_empty() {
            out.push_str("\n## Files\n\n");
            for f in &prompt.included_file_names {
                out.push_str(&format!("- `{f}`\n"));
            }
        }
        Ok(Completion {
            readme_text: out,
            usage: Usage::default(),
            attempts: 1,
        })
    }
}

/// Client of an OpenAI-compatible completions endpoint.
pub struct HttpBackend {
    client: reqwest::blocking::Client,
}

impl HttpBackend {
    pub fn new(cfg: &GenerationConfig) -> Result<Self, GenerationError> {
        let client = reqwest::blocking::Client::builder()
            .timeout(Duration::from_secs(cfg.request_timeout_seconds))
            .build()
            .map_err(|e| GenerationError::BackendUnreachable(e.to_string()))?;
        Ok(HttpBackend { client })
    }
}

#[derive(Serialize)]
struct CompletionRequest<'a> {
    model: &'a str,
    prompt: &'a str,
    max_tokens: usize,
    temperature: f64,
}

#[derive(Deserialize)]
struct CompletionResponse {
    #[serde(default)]
    choices: Vec<Choice>,
    #[serde(default)]
    usage: Option<Usage>,
}

#[derive(Deserialize)]
struct Choice {
    #[serde(default)]
    text: Option<String>,
}

enum Failure {
    Retryable(GenerationError),
    Fatal(GenerationError),
}

impl HttpBackend {
    fn attempt(&self, prompt: &Prompt, cfg: &GenerationConfig) -> Result<(String, Usage), Failure> {
        let body = CompletionRequest {
            model: &cfg.model_name,
            prompt: &prompt.text,
            max_tokens: cfg.max_gen_tokens,
            temperature: cfg.temperature,
        };
        let mut req = self.client.post(&cfg.endpoint_url).json(&body);
        if let Some(key) = &cfg.api_key {
            req = req.bearer_auth(key);
        }
        let resp = req
            .send()
            .map_err(|e| Failure::Retryable(GenerationError::BackendUnreachable(e.without_url().to_string())))?;
        let status = resp.status();
        let text = resp
            .text()
            .map_err(|e| Failure::Retryable(GenerationError::BackendUnreachable(e.without_url().to_string())))?;
        if !status.is_success() {
            let err = GenerationError::BackendRejected {
                status: status.as_u16(),
                body: text,
            };
            return Err(if status.as_u16() == 429 || status.is_server_error() {
                Failure::Retryable(err)
            } else {
                Failure::Fatal(err)
            });
        }
        let parsed: CompletionResponse = serde_json::from_str(&text).map_err(|e| {
            Failure::Fatal(GenerationError::BackendRejected {
                status: status.as_u16(),
                body: format!("unreadable completion ({e}): {text}"),
            })
        })?;
        let completion = parsed
            .choices
            .into_iter()
            .next()
            .and_then(|c| c.text)
            .unwrap_or_default();
        Ok((completion, parsed.usage.unwrap_or_default()))
    }
}

impl Backend for HttpBackend {
    fn complete(&self, prompt: &Prompt, cfg: &GenerationConfig) -> Result<Completion, GenerationError> {
        let attempts = cfg.retry.attempts.max(1);
        let mut last = None;
        for n in 1..=attempts {
            match self.attempt(prompt, cfg) {
                Ok((readme_text, usage)) => {
                    return Ok(Completion {
                        readme_text,
                        usage,
                        attempts: n,
                    })
                }
                Err(Failure::Fatal(e)) => return Err(e),
                Err(Failure::Retryable(e)) => {
                    log::warn!("completion attempt {n}/{attempts} failed: {e}");
                    last = Some(e);
                    if n < attempts {
                        thread::sleep(cfg.retry.delay(n));
                    }
                }
            }
        }
        Err(last.expect("at least one attempt"))
    }
}

/// The stub for `stub:` endpoints, the HTTP client otherwise.
pub fn backend_for(cfg: &GenerationConfig) -> Result<Box<dyn Backend>, GenerationError> {
    if cfg.is_stub() {
        Ok(Box::new(StubBackend))
    } else {
        Ok(Box::new(HttpBackend::new(cfg)?))
    }
}
