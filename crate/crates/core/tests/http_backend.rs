//! The completions client against a scripted local HTTP server.

use std::io::{BufRead, BufReader, Read, Write};
use std::net::TcpListener;
use std::sync::{Arc, Mutex};
use std::thread;

use larch_core::generation::{
    build_prompt, generate_readme, Backend, GenerationConfig, GenerationError, HttpBackend, RetryPolicy,
};
use larch_core::repo_model::SourceFile;

struct Recorded {
    head: String,
    body: String,
}

/// Serves one canned `(status, body)` per connection, in order, and records
/// each request.
fn mock(responses: Vec<(u16, &'static str)>) -> (String, Arc<Mutex<Vec<Recorded>>>, thread::JoinHandle<()>) {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let url = format!("http://{}/v1/completions", listener.local_addr().unwrap());
    let seen = Arc::new(Mutex::new(Vec::new()));
    let log = seen.clone();
    let handle = thread::spawn(move || {
        for (status, body) in responses {
            let (stream, _) = listener.accept().unwrap();
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut head = String::new();
            let mut len = 0usize;
            loop {
                let mut line = String::new();
                reader.read_line(&mut line).unwrap();
                if let Some(v) = line.to_ascii_lowercase().strip_prefix("content-length:") {
                    len = v.trim().parse().unwrap();
                }
                if line == "\r\n" || line.is_empty() {
                    break;
                }
                head.push_str(&line);
            }
            let mut buf = vec![0; len];
            reader.read_exact(&mut buf).unwrap();
            log.lock().unwrap().push(Recorded {
                head,
                body: String::from_utf8(buf).unwrap(),
            });
            let mut stream = stream;
            write!(
                stream,
                "HTTP/1.1 {status} X\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
                body.len()
            )
            .unwrap();
        }
    });
    (url, seen, handle)
}

fn config(url: &str) -> GenerationConfig {
    GenerationConfig {
        endpoint_url: url.to_string(),
        model_name: "test-model".into(),
        api_key: Some("sk-test-123".into()),
        retry: RetryPolicy { attempts: 3, backoff_ms: 1 },
        request_timeout_seconds: 5,
        ..GenerationConfig::default()
    }
}

fn prompt(cfg: &GenerationConfig) -> larch_core::generation::Prompt {
    let code = SourceFile::new("pkg/cli.py", "def main():\n    pass\n").unwrap();
    build_prompt(&code, Some("pkg"), &["pkg/cli.py".to_string()], 0, cfg).unwrap()
}

const OK: &str = r#"{"choices":[{"text":"  # pkg\n\nDoes things.\n"}],"usage":{"prompt_tokens":40,"completion_tokens":7}}"#;

#[test]
fn passes_completion_through() {
    let (url, seen, h) = mock(vec![(200, OK)]);
    let cfg = config(&url);
    let p = prompt(&cfg);
    let backend = HttpBackend::new(&cfg).unwrap();
    let out = generate_readme(&p, &cfg, &backend).unwrap();
    h.join().unwrap();
    assert_eq!(out.readme_text, "# pkg\n\nDoes things.");
    assert_eq!((out.usage.prompt_tokens, out.usage.completion_tokens), (Some(40), Some(7)));
    assert_eq!(out.attempts, 1);

    let seen = seen.lock().unwrap();
    assert!(seen[0].head.starts_with("POST /v1/completions "));
    assert!(seen[0].head.to_ascii_lowercase().contains("authorization: bearer sk-test-123"));
    let body: serde_json::Value = serde_json::from_str(&seen[0].body).unwrap();
    assert_eq!(body["model"], "test-model");
    assert_eq!(body["prompt"], p.text.as_str());
    assert_eq!(body["max_tokens"], 910);
    assert_eq!(body["temperature"], 0.2);
}

#[test]
fn retries_rate_limits_then_succeeds() {
    let (url, seen, h) = mock(vec![(429, "{}"), (429, "{}"), (200, OK)]);
    let cfg = config(&url);
    let out = HttpBackend::new(&cfg).unwrap().complete(&prompt(&cfg), &cfg).unwrap();
    h.join().unwrap();
    assert_eq!(out.attempts, 3);
    assert_eq!(seen.lock().unwrap().len(), 3);
}

#[test]
fn gives_up_after_last_server_error() {
    let (url, _, h) = mock(vec![(503, "busy"), (500, "oops"), (502, "bad")]);
    let cfg = config(&url);
    let err = HttpBackend::new(&cfg).unwrap().complete(&prompt(&cfg), &cfg).unwrap_err();
    h.join().unwrap();
    assert!(matches!(err, GenerationError::BackendRejected { status: 502, .. }), "{err:?}");
}

#[test]
fn client_errors_are_not_retried() {
    let (url, seen, h) = mock(vec![(400, r#"{"error":"bad prompt"}"#)]);
    let cfg = config(&url);
    let err = HttpBackend::new(&cfg).unwrap().complete(&prompt(&cfg), &cfg).unwrap_err();
    h.join().unwrap();
    match err {
        GenerationError::BackendRejected { status, body } => {
            assert_eq!(status, 400);
            assert!(body.contains("bad prompt"));
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(seen.lock().unwrap().len(), 1);
}

#[test]
fn empty_completion_is_an_error() {
    let (url, _, h) = mock(vec![(200, r#"{"choices":[{"text":"  \n"}]}"#)]);
    let cfg = config(&url);
    let err = generate_readme(&prompt(&cfg), &cfg, &HttpBackend::new(&cfg).unwrap()).unwrap_err();
    h.join().unwrap();
    assert!(matches!(err, GenerationError::EmptyCompletion));
}

#[test]
fn unreachable_endpoint() {
    // bind then drop to get a port nobody listens on
    let port = TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port();
    let cfg = config(&format!("http://127.0.0.1:{port}/v1/completions"));
    let err = HttpBackend::new(&cfg).unwrap().complete(&prompt(&cfg), &cfg).unwrap_err();
    assert!(matches!(err, GenerationError::BackendUnreachable(_)), "{err:?}");
    assert!(!err.to_string().contains("sk-test-123"));
}
