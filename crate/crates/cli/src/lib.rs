//! The `larch` command line tool and HTTP service.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::sync::Arc;

use clap::Parser;

use larch_core::evaluation::{compare_selectors, evaluate_corpus, EvalOptions};
use larch_core::generation::{backend_for, GenerationConfig, GenerationError, RetryPolicy};
use larch_core::pipeline::{self, train_from_snapshots, CorpusManifest, PipelineError, Selector, Split, TrainingConfig};
use larch_core::ranker::{load_model, pretrained, save_model, RankerError, RankerHyperParams};
use larch_core::repo_model::{scan_repository, RepoError, RepoSnapshot, ScanLimits};
use larch_core::synthetic::synthetic_corpus;
use larch_core::weak_supervision::{LabelModelConfig, LabelModelKind};
use larch_core::RankModel;

pub mod args;
pub mod server;

use args::{Cli, Command, EvalArgs, EvalSelector, GenerateArgs, IdentifyArgs, LabelModelArg, LlmArgs, ServeArgs, SplitArg, TrainArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PIPELINE: u8 = 2;

/// Failure of a subcommand, split by exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Pipeline(String),
}

macro_rules! pipeline_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Pipeline(e.to_string())
            }
        }
    )*};
}

pipeline_error!(PipelineError, RepoError, RankerError, GenerationError);

pub fn generation_config(llm: &LlmArgs) -> GenerationConfig {
    GenerationConfig {
        endpoint_url: llm.endpoint.clone(),
        model_name: llm.model_name.clone(),
        api_key: std::env::var("LARCH_LLM_API_KEY").ok().filter(|k| !k.is_empty()),
        max_prompt_tokens: llm.max_prompt_tokens,
        max_gen_tokens: llm.max_gen_tokens,
        temperature: llm.temperature,
        request_timeout_seconds: llm.timeout_secs,
        retry: RetryPolicy::default(),
    }
}

pub fn load_ranking_model(path: Option<&Path>) -> Result<RankModel, CliError> {
    let Some(path) = path else {
        return Ok(pretrained());
    };
    let file = fs::File::open(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    load_model(io::BufReader::new(file)).map_err(|e| CliError::Pipeline(format!("{}: {e}", path.display())))
}

fn scan(path: &Path) -> Result<RepoSnapshot, CliError> {
    if !path.is_dir() {
        return Err(CliError::Usage(format!("{}: not a directory", path.display())));
    }
    Ok(scan_repository(path, &ScanLimits::default())?)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Pipeline(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Pipeline(e.to_string())),
    }
}

fn check_config(cfg: &GenerationConfig) -> Result<(), CliError> {
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))
}

fn cmd_generate(model: &RankModel, a: &GenerateArgs) -> Result<(), CliError> {
    let cfg = generation_config(&a.llm);
    check_config(&cfg)?;
    let snapshot = scan(&a.path)?;
    let name = if a.no_name {
        None
    } else {
        a.name.clone().or_else(|| snapshot.name().map(str::to_string))
    };
    if a.show_prompt {
        let (path, prompt) = pipeline::prepare_prompt(model, &snapshot, name.as_deref(), a.selector.into(), a.seed, &cfg)?;
        log::info!("representative file: {path}");
        return write_output(None, &prompt.text);
    }
    let backend = backend_for(&cfg)?;
    let out = pipeline::generate(model, &snapshot, name.as_deref(), a.selector.into(), a.seed, &cfg, backend.as_ref())?;
    log::info!(
        "representative file: {} ({} prompt tokens{})",
        out.representative_path,
        out.prompt.token_estimate,
        if out.prompt.truncated { ", truncated" } else { "" }
    );
    write_output(a.out.as_deref(), &out.completion.readme_text)
}

fn cmd_identify(model: &RankModel, a: &IdentifyArgs) -> Result<(), CliError> {
    let snapshot = scan(&a.path)?;
    let ranked = pipeline::identify(model, &snapshot)?;
    let top: Vec<_> = ranked.into_iter().take(a.top).collect();
    let body = serde_json::json!({ "repository": snapshot.name(), "candidates": top });
    write_output(None, &serde_json::to_string_pretty(&body).expect("json"))
}

fn load_manifest(path: &Path) -> Result<CorpusManifest, CliError> {
    if !path.is_file() {
        return Err(CliError::Usage(format!("{}: no such manifest", path.display())));
    }
    Ok(CorpusManifest::load(path)?)
}

fn cmd_train(a: &TrainArgs) -> Result<(), CliError> {
    let snapshots: Vec<RepoSnapshot> = match (&a.corpus, a.synthetic) {
        (_, Some(n)) => synthetic_corpus(n, a.seed)
            .iter()
            .map(|r| r.snapshot())
            .collect::<Result<_, _>>()?,
        (Some(path), None) => {
            let manifest = load_manifest(path)?;
            manifest
                .entries(Some(Split::Train))
                .map(|e| manifest.scan(e, &ScanLimits::default()))
                .collect::<Result<_, _>>()?
        }
        (None, None) => return Err(CliError::Usage("either --corpus or --synthetic is required".into())),
    };
    let cfg = TrainingConfig {
        label_model: LabelModelConfig {
            seed: a.seed,
            kind: match a.label_model {
                LabelModelArg::Symmetric => LabelModelKind::Symmetric,
                LabelModelArg::ClassConditional => LabelModelKind::ClassConditional,
            },
            ..LabelModelConfig::default()
        },
        ranker: RankerHyperParams {
            n_trees: a.n_trees,
            max_depth: a.max_depth,
            learning_rate: a.learning_rate,
            min_leaf: a.min_leaf,
            pair_margin: a.pair_margin,
            seed: a.seed,
        },
    };
    let outcome = train_from_snapshots::<f64>(&snapshots, &cfg)?;
    let mut buf = Vec::new();
    save_model(&outcome.model, &mut buf).map_err(|e| CliError::Pipeline(e.to_string()))?;
    fs::write(&a.out, buf).map_err(|e| CliError::Pipeline(format!("{}: {e}", a.out.display())))?;
    if let Some(p) = &a.label_model_out {
        fs::write(p, outcome.label_model.to_json() + "\n")
            .map_err(|e| CliError::Pipeline(format!("{}: {e}", p.display())))?;
    }
    let rows: usize = outcome.groups.iter().map(|g| g.paths.len()).sum();
    eprintln!(
        "trained on {} repositories ({} files): {} trees, loss {:.4} -> {:.4}",
        outcome.groups.len(),
        rows,
        outcome.model.trees.len(),
        outcome.model.training_loss.first().copied().unwrap_or(f64::NAN),
        outcome.model.training_loss.last().copied().unwrap_or(f64::NAN),
    );
    Ok(())
}

fn cmd_eval(model: &RankModel, a: &EvalArgs) -> Result<(), CliError> {
    let cfg = generation_config(&a.llm);
    check_config(&cfg)?;
    let manifest = load_manifest(&a.corpus)?;
    let backend = backend_for(&cfg)?;
    let opts = EvalOptions {
        model,
        backend: backend.as_ref(),
        generation: &cfg,
        seed: a.seed,
        limits: ScanLimits::default(),
        split: match a.split {
            SplitArg::Train => Some(Split::Train),
            SplitArg::Eval => Some(Split::Eval),
            SplitArg::All => None,
        },
    };
    let (json, table) = match a.selector {
        EvalSelector::Both => {
            let r = compare_selectors(&manifest, &opts);
            (r.to_json(), r.to_table())
        }
        EvalSelector::Representative => {
            let r = evaluate_corpus(&manifest, Selector::Representative, &opts);
            (r.to_json(), r.to_table())
        }
        EvalSelector::Random => {
            let r = evaluate_corpus(&manifest, Selector::Random, &opts);
            (r.to_json(), r.to_table())
        }
    };
    fs::create_dir_all(&a.out_dir).map_err(|e| CliError::Pipeline(format!("{}: {e}", a.out_dir.display())))?;
    for (name, text) in [("eval_report.json", json + "\n"), ("eval_report.txt", table.clone())] {
        let p = a.out_dir.join(name);
        fs::write(&p, text).map_err(|e| CliError::Pipeline(format!("{}: {e}", p.display())))?;
    }
    write_output(None, &table)
}

fn cmd_serve(model: RankModel, a: &ServeArgs) -> Result<(), CliError> {
    let cfg = generation_config(&a.llm);
    check_config(&cfg)?;
    let state = Arc::new(server::AppState {
        model,
        generation: cfg,
        seed: a.seed,
    });
    let app = server::router(state, a.max_body_mb.saturating_mul(1024 * 1024));
    let rt = tokio::runtime::Runtime::new().map_err(|e| CliError::Pipeline(e.to_string()))?;
    rt.block_on(async {
        let addr = format!("{}:{}", a.host, a.port);
        let listener = tokio::net::TcpListener::bind(&addr)
            .await
            .map_err(|e| CliError::Pipeline(format!("cannot listen on {addr}: {e}")))?;
        eprintln!("listening on http://{addr}");
        axum::serve(listener, app)
            .with_graceful_shutdown(async {
                let _ = tokio::signal::ctrl_c().await;
            })
            .await
            .map_err(|e| CliError::Pipeline(e.to_string()))
    })
}

/// Parses `argv` and runs the subcommand; returns the process exit code.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = load_ranking_model(cli.model_file.as_deref()).and_then(|model| match &cli.command {
        Command::Generate(a) => cmd_generate(&model, a),
        Command::Identify(a) => cmd_identify(&model, a),
        Command::Train(a) => cmd_train(a),
        Command::Eval(a) => cmd_eval(&model, a),
        Command::Serve(a) => cmd_serve(model, a),
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Pipeline(msg)) => {
            eprintln!("error: {msg}");
            EXIT_PIPELINE
        }
    }
}
