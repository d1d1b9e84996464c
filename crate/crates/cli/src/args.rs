use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use larch_core::pipeline::Selector;

#[derive(Debug, Parser)]
#[command(name = "larch", version, about = "Find the representative file of a Python repository and draft its readme")]
pub struct Cli {
    /// Ranking model file; the built-in pretrained model when omitted.
    #[arg(long, global = true, env = "LARCH_MODEL_FILE")]
    pub model_file: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a readme for a repository.
    Generate(GenerateArgs),
    /// Rank the Python files of a repository.
    Identify(IdentifyArgs),
    /// Train a ranking model from a corpus.
    Train(TrainArgs),
    /// Score generated readmes against held-out ones over a corpus.
    Eval(EvalArgs),
    /// Run the HTTP service.
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct LlmArgs {
    /// Completions endpoint URL, or `stub:` for the offline stub.
    #[arg(long, env = "LARCH_LLM_ENDPOINT", default_value = "stub:")]
    pub endpoint: String,
    #[arg(long = "model", env = "LARCH_LLM_MODEL", default_value = "gpt-3.5-turbo-instruct")]
    pub model_name: String,
    #[arg(long, env = "LARCH_MAX_PROMPT_TOKENS", default_value_t = 3000)]
    pub max_prompt_tokens: usize,
    #[arg(long, env = "LARCH_MAX_GEN_TOKENS", default_value_t = 910)]
    pub max_gen_tokens: usize,
    #[arg(long, default_value_t = 0.2)]
    pub temperature: f64,
    #[arg(long, default_value_t = 60)]
    pub timeout_secs: u64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Repository root.
    pub path: PathBuf,
    /// Project name for the prompt; defaults to the directory name.
    #[arg(long)]
    pub name: Option<String>,
    /// Leave the project name out of the prompt.
    #[arg(long, conflicts_with = "name")]
    pub no_name: bool,
    /// Write the readme here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print the prompt and stop before calling the backend.
    #[arg(long)]
    pub show_prompt: bool,
    #[arg(long, value_enum, default_value_t = SelectorArg::Representative)]
    pub selector: SelectorArg,
    #[command(flatten)]
    pub llm: LlmArgs,
}

#[derive(Debug, Args)]
pub struct IdentifyArgs {
    pub path: PathBuf,
    /// Number of candidates to print.
    #[arg(long, default_value_t = 10)]
    pub top: usize,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Corpus manifest (JSON).
    #[arg(long, required_unless_present = "synthetic", conflicts_with = "synthetic")]
    pub corpus: Option<PathBuf>,
    /// Train on this many generated repositories instead of a corpus.
    #[arg(long)]
    pub synthetic: Option<usize>,
    /// Where to write the model.
    #[arg(long)]
    pub out: PathBuf,
    /// Also write the fitted label model here.
    #[arg(long)]
    pub label_model_out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = LabelModelArg::ClassConditional)]
    pub label_model: LabelModelArg,
    #[arg(long, default_value_t = 300)]
    pub n_trees: usize,
    #[arg(long, default_value_t = 3)]
    pub max_depth: usize,
    #[arg(long, default_value_t = 0.1)]
    pub learning_rate: f64,
    #[arg(long, default_value_t = 5)]
    pub min_leaf: usize,
    #[arg(long, default_value_t = 0.1)]
    pub pair_margin: f64,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub corpus: PathBuf,
    #[arg(long, value_enum, default_value_t = EvalSelector::Both)]
    pub selector: EvalSelector,
    /// Which manifest entries to evaluate.
    #[arg(long, value_enum, default_value_t = SplitArg::All)]
    pub split: SplitArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory for `eval_report.json` and `eval_report.txt`.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    #[command(flatten)]
    pub llm: LlmArgs,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8000)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: String,
    /// Request body limit in megabytes.
    #[arg(long, default_value_t = 64)]
    pub max_body_mb: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub llm: LlmArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SelectorArg {
    Representative,
    Random,
}

impl From<SelectorArg> for Selector {
    fn from(s: SelectorArg) -> Self {
        match s {
            SelectorArg::Representative => Selector::Representative,
            SelectorArg::Random => Selector::Random,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalSelector {
    Representative,
    Random,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SplitArg {
    Train,
    Eval,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LabelModelArg {
    Symmetric,
    ClassConditional,
}
