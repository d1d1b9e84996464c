use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::repo_model::SourceFile;

use super::{GenerationConfig, GenerationError};

pub const FILES_HEADER: &str = "This program has following files:";
pub const INSTRUCTION: &str = "Write a detailed readme in markdown:";
/// How many file names the prompt lists at most.
pub const MAX_LISTED_FILES: usize = 10;

/// Counts tokens for budget checks. Implementations must be monotone: a
/// longer prefix of a text never estimates lower.
pub trait TokenEstimator: Send + Sync {
    fn estimate(&self, text: &str) -> usize;
}

/// About four characters per token.
#[derive(Debug, Clone, Copy, Default)]
pub struct CharEstimator;

impl TokenEstimator for CharEstimator {
    fn estimate(&self, text: &str) -> usize {
        text.chars().count().div_ceil(4)
    }
}

pub fn estimate_tokens(text: &str) -> usize {
    CharEstimator.estimate(text)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prompt {
    pub text: String,
    pub token_estimate: usize,
    pub truncated: bool,
    pub included_file_names: Vec<String>,
    pub project_name: Option<String>,
    /// The code as it appears in the prompt, after any truncation.
    pub code: String,
}

pub fn header_line(project_name: Option<&str>) -> String {
    match project_name {
        Some(name) => format!("Here is the entrypoint of a Python project \"{name}\":"),
        None => "Here is the entrypoint of a Python project:".to_string(),
    }
}

fn render(header: &str, code: &str, files: &[String]) -> String {
    let mut text = String::with_capacity(header.len() + code.len() + 64 * files.len() + 96);
    text.push_str(header);
    text.push_str("\n\n");
    text.push_str(code);
    text.push_str("\n\n");
    text.push_str(FILES_HEADER);
    text.push('\n');
    for f in files {
        text.push_str(f);
        text.push('\n');
    }
    text.push('\n');
    text.push_str(INSTRUCTION);
    text
}

/// Up to ten paths drawn uniformly without replacement, listed in their
/// original order.
pub fn sample_file_names(all_paths: &[String], seed: u64) -> Vec<String> {
    if all_paths.len() <= MAX_LISTED_FILES {
        return all_paths.to_vec();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = rand::seq::index::sample(&mut rng, all_paths.len(), MAX_LISTED_FILES).into_vec();
    picked.sort_unstable();
    picked.into_iter().map(|i| all_paths[i].clone()).collect()
}

pub fn build_prompt(
    code: &SourceFile,
    project_name: Option<&str>,
    all_paths: &[String],
    seed: u64,
    cfg: &GenerationConfig,
) -> Result<Prompt, GenerationError> {
    build_prompt_with(code, project_name, all_paths, seed, cfg, &CharEstimator)
}

/// Like [`build_prompt`] with a caller-supplied token estimator.
pub fn build_prompt_with(
    code: &SourceFile,
    project_name: Option<&str>,
    all_paths: &[String],
    seed: u64,
    cfg: &GenerationConfig,
    estimator: &dyn TokenEstimator,
) -> Result<Prompt, GenerationError> {
    let full = code.content().trim_end_matches(['\n', '\r']);
    if full.trim().is_empty() {
        return Err(GenerationError::EmptyCode(code.path().to_string()));
    }
    let header = header_line(project_name);
    let files = sample_file_names(all_paths, seed);
    let budget = cfg.max_prompt_tokens;

    let finish = |code: &str, text: String, truncated: bool| Prompt {
        token_estimate: estimator.estimate(&text),
        text,
        truncated,
        included_file_names: files.clone(),
        project_name: project_name.map(str::to_string),
        code: code.to_string(),
    };

    let text = render(&header, full, &files);
    if estimator.estimate(&text) <= budget {
        return Ok(finish(full, text, false));
    }
    let scaffold = estimator.estimate(&render(&header, "", &files));
    if scaffold > budget {
        return Err(GenerationError::BudgetTooSmall { scaffold, budget });
    }

    // longest char prefix of the code that fits
    let bounds: Vec<usize> = full.char_indices().map(|(i, _)| i).chain([full.len()]).collect();
    let (mut lo, mut hi) = (0usize, bounds.len() - 1);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if estimator.estimate(&render(&header, &full[..bounds[mid]], &files)) <= budget {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let kept = &full[..bounds[lo]];
    Ok(finish(kept, render(&header, kept, &files), true))
}
