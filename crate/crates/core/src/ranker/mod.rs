//! Ranking candidate files with a pairwise boosted-tree model.

use std::io::{Read, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code_analysis::{FactsByPath, ImportGraph};
use crate::repo_model::RepoSnapshot;
use crate::scalar::Scalar;

mod features;
mod gbdt;

pub use features::{extract_features, FeatureVector, FEATURE_NAMES, NUM_FEATURES};
pub use gbdt::{
    train_ranker, RankModel, RankerHyperParams, RankingGroup, RegressionTree, TreeNode, MODEL_VERSION,
};

#[derive(Debug, Error)]
pub enum RankerError {
    #[error("no analysis available for {0}")]
    MissingAnalysis(String),
    #[error("need at least 2 repositories to train, got {0}")]
    TooFewGroups(usize),
    #[error("repository {0} has no candidate files")]
    EmptyGroup(String),
    #[error("repository {0}: paths, features and posteriors differ in length")]
    RaggedGroup(String),
    #[error("no repository yields a preference pair; posteriors are too flat")]
    NoUsablePairs,
    #[error("repository has no Python files")]
    NoPythonFiles,
    #[error("unsupported model version {found} (expected {expected})")]
    VersionMismatch { found: u64, expected: u32 },
    #[error("malformed model: {0}")]
    MalformedModel(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedFile {
    pub path: String,
    pub score: f64,
}

/// Scores every candidate file, best first. Equal scores are ordered by path.
pub fn rank_files<F: Scalar>(
    model: &RankModel<F>,
    snapshot: &RepoSnapshot,
    facts: &FactsByPath,
    graph: &ImportGraph,
) -> Result<Vec<RankedFile>, RankerError> {
    let mut ranked = snapshot
        .candidates()
        .map(|f| {
            let path = f.path();
            let file_facts = facts
                .get(path)
                .ok_or_else(|| RankerError::MissingAnalysis(path.to_string()))?;
            let features = extract_features(path, file_facts, graph)?;
            Ok(RankedFile {
                path: path.to_string(),
                score: model.score(&features).as_f64(),
            })
        })
        .collect::<Result<Vec<_>, RankerError>>()?;
    if ranked.is_empty() {
        return Err(RankerError::NoPythonFiles);
    }
    ranked.sort_by(|a, b| b.score.total_cmp(&a.score).then_with(|| a.path.cmp(&b.path)));
    Ok(ranked)
}

/// Uniformly random candidate file; the random-file baseline.
pub fn select_random_file(snapshot: &RepoSnapshot, seed: u64) -> Result<String, RankerError> {
    let candidates: Vec<&str> = snapshot.candidates().map(|f| f.path()).collect();
    if candidates.is_empty() {
        return Err(RankerError::NoPythonFiles);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(candidates[rng.gen_range(0..candidates.len())].to_string())
}

pub fn save_model<F: Scalar>(model: &RankModel<F>, mut sink: impl Write) -> Result<(), RankerError> {
    serde_json::to_writer_pretty(&mut sink, model).map_err(|e| RankerError::MalformedModel(e.to_string()))?;
    sink.write_all(b"\n")?;
    Ok(())
}

pub fn model_to_json<F: Scalar>(model: &RankModel<F>) -> String {
    let mut buf = Vec::new();
    save_model(model, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("json is utf-8")
}

pub fn load_model<F: Scalar>(mut source: impl Read) -> Result<RankModel<F>, RankerError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    model_from_json(&text)
}

pub fn model_from_json<F: Scalar>(text: &str) -> Result<RankModel<F>, RankerError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| RankerError::MalformedModel(e.to_string()))?;
    let version = value
        .get("version")
        .and_then(serde_json::Value::as_u64)
        .ok_or_else(|| RankerError::MalformedModel("missing version".into()))?;
    if version != u64::from(MODEL_VERSION) {
        return Err(RankerError::VersionMismatch {
            found: version,
            expected: MODEL_VERSION,
        });
    }
    let model: RankModel<F> =
        serde_json::from_value(value).map_err(|e| RankerError::MalformedModel(e.to_string()))?;
    model.validate().map_err(RankerError::MalformedModel)?;
    Ok(model)
}

const PRETRAINED: &str = include_str!("../../fixtures/pretrained_model.json");

/// The model shipped with the crate, trained on the synthetic corpus.
pub fn pretrained() -> RankModel<f64> {
    model_from_json(PRETRAINED).expect("shipped model is valid")
}
