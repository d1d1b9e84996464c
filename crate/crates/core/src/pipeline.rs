//! End-to-end flows: training on a corpus, identifying the representative
//! file of a repository, and generating its readme.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code_analysis::{analyze, AnalysisError, FactsByPath, ImportGraph};
use crate::generation::{
    build_prompt, generate_readme, Backend, Completion, GenerationConfig, GenerationError, Prompt,
};
use crate::ranker::{
    extract_features, rank_files, select_random_file, train_ranker, RankModel, RankedFile, RankerError,
    RankerHyperParams, RankingGroup,
};
use crate::repo_model::{scan_repository, strip_held_out, RepoError, RepoSnapshot, ScanLimits};
use crate::scalar::Scalar;
use crate::weak_supervision::{
    apply_labeling_functions, fit_label_model, posterior, LabelMatrix, LabelModelConfig, LabelModelError,
    LabelModelKind, LabelModelParams, OracleInputs,
};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Repo(#[from] RepoError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    LabelModel(#[from] LabelModelError),
    #[error(transparent)]
    Ranker(#[from] RankerError),
    #[error(transparent)]
    Generation(#[from] GenerationError),
    #[error("corpus manifest: {0}")]
    Manifest(String),
}

/// A snapshot with held-out files removed, plus its analysis.
#[derive(Debug, Clone)]
pub struct AnalyzedRepo {
    pub snapshot: RepoSnapshot,
    pub facts: FactsByPath,
    pub graph: ImportGraph,
}

impl AnalyzedRepo {
    pub fn new(snapshot: &RepoSnapshot) -> Result<Self, PipelineError> {
        let snapshot = strip_held_out(snapshot);
        let (facts, graph) = analyze(&snapshot)?;
        Ok(AnalyzedRepo { snapshot, facts, graph })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Selector {
    Representative,
    Random,
}

impl std::str::FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "representative" => Ok(Selector::Representative),
            "random" => Ok(Selector::Random),
            other => Err(format!("unknown selector {other:?} (expected representative or random)")),
        }
    }
}

impl std::fmt::Display for Selector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Selector::Representative => "representative",
            Selector::Random => "random",
        })
    }
}

pub fn identify<F: Scalar>(model: &RankModel<F>, snapshot: &RepoSnapshot) -> Result<Vec<RankedFile>, PipelineError> {
    let repo = AnalyzedRepo::new(snapshot)?;
    Ok(rank_files(model, &repo.snapshot, &repo.facts, &repo.graph)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationOutcome {
    pub representative_path: String,
    pub prompt: Prompt,
    pub completion: Completion,
}

/// Selects the file and assembles the prompt without calling a backend.
pub fn prepare_prompt<F: Scalar>(
    model: &RankModel<F>,
    snapshot: &RepoSnapshot,
    project_name: Option<&str>,
    selector: Selector,
    seed: u64,
    cfg: &GenerationConfig,
) -> Result<(String, Prompt), PipelineError> {
    let repo = AnalyzedRepo::new(snapshot)?;
    let path = match selector {
        Selector::Representative => rank_files(model, &repo.snapshot, &repo.facts, &repo.graph)?
            .swap_remove(0)
            .path,
        Selector::Random => select_random_file(&repo.snapshot, seed)?,
    };
    let code = repo.snapshot.file(&path).expect("selected from this snapshot");
    let prompt = build_prompt(code, project_name, &repo.snapshot.paths(), seed, cfg)?;
    Ok((path, prompt))
}

pub fn generate<F: Scalar>(
    model: &RankModel<F>,
    snapshot: &RepoSnapshot,
    project_name: Option<&str>,
    selector: Selector,
    seed: u64,
    cfg: &GenerationConfig,
    backend: &dyn Backend,
) -> Result<GenerationOutcome, PipelineError> {
    let (representative_path, prompt) = prepare_prompt(model, snapshot, project_name, selector, seed, cfg)?;
    let completion = generate_readme(&prompt, cfg, backend)?;
    Ok(GenerationOutcome {
        representative_path,
        prompt,
        completion,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrainingConfig {
    pub label_model: LabelModelConfig,
    pub ranker: RankerHyperParams,
}

impl Default for TrainingConfig {
    /// The class-conditional label model: most labeling functions vote in
    /// one direction only.
    fn default() -> Self {
        TrainingConfig {
            label_model: LabelModelConfig {
                kind: LabelModelKind::ClassConditional,
                ..LabelModelConfig::default()
            },
            ranker: RankerHyperParams::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TrainingOutcome<F: Scalar> {
    pub label_model: LabelModelParams<F>,
    pub model: RankModel<F>,
    pub matrices: Vec<LabelMatrix>,
    pub groups: Vec<RankingGroup<F>>,
}

/// Labeling functions, label model and ranker over a set of repositories.
/// Each snapshot should still contain its readme and setup script; they feed
/// the oracle functions and are removed before analysis.
pub fn train_from_snapshots<F: Scalar>(
    snapshots: &[RepoSnapshot],
    cfg: &TrainingConfig,
) -> Result<TrainingOutcome<F>, PipelineError> {
    let mut prepared = Vec::with_capacity(snapshots.len());
    for snap in snapshots {
        let oracle = OracleInputs::from_snapshot(snap);
        let repo = AnalyzedRepo::new(snap)?;
        let matrix = apply_labeling_functions(&repo.snapshot, &repo.facts, &repo.graph, &oracle);
        if matrix.is_empty() {
            log::warn!("{}: no candidate files, skipped", matrix.repo_id);
            continue;
        }
        prepared.push((repo, matrix));
    }
    let matrices: Vec<LabelMatrix> = prepared.iter().map(|(_, m)| m.clone()).collect();
    let label_model = fit_label_model::<F>(&matrices, &cfg.label_model)?;

    let mut groups = Vec::with_capacity(prepared.len());
    for (repo, matrix) in &prepared {
        let post = posterior(&label_model, matrix)?;
        let features = matrix
            .rows
            .iter()
            .map(|p| extract_features(p, &repo.facts[p], &repo.graph))
            .collect::<Result<Vec<_>, _>>()?;
        groups.push(RankingGroup {
            repo_id: matrix.repo_id.clone(),
            paths: matrix.rows.clone(),
            features,
            posteriors: post.values,
        });
    }
    let model = train_ranker(&groups, &cfg.ranker)?;
    Ok(TrainingOutcome {
        label_model,
        model,
        matrices,
        groups,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Eval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    /// Relative paths are resolved against the manifest's directory.
    pub path: PathBuf,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<Split>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub repos: Vec<ManifestEntry>,
    #[serde(skip)]
    pub base_dir: PathBuf,
}

impl CorpusManifest {
    pub fn from_json(text: &str, base_dir: &Path) -> Result<Self, PipelineError> {
        let mut manifest: CorpusManifest =
            serde_json::from_str(text).map_err(|e| PipelineError::Manifest(e.to_string()))?;
        manifest.base_dir = base_dir.to_path_buf();
        let mut ids: Vec<&str> = manifest.repos.iter().map(|r| r.id.as_str()).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(PipelineError::Manifest(format!("duplicate repo id {}", w[0])));
        }
        Ok(manifest)
    }

    pub fn load(path: &Path) -> Result<Self, PipelineError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PipelineError::Manifest(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Self::from_json(&text, base)
    }

    pub fn root_of(&self, entry: &ManifestEntry) -> PathBuf {
        if entry.path.is_absolute() {
            entry.path.clone()
        } else {
            self.base_dir.join(&entry.path)
        }
    }

    /// Entries with the given split; entries without a tag match any split.
    pub fn entries(&self, split: Option<Split>) -> impl Iterator<Item = &ManifestEntry> {
        self.repos
            .iter()
            .filter(move |e| split.is_none() || e.split.is_none() || e.split == split)
    }

    /// Scans one entry; the snapshot is named after the entry id.
    pub fn scan(&self, entry: &ManifestEntry, limits: &ScanLimits) -> Result<RepoSnapshot, PipelineError> {
        let snap = scan_repository(&self.root_of(entry), limits)?;
        let files = snap.files().to_vec();
        Ok(RepoSnapshot::new(Some(entry.id.clone()), files)?.with_reference_readme(snap.reference_readme().map(str::to_string)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthetic::synthetic_corpus;

    #[test]
    fn manifest_rejects_duplicates() {
        let json = r#"{"repos":[{"id":"a","path":"a"},{"id":"a","path":"b"}]}"#;
        assert!(CorpusManifest::from_json(json, Path::new(".")).is_err());
        let json = r#"{"repos":[{"id":"a","path":"a","split":"train"},{"id":"b","path":"/x/b"}]}"#;
        let m = CorpusManifest::from_json(json, Path::new("/base")).unwrap();
        assert_eq!(m.root_of(&m.repos[0]), PathBuf::from("/base/a"));
        assert_eq!(m.root_of(&m.repos[1]), PathBuf::from("/x/b"));
        assert_eq!(m.entries(Some(Split::Eval)).count(), 1);
    }

    #[test]
    fn small_training_run_finds_planted_files() {
        let corpus = synthetic_corpus(40, 5);
        let snaps: Vec<RepoSnapshot> = corpus.iter().map(|r| r.snapshot().unwrap()).collect();
        let cfg = TrainingConfig {
            ranker: RankerHyperParams {
                n_trees: 40,
                ..RankerHyperParams::default()
            },
            ..TrainingConfig::default()
        };
        let out = train_from_snapshots::<f64>(&snaps[..30], &cfg).unwrap();
        assert_eq!(out.groups.len(), 30);
        let hits = corpus[30..]
            .iter()
            .zip(&snaps[30..])
            .filter(|(repo, snap)| identify(&out.model, snap).unwrap()[0].path == repo.planted)
            .count();
        assert!(hits >= 8, "{hits}/10");
    }

    #[test]
    fn generate_with_stub() {
        let repo = &synthetic_corpus(1, 2)[0];
        let snap = repo.snapshot().unwrap();
        let model = crate::ranker::pretrained();
        let cfg = GenerationConfig::default();
        let out = generate(&model, &snap, Some(&repo.name), Selector::Representative, 0, &cfg, &crate::generation::StubBackend)
            .unwrap();
        assert!(out.completion.readme_text.starts_with(&format!("# {}", repo.name)));
        // held-out files are not offered to the prompt
        assert!(!out.prompt.text.contains("README.md"));
        assert!(!out.prompt.included_file_names.iter().any(|p| p == "setup.py"));
    }
}
