use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::generation::{Backend, GenerationConfig};
use crate::pipeline::{generate, CorpusManifest, PipelineError, Selector, Split};
use crate::ranker::RankModel;
use crate::repo_model::{strip_held_out, ScanLimits};
use crate::scalar::Scalar;

use super::rouge::{rouge_scores, RougeScore};

pub struct EvalOptions<'a, F: Scalar> {
    pub model: &'a RankModel<F>,
    pub backend: &'a dyn Backend,
    pub generation: &'a GenerationConfig,
    pub seed: u64,
    pub limits: ScanLimits,
    /// `None` evaluates every manifest entry.
    pub split: Option<Split>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Ok,
    Skipped,
    Failed,
}

/// F1 of each variant scaled to 0..100 and rounded to one decimal.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct F1Percent {
    pub rouge1: f64,
    pub rouge2: f64,
    pub rouge_l: f64,
}

fn percent(x: f64) -> f64 {
    (x * 1000.0).round() / 10.0
}

impl F1Percent {
    fn from_score(s: &RougeScore<f64>) -> Self {
        F1Percent {
            rouge1: percent(s.rouge1.f1),
            rouge2: percent(s.rouge2.f1),
            rouge_l: percent(s.rouge_l.f1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub repo_id: String,
    pub status: RowStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selected_path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scores: Option<RougeScore<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f1: Option<F1Percent>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub selector: Selector,
    pub seed: u64,
    pub model_version: u32,
    pub endpoint: String,
    pub rows: Vec<ReportRow>,
    pub evaluated: usize,
    pub skipped: usize,
    pub failed: usize,
    /// Mean F1 over evaluated rows, as percentages with one decimal.
    pub mean_f1: F1Percent,
}

fn evaluate_entry<F: Scalar>(
    manifest: &CorpusManifest,
    entry: &crate::pipeline::ManifestEntry,
    selector: Selector,
    opts: &EvalOptions<'_, F>,
) -> ReportRow {
    let mut row = ReportRow {
        repo_id: entry.id.clone(),
        status: RowStatus::Failed,
        reason: None,
        selected_path: None,
        scores: None,
        f1: None,
    };
    let result = (|| -> Result<Option<(String, RougeScore<f64>)>, PipelineError> {
        let snapshot = strip_held_out(&manifest.scan(entry, &opts.limits)?);
        let Some(reference) = snapshot.reference_readme().map(str::to_string) else {
            return Ok(None);
        };
        let out = generate(
            opts.model,
            &snapshot,
            snapshot.name(),
            selector,
            opts.seed,
            opts.generation,
            opts.backend,
        )?;
        let scores = rouge_scores::<f64>(&out.completion.readme_text, &reference);
        Ok(Some((out.representative_path, scores)))
    })();
    match result {
        Ok(Some((path, scores))) => {
            row.status = RowStatus::Ok;
            row.selected_path = Some(path);
            row.f1 = Some(F1Percent::from_score(&scores));
            row.scores = Some(scores);
        }
        Ok(None) => {
            row.status = RowStatus::Skipped;
            row.reason = Some("no root-level readme to hold out".into());
        }
        Err(e) => {
            log::warn!("{}: {e}", entry.id);
            row.reason = Some(e.to_string());
        }
    }
    row
}

/// Runs the readme pipeline on every repository in the manifest and scores
/// each output against the repository's held-out readme.
pub fn evaluate_corpus<F: Scalar>(manifest: &CorpusManifest, selector: Selector, opts: &EvalOptions<'_, F>) -> CorpusReport {
    let mut rows: Vec<ReportRow> = manifest
        .entries(opts.split.clone())
        .map(|e| evaluate_entry(manifest, e, selector, opts))
        .collect();
    rows.sort_by(|a, b| a.repo_id.cmp(&b.repo_id));

    let ok: Vec<&RougeScore<f64>> = rows.iter().filter_map(|r| r.scores.as_ref()).collect();
    let mean = |pick: fn(&RougeScore<f64>) -> f64| {
        if ok.is_empty() {
            0.0
        } else {
            ok.iter().map(|s| pick(s)).sum::<f64>() / ok.len() as f64
        }
    };
    let mean_f1 = F1Percent {
        rouge1: percent(mean(|s| s.rouge1.f1)),
        rouge2: percent(mean(|s| s.rouge2.f1)),
        rouge_l: percent(mean(|s| s.rouge_l.f1)),
    };
    let count = |s: RowStatus| rows.iter().filter(|r| r.status == s).count();
    CorpusReport {
        selector,
        seed: opts.seed,
        model_version: opts.model.version,
        endpoint: opts.generation.endpoint_url.clone(),
        evaluated: count(RowStatus::Ok),
        skipped: count(RowStatus::Skipped),
        failed: count(RowStatus::Failed),
        rows,
        mean_f1,
    }
}

/// Both selectors over the same corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub representative: CorpusReport,
    pub random: CorpusReport,
}

pub fn compare_selectors<F: Scalar>(manifest: &CorpusManifest, opts: &EvalOptions<'_, F>) -> ComparisonReport {
    ComparisonReport {
        representative: evaluate_corpus(manifest, Selector::Representative, opts),
        random: evaluate_corpus(manifest, Selector::Random, opts),
    }
}

fn cell(f1: Option<&F1Percent>, pick: fn(&F1Percent) -> f64) -> String {
    f1.map_or_else(|| "-".to_string(), |f| format!("{:.1}", pick(f)))
}

impl CorpusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned text table: one line per repository, then the means.
    pub fn to_table(&self) -> String {
        let id_w = self.rows.iter().map(|r| r.repo_id.len()).max().unwrap_or(0).max(4);
        let path_w = self
            .rows
            .iter()
            .map(|r| r.selected_path.as_deref().map_or(1, str::len))
            .max()
            .unwrap_or(0)
            .max(4);
        let mut out = format!("selector: {}  seed: {}\n", self.selector, self.seed);
        let _ = writeln!(out, "{:id_w$}  {:path_w$}  {:>6}  {:>6}  {:>6}  status", "repo", "file", "R-1", "R-2", "R-L");
        for r in &self.rows {
            let status = match (&r.status, &r.reason) {
                (RowStatus::Ok, _) => "ok".to_string(),
                (RowStatus::Skipped, Some(why)) => format!("skipped ({why})"),
                (RowStatus::Failed, Some(why)) => format!("failed ({why})"),
                (s, None) => format!("{s:?}").to_lowercase(),
            };
            let _ = writeln!(
                out,
                "{:id_w$}  {:path_w$}  {:>6}  {:>6}  {:>6}  {status}",
                r.repo_id,
                r.selected_path.as_deref().unwrap_or("-"),
                cell(r.f1.as_ref(), |f| f.rouge1),
                cell(r.f1.as_ref(), |f| f.rouge2),
                cell(r.f1.as_ref(), |f| f.rouge_l),
            );
        }
        let _ = writeln!(
            out,
            "{:id_w$}  {:path_w$}  {:>6.1}  {:>6.1}  {:>6.1}  {} evaluated, {} skipped, {} failed",
            "mean",
            "",
            self.mean_f1.rouge1,
            self.mean_f1.rouge2,
            self.mean_f1.rouge_l,
            self.evaluated,
            self.skipped,
            self.failed
        );
        out
    }
}

impl ComparisonReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::from("selector         R-1    R-2    R-L  evaluated\n");
        for r in [&self.representative, &self.random] {
            let _ = writeln!(
                out,
                "{:14} {:>5.1}  {:>5.1}  {:>5.1}  {}",
                r.selector.to_string(),
                r.mean_f1.rouge1,
                r.mean_f1.rouge2,
                r.mean_f1.rouge_l,
                r.evaluated
            );
        }
        out.push('\n');
        out.push_str(&self.representative.to_table());
        out.push('\n');
        out.push_str(&self.random.to_table());
        out
    }
}
