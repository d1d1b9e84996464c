use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::code_analysis::{FactsByPath, ImportGraph, ModuleIndex};
use crate::repo_model::{base_name, RepoSnapshot};

use super::oracle::{declared_entry_modules, readme_hits, OracleInputs};

/// Number of labeling functions.
pub const NUM_LFS: usize = 14;

/// Column names, in column order.
pub const LF_NAMES: [&str; NUM_LFS] = [
    "lf1_main_fn",
    "lf2_argparser",
    "lf3_webframework",
    "lf4a_too_short",
    "lf5_main_in_name",
    "lf6_entrypointish_name",
    "lf7_dunder_init",
    "lf8_testish_name",
    "lf10a_import_top",
    "lf11_import_bottom",
    "lf14a_inherited_3x",
    "lf15_name_matches_repo",
    "lf16_setup_entrypoint",
    "lf17_imported_in_readme",
];

/// File names that usually mark an entry point.
pub const ENTRY_NAMES: &[&str] = &[
    "cli.py",
    "main.py",
    "__main__.py",
    "app.py",
    "run.py",
    "manage.py",
    "server.py",
];

/// Files shorter than this many characters get a negative vote.
pub const TOO_SHORT_CHARS: usize = 200;

/// A class needs this many direct subclasses to earn a positive vote.
pub const INHERITED_THRESHOLD: usize = 3;

pub type Vote = i8;
pub const POSITIVE: Vote = 1;
pub const NEGATIVE: Vote = -1;
pub const ABSTAIN: Vote = 0;

/// Votes of every labeling function on every candidate file of one repo.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMatrix {
    pub repo_id: String,
    pub rows: Vec<String>,
    pub votes: Vec<[Vote; NUM_LFS]>,
    pub lf_names: Vec<String>,
}

impl LabelMatrix {
    pub fn new(repo_id: impl Into<String>, rows: Vec<String>, votes: Vec<[Vote; NUM_LFS]>) -> Self {
        assert_eq!(rows.len(), votes.len(), "one vote row per file");
        LabelMatrix {
            repo_id: repo_id.into(),
            rows,
            votes,
            lf_names: LF_NAMES.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, path: &str) -> Option<&[Vote; NUM_LFS]> {
        self.rows.iter().position(|r| r == path).map(|i| &self.votes[i])
    }

    pub fn column(&self, lf: usize) -> impl Iterator<Item = Vote> + '_ {
        self.votes.iter().map(move |r| r[lf])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("label matrix serializes")
    }
}

fn flag(cond: bool, vote: Vote) -> Vote {
    if cond {
        vote
    } else {
        ABSTAIN
    }
}

fn normalize_name(s: &str) -> String {
    s.to_lowercase().replace('-', "_")
}

/// Three-valued oracle column: +1 on hits, -1 on other files when there is
/// at least one hit, all abstain otherwise.
fn oracle_column(hits: &BTreeSet<usize>, n: usize) -> Vec<Vote> {
    if hits.is_empty() {
        return vec![ABSTAIN; n];
    }
    (0..n)
        .map(|i| if hits.contains(&i) { POSITIVE } else { NEGATIVE })
        .collect()
}

/// Applies all labeling functions to the candidate files of a repository.
///
/// Rows are the snapshot's Python files in path order, minus a root
/// `setup.py`. Files without facts or graph entries are skipped.
pub fn apply_labeling_functions(
    snapshot: &RepoSnapshot,
    facts: &FactsByPath,
    graph: &ImportGraph,
    oracle: &OracleInputs,
) -> LabelMatrix {
    let rows: Vec<&str> = snapshot
        .candidates()
        .map(|f| f.path())
        .filter(|p| facts.contains_key(*p) && graph.node(p).is_some())
        .collect();
    let n = rows.len();
    let index = ModuleIndex::new(rows.iter().copied());

    let entry_hits: BTreeSet<usize> = declared_entry_modules(oracle)
        .iter()
        .filter_map(|m| index.get(m))
        .collect();
    let readme_hits = oracle
        .reference_readme
        .as_deref()
        .map(|r| readme_hits(r, &index))
        .unwrap_or_default();
    let lf16 = oracle_column(&entry_hits, n);
    let lf17 = oracle_column(&readme_hits, n);
    let repo_name = snapshot.name().map(normalize_name);

    let votes = rows
        .iter()
        .enumerate()
        .map(|(i, path)| {
            let f = &facts[*path];
            let node = graph.node(path).expect("filtered above");
            let base = base_name(path);
            let base_lower = base.to_lowercase();
            let stem = base.strip_suffix(".py").unwrap_or(base);
            [
                flag(f.function_names.iter().any(|n| n.to_lowercase().contains("main")), POSITIVE),
                flag(f.has_arg_parser, POSITIVE),
                flag(f.has_web_framework, POSITIVE),
                flag(f.char_length < TOO_SHORT_CHARS, NEGATIVE),
                flag(base_lower.contains("main"), POSITIVE),
                flag(ENTRY_NAMES.contains(&base), POSITIVE),
                flag(base == "__init__.py", NEGATIVE),
                flag(base.starts_with("test_"), NEGATIVE),
                flag(node.is_root, POSITIVE),
                flag(node.is_leaf, NEGATIVE),
                flag(node.max_class_inherited >= INHERITED_THRESHOLD, POSITIVE),
                flag(repo_name.as_deref() == Some(normalize_name(stem).as_str()), POSITIVE),
                lf16[i],
                lf17[i],
            ]
        })
        .collect();

    LabelMatrix::new(
        snapshot.name().unwrap_or_default(),
        rows.into_iter().map(str::to_string).collect(),
        votes,
    )
}
