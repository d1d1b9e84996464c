//! Static facts about Python files and the repository import graph.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::repo_model::RepoSnapshot;

mod facts;
mod graph;

pub use facts::{
    extract_code_facts, module_path, ClassDef, CodeFacts, ImportStatement, ARG_PARSER_MODULES,
    WEB_FRAMEWORK_MODULES,
};
pub use graph::{build_import_graph, GraphNode, ImportGraph, MAX_DIST};
pub(crate) use graph::ModuleIndex;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("not a Python file: {0}")]
    NotPythonFile(String),
    #[error("no code facts for Python file {0}")]
    MissingFacts(String),
}

pub type FactsByPath = BTreeMap<String, CodeFacts>;

/// Extracts facts for every Python file and builds the import graph.
pub fn analyze(snapshot: &RepoSnapshot) -> Result<(FactsByPath, ImportGraph), AnalysisError> {
    let facts = snapshot
        .python_files()
        .map(|f| extract_code_facts(f).map(|facts| (f.path().to_string(), facts)))
        .collect::<Result<FactsByPath, _>>()?;
    let graph = build_import_graph(snapshot, &facts)?;
    Ok((facts, graph))
}
