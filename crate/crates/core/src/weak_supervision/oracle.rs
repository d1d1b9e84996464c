//! Training-time-only evidence: declared console entry points and imports
//! shown in the reference readme.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use regex::Regex;

use crate::code_analysis::ModuleIndex;
use crate::repo_model::RepoSnapshot;

/// Oracle inputs for one repository. Any of them may be missing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleInputs {
    pub setup_py: Option<String>,
    pub pyproject: Option<String>,
    pub reference_readme: Option<String>,
}

impl OracleInputs {
    /// Collects root-level `setup.py`, `pyproject.toml` and the reference
    /// readme (held-out one first, then a root readme file).
    pub fn from_snapshot(snapshot: &RepoSnapshot) -> Self {
        let readme = snapshot.reference_readme().map(str::to_string).or_else(|| {
            snapshot
                .files()
                .iter()
                .filter(|f| f.is_root_level())
                .find(|f| {
                    let lower = f.path().to_lowercase();
                    lower == "readme" || lower.starts_with("readme.")
                })
                .map(|f| f.content().to_string())
        });
        OracleInputs {
            setup_py: snapshot.file("setup.py").map(|f| f.content().to_string()),
            pyproject: snapshot.file("pyproject.toml").map(|f| f.content().to_string()),
            reference_readme: readme,
        }
    }
}

/// Module names declared as console entry points.
pub fn declared_entry_modules(oracle: &OracleInputs) -> Vec<String> {
    let mut modules = BTreeSet::new();
    if let Some(setup) = &oracle.setup_py {
        modules.extend(setup_py_entry_modules(setup));
    }
    if let Some(pyproject) = &oracle.pyproject {
        modules.extend(pyproject_entry_modules(pyproject));
    }
    modules.into_iter().collect()
}

/// Textual scan of `entry_points=...` in a setup script. The script is never
/// executed.
pub fn setup_py_entry_modules(setup: &str) -> Vec<String> {
    static SPEC: OnceLock<Regex> = OnceLock::new();
    let spec = SPEC.get_or_init(|| {
        Regex::new(r#"["']\s*[\w.\-]+\s*=\s*([A-Za-z_][\w.]*)\s*(?::\s*[\w.]+)?\s*(?:\[[^\]]*\])?\s*["']"#)
            .unwrap()
    });
    // unquoted `name = module:attr` lines inside an ini-style string
    static INI: OnceLock<Regex> = OnceLock::new();
    let ini = INI.get_or_init(|| {
        Regex::new(r"(?m)^\s*[\w.\-]+\s*=\s*([A-Za-z_][\w.]*)\s*:\s*[\w.]+\s*(?:\[[^\]]*\])?\s*$").unwrap()
    });
    let Some(start) = setup.find("entry_points") else {
        return Vec::new();
    };
    let text = &setup[start..];
    let mut found: Vec<(usize, String)> = spec
        .captures_iter(text)
        .chain(ini.captures_iter(text))
        .map(|c| (c.get(1).unwrap().start(), c[1].to_string()))
        .collect();
    found.sort();
    found.dedup_by(|a, b| a.0 == b.0);
    found.into_iter().map(|(_, m)| m).collect()
}

/// `[project.scripts]` and `[tool.poetry.scripts]` tables.
pub fn pyproject_entry_modules(pyproject: &str) -> Vec<String> {
    let Ok(doc) = pyproject.parse::<toml::Table>() else {
        return Vec::new();
    };
    let tables = [
        doc.get("project").and_then(|p| p.get("scripts")),
        doc.get("tool")
            .and_then(|t| t.get("poetry"))
            .and_then(|p| p.get("scripts")),
    ];
    tables
        .into_iter()
        .flatten()
        .filter_map(|t| t.as_table())
        .flat_map(|t| t.values())
        .filter_map(|v| v.as_str())
        .filter_map(|s| s.split(':').next())
        .map(|m| m.trim().to_string())
        .filter(|m| !m.is_empty())
        .collect()
}

/// An import found in readme text: the module and, for `from` imports,
/// the imported names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadmeImport {
    pub module: String,
    pub names: Vec<String>,
}

pub fn readme_imports(readme: &str) -> Vec<ReadmeImport> {
    static FROM: OnceLock<Regex> = OnceLock::new();
    static IMPORT: OnceLock<Regex> = OnceLock::new();
    let from = FROM.get_or_init(|| {
        Regex::new(r"(?:^|[\s>;`])from\s+([A-Za-z_][\w.]*)\s+import\s+\(?\s*([A-Za-z_*][\w\s,*]*)").unwrap()
    });
    let import = IMPORT.get_or_init(|| {
        Regex::new(r"(?:^|[\s>;`])import\s+([A-Za-z_][\w.]*(?:\s+as\s+\w+)?(?:\s*,\s*[A-Za-z_][\w.]*(?:\s+as\s+\w+)?)*)")
            .unwrap()
    });
    let mut out = Vec::new();
    for line in readme.lines() {
        let mut consumed = Vec::new();
        for c in from.captures_iter(line) {
            let m = c.get(0).unwrap();
            consumed.push(m.start()..m.end());
            let names = c[2]
                .split(',')
                .filter_map(|n| n.split_whitespace().next())
                .filter(|n| *n != "*")
                .map(str::to_string)
                .collect();
            out.push(ReadmeImport {
                module: c[1].trim_end_matches('.').to_string(),
                names,
            });
        }
        for c in import.captures_iter(line) {
            let start = c.get(0).unwrap().start();
            if consumed.iter().any(|r| r.contains(&start)) {
                continue;
            }
            for item in c[1].split(',') {
                if let Some(module) = item.split_whitespace().next().map(|m| m.trim_end_matches('.')) {
                    out.push(ReadmeImport {
                        module: module.to_string(),
                        names: Vec::new(),
                    });
                }
            }
        }
    }
    out
}

/// Indices (into `index`'s path list) of files imported by readme text.
///
/// `from X import n` hits `X.n` when that is a file, else the longest file
/// module that is `X` or a package prefix of it. `import X` hits the longest
/// such prefix.
pub(crate) fn readme_hits(readme: &str, index: &ModuleIndex) -> BTreeSet<usize> {
    let mut hits = BTreeSet::new();
    for imp in readme_imports(readme) {
        let mut module_hit = imp.names.is_empty();
        for name in &imp.names {
            match index.get(&format!("{}.{}", imp.module, name)) {
                Some(i) => {
                    hits.insert(i);
                }
                None => module_hit = true,
            }
        }
        if module_hit {
            hits.extend(index.longest_prefix(&imp.module));
        }
    }
    hits
}
