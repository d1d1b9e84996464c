//! Seeded generators for synthetic training and test data: vote matrices
//! with planted labeling-function parameters, and small Python repositories
//! with a planted representative file.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::repo_model::{RepoError, RepoSnapshot, SourceFile};
use crate::weak_supervision::{Vote, ABSTAIN, NEGATIVE, POSITIVE};

/// Corpus the shipped model is trained on.
pub const PRETRAINED_CORPUS_SIZE: usize = 200;
pub const PRETRAINED_CORPUS_SEED: u64 = 2023;

/// Votes drawn from the two-class model with known parameters.
#[derive(Debug, Clone)]
pub struct PlantedVotes {
    pub votes: Vec<Vec<Vote>>,
    pub labels: Vec<bool>,
    pub accuracies: Vec<f64>,
    pub propensities: Vec<f64>,
    pub class_prior: f64,
}

#[derive(Debug, Clone)]
pub struct PlantedVoteSpec {
    pub num_lfs: usize,
    pub rows: usize,
    pub class_prior: f64,
    pub accuracy_range: (f64, f64),
    pub propensity_range: (f64, f64),
}

impl Default for PlantedVoteSpec {
    fn default() -> Self {
        PlantedVoteSpec {
            num_lfs: 8,
            rows: 2000,
            class_prior: 0.05,
            accuracy_range: (0.6, 0.95),
            propensity_range: (0.2, 0.6),
        }
    }
}

pub fn planted_votes(spec: &PlantedVoteSpec, seed: u64) -> PlantedVotes {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a_lo, a_hi) = spec.accuracy_range;
    let (b_lo, b_hi) = spec.propensity_range;
    let accuracies: Vec<f64> = (0..spec.num_lfs).map(|_| rng.gen_range(a_lo..=a_hi)).collect();
    let propensities: Vec<f64> = (0..spec.num_lfs).map(|_| rng.gen_range(b_lo..=b_hi)).collect();
    let mut votes = Vec::with_capacity(spec.rows);
    let mut labels = Vec::with_capacity(spec.rows);
    for _ in 0..spec.rows {
        let y = rng.gen_bool(spec.class_prior);
        let row = (0..spec.num_lfs)
            .map(|j| {
                if !rng.gen_bool(propensities[j]) {
                    return ABSTAIN;
                }
                let correct = rng.gen_bool(accuracies[j]);
                if correct == y {
                    POSITIVE
                } else {
                    NEGATIVE
                }
            })
            .collect();
        votes.push(row);
        labels.push(y);
    }
    PlantedVotes {
        votes,
        labels,
        accuracies,
        propensities,
        class_prior: spec.class_prior,
    }
}

/// A generated repository. `planted` is the path of its representative file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntheticRepo {
    pub name: String,
    pub files: Vec<(String, String)>,
    pub planted: String,
}

impl SyntheticRepo {
    /// Snapshot of every file, readme and setup script included.
    pub fn snapshot(&self) -> Result<RepoSnapshot, RepoError> {
        let files = self
            .files
            .iter()
            .map(|(p, c)| SourceFile::new(p.clone(), c.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        RepoSnapshot::new(Some(self.name.clone()), files)
    }

    pub fn write_to(&self, dir: &Path) -> io::Result<()> {
        for (path, content) in &self.files {
            let target = dir.join(path);
            if let Some(parent) = target.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(target, content)?;
        }
        Ok(())
    }
}

const WORDS: &[&str] = &[
    "core", "utils", "models", "config", "storage", "parser", "engine", "client", "handlers", "helpers",
    "types", "schema", "render", "cache", "metrics", "plugins", "tasks", "loader", "network", "formats",
    "events", "session", "registry", "query", "layout", "codec", "stream", "graph", "index", "auth",
];

const SYLLABLES: &[&str] = &[
    "py", "lo", "ra", "ven", "tor", "mi", "ka", "zen", "dra", "flo", "quil", "bex", "nor", "sil", "tam", "vo",
];

const PLANTED_NAMES: &[&str] = &["cli.py", "__main__.py", "main.py", "app.py", "run.py"];

fn project_name(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(2..=3);
    (0..n).map(|_| *SYLLABLES.choose(rng).unwrap()).collect()
}

fn camel(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(c) => c.to_ascii_uppercase().to_string() + chars.as_str(),
        None => String::new(),
    }
}

fn filler(rng: &mut ChaCha8Rng, name: &str, n: usize) -> String {
    let mut out = String::new();
    for i in 0..n {
        let k = rng.gen_range(1..50);
        out.push_str(&format!(
            "\ndef {name}_step_{i}(value, scale={k}):\n    \"\"\"Apply step {i}.\"\"\"\n    result = value * scale\n    return result + {k}\n"
        ));
    }
    out
}

struct Module {
    word: String,
    class_name: String,
}

/// Generates one repository with a planted entry-point file.
///
/// The planted file parses arguments, defines `main`, has an entry-point
/// style name and is imported by nothing. Decoys include tests, helper
/// scripts with their own `main`, examples, a base-class hub and package
/// initialisers. `setup.py` and the readme point at the planted file most of
/// the time.
pub fn synthetic_repo(seed: u64) -> SyntheticRepo {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = project_name(&mut rng);
    let pkg = name.clone();
    let mut files: Vec<(String, String)> = Vec::new();

    let mut words: Vec<&str> = WORDS.to_vec();
    words.shuffle(&mut rng);
    let n_mod = rng.gen_range(3..=8);
    let modules: Vec<Module> = words[..n_mod]
        .iter()
        .map(|w| Module {
            word: w.to_string(),
            class_name: camel(w),
        })
        .collect();

    let has_base = rng.gen_bool(0.5);
    if has_base {
        let content = format!(
            "\"\"\"Base classes.\"\"\"\n\n\nclass Base{c}:\n    \"\"\"Common interface.\"\"\"\n\n    def run(self):\n        raise NotImplementedError\n\n    def close(self):\n        pass\n",
            c = camel(&pkg)
        );
        files.push((format!("{pkg}/base.py"), content));
    }

    for (i, m) in modules.iter().enumerate() {
        let mut src = format!("\"\"\"{} support for {}.\"\"\"\n\nimport os\nimport json\n", m.word, pkg);
        let later: Vec<&Module> = modules[i + 1..].iter().collect();
        let k = rng.gen_range(0..=later.len().min(2));
        for dep in later.choose_multiple(&mut rng, k) {
            src.push_str(&format!("from {pkg}.{} import {}\n", dep.word, dep.class_name));
        }
        let inherits = has_base && rng.gen_bool(0.6);
        if inherits {
            src.push_str(&format!("from {pkg}.base import Base{}\n", camel(&pkg)));
        }
        let parent = if inherits { format!("Base{}", camel(&pkg)) } else { "object".into() };
        src.push_str(&format!(
            "\n\nclass {}({parent}):\n    def __init__(self, path=None):\n        self.path = path or os.getcwd()\n\n    def run(self):\n        return json.dumps({{\"path\": self.path}})\n",
            m.class_name
        ));
        let n_fill = rng.gen_range(1..=6);
        src.push_str(&filler(&mut rng, &m.word, n_fill));
        files.push((format!("{pkg}/{}.py", m.word), src));
    }

    let init = if rng.gen_bool(0.5) {
        String::new()
    } else {
        format!("\"\"\"{pkg} package.\"\"\"\n\n__version__ = \"0.{}.0\"\n", rng.gen_range(1..20))
    };
    files.push((format!("{pkg}/__init__.py"), init));

    // planted representative file
    let planted_name = *PLANTED_NAMES.choose(&mut rng).unwrap();
    let root_level = planted_name == "main.py" && rng.gen_bool(0.3);
    let planted = if root_level {
        planted_name.to_string()
    } else {
        format!("{pkg}/{planted_name}")
    };
    let k = rng.gen_range(1..=modules.len().min(3));
    let mut src = format!("\"\"\"Command line interface for {name}.\"\"\"\n\nimport argparse\nimport sys\n\n");
    for m in modules.choose_multiple(&mut rng, k) {
        src.push_str(&format!("from {pkg}.{} import {}\n", m.word, m.class_name));
    }
    let main_fn = if rng.gen_bool(0.9) { "main" } else { "cli_main" };
    src.push_str(&format!(
        "\n\ndef build_parser():\n    parser = argparse.ArgumentParser(prog=\"{name}\")\n    parser.add_argument(\"path\")\n    parser.add_argument(\"--verbose\", action=\"store_true\")\n    return parser\n\n\ndef {main_fn}(argv=None):\n    args = build_parser().parse_args(argv)\n    if args.verbose:\n        print(args.path, file=sys.stderr)\n    return 0\n\n\nif __name__ == \"__main__\":\n    sys.exit({main_fn}())\n"
    ));
    files.push((planted.clone(), src));

    // tests
    for m in modules.iter().filter(|_| rng.gen_bool(0.5)) {
        let src = format!(
            "import pytest\n\nfrom {pkg}.{w} import {c}\n\n\ndef test_{w}_runs():\n    assert {c}().run()\n\n\ndef test_{w}_path(tmp_path):\n    assert {c}(str(tmp_path)).path == str(tmp_path)\n",
            w = m.word,
            c = m.class_name
        );
        files.push((format!("tests/test_{}.py", m.word), src));
    }
    if rng.gen_bool(0.3) {
        files.push(("tests/__init__.py".into(), String::new()));
    }

    // helper scripts with a main of their own
    let n_scripts = rng.gen_range(0..=2);
    let stems: Vec<&str> = ["benchmark", "migrate", "export", "profile", "run", "manage"]
        .choose_multiple(&mut rng, n_scripts)
        .copied()
        .collect();
    for stem in stems {
        let m = modules.choose(&mut rng).unwrap();
        let with_args = rng.gen_bool(0.4);
        let mut src = format!("import sys\n\nfrom {pkg}.{} import {}\n", m.word, m.class_name);
        if with_args {
            src.push_str("import argparse\n");
        }
        src.push_str(&format!(
            "\n\ndef main():\n    obj = {}(sys.argv[1])\n    print(obj.run())\n",
            m.class_name
        ));
        if with_args {
            src.push_str("\n\ndef parse():\n    return argparse.ArgumentParser().parse_args()\n");
        }
        files.push((format!("scripts/{stem}.py"), src));
    }

    if rng.gen_bool(0.3) {
        let m = modules.choose(&mut rng).unwrap();
        let src = format!(
            "\"\"\"Minimal example.\"\"\"\nfrom {pkg}.{} import {}\n\nprint({}().run())\n",
            m.word, m.class_name, m.class_name
        );
        files.push(("examples/basic.py".into(), src));
    }
    if rng.gen_bool(0.3) {
        files.push((
            "docs/conf.py".into(),
            format!("project = \"{name}\"\nextensions = [\"sphinx.ext.autodoc\"]\nhtml_theme = \"alabaster\"\n"),
        ));
    }

    // oracle evidence
    let planted_module = planted.trim_end_matches(".py").replace('/', ".");
    let setup = if rng.gen_bool(0.75) {
        format!(
            "from setuptools import setup, find_packages\n\nsetup(\n    name=\"{name}\",\n    packages=find_packages(),\n    entry_points={{\"console_scripts\": [\"{name}={planted_module}:{main_fn}\"]}},\n)\n"
        )
    } else {
        format!("from setuptools import setup\n\nsetup(name=\"{name}\", packages=[\"{pkg}\"])\n")
    };
    files.push(("setup.py".into(), setup));

    let mut readme = format!("# {name}\n\nA small tool for working with {} data.\n\n## Usage\n\n```\n$ {name} --help\n```\n", modules[0].word);
    if rng.gen_bool(0.6) {
        readme.push_str(&format!("\n```python\nfrom {planted_module} import {main_fn}\n{main_fn}([\"data\"])\n```\n"));
    }
    if rng.gen_bool(0.25) {
        let m = modules.choose(&mut rng).unwrap();
        readme.push_str(&format!("\nLibrary use:\n\n```python\nfrom {pkg}.{} import {}\n```\n", m.word, m.class_name));
    }
    files.push(("README.md".into(), readme));

    files.sort();
    SyntheticRepo { name, files, planted }
}

/// Writes each repository to `dir/<name>/` and a `manifest.json` listing
/// them. Repositories from index `eval_from` on are tagged for evaluation.
pub fn write_corpus(dir: &Path, repos: &[SyntheticRepo], eval_from: usize) -> io::Result<PathBuf> {
    let mut entries = Vec::with_capacity(repos.len());
    for (i, repo) in repos.iter().enumerate() {
        repo.write_to(&dir.join(&repo.name))?;
        entries.push(serde_json::json!({
            "id": repo.name,
            "path": repo.name,
            "split": if i < eval_from { "train" } else { "eval" },
        }));
    }
    let manifest = dir.join("manifest.json");
    let text = serde_json::to_string_pretty(&serde_json::json!({ "repos": entries }))?;
    fs::write(&manifest, text + "\n")?;
    Ok(manifest)
}

/// `count` repositories; repository `i` is generated from a seed derived
/// from `seed` and `i`.
pub fn synthetic_corpus(count: usize, seed: u64) -> Vec<SyntheticRepo> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let mut repo = synthetic_repo(rng.gen());
            repo.name = format!("{}{i}", repo.name);
            repo
        })
        .collect()
}
