//! Repository snapshots: enumerating a working tree into an immutable,
//! canonically ordered list of text files.

use std::collections::HashSet;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use walkdir::WalkDir;

#[derive(Debug, Error)]
pub enum RepoError {
    #[error("repository root not found: {0}")]
    RootNotFound(PathBuf),
    #[error("repository too large: {limit} limit of {max} exceeded (observed {observed})")]
    RepoTooLarge {
        limit: LimitKind,
        max: u64,
        observed: u64,
    },
    #[error("invalid file path {path:?}: {reason}")]
    InvalidPath { path: String, reason: &'static str },
    #[error("duplicate file path {0:?}")]
    DuplicatePath(String),
    #[error("i/o error under {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitKind {
    RepoBytes,
    FileCount,
    FileBytes,
}

impl std::fmt::Display for LimitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LimitKind::RepoBytes => "max_repo_bytes",
            LimitKind::FileCount => "max_file_count",
            LimitKind::FileBytes => "max_file_bytes",
        })
    }
}

/// A single text file of a repository.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSourceFile")]
pub struct SourceFile {
    path: String,
    content: String,
    #[serde(skip_deserializing)]
    byte_size: u64,
    #[serde(skip_deserializing)]
    is_python: bool,
}

#[derive(Deserialize)]
struct RawSourceFile {
    path: String,
    content: String,
}

impl TryFrom<RawSourceFile> for SourceFile {
    type Error = RepoError;

    fn try_from(raw: RawSourceFile) -> Result<Self, Self::Error> {
        SourceFile::new(raw.path, raw.content)
    }
}

impl SourceFile {
    /// Builds a file from a repo-relative, forward-slash separated path.
    pub fn new(path: impl Into<String>, content: impl Into<String>) -> Result<Self, RepoError> {
        let path = path.into();
        validate_path(&path)?;
        let content = content.into();
        Ok(SourceFile {
            byte_size: content.len() as u64,
            is_python: path.ends_with(".py"),
            path,
            content,
        })
    }

    pub fn path(&self) -> &str {
        &self.path
    }

    pub fn content(&self) -> &str {
        &self.content
    }

    pub fn byte_size(&self) -> u64 {
        self.byte_size
    }

    pub fn is_python(&self) -> bool {
        self.is_python
    }

    /// Final path segment.
    pub fn base_name(&self) -> &str {
        base_name(&self.path)
    }

    /// Number of `/` separators in the path.
    pub fn dir_depth(&self) -> usize {
        self.path.matches('/').count()
    }

    /// True for files living directly in the repository root.
    pub fn is_root_level(&self) -> bool {
        !self.path.contains('/')
    }
}

pub(crate) fn base_name(path: &str) -> &str {
    path.rsplit('/').next().unwrap_or(path)
}

fn validate_path(path: &str) -> Result<(), RepoError> {
    let fail = |reason| {
        Err(RepoError::InvalidPath {
            path: path.to_string(),
            reason,
        })
    };
    if path.is_empty() {
        return fail("empty path");
    }
    if path.starts_with('/') {
        return fail("path must be relative");
    }
    if path.contains('\\') {
        return fail("path must use forward slashes");
    }
    for segment in path.split('/') {
        match segment {
            "" => return fail("empty path segment"),
            "." | ".." => return fail("dot segments are not allowed"),
            _ => {}
        }
    }
    Ok(())
}

/// The repository under analysis. Files are unique by path and kept in
/// lexicographic path order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepoSnapshot {
    name: Option<String>,
    files: Vec<SourceFile>,
    reference_readme: Option<String>,
}

impl RepoSnapshot {
    pub fn new(name: Option<String>, mut files: Vec<SourceFile>) -> Result<Self, RepoError> {
        files.sort_by(|a, b| a.path.cmp(&b.path));
        for pair in files.windows(2) {
            if pair[0].path == pair[1].path {
                return Err(RepoError::DuplicatePath(pair[0].path.clone()));
            }
        }
        Ok(RepoSnapshot {
            name,
            files,
            reference_readme: None,
        })
    }

    pub fn with_reference_readme(mut self, readme: Option<String>) -> Self {
        self.reference_readme = readme;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn files(&self) -> &[SourceFile] {
        &self.files
    }

    pub fn reference_readme(&self) -> Option<&str> {
        self.reference_readme.as_deref()
    }

    pub fn file(&self, path: &str) -> Option<&SourceFile> {
        self.files
            .binary_search_by(|f| f.path.as_str().cmp(path))
            .ok()
            .map(|i| &self.files[i])
    }

    pub fn python_files(&self) -> impl Iterator<Item = &SourceFile> {
        self.files.iter().filter(|f| f.is_python)
    }

    /// Python files eligible to be picked as the representative file.
    /// A root-level `setup.py` is never a candidate.
    pub fn candidates(&self) -> impl Iterator<Item = &SourceFile> {
        self.python_files().filter(|f| !is_setup_py(f))
    }

    pub fn paths(&self) -> Vec<String> {
        self.files.iter().map(|f| f.path.clone()).collect()
    }
}

fn is_setup_py(file: &SourceFile) -> bool {
    file.path == "setup.py"
}

fn is_root_readme(file: &SourceFile) -> bool {
    if !file.is_root_level() {
        return false;
    }
    let lower = file.path.to_lowercase();
    lower == "readme" || lower.starts_with("readme.")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanLimits {
    pub max_repo_bytes: u64,
    pub max_file_count: u64,
    pub max_file_bytes: u64,
}

impl Default for ScanLimits {
    fn default() -> Self {
        ScanLimits {
            max_repo_bytes: 500 * 1024 * 1024,
            max_file_count: 1_000,
            max_file_bytes: 4 * 1024 * 1024,
        }
    }
}

/// Enumerates every regular text file below `root`.
///
/// `.git/` is skipped, symlinks are not followed, and files that contain a
/// NUL byte or are not valid UTF-8 are left out. Limits are checked against
/// all regular files, text or not.
pub fn scan_repository(root: &Path, limits: &ScanLimits) -> Result<RepoSnapshot, RepoError> {
    if !root.is_dir() {
        return Err(RepoError::RootNotFound(root.to_path_buf()));
    }
    let name = fs::canonicalize(root)
        .ok()
        .and_then(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()));

    let walker = WalkDir::new(root)
        .follow_links(false)
        .sort_by_file_name()
        .into_iter()
        .filter_entry(|e| !(e.depth() > 0 && e.file_type().is_dir() && e.file_name() == ".git"));

    let mut files = Vec::new();
    let mut total_bytes = 0u64;
    let mut count = 0u64;
    for entry in walker {
        let entry = entry.map_err(|e| RepoError::Io {
            path: e.path().map(Path::to_path_buf).unwrap_or_else(|| root.to_path_buf()),
            source: e.into_io_error().unwrap_or_else(|| std::io::Error::other("walk error")),
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let io_err = |source| RepoError::Io {
            path: entry.path().to_path_buf(),
            source,
        };
        let size = entry.metadata().map_err(|e| io_err(e.into()))?.len();

        count += 1;
        total_bytes += size;
        check_limit(LimitKind::FileCount, limits.max_file_count, count)?;
        check_limit(LimitKind::RepoBytes, limits.max_repo_bytes, total_bytes)?;
        check_limit(LimitKind::FileBytes, limits.max_file_bytes, size)?;

        let Some(rel) = relative_path(root, entry.path()) else {
            log::debug!("skipping non-UTF-8 path {}", entry.path().display());
            continue;
        };
        let mut bytes = Vec::with_capacity(size as usize);
        fs::File::open(entry.path())
            .and_then(|mut f| f.read_to_end(&mut bytes))
            .map_err(io_err)?;
        if bytes.contains(&0) {
            continue;
        }
        let Ok(content) = String::from_utf8(bytes) else {
            continue;
        };
        files.push(SourceFile::new(rel, content)?);
    }
    RepoSnapshot::new(name, files)
}

fn check_limit(limit: LimitKind, max: u64, observed: u64) -> Result<(), RepoError> {
    if observed > max {
        return Err(RepoError::RepoTooLarge {
            limit,
            max,
            observed,
        });
    }
    Ok(())
}

fn relative_path(root: &Path, path: &Path) -> Option<String> {
    let rel = path.strip_prefix(root).ok()?;
    let parts: Option<Vec<&str>> = rel.components().map(|c| c.as_os_str().to_str()).collect();
    Some(parts?.join("/"))
}

/// Removes the root-level readme(s) and `setup.py` from the file list.
///
/// The first readme in path order becomes the reference readme. Running it
/// again on its own output changes nothing.
pub fn strip_held_out(snapshot: &RepoSnapshot) -> RepoSnapshot {
    let mut reference = snapshot.reference_readme.clone();
    let mut files = Vec::with_capacity(snapshot.files.len());
    for file in &snapshot.files {
        if is_root_readme(file) {
            if reference.is_none() {
                reference = Some(file.content.clone());
            }
        } else if !is_setup_py(file) {
            files.push(file.clone());
        }
    }
    RepoSnapshot {
        name: snapshot.name.clone(),
        files,
        reference_readme: reference,
    }
}

/// Checks that every file of `snapshot` has a distinct path. Used by callers
/// that assemble snapshots from untrusted uploads.
pub fn unique_paths(files: &[SourceFile]) -> bool {
    let mut seen = HashSet::with_capacity(files.len());
    files.iter().all(|f| seen.insert(f.path.as_str()))
}
