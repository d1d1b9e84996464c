//! Labeling functions over candidate files and the label model that turns
//! their noisy votes into per-file posteriors.

mod label_model;
mod lfs;
mod oracle;

pub use label_model::{
    fit_label_model, fit_votes, posterior, FitMeta, LabelModelConfig, LabelModelError,
    LabelModelKind, LabelModelParams, Posterior, VoteTable, ACCURACY_MAX, ACCURACY_MIN,
};
pub use lfs::{
    apply_labeling_functions, LabelMatrix, Vote, ABSTAIN, ENTRY_NAMES, INHERITED_THRESHOLD,
    LF_NAMES, NEGATIVE, NUM_LFS, POSITIVE, TOO_SHORT_CHARS,
};
pub use oracle::{
    declared_entry_modules, pyproject_entry_modules, readme_imports, setup_py_entry_modules,
    OracleInputs, ReadmeImport,
};
