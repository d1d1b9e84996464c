//! Representative-code identification and readme generation for Python
//! repositories.
//!
//! The numeric core is generic over [`scalar::Scalar`] (`f32` or `f64`);
//! the aliases below fix it to `f64`.

pub mod code_analysis;
pub mod evaluation;
pub mod generation;
pub mod pipeline;
pub mod ranker;
pub mod repo_model;
pub mod scalar;
pub mod synthetic;
pub mod weak_supervision;

pub type RankModel = ranker::RankModel<f64>;
pub type RankingGroup = ranker::RankingGroup<f64>;
pub type LabelModelParams = weak_supervision::LabelModelParams<f64>;
pub type Posterior = weak_supervision::Posterior<f64>;
pub type RougeScore = evaluation::RougeScore<f64>;
pub type RougeComponent = evaluation::RougeComponent<f64>;
pub type TrainingOutcome = pipeline::TrainingOutcome<f64>;
