//! Two-class generative label model with abstention, fitted by EM.
//!
//! Each labeling function `j` is described by a propensity `beta_j` (chance
//! of voting at all) and an accuracy `theta_j` (chance a cast vote equals the
//! true class). Votes are independent given the class, so
//!
//! ```text
//! p(y = +1 | row) ∝ prior * Π_{j votes} theta_j^[vote = +1] (1 - theta_j)^[vote = -1]
//! ```
//!
//! and symmetrically for `y = -1`.
//!
//! [`LabelModelKind::ClassConditional`] drops the symmetry: every function
//! gets a full distribution over `{+1, -1, abstain}` for each class (the
//! Dawid-Skene confusion matrix with abstention as a third outcome). Most
//! labeling functions only ever vote one way, which the symmetric model
//! cannot express; the class-conditional one can.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;

use super::lfs::{LabelMatrix, Vote, LF_NAMES, NUM_LFS};

pub const ACCURACY_MIN: f64 = 0.05;
pub const ACCURACY_MAX: f64 = 0.95;
const PRIOR_EPS: f64 = 1e-6;
const PROPENSITY_MIN: f64 = 1e-6;

#[derive(Debug, Error, PartialEq)]
pub enum LabelModelError {
    #[error("every vote abstains; nothing to fit")]
    DegenerateInput,
    #[error("expected {expected} columns, found {found}")]
    ColumnMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelModelKind {
    /// One accuracy per function, shared by both classes.
    #[default]
    Symmetric,
    /// Separate vote distributions per class.
    ClassConditional,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelModelConfig {
    pub max_iter: usize,
    pub tol: f64,
    /// Recorded with the fit. The procedure itself draws no random numbers.
    pub seed: u64,
    pub class_prior_init: f64,
    #[serde(default)]
    pub kind: LabelModelKind,
    /// Pseudo-count added to every cell of the class-conditional tables.
    #[serde(default = "default_smoothing")]
    pub smoothing: f64,
}

fn default_smoothing() -> f64 {
    1.0
}

impl Default for LabelModelConfig {
    fn default() -> Self {
        LabelModelConfig {
            max_iter: 100,
            tol: 1e-6,
            seed: 0,
            class_prior_init: 0.05,
            kind: LabelModelKind::Symmetric,
            smoothing: default_smoothing(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct FitMeta<F: Scalar> {
    pub iterations: usize,
    pub final_log_likelihood: F,
    /// Objective of the parameters entering each E-step: the
    /// log-likelihood, plus the log Dirichlet prior of the tables for the
    /// class-conditional model.
    pub log_likelihood_trace: Vec<F>,
    pub converged: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct LabelModelParams<F: Scalar> {
    pub class_prior: F,
    pub accuracies: Vec<F>,
    pub propensities: Vec<F>,
    pub lf_names: Vec<String>,
    pub fit_meta: FitMeta<F>,
    /// Present for class-conditional models; replaces `accuracies` and
    /// `propensities` in the posterior, which then only summarize the fit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vote_tables: Option<Vec<VoteTable<F>>>,
}

/// Vote distribution of one labeling function given each class, indexed by
/// outcome: `[+1, -1, abstain]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct VoteTable<F: Scalar> {
    pub given_positive: [F; 3],
    pub given_negative: [F; 3],
}

fn outcome(v: Vote) -> usize {
    match v.signum() {
        1 => 0,
        -1 => 1,
        _ => 2,
    }
}

impl<F: Scalar> LabelModelParams<F> {
    pub fn num_lfs(&self) -> usize {
        self.accuracies.len()
    }

    /// `p(y = +1 | votes)` for one row.
    pub fn posterior_row(&self, row: &[Vote]) -> F {
        let (log_pos, log_neg) = self.class_log_scores(row);
        sigmoid(log_pos - log_neg)
    }

    /// Unnormalized log joint of the row with each class.
    fn class_log_scores(&self, row: &[Vote]) -> (F, F) {
        let mut log_pos = self.class_prior.ln();
        let mut log_neg = (F::one() - self.class_prior).ln();
        if let Some(tables) = &self.vote_tables {
            for (t, &v) in tables.iter().zip(row) {
                let k = outcome(v);
                log_pos = log_pos + t.given_positive[k].ln();
                log_neg = log_neg + t.given_negative[k].ln();
            }
            return (log_pos, log_neg);
        }
        for (j, &v) in row.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let acc = self.accuracies[j].ln();
            let err = (F::one() - self.accuracies[j]).ln();
            if v > 0 {
                log_pos = log_pos + acc;
                log_neg = log_neg + err;
            } else {
                log_pos = log_pos + err;
                log_neg = log_neg + acc;
            }
        }
        (log_pos, log_neg)
    }

    /// Log marginal likelihood of one row, propensity terms included.
    fn row_log_likelihood(&self, row: &[Vote]) -> F {
        let (a, b) = self.class_log_scores(row);
        let mut ll = log_add_exp(a, b);
        if self.vote_tables.is_some() {
            return ll;
        }
        for (j, &v) in row.iter().enumerate() {
            let beta = self.propensities[j];
            ll = ll + if v == 0 { (F::one() - beta).ln() } else { beta.ln() };
        }
        ll
    }

    /// Log density of the tables under the symmetric Dirichlet smoothing
    /// prior, up to a constant. Zero for the symmetric model.
    fn log_prior(&self, smoothing: F) -> F {
        match &self.vote_tables {
            Some(tables) => {
                smoothing
                    * tables
                        .iter()
                        .flat_map(|t| t.given_positive.iter().chain(&t.given_negative))
                        .map(|p| p.ln())
                        .sum::<F>()
            }
            None => F::zero(),
        }
    }

    pub fn log_likelihood<'a>(&self, rows: impl IntoIterator<Item = &'a [Vote]>) -> F {
        rows.into_iter().map(|r| self.row_log_likelihood(r)).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("params serialize")
    }
}

fn sigmoid<F: Scalar>(x: F) -> F {
    if x >= F::zero() {
        F::one() / (F::one() + (-x).exp())
    } else {
        let e = x.exp();
        e / (F::one() + e)
    }
}

fn log_add_exp<F: Scalar>(a: F, b: F) -> F {
    let m = a.max(b);
    if m == F::neg_infinity() {
        return m;
    }
    m + ((a - m).exp() + (b - m).exp()).ln()
}

fn clamp<F: Scalar>(x: F, lo: f64, hi: f64) -> F {
    x.max(F::lit(lo)).min(F::lit(hi))
}

/// Fits the label model on the rows of all given matrices.
pub fn fit_label_model<F: Scalar>(
    matrices: &[LabelMatrix],
    config: &LabelModelConfig,
) -> Result<LabelModelParams<F>, LabelModelError> {
    let rows: Vec<&[Vote]> = matrices
        .iter()
        .flat_map(|m| m.votes.iter().map(|r| r.as_slice()))
        .collect();
    let mut params = fit_votes::<F>(&rows, NUM_LFS, config)?;
    params.lf_names = LF_NAMES.iter().map(|s| s.to_string()).collect();
    Ok(params)
}

/// Fits the label model on raw vote rows of width `num_lfs`.
pub fn fit_votes<F: Scalar>(
    rows: &[&[Vote]],
    num_lfs: usize,
    config: &LabelModelConfig,
) -> Result<LabelModelParams<F>, LabelModelError> {
    if let Some(bad) = rows.iter().find(|r| r.len() != num_lfs) {
        return Err(LabelModelError::ColumnMismatch {
            expected: num_lfs,
            found: bad.len(),
        });
    }
    if rows.iter().all(|r| r.iter().all(|&v| v == 0)) {
        return Err(LabelModelError::DegenerateInput);
    }
    let n = F::from_count(rows.len());

    let propensities: Vec<F> = (0..num_lfs)
        .map(|j| {
            let cast = rows.iter().filter(|r| r[j] != 0).count();
            clamp(F::from_count(cast) / n, PROPENSITY_MIN, 1.0)
        })
        .collect();

    let params = LabelModelParams {
        class_prior: clamp(F::lit(config.class_prior_init), PRIOR_EPS, 1.0 - PRIOR_EPS),
        accuracies: majority_vote_accuracies(rows, num_lfs),
        propensities,
        lf_names: (0..num_lfs).map(|j| format!("lf{j}")).collect(),
        fit_meta: FitMeta {
            iterations: 0,
            final_log_likelihood: F::zero(),
            log_likelihood_trace: Vec::new(),
            converged: false,
            seed: config.seed,
        },
        vote_tables: None,
    };
    match config.kind {
        LabelModelKind::Symmetric => Ok(fit_symmetric(params, rows, config)),
        LabelModelKind::ClassConditional => Ok(fit_class_conditional(params, rows, config)),
    }
}

fn check_trace<F: Scalar>(trace: &[F], next: F, n: F) {
    if let Some(&prev) = trace.last() {
        let rounding = F::epsilon() * F::lit(4.0) * n * (prev.abs() + F::one());
        debug_assert!(next >= prev - rounding, "EM objective decreased: {prev} -> {next}");
    }
}

fn fit_symmetric<F: Scalar>(mut params: LabelModelParams<F>, rows: &[&[Vote]], config: &LabelModelConfig) -> LabelModelParams<F> {
    let n = F::from_count(rows.len());
    let num_lfs = params.num_lfs();

    let tol = F::lit(config.tol);
    let mut trace: Vec<F> = Vec::with_capacity(config.max_iter + 1);
    let mut converged = false;
    let mut posteriors = vec![F::zero(); rows.len()];
    for _ in 0..config.max_iter {
        // E-step
        let mut ll = F::zero();
        for (q, row) in posteriors.iter_mut().zip(rows) {
            *q = params.posterior_row(row);
            ll = ll + params.row_log_likelihood(row);
        }
        check_trace(&trace, ll, n);
        if let Some(&prev) = trace.last() {
            trace.push(ll);
            if (ll - prev).abs() < tol {
                converged = true;
                break;
            }
        } else {
            trace.push(ll);
        }
        // M-step
        params.class_prior = clamp(posteriors.iter().copied().sum::<F>() / n, PRIOR_EPS, 1.0 - PRIOR_EPS);
        for j in 0..num_lfs {
            let mut correct = F::zero();
            let mut cast = F::zero();
            for (q, row) in posteriors.iter().zip(rows) {
                match row[j] {
                    0 => {}
                    v if v > 0 => {
                        correct = correct + *q;
                        cast = cast + F::one();
                    }
                    _ => {
                        correct = correct + (F::one() - *q);
                        cast = cast + F::one();
                    }
                }
            }
            if cast > F::zero() {
                params.accuracies[j] = clamp(correct / cast, ACCURACY_MIN, ACCURACY_MAX);
            }
        }
    }
    if !converged {
        trace.push(params.log_likelihood(rows.iter().copied()));
    }

    params.fit_meta.iterations = trace.len() - 1;
    params.fit_meta.final_log_likelihood = *trace.last().expect("at least one iteration");
    params.fit_meta.log_likelihood_trace = trace;
    params.fit_meta.converged = converged;
    params
}

/// EM for the class-conditional model, started from majority-vote labels.
/// The M-step is a MAP update under a symmetric Dirichlet prior, so the
/// traced objective includes that prior.
fn fit_class_conditional<F: Scalar>(
    mut params: LabelModelParams<F>,
    rows: &[&[Vote]],
    config: &LabelModelConfig,
) -> LabelModelParams<F> {
    let n = F::from_count(rows.len());
    let num_lfs = params.num_lfs();
    let alpha = F::lit(config.smoothing.max(0.0));
    let mut q: Vec<F> = rows
        .iter()
        .map(|r| match r.iter().map(|&v| i32::from(v)).sum::<i32>().signum() {
            1 => F::lit(0.95),
            -1 => F::lit(0.05),
            _ => F::lit(0.5),
        })
        .collect();

    let tol = F::lit(config.tol);
    let mut trace: Vec<F> = Vec::with_capacity(config.max_iter);
    let mut converged = false;
    for _ in 0..config.max_iter.max(1) {
        // M-step
        params.class_prior = clamp(q.iter().copied().sum::<F>() / n, PRIOR_EPS, 1.0 - PRIOR_EPS);
        let tables = (0..num_lfs)
            .map(|j| {
                let mut pos = [alpha; 3];
                let mut neg = [alpha; 3];
                for (qi, row) in q.iter().zip(rows) {
                    let k = outcome(row[j]);
                    pos[k] = pos[k] + *qi;
                    neg[k] = neg[k] + (F::one() - *qi);
                }
                let normalize = |c: [F; 3]| {
                    let total = c[0] + c[1] + c[2];
                    if total > F::zero() {
                        c.map(|x| x / total)
                    } else {
                        [F::zero(), F::zero(), F::one()]
                    }
                };
                VoteTable {
                    given_positive: normalize(pos),
                    given_negative: normalize(neg),
                }
            })
            .collect();
        params.vote_tables = Some(tables);
        // E-step
        let mut objective = params.log_prior(alpha);
        for (qi, row) in q.iter_mut().zip(rows) {
            *qi = params.posterior_row(row);
            objective = objective + params.row_log_likelihood(row);
        }
        check_trace(&trace, objective, n);
        let done = trace.last().is_some_and(|&prev| (objective - prev).abs() < tol);
        trace.push(objective);
        if done {
            converged = true;
            break;
        }
    }

    // summaries in the symmetric parameterization
    for j in 0..num_lfs {
        let mut correct = F::zero();
        let mut cast = F::zero();
        for (qi, row) in q.iter().zip(rows) {
            match row[j].signum() {
                1 => correct = correct + *qi,
                -1 => correct = correct + (F::one() - *qi),
                _ => continue,
            }
            cast = cast + F::one();
        }
        if cast > F::zero() {
            params.accuracies[j] = clamp(correct / cast, ACCURACY_MIN, ACCURACY_MAX);
        }
    }
    params.fit_meta.iterations = trace.len();
    params.fit_meta.final_log_likelihood = *trace.last().expect("at least one iteration");
    params.fit_meta.log_likelihood_trace = trace;
    params.fit_meta.converged = converged;
    params
}

/// Starting accuracies: agreement of each function with the majority vote
/// of the *other* functions, Laplace-smoothed. A function with no
/// co-voters starts at 0.5.
fn majority_vote_accuracies<F: Scalar>(rows: &[&[Vote]], num_lfs: usize) -> Vec<F> {
    (0..num_lfs)
        .map(|j| {
            let mut agree = 0usize;
            let mut total = 0usize;
            for row in rows {
                if row[j] == 0 {
                    continue;
                }
                let others: i32 = row
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &v)| i32::from(v))
                    .sum();
                if others == 0 {
                    continue;
                }
                total += 1;
                if others.signum() == i32::from(row[j]) {
                    agree += 1;
                }
            }
            let acc = F::from_count(agree + 1) / F::from_count(total + 2);
            clamp(acc, ACCURACY_MIN, ACCURACY_MAX)
        })
        .collect()
}

/// Per-file posteriors aligned with the matrix rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Posterior<F: Scalar> {
    pub rows: Vec<String>,
    pub values: Vec<F>,
}

pub fn posterior<F: Scalar>(params: &LabelModelParams<F>, matrix: &LabelMatrix) -> Result<Posterior<F>, LabelModelError> {
    if params.num_lfs() != NUM_LFS {
        return Err(LabelModelError::ColumnMismatch {
            expected: NUM_LFS,
            found: params.num_lfs(),
        });
    }
    Ok(Posterior {
        rows: matrix.rows.clone(),
        values: matrix.votes.iter().map(|r| params.posterior_row(r)).collect(),
    })
}
