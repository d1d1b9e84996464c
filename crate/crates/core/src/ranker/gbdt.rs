//! Pairwise gradient-boosted regression trees.
//!
//! Every repository is a query group. Within a group, file `i` is preferred
//! over file `k` when its posterior exceeds `k`'s by at least the pair
//! margin, and the model minimizes the pairwise logistic loss
//! `log(1 + exp(-(s_i - s_k)))` over all such pairs. Each round fits a
//! depth-limited regression tree to the negative gradients (exact greedy
//! least-squares splits) and sets leaf values by a Newton step.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

use super::features::{FeatureVector, FEATURE_NAMES, NUM_FEATURES};
use super::RankerError;

pub const MODEL_VERSION: u32 = 1;

/// Step halvings tried when a round would increase the training loss.
const MAX_BACKTRACK: usize = 12;
/// Floor on a leaf's summed curvature.
const MIN_HESSIAN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankerHyperParams {
    pub n_trees: usize,
    pub max_depth: usize,
    pub learning_rate: f64,
    pub min_leaf: usize,
    pub pair_margin: f64,
    pub seed: u64,
}

impl Default for RankerHyperParams {
    fn default() -> Self {
        RankerHyperParams {
            n_trees: 300,
            max_depth: 3,
            learning_rate: 0.1,
            min_leaf: 5,
            pair_margin: 0.1,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", bound = "")]
pub enum TreeNode<F: Scalar> {
    /// Rows with `x[feature] <= threshold` go left.
    Split {
        feature: usize,
        threshold: F,
        left: usize,
        right: usize,
    },
    Leaf { value: F },
}

/// A regression tree stored as a node array with the root at index 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct RegressionTree<F: Scalar> {
    pub nodes: Vec<TreeNode<F>>,
}

impl<F: Scalar> RegressionTree<F> {
    pub fn predict(&self, x: &[F; NUM_FEATURES]) -> F {
        let mut i = 0;
        loop {
            match &self.nodes[i] {
                TreeNode::Leaf { value } => return *value,
                TreeNode::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => i = if x[*feature] <= *threshold { *left } else { *right },
            }
        }
    }

    fn scale_leaves(&mut self, factor: F) {
        for node in &mut self.nodes {
            if let TreeNode::Leaf { value } = node {
                *value = *value * factor;
            }
        }
    }

    /// Node indices in range, no cycles (children always follow parents),
    /// feature indices below `NUM_FEATURES`, finite numbers.
    pub(crate) fn validate(&self) -> Result<(), String> {
        if self.nodes.is_empty() {
            return Err("empty tree".into());
        }
        for (i, node) in self.nodes.iter().enumerate() {
            match node {
                TreeNode::Leaf { value } if !value.is_finite() => {
                    return Err(format!("node {i}: non-finite leaf value"));
                }
                TreeNode::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => {
                    if *feature >= NUM_FEATURES {
                        return Err(format!("node {i}: feature index {feature} out of range"));
                    }
                    if !threshold.is_finite() {
                        return Err(format!("node {i}: non-finite threshold"));
                    }
                    for child in [left, right] {
                        if *child <= i || *child >= self.nodes.len() {
                            return Err(format!("node {i}: bad child index {child}"));
                        }
                    }
                }
                TreeNode::Leaf { .. } => {}
            }
        }
        Ok(())
    }
}

/// Trained ranking model. Leaf values already include shrinkage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct RankModel<F: Scalar> {
    pub version: u32,
    pub hyperparams: RankerHyperParams,
    pub feature_names: Vec<String>,
    pub learning_rate: F,
    pub trees: Vec<RegressionTree<F>>,
    /// Mean pairwise loss before the first round and after every round.
    pub training_loss: Vec<F>,
}

impl<F: Scalar> RankModel<F> {
    pub fn score(&self, features: &FeatureVector) -> F {
        self.score_values(&features.values())
    }

    pub fn score_values(&self, x: &[F; NUM_FEATURES]) -> F {
        self.trees.iter().map(|t| t.predict(x)).sum()
    }

    pub(crate) fn validate(&self) -> Result<(), String> {
        let expected: Vec<&str> = FEATURE_NAMES.to_vec();
        if self.feature_names != expected {
            return Err("feature names do not match".into());
        }
        for (t, tree) in self.trees.iter().enumerate() {
            tree.validate().map_err(|e| format!("tree {t}: {e}"))?;
        }
        Ok(())
    }
}

/// One query group: the candidate files of a repository with their
/// features and label-model posteriors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct RankingGroup<F: Scalar> {
    pub repo_id: String,
    pub paths: Vec<String>,
    pub features: Vec<FeatureVector>,
    pub posteriors: Vec<F>,
}

struct Pair {
    better: usize,
    worse: usize,
}

fn softplus<F: Scalar>(x: F) -> F {
    // log(1 + exp(x)) without overflow
    if x > F::zero() {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

fn mean_pair_loss<F: Scalar>(pairs: &[Pair], scores: &[F]) -> F {
    let total: F = pairs
        .iter()
        .map(|p| softplus(scores[p.worse] - scores[p.better]))
        .sum();
    total / F::from_count(pairs.len())
}

pub fn train_ranker<F: Scalar>(
    dataset: &[RankingGroup<F>],
    hp: &RankerHyperParams,
) -> Result<RankModel<F>, RankerError> {
    if dataset.len() < 2 {
        return Err(RankerError::TooFewGroups(dataset.len()));
    }
    let margin = F::lit(hp.pair_margin);
    let mut rows: Vec<[F; NUM_FEATURES]> = Vec::new();
    let mut pairs = Vec::new();
    for group in dataset {
        if group.features.len() != group.posteriors.len() || group.features.len() != group.paths.len() {
            return Err(RankerError::RaggedGroup(group.repo_id.clone()));
        }
        if group.features.is_empty() {
            return Err(RankerError::EmptyGroup(group.repo_id.clone()));
        }
        let mut group_pairs = Vec::new();
        let base = rows.len();
        for (i, pi) in group.posteriors.iter().enumerate() {
            for (k, pk) in group.posteriors.iter().enumerate() {
                if i != k && *pi - *pk >= margin {
                    group_pairs.push(Pair {
                        better: base + i,
                        worse: base + k,
                    });
                }
            }
        }
        if !group_pairs.is_empty() {
            rows.extend(group.features.iter().map(FeatureVector::values));
            pairs.extend(group_pairs);
        }
    }
    if pairs.is_empty() {
        return Err(RankerError::NoUsablePairs);
    }
    let n = rows.len();
    let lr = F::lit(hp.learning_rate);
    let mut scores = vec![F::zero(); n];
    let mut loss = mean_pair_loss(&pairs, &scores);
    let mut training_loss = vec![loss];
    let mut trees = Vec::with_capacity(hp.n_trees);
    let mut grad = vec![F::zero(); n];
    let mut hess = vec![F::zero(); n];
    let all_rows: Vec<usize> = (0..n).collect();

    for _ in 0..hp.n_trees {
        grad.iter_mut().for_each(|g| *g = F::zero());
        hess.iter_mut().for_each(|h| *h = F::zero());
        for p in &pairs {
            // rho = sigmoid(-(s_better - s_worse)), the pair's negative gradient
            let rho = F::one() / (F::one() + (scores[p.better] - scores[p.worse]).exp());
            let curvature = rho * (F::one() - rho);
            grad[p.better] = grad[p.better] + rho;
            grad[p.worse] = grad[p.worse] - rho;
            hess[p.better] = hess[p.better] + curvature;
            hess[p.worse] = hess[p.worse] + curvature;
        }

        let mut builder = TreeBuilder {
            rows: &rows,
            grad: &grad,
            hess: &hess,
            max_depth: hp.max_depth,
            min_leaf: hp.min_leaf.max(1),
            nodes: Vec::new(),
        };
        builder.grow(all_rows.clone(), 0);
        let mut tree = RegressionTree { nodes: builder.nodes };
        tree.scale_leaves(lr);

        let mut step = tree_predictions(&tree, &rows);
        let mut candidate: Vec<F> = scores.iter().zip(&step).map(|(s, d)| *s + *d).collect();
        let mut new_loss = mean_pair_loss(&pairs, &candidate);
        let mut halvings = 0;
        while new_loss > loss && halvings < MAX_BACKTRACK {
            tree.scale_leaves(F::lit(0.5));
            step.iter_mut().for_each(|d| *d = *d * F::lit(0.5));
            candidate = scores.iter().zip(&step).map(|(s, d)| *s + *d).collect();
            new_loss = mean_pair_loss(&pairs, &candidate);
            halvings += 1;
        }
        if new_loss > loss {
            tree.scale_leaves(F::zero());
            new_loss = loss;
        } else {
            scores = candidate;
        }
        debug_assert!(new_loss <= loss);
        loss = new_loss;
        training_loss.push(loss);
        trees.push(tree);
    }

    Ok(RankModel {
        version: MODEL_VERSION,
        hyperparams: hp.clone(),
        feature_names: FEATURE_NAMES.iter().map(|s| s.to_string()).collect(),
        learning_rate: lr,
        trees,
        training_loss,
    })
}

fn tree_predictions<F: Scalar>(tree: &RegressionTree<F>, rows: &[[F; NUM_FEATURES]]) -> Vec<F> {
    rows.iter().map(|x| tree.predict(x)).collect()
}

struct TreeBuilder<'a, F: Scalar> {
    rows: &'a [[F; NUM_FEATURES]],
    grad: &'a [F],
    hess: &'a [F],
    max_depth: usize,
    min_leaf: usize,
    nodes: Vec<TreeNode<F>>,
}

struct BestSplit<F> {
    feature: usize,
    threshold: F,
    score: F,
}

impl<F: Scalar> TreeBuilder<'_, F> {
    /// Appends the subtree for `members` and returns its node index.
    fn grow(&mut self, members: Vec<usize>, depth: usize) -> usize {
        let id = self.nodes.len();
        self.nodes.push(TreeNode::Leaf { value: F::zero() });
        let split = if depth < self.max_depth {
            self.best_split(&members)
        } else {
            None
        };
        match split {
            Some(best) => {
                let (left, right): (Vec<usize>, Vec<usize>) = members
                    .into_iter()
                    .partition(|&r| self.rows[r][best.feature] <= best.threshold);
                let l = self.grow(left, depth + 1);
                let r = self.grow(right, depth + 1);
                self.nodes[id] = TreeNode::Split {
                    feature: best.feature,
                    threshold: best.threshold,
                    left: l,
                    right: r,
                };
            }
            None => {
                let g: F = members.iter().map(|&r| self.grad[r]).sum();
                let h: F = members.iter().map(|&r| self.hess[r]).sum();
                self.nodes[id] = TreeNode::Leaf {
                    value: g / h.max(F::lit(MIN_HESSIAN)),
                };
            }
        }
        id
    }

    /// Least-squares split on the gradients: maximizes
    /// `G_l^2 / n_l + G_r^2 / n_r` over features and thresholds between
    /// consecutive distinct values. Ties keep the earliest candidate.
    fn best_split(&self, members: &[usize]) -> Option<BestSplit<F>> {
        let n = members.len();
        if n < 2 * self.min_leaf {
            return None;
        }
        let total: F = members.iter().map(|&r| self.grad[r]).sum();
        let parent = total * total / F::from_count(n);
        let eps = F::epsilon() * F::lit(64.0) * (parent.abs() + F::one());
        let mut best: Option<BestSplit<F>> = None;
        let mut order = members.to_vec();
        for feature in 0..NUM_FEATURES {
            order.sort_by(|&a, &b| {
                self.rows[a][feature]
                    .partial_cmp(&self.rows[b][feature])
                    .expect("finite features")
                    .then(a.cmp(&b))
            });
            let mut left_sum = F::zero();
            for i in 0..n - 1 {
                left_sum = left_sum + self.grad[order[i]];
                let here = self.rows[order[i]][feature];
                let next = self.rows[order[i + 1]][feature];
                let n_left = i + 1;
                let n_right = n - n_left;
                if here == next || n_left < self.min_leaf || n_right < self.min_leaf {
                    continue;
                }
                let right_sum = total - left_sum;
                let score = left_sum * left_sum / F::from_count(n_left)
                    + right_sum * right_sum / F::from_count(n_right);
                if score <= parent + eps {
                    continue;
                }
                if best.as_ref().is_none_or(|b| score > b.score) {
                    best = Some(BestSplit {
                        feature,
                        threshold: here + (next - here) / F::lit(2.0),
                        score,
                    });
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(x: [u64; NUM_FEATURES]) -> FeatureVector {
        FeatureVector::from_array(x)
    }

    fn planted_groups(n_groups: usize, size: usize) -> Vec<RankingGroup<f64>> {
        (0..n_groups)
            .map(|g| {
                let pick = (g * 7 + 3) % size;
                let features = (0..size)
                    .map(|i| {
                        let mut x = [0u64; NUM_FEATURES];
                        x[1] = u64::from(i == pick);
                        x[3] = ((g * 31 + i * 17) % 500) as u64;
                        fv(x)
                    })
                    .collect();
                let posteriors = (0..size).map(|i| if i == pick { 0.9 } else { 0.1 }).collect();
                RankingGroup {
                    repo_id: format!("r{g}"),
                    paths: (0..size).map(|i| format!("f{i}.py")).collect(),
                    features,
                    posteriors,
                }
            })
            .collect()
    }

    #[test]
    fn separable_feature_ranks_first() {
        let data = planted_groups(20, 6);
        let hp = RankerHyperParams {
            n_trees: 30,
            ..RankerHyperParams::default()
        };
        let model = train_ranker(&data, &hp).unwrap();
        for g in &data {
            let scores: Vec<f64> = g.features.iter().map(|f| model.score(f)).collect();
            let top = (0..scores.len())
                .max_by(|&a, &b| scores[a].total_cmp(&scores[b]))
                .unwrap();
            assert_eq!(g.posteriors[top], 0.9);
        }
        for w in model.training_loss.windows(2) {
            assert!(w[1] <= w[0]);
        }
        model.validate().unwrap();
    }

    #[test]
    fn singleton_groups_have_no_pairs() {
        let data: Vec<_> = (0..3)
            .map(|g| RankingGroup {
                repo_id: format!("r{g}"),
                paths: vec!["only.py".into()],
                features: vec![FeatureVector::default()],
                posteriors: vec![0.7],
            })
            .collect();
        assert!(matches!(
            train_ranker(&data, &RankerHyperParams::default()),
            Err(RankerError::NoUsablePairs)
        ));
    }

    #[test]
    fn flat_posteriors_have_no_pairs() {
        let mut data = planted_groups(3, 4);
        for g in &mut data {
            g.posteriors = vec![0.5, 0.46, 0.54, 0.5];
        }
        assert!(matches!(
            train_ranker(&data, &RankerHyperParams::default()),
            Err(RankerError::NoUsablePairs)
        ));
    }

    #[test]
    fn needs_two_groups() {
        let data = planted_groups(1, 4);
        assert!(matches!(
            train_ranker(&data, &RankerHyperParams::default()),
            Err(RankerError::TooFewGroups(1))
        ));
    }

    #[test]
    fn deterministic() {
        let data = planted_groups(10, 5);
        let hp = RankerHyperParams {
            n_trees: 20,
            ..RankerHyperParams::default()
        };
        let a = serde_json::to_string(&train_ranker(&data, &hp).unwrap()).unwrap();
        let b = serde_json::to_string(&train_ranker(&data, &hp).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn positive_affine_leaf_transform_keeps_order() {
        let data = planted_groups(12, 6);
        let hp = RankerHyperParams {
            n_trees: 25,
            ..RankerHyperParams::default()
        };
        let model = train_ranker(&data, &hp).unwrap();
        let mut transformed = model.clone();
        for tree in &mut transformed.trees {
            for node in &mut tree.nodes {
                if let TreeNode::Leaf { value } = node {
                    *value = 3.5 * *value - 0.25;
                }
            }
        }
        for g in &data {
            let rank = |m: &RankModel<f64>| {
                let mut idx: Vec<usize> = (0..g.features.len()).collect();
                idx.sort_by(|&a, &b| m.score(&g.features[b]).total_cmp(&m.score(&g.features[a])).then(a.cmp(&b)));
                idx
            };
            assert_eq!(rank(&model), rank(&transformed));
        }
    }

    #[test]
    fn f32_training_works() {
        let data: Vec<RankingGroup<f32>> = planted_groups(10, 5)
            .into_iter()
            .map(|g| RankingGroup {
                repo_id: g.repo_id,
                paths: g.paths,
                features: g.features,
                posteriors: g.posteriors.iter().map(|&p| p as f32).collect(),
            })
            .collect();
        let hp = RankerHyperParams {
            n_trees: 10,
            ..RankerHyperParams::default()
        };
        let model = train_ranker(&data, &hp).unwrap();
        assert!(model.training_loss.last().unwrap() < &model.training_loss[0]);
    }

    #[test]
    fn validation_rejects_bad_trees() {
        let bad_feature = RegressionTree::<f64> {
            nodes: vec![
                TreeNode::Split {
                    feature: 14,
                    threshold: 0.5,
                    left: 1,
                    right: 2,
                },
                TreeNode::Leaf { value: 0.0 },
                TreeNode::Leaf { value: 1.0 },
            ],
        };
        assert!(bad_feature.validate().is_err());
        let cyclic = RegressionTree::<f64> {
            nodes: vec![TreeNode::Split {
                feature: 0,
                threshold: 0.5,
                left: 0,
                right: 0,
            }],
        };
        assert!(cyclic.validate().is_err());
        let nan = RegressionTree::<f64> {
            nodes: vec![TreeNode::Leaf { value: f64::NAN }],
        };
        assert!(nan.validate().is_err());
    }
}
