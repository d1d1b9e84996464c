use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Precision, recall and F1 of one ROUGE variant.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct RougeComponent<F: Scalar> {
    pub precision: F,
    pub recall: F,
    pub f1: F,
}

impl<F: Scalar> RougeComponent<F> {
    pub fn from_counts(overlap: usize, candidate_total: usize, reference_total: usize) -> Self {
        let ratio = |num: usize, den: usize| {
            if den == 0 {
                F::zero()
            } else {
                F::from_count(num) / F::from_count(den)
            }
        };
        let precision = ratio(overlap, candidate_total);
        let recall = ratio(overlap, reference_total);
        let sum = precision + recall;
        let f1 = if sum == F::zero() {
            F::zero()
        } else {
            F::lit(2.0) * precision * recall / sum
        };
        RougeComponent { precision, recall, f1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct RougeScore<F: Scalar> {
    pub rouge1: RougeComponent<F>,
    pub rouge2: RougeComponent<F>,
    pub rouge_l: RougeComponent<F>,
}

/// Lowercases and splits on every non-alphanumeric character.
pub fn tokenize_for_rouge(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

fn ngram_counts<T: AsRef<str>>(tokens: &[T], n: usize) -> HashMap<Vec<&str>, usize> {
    let mut counts = HashMap::new();
    if n == 0 || tokens.len() < n {
        return counts;
    }
    for w in tokens.windows(n) {
        *counts.entry(w.iter().map(AsRef::as_ref).collect()).or_insert(0) += 1;
    }
    counts
}

/// ROUGE-N on pre-tokenized input with clipped n-gram counts.
pub fn rouge_n_tokens<F: Scalar, T: AsRef<str>>(candidate: &[T], reference: &[T], n: usize) -> RougeComponent<F> {
    let cand = ngram_counts(candidate, n);
    let refs = ngram_counts(reference, n);
    let overlap = cand
        .iter()
        .map(|(g, c)| refs.get(g).map_or(0, |r| (*c).min(*r)))
        .sum();
    RougeComponent::from_counts(overlap, cand.values().sum(), refs.values().sum())
}

pub fn rouge_n<F: Scalar>(candidate: &str, reference: &str, n: usize) -> RougeComponent<F> {
    rouge_n_tokens(&tokenize_for_rouge(candidate), &tokenize_for_rouge(reference), n)
}

/// Length of the longest common subsequence.
pub fn lcs_len<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y { prev[j] + 1 } else { prev[j + 1].max(cur[j]) };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

pub fn rouge_l_tokens<F: Scalar, T: AsRef<str>>(candidate: &[T], reference: &[T]) -> RougeComponent<F> {
    let a: Vec<&str> = candidate.iter().map(AsRef::as_ref).collect();
    let b: Vec<&str> = reference.iter().map(AsRef::as_ref).collect();
    RougeComponent::from_counts(lcs_len(&a, &b), a.len(), b.len())
}

pub fn rouge_l<F: Scalar>(candidate: &str, reference: &str) -> RougeComponent<F> {
    rouge_l_tokens(&tokenize_for_rouge(candidate), &tokenize_for_rouge(reference))
}

pub fn rouge_scores<F: Scalar>(candidate: &str, reference: &str) -> RougeScore<F> {
    let c = tokenize_for_rouge(candidate);
    let r = tokenize_for_rouge(reference);
    RougeScore {
        rouge1: rouge_n_tokens(&c, &r, 1),
        rouge2: rouge_n_tokens(&c, &r, 2),
        rouge_l: rouge_l_tokens(&c, &r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tokenizer() {
        assert_eq!(tokenize_for_rouge("The cat's mat"), ["the", "cat", "s", "mat"]);
        assert!(tokenize_for_rouge("").is_empty());
        assert_eq!(tokenize_for_rouge("a--b"), ["a", "b"]);
        assert_eq!(tokenize_for_rouge("`pip install` X2"), ["pip", "install", "x2"]);
    }

    #[test]
    fn unigram_worked_example() {
        let s: RougeComponent<f64> = rouge_n("the cat sat", "the cat", 1);
        assert!((s.precision - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(s.recall, 1.0);
        assert!((s.f1 - 0.8).abs() < 1e-12);
    }

    #[test]
    fn lcs_worked_example() {
        let s: RougeComponent<f64> = rouge_l("a b c d", "a c d b");
        assert_eq!((s.precision, s.recall, s.f1), (0.75, 0.75, 0.75));
    }

    #[test]
    fn degenerate_inputs() {
        let s: RougeComponent<f64> = rouge_n("word", "word", 2);
        assert_eq!(s, RougeComponent::default());
        let s: RougeComponent<f64> = rouge_n("", "", 1);
        assert_eq!(s.f1, 0.0);
        let s: RougeComponent<f64> = rouge_l("x y", "p q");
        assert_eq!(s.f1, 0.0);
    }

    #[test]
    fn clipped_counts() {
        // candidate repeats "the" 4 times, reference has it twice
        let s: RougeComponent<f64> = rouge_n("the the the the", "the cat the", 1);
        assert_eq!(s.precision, 0.5);
        assert!((s.recall - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn f32_agrees() {
        let a: RougeScore<f32> = rouge_scores("run the tool on data", "run tool on the data now");
        let b: RougeScore<f64> = rouge_scores("run the tool on data", "run tool on the data now");
        assert!((f64::from(a.rouge_l.f1) - b.rouge_l.f1).abs() < 1e-6);
    }

    fn words() -> impl Strategy<Value = String> {
        proptest::collection::vec("[a-e]{1,2}", 0..40).prop_map(|w| w.join(" "))
    }

    proptest! {
        #[test]
        fn swap_exchanges_precision_and_recall(c in words(), r in words()) {
            for n in 1..=2 {
                let a: RougeComponent<f64> = rouge_n(&c, &r, n);
                let b: RougeComponent<f64> = rouge_n(&r, &c, n);
                prop_assert_eq!(a.precision, b.recall);
                prop_assert_eq!(a.recall, b.precision);
                prop_assert_eq!(a.f1, b.f1);
            }
            let a: RougeComponent<f64> = rouge_l(&c, &r);
            let b: RougeComponent<f64> = rouge_l(&r, &c);
            prop_assert_eq!(a.precision, b.recall);
            prop_assert_eq!(a.recall, b.precision);
        }

        #[test]
        fn unigrams_dominate_bigrams(c in words(), r in words()) {
            let s: RougeScore<f64> = rouge_scores(&c, &r);
            prop_assert!(s.rouge1.f1 >= s.rouge2.f1);
        }

        #[test]
        fn self_similarity_is_one(x in words().prop_filter("non-empty", |w| !w.is_empty())) {
            let s: RougeComponent<f64> = rouge_l(&x, &x);
            prop_assert_eq!(s.f1, 1.0);
            for v in [s.precision, s.recall] {
                prop_assert!((0.0..=1.0).contains(&v));
            }
        }
    }
}
