//! ROUGE scoring and the corpus harness comparing file selectors.

mod corpus;
mod rouge;

pub use corpus::{
    compare_selectors, evaluate_corpus, ComparisonReport, CorpusReport, EvalOptions, F1Percent, ReportRow,
    RowStatus,
};
pub use rouge::{
    lcs_len, rouge_l, rouge_l_tokens, rouge_n, rouge_n_tokens, rouge_scores, tokenize_for_rouge, RougeComponent,
    RougeScore,
};
