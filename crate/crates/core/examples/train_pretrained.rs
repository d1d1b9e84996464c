//! Regenerates `fixtures/pretrained_model.json`:
//!
//! ```text
//! cargo run --release -p larch-core --example train_pretrained > crates/core/fixtures/pretrained_model.json
//! ```

use larch_core::pipeline::{train_from_snapshots, TrainingConfig};
use larch_core::ranker::model_to_json;
use larch_core::synthetic::{synthetic_corpus, PRETRAINED_CORPUS_SEED, PRETRAINED_CORPUS_SIZE};

fn main() {
    let snapshots: Vec<_> = synthetic_corpus(PRETRAINED_CORPUS_SIZE, PRETRAINED_CORPUS_SEED)
        .iter()
        .map(|r| r.snapshot().expect("generated paths are valid"))
        .collect();
    let outcome = train_from_snapshots::<f64>(&snapshots, &TrainingConfig::default()).expect("training succeeds");
    print!("{}", model_to_json(&outcome.model));
}
