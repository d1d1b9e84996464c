//! ROUGE against hand-counted candidate/reference pairs.

use larch_core::evaluation::{rouge_scores, RougeComponent};

/// (precision, recall, f1)
type Prf = (f64, f64, f64);

struct Case {
    candidate: &'static str,
    reference: &'static str,
    r1: Prf,
    r2: Prf,
    rl: Prf,
}

const ONE: Prf = (1.0, 1.0, 1.0);
const ZERO: Prf = (0.0, 0.0, 0.0);

#[rustfmt::skip]
fn cases() -> Vec<Case> {
    vec![
        Case { candidate: "the cat sat", reference: "the cat",
               r1: (2.0 / 3.0, 1.0, 0.8), r2: (0.5, 1.0, 2.0 / 3.0), rl: (2.0 / 3.0, 1.0, 0.8) },
        // LCS of [a,b,c,d] and [a,c,d,b] is [a,c,d]
        Case { candidate: "a b c d", reference: "a c d b",
               r1: ONE, r2: (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0), rl: (0.75, 0.75, 0.75) },
        Case { candidate: "Hello, world!", reference: "hello world", r1: ONE, r2: ONE, rl: ONE },
        Case { candidate: "alpha beta", reference: "gamma delta", r1: ZERO, r2: ZERO, rl: ZERO },
        // "the" appears four times but is credited once
        Case { candidate: "the the the the", reference: "the cat",
               r1: (0.25, 0.5, 1.0 / 3.0), r2: ZERO, rl: (0.25, 0.5, 1.0 / 3.0) },
        Case { candidate: "word", reference: "word", r1: ONE, r2: ZERO, rl: ONE },
        Case { candidate: "", reference: "abc", r1: ZERO, r2: ZERO, rl: ZERO },
        Case { candidate: "Install with pip install larch", reference: "pip install larch to get started",
               r1: (0.6, 0.5, 6.0 / 11.0), r2: (0.5, 0.4, 4.0 / 9.0), rl: (0.6, 0.5, 6.0 / 11.0) },
        Case { candidate: "a b a b", reference: "b a b a",
               r1: ONE, r2: (2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0), rl: (0.75, 0.75, 0.75) },
        Case { candidate: "x y z", reference: "z y x",
               r1: ONE, r2: ZERO, rl: (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0) },
        Case { candidate: "The quick brown fox", reference: "the quick red fox jumps",
               r1: (0.75, 0.6, 2.0 / 3.0), r2: (1.0 / 3.0, 0.25, 2.0 / 7.0), rl: (0.75, 0.6, 2.0 / 3.0) },
        Case { candidate: "a1 b2 c3", reference: "A1-b2_c3", r1: ONE, r2: ONE, rl: ONE },
        Case { candidate: "cat's", reference: "cat s", r1: ONE, r2: ONE, rl: ONE },
    ]
}

fn close(got: &RougeComponent<f64>, want: Prf, what: &str) {
    let got_t = (got.precision, got.recall, got.f1);
    for (g, w) in [(got_t.0, want.0), (got_t.1, want.1), (got_t.2, want.2)] {
        assert!((g - w).abs() <= 1e-9, "{what}: got {got_t:?}, want {want:?}");
    }
}

pub fn check() {
    let cases = cases();
    assert!(cases.len() >= 10);
    for c in &cases {
        let s = rouge_scores::<f64>(c.candidate, c.reference);
        let label = format!("{:?} vs {:?}", c.candidate, c.reference);
        close(&s.rouge1, c.r1, &format!("ROUGE-1 {label}"));
        close(&s.rouge2, c.r2, &format!("ROUGE-2 {label}"));
        close(&s.rouge_l, c.rl, &format!("ROUGE-L {label}"));
    }
}

#[test]
fn rouge_matches_hand_counts() {
    check();
}
