//! Deterministic dense-tensor arithmetic with reverse-mode differentiation.
//!
//! Everything is `f64`, single-threaded, and bitwise deterministic for a
//! fixed seed and iteration order. The tape records one forward pass and
//! replays it in reverse; gradients accumulate additively when a value
//! feeds multiple consumers (the two adversarial branches share the
//! bottleneck output, so this matters).

mod adam;
mod gradcheck;
mod layers;
mod tape;
mod tensor;

pub use adam::{Adam, AdamConfig, AdamState};
pub use gradcheck::finite_difference_check;
pub use layers::{BatchNorm1d, Conv1d, Linear, Mode};
pub use tape::{Tape, Var};
pub use tensor::Tensor;

/// Row-wise softmax of a `[rows x cols]` matrix, log-sum-exp stabilized.
pub fn softmax_rows(logits: &Tensor) -> Tensor {
    let (rows, cols) = (logits.shape()[0], logits.shape()[1]);
    let mut out = vec![0.0; rows * cols];
    for r in 0..rows {
        let row = &logits.data()[r * cols..(r + 1) * cols];
        let m = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut z = 0.0;
        for c in 0..cols {
            let e = (row[c] - m).exp();
            out[r * cols + c] = e;
            z += e;
        }
        for c in 0..cols {
            out[r * cols + c] /= z;
        }
    }
    Tensor::from_vec(vec![rows, cols], out).expect("softmax shape")
}

/// argmax per row; ties resolve to the smallest index.
pub fn argmax_rows(scores: &Tensor) -> Vec<usize> {
    let (rows, cols) = (scores.shape()[0], scores.shape()[1]);
    (0..rows)
        .map(|r| {
            let row = &scores.data()[r * cols..(r + 1) * cols];
            let mut best = 0;
            for c in 1..cols {
                if row[c] > row[best] {
                    best = c;
                }
            }
            best
        })
        .collect()
}
