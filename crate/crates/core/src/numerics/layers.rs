//! Trainable layers. Each layer owns plain parameter tensors and binds
//! them onto a [`Tape`] per forward pass; the trainer reads gradients back
//! by var handle and applies the optimizer to the owned tensors.

use crate::error::Result;
use crate::numerics::tape::{Tape, Var};
use crate::numerics::tensor::Tensor;
use rand_chacha::ChaCha8Rng;

/// Forward-pass mode for layers with batch statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Batch statistics; running stats updated only when `update_running`.
    Train { update_running: bool },
    /// Frozen running statistics; batch-composition independent.
    Eval,
}

/// Fully connected layer, weight layout `[in, out]`, zero bias.
#[derive(Debug, Clone, PartialEq)]
pub struct Linear {
    pub weight: Tensor,
    pub bias: Tensor,
}

impl Linear {
    pub fn new(in_dim: usize, out_dim: usize, rng: &mut ChaCha8Rng) -> Self {
        let bound = 1.0 / (in_dim as f64).sqrt();
        Linear {
            weight: Tensor::uniform(vec![in_dim, out_dim], bound, rng),
            bias: Tensor::zeros(vec![out_dim]),
        }
    }

    pub fn in_dim(&self) -> usize {
        self.weight.shape()[0]
    }

    pub fn out_dim(&self) -> usize {
        self.weight.shape()[1]
    }

    /// Bind parameters and apply `x W + b`. Returns (output, [w, b] vars).
    pub fn forward(&self, tape: &mut Tape, x: Var, trainable: bool) -> Result<(Var, [Var; 2])> {
        let w = tape.leaf(self.weight.clone(), trainable);
        let b = tape.leaf(self.bias.clone(), trainable);
        let y = tape.matmul(x, w)?;
        let y = tape.add_bias(y, b)?;
        Ok((y, [w, b]))
    }

    /// Plain forward without a tape, for eval passes.
    pub fn eval(&self, x: &Tensor) -> Tensor {
        let (m, k) = (x.shape()[0], x.shape()[1]);
        let n = self.out_dim();
        let mut out = vec![0.0; m * n];
        for i in 0..m {
            let xrow = x.row(i);
            let orow = &mut out[i * n..(i + 1) * n];
            orow.copy_from_slice(self.bias.data());
            for (p, &xv) in xrow.iter().enumerate() {
                if xv == 0.0 {
                    continue;
                }
                let wrow = &self.weight.data()[p * n..(p + 1) * n];
                for j in 0..n {
                    orow[j] += xv * wrow[j];
                }
            }
        }
        Tensor::from_vec(vec![m, n], out).expect("linear eval shape")
    }

    pub fn visit<'a>(&'a self, prefix: &str, f: &mut dyn FnMut(String, &'a Tensor)) {
        f(format!("{prefix}.weight"), &self.weight);
        f(format!("{prefix}.bias"), &self.bias);
    }

    pub fn visit_mut(&mut self, prefix: &str, f: &mut dyn FnMut(String, &mut Tensor)) {
        f(format!("{prefix}.weight"), &mut self.weight);
        f(format!("{prefix}.bias"), &mut self.bias);
    }
}

/// 1-D convolution over `[batch, ch, len]`, valid padding, stride 1.
/// Weight layout `[out_ch, in_ch, kw]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Conv1d {
    pub weight: Tensor,
    pub bias: Tensor,
    pub kw: usize,
}

impl Conv1d {
    pub fn new(in_ch: usize, out_ch: usize, kw: usize, rng: &mut ChaCha8Rng) -> Self {
        let bound = 1.0 / ((in_ch * kw) as f64).sqrt();
        Conv1d {
            weight: Tensor::uniform(vec![out_ch, in_ch, kw], bound, rng),
            bias: Tensor::zeros(vec![out_ch]),
            kw,
        }
    }

    pub fn forward(&self, tape: &mut Tape, x: Var, trainable: bool) -> Result<(Var, [Var; 2])> {
        let w = tape.leaf(self.weight.clone(), trainable);
        let b = tape.leaf(self.bias.clone(), trainable);
        let y = tape.conv1d(x, w, b)?;
        Ok((y, [w, b]))
    }

    pub fn visit<'a>(&'a self, prefix: &str, f: &mut dyn FnMut(String, &'a Tensor)) {
        f(format!("{prefix}.weight"), &self.weight);
        f(format!("{prefix}.bias"), &self.bias);
    }

    pub fn visit_mut(&mut self, prefix: &str, f: &mut dyn FnMut(String, &mut Tensor)) {
        f(format!("{prefix}.weight"), &mut self.weight);
        f(format!("{prefix}.bias"), &mut self.bias);
    }
}

/// Per-channel batch normalization with running statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct BatchNorm1d {
    pub gamma: Tensor,
    pub beta: Tensor,
    pub running_mean: Vec<f64>,
    pub running_var: Vec<f64>,
    pub eps: f64,
    pub momentum: f64,
}

impl BatchNorm1d {
    pub fn new(ch: usize) -> Self {
        BatchNorm1d {
            gamma: Tensor::filled(vec![ch], 1.0),
            beta: Tensor::zeros(vec![ch]),
            running_mean: vec![0.0; ch],
            running_var: vec![1.0; ch],
            eps: 1e-5,
            momentum: 0.1,
        }
    }

    /// Bind and normalize; train mode may fold the batch statistics into
    /// the running buffers (unbiased variance, torch convention).
    pub fn forward(
        &mut self,
        tape: &mut Tape,
        x: Var,
        mode: Mode,
        trainable: bool,
    ) -> Result<(Var, [Var; 2])> {
        let g = tape.leaf(self.gamma.clone(), trainable);
        let b = tape.leaf(self.beta.clone(), trainable);
        match mode {
            Mode::Train { update_running } => {
                let shape = tape.value(x).shape().to_vec();
                let m = (shape[0] * shape[2]) as f64;
                let (y, mean, var) = tape.batch_norm_train(x, g, b, self.eps)?;
                if update_running {
                    let unbias = m / (m - 1.0);
                    for c in 0..mean.len() {
                        self.running_mean[c] =
                            (1.0 - self.momentum) * self.running_mean[c] + self.momentum * mean[c];
                        self.running_var[c] = (1.0 - self.momentum) * self.running_var[c]
                            + self.momentum * var[c] * unbias;
                    }
                }
                Ok((y, [g, b]))
            }
            Mode::Eval => {
                let y = tape.batch_norm_eval(x, g, b, &self.running_mean, &self.running_var, self.eps)?;
                Ok((y, [g, b]))
            }
        }
    }

    pub fn visit<'a>(&'a self, prefix: &str, f: &mut dyn FnMut(String, &'a Tensor)) {
        f(format!("{prefix}.gamma"), &self.gamma);
        f(format!("{prefix}.beta"), &self.beta);
    }

    pub fn visit_mut(&mut self, prefix: &str, f: &mut dyn FnMut(String, &mut Tensor)) {
        f(format!("{prefix}.gamma"), &mut self.gamma);
        f(format!("{prefix}.beta"), &mut self.beta);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, StreamTag};

    #[test]
    fn linear_eval_matches_tape_forward() {
        let mut rng = stream(11, StreamTag::Init, &[0]);
        let lin = Linear::new(5, 3, &mut rng);
        let x = Tensor::uniform(vec![4, 5], 1.0, &mut rng);
        let mut tape = Tape::new();
        let xv = tape.leaf(x.clone(), false);
        let (y, _) = lin.forward(&mut tape, xv, false).unwrap();
        let ye = lin.eval(&x);
        assert_eq!(tape.value(y), &ye);
    }

    #[test]
    fn batch_norm_eval_identity_initialized_passes_zero_through() {
        let mut bn = BatchNorm1d::new(2);
        let mut tape = Tape::new();
        let x = tape.leaf(Tensor::zeros(vec![3, 2, 4]), false);
        let (y, _) = bn.forward(&mut tape, x, Mode::Eval, false).unwrap();
        assert!(tape.value(y).data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn batch_norm_running_stats_update_only_when_asked() {
        let mut rng = stream(2, StreamTag::Init, &[1]);
        let x = Tensor::uniform(vec![4, 2, 6], 2.0, &mut rng);
        let mut bn = BatchNorm1d::new(2);
        let before = bn.running_mean.clone();
        let mut tape = Tape::new();
        let xv = tape.leaf(x.clone(), false);
        bn.forward(&mut tape, xv, Mode::Train { update_running: false }, false).unwrap();
        assert_eq!(bn.running_mean, before);
        let mut tape = Tape::new();
        let xv = tape.leaf(x, false);
        bn.forward(&mut tape, xv, Mode::Train { update_running: true }, false).unwrap();
        assert_ne!(bn.running_mean, before);
    }
}
