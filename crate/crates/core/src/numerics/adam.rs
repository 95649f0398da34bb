//! Adam with weight decay.
//!
//! Weight decay defaults to the classic L2 coupling (decay folded into the
//! gradient before the moment updates); the decoupled variant is available
//! behind [`AdamConfig::decoupled`].

use crate::error::{Error, Result};
use crate::numerics::tensor::Tensor;

#[derive(Debug, Clone, PartialEq)]
pub struct AdamConfig {
    pub lr: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps: f64,
    pub weight_decay: f64,
    pub decoupled: bool,
}

impl Default for AdamConfig {
    fn default() -> Self {
        AdamConfig {
            lr: 1e-2,
            beta1: 0.9,
            beta2: 0.999,
            eps: 1e-8,
            weight_decay: 5e-4,
            decoupled: false,
        }
    }
}

/// Per-parameter first/second moment buffers plus the shared step counter.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AdamState {
    pub m: Vec<Vec<f64>>,
    pub v: Vec<Vec<f64>>,
    pub t: u64,
}

/// One optimizer instance per trained parameter group. The group's
/// parameter order is fixed by the caller and must not change between
/// steps; moment buffers are allocated lazily on the first step.
#[derive(Debug, Clone, PartialEq)]
pub struct Adam {
    pub cfg: AdamConfig,
    pub state: AdamState,
}

impl Adam {
    pub fn new(cfg: AdamConfig) -> Result<Self> {
        if cfg.lr <= 0.0 {
            return Err(Error::Config(format!("learning rate {} must be > 0", cfg.lr)));
        }
        Ok(Adam { cfg, state: AdamState::default() })
    }

    /// Apply one update to each `(param, grad)` pair, in order.
    pub fn step(&mut self, pairs: &mut [(&mut Tensor, &[f64])]) -> Result<()> {
        if self.state.m.is_empty() {
            for (p, _) in pairs.iter() {
                self.state.m.push(vec![0.0; p.numel()]);
                self.state.v.push(vec![0.0; p.numel()]);
            }
        }
        if self.state.m.len() != pairs.len() {
            return Err(Error::Shape(format!(
                "optimizer tracks {} params, got {}",
                self.state.m.len(),
                pairs.len()
            )));
        }
        self.state.t += 1;
        let t = self.state.t as i32;
        let c = &self.cfg;
        let bc1 = 1.0 - c.beta1.powi(t);
        let bc2 = 1.0 - c.beta2.powi(t);
        for (i, (param, grad)) in pairs.iter_mut().enumerate() {
            if param.numel() != grad.len() || param.numel() != self.state.m[i].len() {
                return Err(Error::Shape(format!(
                    "param {} has {} values, grad {}",
                    i,
                    param.numel(),
                    grad.len()
                )));
            }
            let m = &mut self.state.m[i];
            let v = &mut self.state.v[i];
            let data = param.data_mut();
            for j in 0..data.len() {
                let mut g = grad[j];
                if !c.decoupled {
                    g += c.weight_decay * data[j];
                }
                m[j] = c.beta1 * m[j] + (1.0 - c.beta1) * g;
                v[j] = c.beta2 * v[j] + (1.0 - c.beta2) * g * g;
                let mhat = m[j] / bc1;
                let vhat = v[j] / bc2;
                let mut upd = c.lr * mhat / (vhat.sqrt() + c.eps);
                if c.decoupled {
                    upd += c.lr * c.weight_decay * data[j];
                }
                data[j] -= upd;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar_adam(cfg: AdamConfig) -> (Adam, Tensor) {
        (Adam::new(cfg).unwrap(), Tensor::scalar(1.0))
    }

    #[test]
    fn zero_grad_zero_decay_is_a_fixed_point() {
        let (mut opt, mut p) = scalar_adam(AdamConfig { weight_decay: 0.0, ..Default::default() });
        for _ in 0..5 {
            opt.step(&mut [(&mut p, &[0.0])]).unwrap();
        }
        assert_eq!(p.item(), 1.0);
    }

    #[test]
    fn degenerate_moments_recover_plain_sgd_scale() {
        let (mut opt, mut p) = scalar_adam(AdamConfig {
            lr: 0.1,
            beta1: 0.0,
            beta2: 0.0,
            weight_decay: 0.0,
            ..Default::default()
        });
        opt.step(&mut [(&mut p, &[1.0])]).unwrap();
        assert!((p.item() - 0.9).abs() < 1e-7, "param {}", p.item());
    }

    #[test]
    fn quadratic_descends_monotonically_after_warmup() {
        // minimize (w - 3)^2 from w = 0
        let mut opt = Adam::new(AdamConfig { lr: 0.2, weight_decay: 0.0, ..Default::default() }).unwrap();
        let mut w = Tensor::scalar(0.0);
        let mut losses = Vec::new();
        for _ in 0..10 {
            let grad = 2.0 * (w.item() - 3.0);
            losses.push((w.item() - 3.0_f64).powi(2));
            opt.step(&mut [(&mut w, &[grad])]).unwrap();
        }
        for pair in losses.windows(2).skip(1) {
            assert!(pair[1] <= pair[0] + 1e-12, "loss rose: {pair:?}");
        }
    }

    #[test]
    fn rejects_shape_mismatch() {
        let mut opt = Adam::new(AdamConfig::default()).unwrap();
        let mut p = Tensor::zeros(vec![3]);
        assert!(opt.step(&mut [(&mut p, &[0.0, 0.0])]).is_err());
    }

    #[test]
    fn rejects_nonpositive_lr() {
        assert!(Adam::new(AdamConfig { lr: 0.0, ..Default::default() }).is_err());
    }
}
