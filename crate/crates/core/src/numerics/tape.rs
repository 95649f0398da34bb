//! Reverse-mode differentiation tape.
//!
//! `Tape` records every operation of one forward pass; [`Tape::backward`]
//! replays the record once, in reverse order, accumulating gradients
//! additively into per-node buffers. Values that feed several consumers
//! (the bottleneck output under two loss branches, say) therefore receive
//! the sum of both upstream contributions.
//!
//! Every op validates shapes on record and checks its output for NaN/Inf;
//! a non-finite forward value is an error, not a warning.

use crate::error::{Error, Result};
use crate::numerics::tensor::Tensor;

/// Handle to a recorded value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Var(pub(crate) usize);

#[derive(Debug)]
enum Op {
    Leaf,
    /// `c[m x n] = a[m x k] * b[k x n]`
    MatMul { a: Var, b: Var, m: usize, k: usize, n: usize },
    /// `y[m x n] = x[m x n] + bias[n]` (row broadcast)
    AddBias { x: Var, bias: Var },
    /// elementwise sum of two same-shape values
    Add { a: Var, b: Var },
    Relu { x: Var },
    /// valid cross-correlation, stride 1: `y[b, oc, t] = sum_ic,k w[oc, ic, k] * x[b, ic, t + k] + bias[oc]`
    Conv1d { x: Var, w: Var, bias: Var, batch: usize, in_ch: usize, out_ch: usize, in_len: usize, kw: usize },
    /// kernel `width`, stride `stride`; `argmax` stores the winning input index per output cell
    MaxPool1d { x: Var, argmax: Vec<usize> },
    /// per-channel batch statistics; `xhat` saved for backward
    BatchNormTrain { x: Var, gamma: Var, beta: Var, xhat: Vec<f64>, inv_std: Vec<f64>, ch: usize, per_ch: usize },
    /// per-channel affine with frozen running statistics
    BatchNormEval { x: Var, gamma: Var, beta: Var, mean: Vec<f64>, inv_std: Vec<f64>, ch: usize, per_ch: usize },
    /// identity forward; backward emits `-lambda * upstream`
    ReverseGradient { x: Var, lambda: f64 },
    /// mean of `-log softmax(logits)[target]` over the batch; softmax saved
    CrossEntropy { logits: Var, targets: Vec<usize>, softmax: Vec<f64> },
    /// shape change only
    Reshape { x: Var },
}

struct Node {
    value: Tensor,
    op: Op,
    requires_grad: bool,
}

#[derive(Default)]
pub struct Tape {
    nodes: Vec<Node>,
    grads: Vec<Vec<f64>>,
}

fn matmul_raw(a: &[f64], b: &[f64], m: usize, k: usize, n: usize, out: &mut [f64]) {
    for i in 0..m {
        let arow = &a[i * k..(i + 1) * k];
        let orow = &mut out[i * n..(i + 1) * n];
        for (p, &av) in arow.iter().enumerate() {
            if av == 0.0 {
                continue;
            }
            let brow = &b[p * n..(p + 1) * n];
            for j in 0..n {
                orow[j] += av * brow[j];
            }
        }
    }
}

fn transpose_raw(a: &[f64], rows: usize, cols: usize) -> Vec<f64> {
    let mut t = vec![0.0; a.len()];
    for r in 0..rows {
        for c in 0..cols {
            t[c * rows + r] = a[r * cols + c];
        }
    }
    t
}

impl Tape {
    pub fn new() -> Self {
        Tape::default()
    }

    pub fn value(&self, v: Var) -> &Tensor {
        &self.nodes[v.0].value
    }

    /// Gradient buffer of `v` after [`Tape::backward`].
    pub fn grad(&self, v: Var) -> &[f64] {
        &self.grads[v.0]
    }

    fn push(&mut self, value: Tensor, op: Op, requires_grad: bool) -> Var {
        self.nodes.push(Node { value, op, requires_grad });
        Var(self.nodes.len() - 1)
    }

    fn requires(&self, v: Var) -> bool {
        self.nodes[v.0].requires_grad
    }

    /// Record an input value. `trainable` leaves receive gradients.
    pub fn leaf(&mut self, value: Tensor, trainable: bool) -> Var {
        self.push(value, Op::Leaf, trainable)
    }

    pub fn matmul(&mut self, a: Var, b: Var) -> Result<Var> {
        let (sa, sb) = (self.value(a).shape().to_vec(), self.value(b).shape().to_vec());
        if sa.len() != 2 || sb.len() != 2 || sa[1] != sb[0] {
            return Err(Error::Shape(format!("matmul {sa:?} x {sb:?}")));
        }
        let (m, k, n) = (sa[0], sa[1], sb[1]);
        let mut out = vec![0.0; m * n];
        matmul_raw(self.value(a).data(), self.value(b).data(), m, k, n, &mut out);
        let value = Tensor::from_vec(vec![m, n], out)?;
        value.check_finite("matmul")?;
        let req = self.requires(a) || self.requires(b);
        Ok(self.push(value, Op::MatMul { a, b, m, k, n }, req))
    }

    pub fn add_bias(&mut self, x: Var, bias: Var) -> Result<Var> {
        let sx = self.value(x).shape().to_vec();
        let sb = self.value(bias).shape().to_vec();
        if sx.len() != 2 || sb != vec![sx[1]] {
            return Err(Error::Shape(format!("add_bias {sx:?} + {sb:?}")));
        }
        let (m, n) = (sx[0], sx[1]);
        let mut out = self.value(x).data().to_vec();
        let b = self.value(bias).data();
        for r in 0..m {
            for c in 0..n {
                out[r * n + c] += b[c];
            }
        }
        let value = Tensor::from_vec(vec![m, n], out)?;
        value.check_finite("add_bias")?;
        let req = self.requires(x) || self.requires(bias);
        Ok(self.push(value, Op::AddBias { x, bias }, req))
    }

    pub fn add(&mut self, a: Var, b: Var) -> Result<Var> {
        if self.value(a).shape() != self.value(b).shape() {
            return Err(Error::Shape("add: shape mismatch".into()));
        }
        let out: Vec<f64> = self
            .value(a)
            .data()
            .iter()
            .zip(self.value(b).data())
            .map(|(x, y)| x + y)
            .collect();
        let value = Tensor::from_vec(self.value(a).shape().to_vec(), out)?;
        value.check_finite("add")?;
        let req = self.requires(a) || self.requires(b);
        Ok(self.push(value, Op::Add { a, b }, req))
    }

    pub fn relu(&mut self, x: Var) -> Result<Var> {
        let out: Vec<f64> = self.value(x).data().iter().map(|v| v.max(0.0)).collect();
        let value = Tensor::from_vec(self.value(x).shape().to_vec(), out)?;
        let req = self.requires(x);
        Ok(self.push(value, Op::Relu { x }, req))
    }

    pub fn conv1d(&mut self, x: Var, w: Var, bias: Var) -> Result<Var> {
        let sx = self.value(x).shape().to_vec();
        let sw = self.value(w).shape().to_vec();
        if sx.len() != 3 || sw.len() != 3 || sx[1] != sw[1] {
            return Err(Error::Shape(format!("conv1d input {sx:?} weight {sw:?}")));
        }
        let (batch, in_ch, in_len) = (sx[0], sx[1], sx[2]);
        let (out_ch, kw) = (sw[0], sw[2]);
        if in_len < kw {
            return Err(Error::Shape(format!(
                "conv1d: input length {in_len} shorter than kernel {kw}"
            )));
        }
        let out_len = in_len - kw + 1;
        let xv = self.value(x).data();
        let wv = self.value(w).data();
        let bv = self.value(bias).data();
        let mut out = vec![0.0; batch * out_ch * out_len];
        for b in 0..batch {
            for oc in 0..out_ch {
                let orow = &mut out[(b * out_ch + oc) * out_len..(b * out_ch + oc + 1) * out_len];
                orow.fill(bv[oc]);
                for ic in 0..in_ch {
                    let xrow = &xv[(b * in_ch + ic) * in_len..(b * in_ch + ic + 1) * in_len];
                    let wrow = &wv[(oc * in_ch + ic) * kw..(oc * in_ch + ic + 1) * kw];
                    for (k, &wk) in wrow.iter().enumerate() {
                        for t in 0..out_len {
                            orow[t] += wk * xrow[t + k];
                        }
                    }
                }
            }
        }
        let value = Tensor::from_vec(vec![batch, out_ch, out_len], out)?;
        value.check_finite("conv1d")?;
        let req = self.requires(x) || self.requires(w) || self.requires(bias);
        Ok(self.push(value, Op::Conv1d { x, w, bias, batch, in_ch, out_ch, in_len, kw }, req))
    }

    pub fn max_pool1d(&mut self, x: Var, width: usize, stride: usize) -> Result<Var> {
        let sx = self.value(x).shape().to_vec();
        if sx.len() != 3 || sx[2] < width {
            return Err(Error::Shape(format!("max_pool1d on {sx:?} width {width}")));
        }
        let (batch, ch, in_len) = (sx[0], sx[1], sx[2]);
        let out_len = (in_len - width) / stride + 1;
        let xv = self.value(x).data();
        let mut out = vec![0.0; batch * ch * out_len];
        let mut argmax = vec![0usize; batch * ch * out_len];
        for bc in 0..batch * ch {
            let xrow = &xv[bc * in_len..(bc + 1) * in_len];
            for t in 0..out_len {
                let start = t * stride;
                let mut best = start;
                for o in start + 1..start + width {
                    if xrow[o] > xrow[best] {
                        best = o;
                    }
                }
                out[bc * out_len + t] = xrow[best];
                argmax[bc * out_len + t] = bc * in_len + best;
            }
        }
        let value = Tensor::from_vec(vec![batch, ch, out_len], out)?;
        let req = self.requires(x);
        Ok(self.push(value, Op::MaxPool1d { x, argmax }, req))
    }

    /// Batch-norm over `[batch, ch, len]` using batch statistics. Returns
    /// the output var plus the biased per-channel batch mean and variance
    /// so the caller can maintain running statistics.
    pub fn batch_norm_train(
        &mut self,
        x: Var,
        gamma: Var,
        beta: Var,
        eps: f64,
    ) -> Result<(Var, Vec<f64>, Vec<f64>)> {
        let sx = self.value(x).shape().to_vec();
        if sx.len() != 3 {
            return Err(Error::Shape(format!("batch_norm on {sx:?}")));
        }
        let (batch, ch, len) = (sx[0], sx[1], sx[2]);
        if batch < 2 {
            return Err(Error::Shape(
                "batch_norm in train mode requires batch size >= 2".into(),
            ));
        }
        let m = batch * len;
        let xv = self.value(x).data();
        let gv = self.value(gamma).data().to_vec();
        let bv = self.value(beta).data().to_vec();
        let mut mean = vec![0.0; ch];
        let mut var = vec![0.0; ch];
        for b in 0..batch {
            for c in 0..ch {
                let row = &xv[(b * ch + c) * len..(b * ch + c + 1) * len];
                mean[c] += row.iter().sum::<f64>();
            }
        }
        for c in 0..ch {
            mean[c] /= m as f64;
        }
        for b in 0..batch {
            for c in 0..ch {
                let row = &xv[(b * ch + c) * len..(b * ch + c + 1) * len];
                var[c] += row.iter().map(|v| (v - mean[c]).powi(2)).sum::<f64>();
            }
        }
        for c in 0..ch {
            var[c] /= m as f64;
        }
        let inv_std: Vec<f64> = var.iter().map(|v| 1.0 / (v + eps).sqrt()).collect();
        let mut xhat = vec![0.0; xv.len()];
        let mut out = vec![0.0; xv.len()];
        for b in 0..batch {
            for c in 0..ch {
                let base = (b * ch + c) * len;
                for t in 0..len {
                    let h = (xv[base + t] - mean[c]) * inv_std[c];
                    xhat[base + t] = h;
                    out[base + t] = gv[c] * h + bv[c];
                }
            }
        }
        let value = Tensor::from_vec(sx, out)?;
        value.check_finite("batch_norm_train")?;
        let req = self.requires(x) || self.requires(gamma) || self.requires(beta);
        let v = self.push(
            value,
            Op::BatchNormTrain { x, gamma, beta, xhat, inv_std, ch, per_ch: len },
            req,
        );
        Ok((v, mean, var))
    }

    /// Batch-norm with frozen running statistics; a per-channel affine map.
    pub fn batch_norm_eval(
        &mut self,
        x: Var,
        gamma: Var,
        beta: Var,
        running_mean: &[f64],
        running_var: &[f64],
        eps: f64,
    ) -> Result<Var> {
        let sx = self.value(x).shape().to_vec();
        if sx.len() != 3 || sx[1] != running_mean.len() {
            return Err(Error::Shape(format!("batch_norm_eval on {sx:?}")));
        }
        let (batch, ch, len) = (sx[0], sx[1], sx[2]);
        let inv_std: Vec<f64> = running_var.iter().map(|v| 1.0 / (v + eps).sqrt()).collect();
        let xv = self.value(x).data();
        let gv = self.value(gamma).data().to_vec();
        let bv = self.value(beta).data().to_vec();
        let mut out = vec![0.0; xv.len()];
        for b in 0..batch {
            for c in 0..ch {
                let base = (b * ch + c) * len;
                for t in 0..len {
                    out[base + t] = gv[c] * (xv[base + t] - running_mean[c]) * inv_std[c] + bv[c];
                }
            }
        }
        let value = Tensor::from_vec(sx, out)?;
        value.check_finite("batch_norm_eval")?;
        let req = self.requires(x) || self.requires(gamma) || self.requires(beta);
        Ok(self.push(
            value,
            Op::BatchNormEval { x, gamma, beta, mean: running_mean.to_vec(), inv_std, ch, per_ch: len },
            req,
        ))
    }

    /// Identity forward; multiplies the upstream gradient by `-lambda` on
    /// the way back. `lambda = 0` detaches the branch.
    pub fn reverse_gradient(&mut self, x: Var, lambda: f64) -> Result<Var> {
        if lambda < 0.0 {
            return Err(Error::Config(format!("reverse_gradient lambda {lambda} < 0")));
        }
        let value = self.value(x).clone();
        let req = self.requires(x);
        Ok(self.push(value, Op::ReverseGradient { x, lambda }, req))
    }

    /// Mean cross-entropy with log-sum-exp stabilization; scalar output.
    pub fn cross_entropy(&mut self, logits: Var, targets: &[usize]) -> Result<Var> {
        let s = self.value(logits).shape().to_vec();
        if s.len() != 2 || s[0] != targets.len() || s[0] == 0 {
            return Err(Error::Shape(format!(
                "cross_entropy logits {s:?} vs {} targets",
                targets.len()
            )));
        }
        let (rows, cols) = (s[0], s[1]);
        self.value(logits).check_finite("cross_entropy logits")?;
        if let Some(&t) = targets.iter().find(|&&t| t >= cols) {
            return Err(Error::Data(format!(
                "cross_entropy target {t} out of range for {cols} classes"
            )));
        }
        let lv = self.value(logits).data();
        let mut softmax = vec![0.0; rows * cols];
        let mut loss = 0.0;
        for r in 0..rows {
            let row = &lv[r * cols..(r + 1) * cols];
            let m = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let mut z = 0.0;
            for c in 0..cols {
                let e = (row[c] - m).exp();
                softmax[r * cols + c] = e;
                z += e;
            }
            for c in 0..cols {
                softmax[r * cols + c] /= z;
            }
            loss += z.ln() + m - row[targets[r]];
        }
        loss /= rows as f64;
        let value = Tensor::scalar(loss);
        value.check_finite("cross_entropy")?;
        let req = self.requires(logits);
        Ok(self.push(
            value,
            Op::CrossEntropy { logits, targets: targets.to_vec(), softmax },
            req,
        ))
    }

    pub fn reshape(&mut self, x: Var, shape: Vec<usize>) -> Result<Var> {
        let value = self.value(x).clone().reshaped(shape)?;
        let req = self.requires(x);
        Ok(self.push(value, Op::Reshape { x }, req))
    }

    /// Reverse sweep from a scalar `loss`. Visits every recorded node once
    /// in reverse order; gradients of untouched nodes stay zero.
    pub fn backward(&mut self, loss: Var) -> Result<()> {
        if self.value(loss).numel() != 1 {
            return Err(Error::Shape("backward target must be a scalar".into()));
        }
        self.grads = self.nodes.iter().map(|n| vec![0.0; n.value.numel()]).collect();
        self.grads[loss.0][0] = 1.0;
        for id in (0..=loss.0).rev() {
            if !self.nodes[id].requires_grad {
                continue;
            }
            // split borrows: upstream grad is read, input grads are written
            let g = std::mem::take(&mut self.grads[id]);
            match &self.nodes[id].op {
                Op::Leaf => {}
                Op::MatMul { a, b, m, k, n } => {
                    let (m, k, n) = (*m, *k, *n);
                    let av = self.nodes[a.0].value.data();
                    let bv = self.nodes[b.0].value.data();
                    if self.nodes[a.0].requires_grad {
                        let bt = transpose_raw(bv, k, n);
                        let mut da = vec![0.0; m * k];
                        matmul_raw(&g, &bt, m, n, k, &mut da);
                        let (ai, gi) = (a.0, &mut self.grads);
                        for (dst, src) in gi[ai].iter_mut().zip(da) {
                            *dst += src;
                        }
                    }
                    if self.nodes[b.0].requires_grad {
                        let at = transpose_raw(av, m, k);
                        let mut db = vec![0.0; k * n];
                        matmul_raw(&at, &g, k, m, n, &mut db);
                        for (dst, src) in self.grads[b.0].iter_mut().zip(db) {
                            *dst += src;
                        }
                    }
                }
                Op::AddBias { x, bias } => {
                    let n = self.nodes[bias.0].value.numel();
                    let rows = g.len() / n;
                    if self.nodes[x.0].requires_grad {
                        for (dst, src) in self.grads[x.0].iter_mut().zip(&g) {
                            *dst += src;
                        }
                    }
                    if self.nodes[bias.0].requires_grad {
                        for r in 0..rows {
                            for c in 0..n {
                                self.grads[bias.0][c] += g[r * n + c];
                            }
                        }
                    }
                }
                Op::Add { a, b } => {
                    for v in [*a, *b] {
                        if self.nodes[v.0].requires_grad {
                            for (dst, src) in self.grads[v.0].iter_mut().zip(&g) {
                                *dst += src;
                            }
                        }
                    }
                }
                Op::Relu { x } => {
                    if self.nodes[x.0].requires_grad {
                        let xv = self.nodes[x.0].value.data();
                        for i in 0..g.len() {
                            if xv[i] > 0.0 {
                                self.grads[x.0][i] += g[i];
                            }
                        }
                    }
                }
                Op::Conv1d { x, w, bias, batch, in_ch, out_ch, in_len, kw } => {
                    let (batch, in_ch, out_ch, in_len, kw) =
                        (*batch, *in_ch, *out_ch, *in_len, *kw);
                    let out_len = in_len - kw + 1;
                    let xv = self.nodes[x.0].value.data().to_vec();
                    let wv = self.nodes[w.0].value.data().to_vec();
                    if self.nodes[bias.0].requires_grad {
                        for b in 0..batch {
                            for oc in 0..out_ch {
                                let grow = &g[(b * out_ch + oc) * out_len..(b * out_ch + oc + 1) * out_len];
                                self.grads[bias.0][oc] += grow.iter().sum::<f64>();
                            }
                        }
                    }
                    if self.nodes[w.0].requires_grad {
                        let dw = &mut self.grads[w.0];
                        for b in 0..batch {
                            for oc in 0..out_ch {
                                let grow = &g[(b * out_ch + oc) * out_len..(b * out_ch + oc + 1) * out_len];
                                for ic in 0..in_ch {
                                    let xrow = &xv[(b * in_ch + ic) * in_len..(b * in_ch + ic + 1) * in_len];
                                    for k in 0..kw {
                                        let mut acc = 0.0;
                                        for t in 0..out_len {
                                            acc += grow[t] * xrow[t + k];
                                        }
                                        dw[(oc * in_ch + ic) * kw + k] += acc;
                                    }
                                }
                            }
                        }
                    }
                    if self.nodes[x.0].requires_grad {
                        let dx = &mut self.grads[x.0];
                        for b in 0..batch {
                            for oc in 0..out_ch {
                                let grow = &g[(b * out_ch + oc) * out_len..(b * out_ch + oc + 1) * out_len];
                                for ic in 0..in_ch {
                                    let xbase = (b * in_ch + ic) * in_len;
                                    let wrow = &wv[(oc * in_ch + ic) * kw..(oc * in_ch + ic + 1) * kw];
                                    for (k, &wk) in wrow.iter().enumerate() {
                                        for t in 0..out_len {
                                            dx[xbase + t + k] += wk * grow[t];
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                Op::MaxPool1d { x, argmax } => {
                    if self.nodes[x.0].requires_grad {
                        for (i, &src) in argmax.iter().enumerate() {
                            self.grads[x.0][src] += g[i];
                        }
                    }
                }
                Op::BatchNormTrain { x, gamma, beta, xhat, inv_std, ch, per_ch } => {
                    let (ch, len) = (*ch, *per_ch);
                    let total = g.len();
                    let batch = total / (ch * len);
                    let m = (batch * len) as f64;
                    let gv = self.nodes[gamma.0].value.data().to_vec();
                    // per-channel reductions
                    let mut sum_g = vec![0.0; ch];
                    let mut sum_gx = vec![0.0; ch];
                    for b in 0..batch {
                        for c in 0..ch {
                            let base = (b * ch + c) * len;
                            for t in 0..len {
                                sum_g[c] += g[base + t];
                                sum_gx[c] += g[base + t] * xhat[base + t];
                            }
                        }
                    }
                    if self.nodes[gamma.0].requires_grad {
                        for c in 0..ch {
                            self.grads[gamma.0][c] += sum_gx[c];
                        }
                    }
                    if self.nodes[beta.0].requires_grad {
                        for c in 0..ch {
                            self.grads[beta.0][c] += sum_g[c];
                        }
                    }
                    if self.nodes[x.0].requires_grad {
                        let dx = &mut self.grads[x.0];
                        for b in 0..batch {
                            for c in 0..ch {
                                let base = (b * ch + c) * len;
                                let coeff = gv[c] * inv_std[c] / m;
                                for t in 0..len {
                                    dx[base + t] += coeff
                                        * (m * g[base + t] - sum_g[c] - xhat[base + t] * sum_gx[c]);
                                }
                            }
                        }
                    }
                }
                Op::BatchNormEval { x, gamma, beta, mean, inv_std, ch, per_ch } => {
                    let (ch, len) = (*ch, *per_ch);
                    let total = g.len();
                    let batch = total / (ch * len);
                    let gv = self.nodes[gamma.0].value.data().to_vec();
                    let xv = self.nodes[x.0].value.data().to_vec();
                    if self.nodes[x.0].requires_grad {
                        let dx = &mut self.grads[x.0];
                        for b in 0..batch {
                            for c in 0..ch {
                                let base = (b * ch + c) * len;
                                for t in 0..len {
                                    dx[base + t] += g[base + t] * gv[c] * inv_std[c];
                                }
                            }
                        }
                    }
                    if self.nodes[gamma.0].requires_grad || self.nodes[beta.0].requires_grad {
                        for b in 0..batch {
                            for c in 0..ch {
                                let base = (b * ch + c) * len;
                                for t in 0..len {
                                    let h = (xv[base + t] - mean[c]) * inv_std[c];
                                    if self.nodes[gamma.0].requires_grad {
                                        self.grads[gamma.0][c] += g[base + t] * h;
                                    }
                                    if self.nodes[beta.0].requires_grad {
                                        self.grads[beta.0][c] += g[base + t];
                                    }
                                }
                            }
                        }
                    }
                }
                Op::ReverseGradient { x, lambda } => {
                    if self.nodes[x.0].requires_grad {
                        let l = *lambda;
                        for (dst, src) in self.grads[x.0].iter_mut().zip(&g) {
                            *dst += -l * src;
                        }
                    }
                }
                Op::CrossEntropy { logits, targets, softmax } => {
                    if self.nodes[logits.0].requires_grad {
                        let rows = targets.len();
                        let cols = softmax.len() / rows;
                        let scale = g[0] / rows as f64;
                        let dl = &mut self.grads[logits.0];
                        for r in 0..rows {
                            for c in 0..cols {
                                let onehot = if c == targets[r] { 1.0 } else { 0.0 };
                                dl[r * cols + c] += scale * (softmax[r * cols + c] - onehot);
                            }
                        }
                    }
                }
                Op::Reshape { x } => {
                    if self.nodes[x.0].requires_grad {
                        for (dst, src) in self.grads[x.0].iter_mut().zip(&g) {
                            *dst += src;
                        }
                    }
                }
            }
            self.grads[id] = g;
        }
        Ok(())
    }
}
