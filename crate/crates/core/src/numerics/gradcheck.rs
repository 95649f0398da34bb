//! Central finite-difference verification of tape gradients.

use crate::error::{Error, Result};
use crate::numerics::tensor::Tensor;

/// Compare tape gradients of a scalar function against central finite
/// differences and return the worst relative discrepancy.
///
/// `f` must evaluate the function at the given parameters, returning the
/// loss and one gradient buffer per parameter (from a fresh tape). The
/// relative error denominator is `max(|analytic|, |numeric|, 1e-8)`.
/// Non-deterministic functions are rejected: `f` is evaluated twice at the
/// unperturbed point and must reproduce the loss exactly.
pub fn finite_difference_check<F>(mut f: F, params: &mut [Tensor], eps: f64) -> Result<f64>
where
    F: FnMut(&[Tensor]) -> Result<(f64, Vec<Vec<f64>>)>,
{
    if eps <= 0.0 {
        return Err(Error::Config(format!("finite-difference eps {eps} must be > 0")));
    }
    let (loss0, analytic) = f(params)?;
    let (loss1, _) = f(params)?;
    if loss0.to_bits() != loss1.to_bits() {
        return Err(Error::Numeric(
            "function is not deterministic; cannot finite-difference".into(),
        ));
    }
    if analytic.len() != params.len() {
        return Err(Error::Shape(format!(
            "{} gradient buffers for {} params",
            analytic.len(),
            params.len()
        )));
    }
    let mut worst = 0.0f64;
    for p in 0..params.len() {
        if analytic[p].len() != params[p].numel() {
            return Err(Error::Shape(format!("gradient {p} length mismatch")));
        }
        for j in 0..params[p].numel() {
            let orig = params[p].data()[j];
            params[p].data_mut()[j] = orig + eps;
            let (plus, _) = f(params)?;
            params[p].data_mut()[j] = orig - eps;
            let (minus, _) = f(params)?;
            params[p].data_mut()[j] = orig;
            let numeric = (plus - minus) / (2.0 * eps);
            let denom = analytic[p][j].abs().max(numeric.abs()).max(1e-8);
            worst = worst.max((analytic[p][j] - numeric).abs() / denom);
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::tape::Tape;
    use crate::numerics::Linear;
    use crate::rng::{stream, StreamTag};

    #[test]
    fn constant_function_has_zero_error() {
        let mut params = vec![Tensor::scalar(2.0)];
        let err = finite_difference_check(
            |ps| Ok((7.0, vec![vec![0.0; ps[0].numel()]])),
            &mut params,
            1e-5,
        )
        .unwrap();
        assert_eq!(err, 0.0);
    }

    #[test]
    fn linear_plus_cross_entropy_passes() {
        let mut rng = stream(3, StreamTag::Init, &[9]);
        let lin = Linear::new(4, 3, &mut rng);
        let x = Tensor::uniform(vec![5, 4], 1.0, &mut rng);
        let targets = vec![0usize, 2, 1, 1, 0];
        let mut params = vec![lin.weight.clone(), lin.bias.clone()];
        let err = finite_difference_check(
            |ps| {
                let mut tape = Tape::new();
                let xv = tape.leaf(x.clone(), false);
                let w = tape.leaf(ps[0].clone(), true);
                let b = tape.leaf(ps[1].clone(), true);
                let y = tape.matmul(xv, w)?;
                let y = tape.add_bias(y, b)?;
                let loss = tape.cross_entropy(y, &targets)?;
                tape.backward(loss)?;
                Ok((tape.value(loss).item(), vec![tape.grad(w).to_vec(), tape.grad(b).to_vec()]))
            },
            &mut params,
            1e-5,
        )
        .unwrap();
        assert!(err <= 1e-4, "relative error {err}");
    }

    #[test]
    fn grl_branch_checks_against_negated_analytic_gradient() {
        // With reverse_gradient(lambda = 1) between the parameter and the
        // loss, the tape gradient must equal the negation of the plain
        // analytic gradient; feeding the negated buffer to the checker
        // confirms the backward contract.
        let mut rng = stream(4, StreamTag::Init, &[10]);
        let lin = Linear::new(3, 2, &mut rng);
        let x = Tensor::uniform(vec![4, 3], 1.0, &mut rng);
        let targets = vec![0usize, 1, 0, 1];
        // analytic gradient of the *plain* (no-GRL) branch
        let plain = |ps: &[Tensor]| -> (f64, Vec<Vec<f64>>) {
            let mut tape = Tape::new();
            let xv = tape.leaf(x.clone(), false);
            let w = tape.leaf(ps[0].clone(), true);
            let y = tape.matmul(xv, w).unwrap();
            let loss = tape.cross_entropy(y, &targets).unwrap();
            tape.backward(loss).unwrap();
            (tape.value(loss).item(), vec![tape.grad(w).to_vec()])
        };
        let mut params = vec![lin.weight.clone()];
        // function value seen through the GRL is identical (identity
        // forward); its tape gradient is -1 times the plain one
        let err = finite_difference_check(
            |ps| {
                let mut tape = Tape::new();
                let xv = tape.leaf(x.clone(), false);
                let w = tape.leaf(ps[0].clone(), true);
                let y = tape.matmul(xv, w)?;
                let r = tape.reverse_gradient(y, 1.0)?;
                let loss = tape.cross_entropy(r, &targets)?;
                tape.backward(loss)?;
                let negated: Vec<f64> = tape.grad(w).iter().map(|g| -g).collect();
                Ok((tape.value(loss).item(), vec![negated]))
            },
            &mut params,
            1e-5,
        )
        .unwrap();
        assert!(err <= 1e-4, "relative error {err}");
        // and the negated GRL gradient equals the plain gradient exactly
        let (_, plain_grad) = plain(&params);
        let mut tape = Tape::new();
        let xv = tape.leaf(x.clone(), false);
        let w = tape.leaf(params[0].clone(), true);
        let y = tape.matmul(xv, w).unwrap();
        let r = tape.reverse_gradient(y, 1.0).unwrap();
        let loss = tape.cross_entropy(r, &targets).unwrap();
        tape.backward(loss).unwrap();
        let recovered: Vec<f64> = tape.grad(w).iter().map(|g| -g).collect();
        assert_eq!(recovered, plain_grad[0]);
    }

    #[test]
    fn rejects_nondeterministic_function() {
        let mut calls = 0;
        let mut params = vec![Tensor::scalar(1.0)];
        let res = finite_difference_check(
            |_| {
                calls += 1;
                Ok((calls as f64, vec![vec![0.0]]))
            },
            &mut params,
            1e-5,
        );
        assert!(matches!(res, Err(Error::Numeric(_))));
    }
}
