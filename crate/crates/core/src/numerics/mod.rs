//! Dense-vector/matrix primitives, seeded randomness, and probability
//! transforms shared by every other module.
//!
//! All arithmetic is 64-bit floating point; gradient checks against finite
//! differences need the headroom.

mod matrix;
mod rng;

pub use matrix::{dot, l2_norm, squared_distance, Matrix2D};
pub use rng::{SeededRng, RNG_ALGORITHM_ID, STREAM_SEQUENCES, STREAM_SPLIT, STREAM_SYNTHETIC};

use crate::error::{Error, Result};

/// Numerically stable softmax with max-subtraction.
pub fn softmax(logits: &[f64]) -> Result<Vec<f64>> {
    if logits.is_empty() {
        return Err(Error::EmptyInput("softmax logits".into()));
    }
    if let Some(v) = logits.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite(format!("softmax logit {v}")));
    }
    let max = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut out: Vec<f64> = logits.iter().map(|&z| (z - max).exp()).collect();
    let sum: f64 = out.iter().sum();
    for v in &mut out {
        *v /= sum;
    }
    Ok(out)
}

/// Temperature rescaling of a probability vector:
/// `out[i] = p[i]^(1/T) / sum_j p[j]^(1/T)`.
///
/// With `T = 1` this is the identity; larger `T` flattens the distribution.
pub fn temperature_rescale(probs: &[f64], temperature: f64) -> Result<Vec<f64>> {
    if temperature <= 0.0 || !temperature.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "temperature must be positive, got {temperature}"
        )));
    }
    if probs.is_empty() {
        return Err(Error::EmptyInput("temperature_rescale probabilities".into()));
    }
    let sum: f64 = probs.iter().sum();
    if probs.iter().any(|&p| !(0.0..=1.0 + 1e-9).contains(&p)) || (sum - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "input is not a probability vector (sum {sum})"
        )));
    }
    let inv_t = 1.0 / temperature;
    let mut out: Vec<f64> = probs.iter().map(|&p| p.powf(inv_t)).collect();
    let norm: f64 = out.iter().sum();
    for v in &mut out {
        *v /= norm;
    }
    Ok(out)
}

/// Cosine similarity `<a,b> / (|a||b|)`, clamped to `[-1, 1]` against
/// rounding.
pub fn cosine_similarity(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "cosine_similarity: lengths {} vs {}",
            a.len(),
            b.len()
        )));
    }
    let na = l2_norm(a);
    let nb = l2_norm(b);
    if na == 0.0 || nb == 0.0 {
        return Err(Error::InvalidArgument("cosine_similarity: zero vector".into()));
    }
    Ok((dot(a, b) / (na * nb)).clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn softmax_symmetry() {
        let p = softmax(&[0.0, 0.0, 0.0]).unwrap();
        for v in &p {
            assert_close(*v, 1.0 / 3.0, 1e-15);
        }
    }

    #[test]
    fn softmax_large_logits_do_not_overflow() {
        let p = softmax(&[1000.0, 0.0]).unwrap();
        assert!(p[0] > 1.0 - 1e-12);
        assert!(p[1] < 1e-12);
        assert!(p.iter().all(|v| v.is_finite()));
    }

    #[test]
    fn softmax_direct_evaluation() {
        // softmax([ln 2, 0]) = [2/3, 1/3]
        let p = softmax(&[2.0_f64.ln(), 0.0]).unwrap();
        assert_close(p[0], 2.0 / 3.0, 1e-15);
        assert_close(p[1], 1.0 / 3.0, 1e-15);
    }

    #[test]
    fn softmax_rejects_bad_input() {
        assert!(softmax(&[]).is_err());
        assert!(softmax(&[1.0, f64::NAN]).is_err());
    }

    #[test]
    fn rescale_fixed_points() {
        let one_hot = temperature_rescale(&[1.0, 0.0], 2.0).unwrap();
        assert_eq!(one_hot, vec![1.0, 0.0]);
        let uniform = temperature_rescale(&[0.5, 0.5], 3.0).unwrap();
        assert_close(uniform[0], 0.5, 1e-15);
        assert_close(uniform[1], 0.5, 1e-15);
    }

    #[test]
    fn rescale_direct_evaluation() {
        // sqrt(0.9) / (sqrt(0.9) + sqrt(0.1)) = 0.75
        let p = temperature_rescale(&[0.9, 0.1], 2.0).unwrap();
        assert_close(p[0], 0.75, 1e-12);
        assert_close(p[1], 0.25, 1e-12);
    }

    #[test]
    fn rescale_rejects_bad_temperature() {
        assert!(temperature_rescale(&[0.5, 0.5], 0.0).is_err());
        assert!(temperature_rescale(&[0.5, 0.5], -1.0).is_err());
    }

    #[test]
    fn cosine_basic_cases() {
        let v = [0.3, -0.7, 2.0];
        assert_close(cosine_similarity(&v, &v).unwrap(), 1.0, 1e-15);
        assert_close(cosine_similarity(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 0.0, 1e-15);
        assert_close(
            cosine_similarity(&[1.0, 0.0], &[1.0, 1.0]).unwrap(),
            std::f64::consts::FRAC_1_SQRT_2,
            1e-15,
        );
    }

    #[test]
    fn cosine_rejects_zero_vector() {
        assert!(cosine_similarity(&[0.0, 0.0], &[1.0, 0.0]).is_err());
    }
}
