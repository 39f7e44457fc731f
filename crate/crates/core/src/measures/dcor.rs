//! Distance correlation, biased V-statistic (the `energy::dcor` estimator).
//!
//! Both pairwise absolute-difference matrices are double-centered; dCov^2 is
//! the mean of their elementwise product and dCor normalizes by the distance
//! variances. The biased estimator is nonnegative by construction and does
//! not vanish on finite independent samples.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::MeasureError;
use crate::sample::PairedSample;

use super::{MeasureId, MeasureScore};

/// dCor in [0, 1]; O(n^2) time and memory.
pub fn distance_correlation(p: &PairedSample) -> Result<MeasureScore, MeasureError> {
    p.require_nonconstant()?;
    let n = p.len();
    let a = centered_distance_matrix(p.x().values());
    let b = centered_distance_matrix(p.y().values());

    let (mut dcov2, mut dvar_x, mut dvar_y) = (0.0, 0.0, 0.0);
    for k in 0..n * n {
        dcov2 += a[k] * b[k];
        dvar_x += a[k] * a[k];
        dvar_y += b[k] * b[k];
    }
    let n2 = (n * n) as f64;
    dcov2 /= n2;
    dvar_x /= n2;
    dvar_y /= n2;

    // dvar is zero only for constant input, rejected above
    let r2 = dcov2 / (dvar_x * dvar_y).sqrt();
    Ok(MeasureScore::new(
        MeasureId::Dcor,
        r2.max(0.0).sqrt().min(1.0),
    ))
}

/// |v_i - v_j| double-centered: row means, column means and the grand mean
/// removed.
fn centered_distance_matrix(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    let mut m = alloc::vec![0.0; n * n];
    let mut row_mean = alloc::vec![0.0; n];
    let mut grand = 0.0;
    for i in 0..n {
        let mut s = 0.0;
        for j in 0..n {
            let d = (v[i] - v[j]).abs();
            m[i * n + j] = d;
            s += d;
        }
        row_mean[i] = s / n as f64;
        grand += s;
    }
    grand /= (n * n) as f64;
    for i in 0..n {
        for j in 0..n {
            // the matrix is symmetric so column means equal row means
            m[i * n + j] += grand - row_mean[i] - row_mean[j];
        }
    }
    m
}
