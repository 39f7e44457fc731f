//! The xi coefficient of correlation (Chatterjee 2021), XICOR conventions.
//!
//! Rows are ordered by x with ties broken uniformly at random (seeded here
//! for reproducibility); y enters only through its ranks, with r_i counting
//! `y_j <= y_i` and l_i counting `y_j >= y_i` over the whole sample. The
//! statistic is
//!
//! ```text
//! xi = 1 - n * sum_i |r_(i+1) - r_(i)|  /  (2 * sum_i l_i (n - l_i))
//! ```
//!
//! which reduces to `1 - 3 * sum |dr| / (n^2 - 1)` when y has no ties.
//! Unlike everything else in this crate xi is asymmetric: it estimates how
//! well y is predictable from x, not the reverse.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::MeasureError;
use crate::sample::PairedSample;

use super::{MeasureId, MeasureScore};

/// Computes xi(y | x). Needs n >= 3; the finite-n ceiling of the estimator
/// (below 1 even on perfectly monotone data) is reported as-is.
pub fn chatterjee_xi(p: &PairedSample, seed: u64) -> Result<MeasureScore, MeasureError> {
    p.require_nonconstant()?;
    let n = p.len();
    if n < 3 {
        return Err(MeasureError::InsufficientSample { needed: 3, got: n });
    }
    let x = p.x().values();
    let y = p.y().values();

    // x order with seeded random tie-breaks
    let mut tags: Vec<usize> = (0..n).collect();
    tags.shuffle(&mut ChaCha12Rng::seed_from_u64(seed));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| f64::total_cmp(&x[a], &x[b]).then_with(|| tags[a].cmp(&tags[b])));

    // max-ranks r_i and co-ranks l_i from one sorted copy of y
    let mut sorted_y = y.to_vec();
    sorted_y.sort_by(f64::total_cmp);
    let rank_le = |v: f64| sorted_y.partition_point(|&s| s <= v) as f64;
    let rank_ge = |v: f64| (n - sorted_y.partition_point(|&s| s < v)) as f64;

    let mut jump_sum = 0.0;
    let mut prev = rank_le(y[order[0]]);
    for &idx in &order[1..] {
        let r = rank_le(y[idx]);
        jump_sum += (r - prev).abs();
        prev = r;
    }

    let denom: f64 = y.iter().map(|&v| {
        let l = rank_ge(v);
        l * (n as f64 - l)
    }).sum::<f64>() * 2.0;

    // denom is zero only for constant y, rejected above
    Ok(MeasureScore::new(
        MeasureId::Xi,
        1.0 - (n as f64) * jump_sum / denom,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(x: &[f64], y: &[f64]) -> PairedSample {
        PairedSample::from_slices(x, y).unwrap()
    }

    #[test]
    fn identity_at_n3() {
        // ranks (1,2,3), jumps 2: 1 - 3*2/(9-1) = 0.25
        let p = pair(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]);
        assert_eq!(chatterjee_xi(&p, 0).unwrap().value, 0.25);
    }

    #[test]
    fn strictly_increasing_n100() {
        let x: Vec<f64> = (0..100).map(f64::from).collect();
        let y: Vec<f64> = x.iter().map(|v| v * 2.0 + 3.0).collect();
        let got = chatterjee_xi(&pair(&x, &y), 0).unwrap().value;
        let expect = 1.0 - 3.0 * 99.0 / (100.0 * 100.0 - 1.0);
        assert!((got - expect).abs() < 1e-15);
        assert!((got - 0.9703).abs() < 1e-4);
    }

    #[test]
    fn rejects_tiny_samples() {
        let p = pair(&[1.0, 2.0], &[3.0, 4.0]);
        assert_eq!(
            chatterjee_xi(&p, 0),
            Err(MeasureError::InsufficientSample { needed: 3, got: 2 })
        );
    }

    #[test]
    fn tie_adjusted_denominator() {
        // y has ties; the general formula must still land in [-0.5, 1]
        let p = pair(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0], &[1.0, 1.0, 2.0, 2.0, 3.0, 3.0]);
        let v = chatterjee_xi(&p, 0).unwrap().value;
        assert!(v > 0.0 && v < 1.0, "got {v}");
    }

    #[test]
    fn x_tie_breaks_are_seeded() {
        let x = [1.0, 1.0, 1.0, 2.0, 2.0, 3.0, 3.0, 4.0];
        let y = [5.0, 1.0, 3.0, 2.0, 8.0, 6.0, 4.0, 7.0];
        let p = pair(&x, &y);
        let a = chatterjee_xi(&p, 9).unwrap().value;
        let b = chatterjee_xi(&p, 9).unwrap().value;
        assert_eq!(a, b);
        // different seeds may or may not agree; both must stay in range
        let c = chatterjee_xi(&p, 10).unwrap().value;
        assert!((-1.0..=1.0).contains(&c));
    }

    #[test]
    fn asymmetric_by_construction() {
        // y is a coarse function of x, x is not a function of y
        let x = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0];
        let y = [1.0, 1.0, 1.0, 1.0, 2.0, 2.0, 2.0, 2.0];
        let p = pair(&x, &y);
        let forward = chatterjee_xi(&p, 0).unwrap().value;
        let backward = chatterjee_xi(&p.swapped(), 0).unwrap().value;
        assert_ne!(forward, backward);
    }
}
