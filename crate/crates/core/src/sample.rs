//! Sample containers, rearrangements, moments and ranks.
//!
//! Everything downstream (the coefficients, the simulation engine, the
//! accuracy metrics) consumes the two types defined here. Conventions that
//! the rest of the crate relies on:
//!
//! * covariance and variance use the `n - 1` divisor and two-pass centered
//!   sums (the inequality-chain tests run at 1e-12 relative tolerance);
//! * constant-sample detection is exact equality, no epsilon;
//! * the oriented rearranged covariance follows the sign of the plain
//!   covariance: both samples sorted the same way when it is nonnegative,
//!   opposite ways when it is negative.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{MeasureError, SampleError};

/// One variable's observations: finite reals, at least two of them.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    /// Validates length and finiteness.
    pub fn new(values: Vec<f64>) -> Result<Self, SampleError> {
        if values.len() < 2 {
            return Err(SampleError::TooShort { len: values.len() });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(SampleError::NonFinite { index });
        }
        Ok(Sample { values })
    }

    pub fn from_slice(values: &[f64]) -> Result<Self, SampleError> {
        Self::new(values.to_vec())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Exact test: true when all observations are the same value.
    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|&v| v == self.values[0])
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Sample variance with the `n - 1` divisor; zero iff constant.
    pub fn variance(&self) -> f64 {
        if self.is_constant() {
            return 0.0;
        }
        let m = self.mean();
        let ss: f64 = self.values.iter().map(|&v| (v - m) * (v - m)).sum();
        ss / (self.values.len() - 1) as f64
    }

    /// The increasing rearrangement: the same multiset sorted ascending.
    pub fn increasing_rearrangement(&self) -> Sample {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        Sample { values: v }
    }

    /// The decreasing rearrangement: the same multiset sorted descending.
    pub fn decreasing_rearrangement(&self) -> Sample {
        let mut v = self.values.clone();
        v.sort_by(|a, b| f64::total_cmp(b, a));
        Sample { values: v }
    }

    /// Ranks the observations, 1-based.
    pub fn ranks(&self, policy: TiePolicy) -> RankVector {
        let n = self.values.len();
        let mut order: Vec<usize> = (0..n).collect();
        match policy {
            TiePolicy::Average => {
                order.sort_by(|&a, &b| f64::total_cmp(&self.values[a], &self.values[b]));
                let mut ranks = alloc::vec![0.0; n];
                let mut i = 0;
                while i < n {
                    let mut j = i;
                    while j < n && self.values[order[j]] == self.values[order[i]] {
                        j += 1;
                    }
                    // ranks i+1 ..= j averaged over the tied block
                    let avg = (i + 1 + j) as f64 / 2.0;
                    for &idx in &order[i..j] {
                        ranks[idx] = avg;
                    }
                    i = j;
                }
                RankVector { ranks, policy }
            }
            TiePolicy::Random { seed } => {
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                let mut tags: Vec<usize> = (0..n).collect();
                tags.shuffle(&mut rng);
                order.sort_by(|&a, &b| {
                    f64::total_cmp(&self.values[a], &self.values[b])
                        .then_with(|| tags[a].cmp(&tags[b]))
                });
                let mut ranks = alloc::vec![0.0; n];
                for (pos, &idx) in order.iter().enumerate() {
                    ranks[idx] = (pos + 1) as f64;
                }
                RankVector { ranks, policy }
            }
        }
    }
}

/// How tied observations are ranked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TiePolicy {
    /// Tied values share the mean of the ranks they span (half-integers allowed).
    Average,
    /// Ties broken uniformly at random, reproducibly from the seed.
    Random { seed: u64 },
}

/// 1-based ranks of a sample under a tie policy.
#[derive(Debug, Clone, PartialEq)]
pub struct RankVector {
    ranks: Vec<f64>,
    policy: TiePolicy,
}

impl RankVector {
    pub fn ranks(&self) -> &[f64] {
        &self.ranks
    }

    pub fn policy(&self) -> TiePolicy {
        self.policy
    }

    /// Ranks are a valid sample themselves (n >= 2 by construction).
    pub fn into_sample(self) -> Sample {
        Sample { values: self.ranks }
    }
}

/// Aligned observations of two variables.
///
/// Construction only checks alignment and finiteness; the coefficients
/// reject constant columns themselves (plain covariance is well defined on
/// a constant column, so it stays computable here).
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSample {
    x: Sample,
    y: Sample,
}

impl PairedSample {
    pub fn new(x: Sample, y: Sample) -> Result<Self, SampleError> {
        if x.len() != y.len() {
            return Err(SampleError::LengthMismatch {
                x_len: x.len(),
                y_len: y.len(),
            });
        }
        Ok(PairedSample { x, y })
    }

    pub fn from_slices(x: &[f64], y: &[f64]) -> Result<Self, SampleError> {
        Self::new(Sample::from_slice(x)?, Sample::from_slice(y)?)
    }

    pub fn x(&self) -> &Sample {
        &self.x
    }

    pub fn y(&self) -> &Sample {
        &self.y
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// The same data with the roles of x and y exchanged.
    pub fn swapped(&self) -> PairedSample {
        PairedSample {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    /// True when neither column is constant.
    pub fn is_nonconstant(&self) -> bool {
        !self.x.is_constant() && !self.y.is_constant()
    }

    /// Errs with the common "undefined correlation" class on a constant column.
    pub fn require_nonconstant(&self) -> Result<(), MeasureError> {
        if self.is_nonconstant() {
            Ok(())
        } else {
            Err(MeasureError::UndefinedCorrelation)
        }
    }

    /// Sample covariance, `n - 1` divisor, two-pass.
    pub fn covariance(&self) -> f64 {
        covariance_of(self.x.values(), self.y.values())
    }

    /// Covariance of the rearranged pair, oriented by the sign of the plain
    /// covariance: both ascending when `cov >= 0`, x ascending against y
    /// descending otherwise.
    ///
    /// By the rearrangement inequality the result dominates the plain
    /// covariance in magnitude and is itself dominated by
    /// `sqrt(var(x)·var(y))`; it is nonzero whenever both columns are
    /// nonconstant. Constant input has no orientation and is rejected.
    pub fn oriented_rearranged_covariance(&self) -> Result<f64, MeasureError> {
        if !self.is_nonconstant() {
            return Err(MeasureError::UndefinedOrientationBound);
        }
        let xs = self.x.increasing_rearrangement();
        let ys = if self.covariance() >= 0.0 {
            self.y.increasing_rearrangement()
        } else {
            self.y.decreasing_rearrangement()
        };
        Ok(covariance_of(xs.values(), ys.values()))
    }

    /// Whether the pairs lie on a non-decreasing or non-increasing subset of
    /// the plane (ties on either axis permitted).
    pub fn is_monotone_dependent(&self) -> bool {
        let neg: Vec<f64> = self.y.values().iter().map(|v| -v).collect();
        non_decreasing_set(self.x.values(), self.y.values())
            || non_decreasing_set(self.x.values(), &neg)
    }
}

/// True when `{(x_i, y_i)}` is a non-decreasing subset of the plane:
/// `x_a < x_b` implies `y_a <= y_b` for every pair of points.
fn non_decreasing_set(x: &[f64], y: &[f64]) -> bool {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| f64::total_cmp(&x[a], &x[b]).then(f64::total_cmp(&y[a], &y[b])));
    // Within a tied-x block y is ascending, so adjacent violations are the
    // only possible ones.
    order.windows(2).all(|w| x[w[0]] == x[w[1]] || y[w[0]] <= y[w[1]])
}

fn covariance_of(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    let n = x.len();
    let mx = x.iter().sum::<f64>() / n as f64;
    let my = y.iter().sum::<f64>() / n as f64;
    let s: f64 = x
        .iter()
        .zip(y.iter())
        .map(|(&a, &b)| (a - mx) * (b - my))
        .sum();
    s / (n - 1) as f64
}
