//! The nine dependence measures behind one registry.
//!
//! Four covariance-ratio coefficients share a numerator and differ only in
//! the bound used as denominator; tightening the bound widens the capture
//! range:
//!
//! | measure        | denominator                                  | captures            |
//! |----------------|----------------------------------------------|---------------------|
//! | concordance    | `(var_x + var_y + (mean_x - mean_y)^2) / 2`  | y = ±x              |
//! | additivity     | `(var_x + var_y) / 2`                        | y = ±x + b          |
//! | pearson        | `sqrt(var_x · var_y)`                        | y = ax + b          |
//! | rearrangement  | `|cov(sorted x, oriented sorted y)|`         | monotone dependence |
//!
//! The remaining five are the usual comparators: Spearman's rho, Kendall's
//! tau-b, the xi coefficient, distance correlation and HSIC, with the
//! conventions of their reference R implementations (`stats::cor`,
//! `XICOR::calculateXI`, `energy::dcor`, `dHSIC::dhsic`).

mod dcor;
mod hsic;
mod xi;

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::MeasureError;
use crate::sample::{PairedSample, TiePolicy};

pub use dcor::distance_correlation;
pub use hsic::hsic;
pub use xi::chatterjee_xi;

/// Identifies one of the nine measures. The declaration order doubles as the
/// documented tie-break order for accuracy rankings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum MeasureId {
    Pearson,
    Additivity,
    Concordance,
    Rearrangement,
    Spearman,
    Kendall,
    Xi,
    Dcor,
    Hsic,
}

impl MeasureId {
    pub const ALL: [MeasureId; 9] = [
        MeasureId::Pearson,
        MeasureId::Additivity,
        MeasureId::Concordance,
        MeasureId::Rearrangement,
        MeasureId::Spearman,
        MeasureId::Kendall,
        MeasureId::Xi,
        MeasureId::Dcor,
        MeasureId::Hsic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeasureId::Pearson => "pearson",
            MeasureId::Additivity => "additivity",
            MeasureId::Concordance => "concordance",
            MeasureId::Rearrangement => "rearrangement",
            MeasureId::Spearman => "spearman",
            MeasureId::Kendall => "kendall",
            MeasureId::Xi => "xi",
            MeasureId::Dcor => "dcor",
            MeasureId::Hsic => "hsic",
        }
    }

    /// Conventional symbol, for table output.
    pub fn symbol(self) -> &'static str {
        match self {
            MeasureId::Pearson => "r",
            MeasureId::Additivity => "r+",
            MeasureId::Concordance => "r=",
            MeasureId::Rearrangement => "r#",
            MeasureId::Spearman => "rho",
            MeasureId::Kendall => "tau",
            MeasureId::Xi => "xi",
            MeasureId::Dcor => "dCor",
            MeasureId::Hsic => "HSIC",
        }
    }

    /// Signed measures carry direction and live in [-1, 1]; unsigned ones do
    /// not (dCor in [0, 1], xi typically in [0, 1], HSIC a raw nonnegative
    /// statistic).
    pub fn is_signed(self) -> bool {
        matches!(
            self,
            MeasureId::Pearson
                | MeasureId::Additivity
                | MeasureId::Concordance
                | MeasureId::Rearrangement
                | MeasureId::Spearman
                | MeasureId::Kendall
        )
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureId {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pearson" | "r" => Ok(MeasureId::Pearson),
            "additivity" | "r+" => Ok(MeasureId::Additivity),
            "concordance" | "r=" => Ok(MeasureId::Concordance),
            "rearrangement" | "r#" | "rsharp" => Ok(MeasureId::Rearrangement),
            "spearman" | "rho" => Ok(MeasureId::Spearman),
            "kendall" | "tau" => Ok(MeasureId::Kendall),
            "xi" => Ok(MeasureId::Xi),
            "dcor" => Ok(MeasureId::Dcor),
            "hsic" => Ok(MeasureId::Hsic),
            other => Err(alloc::format!("unknown measure {other:?}")),
        }
    }
}

/// One evaluated measure.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MeasureScore {
    pub measure: MeasureId,
    pub value: f64,
    /// Whether `value` carries direction.
    pub signed: bool,
}

impl MeasureScore {
    fn new(measure: MeasureId, value: f64) -> Self {
        MeasureScore {
            measure,
            value,
            signed: measure.is_signed(),
        }
    }
}

/// Centered second moments with the `n - 1` divisor.
struct Moments {
    sxy: f64,
    sxx: f64,
    syy: f64,
    mean_gap: f64,
}

fn moments(p: &PairedSample) -> Moments {
    let n = p.len();
    let mx = p.x().mean();
    let my = p.y().mean();
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&a, &b) in p.x().values().iter().zip(p.y().values()) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    let d = (n - 1) as f64;
    Moments {
        sxy: sxy / d,
        sxx: sxx / d,
        syy: syy / d,
        mean_gap: mx - my,
    }
}

fn clamp_unit(v: f64) -> f64 {
    v.clamp(-1.0, 1.0)
}

/// Pearson's correlation: covariance over the Cauchy–Schwarz bound.
pub fn pearson(p: &PairedSample) -> Result<MeasureScore, MeasureError> {
    p.require_nonconstant()?;
    let m = moments(p);
    Ok(MeasureScore::new(
        MeasureId::Pearson,
        clamp_unit(m.sxy / (m.sxx * m.syy).sqrt()),
    ))
}

/// Additivity coefficient: covariance over the arithmetic mean of variances.
pub fn additivity(p: &PairedSample) -> Result<MeasureScore, MeasureError> {
    p.require_nonconstant()?;
    let m = moments(p);
    Ok(MeasureScore::new(
        MeasureId::Additivity,
        clamp_unit(m.sxy / (0.5 * (m.sxx + m.syy))),
    ))
}

/// Concordance correlation: the additivity denominator further loosened by
/// the squared mean gap.
pub fn concordance(p: &PairedSample) -> Result<MeasureScore, MeasureError> {
    p.require_nonconstant()?;
    let m = moments(p);
    Ok(MeasureScore::new(
        MeasureId::Concordance,
        clamp_unit(m.sxy / (0.5 * (m.sxx + m.syy + m.mean_gap * m.mean_gap))),
    ))
}

/// Rearrangement correlation: covariance over the oriented rearranged
/// covariance, the sharpest of the four bounds.
///
/// Reaches ±1 exactly on monotone dependent samples, dominates Pearson's r
/// in magnitude everywhere, and equals it exactly when y is a permutation of
/// `a·x + b`.
pub fn rearrangement_correlation(p: &PairedSample) -> Result<MeasureScore, MeasureError> {
    p.require_nonconstant()?;
    let bound = p.oriented_rearranged_covariance()?.abs();
    if bound == 0.0 {
        // unreachable for nonconstant input by the Chebyshev sum inequality
        return Err(MeasureError::UndefinedCorrelation);
    }
    Ok(MeasureScore::new(
        MeasureId::Rearrangement,
        clamp_unit(p.covariance() / bound),
    ))
}

/// Spearman's rho: Pearson applied to average ranks.
pub fn spearman(p: &PairedSample) -> Result<MeasureScore, MeasureError> {
    p.require_nonconstant()?;
    let rx = p.x().ranks(TiePolicy::Average).into_sample();
    let ry = p.y().ranks(TiePolicy::Average).into_sample();
    let ranked = PairedSample::new(rx, ry).expect("ranks preserve length");
    let r = pearson(&ranked)?;
    Ok(MeasureScore::new(MeasureId::Spearman, r.value))
}

/// Kendall's tau-b: pair counting with tie corrections in both margins.
pub fn kendall(p: &PairedSample) -> Result<MeasureScore, MeasureError> {
    p.require_nonconstant()?;
    let x = p.x().values();
    let y = p.y().values();
    let n = x.len();
    let (mut concordant, mut discordant) = (0i64, 0i64);
    let (mut ties_x, mut ties_y) = (0i64, 0i64);
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = x[i] - x[j];
            let dy = y[i] - y[j];
            if dx == 0.0 && dy == 0.0 {
                ties_x += 1;
                ties_y += 1;
            } else if dx == 0.0 {
                ties_x += 1;
            } else if dy == 0.0 {
                ties_y += 1;
            } else if dx * dy > 0.0 {
                concordant += 1;
            } else {
                discordant += 1;
            }
        }
    }
    let n0 = (n as i64) * (n as i64 - 1) / 2;
    let denom = ((n0 - ties_x) as f64 * (n0 - ties_y) as f64).sqrt();
    Ok(MeasureScore::new(
        MeasureId::Kendall,
        clamp_unit((concordant - discordant) as f64 / denom),
    ))
}

/// Evaluates one measure. `xi_seed` feeds the xi coefficient's random
/// tie-breaks; the other eight ignore it.
pub fn evaluate(id: MeasureId, p: &PairedSample, xi_seed: u64) -> Result<MeasureScore, MeasureError> {
    match id {
        MeasureId::Pearson => pearson(p),
        MeasureId::Additivity => additivity(p),
        MeasureId::Concordance => concordance(p),
        MeasureId::Rearrangement => rearrangement_correlation(p),
        MeasureId::Spearman => spearman(p),
        MeasureId::Kendall => kendall(p),
        MeasureId::Xi => chatterjee_xi(p, xi_seed),
        MeasureId::Dcor => distance_correlation(p),
        MeasureId::Hsic => hsic(p),
    }
}

/// Evaluates every requested measure, in request order. A failure aborts the
/// batch and names the measure that rejected the input.
pub fn compute_all(
    p: &PairedSample,
    ids: &[MeasureId],
    xi_seed: u64,
) -> Result<Vec<MeasureScore>, MeasureError> {
    ids.iter()
        .map(|&id| {
            evaluate(id, p, xi_seed).map_err(|source| MeasureError::InMeasure {
                measure: id,
                source: Box::new(source),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(x: &[f64], y: &[f64]) -> PairedSample {
        PairedSample::from_slices(x, y).unwrap()
    }

    #[test]
    fn pearson_hand_examples() {
        let x = [0.3, 1.7, 0.9, 4.2];
        let linear: Vec<f64> = x.iter().map(|v| 2.0 * v + 1.0).collect();
        assert_eq!(pearson(&pair(&x, &linear)).unwrap().value, 1.0);

        assert_eq!(
            pearson(&pair(&[3.0, 1.0, 2.0], &[5.0, 4.0, 6.0])).unwrap().value,
            0.5
        );
        assert_eq!(
            pearson(&pair(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0])).unwrap().value,
            -1.0
        );
    }

    #[test]
    fn constant_input_is_rejected_by_every_measure() {
        let p = pair(&[1.0, 2.0, 3.0], &[4.0, 4.0, 4.0]);
        for id in MeasureId::ALL {
            assert!(
                evaluate(id, &p, 0).is_err(),
                "{id} accepted a constant sample"
            );
        }
    }

    #[test]
    fn additivity_hand_examples() {
        let x = [0.5, 2.0, 3.5, 7.25];
        let shifted: Vec<f64> = x.iter().map(|v| v + 5.0).collect();
        assert_eq!(additivity(&pair(&x, &shifted)).unwrap().value, 1.0);

        let doubled: Vec<f64> = x.iter().map(|v| 2.0 * v).collect();
        let got = additivity(&pair(&x, &doubled)).unwrap().value;
        assert!((got - 0.8).abs() < 1e-15);

        assert_eq!(
            additivity(&pair(&[1.0, 2.0, 3.0], &[-1.0, -2.0, -3.0])).unwrap().value,
            -1.0
        );
    }

    #[test]
    fn concordance_hand_examples() {
        let x = [1.0, 2.0, 3.0];
        assert_eq!(concordance(&pair(&x, &x)).unwrap().value, 1.0);

        // var 1 each, mean gap 1: 1 / (0.5·(1+1+1)) = 2/3
        let got = concordance(&pair(&x, &[2.0, 3.0, 4.0])).unwrap().value;
        assert!((got - 2.0 / 3.0).abs() < 1e-15);

        // a mean shift costs concordance but not additivity
        let shifted = pair(&x, &[6.0, 7.0, 8.0]);
        assert!(concordance(&shifted).unwrap().value < additivity(&shifted).unwrap().value);
    }

    #[test]
    fn rearrangement_hand_examples() {
        // monotone nonlinear: exactly 1 while pearson is below
        let p = pair(&[1.0, 2.0, 3.0], &[1.0, 4.0, 9.0]);
        assert_eq!(rearrangement_correlation(&p).unwrap().value, 1.0);
        assert!(pearson(&p).unwrap().value < 1.0);

        assert_eq!(
            rearrangement_correlation(&pair(&[3.0, 1.0, 2.0], &[5.0, 4.0, 6.0]))
                .unwrap()
                .value,
            0.5
        );

        assert_eq!(
            rearrangement_correlation(&pair(&[1.0, 2.0, 3.0], &[9.0, 4.0, 1.0]))
                .unwrap()
                .value,
            -1.0
        );
    }

    #[test]
    fn spearman_hand_examples() {
        let p = pair(&[1.0, 2.0, 3.0], &[2.0, 1.0, 3.0]);
        assert_eq!(spearman(&p).unwrap().value, 0.5);

        let x = [0.1, 0.7, 1.3, 2.9];
        let expy: Vec<f64> = x.iter().map(|v| v.exp()).collect();
        assert_eq!(spearman(&pair(&x, &expy)).unwrap().value, 1.0);
    }

    #[test]
    fn kendall_hand_examples() {
        let p = pair(&[1.0, 2.0, 3.0], &[2.0, 1.0, 3.0]);
        let got = kendall(&p).unwrap().value;
        assert!((got - 1.0 / 3.0).abs() < 1e-15);

        let x = [4.0, 1.0, 3.0, 2.0];
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        assert_eq!(kendall(&pair(&x, &neg)).unwrap().value, -1.0);

        let inc = [1.0, 2.0, 5.0, 9.0];
        let also_inc = [0.0, 3.0, 4.0, 8.0];
        assert_eq!(kendall(&pair(&inc, &also_inc)).unwrap().value, 1.0);
    }

    #[test]
    fn compute_all_orders_and_tags() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let cubic: Vec<f64> = x.iter().map(|v| v * v * v).collect();
        let p = pair(&x, &cubic);

        let scores =
            compute_all(&p, &[MeasureId::Pearson, MeasureId::Rearrangement], 0).unwrap();
        assert_eq!(scores[0].measure, MeasureId::Pearson);
        assert!(scores[0].value < 1.0);
        assert_eq!(scores[1].value, 1.0);

        assert!(compute_all(&p, &[], 0).unwrap().is_empty());

        let constant = pair(&x, &[2.0, 2.0, 2.0, 2.0]);
        let err = compute_all(&constant, &[MeasureId::Spearman], 0).unwrap_err();
        match err {
            MeasureError::InMeasure { measure, .. } => assert_eq!(measure, MeasureId::Spearman),
            other => panic!("expected tagged error, got {other:?}"),
        }
    }

    #[test]
    fn compute_all_perfect_linear() {
        let x = [0.0, 0.25, 0.5, 0.75, 1.0];
        let y: Vec<f64> = x.iter().map(|v| 2.0 * v + 1.0).collect();
        let scores = compute_all(&pair(&x, &y), &MeasureId::ALL, 0).unwrap();
        for s in &scores {
            match s.measure {
                MeasureId::Dcor => assert!((s.value - 1.0).abs() < 1e-12),
                MeasureId::Hsic => assert!(s.value > 0.0),
                MeasureId::Xi => assert!(s.value > 0.0 && s.value < 1.0),
                _ => assert_eq!(s.value, 1.0, "{} should be +1", s.measure),
            }
        }
    }

    #[test]
    fn measure_id_round_trip() {
        for id in MeasureId::ALL {
            assert_eq!(id.name().parse::<MeasureId>().unwrap(), id);
        }
        assert_eq!("r#".parse::<MeasureId>().unwrap(), MeasureId::Rearrangement);
        assert!("mic".parse::<MeasureId>().is_err());
    }
}
