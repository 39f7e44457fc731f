//! Trueness, precision and MAE aggregation over score tables.
//!
//! Terminology follows ISO 5725: *trueness* is the gap between the reference
//! value and the median measured score, *precision* is the interquartile
//! range of the scores, and the single-number summary is the mean absolute
//! error against the reference. Quantiles use linear interpolation between
//! order statistics (R's default type-7 convention); the convention matters
//! because IQR values differ across conventions.
//!
//! Signed measures are compared through their absolute value: the reference
//! strength R is unsigned while half the scenario registry is decreasing, so
//! a perfect score on a decreasing scenario is -R, not R. Unsigned measures
//! compare raw.
//!
//! Per (measure, R-level) cells aggregate replicate means per scenario first
//! and take medians across scenarios; MAE aggregates over all raw records of
//! a measure.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::measures::MeasureId;
use crate::scenario::ScoreTable;

/// Aggregates for one (measure, R-level) cell.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AccuracyCell {
    pub measure: MeasureId,
    pub r_level: f64,
    pub median_score: f64,
    /// reference − median (positive = underestimation).
    pub bias: f64,
    pub iqr: f64,
}

/// The full accuracy report: per-cell aggregates, per-measure MAE, and the
/// MAE ranking (ascending; ties break by measure declaration order).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AccuracyReport {
    pub cells: Vec<AccuracyCell>,
    pub mae_by_measure: BTreeMap<MeasureId, f64>,
    /// Measures ordered by ascending MAE. Measures listed in
    /// `ranking_excluded` are reported but not ranked.
    pub ranking: Vec<MeasureId>,
    pub ranking_excluded: Vec<MeasureId>,
    pub record_count: usize,
    pub failure_count: usize,
}

impl AccuracyReport {
    /// Position of a measure in the ranking, 1-based.
    pub fn rank_of(&self, measure: MeasureId) -> Option<usize> {
        self.ranking.iter().position(|&m| m == measure).map(|i| i + 1)
    }

    pub fn mae(&self, measure: MeasureId) -> Option<f64> {
        self.mae_by_measure.get(&measure).copied()
    }
}

/// Reference minus median score. Positive bias means underestimation.
pub fn trueness_bias(scores: &[f64], reference: f64) -> f64 {
    assert!(!scores.is_empty(), "bias of an empty score list");
    reference - median(scores)
}

/// Q3 − Q1 under the type-7 (linear interpolation) convention.
pub fn precision_iqr(scores: &[f64]) -> f64 {
    assert!(!scores.is_empty(), "IQR of an empty score list");
    let mut sorted = scores.to_vec();
    sorted.sort_by(f64::total_cmp);
    quantile_sorted(&sorted, 0.75) - quantile_sorted(&sorted, 0.25)
}

/// Mean absolute error over (score, reference) pairs.
pub fn mae(scores_with_refs: &[(f64, f64)]) -> f64 {
    assert!(!scores_with_refs.is_empty(), "MAE of an empty list");
    scores_with_refs
        .iter()
        .map(|(s, r)| (s - r).abs())
        .sum::<f64>()
        / scores_with_refs.len() as f64
}

/// Median; even-length lists take the midpoint of the two central order
/// statistics (the p = 0.5 case of the type-7 quantile).
pub fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    quantile_sorted(&sorted, 0.5)
}

/// Type-7 quantile of an ascending-sorted slice.
fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(n - 1);
    let frac = h - lo as f64;
    sorted[lo] + frac * (sorted[hi] - sorted[lo])
}

/// How each record's reference value is obtained.
pub enum ReferenceRule<'a> {
    /// Simulation grids: the reference is the record's target R.
    TargetR,
    /// Benchmarks on real data: a per-dataset reference, keyed by the
    /// record's scenario name.
    PerScenario(&'a BTreeMap<String, f64>),
}

impl ReferenceRule<'_> {
    fn reference_for(&self, scenario: &str, target_r: f64) -> Option<f64> {
        match self {
            ReferenceRule::TargetR => Some(target_r),
            ReferenceRule::PerScenario(map) => map.get(scenario).copied(),
        }
    }
}

/// Score as compared against the unsigned reference.
fn adjusted(measure: MeasureId, score: f64) -> f64 {
    if measure.is_signed() {
        score.abs()
    } else {
        score
    }
}

/// Builds the accuracy report for a score table.
///
/// `exclude_from_ranking` keeps a measure's cells and MAE in the report but
/// leaves it out of the ordering (used for raw-scale HSIC in default runs).
/// Records whose scenario has no reference under the rule are counted as
/// failures.
pub fn build_report(
    table: &ScoreTable,
    rule: &ReferenceRule<'_>,
    exclude_from_ranking: &[MeasureId],
) -> AccuracyReport {
    // (measure, level) -> scenario -> replicate scores
    let mut per_cell: BTreeMap<(MeasureId, usize), BTreeMap<usize, Vec<f64>>> = BTreeMap::new();
    let mut abs_errors: BTreeMap<MeasureId, Vec<f64>> = BTreeMap::new();
    let mut level_refs: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    let mut unreferenced = 0usize;

    for rec in &table.records {
        let Some(reference) = rule.reference_for(&rec.scenario, rec.target_r) else {
            unreferenced += 1;
            continue;
        };
        let score = adjusted(rec.measure, rec.score);
        per_cell
            .entry((rec.measure, rec.level_index))
            .or_default()
            .entry(rec.scenario_index)
            .or_default()
            .push(score);
        abs_errors
            .entry(rec.measure)
            .or_default()
            .push((score - reference).abs());
        level_refs.entry(rec.level_index).or_default().push(reference);
    }

    let mut cells = Vec::with_capacity(per_cell.len());
    for ((measure, level_index), by_scenario) in &per_cell {
        // replicate mean per scenario, then medians across scenarios
        let means: Vec<f64> = by_scenario
            .values()
            .map(|scores| scores.iter().sum::<f64>() / scores.len() as f64)
            .collect();
        // under the target-R rule every reference at a level is the same
        // value; per-scenario rules contribute their median
        let reference = median(&level_refs[level_index]);
        let median_score = median(&means);
        cells.push(AccuracyCell {
            measure: *measure,
            r_level: reference,
            median_score,
            bias: reference - median_score,
            iqr: precision_iqr(&means),
        });
    }

    let mae_by_measure: BTreeMap<MeasureId, f64> = abs_errors
        .iter()
        .map(|(m, errs)| (*m, errs.iter().sum::<f64>() / errs.len() as f64))
        .collect();

    let mut ranking: Vec<MeasureId> = mae_by_measure
        .keys()
        .copied()
        .filter(|m| !exclude_from_ranking.contains(m))
        .collect();
    // ascending MAE; BTreeMap iteration already fixed the declaration-order
    // tie-break among equal keys
    ranking.sort_by(|a, b| {
        mae_by_measure[a]
            .partial_cmp(&mae_by_measure[b])
            .unwrap_or(core::cmp::Ordering::Equal)
            .then(a.cmp(b))
    });
    let ranking_excluded: Vec<MeasureId> = mae_by_measure
        .keys()
        .copied()
        .filter(|m| exclude_from_ranking.contains(m))
        .collect();

    AccuracyReport {
        cells,
        mae_by_measure,
        ranking,
        ranking_excluded,
        record_count: table.records.len() - unreferenced,
        failure_count: table.failures.len() + unreferenced,
    }
}
