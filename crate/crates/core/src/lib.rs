//! Rearrangement correlation and companion dependence measures.
//!
//! Pearson's r scales covariance by the Cauchy–Schwarz bound
//! `sqrt(var(x)·var(y))`. Sorting both samples and taking the covariance of
//! the rearranged pair gives a strictly tighter bound, and dividing by it
//! instead yields the *rearrangement correlation*: a coefficient that reaches
//! ±1 exactly on monotone-dependent samples and reverts to Pearson's r under
//! linear dependence. This crate implements that coefficient together with
//! eight comparator measures behind one registry, plus the machinery used to
//! benchmark them: a seeded scenario simulation engine and trueness /
//! precision / MAE accuracy aggregation.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the companion
//! `rearcor-cli` crate carries IO, file formats and the command-line tool.
//!
//! # Quick example
//!
//! ```
//! use rearcor_core::{PairedSample, measures};
//!
//! // A noiseless monotone (but nonlinear) relationship.
//! let x = [0.1, 0.4, 0.9, 1.6, 2.5];
//! let y: Vec<f64> = x.iter().map(|v| v * v * v).collect();
//! let p = PairedSample::from_slices(&x, &y).unwrap();
//!
//! let r = measures::pearson(&p).unwrap().value;
//! let r_sharp = measures::rearrangement_correlation(&p).unwrap().value;
//! assert!(r < 1.0);
//! assert!((r_sharp - 1.0).abs() < 1e-15);
//! ```

#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod accuracy;
pub mod error;
pub mod expr;
pub mod measures;
pub mod rng;
pub mod sample;
pub mod scenario;

pub use error::{ExprError, MeasureError, SampleError};
pub use measures::{MeasureId, MeasureScore};
pub use sample::{PairedSample, RankVector, Sample, TiePolicy};
pub use scenario::{Family, Scenario, ScoreRecord, ScoreTable, SimConfig};
