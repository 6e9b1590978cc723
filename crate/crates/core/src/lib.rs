//! Scoring core for topic-based tweet sentiment evaluation.
//!
//! Everything here is a pure function over immutable values, so the crate
//! builds without `std` (only `alloc` is required). File formats, report
//! rendering and the command line live in the `sentiscore` companion crate.
//!
//! The pieces are:
//!
//! * [`model`]: scales, labels, datasets, gold/prediction alignment and
//!   prevalence extraction.
//! * [`classification`]: per-class recall and F1, AvgRec, F1 over the
//!   positive/negative classes, accuracy.
//! * [`ordinal`]: macro- and micro-averaged mean absolute error.
//! * [`quantification`]: additive smoothing, KLD, AE, RAE and EMD.
//! * [`eval`]: per-subtask metric bundles, topic macroaveraging and ranking.
//! * [`baselines`]: constant classifiers and quantifiers, and the
//!   maximum-likelihood prevalence quantifier.
//! * [`annotation`]: consolidation of five-point crowd labels.
//! * [`dedup`]: bag-of-words near-duplicate filtering and topic-size filtering.
//! * [`stats`]: per-class and per-topic dataset counts.
//!
//! ```
//! use sentiscore_core::model::{Dataset, LabeledItem, Scale, SentimentLabel};
//! use sentiscore_core::{baselines, classification, model};
//!
//! let scale = Scale::ThreePoint;
//! let items = [1, 0, -1, 0]
//!     .iter()
//!     .enumerate()
//!     .map(|(i, &v)| {
//!         LabeledItem::new(format!("t{i}"), None, SentimentLabel::new(scale, v).unwrap())
//!     })
//!     .collect::<Result<Vec<_>, _>>()
//!     .unwrap();
//! let gold = Dataset::new(scale, items).unwrap();
//! let pred = baselines::constant_classifier(&gold, 0).unwrap();
//! let paired = model::align(&gold, &pred).unwrap();
//! assert!((classification::avg_rec(&paired).unwrap() - 1.0 / 3.0).abs() < 1e-12);
//! assert_eq!(classification::accuracy(&paired).unwrap(), 0.5);
//! ```
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod annotation;
pub mod baselines;
pub mod classification;
pub mod dedup;
mod error;
pub mod eval;
pub mod model;
pub mod ordinal;
pub mod quantification;
pub mod stats;

pub use error::{Error, Result};

/// Rounds to three decimals, half away from zero.
///
/// This is the display precision of every score table; raw values are never
/// rounded before they are reported.
pub fn round3(x: f64) -> f64 {
    libm::round(x * 1000.0) / 1000.0
}
