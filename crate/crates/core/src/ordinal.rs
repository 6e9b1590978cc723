//! Mean absolute error for five-point ordinal classification.
//!
//! The error of a prediction is its class distance `|pred - gold|`, so the
//! worst single mistake (`-2` for `+2`) costs 4. Lower is better.

use crate::model::{PairedData, Scale};
use crate::{Error, Result};

fn check(pd: &PairedData) -> Result<()> {
    if pd.scale() != Scale::FivePoint {
        return Err(Error::UnsupportedScale);
    }
    if pd.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(())
}

/// Per-gold-class MAE averaged over the classes present in gold.
pub fn mae_macro(pd: &PairedData) -> Result<f64> {
    check(pd)?;
    let scale = pd.scale();
    let mut err = [0u64; 5];
    let mut n = [0u64; 5];
    for p in pd.pairs() {
        let j = scale.index_of(p.gold).expect("validated class");
        err[j] += (p.pred - p.gold).unsigned_abs() as u64;
        n[j] += 1;
    }
    let (sum, k) = err
        .iter()
        .zip(&n)
        .filter(|(_, &n)| n > 0)
        .fold((0.0, 0usize), |(s, k), (&e, &n)| {
            (s + e as f64 / n as f64, k + 1)
        });
    Ok(sum / k as f64)
}

/// MAE over all items.
pub fn mae_micro(pd: &PairedData) -> Result<f64> {
    check(pd)?;
    let total: u64 = pd
        .pairs()
        .iter()
        .map(|p| (p.pred - p.gold).unsigned_abs() as u64)
        .sum();
    Ok(total as f64 / pd.len() as f64)
}
