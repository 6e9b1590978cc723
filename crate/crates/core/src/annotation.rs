//! Consolidation of crowd annotations on the five-point scale.
//!
//! A label held by a strict majority of annotators wins outright. Otherwise
//! the labels are averaged and the mean is mapped back to a class with the
//! cut points moved from ±0.5/±1.5 to ±0.4/±1.4. A mean sitting exactly on a
//! cut point goes to the class further from zero.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::model::Class;
use crate::{Error, Result};

pub const MIN_ANNOTATORS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrowdAnnotation {
    item_id: String,
    topic: Option<String>,
    labels: Vec<Class>,
}

impl CrowdAnnotation {
    pub fn new(
        item_id: impl Into<String>,
        topic: Option<String>,
        labels: Vec<Class>,
    ) -> Result<Self> {
        if let Some(bad) = labels.iter().find(|l| !(-2..=2).contains(*l)) {
            return Err(Error::InvalidLabel {
                value: bad.to_string(),
            });
        }
        if labels.len() < MIN_ANNOTATORS {
            return Err(Error::TooFewAnnotators { n: labels.len() });
        }
        Ok(CrowdAnnotation {
            item_id: item_id.into(),
            topic,
            labels,
        })
    }

    pub fn item_id(&self) -> &str {
        &self.item_id
    }

    pub fn topic(&self) -> Option<&str> {
        self.topic.as_deref()
    }

    pub fn labels(&self) -> &[Class] {
        &self.labels
    }
}

/// Label held by at least `floor(n/2) + 1` annotators, if any.
pub fn majority_label(labels: &[Class]) -> Option<Class> {
    let needed = labels.len() / 2 + 1;
    let mut counts = [0usize; 5];
    for &l in labels {
        counts[(l + 2) as usize] += 1;
    }
    counts
        .iter()
        .position(|&c| c >= needed)
        .map(|i| i as Class - 2)
}

/// Maps the mean `sum / n` to a class with cut points at ±0.4 and ±1.4.
///
/// Works on the integer sum so the cut points are compared exactly.
pub fn round_mean(sum: i64, n: usize) -> Class {
    let n = n as i64;
    // mean >= t/10  <=>  10 * sum >= t * n
    let at_least = |tenths: i64| 10 * sum >= tenths * n;
    let at_most = |tenths: i64| 10 * sum <= tenths * n;
    if at_least(14) {
        2
    } else if at_least(4) {
        1
    } else if at_most(-14) {
        -2
    } else if at_most(-4) {
        -1
    } else {
        0
    }
}

pub fn consolidate(a: &CrowdAnnotation) -> Class {
    majority_label(&a.labels).unwrap_or_else(|| {
        let sum: i64 = a.labels.iter().map(|&l| l as i64).sum();
        round_mean(sum, a.labels.len())
    })
}

/// Validates the labels and consolidates them in one step.
pub fn consolidate_labels(labels: &[Class]) -> Result<Class> {
    let a = CrowdAnnotation::new(String::new(), None, labels.to_vec())?;
    Ok(consolidate(&a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn examples() {
        assert_eq!(consolidate_labels(&[1, 1, 1, -2, -2]).unwrap(), 1);
        assert_eq!(consolidate_labels(&[2, 1, 0, -1, -2]).unwrap(), 0);
        assert_eq!(consolidate_labels(&[2, 2, 1, 1, 0]).unwrap(), 1);
        assert_eq!(consolidate_labels(&[2, 1, -1, 0, 0]).unwrap(), 1);
    }

    #[test]
    fn cut_points_go_away_from_zero() {
        assert_eq!(round_mean(7, 5), 2); // 1.4
        assert_eq!(round_mean(2, 5), 1); // 0.4
        assert_eq!(round_mean(-2, 5), -1);
        assert_eq!(round_mean(-7, 5), -2);
        assert_eq!(round_mean(1, 5), 0);
        assert_eq!(round_mean(-1, 5), 0);
        assert_eq!(round_mean(6, 5), 1);
        assert_eq!(round_mean(-6, 5), -1);
    }

    #[test]
    fn strict_majority_for_more_annotators() {
        // 3 of 6 is not a strict majority
        assert_eq!(majority_label(&[2, 2, 2, -2, -2, -2]), None);
        assert_eq!(majority_label(&[2, 2, 2, 2, -2, -2]), Some(2));
        assert_eq!(consolidate_labels(&[2, 2, 2, -2, -2, -2]).unwrap(), 0);
        assert_eq!(majority_label(&[0, 0, 0, 1, 2, -1, -2]), None);
    }

    #[test]
    fn validation() {
        assert_eq!(
            consolidate_labels(&[1, 1, 1, 1]),
            Err(Error::TooFewAnnotators { n: 4 })
        );
        assert!(matches!(
            consolidate_labels(&[1, 1, 1, 1, 3]),
            Err(Error::InvalidLabel { .. })
        ));
        let a = CrowdAnnotation::new("t1", Some("x".into()), vec![0; 5]).unwrap();
        assert_eq!(a.item_id(), "t1");
        assert_eq!(consolidate(&a), 0);
    }
}
