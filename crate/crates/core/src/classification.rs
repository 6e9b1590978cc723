//! Classification measures over paired gold/predicted labels.
//!
//! A class that never occurs in gold has undefined recall. [`avg_rec`]
//! averages only over classes that do occur, which matters for per-topic
//! two-point sets where one polarity can be missing entirely.

use alloc::vec::Vec;

use crate::model::{Class, PairedData, Scale, NEGATIVE, POSITIVE};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassScore {
    pub class: Class,
    /// 0 when the class has no gold support.
    pub recall: f64,
    /// 0 when the class is never predicted.
    pub precision: f64,
    pub f1: f64,
    /// Number of gold items of this class.
    pub support: usize,
}

struct Counts {
    hits: usize,
    gold: usize,
    predicted: usize,
}

fn counts(pd: &PairedData, class: Class) -> Counts {
    let mut c = Counts {
        hits: 0,
        gold: 0,
        predicted: 0,
    };
    for p in pd.pairs() {
        let g = p.gold == class;
        let h = p.pred == class;
        c.gold += g as usize;
        c.predicted += h as usize;
        c.hits += (g && h) as usize;
    }
    c
}

fn harmonic(precision: f64, recall: f64) -> f64 {
    if precision + recall > 0.0 {
        2.0 * precision * recall / (precision + recall)
    } else {
        0.0
    }
}

/// Recall of `class`, or `None` when gold holds no item of that class.
pub fn class_recall(pd: &PairedData, class: Class) -> Option<f64> {
    let c = counts(pd, class);
    (c.gold > 0).then(|| c.hits as f64 / c.gold as f64)
}

pub fn class_score(pd: &PairedData, class: Class) -> ClassScore {
    let c = counts(pd, class);
    let recall = if c.gold > 0 {
        c.hits as f64 / c.gold as f64
    } else {
        0.0
    };
    let precision = if c.predicted > 0 {
        c.hits as f64 / c.predicted as f64
    } else {
        0.0
    };
    ClassScore {
        class,
        recall,
        precision,
        f1: harmonic(precision, recall),
        support: c.gold,
    }
}

/// Scores for every class of the scale, in ascending class order.
pub fn class_scores(pd: &PairedData) -> Vec<ClassScore> {
    pd.scale()
        .classes()
        .iter()
        .map(|&c| class_score(pd, c))
        .collect()
}

pub fn class_f1(pd: &PairedData, class: Class) -> Result<f64> {
    if pd.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(class_score(pd, class).f1)
}

/// Classes of the scale that have no gold support in `pd`.
pub fn absent_classes(pd: &PairedData) -> Vec<Class> {
    let counts = pd.gold_counts();
    pd.scale()
        .classes()
        .iter()
        .zip(counts)
        .filter(|(_, n)| *n == 0)
        .map(|(&c, _)| c)
        .collect()
}

/// Recall averaged over the classes present in gold.
pub fn avg_rec(pd: &PairedData) -> Result<f64> {
    if pd.is_empty() {
        return Err(Error::EmptyInput);
    }
    let recalls: Vec<f64> = pd
        .scale()
        .classes()
        .iter()
        .filter_map(|&c| class_recall(pd, c))
        .collect();
    Ok(recalls.iter().sum::<f64>() / recalls.len() as f64)
}

pub fn accuracy(pd: &PairedData) -> Result<f64> {
    if pd.is_empty() {
        return Err(Error::EmptyInput);
    }
    let hits = pd.pairs().iter().filter(|p| p.gold == p.pred).count();
    Ok(hits as f64 / pd.len() as f64)
}

/// Mean of the positive and negative class F1; neutral is left out.
pub fn f1_pn(pd: &PairedData) -> Result<f64> {
    if !matches!(pd.scale(), Scale::TwoPoint | Scale::ThreePoint) {
        return Err(Error::UnsupportedScale);
    }
    Ok((class_f1(pd, POSITIVE)? + class_f1(pd, NEGATIVE)?) / 2.0)
}
