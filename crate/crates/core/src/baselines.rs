//! Trivial reference systems: constant classifiers, constant quantifiers and
//! the maximum-likelihood quantifier that predicts the training prevalence.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{Class, Dataset, GroupByTopic, LabeledItem, Prevalence, SentimentLabel};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Averaging {
    /// Pool all training items.
    Micro,
    /// Average the per-topic training prevalences.
    Macro,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BaselineSpec {
    ConstantClass(Class),
    ConstantPrevalence(Prevalence),
    MlPrevalence {
        train: Dataset,
        averaging: Averaging,
    },
}

/// Labels every gold item with `class`.
pub fn constant_classifier(gold: &Dataset, class: Class) -> Result<Dataset> {
    let label = SentimentLabel::new(gold.scale(), class).map_err(|_| Error::ScaleMismatch)?;
    let items = gold
        .items()
        .iter()
        .map(|i| LabeledItem::new(i.id(), i.topic().map(String::from), label))
        .collect::<Result<Vec<_>>>()?;
    Dataset::from_parts(gold.scale(), items, gold.has_topics())
}

/// The same prevalence for every topic.
pub fn constant_quantifier<S: AsRef<str>>(
    topics: &[S],
    p: &Prevalence,
) -> BTreeMap<String, Prevalence> {
    topics
        .iter()
        .map(|t| (String::from(t.as_ref()), p.clone()))
        .collect()
}

/// Training-set prevalence, pooled or averaged over topics.
pub fn ml_quantifier(train: &Dataset, averaging: Averaging) -> Result<Prevalence> {
    if train.is_empty() {
        return Err(Error::EmptyInput);
    }
    match averaging {
        Averaging::Micro => train.prevalence(),
        Averaging::Macro => {
            let groups = train.group_by_topic()?;
            let scale = train.scale();
            let mut acc = alloc::vec![0.0; scale.class_count()];
            for group in groups.values() {
                for (a, v) in acc.iter_mut().zip(group.prevalence()?.values()) {
                    *a += v;
                }
            }
            let sum: f64 = acc.iter().sum();
            Prevalence::new(scale, acc.into_iter().map(|v| v / sum).collect())
        }
    }
}
