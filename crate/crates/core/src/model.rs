//! Labels, scales, datasets and the gold/prediction pairing.
//!
//! A class is represented by its integer value on the scale (`-2..=2` on the
//! five-point scale, `-1, 0, 1` on the three-point scale and `-1, 1` on the
//! two-point scale). Integer order is the ordinal order of the classes, and
//! the absolute difference of two five-point values is their class distance.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Integer value of a class on its scale.
pub type Class = i8;

pub const NEGATIVE: Class = -1;
pub const NEUTRAL: Class = 0;
pub const POSITIVE: Class = 1;
pub const HIGHLY_NEGATIVE: Class = -2;
pub const HIGHLY_POSITIVE: Class = 2;

/// Sum-to-one tolerance for [`Prevalence`].
pub const PREVALENCE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scale {
    /// `[NEGATIVE, POSITIVE]`
    TwoPoint,
    /// `[NEGATIVE, NEUTRAL, POSITIVE]`
    ThreePoint,
    /// `[-2, -1, 0, +1, +2]`
    FivePoint,
}

impl Scale {
    /// Classes in ascending order.
    pub fn classes(self) -> &'static [Class] {
        match self {
            Scale::TwoPoint => &[NEGATIVE, POSITIVE],
            Scale::ThreePoint => &[NEGATIVE, NEUTRAL, POSITIVE],
            Scale::FivePoint => &[
                HIGHLY_NEGATIVE,
                NEGATIVE,
                NEUTRAL,
                POSITIVE,
                HIGHLY_POSITIVE,
            ],
        }
    }

    pub fn class_count(self) -> usize {
        self.classes().len()
    }

    pub fn contains(self, class: Class) -> bool {
        self.index_of(class).is_some()
    }

    /// Position of `class` in [`Scale::classes`].
    pub fn index_of(self, class: Class) -> Option<usize> {
        self.classes().iter().position(|&c| c == class)
    }

    pub fn class_name(self, class: Class) -> &'static str {
        match (self, class) {
            (Scale::FivePoint, -2) => "HIGHLYNEGATIVE",
            (Scale::FivePoint, 2) => "HIGHLYPOSITIVE",
            (_, -1) => "NEGATIVE",
            (_, 0) => "NEUTRAL",
            (_, 1) => "POSITIVE",
            _ => "?",
        }
    }

    /// Parses a label in either surface form: an integer on the scale or a
    /// class name (case-insensitive).
    pub fn parse_class(self, raw: &str) -> Result<Class> {
        let s = raw.trim();
        let invalid = || Error::InvalidLabel {
            value: raw.to_string(),
        };
        let class = if let Ok(v) = s.parse::<i8>() {
            v
        } else {
            match s.to_ascii_uppercase().as_str() {
                "NEGATIVE" | "WEAKLYNEGATIVE" => NEGATIVE,
                "NEUTRAL" => NEUTRAL,
                "POSITIVE" | "WEAKLYPOSITIVE" => POSITIVE,
                "HIGHLYNEGATIVE" | "STRONGLYNEGATIVE" => HIGHLY_NEGATIVE,
                "HIGHLYPOSITIVE" | "STRONGLYPOSITIVE" => HIGHLY_POSITIVE,
                _ => return Err(invalid()),
            }
        };
        if self.contains(class) {
            Ok(class)
        } else {
            Err(invalid())
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::TwoPoint => "2-point",
            Scale::ThreePoint => "3-point",
            Scale::FivePoint => "5-point",
        })
    }
}

/// A class checked to belong to its scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SentimentLabel {
    scale: Scale,
    value: Class,
}

impl SentimentLabel {
    pub fn new(scale: Scale, value: Class) -> Result<Self> {
        if scale.contains(value) {
            Ok(SentimentLabel { scale, value })
        } else {
            Err(Error::InvalidLabel {
                value: value.to_string(),
            })
        }
    }

    pub fn parse(scale: Scale, raw: &str) -> Result<Self> {
        scale
            .parse_class(raw)
            .map(|value| SentimentLabel { scale, value })
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn value(&self) -> Class {
        self.value
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledItem {
    id: String,
    topic: Option<String>,
    label: SentimentLabel,
    text: Option<String>,
}

impl LabeledItem {
    /// Topics are trimmed; an empty topic is treated as absent.
    pub fn new(
        id: impl Into<String>,
        topic: Option<String>,
        label: SentimentLabel,
    ) -> Result<Self> {
        let id = id.into();
        if id.trim().is_empty() {
            return Err(Error::EmptyId);
        }
        let topic = topic
            .map(|t| t.trim().to_string())
            .filter(|t| !t.is_empty());
        Ok(LabeledItem {
            id,
            topic,
            label,
            text: None,
        })
    }

    pub fn with_text(mut self, text: impl Into<String>) -> Self {
        self.text = Some(text.into());
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn topic(&self) -> Option<&str> {
        self.topic.as_deref()
    }

    pub fn label(&self) -> SentimentLabel {
        self.label
    }

    pub fn text(&self) -> Option<&str> {
        self.text.as_deref()
    }

    fn key(&self) -> (&str, Option<&str>) {
        (&self.id, self.topic.as_deref())
    }
}

/// Labelled items on one scale, unique by `(id, topic)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    scale: Scale,
    items: Vec<LabeledItem>,
    has_topics: bool,
}

impl Dataset {
    /// Builds a dataset, inferring `has_topics` from the first item.
    pub fn new(scale: Scale, items: Vec<LabeledItem>) -> Result<Self> {
        let has_topics = items.first().is_some_and(|i| i.topic.is_some());
        Self::from_parts(scale, items, has_topics)
    }

    pub fn from_parts(scale: Scale, items: Vec<LabeledItem>, has_topics: bool) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for item in &items {
            if item.label.scale != scale {
                return Err(Error::ScaleMismatch);
            }
            if item.topic.is_some() != has_topics {
                return Err(Error::TopicInconsistent {
                    id: item.id.clone(),
                });
            }
            if !seen.insert(item.key()) {
                return Err(Error::DuplicateKey {
                    id: item.id.clone(),
                    topic: item.topic.clone(),
                });
            }
        }
        Ok(Dataset {
            scale,
            items,
            has_topics,
        })
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn items(&self) -> &[LabeledItem] {
        &self.items
    }

    pub fn has_topics(&self) -> bool {
        self.has_topics
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Distinct topics in lexicographic order.
    pub fn topics(&self) -> Vec<String> {
        let set: BTreeSet<&str> = self.items.iter().filter_map(|i| i.topic()).collect();
        set.into_iter().map(String::from).collect()
    }

    pub fn labels(&self) -> impl Iterator<Item = SentimentLabel> + '_ {
        self.items.iter().map(|i| i.label)
    }

    /// Class prevalence over all items.
    pub fn prevalence(&self) -> Result<Prevalence> {
        prevalence_of(self.labels(), self.scale)
    }
}

/// One gold item with its predicted label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    pub id: String,
    pub topic: Option<String>,
    pub gold: Class,
    pub pred: Class,
}

/// Gold and predicted labels aligned by `(id, topic)`, in gold order.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedData {
    scale: Scale,
    pairs: Vec<Pair>,
    has_topics: bool,
    ignored_extra: usize,
}

impl PairedData {
    /// Builds paired data directly from `(gold, pred)` classes, with
    /// sequential ids and no topics.
    pub fn from_labels(scale: Scale, labels: &[(Class, Class)]) -> Result<Self> {
        let mut pairs = Vec::with_capacity(labels.len());
        for (i, &(gold, pred)) in labels.iter().enumerate() {
            if !scale.contains(gold) {
                return Err(Error::InvalidLabel {
                    value: gold.to_string(),
                });
            }
            if !scale.contains(pred) {
                return Err(Error::InvalidLabel {
                    value: pred.to_string(),
                });
            }
            pairs.push(Pair {
                id: alloc::format!("{i}"),
                topic: None,
                gold,
                pred,
            });
        }
        Ok(PairedData {
            scale,
            pairs,
            has_topics: false,
            ignored_extra: 0,
        })
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn has_topics(&self) -> bool {
        self.has_topics
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Prediction rows that matched no gold item.
    pub fn ignored_extra(&self) -> usize {
        self.ignored_extra
    }

    /// Gold class counts, indexed like [`Scale::classes`].
    pub fn gold_counts(&self) -> Vec<usize> {
        let mut counts = alloc::vec![0; self.scale.class_count()];
        for p in &self.pairs {
            counts[self.scale.index_of(p.gold).expect("validated class")] += 1;
        }
        counts
    }
}

/// Pairs every gold item with its prediction.
///
/// Prediction rows whose key does not occur in gold are ignored and counted
/// in [`PairedData::ignored_extra`].
pub fn align(gold: &Dataset, pred: &Dataset) -> Result<PairedData> {
    if gold.scale != pred.scale {
        return Err(Error::ScaleMismatch);
    }
    let lookup: BTreeMap<(&str, Option<&str>), Class> = pred
        .items
        .iter()
        .map(|i| (i.key(), i.label.value))
        .collect();
    let mut pairs = Vec::with_capacity(gold.len());
    for item in &gold.items {
        let Some(&pred) = lookup.get(&item.key()) else {
            return Err(Error::MissingPrediction {
                id: item.id.clone(),
                topic: item.topic.clone(),
            });
        };
        pairs.push(Pair {
            id: item.id.clone(),
            topic: item.topic.clone(),
            gold: item.label.value,
            pred,
        });
    }
    let ignored_extra = pred.len() - pairs.len();
    Ok(PairedData {
        scale: gold.scale,
        pairs,
        has_topics: gold.has_topics,
        ignored_extra,
    })
}

/// Splitting a collection into per-topic subsets.
pub trait GroupByTopic: Sized {
    /// Subsets keyed by topic, in lexicographic topic order.
    fn group_by_topic(&self) -> Result<BTreeMap<String, Self>>;
}

impl GroupByTopic for Dataset {
    fn group_by_topic(&self) -> Result<BTreeMap<String, Dataset>> {
        if !self.has_topics {
            return Err(Error::NoTopics);
        }
        let mut groups: BTreeMap<String, Vec<LabeledItem>> = BTreeMap::new();
        for item in &self.items {
            let topic = item.topic.clone().expect("has_topics");
            groups.entry(topic).or_default().push(item.clone());
        }
        Ok(groups
            .into_iter()
            .map(|(t, items)| {
                (
                    t,
                    Dataset {
                        scale: self.scale,
                        items,
                        has_topics: true,
                    },
                )
            })
            .collect())
    }
}

impl GroupByTopic for PairedData {
    fn group_by_topic(&self) -> Result<BTreeMap<String, PairedData>> {
        if !self.has_topics {
            return Err(Error::NoTopics);
        }
        let mut groups: BTreeMap<String, Vec<Pair>> = BTreeMap::new();
        for pair in &self.pairs {
            let topic = pair.topic.clone().expect("has_topics");
            groups.entry(topic).or_default().push(pair.clone());
        }
        Ok(groups
            .into_iter()
            .map(|(t, pairs)| {
                let pd = PairedData {
                    scale: self.scale,
                    pairs,
                    has_topics: true,
                    ignored_extra: 0,
                };
                (t, pd)
            })
            .collect())
    }
}

pub fn group_by_topic<T: GroupByTopic>(data: &T) -> Result<BTreeMap<String, T>> {
    data.group_by_topic()
}

/// A class → relative frequency distribution on a scale.
#[derive(Debug, Clone, PartialEq)]
pub struct Prevalence {
    scale: Scale,
    p: Vec<f64>,
}

impl Prevalence {
    /// `values` are indexed like [`Scale::classes`] and must sum to 1 within
    /// [`PREVALENCE_TOLERANCE`].
    pub fn new(scale: Scale, values: Vec<f64>) -> Result<Self> {
        Self::check_values(scale, &values)?;
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > PREVALENCE_TOLERANCE {
            return Err(Error::InvalidPrevalence(alloc::format!(
                "fractions sum to {sum}"
            )));
        }
        Ok(Prevalence { scale, p: values })
    }

    /// Divides `values` by their sum, after checking the sum is within
    /// `tolerance` of 1.
    pub fn normalized(scale: Scale, values: Vec<f64>, tolerance: f64) -> Result<Self> {
        Self::check_values(scale, &values)?;
        let sum: f64 = values.iter().sum();
        if !(sum - 1.0).abs().le(&tolerance) || sum <= 0.0 {
            return Err(Error::InvalidPrevalence(alloc::format!(
                "fractions sum to {sum}"
            )));
        }
        if (sum - 1.0).abs() <= PREVALENCE_TOLERANCE {
            return Ok(Prevalence { scale, p: values });
        }
        Ok(Prevalence {
            scale,
            p: values.into_iter().map(|v| v / sum).collect(),
        })
    }

    pub fn from_counts(scale: Scale, counts: &[usize]) -> Result<Self> {
        if counts.len() != scale.class_count() {
            return Err(Error::InvalidPrevalence(alloc::format!(
                "{} counts for a {} scale",
                counts.len(),
                scale
            )));
        }
        let n: usize = counts.iter().sum();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let p = counts.iter().map(|&c| c as f64 / n as f64).collect();
        Ok(Prevalence { scale, p })
    }

    pub fn point_mass(scale: Scale, class: Class) -> Result<Self> {
        let idx = scale.index_of(class).ok_or_else(|| Error::InvalidLabel {
            value: class.to_string(),
        })?;
        let mut p = alloc::vec![0.0; scale.class_count()];
        p[idx] = 1.0;
        Ok(Prevalence { scale, p })
    }

    fn check_values(scale: Scale, values: &[f64]) -> Result<()> {
        if values.len() != scale.class_count() {
            return Err(Error::InvalidPrevalence(alloc::format!(
                "{} fractions for a {} scale",
                values.len(),
                scale
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::InvalidPrevalence(alloc::format!(
                "fraction {v} out of range"
            )));
        }
        Ok(())
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    /// Fractions indexed like [`Scale::classes`].
    pub fn values(&self) -> &[f64] {
        &self.p
    }

    pub fn get(&self, class: Class) -> Option<f64> {
        self.scale.index_of(class).map(|i| self.p[i])
    }

    /// Builds a prevalence without validation; callers guarantee the invariant.
    pub(crate) fn from_raw(scale: Scale, p: Vec<f64>) -> Self {
        Prevalence { scale, p }
    }
}

/// Relative class frequencies of `labels`; absent classes get 0.
pub fn prevalence_of<I>(labels: I, scale: Scale) -> Result<Prevalence>
where
    I: IntoIterator<Item = SentimentLabel>,
{
    let mut counts = alloc::vec![0usize; scale.class_count()];
    for label in labels {
        if label.scale != scale {
            return Err(Error::ScaleMismatch);
        }
        counts[scale.index_of(label.value).expect("validated label")] += 1;
    }
    Prevalence::from_counts(scale, &counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn item(id: &str, topic: Option<&str>, scale: Scale, v: Class) -> LabeledItem {
        LabeledItem::new(
            id,
            topic.map(String::from),
            SentimentLabel::new(scale, v).unwrap(),
        )
        .unwrap()
    }

    fn ds(scale: Scale, rows: &[(&str, Option<&str>, Class)]) -> Dataset {
        Dataset::new(
            scale,
            rows.iter().map(|&(i, t, v)| item(i, t, scale, v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn scale_classes_are_ordered_and_unique() {
        for s in [Scale::TwoPoint, Scale::ThreePoint, Scale::FivePoint] {
            assert!(s.classes().windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(Scale::FivePoint.classes(), &[-2, -1, 0, 1, 2]);
    }

    #[test]
    fn label_surface_forms() {
        let s = Scale::ThreePoint;
        assert_eq!(s.parse_class("positive").unwrap(), 1);
        assert_eq!(s.parse_class(" Neutral ").unwrap(), 0);
        assert_eq!(s.parse_class("-1").unwrap(), -1);
        assert!(s.parse_class("2").is_err());
        assert!(s.parse_class("HIGHLYPOSITIVE").is_err());
        assert_eq!(Scale::FivePoint.parse_class("HighlyNegative").unwrap(), -2);
        assert_eq!(Scale::FivePoint.parse_class("+2").unwrap(), 2);
        assert!(Scale::FivePoint.parse_class("-3").is_err());
        assert!(Scale::TwoPoint.parse_class("0").is_err());
        assert!(Scale::TwoPoint.parse_class("meh").is_err());
    }

    #[test]
    fn sentiment_label_rejects_out_of_scale() {
        assert!(SentimentLabel::new(Scale::TwoPoint, 0).is_err());
        assert!(SentimentLabel::new(Scale::FivePoint, 3).is_err());
    }

    #[test]
    fn dataset_rejects_duplicates_and_mixed_topics() {
        let s = Scale::TwoPoint;
        let dup = Dataset::new(
            s,
            vec![item("t1", Some("a"), s, 1), item("t1", Some("a"), s, -1)],
        );
        assert!(matches!(dup, Err(Error::DuplicateKey { .. })));
        // same id under different topics is fine
        assert!(Dataset::new(
            s,
            vec![item("t1", Some("a"), s, 1), item("t1", Some("b"), s, 1)]
        )
        .is_ok());
        let mixed = Dataset::new(s, vec![item("t1", Some("a"), s, 1), item("t2", None, s, 1)]);
        assert!(matches!(mixed, Err(Error::TopicInconsistent { .. })));
        let other_scale = Dataset::new(s, vec![item("t1", None, Scale::ThreePoint, 1)]);
        assert_eq!(other_scale, Err(Error::ScaleMismatch));
    }

    #[test]
    fn topic_is_trimmed_not_folded() {
        let i = item("t1", Some("  Apple "), Scale::TwoPoint, 1);
        assert_eq!(i.topic(), Some("Apple"));
        let s = Scale::TwoPoint;
        let d = Dataset::new(
            s,
            vec![
                item("t1", Some("apple"), s, 1),
                item("t1", Some("Apple"), s, 1),
            ],
        );
        assert!(d.is_ok());
        assert!(LabeledItem::new(" ", None, SentimentLabel::new(s, 1).unwrap()).is_err());
    }

    #[test]
    fn align_pairs_in_gold_order() {
        let s = Scale::TwoPoint;
        let gold = ds(s, &[("t1", None, 1), ("t2", None, -1)]);
        let pred = ds(s, &[("t2", None, 1), ("t1", None, 1)]);
        let pd = align(&gold, &pred).unwrap();
        assert_eq!(pd.len(), 2);
        assert_eq!(pd.pairs()[0].id, "t1");
        assert_eq!(pd.pairs()[0].gold, pd.pairs()[0].pred);
        assert_ne!(pd.pairs()[1].gold, pd.pairs()[1].pred);
        assert_eq!(pd.ignored_extra(), 0);
    }

    #[test]
    fn align_missing_prediction() {
        let s = Scale::TwoPoint;
        let gold = ds(s, &[("t1", None, 1)]);
        let pred = Dataset::new(s, vec![]).unwrap();
        assert_eq!(
            align(&gold, &pred),
            Err(Error::MissingPrediction {
                id: "t1".into(),
                topic: None
            })
        );
    }

    #[test]
    fn align_ignores_extra_predictions() {
        let s = Scale::ThreePoint;
        let gold = ds(s, &[("t1", None, 0)]);
        let pred = ds(s, &[("t1", None, 0), ("t9", None, 1)]);
        let pd = align(&gold, &pred).unwrap();
        assert_eq!(pd.len(), 1);
        assert_eq!(pd.ignored_extra(), 1);
    }

    #[test]
    fn align_scale_mismatch() {
        let gold = ds(Scale::TwoPoint, &[("t1", None, 1)]);
        let pred = ds(Scale::ThreePoint, &[("t1", None, 1)]);
        assert_eq!(align(&gold, &pred), Err(Error::ScaleMismatch));
    }

    #[test]
    fn align_keys_on_topic_too() {
        let s = Scale::TwoPoint;
        let gold = ds(s, &[("t1", Some("a"), 1)]);
        let pred = ds(s, &[("t1", Some("b"), 1)]);
        assert!(matches!(
            align(&gold, &pred),
            Err(Error::MissingPrediction { .. })
        ));
    }

    #[test]
    fn group_by_topic_partitions() {
        let s = Scale::TwoPoint;
        let d = ds(
            s,
            &[
                ("1", Some("a"), 1),
                ("2", Some("a"), -1),
                ("3", Some("b"), 1),
            ],
        );
        let g = group_by_topic(&d).unwrap();
        assert_eq!(g["a"].len(), 2);
        assert_eq!(g["b"].len(), 1);
    }

    #[test]
    fn group_by_topic_single_topic_is_identity() {
        let s = Scale::TwoPoint;
        let d = ds(s, &[("1", Some("a"), 1), ("2", Some("a"), -1)]);
        let g = d.group_by_topic().unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g["a"], d);
    }

    #[test]
    fn group_by_topic_sorted_keys() {
        let s = Scale::TwoPoint;
        let d = ds(
            s,
            &[
                ("1", Some("b"), 1),
                ("2", Some("a"), 1),
                ("3", Some("b"), 1),
                ("4", Some("a"), 1),
            ],
        );
        let keys: Vec<_> = d.group_by_topic().unwrap().into_keys().collect();
        assert_eq!(keys, vec!["a", "b"]);
    }

    #[test]
    fn group_by_topic_requires_topics() {
        let d = ds(Scale::TwoPoint, &[("1", None, 1)]);
        assert_eq!(d.group_by_topic(), Err(Error::NoTopics));
        let pd = align(&d, &d).unwrap();
        assert_eq!(pd.group_by_topic(), Err(Error::NoTopics));
    }

    #[test]
    fn prevalence_examples() {
        let two = |v| SentimentLabel::new(Scale::TwoPoint, v).unwrap();
        let p = prevalence_of([two(1), two(1), two(-1), two(-1)], Scale::TwoPoint).unwrap();
        assert_eq!(p.values(), &[0.5, 0.5]);

        let five = SentimentLabel::new(Scale::FivePoint, 0).unwrap();
        let p = prevalence_of([five; 3], Scale::FivePoint).unwrap();
        assert_eq!(p.values(), &[0.0, 0.0, 1.0, 0.0, 0.0]);

        // English test set, three-point: 2375 positive, 5937 neutral, 3972 negative
        let p = Prevalence::from_counts(Scale::ThreePoint, &[3972, 5937, 2375]).unwrap();
        assert_eq!(crate::round3(p.get(POSITIVE).unwrap()), 0.193);
        assert!((p.get(POSITIVE).unwrap() - 0.1933).abs() < 5e-5);
        assert!((p.get(NEUTRAL).unwrap() - 0.4833).abs() < 5e-5);
        assert!((p.get(NEGATIVE).unwrap() - 0.3233).abs() < 5e-5);
    }

    #[test]
    fn prevalence_errors() {
        assert_eq!(prevalence_of([], Scale::TwoPoint), Err(Error::EmptyInput));
        let l = SentimentLabel::new(Scale::ThreePoint, 0).unwrap();
        assert_eq!(
            prevalence_of([l], Scale::TwoPoint),
            Err(Error::ScaleMismatch)
        );
        assert!(Prevalence::new(Scale::TwoPoint, vec![0.5, 0.6]).is_err());
        assert!(Prevalence::new(Scale::TwoPoint, vec![1.5, -0.5]).is_err());
        assert!(Prevalence::new(Scale::TwoPoint, vec![1.0]).is_err());
        assert!(Prevalence::new(Scale::TwoPoint, vec![f64::NAN, 1.0]).is_err());
        let p = Prevalence::normalized(Scale::TwoPoint, vec![0.3, 0.7000004], 1e-6).unwrap();
        assert!((p.values().iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!(Prevalence::normalized(Scale::TwoPoint, vec![0.3, 0.71], 1e-6).is_err());
    }
}
