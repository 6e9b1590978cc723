//! Subtask definitions and report assembly.
//!
//! | id | goal           | scale   | topics |
//! |----|----------------|---------|--------|
//! | A  | classification | 3-point | no     |
//! | B  | classification | 2-point | yes    |
//! | C  | classification | 5-point | yes    |
//! | D  | quantification | 2-point | yes    |
//! | E  | quantification | 5-point | yes    |
//!
//! Topic-based subtasks are scored per topic and the per-topic values are
//! averaged without weights. Subtask A scores the whole test set as a unit.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::classification::{absent_classes, accuracy, avg_rec, f1_pn};
use crate::model::{align, Dataset, GroupByTopic, PairedData, Prevalence, Scale};
use crate::ordinal::{mae_macro, mae_micro};
use crate::quantification::{self, SmoothingConfig};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubtaskId {
    A,
    B,
    C,
    D,
    E,
}

impl FromStr for SubtaskId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(SubtaskId::A),
            "B" | "b" => Ok(SubtaskId::B),
            "C" | "c" => Ok(SubtaskId::C),
            "D" | "d" => Ok(SubtaskId::D),
            "E" | "e" => Ok(SubtaskId::E),
            other => Err(Error::InvalidLabel {
                value: other.to_string(),
            }),
        }
    }
}

impl fmt::Display for SubtaskId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Classification,
    Quantification,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubtaskSpec {
    pub id: SubtaskId,
    pub scale: Scale,
    pub mode: Mode,
    pub topic_based: bool,
}

impl SubtaskSpec {
    pub const fn new(id: SubtaskId) -> Self {
        let (scale, mode, topic_based) = match id {
            SubtaskId::A => (Scale::ThreePoint, Mode::Classification, false),
            SubtaskId::B => (Scale::TwoPoint, Mode::Classification, true),
            SubtaskId::C => (Scale::FivePoint, Mode::Classification, true),
            SubtaskId::D => (Scale::TwoPoint, Mode::Quantification, true),
            SubtaskId::E => (Scale::FivePoint, Mode::Quantification, true),
        };
        SubtaskSpec {
            id,
            scale,
            mode,
            topic_based,
        }
    }

    /// Primary metric, followed by the secondary ones.
    pub fn metrics(&self) -> &'static [Metric] {
        match self.id {
            SubtaskId::A | SubtaskId::B => &[Metric::AvgRec, Metric::F1Pn, Metric::Accuracy],
            SubtaskId::C => &[Metric::MaeMacro, Metric::MaeMicro],
            SubtaskId::D => &[Metric::Kld, Metric::Ae, Metric::Rae],
            SubtaskId::E => &[Metric::Emd],
        }
    }

    pub fn primary(&self) -> Metric {
        self.metrics()[0]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    AvgRec,
    F1Pn,
    Accuracy,
    MaeMacro,
    MaeMicro,
    Kld,
    Ae,
    Rae,
    Emd,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::AvgRec => "avgrec",
            Metric::F1Pn => "f1pn",
            Metric::Accuracy => "acc",
            Metric::MaeMacro => "maem",
            Metric::MaeMicro => "maemu",
            Metric::Kld => "kld",
            Metric::Ae => "ae",
            Metric::Rae => "rae",
            Metric::Emd => "emd",
        }
    }

    pub fn higher_is_better(self) -> bool {
        matches!(self, Metric::AvgRec | Metric::F1Pn | Metric::Accuracy)
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Metric values in the subtask's metric order.
pub type MetricValues = Vec<(Metric, f64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// Prediction rows with no matching gold item.
    IgnoredPredictions { count: usize },
    /// A topic present in predictions but not in gold.
    UnknownTopic { topic: String },
    /// A class with no gold support, left out of the macro mean.
    AbsentClass {
        topic: Option<String>,
        class: String,
    },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::IgnoredPredictions { count } => {
                write!(
                    f,
                    "{count} prediction row(s) have no gold item and were ignored"
                )
            }
            Warning::UnknownTopic { topic } => {
                write!(f, "topic `{topic}` is not in gold and was ignored")
            }
            Warning::AbsentClass {
                topic: Some(t),
                class,
            } => {
                write!(
                    f,
                    "topic `{t}`: class {class} absent from gold, excluded from macro mean"
                )
            }
            Warning::AbsentClass { topic: None, class } => {
                write!(
                    f,
                    "class {class} absent from gold, excluded from macro mean"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreReport {
    pub subtask: SubtaskSpec,
    /// Aggregate values, primary metric first.
    pub metrics: MetricValues,
    pub per_topic: BTreeMap<String, MetricValues>,
    /// Scores over the whole test set as one group, when requested.
    pub pooled: Option<MetricValues>,
    pub warnings: Vec<Warning>,
}

impl ScoreReport {
    pub fn primary(&self) -> (Metric, f64) {
        self.metrics[0]
    }

    pub fn get(&self, metric: Metric) -> Option<f64> {
        self.metrics
            .iter()
            .find(|(m, _)| *m == metric)
            .map(|(_, v)| *v)
    }

    pub fn pooled_value(&self, metric: Metric) -> Option<f64> {
        self.pooled
            .as_ref()?
            .iter()
            .find(|(m, _)| *m == metric)
            .map(|(_, v)| *v)
    }

    pub fn n_topics(&self) -> usize {
        self.per_topic.len()
    }
}

/// System output to be scored.
#[derive(Debug, Clone, PartialEq)]
pub enum Predictions {
    Labels(Dataset),
    Prevalences(BTreeMap<String, Prevalence>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalOptions {
    /// Also score the whole test set as a single group.
    pub pooled: bool,
}

/// Unweighted mean over topics.
pub fn macroaverage<'a, I>(values: I) -> Result<f64>
where
    I: IntoIterator<Item = &'a f64>,
{
    let (sum, n) = values
        .into_iter()
        .fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(sum / n as f64)
}

fn classification_values(spec: &SubtaskSpec, pd: &PairedData) -> Result<MetricValues> {
    spec.metrics()
        .iter()
        .map(|&m| {
            let v = match m {
                Metric::AvgRec => avg_rec(pd)?,
                Metric::F1Pn => f1_pn(pd)?,
                Metric::Accuracy => accuracy(pd)?,
                Metric::MaeMacro => mae_macro(pd)?,
                Metric::MaeMicro => mae_micro(pd)?,
                _ => unreachable!("quantification metric in a classification subtask"),
            };
            Ok((m, v))
        })
        .collect()
}

fn quantification_values(
    spec: &SubtaskSpec,
    pred: &Prevalence,
    truth: &Prevalence,
    test_size: usize,
) -> Result<MetricValues> {
    let cfg = SmoothingConfig::from_test_size(test_size)?;
    spec.metrics()
        .iter()
        .map(|&m| {
            let v = match m {
                Metric::Kld => quantification::kld(pred, truth, &cfg)?,
                Metric::Ae => quantification::ae(pred, truth)?,
                Metric::Rae => quantification::rae(pred, truth, &cfg)?,
                Metric::Emd => quantification::emd(pred, truth)?,
                _ => unreachable!("classification metric in a quantification subtask"),
            };
            Ok((m, v))
        })
        .collect()
}

fn average_topics(
    spec: &SubtaskSpec,
    per_topic: &BTreeMap<String, MetricValues>,
) -> Result<MetricValues> {
    spec.metrics()
        .iter()
        .enumerate()
        .map(|(i, &m)| Ok((m, macroaverage(per_topic.values().map(|v| &v[i].1))?)))
        .collect()
}

fn absent_warnings(pd: &PairedData, topic: Option<&str>, warnings: &mut Vec<Warning>) {
    for c in absent_classes(pd) {
        warnings.push(Warning::AbsentClass {
            topic: topic.map(String::from),
            class: pd.scale().class_name(c).to_string(),
        });
    }
}

/// Scores `pred` against `gold` with the metric bundle of `spec`.
pub fn evaluate(
    spec: &SubtaskSpec,
    gold: &Dataset,
    pred: &Predictions,
    opts: EvalOptions,
) -> Result<ScoreReport> {
    if gold.scale() != spec.scale {
        return Err(Error::ScaleMismatch);
    }
    if gold.is_empty() {
        return Err(Error::EmptyInput);
    }
    if spec.topic_based && !gold.has_topics() {
        return Err(Error::TopicRequired);
    }
    match (spec.mode, pred) {
        (Mode::Classification, Predictions::Labels(p)) => evaluate_labels(spec, gold, p, opts),
        (Mode::Quantification, Predictions::Prevalences(p)) => {
            evaluate_prevalences(spec, gold, p, opts)
        }
        (Mode::Quantification, Predictions::Labels(p)) => {
            // classify-and-count: a labelled prediction file implies per-topic prevalences
            if p.scale() != spec.scale {
                return Err(Error::ScaleMismatch);
            }
            let paired = align(gold, p)?;
            let mut prevalences = BTreeMap::new();
            for (topic, group) in paired.group_by_topic()? {
                let labels = group.pairs().iter().map(|x| {
                    crate::model::SentimentLabel::new(spec.scale, x.pred).expect("validated class")
                });
                prevalences.insert(topic, crate::model::prevalence_of(labels, spec.scale)?);
            }
            let mut report = evaluate_prevalences(spec, gold, &prevalences, opts)?;
            if paired.ignored_extra() > 0 {
                report.warnings.insert(
                    0,
                    Warning::IgnoredPredictions {
                        count: paired.ignored_extra(),
                    },
                );
            }
            Ok(report)
        }
        (Mode::Classification, Predictions::Prevalences(_)) => Err(Error::PredictionKind),
    }
}

fn evaluate_labels(
    spec: &SubtaskSpec,
    gold: &Dataset,
    pred: &Dataset,
    opts: EvalOptions,
) -> Result<ScoreReport> {
    let paired = align(gold, pred)?;
    let mut warnings = Vec::new();
    if paired.ignored_extra() > 0 {
        warnings.push(Warning::IgnoredPredictions {
            count: paired.ignored_extra(),
        });
    }
    if spec.topic_based {
        let gold_topics = gold.topics();
        for t in pred.topics() {
            if gold_topics.binary_search(&t).is_err() {
                warnings.push(Warning::UnknownTopic { topic: t });
            }
        }
    }
    if !spec.topic_based {
        absent_warnings(&paired, None, &mut warnings);
        let metrics = classification_values(spec, &paired)?;
        let pooled = opts.pooled.then(|| metrics.clone());
        return Ok(ScoreReport {
            subtask: *spec,
            metrics,
            per_topic: BTreeMap::new(),
            pooled,
            warnings,
        });
    }
    let mut per_topic = BTreeMap::new();
    for (topic, group) in paired.group_by_topic()? {
        absent_warnings(&group, Some(&topic), &mut warnings);
        per_topic.insert(topic, classification_values(spec, &group)?);
    }
    let metrics = average_topics(spec, &per_topic)?;
    let pooled = if opts.pooled {
        Some(classification_values(spec, &paired)?)
    } else {
        None
    };
    Ok(ScoreReport {
        subtask: *spec,
        metrics,
        per_topic,
        pooled,
        warnings,
    })
}

fn evaluate_prevalences(
    spec: &SubtaskSpec,
    gold: &Dataset,
    pred: &BTreeMap<String, Prevalence>,
    opts: EvalOptions,
) -> Result<ScoreReport> {
    let mut warnings = Vec::new();
    let groups = gold.group_by_topic()?;
    for topic in pred.keys() {
        if !groups.contains_key(topic) {
            warnings.push(Warning::UnknownTopic {
                topic: topic.clone(),
            });
        }
    }
    let mut per_topic = BTreeMap::new();
    let mut mix = Vec::with_capacity(groups.len());
    for (topic, group) in &groups {
        let Some(p) = pred.get(topic) else {
            return Err(Error::MissingPrediction {
                id: String::from("*"),
                topic: Some(topic.clone()),
            });
        };
        if p.scale() != spec.scale {
            return Err(Error::ScaleMismatch);
        }
        let truth = group.prevalence()?;
        per_topic.insert(
            topic.clone(),
            quantification_values(spec, p, &truth, group.len())?,
        );
        mix.push((p, group.len()));
    }
    let metrics = average_topics(spec, &per_topic)?;
    let pooled = if opts.pooled {
        let implied = quantification::mixture(&mix)?;
        Some(quantification_values(
            spec,
            &implied,
            &gold.prevalence()?,
            gold.len(),
        )?)
    } else {
        None
    };
    Ok(ScoreReport {
        subtask: *spec,
        metrics,
        per_topic,
        pooled,
        warnings,
    })
}

/// Sorts reports best-first by their primary metric, honouring its direction.
/// Ties keep their input order.
pub fn rank(reports: &mut [(String, ScoreReport)]) {
    reports.sort_by(|(_, a), (_, b)| {
        let (m, va) = a.primary();
        let (_, vb) = b.primary();
        let ord = va.partial_cmp(&vb).unwrap_or(core::cmp::Ordering::Equal);
        if m.higher_is_better() {
            ord.reverse()
        } else {
            ord
        }
    });
}
