//! Near-duplicate and small-topic filtering.
//!
//! Texts are compared as term-frequency vectors. Tokenization lowercases
//! (Unicode-aware), splits on whitespace and strips leading and trailing
//! punctuation from each token; tokens left empty are dropped.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{Dataset, LabeledItem};
use crate::{Error, Result};

pub const DEFAULT_THRESHOLD: f64 = 0.6;
pub const DEFAULT_MIN_TOPIC_SIZE: usize = 100;

/// A tweet as distributed, before label validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTweetRecord {
    pub id: String,
    pub topic: Option<String>,
    pub label: Option<String>,
    pub text: String,
    /// Trailing columns (user metadata and the like), kept verbatim.
    pub extra: Vec<String>,
}

/// Term → count; only positive counts are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BowVector {
    terms: BTreeMap<String, u32>,
}

fn is_punctuation(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(
            c,
            '\u{2018}'..='\u{201F}' // curly quotes
                | '\u{2010}'..='\u{2015}' // dashes
                | '\u{2026}' // ellipsis
                | '\u{00A1}' | '\u{00BF}' | '\u{00AB}' | '\u{00BB}'
                | '\u{060C}' | '\u{061B}' | '\u{061F}' | '\u{06D4}' // Arabic comma, semicolon, question mark, full stop
        )
}

pub fn tokenize(text: &str) -> impl Iterator<Item = String> + '_ {
    text.split_whitespace()
        .map(|tok| tok.trim_matches(is_punctuation).to_lowercase())
        .filter(|tok| !tok.is_empty())
}

impl BowVector {
    pub fn from_text(text: &str) -> Self {
        let mut terms = BTreeMap::new();
        for tok in tokenize(text) {
            *terms.entry(tok).or_insert(0) += 1;
        }
        BowVector { terms }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, term: &str) -> u32 {
        self.terms.get(term).copied().unwrap_or(0)
    }

    fn dot(&self, other: &BowVector) -> u64 {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .map(|(t, &c)| c as u64 * large.get(t) as u64)
            .sum()
    }

    fn norm_sq(&self) -> u64 {
        self.terms.values().map(|&c| c as u64 * c as u64).sum()
    }

    /// Cosine similarity; both vectors must be non-empty.
    pub fn cosine(&self, other: &BowVector) -> f64 {
        let denom = libm::sqrt(self.norm_sq() as f64) * libm::sqrt(other.norm_sq() as f64);
        (self.dot(other) as f64 / denom).clamp(0.0, 1.0)
    }
}

pub fn bow_cosine(a: &str, b: &str) -> Result<f64> {
    let va = BowVector::from_text(a);
    let vb = BowVector::from_text(b);
    if va.is_empty() || vb.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(va.cosine(&vb))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Removed {
    pub record: RawTweetRecord,
    /// Id of the earlier kept record it collided with.
    pub kept_id: String,
    pub similarity: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct DedupOutcome {
    pub kept: Vec<RawTweetRecord>,
    pub removed: Vec<Removed>,
}

/// Greedy scan in input order: a record is dropped when its similarity to an
/// already kept record is strictly above `threshold`.
///
/// Records whose text has no terms are only matched against identical text.
pub fn dedup(records: Vec<RawTweetRecord>, threshold: f64) -> DedupOutcome {
    let mut kept: Vec<(RawTweetRecord, BowVector)> = Vec::new();
    let mut removed = Vec::new();
    for record in records {
        let bow = BowVector::from_text(&record.text);
        let hit = kept.iter().find_map(|(k, kb)| {
            let sim = match (bow.is_empty(), kb.is_empty()) {
                (false, false) => bow.cosine(kb),
                _ if record.text.trim() == k.text.trim() => 1.0,
                _ => 0.0,
            };
            (sim > threshold).then(|| (k.id.clone(), sim))
        });
        match hit {
            Some((kept_id, similarity)) => removed.push(Removed {
                record,
                kept_id,
                similarity,
            }),
            None => kept.push((record, bow)),
        }
    }
    DedupOutcome {
        kept: kept.into_iter().map(|(r, _)| r).collect(),
        removed,
    }
}

fn topic_sizes<'a>(topics: impl Iterator<Item = &'a str>) -> BTreeMap<&'a str, usize> {
    let mut sizes = BTreeMap::new();
    for t in topics {
        *sizes.entry(t).or_insert(0) += 1;
    }
    sizes
}

/// Keeps only topics with at least `min_size` items, in original order.
pub fn topic_filter(d: &Dataset, min_size: usize) -> Result<Dataset> {
    if !d.has_topics() {
        return Err(Error::NoTopics);
    }
    let sizes = topic_sizes(d.items().iter().filter_map(|i| i.topic()));
    let items: Vec<LabeledItem> = d
        .items()
        .iter()
        .filter(|i| sizes[i.topic().expect("has_topics")] >= min_size)
        .cloned()
        .collect();
    Dataset::from_parts(d.scale(), items, true)
}

/// [`topic_filter`] for raw records. Records without a topic are kept.
pub fn topic_filter_records(records: Vec<RawTweetRecord>, min_size: usize) -> Vec<RawTweetRecord> {
    let sizes: BTreeMap<String, usize> =
        topic_sizes(records.iter().filter_map(|r| r.topic.as_deref()))
            .into_iter()
            .map(|(t, n)| (String::from(t), n))
            .collect();
    records
        .into_iter()
        .filter(|r| r.topic.as_ref().is_none_or(|t| sizes[t] >= min_size))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Scale, SentimentLabel};
    use alloc::format;
    use alloc::vec;

    fn rec(id: &str, text: &str) -> RawTweetRecord {
        RawTweetRecord {
            id: id.into(),
            topic: None,
            label: None,
            text: text.into(),
            extra: vec![],
        }
    }

    #[test]
    fn tokenization() {
        let toks: Vec<String> = tokenize("Hello, WORLD!  \"ÉCOLE\" ... #tag @user").collect();
        assert_eq!(toks, ["hello", "world", "école", "tag", "user"]);
        let toks: Vec<String> = tokenize("don't stop…").collect();
        assert_eq!(toks, ["don't", "stop"]);
    }

    #[test]
    fn cosine_examples() {
        assert!((bow_cosine("a b c", "a b c").unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(bow_cosine("a b", "c d").unwrap(), 0.0);
        assert!((bow_cosine("a b c", "a b d").unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((bow_cosine("A b.", "a B").unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(bow_cosine("", "a"), Err(Error::EmptyText));
        assert_eq!(bow_cosine("a", "!!"), Err(Error::EmptyText));
    }

    #[test]
    fn cosine_uses_term_frequencies() {
        // (2,1)·(1,1) / (sqrt 5 sqrt 2)
        let want = 3.0 / (libm::sqrt(5.0) * libm::sqrt(2.0));
        assert!((bow_cosine("a a b", "a b").unwrap() - want).abs() < 1e-15);
        // parallel vectors
        assert!((bow_cosine("a a b b", "a b").unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn dedup_examples() {
        let out = dedup(
            vec![rec("1", "a b c"), rec("2", "a b d")],
            DEFAULT_THRESHOLD,
        );
        assert_eq!(out.kept.len(), 1);
        assert_eq!(out.removed[0].record.id, "2");
        assert_eq!(out.removed[0].kept_id, "1");

        let out = dedup(
            vec![rec("1", "a b"), rec("2", "c d"), rec("3", "e f")],
            DEFAULT_THRESHOLD,
        );
        assert!(out.removed.is_empty());

        let out = dedup(
            vec![rec("1", "x"), rec("2", "x"), rec("3", "x")],
            DEFAULT_THRESHOLD,
        );
        assert_eq!(out.kept.len(), 1);
        assert_eq!(out.removed.len(), 2);
    }

    #[test]
    fn dedup_threshold_is_strict() {
        // similarity exactly 0.5
        let out = dedup(vec![rec("1", "a b"), rec("2", "a c")], 0.5);
        assert!(out.removed.is_empty());
    }

    #[test]
    fn dedup_termless_texts() {
        let out = dedup(
            vec![
                rec("1", "!!!"),
                rec("2", "!!!"),
                rec("3", "?"),
                rec("4", "a"),
            ],
            0.6,
        );
        let ids: Vec<_> = out.kept.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["1", "3", "4"]);
    }

    fn topical(sizes: &[(&str, usize)]) -> Dataset {
        let mut items = Vec::new();
        for &(t, n) in sizes {
            for i in 0..n {
                let label = SentimentLabel::new(Scale::TwoPoint, 1).unwrap();
                items.push(LabeledItem::new(format!("{t}{i}"), Some(t.into()), label).unwrap());
            }
        }
        Dataset::new(Scale::TwoPoint, items).unwrap()
    }

    #[test]
    fn topic_filter_boundary() {
        let d = topical(&[("small", 99), ("exact", 100), ("big", 150)]);
        let f = topic_filter(&d, DEFAULT_MIN_TOPIC_SIZE).unwrap();
        assert_eq!(f.topics(), vec!["big", "exact"]);
        assert_eq!(f.len(), 250);
        assert_eq!(topic_filter(&d, 1).unwrap(), d);
    }

    #[test]
    fn topic_filter_on_records() {
        let mut records: Vec<RawTweetRecord> = (0..5)
            .map(|i| RawTweetRecord {
                topic: Some("big".into()),
                ..rec(&format!("b{i}"), "x")
            })
            .collect();
        records.push(RawTweetRecord {
            topic: Some("small".into()),
            ..rec("s", "y")
        });
        records.push(rec("none", "z"));
        let kept = topic_filter_records(records, 5);
        let ids: Vec<_> = kept.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["b0", "b1", "b2", "b3", "b4", "none"]);
    }

    #[test]
    fn topic_filter_requires_topics() {
        let label = SentimentLabel::new(Scale::TwoPoint, 1).unwrap();
        let d = Dataset::new(
            Scale::TwoPoint,
            vec![LabeledItem::new("1", None, label).unwrap()],
        )
        .unwrap();
        assert_eq!(topic_filter(&d, 1), Err(Error::NoTopics));
    }
}
