//! Dataset count statistics.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{Class, Dataset, Scale};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetStats {
    pub scale: Scale,
    /// Per-class counts in ascending class order, zeros included.
    pub class_counts: Vec<(Class, usize)>,
    /// Empty when the dataset has no topics.
    pub topic_counts: BTreeMap<String, usize>,
    pub total: usize,
}

pub fn stats(d: &Dataset) -> DatasetStats {
    let scale = d.scale();
    let mut counts = alloc::vec![0usize; scale.class_count()];
    let mut topic_counts = BTreeMap::new();
    for item in d.items() {
        counts[scale
            .index_of(item.label().value())
            .expect("validated label")] += 1;
        if let Some(t) = item.topic() {
            *topic_counts.entry(String::from(t)).or_insert(0) += 1;
        }
    }
    DatasetStats {
        scale,
        class_counts: scale.classes().iter().copied().zip(counts).collect(),
        topic_counts,
        total: d.len(),
    }
}

impl DatasetStats {
    pub fn count(&self, class: Class) -> usize {
        self.class_counts
            .iter()
            .find(|(c, _)| *c == class)
            .map_or(0, |(_, n)| *n)
    }

    /// Column headers from the most positive class down, e.g. `P U N` or
    /// `2 1 0 -1 -2`.
    pub fn column_headers(&self) -> Vec<String> {
        self.class_counts
            .iter()
            .rev()
            .map(|(c, _)| match self.scale {
                Scale::FivePoint => alloc::format!("{c}"),
                _ => String::from(match c {
                    1 => "P",
                    0 => "U",
                    _ => "N",
                }),
            })
            .collect()
    }
}

/// Thousands-separated count, e.g. `12,284`.
pub fn group_thousands(n: usize) -> String {
    let digits = alloc::format!("{n}");
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i) % 3 == 0 {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

/// One row per dataset: class counts from most positive down, then the total.
impl fmt::Display for DatasetStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in self.column_headers() {
            write!(f, "{h:>8}")?;
        }
        writeln!(f, "{:>9}", "Total")?;
        for (_, n) in self.class_counts.iter().rev() {
            write!(f, "{:>8}", group_thousands(*n))?;
        }
        writeln!(f, "{:>9}", group_thousands(self.total))?;
        if !self.topic_counts.is_empty() {
            writeln!(f, "topics: {}", self.topic_counts.len())?;
            for (t, n) in &self.topic_counts {
                writeln!(f, "  {t}\t{n}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{LabeledItem, SentimentLabel};
    use alloc::format;
    use alloc::string::ToString;

    fn fixture(scale: Scale, counts: &[(Class, usize)], topic: Option<&str>) -> Dataset {
        let mut items = alloc::vec::Vec::new();
        for &(c, n) in counts {
            for i in 0..n {
                let label = SentimentLabel::new(scale, c).unwrap();
                items.push(
                    LabeledItem::new(format!("{c}_{i}"), topic.map(String::from), label).unwrap(),
                );
            }
        }
        Dataset::new(scale, items).unwrap()
    }

    #[test]
    fn english_test_a_total() {
        let d = fixture(Scale::ThreePoint, &[(1, 2375), (0, 5937), (-1, 3972)], None);
        let s = stats(&d);
        assert_eq!(s.total, 12284);
        assert_eq!(group_thousands(s.total), "12,284");
        assert_eq!(s.column_headers(), ["P", "U", "N"]);
        assert_eq!(s.count(0), 5937);
        let text = s.to_string();
        assert!(text.contains("2,375"), "{text}");
        assert!(text.contains("12,284"));
    }

    #[test]
    fn arabic_test_c_total() {
        let d = fixture(
            Scale::FivePoint,
            &[(2, 13), (1, 1548), (0, 3343), (-1, 1175), (-2, 21)],
            Some("t"),
        );
        let s = stats(&d);
        assert_eq!(s.total, 6100);
        assert_eq!(s.column_headers(), ["2", "1", "0", "-1", "-2"]);
        assert_eq!(s.topic_counts["t"], 6100);
        assert_eq!(
            s.class_counts.iter().map(|(_, n)| n).sum::<usize>(),
            s.total
        );
    }

    #[test]
    fn empty_dataset() {
        let d = Dataset::new(Scale::TwoPoint, alloc::vec![]).unwrap();
        let s = stats(&d);
        assert_eq!(s.total, 0);
        assert!(s.class_counts.iter().all(|(_, n)| *n == 0));
        assert!(s.topic_counts.is_empty());
    }

    #[test]
    fn thousands() {
        assert_eq!(group_thousands(0), "0");
        assert_eq!(group_thousands(999), "999");
        assert_eq!(group_thousands(1000), "1,000");
        assert_eq!(group_thousands(1234567), "1,234,567");
    }
}
