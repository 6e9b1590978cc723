//! Tab-separated file formats.
//!
//! * Label files: `id<TAB>topic<TAB>label[<TAB>text[<TAB>extra...]]`, with the
//!   literal topic `NA` meaning "no topic".
//! * Prevalence files: `topic<TAB>class<TAB>prevalence`, one class per line.
//!   Classes missing for a topic count as 0; each topic must sum to 1 within
//!   [`PREVALENCE_FILE_TOLERANCE`] and is renormalized.
//! * Annotation files: `id<TAB>topic<TAB>label1<TAB>...<TAB>labelN`.
//!
//! Files are UTF-8, one record per line. Blank lines are skipped and a
//! trailing `\r` is stripped. Line numbers in errors are 1-based.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use sentiscore_core::annotation::CrowdAnnotation;
use sentiscore_core::dedup::RawTweetRecord;
use sentiscore_core::model::{Class, Dataset, LabeledItem, Prevalence, Scale, SentimentLabel};

use crate::error::{Error, LineError, Result};

pub const NO_TOPIC: &str = "NA";
pub const PREVALENCE_FILE_TOLERANCE: f64 = 1e-6;

/// Opens `path` for reading; `-` is standard input.
pub fn open(path: &Path) -> Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(Box::new(BufReader::new(file)))
}

/// Non-blank lines with their 1-based numbers, split on tabs.
fn records<'a, R: BufRead + 'a>(
    reader: R,
    name: &'a str,
) -> impl Iterator<Item = Result<(usize, Vec<String>)>> + 'a {
    reader
        .lines()
        .enumerate()
        .filter_map(move |(i, line)| match line {
            Err(source) => Some(Err(Error::Io {
                path: name.to_string(),
                source,
            })),
            Ok(line) => {
                let line = line.strip_suffix('\r').unwrap_or(&line);
                if line.trim().is_empty() {
                    None
                } else {
                    Some(Ok((i + 1, line.split('\t').map(String::from).collect())))
                }
            }
        })
}

fn topic_field(raw: &str) -> Option<String> {
    let t = raw.trim();
    (t != NO_TOPIC && !t.is_empty()).then(|| t.to_string())
}

fn malformed(name: &str, line: usize, why: impl Into<String>) -> Error {
    Error::line(name, line, LineError::Malformed(why.into()))
}

/// Parses a label file into a validated dataset on `scale`.
pub fn parse_dataset<R: BufRead>(reader: R, name: &str, scale: Scale) -> Result<Dataset> {
    let mut items: Vec<LabeledItem> = Vec::new();
    let mut seen: BTreeSet<(String, Option<String>)> = BTreeSet::new();
    let mut has_topics = None;
    for rec in records(reader, name) {
        let (line, cols) = rec?;
        if cols.len() < 3 {
            return Err(malformed(
                name,
                line,
                format!("expected at least 3 columns, found {}", cols.len()),
            ));
        }
        let label =
            SentimentLabel::parse(scale, &cols[2]).map_err(|e| Error::line(name, line, e))?;
        let item = LabeledItem::new(cols[0].trim(), topic_field(&cols[1]), label)
            .map_err(|e| Error::line(name, line, e))?;
        let item = match cols.get(3) {
            Some(text) => item.with_text(text.as_str()),
            None => item,
        };
        let topical = item.topic().is_some();
        if *has_topics.get_or_insert(topical) != topical {
            return Err(Error::line(
                name,
                line,
                sentiscore_core::Error::TopicInconsistent {
                    id: item.id().to_string(),
                },
            ));
        }
        let key = (item.id().to_string(), item.topic().map(String::from));
        if !seen.insert(key.clone()) {
            let dup = sentiscore_core::Error::DuplicateKey {
                id: key.0,
                topic: key.1,
            };
            return Err(Error::line(name, line, dup));
        }
        items.push(item);
    }
    Ok(Dataset::from_parts(
        scale,
        items,
        has_topics.unwrap_or(false),
    )?)
}

/// Writes a dataset in label-file layout with integer labels.
///
/// Text containing a tab or newline cannot be represented and is rejected.
pub fn write_dataset<W: Write>(mut w: W, d: &Dataset) -> Result<()> {
    for item in d.items() {
        let topic = item.topic().unwrap_or(NO_TOPIC);
        let res = match item.text() {
            Some(text) => {
                if text.contains(['\t', '\n', '\r']) {
                    return Err(Error::Usage(format!(
                        "item {}: text contains a tab or line break",
                        item.id()
                    )));
                }
                writeln!(
                    w,
                    "{}\t{}\t{}\t{}",
                    item.id(),
                    topic,
                    item.label().value(),
                    text
                )
            }
            None => writeln!(w, "{}\t{}\t{}", item.id(), topic, item.label().value()),
        };
        res.map_err(|source| Error::Io {
            path: "<output>".into(),
            source,
        })?;
    }
    Ok(())
}

/// Parses a label file without validating labels; the text column is required.
pub fn parse_records<R: BufRead>(reader: R, name: &str) -> Result<Vec<RawTweetRecord>> {
    let mut out = Vec::new();
    for rec in records(reader, name) {
        let (line, mut cols) = rec?;
        if cols.len() < 4 {
            return Err(malformed(
                name,
                line,
                format!("expected at least 4 columns, found {}", cols.len()),
            ));
        }
        let extra = cols.split_off(4);
        let id = cols[0].trim().to_string();
        if id.is_empty() {
            return Err(Error::line(name, line, sentiscore_core::Error::EmptyId));
        }
        let label = Some(cols[2].trim().to_string()).filter(|l| !l.is_empty());
        out.push(RawTweetRecord {
            id,
            topic: topic_field(&cols[1]),
            label,
            text: cols[3].clone(),
            extra,
        });
    }
    Ok(out)
}

/// Writes records back with all trailing columns preserved.
pub fn write_records<W: Write>(mut w: W, records: &[RawTweetRecord]) -> io::Result<()> {
    for r in records {
        write!(
            w,
            "{}\t{}\t{}\t{}",
            r.id,
            r.topic.as_deref().unwrap_or(NO_TOPIC),
            r.label.as_deref().unwrap_or(""),
            r.text
        )?;
        for e in &r.extra {
            write!(w, "\t{e}")?;
        }
        writeln!(w)?;
    }
    Ok(())
}

/// Parses per-topic predicted prevalences.
pub fn parse_prevalences<R: BufRead>(
    reader: R,
    name: &str,
    scale: Scale,
) -> Result<BTreeMap<String, Prevalence>> {
    let mut raw: BTreeMap<String, (usize, Vec<Option<f64>>)> = BTreeMap::new();
    for rec in records(reader, name) {
        let (line, cols) = rec?;
        if cols.len() != 3 {
            return Err(malformed(
                name,
                line,
                format!("expected 3 columns, found {}", cols.len()),
            ));
        }
        let topic = cols[0].trim().to_string();
        if topic.is_empty() {
            return Err(malformed(name, line, "empty topic"));
        }
        let class = scale
            .parse_class(&cols[1])
            .map_err(|e| Error::line(name, line, e))?;
        let value: f64 = cols[2]
            .trim()
            .parse()
            .map_err(|_| malformed(name, line, format!("`{}` is not a number", cols[2].trim())))?;
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::line(
                name,
                line,
                sentiscore_core::Error::InvalidPrevalence(format!("{value} is outside [0, 1]")),
            ));
        }
        let entry = raw
            .entry(topic.clone())
            .or_insert_with(|| (line, vec![None; scale.class_count()]));
        let slot = &mut entry.1[scale.index_of(class).expect("parsed class")];
        if slot.is_some() {
            return Err(Error::line(
                name,
                line,
                sentiscore_core::Error::DuplicateKey {
                    id: cols[1].trim().to_string(),
                    topic: Some(topic),
                },
            ));
        }
        *slot = Some(value);
    }
    raw.into_iter()
        .map(|(topic, (line, values))| {
            let values = values.into_iter().map(|v| v.unwrap_or(0.0)).collect();
            let p = Prevalence::normalized(scale, values, PREVALENCE_FILE_TOLERANCE)
                .map_err(|e| Error::line(name, line, e))?;
            Ok((topic, p))
        })
        .collect()
}

pub fn write_prevalences<W: Write>(
    mut w: W,
    prevalences: &BTreeMap<String, Prevalence>,
) -> io::Result<()> {
    for (topic, p) in prevalences {
        for (class, v) in p.scale().classes().iter().zip(p.values()) {
            writeln!(w, "{topic}\t{class}\t{v}")?;
        }
    }
    Ok(())
}

pub fn parse_annotations<R: BufRead>(reader: R, name: &str) -> Result<Vec<CrowdAnnotation>> {
    let mut out = Vec::new();
    for rec in records(reader, name) {
        let (line, cols) = rec?;
        if cols.len() < 3 {
            return Err(malformed(
                name,
                line,
                format!("expected at least 3 columns, found {}", cols.len()),
            ));
        }
        let labels = cols[2..]
            .iter()
            .map(|l| Scale::FivePoint.parse_class(l))
            .collect::<std::result::Result<Vec<Class>, _>>()
            .map_err(|e| Error::line(name, line, e))?;
        let a = CrowdAnnotation::new(cols[0].trim(), topic_field(&cols[1]), labels)
            .map_err(|e| Error::line(name, line, e))?;
        out.push(a);
    }
    Ok(out)
}
