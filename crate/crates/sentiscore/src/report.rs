//! Report rendering.
//!
//! JSON and TSV carry full-precision values; JSON additionally carries the
//! three-decimal display value next to each one. TABLE output shows display
//! values only. No output contains timestamps or other run-dependent data, so
//! identical inputs give byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use sentiscore_core::eval::{Metric, MetricValues, Mode, ScoreReport};
use sentiscore_core::round3;
use sentiscore_core::stats::DatasetStats;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Table,
}

#[derive(Serialize)]
struct Value {
    value: f64,
    display: f64,
}

impl From<f64> for Value {
    fn from(value: f64) -> Self {
        Value {
            value,
            display: round3(value),
        }
    }
}

#[derive(Serialize)]
struct Primary {
    metric: &'static str,
    higher_is_better: bool,
    value: f64,
    display: f64,
}

#[derive(Serialize)]
struct WarningJson {
    code: &'static str,
    message: String,
}

#[derive(Serialize)]
struct ReportJson {
    subtask: String,
    scale: String,
    mode: &'static str,
    topic_based: bool,
    primary: Primary,
    metrics: BTreeMap<&'static str, Value>,
    n_topics: usize,
    per_topic: BTreeMap<String, BTreeMap<&'static str, Value>>,
    pooled: Option<BTreeMap<&'static str, Value>>,
    warnings: Vec<WarningJson>,
}

#[derive(Serialize)]
struct RankedJson {
    rank: usize,
    system: String,
    report: ReportJson,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
    line: Option<usize>,
}

fn values(v: &MetricValues) -> BTreeMap<&'static str, Value> {
    v.iter().map(|&(m, x)| (m.name(), x.into())).collect()
}

fn warning_code(w: &sentiscore_core::eval::Warning) -> &'static str {
    use sentiscore_core::eval::Warning::*;
    match w {
        IgnoredPredictions { .. } => "IGNORED_PREDICTIONS",
        UnknownTopic { .. } => "UNKNOWN_TOPIC",
        AbsentClass { .. } => "ABSENT_CLASS",
    }
}

fn to_json(r: &ScoreReport) -> ReportJson {
    let (metric, value) = r.primary();
    ReportJson {
        subtask: r.subtask.id.to_string(),
        scale: r.subtask.scale.to_string(),
        mode: match r.subtask.mode {
            Mode::Classification => "classification",
            Mode::Quantification => "quantification",
        },
        topic_based: r.subtask.topic_based,
        primary: Primary {
            metric: metric.name(),
            higher_is_better: metric.higher_is_better(),
            value,
            display: round3(value),
        },
        metrics: values(&r.metrics),
        n_topics: r.n_topics(),
        per_topic: r
            .per_topic
            .iter()
            .map(|(t, v)| (t.clone(), values(v)))
            .collect(),
        pooled: r.pooled.as_ref().map(values),
        warnings: r
            .warnings
            .iter()
            .map(|w| WarningJson {
                code: warning_code(w),
                message: w.to_string(),
            })
            .collect(),
    }
}

fn json_string<T: Serialize>(value: &T) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn tsv_lines(out: &mut String, system: Option<&str>, r: &ScoreReport) {
    let prefix = system.map(|s| format!("{s}\t")).unwrap_or_default();
    let mut row = |scope: &str, m: Metric, v: f64| {
        let _ = writeln!(out, "{prefix}{}\t{scope}\t{m}\t{v}", r.subtask.id);
    };
    for &(m, v) in &r.metrics {
        row("ALL", m, v);
    }
    if let Some(p) = &r.pooled {
        for &(m, v) in p {
            row("POOLED", m, v);
        }
    }
    for (t, vals) in &r.per_topic {
        for &(m, v) in vals {
            row(&format!("topic:{t}"), m, v);
        }
    }
}

fn table_block(out: &mut String, r: &ScoreReport) {
    let metrics: Vec<Metric> = r.metrics.iter().map(|(m, _)| *m).collect();
    let _ = write!(out, "{:<24}", format!("subtask {}", r.subtask.id));
    for m in &metrics {
        let _ = write!(out, "{:>10}", m.name());
    }
    out.push('\n');
    let mut row = |label: &str, vals: &MetricValues| {
        let _ = write!(out, "{label:<24}");
        for &(_, v) in vals {
            let _ = write!(out, "{:>10.3}", round3(v));
        }
        out.push('\n');
    };
    row(
        if r.subtask.topic_based {
            "macro-avg"
        } else {
            "all"
        },
        &r.metrics,
    );
    if let Some(p) = &r.pooled {
        row("pooled", p);
    }
    for (t, vals) in &r.per_topic {
        row(&format!("  {t}"), vals);
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
}

pub fn render_report(r: &ScoreReport, format: Format) -> Result<String, Error> {
    match format {
        Format::Json => json_string(&to_json(r)),
        Format::Tsv => {
            let mut out = String::new();
            tsv_lines(&mut out, None, r);
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            table_block(&mut out, r);
            Ok(out)
        }
    }
}

/// Renders several systems' reports, already sorted best-first.
pub fn render_ranking(ranked: &[(String, ScoreReport)], format: Format) -> Result<String, Error> {
    match format {
        Format::Json => {
            let rows: Vec<RankedJson> = ranked
                .iter()
                .enumerate()
                .map(|(i, (s, r))| RankedJson {
                    rank: i + 1,
                    system: s.clone(),
                    report: to_json(r),
                })
                .collect();
            json_string(&rows)
        }
        Format::Tsv => {
            let mut out = String::new();
            for (s, r) in ranked {
                tsv_lines(&mut out, Some(s), r);
            }
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            for (i, (s, r)) in ranked.iter().enumerate() {
                let (m, v) = r.primary();
                let _ = writeln!(out, "{:>3}  {s:<40} {m} {:.3}", i + 1, round3(v));
            }
            out.push('\n');
            for (s, r) in ranked {
                let _ = writeln!(out, "== {s}");
                table_block(&mut out, r);
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct StatsJson<'a> {
    scale: String,
    total: usize,
    classes: BTreeMap<String, usize>,
    topics: &'a BTreeMap<String, usize>,
}

pub fn render_stats(s: &DatasetStats, format: Format) -> Result<String, Error> {
    match format {
        Format::Json => json_string(&StatsJson {
            scale: s.scale.to_string(),
            total: s.total,
            classes: s
                .class_counts
                .iter()
                .map(|(c, n)| (c.to_string(), *n))
                .collect(),
            topics: &s.topic_counts,
        }),
        Format::Tsv => {
            let mut out = String::new();
            for (c, n) in s.class_counts.iter().rev() {
                let _ = writeln!(out, "class\t{c}\t{n}");
            }
            for (t, n) in &s.topic_counts {
                let _ = writeln!(out, "topic\t{t}\t{n}");
            }
            let _ = writeln!(out, "total\tALL\t{}", s.total);
            Ok(out)
        }
        Format::Table => Ok(s.to_string()),
    }
}

/// Machine-readable error document for JSON mode.
pub fn render_error(e: &Error) -> String {
    let doc = ErrorJson {
        error: ErrorBody {
            code: e.code(),
            message: e.to_string(),
            line: e.line_number(),
        },
    };
    json_string(&doc).unwrap_or_else(|_| format!("{{\"error\":{{\"code\":\"{}\"}}}}\n", e.code()))
}
