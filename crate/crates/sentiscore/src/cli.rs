//! Command-line front end.
//!
//! Exit status is 0 on success, 1 for input or validation errors and 2 for
//! internal failures. Every path argument accepts `-` for standard input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use sentiscore_core::annotation::consolidate;
use sentiscore_core::baselines::{self, Averaging, BaselineSpec};
use sentiscore_core::dedup::{self, DEFAULT_THRESHOLD};
use sentiscore_core::eval::{self, EvalOptions, Mode, Predictions, SubtaskId, SubtaskSpec};
use sentiscore_core::model::{Dataset, Prevalence, Scale};
use sentiscore_core::stats::stats;

use crate::error::{Error, Result};
use crate::report::{self, Format};
use crate::tsv;

#[derive(Debug, Parser)]
#[command(
    name = "sentiscore",
    version,
    about = "Score topic-based sentiment classification and quantification runs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score one or more prediction files against gold labels.
    Score(ScoreArgs),
    /// Score a baseline system against gold labels.
    Baseline(BaselineArgs),
    /// Merge five-point crowd annotations into one label per item.
    Consolidate(ConsolidateArgs),
    /// Drop near-duplicate tweets and, optionally, small topics.
    Dedup(DedupArgs),
    /// Per-class and per-topic counts of a label file.
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
pub struct ReportOpts {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Also report scores over the whole test set as one group.
    #[arg(long)]
    pub pooled: bool,
}

#[derive(Debug, Args)]
pub struct ScoreArgs {
    #[arg(long, value_parser = parse_subtask)]
    pub subtask: SubtaskId,
    #[arg(long)]
    pub gold: PathBuf,
    /// Repeat to rank several systems.
    #[arg(long, required = true)]
    pub pred: Vec<PathBuf>,
    /// For D and E: the prediction file holds per-tweet labels, which are
    /// counted into per-topic prevalences.
    #[arg(long)]
    pub pred_labels: bool,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Debug, Args)]
pub struct BaselineArgs {
    #[arg(long, value_parser = parse_subtask)]
    pub subtask: SubtaskId,
    #[arg(long)]
    pub gold: PathBuf,
    /// `constant:<label>`, `prevalence:<p1,p2,...>` (classes in ascending
    /// order), `ml-micro:<train.tsv>` or `ml-macro:<train.tsv>`.
    #[arg(long)]
    pub kind: String,
    #[command(flatten)]
    pub report: ReportOpts,
}

#[derive(Debug, Args)]
pub struct ConsolidateArgs {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct DedupArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Similarity above which a tweet counts as a duplicate.
    #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
    pub threshold: f64,
    /// Drop topics left with fewer tweets than this after deduplication.
    #[arg(long)]
    pub min_topic_size: Option<usize>,
    /// Write removed tweets as `id<TAB>kept_id<TAB>similarity`.
    #[arg(long)]
    pub removed: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long, value_parser = parse_subtask)]
    pub subtask: SubtaskId,
    #[arg(long)]
    pub input: PathBuf,
    /// Drop topics with fewer items than this before counting.
    #[arg(long)]
    pub min_topic_size: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

fn parse_subtask(s: &str) -> std::result::Result<SubtaskId, String> {
    s.parse()
        .map_err(|_| format!("unknown subtask `{s}`, expected one of A, B, C, D, E"))
}

fn name(path: &Path) -> String {
    path.display().to_string()
}

fn load_dataset(path: &Path, scale: Scale) -> Result<Dataset> {
    tsv::parse_dataset(tsv::open(path)?, &name(path), scale)
}

fn load_predictions(spec: &SubtaskSpec, path: &Path, labels: bool) -> Result<Predictions> {
    match spec.mode {
        Mode::Quantification if !labels => Ok(Predictions::Prevalences(tsv::parse_prevalences(
            tsv::open(path)?,
            &name(path),
            spec.scale,
        )?)),
        _ => Ok(Predictions::Labels(load_dataset(path, spec.scale)?)),
    }
}

/// Parses a `--kind` value for the given scale.
pub fn parse_baseline(kind: &str, scale: Scale) -> Result<BaselineSpec> {
    let (head, arg) = kind
        .split_once(':')
        .ok_or_else(|| Error::Usage(format!("baseline kind `{kind}` has no `:<argument>`")))?;
    match head {
        "constant" => Ok(BaselineSpec::ConstantClass(scale.parse_class(arg)?)),
        "prevalence" => {
            let values = arg
                .split([',', ' '])
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::Usage(format!("`{s}` is not a number")))
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok(BaselineSpec::ConstantPrevalence(Prevalence::normalized(
                scale,
                values,
                tsv::PREVALENCE_FILE_TOLERANCE,
            )?))
        }
        "ml-micro" | "ml-macro" => {
            let averaging = if head == "ml-micro" {
                Averaging::Micro
            } else {
                Averaging::Macro
            };
            let train = load_dataset(Path::new(arg), scale)?;
            Ok(BaselineSpec::MlPrevalence { train, averaging })
        }
        other => Err(Error::Usage(format!("unknown baseline kind `{other}`"))),
    }
}

/// Predictions of a baseline on `gold`.
pub fn baseline_predictions(
    spec: &SubtaskSpec,
    gold: &Dataset,
    baseline: &BaselineSpec,
) -> Result<Predictions> {
    let constant = |p: Prevalence| -> Result<Predictions> {
        if spec.topic_based && !gold.has_topics() {
            return Err(sentiscore_core::Error::TopicRequired.into());
        }
        Ok(Predictions::Prevalences(baselines::constant_quantifier(
            &gold.topics(),
            &p,
        )))
    };
    match (spec.mode, baseline) {
        (Mode::Classification, BaselineSpec::ConstantClass(c)) => Ok(Predictions::Labels(
            baselines::constant_classifier(gold, *c)?,
        )),
        (Mode::Quantification, BaselineSpec::ConstantClass(c)) => {
            constant(Prevalence::point_mass(spec.scale, *c)?)
        }
        (Mode::Quantification, BaselineSpec::ConstantPrevalence(p)) => constant(p.clone()),
        (Mode::Quantification, BaselineSpec::MlPrevalence { train, averaging }) => {
            constant(baselines::ml_quantifier(train, *averaging)?)
        }
        (Mode::Classification, _) => Err(Error::Usage(format!(
            "subtask {} is a classification subtask; use a `constant:<label>` baseline",
            spec.id
        ))),
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Internal(format!("writing output: {e}")))
}

fn score(args: &ScoreArgs, out: &mut dyn Write) -> Result<()> {
    let spec = SubtaskSpec::new(args.subtask);
    let gold = load_dataset(&args.gold, spec.scale)?;
    let opts = EvalOptions {
        pooled: args.report.pooled,
    };
    let mut runs = Vec::with_capacity(args.pred.len());
    for path in &args.pred {
        let pred = load_predictions(&spec, path, args.pred_labels)?;
        runs.push((name(path), eval::evaluate(&spec, &gold, &pred, opts)?));
    }
    let text = if let [(_, only)] = runs.as_slice() {
        report::render_report(only, args.report.format)?
    } else {
        eval::rank(&mut runs);
        report::render_ranking(&runs, args.report.format)?
    };
    write_out(out, &text)
}

fn baseline(args: &BaselineArgs, out: &mut dyn Write) -> Result<()> {
    let spec = SubtaskSpec::new(args.subtask);
    let gold = load_dataset(&args.gold, spec.scale)?;
    let kind = parse_baseline(&args.kind, spec.scale)?;
    let pred = baseline_predictions(&spec, &gold, &kind)?;
    let r = eval::evaluate(
        &spec,
        &gold,
        &pred,
        EvalOptions {
            pooled: args.report.pooled,
        },
    )?;
    write_out(out, &report::render_report(&r, args.report.format)?)
}

fn consolidate_cmd(args: &ConsolidateArgs, out: &mut dyn Write) -> Result<()> {
    let annotations = tsv::parse_annotations(tsv::open(&args.input)?, &name(&args.input))?;
    let mut text = String::new();
    for a in &annotations {
        let topic = a.topic().unwrap_or(tsv::NO_TOPIC);
        text.push_str(&format!("{}\t{}\t{}\n", a.item_id(), topic, consolidate(a)));
    }
    write_out(out, &text)
}

fn dedup_cmd(args: &DedupArgs, out: &mut dyn Write) -> Result<()> {
    if !(0.0..=1.0).contains(&args.threshold) {
        return Err(Error::Usage(format!(
            "threshold {} is outside [0, 1]",
            args.threshold
        )));
    }
    let records = tsv::parse_records(tsv::open(&args.input)?, &name(&args.input))?;
    let outcome = dedup::dedup(records, args.threshold);
    let kept = match args.min_topic_size {
        Some(n) => dedup::topic_filter_records(outcome.kept, n),
        None => outcome.kept,
    };
    let mut buf = Vec::new();
    tsv::write_records(&mut buf, &kept).map_err(|e| Error::Internal(e.to_string()))?;
    write_out(out, &String::from_utf8_lossy(&buf))?;
    if let Some(path) = &args.removed {
        let mut text = String::new();
        for r in &outcome.removed {
            text.push_str(&format!(
                "{}\t{}\t{}\n",
                r.record.id, r.kept_id, r.similarity
            ));
        }
        std::fs::write(path, text).map_err(|source| Error::Io {
            path: name(path),
            source,
        })?;
    }
    Ok(())
}

fn stats_cmd(args: &StatsArgs, out: &mut dyn Write) -> Result<()> {
    let spec = SubtaskSpec::new(args.subtask);
    let mut d = load_dataset(&args.input, spec.scale)?;
    if let Some(n) = args.min_topic_size {
        d = dedup::topic_filter(&d, n)?;
    }
    write_out(out, &report::render_stats(&stats(&d), args.format)?)
}

/// Runs one command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Score(a) => score(a, out),
        Command::Baseline(a) => baseline(a, out),
        Command::Consolidate(a) => consolidate_cmd(a, out),
        Command::Dedup(a) => dedup_cmd(a, out),
        Command::Stats(a) => stats_cmd(a, out),
    }
}

impl Cli {
    /// Whether errors should be reported as JSON.
    pub fn json_errors(&self) -> bool {
        match &self.command {
            Command::Score(a) => a.report.format == Format::Json,
            Command::Baseline(a) => a.report.format == Format::Json,
            Command::Stats(a) => a.format == Format::Json,
            _ => false,
        }
    }
}
