use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the scoring core.
///
/// Every variant has a stable machine-readable code (see [`Error::code`]),
/// which the command line emits in JSON mode.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    EmptyInput,
    MissingPrediction {
        id: String,
        topic: Option<String>,
    },
    ScaleMismatch,
    /// The operation is defined only for some scales (e.g. MAE on five points).
    UnsupportedScale,
    NoTopics,
    TopicRequired,
    /// A topic was given to a dataset that has none, or vice versa.
    TopicInconsistent {
        id: String,
    },
    InvalidLabel {
        value: String,
    },
    DuplicateKey {
        id: String,
        topic: Option<String>,
    },
    EmptyId,
    InvalidPrevalence(String),
    InvalidSmoothing,
    TooFewAnnotators {
        n: usize,
    },
    EmptyText,
    /// Labels were supplied where prevalences were expected, or the reverse.
    PredictionKind,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EMPTY_INPUT",
            Error::MissingPrediction { .. } => "MISSING_PREDICTION",
            Error::ScaleMismatch => "SCALE_MISMATCH",
            Error::UnsupportedScale => "UNSUPPORTED_SCALE",
            Error::NoTopics => "NO_TOPICS",
            Error::TopicRequired => "TOPIC_REQUIRED",
            Error::TopicInconsistent { .. } => "TOPIC_INCONSISTENT",
            Error::InvalidLabel { .. } => "INVALID_LABEL",
            Error::DuplicateKey { .. } => "DUPLICATE_KEY",
            Error::EmptyId => "EMPTY_ID",
            Error::InvalidPrevalence(_) => "INVALID_PREVALENCE",
            Error::InvalidSmoothing => "INVALID_SMOOTHING",
            Error::TooFewAnnotators { .. } => "TOO_FEW_ANNOTATORS",
            Error::EmptyText => "EMPTY_TEXT",
            Error::PredictionKind => "PREDICTION_KIND",
        }
    }
}

fn key(id: &str, topic: &Option<String>) -> String {
    match topic {
        Some(t) => alloc::format!("({id}, {t})"),
        None => alloc::format!("({id})"),
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "empty input"),
            Error::MissingPrediction { id, topic } => {
                write!(f, "no prediction for gold item {}", key(id, topic))
            }
            Error::ScaleMismatch => write!(f, "label scales differ"),
            Error::UnsupportedScale => write!(f, "operation not defined on this scale"),
            Error::NoTopics => write!(f, "dataset has no topics"),
            Error::TopicRequired => write!(f, "this subtask requires topic-labelled data"),
            Error::TopicInconsistent { id } => {
                write!(
                    f,
                    "item {id}: topic presence differs from the rest of the dataset"
                )
            }
            Error::InvalidLabel { value } => write!(f, "invalid label `{value}`"),
            Error::DuplicateKey { id, topic } => write!(f, "duplicate key {}", key(id, topic)),
            Error::EmptyId => write!(f, "empty item id"),
            Error::InvalidPrevalence(why) => write!(f, "invalid prevalence: {why}"),
            Error::InvalidSmoothing => write!(f, "smoothing epsilon must be positive and finite"),
            Error::TooFewAnnotators { n } => {
                write!(f, "{n} annotations given, at least 5 are required")
            }
            Error::EmptyText => write!(f, "text has no terms"),
            Error::PredictionKind => {
                write!(
                    f,
                    "prediction kind does not match the subtask (labels vs prevalences)"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
