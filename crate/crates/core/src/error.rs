use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: {msg}")]
    Domain { op: &'static str, msg: String },

    #[error("index {index} out of range (sequence defined up to {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{0} has no word model")]
    NoWordModel(&'static str),

    #[error("{0}: the empty word does not satisfy the block property, marker construction does not apply")]
    MarkerNotApplicable(&'static str),

    #[error("non-exact division in {op} at {params}: {numerator} / {denominator}")]
    InexactDivision {
        op: &'static str,
        params: String,
        numerator: String,
        denominator: String,
    },

    #[error("bound {value} for {what} exceeds hard cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("b-file line {line}: {msg}")]
    BFileParse { line: usize, msg: String },

    #[error("sequence file line {line}: {msg}")]
    SeqParse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain {
            op,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
