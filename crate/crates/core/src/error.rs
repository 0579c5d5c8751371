use thiserror::Error;

use crate::quantale::QuantaleId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A (c) or (c, c', c'') witness for a failed Q-category axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `I ⪯ C(c, c)` fails.
    Unit { object: String },
    /// `C(c', c'') ∘ C(c, c') ⪯ C(c, c'')` fails.
    Composition { c: String, c1: String, c2: String },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomViolation::Unit { object } => write!(f, "unit axiom fails at ({object})"),
            AxiomViolation::Composition { c, c1, c2 } => {
                write!(f, "composition axiom fails at ({c}, {c1}, {c2})")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("quantale mismatch: {left} vs {right}")]
    InstanceMismatch { left: QuantaleId, right: QuantaleId },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown quantale `{0}`")]
    UnknownQuantale(String),

    #[error("invalid scalar literal `{literal}` for {quantale}")]
    InvalidScalar { literal: String, quantale: QuantaleId },

    #[error("empty family: {0}")]
    EmptyFamily(&'static str),

    #[error("pair does not under-approximate the ambient matrix ({0})")]
    NotUnderApproximating(String),

    #[error("not a member of the Isbell hull: {0}")]
    NotMember(String),

    #[error("quantale {0} has no finite carrier to enumerate")]
    NotEnumerable(QuantaleId),

    #[error("enumeration of 2^{size} candidates exceeds guard 2^{guard}")]
    GuardExceeded { size: usize, guard: u32 },

    #[error("not a Q-category: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    NotQCategory(Vec<AxiomViolation>),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Stable machine-readable code, used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InstanceMismatch { .. } => "instance-mismatch",
            Error::ShapeMismatch(_) => "shape-mismatch",
            Error::UnknownLabel(_) => "unknown-label",
            Error::DuplicateLabel(_) => "duplicate-label",
            Error::UnknownQuantale(_) => "unknown-quantale",
            Error::InvalidScalar { .. } => "invalid-scalar",
            Error::EmptyFamily(_) => "empty-family",
            Error::NotUnderApproximating(_) => "not-under-approximating",
            Error::NotMember(_) => "not-member",
            Error::NotEnumerable(_) => "not-enumerable",
            Error::GuardExceeded { .. } => "guard-exceeded",
            Error::NotQCategory(_) => "not-a-qcategory",
            Error::Invalid(_) => "invalid-input",
            Error::Json(_) => "malformed-json",
            Error::Io { .. } => "unreadable-file",
        }
    }
}

pub(crate) fn ensure_same(left: QuantaleId, right: QuantaleId) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::InstanceMismatch { left, right })
    }
}
