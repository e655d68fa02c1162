use thiserror::Error;

/// Failure modes of the geometry and capacity engine.
///
/// Every variant carries the offending datum rendered as text so that the
/// CLI can report it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {message} (got {datum:?})")]
    Parse { message: String, datum: String },

    #[error("invalid parameter: {message} (got {datum})")]
    InvalidParameter { message: String, datum: String },

    #[error("degenerate region: {message} (got {datum})")]
    DegenerateRegion { message: String, datum: String },

    #[error("invalid polygon: {message} (got {datum})")]
    InvalidPolygon { message: String, datum: String },

    #[error("unsupported region: {message} (got {datum})")]
    UnsupportedRegion { message: String, datum: String },

    #[error("invalid vector: {message} (got {datum})")]
    InvalidVector { message: String, datum: String },

    #[error("invalid loop: {message} (got {datum})")]
    InvalidLoop { message: String, datum: String },

    #[error("invalid center: {message} (got {datum})")]
    InvalidCenter { message: String, datum: String },

    #[error("resource limit exceeded: {message} (got {datum})")]
    ResourceExhausted { message: String, datum: String },
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Precondition,
    Resource,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } => ErrorClass::Parse,
            Error::ResourceExhausted { .. } => ErrorClass::Resource,
            _ => ErrorClass::Precondition,
        }
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::InvalidParameter { .. } => "invalid-parameter",
            Error::DegenerateRegion { .. } => "degenerate-region",
            Error::InvalidPolygon { .. } => "invalid-polygon",
            Error::UnsupportedRegion { .. } => "unsupported-region",
            Error::InvalidVector { .. } => "invalid-vector",
            Error::InvalidLoop { .. } => "invalid-loop",
            Error::InvalidCenter { .. } => "invalid-center",
            Error::ResourceExhausted { .. } => "resource",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Error::Parse { message, .. }
            | Error::InvalidParameter { message, .. }
            | Error::DegenerateRegion { message, .. }
            | Error::InvalidPolygon { message, .. }
            | Error::UnsupportedRegion { message, .. }
            | Error::InvalidVector { message, .. }
            | Error::InvalidLoop { message, .. }
            | Error::InvalidCenter { message, .. }
            | Error::ResourceExhausted { message, .. } => message,
        }
    }

    pub fn datum(&self) -> &str {
        match self {
            Error::Parse { datum, .. }
            | Error::InvalidParameter { datum, .. }
            | Error::DegenerateRegion { datum, .. }
            | Error::InvalidPolygon { datum, .. }
            | Error::UnsupportedRegion { datum, .. }
            | Error::InvalidVector { datum, .. }
            | Error::InvalidLoop { datum, .. }
            | Error::InvalidCenter { datum, .. }
            | Error::ResourceExhausted { datum, .. } => datum,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
