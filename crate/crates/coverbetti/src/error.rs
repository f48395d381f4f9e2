//! Error taxonomy shared by the whole crate.

use crate::set::VertexSet;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A graph family constructor was called outside its domain.
    #[error("invalid family parameter: {0}")]
    InvalidFamilyParameter(String),

    /// The cover ideal of a graph with no edges would be the unit ideal.
    #[error("graph has no edges, so it has no vertex covers to generate an ideal")]
    EmptyCoverIdeal,

    /// The edge ideal of a graph with no edges is the zero ideal.
    #[error("graph has no edges, so its edge ideal is zero")]
    ZeroIdeal,

    /// An operation's mathematical precondition on its input failed.
    #[error("domain violation: {0}")]
    DomainViolation(String),

    /// A set handed to a face-local operation is not a face.
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),

    /// f- and h-vectors are undefined for the void complex.
    #[error("f/h-vectors are undefined for the void complex")]
    UndefinedFh,

    /// A size guard tripped before the computation could blow up.
    #[error("resource limit exceeded: {what} needs {needed}, limit is {limit}{hint}")]
    ResourceLimit {
        what: &'static str,
        needed: u64,
        limit: u64,
        hint: &'static str,
    },

    /// Anything else that makes a call meaningless.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed edge-list text.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub fn resource(what: &'static str, needed: u64, limit: u64) -> Self {
        Error::ResourceLimit { what, needed, limit, hint: "" }
    }

    pub fn resource_hint(what: &'static str, needed: u64, limit: u64, hint: &'static str) -> Self {
        Error::ResourceLimit { what, needed, limit, hint }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
