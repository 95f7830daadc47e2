use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("`{0}` is reserved and cannot name an atom")]
    ReservedName(String),

    #[error("invalid atom name `{0}`")]
    InvalidName(String),

    /// Malformed line in a framework file (1-based line number).
    #[error("line {line}: {message}")]
    Input { line: usize, message: String },

    #[error("invalid framework: {}", .0.join("; "))]
    Invalid(Vec<String>),

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("formula `{0}` is not CN-flat")]
    NotCnFlat(String),

    #[error("the world constant @1 has no value in a CN model")]
    WorldConstant,

    #[error("{what} has {size} atoms, above the cap of {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("theory has no models")]
    Inconsistent,

    #[error("direct higher-level translation handles at most two levels, got {0}")]
    TooManyLevels(usize),

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
