use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),

    #[error("pairing is not perfect (determinant {0})")]
    ImperfectPairing(i64),

    #[error("unknown datum `{0}`")]
    UnknownDatum(String),

    #[error("could not parse {what}: {msg}")]
    Parse { what: &'static str, msg: String },

    #[error("operation requires a finite length-zero group, but `{0}` has infinite Ω")]
    InfiniteOmega(String),

    #[error("element {0} does not lie in the parabolic subgroup")]
    NotInParabolic(String),

    #[error("element {0} is not J-positive")]
    NotJPositive(String),

    #[error("search budget exhausted: {0}")]
    Budget(String),

    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    #[error("invalid parahoric datum: {0}")]
    InvalidParahoric(String),

    #[error("theory check failed: {0}")]
    Violation(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(what: &'static str, msg: impl Into<String>) -> Error {
    Error::Parse {
        what,
        msg: msg.into(),
    }
}
