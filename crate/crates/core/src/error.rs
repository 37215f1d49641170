use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("table is not a valid semigroup: {0}")]
    InvalidTable(String),

    #[error("operation requires a group: {0}")]
    NotAGroup(String),

    #[error("element {element} out of range for carrier of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("size cap exceeded: {what} is {actual}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("certificate rejected: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
