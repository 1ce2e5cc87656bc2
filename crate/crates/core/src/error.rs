use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("id {id} is outside the ground object (size {size})")]
    IdOutOfRange { id: usize, size: usize },

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("elements of different kinds cannot be compared")]
    MixedKinds,

    #[error("poset has {count} elements, above the cap of {cap}")]
    CapExceeded { count: u128, cap: u128 },

    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),

    #[error("generator {gen} is 0 mod {n}")]
    ZeroGenerator { gen: usize, n: usize },

    #[error("wrong shape: {0}")]
    Shape(String),

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("input graph is not perfect")]
    NotPerfect,

    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name `{name}`; valid: {valid}")]
    Unknown { name: String, valid: String },

    #[error("order {order} does not apply to {kind}")]
    OrderMismatch { order: &'static str, kind: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
