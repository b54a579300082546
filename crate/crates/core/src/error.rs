//! Error type shared across the crate.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration would classify more tuples than the configured budget.
    #[error("work limit exceeded: {required} tuples required, limit is {limit}")]
    WorkLimit { required: BigInt, limit: u64 },

    /// Full group enumeration refused because the group is too large.
    #[error("group too large to enumerate: |G| = {order}, limit is {limit}")]
    EnumerationLimit { order: BigInt, limit: u64 },

    /// A bounded search (e.g. meet-in-the-middle) ran out of budget.
    #[error("search budget exceeded: {0}")]
    Budget(String),

    /// Malformed character table data.
    #[error("character table: {0}")]
    Table(String),

    /// The operation is not defined for the given group.
    #[error("unsupported group: {0}")]
    Unsupported(String),

    /// Invalid argument combination.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
