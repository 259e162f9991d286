//! JSON schema, subcommand logic and error types behind the `mobile-hook`
//! binary.

pub mod commands;
pub mod error;
pub mod schema;
