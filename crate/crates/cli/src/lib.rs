//! Command implementations behind the `absx` binary. Each command returns
//! its rendered text, so tests can compare output without spawning a
//! process.

pub mod commands;
pub mod table;

pub use commands::{
    audit, audit_cases, build_family, compute, construct, lemmas, sweep, verify, CliError, Family,
    FamilyParams, OrderRange, Output, SweepConfig, VERIFY_HEADER,
};
pub use table::{decimal, Format, Table};
