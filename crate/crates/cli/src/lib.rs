//! IO companion for `transigamma-core`: JSON/CSV serialization of the
//! exact and floating types, the published-table golden data, and the
//! verification harness the `verify-tables` subcommand runs.

// keep the README's code example honest
#![doc = include_str!("../../../README.md")]

pub mod formats;
pub mod golden;
pub mod verify;
