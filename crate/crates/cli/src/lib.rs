//! Argument parsing, request execution and output rendering for the `mspectra` binary.

pub mod args;
pub mod commands;
pub mod error;
pub mod render;
pub mod spec;
