//! Description language, JSON and DOT interchange, sampling and the
//! command-line front end for `sctop-core`.

pub mod cli;
pub mod dot;
pub mod dsl;
pub mod json;
pub mod sample;
