//! Library half of the `qrz9` command-line tool: file formats, fixtures,
//! the threaded sweep driver and the command implementations.

pub mod commands;
pub mod fixtures;
pub mod formats;
pub mod report;
pub mod sweep;
