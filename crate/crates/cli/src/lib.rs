//! File formats, verification reports and the command-line front end for
//! the `triortho` code toolkit.

pub mod args;
pub mod commands;
pub mod error;
pub mod io;
pub mod selftest;
pub mod verify;
