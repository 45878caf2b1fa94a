#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod code;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod gates;
pub mod linalg;
pub mod overhead;
pub mod reed_solomon;
pub mod sim;
pub mod star;
pub mod weight;

pub use error::{Error, Result};
