//! Linear, cyclic and quadratic residue codes over `R = Z9 + uZ9` (`u^2 = u`).
//!
//! Everything here is exact and allocation-only; the crate is `no_std`.

#![no_std]

extern crate alloc;

pub mod codes_r;
pub mod cyclic;
pub mod engine;
pub mod error;
pub mod factor;
pub mod poly;
pub mod qr;
pub mod ring;
pub mod linear;
mod util;
pub mod weight;

pub use error::Error;
pub use poly::{PolyR, PolyZ9, QrContext};
pub use ring::{GrayMatrix, IdealTag, RElement, Z9};
pub use codes_r::LinearCodeR;
pub use cyclic::{CyclicCodeR, CyclicCodeZ9};
pub use linear::LinearCodeZ9;
pub use weight::WeightDistribution;
