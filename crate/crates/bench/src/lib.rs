//! Benchmarks for classification and identity verification.

use quadmon::Ring;

/// Rings exercised by the benchmarks, smallest first.
pub const RINGS: &[&str] = &["Z/4", "Z/8", "Z/2[x]/(x^2+x+1)", "Z/16", "Z/4[x]/(x^2)"];

pub fn rings() -> Vec<Ring> {
    RINGS
        .iter()
        .map(|s| Ring::parse(s).expect("valid ring"))
        .collect()
}
