//! Sample inputs shared by the benchmarks.

use fusionkit_core::{builtin, FusionRing};

/// Commutative built-ins of increasing rank.
pub const COMMUTATIVE: &[&str] = &[
    "ising",
    "rep_q8",
    "tambara_yamagami_zn(6)",
    "su2_k(10)",
    "pointed_zn(24)",
];

/// Built-ins that carry modular data.
pub const MODULAR: &[&str] = &["fibonacci", "ising", "su2_k(6)", "su2_k(10)", "pointed_zn(12)"];

pub fn ring(name: &str) -> FusionRing {
    builtin(name).expect("benchmark inputs are built-ins").ring
}

/// A faithful simple of the named ring: the first nonunit simple whose
/// powers reach every simple.
pub fn faithful_simple(ring: &FusionRing) -> usize {
    (1..ring.rank())
        .find(|&i| fusionkit_core::subcat::is_faithful(ring, i))
        .unwrap_or(0)
}
