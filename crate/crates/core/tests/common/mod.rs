#![allow(dead_code)]

use fusionkit_core::spectral::is_commutative;
use fusionkit_core::{builtin, builtin_names, FusionRing};

/// Small and medium built-ins used as property-test inputs.
pub const SAMPLE: &[&str] = &[
    "trivial",
    "pointed_zn(2)",
    "pointed_zn(5)",
    "pointed_zn(6)",
    "vec_s3",
    "rep_s3",
    "rep_q8",
    "fibonacci",
    "ising",
    "tambara_yamagami_zn(3)",
    "tambara_yamagami_zn(4)",
    "su2_k(3)",
    "su2_k(5)",
];

pub fn ring(name: &str) -> FusionRing {
    builtin(name).unwrap().ring
}

pub fn all_builtins() -> Vec<FusionRing> {
    builtin_names().iter().map(|n| ring(n)).collect()
}

pub fn commutative_builtins() -> Vec<FusionRing> {
    all_builtins().into_iter().filter(is_commutative).collect()
}

/// The product ring with basis pairs `(i, j)` at index `i * rank(b) + j`.
pub fn deligne(a: &FusionRing, b: &FusionRing) -> FusionRing {
    let (ra, rb) = (a.rank(), b.rank());
    let labels = (0..ra)
        .flat_map(|i| (0..rb).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}⊠{}", a.label(i), b.label(j)))
        .collect();
    FusionRing::from_rule(format!("{}⊠{}", a.name(), b.name()), labels, |x, y, z| {
        a.n(x / rb, y / rb, z / rb) * b.n(x % rb, y % rb, z % rb)
    })
    .unwrap()
}
