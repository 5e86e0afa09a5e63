//! Kernels and centers of characters and objects.
//!
//! The kernel of a character `μ` is the set of simples on which `μ` equals
//! FPdim; the kernel of an object `x` is the set of characters with
//! `μ(x) = FPdim(x)`, and its center the set with `|μ(x)| = FPdim(x)`.
//! An object has trivial kernel exactly when it generates the whole
//! category, and then every simple is a constituent of some tensor power.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grading::object_index;
use crate::ring::{ClassVector, FusionRing};
use crate::spectral::{fp_character, CharacterTable, FpData};
use crate::subcat::{generated_subcategory, is_faithful, restrict, Subcategory};

/// Indices into a [`CharacterTable`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelSet {
    pub character_indices: BTreeSet<usize>,
}

impl KernelSet {
    pub fn len(&self) -> usize {
        self.character_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.character_indices.is_empty()
    }

    pub fn contains(&self, t: usize) -> bool {
        self.character_indices.contains(&t)
    }

    /// Only the FP character.
    pub fn is_trivial(&self, table: &CharacterTable) -> bool {
        self.character_indices.len() == 1 && self.contains(table.fp_index())
    }

    pub fn intersection(&self, other: &KernelSet) -> KernelSet {
        KernelSet {
            character_indices: self
                .character_indices
                .intersection(&other.character_indices)
                .copied()
                .collect(),
        }
    }
}

/// Simples `j` with `μ_t(j) = FPdim(j)` within `eps`. The result is always
/// a fusion subcategory; failure to close means `eps` misclassified a value.
pub fn kernel_of_character(
    ring: &FusionRing,
    fp: &FpData,
    table: &CharacterTable,
    t: usize,
    eps: f64,
) -> Result<Subcategory> {
    let mu = table.character(t);
    let members: BTreeSet<usize> = (0..ring.rank())
        .filter(|&j| (mu.value(j) - fp.dims[j]).norm() < eps)
        .collect();
    Subcategory::new(ring, members).map_err(|e| Error::ClosureViolation {
        character: t,
        detail: e.to_string(),
    })
}

fn check_object(ring: &FusionRing, x: &ClassVector) -> Result<()> {
    if x.len() != ring.rank() {
        return Err(Error::LengthMismatch {
            expected: ring.rank(),
            got: x.len(),
        });
    }
    if x.is_zero() {
        return Err(Error::ZeroClass);
    }
    if !x.is_nonnegative() {
        return Err(Error::NegativeClass);
    }
    Ok(())
}

/// Characters `t` with `μ_t(x) = FPdim(x)` within `eps`.
pub fn kernel_of_class(
    ring: &FusionRing,
    fp: &FpData,
    table: &CharacterTable,
    x: &ClassVector,
    eps: f64,
) -> Result<KernelSet> {
    check_object(ring, x)?;
    let d = fp.of_class(x);
    Ok(select(table, |mu| (mu.eval(x) - d).norm() < eps))
}

/// Characters `t` with `|μ_t(x)| = FPdim(x)` within `eps`.
pub fn center_of_class(
    ring: &FusionRing,
    fp: &FpData,
    table: &CharacterTable,
    x: &ClassVector,
    eps: f64,
) -> Result<KernelSet> {
    check_object(ring, x)?;
    let d = fp.of_class(x);
    Ok(select(table, |mu| (mu.eval(x).norm() - d).abs() < eps))
}

fn select(table: &CharacterTable, pred: impl Fn(&crate::spectral::Character) -> bool) -> KernelSet {
    KernelSet {
        character_indices: table
            .characters()
            .iter()
            .enumerate()
            .filter(|(_, mu)| pred(mu))
            .map(|(t, _)| t)
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerReport {
    /// The kernel of the object is trivial.
    pub faithful_expected: bool,
    /// Least `n` with the simple a constituent of `X^n`, for every simple
    /// reached within the cap.
    pub exponents: BTreeMap<usize, usize>,
    pub cap_used: usize,
}

impl BrauerReport {
    pub fn all_found(&self, ring: &FusionRing) -> bool {
        self.exponents.len() == ring.rank()
    }
}

/// `(r − 1)² + 1 + ind(X)` with `r` the rank of the subcategory generated
/// by `X`.
pub fn default_brauer_cap(ring: &FusionRing, i: usize) -> Result<usize> {
    let r = generated_subcategory(ring, &[i]).len();
    Ok((r - 1) * (r - 1) + 1 + object_index(ring, i)?)
}

/// Computes the kernel of `X_i` and searches tensor powers `X^0..X^cap` for
/// every simple. A trivial kernel, all simples found and faithfulness must
/// coincide; any disagreement is an error.
pub fn verify_brauer(
    ring: &FusionRing,
    fp: &FpData,
    table: &CharacterTable,
    i: usize,
    cap: Option<usize>,
    eps: f64,
) -> Result<BrauerReport> {
    let cap = match cap {
        Some(c) => c,
        None => default_brauer_cap(ring, i)?,
    };
    let kernel = kernel_of_class(ring, fp, table, &ring.basis(i), eps)?;
    let faithful_expected = kernel.is_trivial(table);

    let mut exponents = BTreeMap::new();
    for (n, support) in ring.power_supports(i).take(cap + 1).enumerate() {
        for (k, _) in support.iter().enumerate().filter(|(_, &s)| s) {
            exponents.entry(k).or_insert(n);
        }
        if exponents.len() == ring.rank() {
            break;
        }
    }
    let report = BrauerReport {
        faithful_expected,
        exponents,
        cap_used: cap,
    };
    let all_found = report.all_found(ring);
    let faithful = is_faithful(ring, i);
    match (faithful_expected, all_found, faithful) {
        (true, true, true) | (false, false, false) => Ok(report),
        (true, false, _) => Err(Error::CapExceeded { cap, faithful }),
        (false, true, _) => Err(Error::TheoremViolation(format!(
            "{} has a nontrivial kernel yet every simple occurs in its powers",
            ring.label(i)
        ))),
        (false, false, true) => Err(Error::TheoremViolation(format!(
            "{} is faithful but its kernel is nontrivial",
            ring.label(i)
        ))),
        (true, true, false) => Err(Error::InternalInconsistency(
            "every simple occurs in the powers of a non-faithful object".into(),
        )),
    }
}

/// Kernel of `X_i` computed through the subcategory `D = C(X_i)`: the
/// characters of `K(C)` that take the value 1 on `R_D / FPdim(D)`, which
/// is a sum of primitive idempotents of `K(C)`.
pub fn kernel_via_subring_idempotents(
    ring: &FusionRing,
    _fp: &FpData,
    table: &CharacterTable,
    i: usize,
    eps: f64,
) -> Result<KernelSet> {
    let sub = generated_subcategory(ring, &[i]);
    let sub_ring = restrict(ring, &sub)?;
    let sub_fp = fp_character(&sub_ring)?;
    let mut e = vec![Complex64::new(0.0, 0.0); ring.rank()];
    for (p, &j) in sub.indices().iter().enumerate() {
        e[j] = Complex64::new(sub_fp.dims[p] / sub_fp.global, 0.0);
    }
    let mut indices = BTreeSet::new();
    for (t, mu) in table.characters().iter().enumerate() {
        let v = mu.eval_complex(&e);
        if (v - 1.0).norm() < eps {
            indices.insert(t);
        } else if v.norm() >= eps {
            return Err(Error::InternalInconsistency(format!(
                "character {t} takes value {v} on an idempotent"
            )));
        }
    }
    Ok(KernelSet {
        character_indices: indices,
    })
}
