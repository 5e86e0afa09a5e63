//! Modular data: S-matrix characters, Verlinde reconstruction and
//! centralizers.
//!
//! Normalized rows of a modular S-matrix, `s_X(Y) = S[X][Y] / S[X][unit]`,
//! are exactly the characters of the fusion ring. `Y` centralizes `X` when
//! `s_X(Y) = FPdim(Y)` and projectively centralizes it when
//! `|s_X(Y)| = FPdim(Y)`. Only pseudo-unitary data is accepted: the unit
//! row must be proportional to the Frobenius-Perron dimensions.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::kernel_of_character;
use crate::ring::{ClassVector, FusionRing, UNIT};
use crate::settings::Settings;
use crate::spectral::{fp_character, Character, CharacterTable, FpData};
use crate::subcat::Subcategory;

/// Verlinde coefficients farther than this from an integer are rejected.
pub const VERLINDE_ROUNDING: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct ModularData {
    s: Vec<Vec<Complex64>>,
    ring: FusionRing,
    /// The scalar `c` with `S · conj(S) = c · I`.
    global_dim: f64,
    fp: FpData,
    table: CharacterTable,
}

impl ModularData {
    /// Validates symmetry, nondegeneracy, pseudo-unitarity and that the
    /// Verlinde formula reproduces `ring`.
    pub fn new(s: Vec<Vec<Complex64>>, ring: FusionRing, settings: &Settings) -> Result<Self> {
        let r = ring.rank();
        let tol = settings.aggregate_epsilon;
        if s.len() != r || s.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch {
                rank: r,
                detail: "S-matrix shape differs from the ring rank".into(),
            });
        }
        let scale = s
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        for i in 0..r {
            for j in i + 1..r {
                if (s[i][j] - s[j][i]).norm() > tol * scale {
                    return Err(Error::InvariantFailed(format!("S is not symmetric at ({i}, {j})")));
                }
            }
        }

        let global_dim = gram(&s, 0, 0).re;
        if global_dim <= tol * scale * scale {
            return Err(Error::InvariantFailed("S is degenerate".into()));
        }
        for i in 0..r {
            for j in 0..r {
                let expected = if i == j { global_dim } else { 0.0 };
                if (gram(&s, i, j) - expected).norm() > tol * global_dim {
                    return Err(Error::InvariantFailed(format!(
                        "S·conj(S) is not scalar at ({i}, {j}); S is degenerate"
                    )));
                }
            }
        }

        for (t, row) in s.iter().enumerate() {
            if row[UNIT].norm() < tol * scale {
                return Err(Error::ZeroEntry(t));
            }
        }
        if s[UNIT].iter().any(|z| z.re <= 0.0 || z.im.abs() > tol * scale) {
            return Err(Error::InvariantFailed(
                "unit row is not strictly positive; data is not pseudo-unitary".into(),
            ));
        }

        match verlinde_ring(&s) {
            Ok(rebuilt) if rebuilt.same_structure(&ring) => {}
            _ => return Err(Error::VerlindeMismatch(ring.name().to_string())),
        }

        let fp = fp_character(&ring)?;
        let s00 = s[UNIT][UNIT].re;
        for j in 0..r {
            let d = s[UNIT][j].re / s00;
            if (d - fp.dims[j]).abs() > tol * fp.dims[j] {
                return Err(Error::InvariantFailed(format!(
                    "S[unit][{j}] / S[unit][unit] = {d} differs from FPdim {}; data is not pseudo-unitary",
                    fp.dims[j]
                )));
            }
        }

        let table = table_from_rows(&s, &ring, settings)?;
        Ok(ModularData {
            s,
            ring,
            global_dim,
            fp,
            table,
        })
    }

    pub fn s(&self) -> &[Vec<Complex64>] {
        &self.s
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn global_dim(&self) -> f64 {
        self.global_dim
    }

    pub fn fp(&self) -> &FpData {
        &self.fp
    }

    /// Characters `s_X`, indexed by the simple `X` (not canonically sorted).
    pub fn table(&self) -> &CharacterTable {
        &self.table
    }
}

/// `(S · conj(S))[i][j]`.
fn gram(s: &[Vec<Complex64>], i: usize, j: usize) -> Complex64 {
    (0..s.len()).map(|m| s[i][m] * s[m][j].conj()).sum()
}

fn table_from_rows(s: &[Vec<Complex64>], ring: &FusionRing, settings: &Settings) -> Result<CharacterTable> {
    let scale = s.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    let mut characters = Vec::with_capacity(s.len());
    for (t, row) in s.iter().enumerate() {
        let pivot = row[UNIT];
        if pivot.norm() <= settings.aggregate_epsilon * scale {
            return Err(Error::ZeroEntry(t));
        }
        characters.push(Character::new(row.iter().map(|z| z / pivot).collect()));
    }
    CharacterTable::from_characters(ring, characters, settings)
}

/// The characters `s_X(Y) = S[X][Y] / S[X][unit]`; character `t` belongs to
/// simple `t`, so the FP character comes from the unit row.
pub fn characters_from_smatrix(md: &ModularData, settings: &Settings) -> Result<CharacterTable> {
    table_from_rows(&md.s, &md.ring, settings)
}

/// Fusion rules from the Verlinde formula with `U = S / √c` unitary:
/// `N[i][j][k] = Σ_m U[i][m] U[j][m] conj(U[k][m]) / U[unit][m]`.
pub fn verlinde_ring(s: &[Vec<Complex64>]) -> Result<FusionRing> {
    let r = s.len();
    if r == 0 || s.iter().any(|row| row.len() != r) {
        return Err(Error::DimensionMismatch {
            rank: r,
            detail: "S-matrix must be square and nonempty".into(),
        });
    }
    let c: f64 = s[UNIT].iter().map(|z| z.norm_sqr()).sum();
    let root = c.sqrt();
    let u: Vec<Vec<Complex64>> = s.iter().map(|row| row.iter().map(|z| z / root).collect()).collect();
    let mut n = vec![vec![vec![0u32; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let value: Complex64 = (0..r).map(|m| u[i][m] * u[j][m] * u[k][m].conj() / u[UNIT][m]).sum();
                let rounded = value.re.round();
                let off = (value - rounded).norm();
                if off.is_nan() || off > VERLINDE_ROUNDING || rounded < 0.0 {
                    return Err(Error::NonIntegral {
                        i,
                        j,
                        k,
                        value: value.re,
                    });
                }
                n[i][j][k] = rounded as u32;
            }
        }
    }
    let labels = (0..r)
        .map(|i| if i == UNIT { "1".to_string() } else { format!("X{i}") })
        .collect();
    FusionRing::new("verlinde", labels, &n).map_err(|e| match e {
        Error::ValidationFailed(report) => Error::InvalidRing(report),
        other => other,
    })
}

/// Simples centralizing `X_i`: the kernel of `s_{X_i}`.
pub fn centralizer(md: &ModularData, i: usize, settings: &Settings) -> Result<Subcategory> {
    kernel_of_character(&md.ring, &md.fp, &md.table, i, settings.epsilon)
}

/// Simples projectively centralizing `X_i`: `|s_{X_i}(Y)| = FPdim(Y)`.
pub fn projective_centralizer(md: &ModularData, i: usize, eps: f64) -> BTreeSet<usize> {
    let mu = md.table.character(i);
    (0..md.ring.rank())
        .filter(|&y| (mu.value(y).norm() - md.fp.dims[y]).abs() < eps)
        .collect()
}

/// Simples of FP dimension 1, cross-checked exactly against
/// `X ⊗ X* = 1`.
pub fn invertibles(ring: &FusionRing, fp: &FpData, eps: f64) -> Result<BTreeSet<usize>> {
    let by_dim: BTreeSet<usize> = (0..ring.rank()).filter(|&j| (fp.dims[j] - 1.0).abs() < eps).collect();
    let unit = ClassVector::basis(ring.rank(), UNIT);
    let mut exact = BTreeSet::new();
    for j in 0..ring.rank() {
        if ring.multiply(&ring.basis(j), &ring.basis(ring.dual(j)))? == unit {
            exact.insert(j);
        }
    }
    if by_dim != exact {
        return Err(Error::InternalInconsistency(format!(
            "FPdim-one simples {by_dim:?} differ from invertible simples {exact:?}"
        )));
    }
    Ok(exact)
}
