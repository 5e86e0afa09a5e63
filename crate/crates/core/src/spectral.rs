//! Frobenius-Perron dimensions, characters and formal codegrees.
//!
//! For a commutative fusion ring every character `μ` is a simultaneous
//! eigenvector of the transposed fusion matrices: `(a(i)ᵀ μ)_j =
//! Σ_k N[i][j][k] μ_k = μ_i μ_j`. The table is found by diagonalizing one
//! random real combination `Σ c_i a(i)ᵀ` with a fixed seed.

use std::cmp::Ordering;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ring::{ClassVector, FusionRing, UNIT};
use crate::settings::{Settings, MAX_SEED_RETRIES};

const POWER_ITERATION_CAP: usize = 10_000;
const POWER_ITERATION_TOL: f64 = 1e-14;
/// Relative eigenvalue separation below which the combination is rejected.
const COLLISION_TOL: f64 = 1e-6;
/// Real and imaginary parts below this are snapped to zero.
const SNAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct FpData {
    pub dims: Vec<f64>,
    /// `FPdim(C) = Σ_j FPdim(j)²`.
    pub global: f64,
}

impl FpData {
    fn from_dims(dims: Vec<f64>) -> Self {
        let global = dims.iter().map(|d| d * d).sum();
        FpData { dims, global }
    }

    /// Linear extension of FPdim to a class.
    pub fn of_class(&self, x: &ClassVector) -> f64 {
        x.coefficients()
            .iter()
            .zip(&self.dims)
            .map(|(&c, d)| c as f64 * d)
            .sum()
    }
}

/// Frobenius-Perron dimensions by power iteration on the strictly positive
/// matrix `Σ_i a(i)ᵀ`, starting from the all-ones vector.
pub fn fp_character(ring: &FusionRing) -> Result<FpData> {
    let r = ring.rank();
    let m: Vec<Vec<f64>> = (0..r)
        .map(|j| {
            (0..r)
                .map(|k| (0..r).map(|i| f64::from(ring.n(i, j, k))).sum())
                .collect()
        })
        .collect();
    let mut v = vec![1.0; r];
    for _ in 0..POWER_ITERATION_CAP {
        let mut w: Vec<f64> = m
            .iter()
            .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect();
        let scale = w[UNIT];
        w.iter_mut().for_each(|x| *x /= scale);
        let change = w.iter().zip(&v).map(|(a, b)| ((a - b) / a).abs()).fold(0.0, f64::max);
        v = w;
        if change < POWER_ITERATION_TOL {
            return Ok(FpData::from_dims(v));
        }
    }
    Err(Error::ConvergenceFailure(POWER_ITERATION_CAP))
}

/// The virtual regular element `R_C = Σ_j FPdim(j) e_j`.
pub fn regular_element(ring: &FusionRing, fp: &FpData) -> Vec<Complex64> {
    debug_assert_eq!(ring.rank(), fp.dims.len());
    fp.dims.iter().map(|&d| Complex64::new(d, 0.0)).collect()
}

pub fn is_commutative(ring: &FusionRing) -> bool {
    let r = ring.rank();
    (0..r).all(|i| (i + 1..r).all(|j| (0..r).all(|k| ring.n(i, j, k) == ring.n(j, i, k))))
}

/// A ring homomorphism `K(C) → ℂ`, stored by its values on the simples.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    values: Vec<Complex64>,
}

impl Character {
    pub fn new(values: Vec<Complex64>) -> Self {
        Character { values }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, j: usize) -> Complex64 {
        self.values[j]
    }

    pub fn eval(&self, x: &ClassVector) -> Complex64 {
        x.coefficients()
            .iter()
            .zip(&self.values)
            .map(|(&c, v)| v * c as f64)
            .sum()
    }

    pub fn eval_complex(&self, x: &[Complex64]) -> Complex64 {
        x.iter().zip(&self.values).map(|(c, v)| c * v).sum()
    }

    /// `max |μ(i)μ(j) − Σ_k N[i][j][k] μ(k)|` over all pairs of simples.
    pub fn multiplicativity_residual(&self, ring: &FusionRing) -> f64 {
        let r = ring.rank();
        let mut worst = 0.0f64;
        for i in 0..r {
            for j in 0..r {
                let rhs: Complex64 = ring
                    .constituents(i, j)
                    .map(|k| self.values[k] * f64::from(ring.n(i, j, k)))
                    .sum();
                worst = worst.max((self.values[i] * self.values[j] - rhs).norm());
            }
        }
        worst
    }

    /// `f = Σ_j μ(j) μ(j*)`.
    fn codegree(&self, ring: &FusionRing) -> Complex64 {
        (0..ring.rank())
            .map(|j| self.values[j] * self.values[ring.dual(j)])
            .sum()
    }

    /// Entrywise within `tol`.
    pub fn close_to(&self, other: &[Complex64], tol: f64) -> bool {
        self.values.len() == other.len() && self.values.iter().zip(other).all(|(a, b)| (a - b).norm() < tol)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    characters: Vec<Character>,
    fp_index: usize,
    codegrees: Vec<f64>,
}

impl CharacterTable {
    /// Wraps a complete list of characters whose first entry is the FP
    /// character, computing formal codegrees.
    pub fn from_characters(ring: &FusionRing, characters: Vec<Character>, settings: &Settings) -> Result<Self> {
        let r = ring.rank();
        if characters.len() != r || characters.iter().any(|c| c.values.len() != r) {
            return Err(Error::DimensionMismatch {
                rank: r,
                detail: format!("expected {r} characters of length {r}"),
            });
        }
        let fp = &characters[0];
        if fp.values.iter().any(|v| v.re <= 0.0 || v.im.abs() > settings.epsilon) {
            return Err(Error::InternalInconsistency(
                "first character is not strictly positive".into(),
            ));
        }
        let mut codegrees = Vec::with_capacity(r);
        for (t, c) in characters.iter().enumerate() {
            let f = c.codegree(ring);
            if f.im.abs() > settings.aggregate_epsilon * f.norm().max(1.0) || f.re <= 0.0 {
                return Err(Error::InternalInconsistency(format!(
                    "codegree of character {t} is not real positive: {f}"
                )));
            }
            codegrees.push(f.re);
        }
        Ok(CharacterTable {
            characters,
            fp_index: 0,
            codegrees,
        })
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn character(&self, t: usize) -> &Character {
        &self.characters[t]
    }

    pub fn fp_index(&self) -> usize {
        self.fp_index
    }

    pub fn codegrees(&self) -> &[f64] {
        &self.codegrees
    }

    /// Index of the character whose values are within `tol` of `values`.
    pub fn find(&self, values: &[Complex64], tol: f64) -> Option<usize> {
        self.characters.iter().position(|c| c.close_to(values, tol))
    }

    /// Equality as sets of characters, entrywise within `tol`.
    pub fn matches(&self, other: &CharacterTable, tol: f64) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut used = vec![false; other.len()];
        self.characters.iter().all(|c| {
            match (0..other.len()).find(|&t| !used[t] && other.characters[t].close_to(&c.values, tol)) {
                Some(t) => {
                    used[t] = true;
                    true
                }
                None => false,
            }
        })
    }
}

/// All characters of a commutative fusion ring, FP character first and the
/// rest ordered lexicographically by (real, imaginary) parts.
pub fn character_table(ring: &FusionRing, settings: &Settings) -> Result<CharacterTable> {
    if !is_commutative(ring) {
        return Err(Error::NonCommutative);
    }
    let fp = fp_character(ring)?;
    let r = ring.rank();
    let fp_values: Vec<Complex64> = fp.dims.iter().map(|&d| Complex64::new(d, 0.0)).collect();
    if r == 1 {
        return CharacterTable::from_characters(ring, vec![Character::new(fp_values)], settings);
    }

    let mut characters = None;
    for attempt in 0..=MAX_SEED_RETRIES {
        let seed = settings.seed.wrapping_add(attempt);
        if let Some(found) = diagonalize(ring, seed, settings) {
            characters = Some(found);
            break;
        }
    }
    let mut characters = characters.ok_or(Error::DegenerateCombination(MAX_SEED_RETRIES + 1))?;

    let scale = fp.dims.iter().cloned().fold(1.0, f64::max);
    let (fp_pos, distance) = characters
        .iter()
        .enumerate()
        .map(|(t, c)| {
            let d = c
                .values
                .iter()
                .zip(&fp_values)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            (t, d)
        })
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("rank > 1");
    if distance > settings.aggregate_epsilon * scale {
        return Err(Error::InternalInconsistency(format!(
            "no character matches the Frobenius-Perron dimensions (closest differs by {distance:e})"
        )));
    }
    characters.swap_remove(fp_pos);
    let tol = settings.epsilon;
    characters.sort_by(|a, b| lexicographic(&a.values, &b.values, tol));
    characters.insert(0, Character::new(fp_values));
    CharacterTable::from_characters(ring, characters, settings)
}

fn lexicographic(a: &[Complex64], b: &[Complex64], tol: f64) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        for (p, q) in [(x.re, y.re), (x.im, y.im)] {
            if (p - q).abs() > tol {
                return p.total_cmp(&q);
            }
        }
    }
    Ordering::Equal
}

/// One attempt at simultaneous diagonalization; `None` on eigenvalue
/// collision or when the recovered vectors are not characters.
fn diagonalize(ring: &FusionRing, seed: u64, settings: &Settings) -> Option<Vec<Character>> {
    let r = ring.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<f64> = (0..r).map(|_| rng.random_range(0.5..1.5)).collect();
    let combo = DMatrix::<f64>::from_fn(r, r, |j, k| {
        (0..r).map(|i| coeffs[i] * f64::from(ring.n(i, j, k))).sum()
    });

    let eigenvalues: Vec<Complex64> = combo.complex_eigenvalues().iter().cloned().collect();
    let magnitude = eigenvalues.iter().map(|l| l.norm()).fold(1.0, f64::max);
    for s in 0..r {
        for t in s + 1..r {
            if (eigenvalues[s] - eigenvalues[t]).norm() < COLLISION_TOL * magnitude {
                return None;
            }
        }
    }

    let combo_c = combo.map(|x| Complex64::new(x, 0.0));
    let mut characters = Vec::with_capacity(r);
    for &lambda in &eigenvalues {
        let shifted = &combo_c - DMatrix::<Complex64>::identity(r, r) * lambda;
        let svd = shifted.svd(false, true);
        let v_t = svd.v_t?;
        let p = svd.singular_values.argmin().0;
        let v: Vec<Complex64> = v_t.row(p).iter().map(|c| c.conj()).collect();
        if v[UNIT].norm() < 1e-8 {
            return None;
        }
        let pivot = v[UNIT];
        let mut values: Vec<Complex64> = v.iter().map(|x| x / pivot).collect();
        polish(ring, &mut values);
        snap(&mut values);
        let character = Character::new(values);
        if character.multiplicativity_residual(ring) > settings.epsilon {
            return None;
        }
        characters.push(character);
    }
    Some(characters)
}

/// Rayleigh-quotient refinement. Fusion matrices of a commutative ring are
/// normal, so each quotient is accurate to second order.
fn polish(ring: &FusionRing, values: &mut [Complex64]) {
    let r = ring.rank();
    for _ in 0..2 {
        let norm_sq: f64 = values.iter().map(|v| v.norm_sqr()).sum();
        let mut next = values.to_vec();
        for (i, slot) in next.iter_mut().enumerate().skip(1) {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..r {
                let image: Complex64 = ring
                    .constituents(i, j)
                    .map(|k| values[k] * f64::from(ring.n(i, j, k)))
                    .sum();
                acc += values[j].conj() * image;
            }
            *slot = acc / norm_sq;
        }
        next[UNIT] = Complex64::new(1.0, 0.0);
        values.copy_from_slice(&next);
    }
}

fn snap(values: &mut [Complex64]) {
    for v in values {
        if v.re.abs() < SNAP {
            v.re = 0.0;
        }
        if v.im.abs() < SNAP {
            v.im = 0.0;
        }
    }
}

/// Primitive idempotents of `K(C) ⊗ ℂ` for a commutative ring.
#[derive(Debug, Clone, PartialEq)]
pub struct IdempotentSet {
    pub idempotents: Vec<Vec<Complex64>>,
}

/// Solves `μ_t(E_i) = δ_ti` by inverting the character matrix.
pub fn primitive_idempotents(ring: &FusionRing, table: &CharacterTable) -> Result<IdempotentSet> {
    let r = ring.rank();
    let x = DMatrix::<Complex64>::from_fn(r, r, |t, j| table.character(t).value(j));
    let inv = x.clone().try_inverse().ok_or(Error::SingularCharacterMatrix)?;
    let check = &x * &inv - DMatrix::<Complex64>::identity(r, r);
    if check.iter().any(|c| c.norm() > 1e-6) {
        return Err(Error::SingularCharacterMatrix);
    }
    let idempotents = (0..r).map(|i| inv.column(i).iter().cloned().collect()).collect();
    Ok(IdempotentSet { idempotents })
}

/// Ring multiplication extended to complex coefficients.
pub fn multiply_complex(ring: &FusionRing, u: &[Complex64], v: &[Complex64]) -> Vec<Complex64> {
    let r = ring.rank();
    assert!(u.len() == r && v.len() == r, "vectors must have length {r}");
    let mut out = vec![Complex64::new(0.0, 0.0); r];
    for i in (0..r).filter(|&i| u[i] != Complex64::new(0.0, 0.0)) {
        for j in 0..r {
            let c = u[i] * v[j];
            for k in ring.constituents(i, j) {
                out[k] += c * f64::from(ring.n(i, j, k));
            }
        }
    }
    out
}

/// `m_C(u, v) = Σ_j u[j] v[j]`; simples are orthonormal.
pub fn bilinear_m(ring: &FusionRing, u: &ClassVector, v: &ClassVector) -> Result<i64> {
    for w in [u, v] {
        if w.len() != ring.rank() {
            return Err(Error::LengthMismatch {
                expected: ring.rank(),
                got: w.len(),
            });
        }
    }
    u.coefficients()
        .iter()
        .zip(v.coefficients())
        .try_fold(0i64, |acc, (&a, &b)| {
            a.checked_mul(b).and_then(|p| acc.checked_add(p)).ok_or(Error::Overflow)
        })
}

/// `C_ad = Σ_j e_j · e_{j*}`.
pub fn adjoint_class(ring: &FusionRing) -> Result<ClassVector> {
    let mut acc = ClassVector::zero(ring.rank());
    for j in 0..ring.rank() {
        let p = ring.multiply(&ring.basis(j), &ring.basis(ring.dual(j)))?;
        acc = acc.checked_add(&p)?;
    }
    Ok(acc)
}
