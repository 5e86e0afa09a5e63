//! Imprimitivity index, order and the universal cyclic grading of the
//! subcategory generated by a simple object.
//!
//! The index is the period of the digraph of `a(X)` restricted to `C(X)`,
//! computed exactly from breadth-first levels. Character phases are only
//! used to cross-check the grading.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ring::{FusionRing, UNIT};
use crate::settings::Settings;
use crate::spectral::{character_table, fp_character, is_commutative, CharacterTable};
use crate::subcat::{generated_subcategory, is_faithful, is_indecomposable_matrix, restrict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterCheck {
    /// Both grading methods produced the same assignment.
    Agreed,
    /// `C(X)` has a noncommutative ring; only the exponent method ran.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingData {
    pub generator: usize,
    pub index: usize,
    pub order: usize,
    /// Grade in `Z/index` of every simple of `C(X)`, keyed by ambient index.
    pub grades: BTreeMap<usize, usize>,
    /// `components[a]` lists the simples of grade `a`.
    pub components: Vec<Vec<usize>>,
    pub character_check: CharacterCheck,
}

/// Period of a strongly connected digraph: the gcd over all edges `u → v`
/// of `level(u) + 1 − level(v)`, with breadth-first levels from `start`.
/// `None` if some vertex is unreachable or there are no edges.
pub fn digraph_period(successors: &[Vec<usize>], start: usize) -> Option<usize> {
    let n = successors.len();
    let mut level = vec![usize::MAX; n];
    level[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &v in &successors[u] {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    if level.contains(&usize::MAX) {
        return None;
    }
    let mut g = 0usize;
    for (u, succ) in successors.iter().enumerate() {
        for &v in succ {
            let diff = (level[u] as i64 + 1 - level[v] as i64).unsigned_abs() as usize;
            g = gcd(g, diff);
        }
    }
    (g > 0).then_some(g)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Imprimitivity index of `a(X_i)` on `C(X_i)`.
pub fn object_index(ring: &FusionRing, i: usize) -> Result<usize> {
    let sub = generated_subcategory(ring, &[i]);
    let sub_ring = restrict(ring, &sub)?;
    let p = sub.indices().binary_search(&i).expect("generator is a member");
    if !is_indecomposable_matrix(&sub_ring.fusion_matrix(p)) {
        return Err(Error::InternalInconsistency(format!(
            "a({}) is decomposable on the subcategory it generates",
            ring.label(i)
        )));
    }
    let successors: Vec<Vec<usize>> = (0..sub_ring.rank())
        .map(|j| sub_ring.constituents(p, j).collect())
        .collect();
    digraph_period(&successors, UNIT)
        .ok_or_else(|| Error::InternalInconsistency(format!("no period for the digraph of {}", ring.label(i))))
}

/// `rank(C(X))² · ind(X) + rank(C(X))`.
pub fn default_order_cap(ring: &FusionRing, i: usize) -> Result<usize> {
    let r = generated_subcategory(ring, &[i]).len();
    Ok(r * r * object_index(ring, i)? + r)
}

/// Least `n ≥ 1` such that the unit is a constituent of `X_i^n`.
pub fn object_order(ring: &FusionRing, i: usize, cap: Option<usize>) -> Result<usize> {
    let cap = match cap {
        Some(c) => c,
        None => default_order_cap(ring, i)?,
    };
    ring.power_supports(i)
        .enumerate()
        .skip(1)
        .take(cap)
        .find(|(_, support)| support[UNIT])
        .map(|(n, _)| n)
        .ok_or(Error::CapExceeded {
            cap,
            faithful: is_faithful(ring, i),
        })
}

/// For every simple, the exponents `n ≤ cap` with the simple a constituent
/// of `X_i^n`.
pub fn appearance_exponents(ring: &FusionRing, i: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); ring.rank()];
    for (n, support) in ring.power_supports(i).take(cap + 1).enumerate() {
        for (k, _) in support.iter().enumerate().filter(|(_, &s)| s) {
            out[k].push(n);
        }
    }
    out
}

/// The universal grading of `C(X_i)`, cyclic of order `ind(X_i)`.
///
/// Grades come from first appearance in tensor powers of `X_i`. When
/// `C(X_i)` is commutative they are recomputed from the character `μ` of
/// `K(C(X_i))` with `μ(X_i) = ξ FPdim(X_i)`, `ξ = exp(2πi / ind)`, and the
/// two assignments must agree.
pub fn universal_grading(ring: &FusionRing, i: usize, settings: &Settings) -> Result<GradingData> {
    let sub_ring = restrict(ring, &generated_subcategory(ring, &[i]))?;
    let table = if is_commutative(&sub_ring) {
        Some(character_table(&sub_ring, settings)?)
    } else {
        None
    };
    universal_grading_with(ring, i, table.as_ref(), settings)
}

/// [`universal_grading`] with the character table of the restriction of
/// `ring` to `C(X_i)` supplied by the caller; `None` skips the character
/// method.
pub fn universal_grading_with(
    ring: &FusionRing,
    i: usize,
    sub_table: Option<&CharacterTable>,
    settings: &Settings,
) -> Result<GradingData> {
    let sub = generated_subcategory(ring, &[i]);
    let members = sub.indices();
    let index = object_index(ring, i)?;
    let order = object_order(ring, i, None)?;

    let mut first = BTreeMap::new();
    for (n, support) in ring.power_supports(i).take(ring.rank() + 1).enumerate() {
        for (k, _) in support.iter().enumerate().filter(|(_, &s)| s) {
            first.entry(k).or_insert(n);
        }
    }
    if first.len() != members.len() || members.iter().any(|k| !first.contains_key(k)) {
        return Err(Error::InternalInconsistency(format!(
            "powers of {} do not exhaust the subcategory it generates",
            ring.label(i)
        )));
    }
    let grades: BTreeMap<usize, usize> = first.iter().map(|(&k, &n)| (k, n % index)).collect();

    for &u in &members {
        for &v in &members {
            let expected = (grades[&u] + grades[&v]) % index;
            if let Some(k) = ring.constituents(u, v).find(|k| grades[k] != expected) {
                return Err(Error::TheoremViolation(format!(
                    "{} ⊗ {} contains {} of grade {}, expected {}",
                    ring.label(u),
                    ring.label(v),
                    ring.label(k),
                    grades[&k],
                    expected
                )));
            }
        }
    }

    let character_check = if let Some(table) = sub_table {
        let sub_ring = restrict(ring, &sub)?;
        let by_character = grades_from_character(&sub_ring, table, &members, i, index, settings)?;
        let by_exponent: Vec<usize> = members.iter().map(|k| grades[k]).collect();
        if by_character.iter().zip(&by_exponent).any(|(c, &e)| *c != Some(e)) {
            return Err(Error::MethodDisagreement {
                exponent: by_exponent,
                character: by_character,
            });
        }
        CharacterCheck::Agreed
    } else {
        CharacterCheck::Skipped
    };

    let mut components = vec![Vec::new(); index];
    for (&k, &a) in &grades {
        components[a].push(k);
    }
    Ok(GradingData {
        generator: i,
        index,
        order,
        grades,
        components,
        character_check,
    })
}

fn grades_from_character(
    sub_ring: &FusionRing,
    table: &CharacterTable,
    members: &[usize],
    generator: usize,
    index: usize,
    settings: &Settings,
) -> Result<Vec<Option<usize>>> {
    let eps = settings.epsilon;
    let p = members.binary_search(&generator).expect("generator is a member");
    if table.len() != members.len() {
        return Err(Error::DimensionMismatch {
            rank: members.len(),
            detail: "character table does not belong to the generated subcategory".into(),
        });
    }
    let fp = fp_character(sub_ring)?;
    let xi = Complex64::from_polar(1.0, 2.0 * PI / index as f64);
    let powers: Vec<Complex64> = (0..index).map(|a| xi.powu(a as u32)).collect();
    let target = xi * fp.dims[p];
    let Some(mu) = table.characters().iter().find(|mu| (mu.value(p) - target).norm() < eps) else {
        let mismatch = vec![None; members.len()];
        return Err(Error::MethodDisagreement {
            exponent: Vec::new(),
            character: mismatch,
        });
    };
    Ok((0..members.len())
        .map(|q| (0..index).find(|&a| (mu.value(q) - powers[a] * fp.dims[q]).norm() < eps))
        .collect())
}
