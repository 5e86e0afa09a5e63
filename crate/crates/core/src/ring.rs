//! Fusion rings given by structure constants.
//!
//! `N[i][j][k]` is the multiplicity of simple `k` in `i ⊗ j`. The fusion
//! matrix of a simple `i` is oriented so that column `j` holds the
//! decomposition of `i ⊗ j`, i.e. `a(i)[k][j] = N[i][j][k]`; multiplying a
//! class vector by `a(i)` is left multiplication by `i`.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// Basis index of the unit object in every [`FusionRing`].
pub const UNIT: usize = 0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    name: String,
    labels: Vec<String>,
    dual: Vec<usize>,
    rank: usize,
    /// Flat `rank³` tensor, index `(i * rank + j) * rank + k`.
    n: Vec<u32>,
}

impl FusionRing {
    /// Builds a ring from explicit parts without checking the based-ring
    /// axioms; only shapes, labels and the dual permutation are checked.
    /// Use [`FusionRing::validate`] to inspect the axioms.
    pub fn from_parts(
        name: impl Into<String>,
        labels: Vec<String>,
        dual: Vec<usize>,
        n: &[Vec<Vec<u32>>],
    ) -> Result<Self> {
        let rank = labels.len();
        if rank == 0 {
            return Err(Error::DimensionMismatch {
                rank,
                detail: "rank must be positive".into(),
            });
        }
        check_labels(&labels)?;
        let flat = flatten(n, rank)?;
        check_permutation(&dual, rank)?;
        Ok(FusionRing {
            name: name.into(),
            labels,
            dual,
            rank,
            n: flat,
        })
    }

    /// Builds a ring, deriving the dual from the structure constants and
    /// rejecting anything that is not a valid based ring.
    pub fn new(name: impl Into<String>, labels: Vec<String>, n: &[Vec<Vec<u32>>]) -> Result<Self> {
        let rank = labels.len();
        flatten(n, rank)?;
        let dual = dual_from_structure(n, UNIT)?;
        let ring = Self::from_parts(name, labels, dual, n)?;
        let report = ring.validate();
        if !report.valid {
            return Err(Error::ValidationFailed(report));
        }
        Ok(ring)
    }

    /// Convenience constructor from a fusion rule `(i, j, k) -> N[i][j][k]`.
    pub fn from_rule(
        name: impl Into<String>,
        labels: Vec<String>,
        rule: impl Fn(usize, usize, usize) -> u32,
    ) -> Result<Self> {
        let r = labels.len();
        let n: Vec<Vec<Vec<u32>>> = (0..r)
            .map(|i| (0..r).map(|j| (0..r).map(|k| rule(i, j, k)).collect()).collect())
            .collect();
        Self::new(name, labels, &n)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// Structure constant `N[i][j][k]`.
    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.n[(i * self.rank + j) * self.rank + k]
    }

    /// Nested copy of the structure tensor.
    pub fn tensor(&self) -> Vec<Vec<Vec<u32>>> {
        let r = self.rank;
        (0..r)
            .map(|i| (0..r).map(|j| (0..r).map(|k| self.n(i, j, k)).collect()).collect())
            .collect()
    }

    /// True when both rings have the same structure constants and duals,
    /// ignoring names and labels.
    pub fn same_structure(&self, other: &FusionRing) -> bool {
        self.rank == other.rank && self.n == other.n && self.dual == other.dual
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn basis(&self, i: usize) -> ClassVector {
        ClassVector::basis(self.rank, i)
    }

    /// Simples `k` with `N[i][j][k] > 0`.
    pub fn constituents(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&k| self.n(i, j, k) > 0)
    }

    /// Checks every based-ring axiom and reports each violating index tuple.
    pub fn validate(&self) -> ValidationReport {
        let r = self.rank;
        let mut violations = Vec::new();
        let mut push = |axiom, witness: Vec<usize>| violations.push(Violation { axiom, witness });

        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                push(Axiom::Involution, vec![i]);
            }
        }
        if self.dual[UNIT] != UNIT {
            push(Axiom::Involution, vec![UNIT]);
        }

        for j in 0..r {
            for k in 0..r {
                let delta = u32::from(j == k);
                if self.n(UNIT, j, k) != delta || self.n(j, UNIT, k) != delta {
                    push(Axiom::Unit, vec![j, k]);
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                let expected = u32::from(j == self.dual[i]);
                if self.n(i, j, UNIT) != expected {
                    push(Axiom::Duality, vec![i, j]);
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let v = self.n(i, j, k);
                    if v != self.n(self.dual[i], k, j) || v != self.n(k, self.dual[j], i) {
                        push(Axiom::FrobeniusReciprocity, vec![i, j, k]);
                    }
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let mut left = 0u64;
                        let mut right = 0u64;
                        for m in 0..r {
                            left += u64::from(self.n(i, j, m)) * u64::from(self.n(m, k, l));
                            right += u64::from(self.n(j, k, m)) * u64::from(self.n(i, m, l));
                        }
                        if left != right {
                            push(Axiom::Associativity, vec![i, j, k, l]);
                        }
                    }
                }
            }
        }

        ValidationReport::from_violations(violations)
    }

    /// The matrix `a(i)` with `a(i)[k][j] = N[i][j][k]`.
    ///
    /// Panics if `i >= rank`.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<u32>> {
        assert!(i < self.rank, "basis index {i} out of range");
        let r = self.rank;
        (0..r).map(|k| (0..r).map(|j| self.n(i, j, k)).collect()).collect()
    }

    /// Product of two classes, `(u·v)[k] = Σ u[i] v[j] N[i][j][k]`.
    pub fn multiply(&self, u: &ClassVector, v: &ClassVector) -> Result<ClassVector> {
        self.check_len(u)?;
        self.check_len(v)?;
        let r = self.rank;
        let mut out = vec![0i64; r];
        for (i, &ui) in u.0.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (j, &vj) in v.0.iter().enumerate().filter(|(_, &c)| c != 0) {
                let coeff = ui.checked_mul(vj).ok_or(Error::Overflow)?;
                for (k, slot) in out.iter_mut().enumerate() {
                    let m = self.n(i, j, k);
                    if m != 0 {
                        let term = coeff.checked_mul(i64::from(m)).ok_or(Error::Overflow)?;
                        *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
                    }
                }
            }
        }
        Ok(ClassVector(out))
    }

    /// `[X_i]^n`; `n = 0` gives the unit.
    pub fn tensor_power_class(&self, i: usize, n: usize) -> Result<ClassVector> {
        assert!(i < self.rank, "basis index {i} out of range");
        let x = self.basis(i);
        let mut acc = self.basis(UNIT);
        for _ in 0..n {
            acc = self.multiply(&x, &acc)?;
        }
        Ok(acc)
    }

    /// Supports of `[X_i]^0, [X_i]^1, ...`.
    ///
    /// Coefficients are nonnegative, so the support of `X^(n+1)` is the set of
    /// constituents of `X ⊗ Y` over `Y` in the support of `X^n`. Unlike
    /// [`tensor_power_class`](Self::tensor_power_class) this never overflows.
    pub fn power_supports(&self, i: usize) -> PowerSupports<'_> {
        assert!(i < self.rank, "basis index {i} out of range");
        let mut current = vec![false; self.rank];
        current[UNIT] = true;
        PowerSupports {
            ring: self,
            generator: i,
            current,
        }
    }

    fn check_len(&self, v: &ClassVector) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::LengthMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        Ok(())
    }
}

/// Iterator over the supports of successive tensor powers of a simple.
pub struct PowerSupports<'a> {
    ring: &'a FusionRing,
    generator: usize,
    current: Vec<bool>,
}

impl Iterator for PowerSupports<'_> {
    type Item = Vec<bool>;

    fn next(&mut self) -> Option<Vec<bool>> {
        let r = self.ring.rank;
        let mut next = vec![false; r];
        for j in (0..r).filter(|&j| self.current[j]) {
            for k in self.ring.constituents(self.generator, j) {
                next[k] = true;
            }
        }
        Some(std::mem::replace(&mut self.current, next))
    }
}

/// Dual permutation read off the structure constants: `dual(i)` is the
/// unique `j` with `N[i][j][unit] = 1`.
pub fn dual_from_structure(n: &[Vec<Vec<u32>>], unit: usize) -> Result<Vec<usize>> {
    let r = n.len();
    flatten(n, r)?;
    if unit >= r {
        return Err(Error::DimensionMismatch {
            rank: r,
            detail: format!("unit index {unit} out of range"),
        });
    }
    let mut dual = Vec::with_capacity(r);
    for (i, row) in n.iter().enumerate() {
        let hits: Vec<(usize, u32)> = row
            .iter()
            .enumerate()
            .map(|(j, col)| (j, col[unit]))
            .filter(|&(_, m)| m > 0)
            .collect();
        match hits.as_slice() {
            [] => return Err(Error::NoDual(i)),
            [(j, 1)] => dual.push(*j),
            _ => return Err(Error::AmbiguousDual(i)),
        }
    }
    if let Some(i) = (0..r).find(|&i| dual[dual[i]] != i) {
        return Err(Error::AmbiguousDual(i));
    }
    Ok(dual)
}

fn flatten(n: &[Vec<Vec<u32>>], rank: usize) -> Result<Vec<u32>> {
    let mismatch = |detail: String| Error::DimensionMismatch { rank, detail };
    if n.len() != rank {
        return Err(mismatch(format!("tensor has {} slices", n.len())));
    }
    let mut flat = Vec::with_capacity(rank * rank * rank);
    for (i, slice) in n.iter().enumerate() {
        if slice.len() != rank {
            return Err(mismatch(format!("N[{i}] has {} rows", slice.len())));
        }
        for (j, row) in slice.iter().enumerate() {
            if row.len() != rank {
                return Err(mismatch(format!("N[{i}][{j}] has {} entries", row.len())));
            }
            flat.extend_from_slice(row);
        }
    }
    Ok(flat)
}

fn check_labels(labels: &[String]) -> Result<()> {
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() {
            return Err(Error::InvalidLabels(format!("label {i} is empty")));
        }
        if labels[..i].contains(l) {
            return Err(Error::InvalidLabels(format!("duplicate label {l:?}")));
        }
    }
    Ok(())
}

fn check_permutation(dual: &[usize], rank: usize) -> Result<()> {
    let mut seen = vec![false; rank];
    if dual.len() != rank {
        return Err(Error::InvalidDualTable(rank));
    }
    for &d in dual {
        if d >= rank || std::mem::replace(&mut seen[d], true) {
            return Err(Error::InvalidDualTable(rank));
        }
    }
    Ok(())
}

/// Integer combination of simples; signed so that virtual classes are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassVector(Vec<i64>);

impl ClassVector {
    pub fn new(coefficients: Vec<i64>) -> Self {
        ClassVector(coefficients)
    }

    pub fn zero(rank: usize) -> Self {
        ClassVector(vec![0; rank])
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        assert!(i < rank, "basis index {i} out of range");
        let mut v = vec![0; rank];
        v[i] = 1;
        ClassVector(v)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn checked_add(&self, other: &ClassVector) -> Result<ClassVector> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ClassVector)
    }
}

impl Index<usize> for ClassVector {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for ClassVector {
    fn from(v: Vec<i64>) -> Self {
        ClassVector(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Unit,
    Associativity,
    Duality,
    FrobeniusReciprocity,
    Involution,
}

impl Axiom {
    pub fn as_str(self) -> &'static str {
        match self {
            Axiom::Unit => "unit",
            Axiom::Associativity => "associativity",
            Axiom::Duality => "duality",
            Axiom::FrobeniusReciprocity => "frobenius_reciprocity",
            Axiom::Involution => "involution",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    /// Distinct violated axioms, in a fixed order.
    pub fn violated_axioms(&self) -> Vec<Axiom> {
        let mut axioms: Vec<Axiom> = self.violations.iter().map(|v| v.axiom).collect();
        axioms.sort();
        axioms.dedup();
        axioms
    }

    pub fn first_witness(&self, axiom: Axiom) -> Option<&[usize]> {
        self.violations
            .iter()
            .find(|v| v.axiom == axiom)
            .map(|v| v.witness.as_slice())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self
            .violated_axioms()
            .into_iter()
            .map(|a| {
                let count = self.violations.iter().filter(|v| v.axiom == a).count();
                format!("{a} ({count} witnesses, first {:?})", self.first_witness(a).unwrap())
            })
            .collect();
        write!(f, "violated {}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    // basis (1, psi, sigma)
    fn ising_tensor() -> Vec<Vec<Vec<u32>>> {
        let mut n = vec![vec![vec![0u32; 3]; 3]; 3];
        for j in 0..3 {
            n[0][j][j] = 1;
            n[j][0][j] = 1;
        }
        n[1][1][0] = 1;
        n[1][2][2] = 1;
        n[2][1][2] = 1;
        n[2][2][0] = 1;
        n[2][2][1] = 1;
        n
    }

    fn ising() -> FusionRing {
        FusionRing::new("ising", labels(&["1", "psi", "sigma"]), &ising_tensor()).unwrap()
    }

    fn fibonacci() -> FusionRing {
        FusionRing::from_rule("fibonacci", labels(&["1", "tau"]), |i, j, k| match (i, j) {
            (0, _) => u32::from(j == k),
            (_, 0) => u32::from(i == k),
            _ => 1,
        })
        .unwrap()
    }

    fn pointed(n: usize) -> FusionRing {
        let names: Vec<String> = (0..n).map(|a| format!("g{a}")).collect();
        FusionRing::from_rule("zn", names, |i, j, k| u32::from((i + j) % n == k)).unwrap()
    }

    fn assoc_sides(n: &[Vec<Vec<u32>>], i: usize, j: usize, k: usize, l: usize) -> (u32, u32) {
        let r = n.len();
        let left = (0..r).map(|m| n[i][j][m] * n[m][k][l]).sum();
        let right = (0..r).map(|m| n[j][k][m] * n[i][m][l]).sum();
        (left, right)
    }

    #[test]
    fn ising_and_rank_one_are_valid() {
        assert!(ising().validate().valid);
        let one = FusionRing::new("trivial", labels(&["1"]), &[vec![vec![1]]]).unwrap();
        let report = one.validate();
        assert!(report.valid && report.violations.is_empty());
    }

    #[test]
    fn doubled_sigma_sigma_psi_breaks_associativity() {
        let mut n = ising_tensor();
        n[2][2][1] = 2;
        // (sigma,sigma,sigma,sigma) balances: 1 + 2 on both sides
        assert_eq!(assoc_sides(&n, 2, 2, 2, 2), (3, 3));
        // (psi,sigma,sigma,psi): N[ψσσ]N[σσψ] = 2 against N[σσ1]N[ψ1ψ] = 1
        assert_eq!(assoc_sides(&n, 1, 2, 2, 1), (2, 1));

        let ring = FusionRing::from_parts("bad", labels(&["1", "psi", "sigma"]), vec![0, 1, 2], &n).unwrap();
        let report = ring.validate();
        assert!(!report.valid);
        let assoc: Vec<&[usize]> = report
            .violations
            .iter()
            .filter(|v| v.axiom == Axiom::Associativity)
            .map(|v| v.witness.as_slice())
            .collect();
        assert!(assoc.contains(&[1usize, 2, 2, 1].as_slice()));
        assert!(!assoc.contains(&[2usize, 2, 2, 2].as_slice()));
        for w in assoc {
            let (l, r) = assoc_sides(&n, w[0], w[1], w[2], w[3]);
            assert_ne!(l, r);
        }
    }

    #[test]
    fn new_rejects_invalid_tensor() {
        let mut n = ising_tensor();
        n[2][2][1] = 2;
        let err = FusionRing::new("bad", labels(&["1", "psi", "sigma"]), &n).unwrap_err();
        assert!(matches!(err, Error::ValidationFailed(_)));
    }

    #[test]
    fn shape_errors() {
        let err = FusionRing::from_parts("x", labels(&["1", "a"]), vec![0, 1], &[vec![vec![1]]]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        let err = FusionRing::from_parts("x", labels(&["1"]), vec![1], &[vec![vec![1]]]).unwrap_err();
        assert!(matches!(err, Error::InvalidDualTable(1)));
        let err = FusionRing::from_parts("x", labels(&["a", "a"]), vec![0, 1], &ising_tensor()[..2]).unwrap_err();
        assert!(matches!(err, Error::InvalidLabels(_) | Error::DimensionMismatch { .. }));
    }

    #[test]
    fn duals() {
        assert_eq!(dual_from_structure(&ising_tensor(), 0).unwrap(), vec![0, 1, 2]);
        assert_eq!(pointed(3).duals(), &[0, 2, 1]);

        let mut n = ising_tensor();
        n[1][1][0] = 0;
        assert!(matches!(dual_from_structure(&n, 0), Err(Error::NoDual(1))));
        n[1][1][0] = 2;
        assert!(matches!(dual_from_structure(&n, 0), Err(Error::AmbiguousDual(1))));
    }

    #[test]
    fn fusion_matrices() {
        let ring = ising();
        let a = ring.fusion_matrix(2);
        assert_eq!(a, vec![vec![0, 0, 1], vec![0, 0, 1], vec![1, 1, 0]]);
        let id: Vec<Vec<u32>> = (0..3).map(|k| (0..3).map(|j| u32::from(j == k)).collect()).collect();
        assert_eq!(ring.fusion_matrix(UNIT), id);
        assert_eq!(fibonacci().fusion_matrix(1), vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn products_and_powers() {
        let ring = ising();
        let s = ring.basis(2);
        assert_eq!(ring.multiply(&s, &s).unwrap(), ClassVector::new(vec![1, 1, 0]));
        let v = ClassVector::new(vec![3, -2, 5]);
        assert_eq!(ring.multiply(&ring.basis(UNIT), &v).unwrap(), v);
        assert_eq!(ring.tensor_power_class(2, 2).unwrap(), ClassVector::new(vec![1, 1, 0]));
        assert_eq!(ring.tensor_power_class(2, 0).unwrap(), ring.basis(UNIT));
        assert_eq!(
            fibonacci().tensor_power_class(1, 3).unwrap(),
            ClassVector::new(vec![1, 2])
        );
    }

    #[test]
    fn multiply_errors() {
        let ring = fibonacci();
        let err = ring.multiply(&ClassVector::new(vec![1]), &ring.basis(0)).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { expected: 2, got: 1 }));
        let big = ClassVector::new(vec![0, i64::MAX / 2]);
        assert!(matches!(ring.multiply(&big, &big), Err(Error::Overflow)));
    }

    #[test]
    fn power_supports_match_powers() {
        let ring = fibonacci();
        for (n, support) in ring.power_supports(1).take(6).enumerate() {
            let class = ring.tensor_power_class(1, n).unwrap();
            let expected: Vec<bool> = class.coefficients().iter().map(|&c| c > 0).collect();
            assert_eq!(support, expected);
        }
        let ring = ising();
        let supports: Vec<Vec<bool>> = ring.power_supports(1).take(3).collect();
        assert_eq!(supports[0], vec![true, false, false]);
        assert_eq!(supports[1], vec![false, true, false]);
        assert_eq!(supports[2], vec![true, false, false]);
    }
}
