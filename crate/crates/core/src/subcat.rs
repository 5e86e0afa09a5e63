//! Fusion subcategories, restriction and faithfulness.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ring::{FusionRing, UNIT};

/// A set of simples containing the unit and closed under duals and under
/// constituents of products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subcategory {
    members: BTreeSet<usize>,
}

impl Subcategory {
    /// Checks the closure conditions.
    pub fn new(ring: &FusionRing, members: BTreeSet<usize>) -> Result<Self> {
        if let Some(&i) = members.iter().find(|&&i| i >= ring.rank()) {
            return Err(Error::NotClosed(format!("index {i} out of range")));
        }
        if !members.contains(&UNIT) {
            return Err(Error::NotClosed("missing the unit".into()));
        }
        for &i in &members {
            if !members.contains(&ring.dual(i)) {
                return Err(Error::NotClosed(format!("missing the dual of {}", ring.label(i))));
            }
            for &j in &members {
                if let Some(k) = ring.constituents(i, j).find(|k| !members.contains(k)) {
                    return Err(Error::NotClosed(format!(
                        "{} ⊗ {} contains {}",
                        ring.label(i),
                        ring.label(j),
                        ring.label(k)
                    )));
                }
            }
        }
        Ok(Subcategory { members })
    }

    pub fn full(ring: &FusionRing) -> Self {
        Subcategory {
            members: (0..ring.rank()).collect(),
        }
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    /// Members in increasing order; position `p` is index `p` of the
    /// [`restrict`]ed ring.
    pub fn indices(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_full(&self, ring: &FusionRing) -> bool {
        self.members.len() == ring.rank()
    }
}

/// Smallest subcategory containing `gens`.
pub fn generated_subcategory(ring: &FusionRing, gens: &[usize]) -> Subcategory {
    let mut members: BTreeSet<usize> = gens.iter().copied().collect();
    assert!(members.iter().all(|&i| i < ring.rank()), "generator out of range");
    members.insert(UNIT);
    loop {
        let mut next = members.clone();
        for &i in &members {
            next.insert(ring.dual(i));
            for &j in &members {
                next.extend(ring.constituents(i, j));
            }
        }
        if next.len() == members.len() {
            return Subcategory { members };
        }
        members = next;
    }
}

pub fn is_faithful(ring: &FusionRing, i: usize) -> bool {
    generated_subcategory(ring, &[i]).is_full(ring)
}

/// A nonnegative square matrix is indecomposable iff its digraph, with an
/// edge `j → k` whenever `a[k][j] > 0`, is strongly connected.
pub fn is_indecomposable_matrix(a: &[Vec<u32>]) -> bool {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return true;
    }
    let forward: Vec<Vec<usize>> = (0..n).map(|j| (0..n).filter(|&k| a[k][j] > 0).collect()).collect();
    let backward: Vec<Vec<usize>> = (0..n).map(|k| (0..n).filter(|&j| a[k][j] > 0).collect()).collect();
    reaches_all(&forward, 0) && reaches_all(&backward, 0)
}

fn reaches_all(adj: &[Vec<usize>], start: usize) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// The fusion ring of a subcategory; simples keep their labels and are
/// re-indexed in increasing order, so the unit stays at index 0. The
/// axioms are inherited from `ring` and are not re-checked.
pub fn restrict(ring: &FusionRing, sub: &Subcategory) -> Result<FusionRing> {
    let sub = Subcategory::new(ring, sub.members.clone())?;
    let idx = sub.indices();
    let labels: Vec<String> = idx.iter().map(|&i| ring.label(i).to_string()).collect();
    let n: Vec<Vec<Vec<u32>>> = idx
        .iter()
        .map(|&i| {
            idx.iter()
                .map(|&j| idx.iter().map(|&k| ring.n(i, j, k)).collect())
                .collect()
        })
        .collect();
    let dual = idx
        .iter()
        .map(|&i| idx.binary_search(&ring.dual(i)).expect("closed under duals"))
        .collect();
    let name = format!("{}[{}]", ring.name(), labels.join(","));
    FusionRing::from_parts(name, labels, dual, &n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    fn ring(name: &str) -> FusionRing {
        builtin(name).unwrap().ring
    }

    fn set(ring: &FusionRing, labels: &[&str]) -> BTreeSet<usize> {
        labels.iter().map(|l| ring.index_of(l).unwrap()).collect()
    }

    #[test]
    fn generated_examples() {
        let ising = ring("ising");
        let sigma = ising.index_of("sigma").unwrap();
        let psi = ising.index_of("psi").unwrap();
        assert!(generated_subcategory(&ising, &[sigma]).is_full(&ising));
        assert_eq!(
            generated_subcategory(&ising, &[psi]).members(),
            &set(&ising, &["1", "psi"])
        );
        assert_eq!(generated_subcategory(&ising, &[]).members(), &set(&ising, &["1"]));
    }

    #[test]
    fn faithfulness() {
        let ising = ring("ising");
        assert!(is_faithful(&ising, ising.index_of("sigma").unwrap()));
        assert!(!is_faithful(&ising, ising.index_of("psi").unwrap()));
        assert!(!is_faithful(&ising, UNIT));
        assert!(is_faithful(&ring("trivial"), UNIT));
    }

    #[test]
    fn indecomposability() {
        let ising = ring("ising");
        assert!(is_indecomposable_matrix(
            &ising.fusion_matrix(ising.index_of("sigma").unwrap())
        ));
        let a_psi = ising.fusion_matrix(ising.index_of("psi").unwrap());
        assert!(!is_indecomposable_matrix(&a_psi));
        // the partition M = {sigma}, N = {1, psi} has a[M][N] = 0
        let s = ising.index_of("sigma").unwrap();
        for j in [UNIT, ising.index_of("psi").unwrap()] {
            assert_eq!(a_psi[s][j], 0);
        }
        let id3 = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert!(!is_indecomposable_matrix(&id3));
        assert!(is_indecomposable_matrix(&[vec![0]]));
    }

    #[test]
    fn restriction_examples() {
        let z2 = ring("pointed_zn(2)");
        let ising = ring("ising");
        let sub = Subcategory::new(&ising, set(&ising, &["1", "psi"])).unwrap();
        assert!(restrict(&ising, &sub).unwrap().same_structure(&z2));

        let full = restrict(&ising, &Subcategory::full(&ising)).unwrap();
        assert!(full.same_structure(&ising));
        assert_eq!(full.labels(), ising.labels());

        let s3 = ring("rep_s3");
        let sub = Subcategory::new(&s3, set(&s3, &["1", "eps"])).unwrap();
        assert!(restrict(&s3, &sub).unwrap().same_structure(&z2));
    }

    #[test]
    fn closure_is_enforced() {
        let ising = ring("ising");
        let err = Subcategory::new(&ising, set(&ising, &["1", "sigma"])).unwrap_err();
        assert!(matches!(err, Error::NotClosed(_)));
        assert!(Subcategory::new(&ising, set(&ising, &["psi"])).is_err());
    }
}
