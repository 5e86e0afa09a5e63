//! Ring-wide verification of the structural identities between kernels,
//! centers, gradings, characters and S-matrices.
//!
//! Every check sweeps all simples (and characters where relevant) of one
//! commutative ring and reports pass/fail with the first counterexample.
//! Computation errors inside a check count as failures.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::grading::{appearance_exponents, object_index, object_order, universal_grading_with};
use crate::kernel::{
    center_of_class, kernel_of_character, kernel_of_class, kernel_via_subring_idempotents, verify_brauer, KernelSet,
};
use crate::modular::{
    centralizer, characters_from_smatrix, invertibles, projective_centralizer, verlinde_ring, ModularData,
};
use crate::ring::{FusionRing, UNIT};
use crate::settings::Settings;
use crate::spectral::{
    adjoint_class, character_table, multiply_complex, primitive_idempotents, regular_element, CharacterTable, FpData,
};
use crate::subcat::{generated_subcategory, is_faithful, is_indecomposable_matrix, restrict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// `"ok"` or the failure count and first counterexample.
    pub detail: String,
}

impl Check {
    fn from_failures(name: &'static str, failures: Vec<String>) -> Check {
        let detail = match failures.first() {
            None => "ok".to_string(),
            Some(first) if failures.len() == 1 => first.clone(),
            Some(first) => format!("{} failures, first: {first}", failures.len()),
        };
        Check {
            name,
            passed: failures.is_empty(),
            detail,
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Collects failure messages, turning errors into failures.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.0.push(msg());
        }
    }

    fn attempt(&mut self, context: &str, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            self.0.push(format!("{context}: {e}"));
        }
    }

    fn into_check(self, name: &'static str) -> Check {
        Check::from_failures(name, self.0)
    }
}

/// Kernel, center, grading and tensor-power checks for every simple.
///
/// * `brauer`: trivial kernel ⟺ faithful ⟺ indecomposable fusion matrix,
///   and the tensor-power search agrees.
/// * `residue_classes`: exponents at which a simple occurs in powers of
///   `X` are congruent modulo `ind(X)`, up to `3 · rank · ind(X)`.
/// * `index_divides_order`.
/// * `center_cardinality`: on `C(X)` the center of `X` has `ind(X)`
///   characters with values `ξ^a FPdim(X)`.
/// * `grading`: both grading methods agree, the product rule holds and
///   duals have opposite grades.
/// * `idempotent_kernel`: the kernel read off the idempotent of `C(X)`
///   equals the kernel of `X`.
/// * `kernel_closure`: every character kernel is a subcategory.
/// * `center_kernel`: `ker(X ⊗ X*) = Z(X)`.
/// * `adjoint_intersection`: `ker(C_ad)` is the intersection of all centers.
pub fn theorem_checks(ring: &FusionRing, fp: &FpData, table: &CharacterTable, settings: &Settings) -> Vec<Check> {
    let eps = settings.epsilon;
    let r = ring.rank();
    let mut brauer = Failures::default();
    let mut residues = Failures::default();
    let mut divides = Failures::default();
    let mut cardinality = Failures::default();
    let mut grading = Failures::default();
    let mut idempotent = Failures::default();
    let mut center_kernel = Failures::default();

    let mut restricted = Restrictions::default();
    let mut centers: Vec<KernelSet> = Vec::with_capacity(r);
    for i in 0..r {
        let label = ring.label(i);
        let e = ring.basis(i);

        brauer.attempt(label, |f| {
            let trivial = kernel_of_class(ring, fp, table, &e, eps)?.is_trivial(table);
            let faithful = is_faithful(ring, i);
            let indecomposable = is_indecomposable_matrix(&ring.fusion_matrix(i));
            f.check(trivial == faithful && faithful == indecomposable, || {
                format!("{label}: trivial kernel {trivial}, faithful {faithful}, indecomposable {indecomposable}")
            });
            verify_brauer(ring, fp, table, i, None, eps)?;
            Ok(())
        });

        residues.attempt(label, |f| {
            let ind = object_index(ring, i)?;
            for (k, exps) in appearance_exponents(ring, i, 3 * r * ind).iter().enumerate() {
                if let Some(&first) = exps.first() {
                    let bad = exps.iter().find(|&&n| (n - first) % ind != 0);
                    f.check(bad.is_none(), || {
                        format!(
                            "{} occurs in {label}^{first} and {label}^{}",
                            ring.label(k),
                            bad.unwrap()
                        )
                    });
                }
            }
            Ok(())
        });

        divides.attempt(label, |f| {
            let (ind, order) = (object_index(ring, i)?, object_order(ring, i, None)?);
            f.check(order % ind == 0, || {
                format!("{label}: ind {ind} does not divide order {order}")
            });
            Ok(())
        });

        match restricted.get(ring, i, settings) {
            Ok(sub) => {
                cardinality.attempt(label, |f| center_cardinality(ring, i, sub, settings, f));
                grading.attempt(label, |f| {
                    let g = universal_grading_with(ring, i, Some(&sub.table), settings)?;
                    f.check(g.grades[&UNIT] == 0, || format!("{label}: unit has nonzero grade"));
                    f.check(g.index == 1 || g.grades[&i] == 1, || {
                        format!("{label}: generator not in grade 1")
                    });
                    for (&y, &a) in &g.grades {
                        let d = g.grades[&ring.dual(y)];
                        f.check((a + d) % g.index == 0, || {
                            format!("{label}: grades of {} and its dual do not cancel", ring.label(y))
                        });
                    }
                    let covered: usize = g.components.iter().map(Vec::len).sum();
                    f.check(covered == g.grades.len(), || format!("{label}: components overlap"));
                    Ok(())
                });
            }
            Err(e) => {
                cardinality.0.push(format!("{label}: {e}"));
                grading.0.push(format!("{label}: {e}"));
            }
        }

        idempotent.attempt(label, |f| {
            let direct = kernel_of_class(ring, fp, table, &e, eps)?;
            let via = kernel_via_subring_idempotents(ring, fp, table, i, eps)?;
            f.check(direct == via, || format!("{label}: {direct:?} vs {via:?}"));
            Ok(())
        });

        center_kernel.attempt(label, |f| {
            let center = center_of_class(ring, fp, table, &e, eps)?;
            let product = ring.multiply(&e, &ring.basis(ring.dual(i)))?;
            let kernel = kernel_of_class(ring, fp, table, &product, eps)?;
            f.check(center == kernel, || {
                format!("{label}: center {center:?} vs ker(X ⊗ X*) {kernel:?}")
            });
            centers.push(center);
            Ok(())
        });
    }

    let mut closure = Failures::default();
    for t in 0..table.len() {
        closure.attempt(&format!("character {t}"), |_| {
            kernel_of_character(ring, fp, table, t, eps).map(drop)
        });
    }

    let mut adjoint = Failures::default();
    adjoint.attempt("adjoint", |f| {
        let kernel = kernel_of_class(ring, fp, table, &adjoint_class(ring)?, eps)?;
        if centers.len() == r {
            let all: BTreeSet<usize> = (0..table.len()).collect();
            let meet = centers
                .iter()
                .fold(KernelSet { character_indices: all }, |acc, c| acc.intersection(c));
            f.check(kernel == meet, || {
                format!("ker(C_ad) {kernel:?} vs intersection {meet:?}")
            });
        }
        Ok(())
    });

    vec![
        brauer.into_check("brauer"),
        residues.into_check("residue_classes"),
        divides.into_check("index_divides_order"),
        cardinality.into_check("center_cardinality"),
        grading.into_check("grading"),
        idempotent.into_check("idempotent_kernel"),
        closure.into_check("kernel_closure"),
        center_kernel.into_check("center_kernel"),
        adjoint.into_check("adjoint_intersection"),
    ]
}

/// Restricted rings and their character tables, one per generated
/// subcategory.
#[derive(Default)]
struct Restrictions(BTreeMap<BTreeSet<usize>, std::result::Result<Restricted, String>>);

struct Restricted {
    members: Vec<usize>,
    ring: FusionRing,
    fp: FpData,
    table: CharacterTable,
}

impl Restrictions {
    fn get(&mut self, ring: &FusionRing, i: usize, settings: &Settings) -> Result<&Restricted> {
        let sub = generated_subcategory(ring, &[i]);
        let entry = self.0.entry(sub.members().clone()).or_insert_with(|| {
            let build = || -> Result<Restricted> {
                let sub_ring = restrict(ring, &sub)?;
                Ok(Restricted {
                    members: sub.indices(),
                    fp: crate::spectral::fp_character(&sub_ring)?,
                    table: character_table(&sub_ring, settings)?,
                    ring: sub_ring,
                })
            };
            build().map_err(|e| e.to_string())
        });
        entry.as_ref().map_err(|e| {
            crate::error::Error::InternalInconsistency(format!("restriction to C({}): {e}", ring.label(i)))
        })
    }
}

fn center_cardinality(
    ring: &FusionRing,
    i: usize,
    sub: &Restricted,
    settings: &Settings,
    f: &mut Failures,
) -> Result<()> {
    let label = ring.label(i);
    let eps = settings.epsilon;
    let (sub_ring, sub_fp, sub_table) = (&sub.ring, &sub.fp, &sub.table);
    let p = sub.members.binary_search(&i).expect("generator is a member");
    let center = center_of_class(sub_ring, sub_fp, sub_table, &sub_ring.basis(p), eps)?;
    let ind = object_index(ring, i)?;
    f.check(center.len() == ind, || {
        format!("{label}: center has {} characters, ind is {ind}", center.len())
    });
    let d = sub_fp.dims[p];
    let mut hit = vec![false; ind];
    for &t in &center.character_indices {
        let v = sub_table.character(t).value(p);
        match (0..ind).find(|&a| (v - Complex64::from_polar(d, 2.0 * PI * a as f64 / ind as f64)).norm() < eps) {
            Some(a) => hit[a] = true,
            None => f.check(false, || {
                format!("{label}: central value {v} is not a root of unity times FPdim")
            }),
        }
    }
    f.check(hit.iter().all(|&h| h), || {
        format!("{label}: central values miss a root of unity")
    });
    Ok(())
}

/// Identities of the character table, at the aggregate tolerance.
///
/// * `orthogonality`: `Σ_t μ_t(i) conj(μ_t(j)) / f_t = δ_ij`.
/// * `codegree_sum`: `Σ_t 1/f_t = 1`.
/// * `codegrees_positive`.
/// * `adjoint_codegree`: `μ_t(C_ad) = f_t`.
/// * `dual_conjugation`: `μ_t(j*) = conj(μ_t(j))`.
/// * `fp_agreement`: the first character is the FP character.
/// * `idempotents`: `E_i E_j = δ_ij E_i` and the FP idempotent is
///   `R_C / FPdim(C)`.
/// * `constituent_phase`: if `μ(x) = ξ FPdim(x)` with `|ξ| = 1` for a
///   product `x` of two simples, then `μ(k) = ξ FPdim(k)` for every
///   constituent `k`.
pub fn spectral_checks(ring: &FusionRing, fp: &FpData, table: &CharacterTable, settings: &Settings) -> Vec<Check> {
    let tol = settings.aggregate_epsilon;
    let r = ring.rank();
    let f = table.codegrees();

    let mut orth = Failures::default();
    for i in 0..r {
        for j in 0..r {
            let s: Complex64 = (0..table.len())
                .map(|t| table.character(t).value(i) * table.character(t).value(j).conj() / f[t])
                .sum();
            let delta = if i == j { 1.0 } else { 0.0 };
            orth.check((s - delta).norm() < tol, || {
                format!(
                    "({}, {}): residual {:.3e}",
                    ring.label(i),
                    ring.label(j),
                    (s - delta).norm()
                )
            });
        }
    }

    let mut sum = Failures::default();
    let total: f64 = f.iter().map(|x| 1.0 / x).sum();
    sum.check((total - 1.0).abs() < tol, || format!("Σ 1/f = {total}"));

    let mut positive = Failures::default();
    for (t, &x) in f.iter().enumerate() {
        positive.check(x > 0.0 && x.is_finite(), || format!("f_{t} = {x}"));
    }

    let mut adjoint = Failures::default();
    adjoint.attempt("adjoint", |fl| {
        let c_ad = adjoint_class(ring)?;
        for (t, mu) in table.characters().iter().enumerate() {
            let v = mu.eval(&c_ad);
            fl.check((v - f[t]).norm() < tol, || {
                format!("character {t}: μ(C_ad) = {v}, f = {}", f[t])
            });
        }
        Ok(())
    });

    let mut duals = Failures::default();
    for (t, mu) in table.characters().iter().enumerate() {
        for j in 0..r {
            let (a, b) = (mu.value(ring.dual(j)), mu.value(j).conj());
            duals.check((a - b).norm() < tol, || format!("character {t} on {}", ring.label(j)));
        }
    }

    let mut fp_ok = Failures::default();
    let first = table.character(table.fp_index());
    for j in 0..r {
        fp_ok.check((first.value(j) - fp.dims[j]).norm() < tol, || {
            format!("{}: {} vs {}", ring.label(j), first.value(j), fp.dims[j])
        });
    }

    let mut idem = Failures::default();
    idem.attempt("idempotents", |fl| {
        let set = primitive_idempotents(ring, table)?;
        let e = &set.idempotents;
        for a in 0..e.len() {
            for b in 0..e.len() {
                let prod = multiply_complex(ring, &e[a], &e[b]);
                let err = (0..r)
                    .map(|k| (prod[k] - if a == b { e[a][k] } else { Complex64::new(0.0, 0.0) }).norm())
                    .fold(0.0, f64::max);
                fl.check(err < tol, || format!("E_{a} E_{b}: residual {err:.3e}"));
            }
        }
        let reg = regular_element(ring, fp);
        let err = (0..r)
            .map(|k| (e[table.fp_index()][k] - reg[k] / fp.global).norm())
            .fold(0.0, f64::max);
        fl.check(err < tol, || {
            format!("FP idempotent differs from R_C / FPdim(C) by {err:.3e}")
        });
        Ok(())
    });

    let mut phase = Failures::default();
    phase.attempt("products", |fl| {
        for i in 0..r {
            for j in 0..r {
                let x = ring.multiply(&ring.basis(i), &ring.basis(j))?;
                let d = fp.of_class(&x);
                for (t, mu) in table.characters().iter().enumerate() {
                    let v = mu.eval(&x);
                    if (v.norm() - d).abs() >= tol {
                        continue;
                    }
                    let xi = v / d;
                    for k in x.support() {
                        fl.check((mu.value(k) - xi * fp.dims[k]).norm() < tol, || {
                            format!(
                                "character {t}, {} ⊗ {}: constituent {} off phase",
                                ring.label(i),
                                ring.label(j),
                                ring.label(k)
                            )
                        });
                    }
                }
            }
        }
        Ok(())
    });

    vec![
        orth.into_check("orthogonality"),
        sum.into_check("codegree_sum"),
        positive.into_check("codegrees_positive"),
        adjoint.into_check("adjoint_codegree"),
        duals.into_check("dual_conjugation"),
        fp_ok.into_check("fp_agreement"),
        idem.into_check("idempotents"),
        phase.into_check("constituent_phase"),
    ]
}

/// Identities of modular data.
///
/// * `verlinde_roundtrip`: the Verlinde formula rebuilds the ring exactly.
/// * `character_consistency`: normalized S rows are the character table.
/// * `faithful_centralizer`: `X` faithful ⟺ its centralizer is trivial.
/// * `projective_invertibles`: for faithful `X`, the subcategory generated
///   by the projective centralizer of `X` is the set of invertibles.
/// * `invertible_intersection`: the intersection of all projective
///   centralizers is the set of invertibles.
/// * `s_bound`: `|S[i][j]| ≤ FPdim(i) FPdim(j) S[unit][unit]`.
pub fn modular_checks(md: &ModularData, settings: &Settings) -> Vec<Check> {
    let ring = md.ring();
    let fp = md.fp();
    let eps = settings.epsilon;
    let tol = settings.aggregate_epsilon;
    let r = ring.rank();

    let mut verlinde = Failures::default();
    verlinde.attempt("verlinde", |fl| {
        let rebuilt = verlinde_ring(md.s())?;
        fl.check(rebuilt.same_structure(ring), || {
            "rebuilt fusion rules differ".to_string()
        });
        Ok(())
    });

    let mut consistency = Failures::default();
    consistency.attempt("characters", |fl| {
        let from_s = characters_from_smatrix(md, settings)?;
        let table = character_table(ring, settings)?;
        fl.check(from_s.matches(&table, tol), || {
            "S-matrix characters differ from the character table".into()
        });
        Ok(())
    });

    let mut faithful = Failures::default();
    for i in 0..r {
        faithful.attempt(ring.label(i), |fl| {
            let trivial = centralizer(md, i, settings)?.is_trivial();
            let f = is_faithful(ring, i);
            fl.check(trivial == f, || {
                format!("{}: faithful {f}, trivial centralizer {trivial}", ring.label(i))
            });
            Ok(())
        });
    }

    let mut projective = Failures::default();
    let mut intersection = Failures::default();
    match invertibles(ring, fp, eps) {
        Ok(inv) => {
            for i in (0..r).filter(|&i| is_faithful(ring, i)) {
                let pc: Vec<usize> = projective_centralizer(md, i, eps).into_iter().collect();
                let generated = generated_subcategory(ring, &pc);
                projective.check(generated.members() == &inv, || {
                    format!(
                        "{}: generated {:?}, invertibles {inv:?}",
                        ring.label(i),
                        generated.members()
                    )
                });
            }
            let meet = (0..r).fold((0..r).collect::<BTreeSet<_>>(), |acc, i| {
                acc.intersection(&projective_centralizer(md, i, eps)).copied().collect()
            });
            intersection.check(meet == inv, || format!("intersection {meet:?}, invertibles {inv:?}"));
        }
        Err(e) => {
            projective.check(false, || e.to_string());
            intersection.check(false, || e.to_string());
        }
    }

    let mut bound = Failures::default();
    let s00 = md.s()[UNIT][UNIT].norm();
    for i in 0..r {
        for j in 0..r {
            let limit = fp.dims[i] * fp.dims[j] * s00;
            bound.check(md.s()[i][j].norm() <= limit + tol, || {
                format!("|S[{}][{}]| exceeds {limit}", ring.label(i), ring.label(j))
            });
        }
    }

    vec![
        verlinde.into_check("verlinde_roundtrip"),
        consistency.into_check("character_consistency"),
        faithful.into_check("faithful_centralizer"),
        projective.into_check("projective_invertibles"),
        intersection.into_check("invertible_intersection"),
        bound.into_check("s_bound"),
    ]
}
