mod common;

use std::collections::BTreeMap;

use common::{commutative_builtins, deligne, ring};
use fusionkit_core::grading::{appearance_exponents, default_order_cap, CharacterCheck};
use fusionkit_core::kernel::{default_brauer_cap, kernel_of_class, kernel_via_subring_idempotents, verify_brauer};
use fusionkit_core::spectral::{character_table, fp_character, is_commutative};
use fusionkit_core::subcat::{generated_subcategory, is_faithful};
use fusionkit_core::{object_index, object_order, universal_grading, Error, FusionRing, Settings, UNIT};

fn exponents(ring: &FusionRing, pairs: &[(&str, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().map(|&(l, n)| (ring.index_of(l).unwrap(), n)).collect()
}

#[test]
fn brauer_reports() {
    let s = Settings::default();
    let ising = ring("ising");
    let fp = fp_character(&ising).unwrap();
    let table = character_table(&ising, &s).unwrap();
    let sigma = ising.index_of("sigma").unwrap();
    let report = verify_brauer(&ising, &fp, &table, sigma, Some(8), s.epsilon).unwrap();
    assert!(report.faithful_expected);
    assert_eq!(
        report.exponents,
        exponents(&ising, &[("1", 0), ("sigma", 1), ("psi", 2)])
    );

    let psi = ising.index_of("psi").unwrap();
    let report = verify_brauer(&ising, &fp, &table, psi, Some(8), s.epsilon).unwrap();
    assert!(!report.faithful_expected);
    assert!(!report.exponents.contains_key(&sigma));

    let s3 = ring("rep_s3");
    let fp = fp_character(&s3).unwrap();
    let table = character_table(&s3, &s).unwrap();
    let v = s3.index_of("V").unwrap();
    let report = verify_brauer(&s3, &fp, &table, v, Some(8), s.epsilon).unwrap();
    assert_eq!(report.exponents, exponents(&s3, &[("1", 0), ("V", 1), ("eps", 2)]));
}

#[test]
fn cap_exceeded_reports_faithfulness() {
    let s = Settings::default();
    let z = ring("pointed_zn(10)");
    let fp = fp_character(&z).unwrap();
    let table = character_table(&z, &s).unwrap();
    match verify_brauer(&z, &fp, &table, 1, Some(4), s.epsilon) {
        Err(Error::CapExceeded { cap: 4, faithful: true }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn default_caps_suffice() {
    let s = Settings::default();
    for r in commutative_builtins() {
        let fp = fp_character(&r).unwrap();
        let table = character_table(&r, &s).unwrap();
        for i in 0..r.rank() {
            let report = verify_brauer(&r, &fp, &table, i, None, s.epsilon).unwrap();
            assert_eq!(report.cap_used, default_brauer_cap(&r, i).unwrap());
            assert_eq!(
                report.faithful_expected,
                is_faithful(&r, i),
                "{} {}",
                r.name(),
                r.label(i)
            );
            assert!(object_order(&r, i, None).unwrap() <= default_order_cap(&r, i).unwrap());
        }
    }
}

#[test]
fn idempotent_kernels_agree_on_products() {
    let s = Settings::default();
    let p = deligne(&ring("ising"), &ring("fibonacci"));
    let fp = fp_character(&p).unwrap();
    let table = character_table(&p, &s).unwrap();
    for i in 0..p.rank() {
        let direct = kernel_of_class(&p, &fp, &table, &p.basis(i), s.epsilon).unwrap();
        let via = kernel_via_subring_idempotents(&p, &fp, &table, i, s.epsilon).unwrap();
        assert_eq!(direct, via, "{}", p.label(i));
    }
}

#[test]
fn gradings_on_products() {
    // sigma ⊠ tau generates everything; its index is that of sigma
    let s = Settings::default();
    let p = deligne(&ring("ising"), &ring("fibonacci"));
    let x = p.index_of("sigma⊠tau").unwrap();
    assert!(is_faithful(&p, x));
    let g = universal_grading(&p, x, &s).unwrap();
    assert_eq!(g.index, 2);
    assert_eq!(g.character_check, CharacterCheck::Agreed);
    for (&y, &a) in &g.grades {
        let expected = usize::from(p.label(y).starts_with("sigma"));
        assert_eq!(a, expected, "{}", p.label(y));
    }

    // Z/2 ⊠ Z/3 is cyclic of order 6
    let z6 = deligne(&ring("pointed_zn(2)"), &ring("pointed_zn(3)"));
    let gen = z6.index_of("g⊠g").unwrap();
    assert_eq!(object_index(&z6, gen).unwrap(), 6);
    assert_eq!(object_order(&z6, gen, None).unwrap(), 6);
    let g = universal_grading(&z6, gen, &s).unwrap();
    assert!(g.components.iter().all(|c| c.len() == 1));
}

/// Group elements of `group` plus `m` with `g m = m g = m` and `m m` the sum
/// of all group elements.
fn tambara_yamagami_over(group: &FusionRing) -> FusionRing {
    let n = group.rank();
    let mut labels: Vec<String> = group.labels().to_vec();
    labels.push("m".into());
    FusionRing::from_rule("ty", labels, |i, j, k| match (i == n, j == n) {
        (true, true) => u32::from(k < n),
        (true, false) | (false, true) => u32::from(k == n),
        (false, false) => u32::from(k < n && group.n(i, j, k) > 0),
    })
    .unwrap()
}

#[test]
fn noncommutative_subcategory_skips_character_method() {
    let s = Settings::default();
    let ty = tambara_yamagami_over(&ring("vec_s3"));
    assert!(!is_commutative(&ty));
    let m = ty.index_of("m").unwrap();
    assert!(is_faithful(&ty, m));
    let g = universal_grading(&ty, m, &s).unwrap();
    assert_eq!(g.index, 2);
    assert_eq!(g.order, 2);
    assert_eq!(g.character_check, CharacterCheck::Skipped);
    assert_eq!(g.components[1], vec![m]);

    let swap = ty.index_of("(12)").unwrap();
    let g = universal_grading(&ty, swap, &s).unwrap();
    assert_eq!((g.index, g.character_check), (2, CharacterCheck::Agreed));
}

#[test]
fn residues_and_divisibility_on_all_builtins() {
    for r in commutative_builtins() {
        for i in 0..r.rank() {
            let ind = object_index(&r, i).unwrap();
            let order = object_order(&r, i, None).unwrap();
            assert_eq!(order % ind, 0, "{} {}", r.name(), r.label(i));
            let sub = generated_subcategory(&r, &[i]);
            for (k, exps) in appearance_exponents(&r, i, 2 * r.rank() * ind).iter().enumerate() {
                assert_eq!(exps.is_empty(), !sub.contains(k));
                if let Some(&first) = exps.first() {
                    assert!(exps.iter().all(|n| (n - first) % ind == 0));
                }
            }
            assert!(appearance_exponents(&r, i, 0)[UNIT] == vec![0]);
        }
    }
}
