mod common;

use common::{all_builtins, deligne, ring, SAMPLE};
use fusionkit_core::spectral::{character_table, fp_character, is_commutative};
use fusionkit_core::{ClassVector, FusionRing, Settings, UNIT};
use proptest::prelude::*;

#[test]
fn builtins_have_structural_properties() {
    for r in all_builtins() {
        let n = r.rank();
        assert!(r.validate().valid, "{}", r.name());

        let id: Vec<Vec<u32>> = (0..n).map(|k| (0..n).map(|j| u32::from(j == k)).collect()).collect();
        assert_eq!(r.fusion_matrix(UNIT), id);

        let mut sum = vec![vec![0u32; n]; n];
        for i in 0..n {
            let a = r.fusion_matrix(i);
            let at = r.fusion_matrix(r.dual(i));
            for k in 0..n {
                for j in 0..n {
                    sum[k][j] += a[k][j];
                    assert_eq!(at[k][j], a[j][k], "{}: a(dual) is not the transpose", r.name());
                }
            }
            for j in 0..n {
                let unit = r.multiply(&r.basis(i), &r.basis(j)).unwrap()[UNIT];
                assert_eq!(unit == 1, j == r.dual(i), "{}", r.name());
            }
        }
        assert!(sum.iter().flatten().all(|&x| x > 0), "{}", r.name());
    }
}

#[test]
fn basis_products_associate() {
    for r in all_builtins().into_iter().filter(|r| r.rank() <= 13) {
        let n = r.rank();
        for i in 0..n {
            for j in 0..n {
                let ij = r.multiply(&r.basis(i), &r.basis(j)).unwrap();
                for k in 0..n {
                    let left = r.multiply(&ij, &r.basis(k)).unwrap();
                    let jk = r.multiply(&r.basis(j), &r.basis(k)).unwrap();
                    assert_eq!(left, r.multiply(&r.basis(i), &jk).unwrap(), "{}", r.name());
                }
            }
        }
    }
}

#[test]
fn power_examples() {
    let ising = ring("ising");
    let sigma = ising.index_of("sigma").unwrap();
    assert_eq!(
        ising.tensor_power_class(sigma, 2).unwrap(),
        ClassVector::new(vec![1, 1, 0])
    );
    assert_eq!(ising.tensor_power_class(sigma, 0).unwrap(), ising.basis(UNIT));
    let fib = ring("fibonacci");
    assert_eq!(fib.tensor_power_class(1, 3).unwrap(), ClassVector::new(vec![1, 2]));
    let s3 = ring("rep_s3");
    let v = s3.basis(s3.index_of("V").unwrap());
    assert_eq!(s3.multiply(&v, &v).unwrap(), ClassVector::new(vec![1, 1, 1]));
}

/// Rank at most 4, so products stay small.
const SMALL: &[&str] = &[
    "trivial",
    "pointed_zn(2)",
    "pointed_zn(3)",
    "fibonacci",
    "ising",
    "rep_s3",
    "su2_k(3)",
];

fn ring_and_classes(count: usize) -> impl Strategy<Value = (FusionRing, Vec<ClassVector>)> {
    prop::sample::select(SAMPLE).prop_flat_map(move |name| {
        let r = ring(name);
        let rank = r.rank();
        let class = prop::collection::vec(0i64..4, rank).prop_map(ClassVector::new);
        (Just(r), prop::collection::vec(class, count))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative_and_unital((r, xs) in ring_and_classes(3)) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        let left = r.multiply(&r.multiply(x, y).unwrap(), z).unwrap();
        let right = r.multiply(x, &r.multiply(y, z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(&r.multiply(&r.basis(UNIT), x).unwrap(), x);
        if is_commutative(&r) {
            prop_assert_eq!(r.multiply(x, y).unwrap(), r.multiply(y, x).unwrap());
        }
    }

    #[test]
    fn fp_dimension_is_multiplicative((r, xs) in ring_and_classes(2)) {
        let fp = fp_character(&r).unwrap();
        let xy = r.multiply(&xs[0], &xs[1]).unwrap();
        let expected = fp.of_class(&xs[0]) * fp.of_class(&xs[1]);
        prop_assert!((fp.of_class(&xy) - expected).abs() <= 1e-9 * expected.max(1.0));
    }

    #[test]
    fn power_supports_track_powers(name in prop::sample::select(SAMPLE), i in 0usize..16, n in 0usize..7) {
        let r = ring(name);
        let i = i % r.rank();
        let power = r.tensor_power_class(i, n).unwrap();
        let support = r.power_supports(i).nth(n).unwrap();
        for k in 0..r.rank() {
            prop_assert_eq!(support[k], power[k] > 0);
        }
    }

    #[test]
    fn products_of_builtins(a in prop::sample::select(SMALL), b in prop::sample::select(SMALL)) {
        let (ra, rb) = (ring(a), ring(b));
        let p = deligne(&ra, &rb);
        prop_assert!(p.validate().valid);
        let (fa, fb, fpp) = (fp_character(&ra).unwrap(), fp_character(&rb).unwrap(), fp_character(&p).unwrap());
        for i in 0..ra.rank() {
            for j in 0..rb.rank() {
                let expected = fa.dims[i] * fb.dims[j];
                prop_assert!((fpp.dims[i * rb.rank() + j] - expected).abs() < 1e-9 * expected);
            }
        }
        if is_commutative(&ra) && is_commutative(&rb) {
            let s = Settings::default();
            let (ta, tb) = (character_table(&ra, &s).unwrap(), character_table(&rb, &s).unwrap());
            let tp = character_table(&p, &s).unwrap();
            let mut expected: Vec<f64> = ta.codegrees().iter().flat_map(|f| tb.codegrees().iter().map(move |g| f * g)).collect();
            let mut got = tp.codegrees().to_vec();
            expected.sort_by(f64::total_cmp);
            got.sort_by(f64::total_cmp);
            for (x, y) in got.iter().zip(&expected) {
                prop_assert!((x - y).abs() < 1e-8 * y.max(1.0), "{:?} vs {:?}", got, expected);
            }
        }
    }
}
