use std::fs;
use std::path::PathBuf;

use fusionkit_core::modular::verlinde_ring;
use fusionkit_core::{
    builtin, builtin_names, load_ring, load_smatrix, save_ring, save_smatrix, Axiom, Error, Settings,
};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

#[test]
fn every_builtin_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    for name in builtin_names() {
        let ring = builtin(&name).unwrap().ring;
        let path = dir.path().join("ring.json");
        save_ring(&ring, &path).unwrap();
        let back = load_ring(&path).unwrap();
        assert!(back.same_structure(&ring), "{name}");
        assert_eq!(back.labels(), ring.labels(), "{name}");
        assert_eq!(back.name(), ring.name());
    }
}

#[test]
fn unit_is_moved_to_the_front() {
    let ring = load_ring(fixture("ising_unit_last.json")).unwrap();
    assert_eq!(ring.label(0), "1");
    let ising = builtin("ising").unwrap().ring;
    // labels are (1, sigma, psi) after the move; compare through labels
    for (i, a) in ising.labels().iter().enumerate() {
        for (j, b) in ising.labels().iter().enumerate() {
            for (k, c) in ising.labels().iter().enumerate() {
                let (x, y, z) = (
                    ring.index_of(a).unwrap(),
                    ring.index_of(b).unwrap(),
                    ring.index_of(c).unwrap(),
                );
                assert_eq!(ring.n(x, y, z), ising.n(i, j, k), "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn doubled_multiplicity_fails_associativity() {
    match load_ring(fixture("ising_doubled.json")) {
        Err(Error::ValidationFailed(report)) => {
            assert!(report.violated_axioms().contains(&Axiom::Associativity), "{report}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn declared_dual_must_agree() {
    assert!(load_ring(fixture("z3.json")).is_ok());
    match load_ring(fixture("z3_wrong_dual.json")) {
        Err(Error::DualMismatch { declared, computed }) => {
            assert_eq!(declared, vec![0, 1, 2]);
            assert_eq!(computed, vec![0, 2, 1]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\n  \"name\": \"x\",\n  \"rank\": ,\n}").unwrap();
    match load_ring(&path) {
        Err(Error::Parse { line, column, .. }) => {
            assert_eq!(line, 3);
            assert!(column > 0);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn field_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"name":"x","rank":2,"labels":["1"],"unit":0,"N":[]}"#, "labels"),
        (r#"{"name":"x","rank":1,"labels":["1"],"unit":3,"N":[[[1]]]}"#, "unit"),
        (
            r#"{"name":"x","rank":1,"labels":["1"],"unit":0,"N":[[[1]]],"extra":1}"#,
            "extra",
        ),
        (r#"{"name":"x","rank":0,"labels":[],"unit":0,"N":[]}"#, "rank"),
    ];
    for (text, field) in cases {
        let path = dir.path().join("f.json");
        fs::write(&path, text).unwrap();
        let err = load_ring(&path).unwrap_err();
        assert!(
            matches!(err, Error::Parse { .. } | Error::DimensionMismatch { .. }),
            "{text}: {err:?}"
        );
        assert!(err.to_string().contains(field), "{text}: {err}");
    }
}

#[test]
fn missing_file_is_io() {
    assert!(matches!(load_ring(fixture("nosuch.json")), Err(Error::Io(_))));
}

#[test]
fn smatrix_files_are_checked_against_the_ring() {
    let s = Settings::default();
    let ising = builtin("ising").unwrap().ring;
    let md = load_smatrix(fixture("ising_s.json"), &ising, &s).unwrap();
    // the file holds the unitary normalization, S[0][0] = 1/2 = 1/√FPdim(C)
    assert!((md.global_dim() - 1.0).abs() < 1e-9);
    assert!((md.fp().global - 4.0).abs() < 1e-9);

    let fib = builtin("fibonacci").unwrap().ring;
    assert!(matches!(
        load_smatrix(fixture("ising_s.json"), &fib, &s),
        Err(Error::DimensionMismatch { .. })
    ));
    let z2 = builtin("pointed_zn(2)").unwrap().ring;
    assert!(matches!(
        load_smatrix(fixture("singular_s.json"), &z2, &s),
        Err(Error::InvariantFailed(_))
    ));
    let z4 = builtin("pointed_zn(4)").unwrap().ring;
    assert!(matches!(
        load_smatrix(fixture("z2xz2_s.json"), &z4, &s),
        Err(Error::VerlindeMismatch(_))
    ));
}

#[test]
fn smatrix_round_trip() {
    let s = Settings::default();
    let dir = tempfile::tempdir().unwrap();
    for name in ["ising", "fibonacci", "su2_k(4)", "pointed_zn(7)"] {
        let entry = builtin(name).unwrap();
        let md = entry.smatrix.unwrap();
        let path = dir.path().join("s.json");
        save_smatrix(&md, &path).unwrap();
        let back = load_smatrix(&path, &entry.ring, &s).unwrap();
        for (a, b) in md.s().iter().flatten().zip(back.s().iter().flatten()) {
            assert_eq!(a, b, "{name}");
        }
        assert!(verlinde_ring(back.s()).unwrap().same_structure(&entry.ring));
    }
}
