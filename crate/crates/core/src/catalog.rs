//! Built-in fusion rings and modular data, and the JSON file formats.
//!
//! Ring files look like
//!
//! ```json
//! {"name": "ising", "rank": 3, "labels": ["1", "psi", "sigma"], "unit": 0,
//!  "dual": [0, 1, 2], "N": [[[1, 0, 0], ...], ...]}
//! ```
//!
//! with `N[i][j][k]` the multiplicity of `k` in `i ⊗ j`; `dual` is optional.
//! S-matrix files are `{"ring": "ising", "S": [[[re, im], ...], ...]}`.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::ModularData;
use crate::ring::{dual_from_structure, Axiom, FusionRing, ValidationReport, Violation, UNIT};
use crate::settings::Settings;

pub const MAX_POINTED_N: usize = 24;
pub const MAX_TAMBARA_YAMAGAMI_N: usize = 12;
pub const MAX_SU2_LEVEL: usize = 10;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub ring: FusionRing,
    pub smatrix: Option<ModularData>,
    /// Where the fusion rules come from.
    pub notes: String,
}

/// Looks up a built-in entry. Parametric families accept both
/// `pointed_zn(5)` and `pointed_zn:5`.
pub fn builtin(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownName(name.to_string());
    let (family, param) = split_name(name).ok_or_else(unknown)?;
    let settings = Settings::default();
    let entry = match (family, param) {
        ("trivial", None) => plain(name, pointed(1)?, "the ring Z with one basis element"),
        ("pointed_zn", Some(n)) if (1..=MAX_POINTED_N).contains(&n) => {
            let ring = pointed(n)?.with_name(format!("pointed_zn({n})"));
            let s = pointed_s(n);
            with_s(ring, s, &settings, "group ring of Z/n; S[a][b] = exp(2πi ab/n)/√n")?
        }
        ("vec_s3", None) => plain(name, vec_s3()?, "group ring of S3, product of permutations"),
        ("rep_s3", None) => plain(name, rep_s3()?, "representation ring of S3"),
        ("rep_q8", None) => plain(name, rep_q8()?, "representation ring of the quaternion group"),
        ("fibonacci", None) => with_s(fibonacci()?, fibonacci_s(), &settings, "tau ⊗ tau = 1 + tau")?,
        ("ising", None) => with_s(
            ising()?,
            ising_s(),
            &settings,
            "sigma ⊗ sigma = 1 + psi, sigma ⊗ psi = sigma, psi ⊗ psi = 1",
        )?,
        ("tambara_yamagami_zn", Some(n)) if (1..=MAX_TAMBARA_YAMAGAMI_N).contains(&n) => plain(
            &format!("tambara_yamagami_zn({n})"),
            tambara_yamagami(n)?,
            "Z/n plus m with g ⊗ m = m ⊗ g = m and m ⊗ m = sum of all g",
        ),
        ("su2_k", Some(k)) if k <= MAX_SU2_LEVEL => with_s(
            su2(k)?,
            su2_s(k),
            &settings,
            "truncated Clebsch-Gordan rule at level k; S[i][j] = √(2/(k+2)) sin(π(i+1)(j+1)/(k+2))",
        )?,
        _ => return Err(unknown()),
    };
    Ok(entry)
}

/// Every accepted built-in name, in canonical form.
pub fn builtin_names() -> Vec<String> {
    let mut names = vec!["trivial".to_string()];
    names.extend((1..=MAX_POINTED_N).map(|n| format!("pointed_zn({n})")));
    names.extend(["vec_s3", "rep_s3", "rep_q8", "fibonacci", "ising"].map(String::from));
    names.extend((1..=MAX_TAMBARA_YAMAGAMI_N).map(|n| format!("tambara_yamagami_zn({n})")));
    names.extend((0..=MAX_SU2_LEVEL).map(|k| format!("su2_k({k})")));
    names
}

fn split_name(name: &str) -> Option<(&str, Option<usize>)> {
    let name = name.trim();
    if let Some((family, rest)) = name.split_once('(') {
        let n = rest.strip_suffix(')')?.trim().parse().ok()?;
        return Some((family, Some(n)));
    }
    if let Some((family, n)) = name.split_once(':') {
        return Some((family, Some(n.trim().parse().ok()?)));
    }
    Some((name, None))
}

fn plain(name: &str, ring: FusionRing, notes: &str) -> CatalogEntry {
    let ring = ring.with_name(name);
    CatalogEntry {
        name: ring.name().to_string(),
        ring,
        smatrix: None,
        notes: notes.to_string(),
    }
}

fn with_s(ring: FusionRing, s: Vec<Vec<Complex64>>, settings: &Settings, notes: &str) -> Result<CatalogEntry> {
    let md = ModularData::new(s, ring.clone(), settings)?;
    Ok(CatalogEntry {
        name: ring.name().to_string(),
        ring,
        smatrix: Some(md),
        notes: notes.to_string(),
    })
}

fn power_label(a: usize) -> String {
    match a {
        0 => "1".into(),
        1 => "g".into(),
        _ => format!("g^{a}"),
    }
}

fn pointed(n: usize) -> Result<FusionRing> {
    let labels = (0..n).map(power_label).collect();
    FusionRing::from_rule("pointed", labels, |a, b, c| u32::from((a + b) % n == c))
}

fn pointed_s(n: usize) -> Vec<Vec<Complex64>> {
    let norm = (n as f64).sqrt();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| Complex64::from_polar(1.0 / norm, 2.0 * PI * ((a * b) % n) as f64 / n as f64))
                .collect()
        })
        .collect()
}

/// Permutations of {0, 1, 2}; `(g h)(x) = g(h(x))`.
fn vec_s3() -> Result<FusionRing> {
    const PERMS: [([usize; 3], &str); 6] = [
        ([0, 1, 2], "1"),
        ([1, 0, 2], "(12)"),
        ([2, 1, 0], "(13)"),
        ([0, 2, 1], "(23)"),
        ([1, 2, 0], "(123)"),
        ([2, 0, 1], "(132)"),
    ];
    let labels = PERMS.iter().map(|(_, l)| l.to_string()).collect();
    FusionRing::from_rule("vec_s3", labels, |i, j, k| {
        let (g, h) = (PERMS[i].0, PERMS[j].0);
        u32::from([g[h[0]], g[h[1]], g[h[2]]] == PERMS[k].0)
    })
}

fn rep_s3() -> Result<FusionRing> {
    let labels = ["1", "eps", "V"].map(String::from).to_vec();
    let mut n = vec![vec![vec![0u32; 3]; 3]; 3];
    for j in 0..3 {
        n[0][j][j] = 1;
        n[j][0][j] = 1;
    }
    n[1][1][0] = 1;
    n[1][2][2] = 1;
    n[2][1][2] = 1;
    n[2][2] = vec![1, 1, 1];
    FusionRing::new("rep_s3", labels, &n)
}

/// The four one-dimensional characters form Z/2 × Z/2 (index bits), and the
/// two-dimensional `V` absorbs them with `V ⊗ V` the sum of all four.
fn rep_q8() -> Result<FusionRing> {
    let labels = ["1", "a", "b", "ab", "V"].map(String::from).to_vec();
    FusionRing::from_rule("rep_q8", labels, |i, j, k| match (i, j) {
        (4, 4) => u32::from(k < 4),
        (4, _) | (_, 4) => u32::from(k == 4),
        _ => u32::from(i ^ j == k),
    })
}

fn fibonacci() -> Result<FusionRing> {
    let labels = ["1", "tau"].map(String::from).to_vec();
    FusionRing::from_rule("fibonacci", labels, |i, j, k| match (i, j) {
        (1, 1) => 1,
        _ => u32::from((i + j) % 2 == k),
    })
}

fn fibonacci_s() -> Vec<Vec<Complex64>> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let norm = (2.0 + phi).sqrt();
    real_matrix(&[vec![1.0, phi], vec![phi, -1.0]], norm)
}

fn ising() -> Result<FusionRing> {
    let labels = ["1", "psi", "sigma"].map(String::from).to_vec();
    FusionRing::from_rule("ising", labels, |i, j, k| match (i, j) {
        (2, 2) => u32::from(k < 2),
        (2, _) | (_, 2) => u32::from(k == 2),
        _ => u32::from(i ^ j == k),
    })
}

fn ising_s() -> Vec<Vec<Complex64>> {
    let r2 = 2f64.sqrt();
    real_matrix(&[vec![1.0, 1.0, r2], vec![1.0, 1.0, -r2], vec![r2, -r2, 0.0]], 2.0)
}

fn tambara_yamagami(n: usize) -> Result<FusionRing> {
    let mut labels: Vec<String> = (0..n).map(power_label).collect();
    labels.push("m".into());
    FusionRing::from_rule("tambara_yamagami", labels, |i, j, k| match (i == n, j == n) {
        (true, true) => u32::from(k < n),
        (true, false) | (false, true) => u32::from(k == n),
        (false, false) => u32::from(k < n && (i + j) % n == k),
    })
}

fn su2(k: usize) -> Result<FusionRing> {
    let labels = (0..=k).map(|i| i.to_string()).collect();
    FusionRing::from_rule(format!("su2_k({k})"), labels, |i, j, l| {
        let lo = i.abs_diff(j);
        let hi = (i + j).min(2 * k - i - j);
        u32::from(lo <= l && l <= hi && (i + j + l) % 2 == 0)
    })
}

fn su2_s(k: usize) -> Vec<Vec<Complex64>> {
    let m = (k + 2) as f64;
    let scale = (2.0 / m).sqrt();
    (0..=k)
        .map(|i| {
            (0..=k)
                .map(|j| Complex64::new(scale * (PI * ((i + 1) * (j + 1)) as f64 / m).sin(), 0.0))
                .collect()
        })
        .collect()
}

fn real_matrix(rows: &[Vec<f64>], divisor: f64) -> Vec<Vec<Complex64>> {
    rows.iter()
        .map(|row| row.iter().map(|&x| Complex64::new(x / divisor, 0.0)).collect())
        .collect()
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    name: String,
    rank: usize,
    labels: Vec<String>,
    unit: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dual: Option<Vec<usize>>,
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SMatrixFile {
    ring: String,
    #[serde(rename = "S")]
    s: Vec<Vec<[f64; 2]>>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn field_error(path: &Path, message: String) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line: 0,
        column: 0,
        message,
    }
}

/// Reads a ring file, moves the unit to index 0, recomputes the dual and
/// validates.
pub fn load_ring(path: impl AsRef<Path>) -> Result<FusionRing> {
    let path = path.as_ref();
    let file: RingFile = parse_json(path)?;
    let r = file.rank;
    if r == 0 {
        return Err(field_error(path, "field `rank`: must be positive".into()));
    }
    if file.labels.len() != r {
        return Err(field_error(
            path,
            format!("field `labels`: {} labels for rank {r}", file.labels.len()),
        ));
    }
    if file.unit >= r {
        return Err(field_error(path, format!("field `unit`: {} out of range", file.unit)));
    }
    let shape_ok = file.n.len() == r
        && file
            .n
            .iter()
            .all(|s| s.len() == r && s.iter().all(|row| row.len() == r));
    if !shape_ok {
        return Err(field_error(path, format!("field `N`: expected a {r}×{r}×{r} array")));
    }
    if let Some(d) = &file.dual {
        if d.len() != r || d.iter().any(|&x| x >= r) {
            return Err(field_error(
                path,
                format!("field `dual`: expected {r} indices below {r}"),
            ));
        }
    }

    // new index p is old index order[p]
    let order: Vec<usize> = std::iter::once(file.unit)
        .chain((0..r).filter(|&i| i != file.unit))
        .collect();
    let mut position = vec![0; r];
    for (p, &old) in order.iter().enumerate() {
        position[old] = p;
    }
    let labels: Vec<String> = order.iter().map(|&i| file.labels[i].clone()).collect();
    let n: Vec<Vec<Vec<u32>>> = order
        .iter()
        .map(|&i| {
            order
                .iter()
                .map(|&j| order.iter().map(|&k| file.n[i][j][k]).collect())
                .collect()
        })
        .collect();

    let dual = match dual_from_structure(&n, UNIT) {
        Ok(dual) => dual,
        Err(Error::NoDual(i) | Error::AmbiguousDual(i)) => {
            let ring = FusionRing::from_parts(file.name, labels, (0..r).collect(), &n)?;
            let mut violations = ring.validate().violations;
            if !violations.iter().any(|v| v.axiom == Axiom::Duality) {
                violations.push(Violation {
                    axiom: Axiom::Duality,
                    witness: vec![i],
                });
            }
            return Err(Error::ValidationFailed(ValidationReport::from_violations(violations)));
        }
        Err(e) => return Err(e),
    };
    if let Some(declared) = file.dual {
        let computed: Vec<usize> = (0..r).map(|old| order[dual[position[old]]]).collect();
        if declared != computed {
            return Err(Error::DualMismatch { declared, computed });
        }
    }
    let ring = FusionRing::from_parts(file.name, labels, dual, &n)?;
    let report = ring.validate();
    if !report.valid {
        return Err(Error::ValidationFailed(report));
    }
    Ok(ring)
}

/// Labels of a ring file in loaded order (unit first), without checking
/// the structure constants. Useful for reporting validation witnesses.
pub fn load_labels(path: impl AsRef<Path>) -> Result<Vec<String>> {
    let path = path.as_ref();
    let file: RingFile = parse_json(path)?;
    if file.unit >= file.labels.len() {
        return Err(field_error(path, format!("field `unit`: {} out of range", file.unit)));
    }
    let rest = (0..file.labels.len()).filter(|&i| i != file.unit);
    Ok(std::iter::once(file.unit)
        .chain(rest)
        .map(|i| file.labels[i].clone())
        .collect())
}

/// Writes `ring` with its dual; each `N[i][j]` row goes on its own line.
pub fn save_ring(ring: &FusionRing, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, ring_to_json(ring))?;
    Ok(())
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

pub fn ring_to_json(ring: &FusionRing) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"name\": {},", json(ring.name()));
    let _ = writeln!(out, "  \"rank\": {},", ring.rank());
    let _ = writeln!(out, "  \"labels\": {},", json(ring.labels()));
    let _ = writeln!(out, "  \"unit\": {UNIT},");
    let _ = writeln!(out, "  \"dual\": {},", json(ring.duals()));
    out.push_str("  \"N\": [\n");
    let tensor = ring.tensor();
    for (i, slice) in tensor.iter().enumerate() {
        out.push_str("    [\n");
        for (j, row) in slice.iter().enumerate() {
            let sep = if j + 1 < slice.len() { "," } else { "" };
            let _ = writeln!(out, "      {}{sep}", json(row));
        }
        let sep = if i + 1 < tensor.len() { "," } else { "" };
        let _ = writeln!(out, "    ]{sep}");
    }
    out.push_str("  ]\n}\n");
    out
}

/// Reads an S-matrix file and validates it against `ring`.
pub fn load_smatrix(path: impl AsRef<Path>, ring: &FusionRing, settings: &Settings) -> Result<ModularData> {
    let file: SMatrixFile = parse_json(path.as_ref())?;
    let s = file
        .s
        .iter()
        .map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
        .collect();
    ModularData::new(s, ring.clone(), settings)
}

pub fn save_smatrix(md: &ModularData, path: impl AsRef<Path>) -> Result<()> {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"ring\": {},", json(md.ring().name()));
    out.push_str("  \"S\": [\n");
    for (i, row) in md.s().iter().enumerate() {
        let pairs: Vec<[f64; 2]> = row.iter().map(|z| [z.re, z.im]).collect();
        let sep = if i + 1 < md.s().len() { "," } else { "" };
        let _ = writeln!(out, "    {}{sep}", json(&pairs));
    }
    out.push_str("  ]\n}\n");
    fs::write(path, out)?;
    Ok(())
}
