//! Report types shared by the text and JSON renderers. Field names are the
//! JSON schema; simples and characters are always referred to by name.

use std::collections::BTreeSet;

use fusionkit_core::checks::{all_passed, modular_checks, spectral_checks, theorem_checks, Check};
use fusionkit_core::grading::CharacterCheck;
use fusionkit_core::kernel::{center_of_class, kernel_of_class, verify_brauer};
use fusionkit_core::modular::{centralizer, invertibles, projective_centralizer, verlinde_ring};
use fusionkit_core::spectral::{character_table, fp_character, is_commutative};
use fusionkit_core::subcat::is_faithful;
use fusionkit_core::{
    universal_grading, CharacterTable, Error, FpData, FusionRing, GradingData, KernelSet, ModularData, Settings,
    ValidationReport,
};
use serde::{Deserialize, Serialize};

/// Complex numbers are written as `[re, im]`.
pub type ComplexPair = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingSummary {
    pub name: String,
    pub rank: usize,
    pub labels: Vec<String>,
    pub duals: Vec<String>,
    pub commutative: bool,
    pub fp_dims: Vec<f64>,
    pub global_dim: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub name: String,
    pub codegree: f64,
    /// Values on the simples, in the order of `RingSummary::labels`.
    pub values: Vec<ComplexPair>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimpleReport {
    pub label: String,
    pub dual: String,
    pub fp_dim: f64,
    pub faithful: bool,
    /// Characters taking the value FPdim on this simple.
    pub kernel: Option<Vec<String>>,
    /// Characters whose modulus on this simple is FPdim.
    pub center: Option<Vec<String>>,
    pub index: usize,
    pub order: usize,
    pub grading: Vec<Vec<String>>,
    pub grading_cross_check: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub ring: RingSummary,
    pub simples: Vec<SimpleReport>,
    pub characters: Option<Vec<CharacterReport>>,
    pub checks: Vec<CheckReport>,
    pub notices: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub axiom: String,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationOutput {
    pub ring: String,
    pub valid: bool,
    pub violations: Vec<ViolationReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharactersOutput {
    pub ring: String,
    pub labels: Vec<String>,
    pub characters: Vec<CharacterReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelOutput {
    pub ring: String,
    pub object: String,
    pub faithful: bool,
    pub kernel: Vec<String>,
    pub center: Vec<String>,
    pub trivial_kernel: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GradeEntry {
    pub label: String,
    pub grade: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GradingOutput {
    pub ring: String,
    pub object: String,
    pub index: usize,
    pub order: usize,
    pub grades: Vec<GradeEntry>,
    pub components: Vec<Vec<String>>,
    pub cross_check: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExponentEntry {
    pub label: String,
    pub exponent: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BrauerOutput {
    pub ring: String,
    pub object: String,
    pub cap: usize,
    pub trivial_kernel: bool,
    pub all_found: bool,
    pub exponents: Vec<ExponentEntry>,
    pub missing: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralizerEntry {
    pub object: String,
    pub faithful: bool,
    pub centralizer: Vec<String>,
    pub projective_centralizer: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModularOutput {
    pub ring: String,
    pub global_dim: f64,
    pub verlinde_roundtrip: bool,
    pub invertibles: Vec<String>,
    pub centralizers: Vec<CentralizerEntry>,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BuiltinEntry {
    pub name: String,
    pub rank: usize,
    pub modular: bool,
    pub notes: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub ring: String,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Output {
    Validation(ValidationOutput),
    Analysis(Box<AnalysisReport>),
    Characters(CharactersOutput),
    Kernel(KernelOutput),
    Grading(GradingOutput),
    Brauer(BrauerOutput),
    Modular(ModularOutput),
    Builtins(Vec<BuiltinEntry>),
    Error(ErrorOutput),
}

/// Errors of a single ring's pipeline.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    UnknownObject(String),
    NoModularData(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn kind(&self) -> &'static str {
        match self {
            Failure::UnknownObject(_) => "UnknownObject",
            Failure::NoModularData(_) => "NoModularData",
            Failure::Core(e) => match e {
                Error::DimensionMismatch { .. } => "DimensionMismatch",
                Error::InvalidLabels(_) => "InvalidLabels",
                Error::InvalidDualTable(_) => "InvalidDualTable",
                Error::NoDual(_) => "NoDual",
                Error::AmbiguousDual(_) => "AmbiguousDual",
                Error::LengthMismatch { .. } => "LengthMismatch",
                Error::Overflow => "Overflow",
                Error::ValidationFailed(_) => "ValidationFailed",
                Error::InvalidRing(_) => "InvalidRing",
                Error::ConvergenceFailure(_) => "ConvergenceFailure",
                Error::NonCommutative => "NonCommutative",
                Error::DegenerateCombination(_) => "DegenerateCombination",
                Error::SingularCharacterMatrix => "SingularCharacterMatrix",
                Error::NotClosed(_) => "NotClosed",
                Error::ClosureViolation { .. } => "ClosureViolation",
                Error::ZeroClass => "ZeroClass",
                Error::NegativeClass => "NegativeClass",
                Error::CapExceeded { .. } => "CapExceeded",
                Error::TheoremViolation(_) => "TheoremViolation",
                Error::InternalInconsistency(_) => "InternalInconsistency",
                Error::MethodDisagreement { .. } => "MethodDisagreement",
                Error::ZeroEntry(_) => "ZeroEntry",
                Error::NonIntegral { .. } => "NonIntegral",
                Error::InvariantFailed(_) => "InvariantFailed",
                Error::VerlindeMismatch(_) => "VerlindeMismatch",
                Error::UnknownName(_) => "UnknownName",
                Error::Parse { .. } => "Parse",
                Error::DualMismatch { .. } => "DualMismatch",
                Error::Io(_) => "Io",
            },
        }
    }

    /// 2 for bad input (names, paths, syntax), 1 for everything the
    /// mathematics rejects.
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::UnknownObject(_) | Failure::NoModularData(_) => 2,
            Failure::Core(Error::UnknownName(_) | Error::Parse { .. } | Error::Io(_)) => 2,
            Failure::Core(_) => 1,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::UnknownObject(l) => format!("no simple object labelled {l:?}"),
            Failure::NoModularData(r) => format!("{r} has no built-in modular data; pass --smatrix"),
        }
    }
}

impl Output {
    pub fn exit_code(&self) -> u8 {
        match self {
            Output::Validation(v) => u8::from(!v.valid),
            Output::Analysis(a) => u8::from(!a.passed),
            Output::Modular(m) => u8::from(!m.passed),
            Output::Error(_) => 1,
            _ => 0,
        }
    }
}

pub fn character_name(t: usize) -> String {
    format!("chi_{t}")
}

fn names(set: &KernelSet) -> Vec<String> {
    set.character_indices.iter().map(|&t| character_name(t)).collect()
}

fn labels(ring: &FusionRing, idx: impl IntoIterator<Item = usize>) -> Vec<String> {
    idx.into_iter().map(|j| ring.label(j).to_string()).collect()
}

fn pair(z: fusionkit_core::Complex64) -> ComplexPair {
    [z.re, z.im]
}

pub fn object(ring: &FusionRing, label: &str) -> Result<usize, Failure> {
    ring.index_of(label)
        .ok_or_else(|| Failure::UnknownObject(label.to_string()))
}

fn checks(list: Vec<Check>) -> Vec<CheckReport> {
    list.into_iter()
        .map(|c| CheckReport {
            name: c.name.to_string(),
            passed: c.passed,
            detail: c.detail,
        })
        .collect()
}

fn cross_check(g: &GradingData) -> String {
    match g.character_check {
        CharacterCheck::Agreed => "agreed".into(),
        CharacterCheck::Skipped => "skipped".into(),
    }
}

pub fn validation(ring_name: &str, labels_of: &[String], report: &ValidationReport) -> ValidationOutput {
    ValidationOutput {
        ring: ring_name.to_string(),
        valid: report.valid,
        violations: report
            .violations
            .iter()
            .map(|v| ViolationReport {
                axiom: v.axiom.as_str().to_string(),
                witness: v
                    .witness
                    .iter()
                    .map(|&i| labels_of.get(i).cloned().unwrap_or_else(|| i.to_string()))
                    .collect(),
            })
            .collect(),
    }
}

fn summary(ring: &FusionRing, fp: &FpData) -> RingSummary {
    RingSummary {
        name: ring.name().to_string(),
        rank: ring.rank(),
        labels: ring.labels().to_vec(),
        duals: labels(ring, ring.duals().iter().copied()),
        commutative: is_commutative(ring),
        fp_dims: fp.dims.clone(),
        global_dim: fp.global,
    }
}

fn table_report(table: &CharacterTable) -> Vec<CharacterReport> {
    table
        .characters()
        .iter()
        .zip(table.codegrees())
        .enumerate()
        .map(|(t, (ch, &f))| CharacterReport {
            name: character_name(t),
            codegree: f,
            values: ch.values().iter().copied().map(pair).collect(),
        })
        .collect()
}

pub fn characters(ring: &FusionRing, settings: &Settings) -> Result<CharactersOutput, Failure> {
    let table = character_table(ring, settings)?;
    Ok(CharactersOutput {
        ring: ring.name().to_string(),
        labels: ring.labels().to_vec(),
        characters: table_report(&table),
    })
}

pub fn analyze(
    ring: &FusionRing,
    modular: Option<&ModularData>,
    verify: bool,
    settings: &Settings,
) -> Result<AnalysisReport, Failure> {
    let eps = settings.epsilon;
    let fp = fp_character(ring)?;
    let mut notices = Vec::new();
    let table = match character_table(ring, settings) {
        Ok(t) => Some(t),
        Err(Error::NonCommutative) => {
            notices.push("ring is not commutative: characters, kernels, centers and checks are omitted".into());
            None
        }
        Err(e) => return Err(e.into()),
    };

    let mut simples = Vec::with_capacity(ring.rank());
    for i in 0..ring.rank() {
        let (kernel, center) = match &table {
            Some(table) => {
                let e = ring.basis(i);
                (
                    Some(names(&kernel_of_class(ring, &fp, table, &e, eps)?)),
                    Some(names(&center_of_class(ring, &fp, table, &e, eps)?)),
                )
            }
            None => (None, None),
        };
        let g = universal_grading(ring, i, settings)?;
        simples.push(SimpleReport {
            label: ring.label(i).to_string(),
            dual: ring.label(ring.dual(i)).to_string(),
            fp_dim: fp.dims[i],
            faithful: is_faithful(ring, i),
            kernel,
            center,
            index: g.index,
            order: g.order,
            grading: g.components.iter().map(|c| labels(ring, c.iter().copied())).collect(),
            grading_cross_check: cross_check(&g),
        });
    }

    let mut check_list = Vec::new();
    if verify {
        if let Some(table) = &table {
            check_list.extend(theorem_checks(ring, &fp, table, settings));
            check_list.extend(spectral_checks(ring, &fp, table, settings));
            if let Some(md) = modular {
                check_list.extend(modular_checks(md, settings));
            }
        }
    } else {
        notices.push("checks skipped (--no-verify)".into());
    }
    let passed = table.is_some() && all_passed(&check_list);
    Ok(AnalysisReport {
        ring: summary(ring, &fp),
        simples,
        characters: table.as_ref().map(table_report),
        checks: checks(check_list),
        notices,
        passed,
    })
}

pub fn kernel(ring: &FusionRing, label: &str, settings: &Settings) -> Result<KernelOutput, Failure> {
    let i = object(ring, label)?;
    let fp = fp_character(ring)?;
    let table = character_table(ring, settings)?;
    let e = ring.basis(i);
    let k = kernel_of_class(ring, &fp, &table, &e, settings.epsilon)?;
    let z = center_of_class(ring, &fp, &table, &e, settings.epsilon)?;
    Ok(KernelOutput {
        ring: ring.name().to_string(),
        object: label.to_string(),
        faithful: is_faithful(ring, i),
        trivial_kernel: k.is_trivial(&table),
        kernel: names(&k),
        center: names(&z),
    })
}

pub fn grading(ring: &FusionRing, label: &str, settings: &Settings) -> Result<GradingOutput, Failure> {
    let i = object(ring, label)?;
    let g = universal_grading(ring, i, settings)?;
    Ok(GradingOutput {
        ring: ring.name().to_string(),
        object: label.to_string(),
        index: g.index,
        order: g.order,
        grades: g
            .grades
            .iter()
            .map(|(&j, &a)| GradeEntry {
                label: ring.label(j).to_string(),
                grade: a,
            })
            .collect(),
        components: g.components.iter().map(|c| labels(ring, c.iter().copied())).collect(),
        cross_check: cross_check(&g),
    })
}

pub fn brauer(
    ring: &FusionRing,
    label: &str,
    cap: Option<usize>,
    settings: &Settings,
) -> Result<BrauerOutput, Failure> {
    let i = object(ring, label)?;
    let fp = fp_character(ring)?;
    let table = character_table(ring, settings)?;
    let report = verify_brauer(ring, &fp, &table, i, cap, settings.epsilon)?;
    let mut exponents: Vec<(usize, usize)> = report.exponents.iter().map(|(&k, &n)| (k, n)).collect();
    exponents.sort_by_key(|&(k, n)| (n, k));
    Ok(BrauerOutput {
        ring: ring.name().to_string(),
        object: label.to_string(),
        cap: report.cap_used,
        trivial_kernel: report.faithful_expected,
        all_found: report.all_found(ring),
        exponents: exponents
            .into_iter()
            .map(|(k, n)| ExponentEntry {
                label: ring.label(k).to_string(),
                exponent: n,
            })
            .collect(),
        missing: labels(ring, (0..ring.rank()).filter(|k| !report.exponents.contains_key(k))),
    })
}

pub fn modular(md: &ModularData, settings: &Settings) -> Result<ModularOutput, Failure> {
    let ring = md.ring();
    let eps = settings.epsilon;
    let inv: BTreeSet<usize> = invertibles(ring, md.fp(), eps)?;
    let mut centralizers = Vec::with_capacity(ring.rank());
    for i in 0..ring.rank() {
        centralizers.push(CentralizerEntry {
            object: ring.label(i).to_string(),
            faithful: is_faithful(ring, i),
            centralizer: labels(ring, centralizer(md, i, settings)?.indices()),
            projective_centralizer: labels(ring, projective_centralizer(md, i, eps)),
        });
    }
    let verlinde_roundtrip = verlinde_ring(md.s()).is_ok_and(|r| r.same_structure(ring));
    let check_list = modular_checks(md, settings);
    let passed = verlinde_roundtrip && all_passed(&check_list);
    Ok(ModularOutput {
        ring: ring.name().to_string(),
        global_dim: md.global_dim(),
        verlinde_roundtrip,
        invertibles: labels(ring, inv),
        centralizers,
        checks: checks(check_list),
        passed,
    })
}
