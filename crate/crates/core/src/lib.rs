//! Invariants of fusion rings.
//!
//! A fusion ring is the Grothendieck ring of a fusion category: a based ring
//! with nonnegative integer structure constants, a unit basis element and a
//! duality involution. This crate computes the data attached to such a ring
//! and to its simple objects:
//!
//! * Frobenius-Perron dimensions, characters, formal codegrees and primitive
//!   idempotents ([`spectral`]);
//! * generated fusion subcategories and faithfulness ([`subcat`]);
//! * kernels and centers of objects, and the tensor-power generation check
//!   for objects with trivial kernel ([`kernel`]);
//! * the imprimitivity index, the order of an object and the universal
//!   cyclic grading of the subcategory it generates ([`grading`]);
//! * S-matrix characters, Verlinde reconstruction and (projective)
//!   centralizers for modular data ([`modular`]);
//! * ring-wide checks of the identities relating all of the above
//!   ([`checks`]);
//! * a catalog of built-in examples and JSON file formats ([`catalog`]).
//!
//! Basis index `0` is always the unit object.

pub mod catalog;
pub mod checks;
pub mod error;
pub mod grading;
pub mod kernel;
pub mod modular;
pub mod ring;
pub mod settings;
pub mod spectral;
pub mod subcat;

pub use catalog::{
    builtin, builtin_names, load_labels, load_ring, load_smatrix, save_ring, save_smatrix, CatalogEntry,
};
pub use error::{Error, Result};
pub use grading::{object_index, object_order, universal_grading, GradingData};
pub use kernel::{BrauerReport, KernelSet};
pub use modular::ModularData;
pub use ring::{Axiom, ClassVector, FusionRing, ValidationReport, Violation, UNIT};
pub use settings::Settings;
pub use spectral::{Character, CharacterTable, FpData, IdempotentSet};
pub use subcat::Subcategory;

pub use num_complex::Complex64;
