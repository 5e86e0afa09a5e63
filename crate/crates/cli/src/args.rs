use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fusionkit",
    version,
    about = "Invariants and structural checks for fusion rings"
)]
pub struct Cli {
    /// Built-in name (see `list-builtins`) or path to a ring JSON file; repeat for batch runs.
    #[arg(long = "ring", global = true, value_name = "NAME|PATH")]
    pub rings: Vec<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Tolerance for comparing individual character values.
    #[arg(long, global = true, value_name = "FLOAT")]
    pub epsilon: Option<f64>,

    /// Seed of the random combination used to diagonalize the ring.
    #[arg(long, global = true, value_name = "INT")]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the based-ring axioms.
    Validate,
    /// Full report: dimensions, characters, kernels, gradings and checks.
    Analyze {
        /// Skip the structural checks.
        #[arg(long)]
        no_verify: bool,
    },
    /// Character table and formal codegrees.
    Characters,
    /// Kernel and center of a simple object.
    Kernel {
        #[arg(long, value_name = "LABEL")]
        object: String,
    },
    /// Index, order and universal grading of the subcategory generated by an object.
    Grading {
        #[arg(long, value_name = "LABEL")]
        object: String,
    },
    /// Least tensor power in which each simple occurs.
    Brauer {
        #[arg(long, value_name = "LABEL")]
        object: String,
        /// Highest tensor power searched.
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
    },
    /// Centralizers, projective centralizers and invertibles from an S-matrix.
    Modular {
        /// S-matrix file; defaults to the built-in modular data of the ring.
        #[arg(long, value_name = "PATH")]
        smatrix: Option<PathBuf>,
    },
    /// Names accepted by `--ring`.
    ListBuiltins,
}
