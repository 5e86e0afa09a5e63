//! Numerical tolerances and the seed used for simultaneous diagonalization.

/// Seed of the random linear combination diagonalized by
/// [`character_table`](crate::spectral::character_table).
pub const DEFAULT_SEED: u64 = 20_140_301;

/// Retries (with `seed + 1`, `seed + 2`, ...) after an eigenvalue collision.
pub const MAX_SEED_RETRIES: u64 = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    /// Equality of individual complex scalars (kernel and center membership).
    pub epsilon: f64,
    /// Aggregate identities: orthogonality sums, codegree sums, S-matrix checks.
    pub aggregate_epsilon: f64,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            epsilon: 1e-9,
            aggregate_epsilon: 1e-8,
            seed: DEFAULT_SEED,
        }
    }
}

impl Settings {
    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}
