//! Numerical tolerances shared by constructors, tests and the verification harness.

/// Admission tolerance for user-supplied group elements and S³ points.
pub const ADMISSION: f64 = 1e-9;

/// Algebraic identities (dyad relations, metric reconstruction, orthonormality).
pub const IDENTITY: f64 = 1e-12;

/// Agreement between truncated-Fock expectations and their classical values.
pub const CLASSICAL_LIMIT: f64 = 1e-6;

/// Largest norm a coherent state may lose to the total-quanta cutoff.
pub const TRUNCATION_DEFICIT: f64 = 1e-8;
