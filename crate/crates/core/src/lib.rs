//! Exact computations around the lattice-point proof of quadratic
//! reciprocity: three Legendre-symbol routes, the rectangle of lattice points
//! and its Klein four symmetry group, the residue involution `x ↦ p - x`,
//! and an exhaustive checker for the assertions the proof relies on.

pub mod arith;
pub mod claims;
pub mod error;
pub mod gauss_lemma;
pub mod lattice;
pub mod symmetry;

pub use arith::{
    euclid_step, half_system, is_odd_prime, legendre_euler, odd_primes_below, EuclideanStep,
    HalfSystem, LegendreValue, OddPrime, PrimePair, Sign, MAX_INPUT,
};
pub use claims::{
    find_counterexample, prime_pairs_below, registry, sweep, verify_claim, ClaimForm, ClaimId,
    ClaimInfo, ClaimOutcome, ClaimSelector, ClaimSummary, Counterexample, SweepConfig, SweepReport,
    VerdictRow, Witness, DEFAULT_COUNTEREXAMPLE_LIMIT,
};
pub use error::{Error, Result};
pub use gauss_lemma::{
    count_large_residues, epsilon_product_full, epsilon_product_half, legendre_gauss,
    residue_table, GaussCount, ResidueTable,
};
pub use lattice::{
    classify_points, floor_sum, legendre_eisenstein, partition_counts, LatticePoint, LatticeRect,
    PartitionCounts, Side, DEFAULT_ENUMERATION_CAP,
};
pub use symmetry::{
    apply, fixed_points, orbits, side_flip_violations, CentralPair, FixedPointReport, Orbit,
    SymmetryMap,
};
