//! Perfect shuffles as permutations.
//!
//! * [`perm`]: permutation arithmetic, orders and orbits (the brute-force layer).
//! * [`shuffle`]: placement maps for in/out-shuffles, Monge shuffles, odd decks
//!   and `k`-packet shuffles.
//! * [`modular`]: multiplicative orders and semi-orders.
//! * [`periods`]: periods from congruences and closed forms, plus the half-deck period.
//! * [`binary`]: bitwise closed forms for iterates on power-of-two decks.
//! * [`plan`]: in/out sequences that carry a card to a chosen position.

pub mod binary;
pub mod error;
pub mod modular;
pub mod periods;
pub mod perm;
pub mod plan;
pub mod shuffle;

pub use binary::{
    block_decompose, in_iterate_pow2, in_iterate_pow2m2, monge_zero_iterate, BlockDecomposition,
    MongeVariant,
};
pub use error::{Error, Result};
pub use modular::{euler_phi, gcd, multiplicative_order, semi_order, SemiOrder, Sign};
pub use periods::{color_period, corollary_period, shuffle_period, CorollaryKind};
pub use perm::{OrbitDecomposition, Permutation};
pub use plan::{
    boundary_plan, elmsley_plan, single_shuffle_shortcut, track_plan, BoundaryRole, DeckTracker,
    Move, ShufflePlan, Track,
};
pub use shuffle::{build, classical_permutation, symmetry, Convention, Family, ShuffleSpec};
