//! Nonlinear block codes defined by power-weighted checksums.
//!
//! The code `C_d(b)` collects the words `x ∈ [0, q−1]^n` whose plain
//! symbol sum is `b_0` modulo `(d−1)(q−1)+1` and whose power sums
//! `Σ i^j x_i` are `b_j` modulo a prime `ℓ ≥ max{n, q}` for `1 ≤ j ≤ d−2`.
//! Each coset has minimum distance at least `d` and the cosets partition
//! the space, so the largest one beats linear codes on redundancy for many
//! parameters.
//!
//! * [`code`]: parameters, checksums, membership and enumeration.
//! * [`erasure`]: recovery of up to `d−1` erasures.
//! * [`adversary`]: correction of up to `⌊(d−1)/2⌋` substitutions.
//! * [`bounds`]: redundancy bounds, length intervals and tables.
//! * [`oracle`]: exhaustive verification on small parameters.
//! * [`channel`]: seeded corruption for testing decoders.

pub mod adversary;
pub mod bounds;
pub mod channel;
pub mod code;
pub mod erasure;
pub mod error;
pub mod modarith;
pub mod oracle;

pub use adversary::{decode_errors, decode_single_error, ErrorVector};
pub use code::{
    best_offset_search, enumerate_codewords, is_codeword, syndrome_profile, CodeSpec, OffsetVector,
    SyndromeProfile, Word, DEFAULT_ENUMERATION_BUDGET,
};
pub use erasure::decode_erasures;
pub use error::{Error, Result};
