//! Erasure decoding for `C_d(b)`.
//!
//! Up to `d−1` erased symbols are recovered from the checksum offsets. The
//! plain symbol sum over the erased positions is known exactly as an
//! integer, because it lies in `[0, (d−1)(q−1)] = [0, M−1]`. The remaining
//! power sums are known modulo ℓ. Together they form a Vandermonde system
//! on the erased positions, solved over `Z_ℓ`.

use crate::code::{is_codeword, CodeSpec, OffsetVector, Word};
use crate::error::{Error, Result};
use crate::modarith::VandermondeSystem;

/// Sorted set of erased positions `k_1 < … < k_m`, 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErasurePattern(Vec<usize>);

impl ErasurePattern {
    pub fn new(spec: &CodeSpec, mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        positions.dedup();
        if let Some(&k) = positions.iter().find(|&&k| k == 0 || k > spec.n()) {
            return Err(Error::param(
                "erasures",
                format!("position {k} outside [1, {}]", spec.n()),
            ));
        }
        if positions.len() > spec.redundancy_len() {
            return Err(Error::TooManyErasures {
                count: positions.len(),
                max: spec.redundancy_len(),
            });
        }
        Ok(Self(positions))
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Fills in the erased positions of `word` so that it becomes a member of
/// `C_d(b)`.
///
/// Fails with [`Error::Inconsistent`] when no codeword of the coset agrees
/// with `word` on the non-erased positions.
pub fn decode_erasures(spec: &CodeSpec, word: &Word, b: &OffsetVector) -> Result<Vec<u64>> {
    spec.validate_received(word)?;
    let b = OffsetVector::new(spec, b.as_slice().to_vec())?;
    let pattern = ErasurePattern::new(spec, word.erasures())?;
    let f = spec.field();
    let r = spec.redundancy_len();
    let m = pattern.len();

    let mut out: Vec<u64> = word.symbols().iter().map(|s| s.unwrap_or(0)).collect();
    if m == 0 {
        return if is_codeword(spec, &out, &b) {
            Ok(out)
        } else {
            Err(Error::Inconsistent("word has no erasures and is not a codeword".into()))
        };
    }

    // Known contributions: plain sum (exact) and power sums mod ℓ.
    let mut known_sum = 0u64;
    let mut known = vec![0u64; r];
    for (i, s) in word.symbols().iter().enumerate() {
        let Some(x) = *s else { continue };
        if x == 0 {
            continue;
        }
        known_sum += x;
        let k = f.reduce(i as u64 + 1);
        let mut term = f.reduce(x);
        for c in known.iter_mut().skip(1) {
            term = f.mul(term, k);
            *c = f.add(*c, term);
        }
    }

    let big_m = spec.sum_modulus();
    // Σ_{i∈S} α_i as an integer in [0, M−1].
    let erased_sum = (b.as_slice()[0] + big_m - known_sum % big_m) % big_m;
    let mut c = vec![f.reduce(erased_sum)];
    c.extend((1..r).map(|j| f.sub(b.as_slice()[j], known[j])));

    let nodes: Vec<u64> = pattern.positions().iter().map(|&k| k as u64).collect();
    let system = VandermondeSystem::new(f, &nodes, &c[..m])?;
    let values = system.solve();

    // Equations beyond the first m must hold for the same values.
    for (j, &cj) in c.iter().enumerate().skip(m) {
        let lhs = system.nodes().iter().zip(&values).fold(0, |acc, (&k, &v)| {
            f.add(acc, f.mul(f.pow(k, j as u64), v))
        });
        if lhs != cj {
            return Err(Error::Inconsistent(format!(
                "moment equation j={j} is not satisfied by the recovered symbols"
            )));
        }
    }

    for (&k, &v) in pattern.positions().iter().zip(&values) {
        if v >= spec.q() {
            return Err(Error::Inconsistent(format!(
                "recovered symbol {v} at position {k} is outside the alphabet"
            )));
        }
        out[k - 1] = v;
    }
    if !is_codeword(spec, &out, &b) {
        return Err(Error::Inconsistent("recovered word is not a codeword".into()));
    }
    Ok(out)
}
