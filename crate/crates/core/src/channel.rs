//! Seeded channel simulation: erase and substitute symbols of a word.
//!
//! Randomness comes from SplitMix64 (Steele, Lea and Flood), so a given seed
//! produces the same corruption on every platform. Bounded draws use the
//! high half of a 64×64-bit product.

use crate::code::Word;
use crate::error::{Error, Result};

/// SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Value in `[0, bound)`; `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// Erases `erasures` positions and substitutes a different symbol at
/// `errors` other positions, all chosen by `seed`.
pub fn corrupt(word: &[u64], q: u64, erasures: usize, errors: usize, seed: u64) -> Result<Word> {
    let n = word.len();
    if erasures + errors > n {
        return Err(Error::param(
            "erasures",
            format!("{erasures} erasures plus {errors} errors exceed length {n}"),
        ));
    }
    if errors > 0 && q < 2 {
        return Err(Error::param("q", "substitutions need an alphabet of at least 2 symbols"));
    }
    if let Some(i) = word.iter().position(|&x| x >= q) {
        return Err(Error::SymbolOutOfRange {
            position: i + 1,
            value: word[i],
            max: q.saturating_sub(1),
        });
    }
    let mut rng = SplitMix64::new(seed);
    // Partial Fisher-Yates: the first erasures + errors slots are the picks.
    let mut order: Vec<usize> = (0..n).collect();
    for i in 0..erasures + errors {
        let j = i + rng.below((n - i) as u64) as usize;
        order.swap(i, j);
    }
    let mut symbols: Vec<Option<u64>> = word.iter().copied().map(Some).collect();
    for &p in &order[..erasures] {
        symbols[p] = None;
    }
    for &p in &order[erasures..erasures + errors] {
        let shift = 1 + rng.below(q - 1);
        symbols[p] = Some((word[p] + shift) % q);
    }
    Ok(Word::new(symbols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // Reference outputs for seed 0 of the published algorithm.
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xe220_a839_7b1d_cdaf);
        assert_eq!(r.next_u64(), 0x6e78_9e6a_a1b9_65f4);
    }

    #[test]
    fn no_corruption_is_identity() {
        let w = [1, 0, 0, 1, 1];
        assert_eq!(corrupt(&w, 2, 0, 0, 7).unwrap(), Word::from_symbols(&w));
    }

    #[test]
    fn erasures_only() {
        let w = [1, 0, 0, 1, 1];
        let out = corrupt(&w, 2, 2, 0, 3).unwrap();
        assert_eq!(out.erasures().len(), 2);
        for (i, s) in out.symbols().iter().enumerate() {
            if let Some(v) = s {
                assert_eq!(*v, w[i]);
            }
        }
    }

    #[test]
    fn errors_change_symbols() {
        let w = [0u64; 20];
        let out = corrupt(&w, 5, 3, 4, 11).unwrap();
        let symbols = out.symbols();
        assert_eq!(symbols.iter().filter(|s| s.is_none()).count(), 3);
        assert_eq!(symbols.iter().filter(|s| matches!(s, Some(v) if *v != 0)).count(), 4);
        assert!(symbols.iter().flatten().all(|&v| v < 5));
    }

    #[test]
    fn seed_42_is_stable() {
        let w = [1, 0, 0, 1, 1, 0, 1, 1, 0, 0];
        let a = corrupt(&w, 2, 2, 1, 42).unwrap();
        let b = corrupt(&w, 2, 2, 1, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), GOLDEN_SEED_42);
    }

    const GOLDEN_SEED_42: &str = "1,0,?,1,0,0,1,?,0,0";

    #[test]
    fn too_many_positions() {
        assert!(corrupt(&[0, 1, 0], 2, 2, 2, 1).is_err());
        assert!(corrupt(&[0, 2, 0], 2, 1, 0, 1).is_err());
    }
}
