//! The checksum code family `C_d(b)`.
//!
//! A word `x ∈ [0, q−1]^n` belongs to `C_d(b)` when
//!
//! * `t_0(x) ≡ b_0 (mod M)` with `M = (d−1)(q−1)+1`, and
//! * `t_j(x) ≡ b_j (mod ℓ)` for `1 ≤ j ≤ d−2`,
//!
//! where `t_j(x) = Σ_{i=1}^n i^j x_i` (positions are 1-indexed) and ℓ is the
//! smallest prime with `ℓ ≥ max{n, q}`. Every such coset has minimum
//! distance at least `d`, and the cosets partition `[0, q−1]^n`.
//!
//! There is no systematic encoder. Desk-scale callers can use
//! [`encode_by_index`], which returns the `index`-th member of the coset in
//! lexicographic order by exhaustive enumeration.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modarith::{smallest_prime_geq, PrimeField, MAX_MODULUS};

/// Default limit on the number of words visited by exhaustive enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 24;

/// Parameters `(q, n, d)` of a code family together with the derived moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeSpec {
    q: u64,
    n: usize,
    d: usize,
    ell: PrimeField,
    sum_modulus: u64,
}

impl CodeSpec {
    pub fn new(q: u64, n: usize, d: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::param("q", format!("alphabet size {q} must be at least 2")));
        }
        if d < 3 {
            return Err(Error::param("d", format!("design distance {d} must be at least 3")));
        }
        if n < d {
            return Err(Error::param(
                "n",
                format!("length {n} must be at least the design distance {d}"),
            ));
        }
        let floor = q.max(n as u64);
        if floor >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(floor));
        }
        let ell = PrimeField::new(smallest_prime_geq(floor))?;
        let sum_modulus = (d as u64 - 1)
            .checked_mul(q - 1)
            .and_then(|v| v.checked_add(1))
            .ok_or_else(|| Error::param("d", "(d-1)(q-1)+1 overflows"))?;
        Ok(Self {
            q,
            n,
            d,
            ell,
            sum_modulus,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The prime ℓ.
    pub fn ell(&self) -> u64 {
        self.ell.modulus()
    }

    pub fn field(&self) -> PrimeField {
        self.ell
    }

    /// `M = (d−1)(q−1)+1`, the modulus of the plain symbol sum.
    pub fn sum_modulus(&self) -> u64 {
        self.sum_modulus
    }

    /// Error-correction radius `⌊(d−1)/2⌋`.
    pub fn tau(&self) -> usize {
        (self.d - 1) / 2
    }

    /// Number of checksum constraints, `d−1`.
    pub fn redundancy_len(&self) -> usize {
        self.d - 1
    }

    /// Number of distinct offset vectors, `M·ℓ^{d−2}`.
    pub fn offset_count(&self) -> BigUint {
        BigUint::from(self.sum_modulus) * BigUint::from(self.ell()).pow(self.d as u32 - 2)
    }

    /// `q^n`.
    pub fn space_size(&self) -> BigUint {
        BigUint::from(self.q).pow(self.n as u32)
    }

    pub fn validate_word(&self, word: &[u64]) -> Result<()> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        match word.iter().position(|&x| x >= self.q) {
            Some(i) => Err(Error::SymbolOutOfRange {
                position: i + 1,
                value: word[i],
                max: self.q - 1,
            }),
            None => Ok(()),
        }
    }

    pub fn validate_received(&self, word: &Word) -> Result<()> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        for (i, s) in word.symbols().iter().enumerate() {
            if let Some(v) = *s {
                if v >= self.q {
                    return Err(Error::SymbolOutOfRange {
                        position: i + 1,
                        value: v,
                        max: self.q - 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// Fails with [`Error::BudgetExceeded`] if `q^n > budget`.
    pub fn check_budget(&self, budget: u64) -> Result<u64> {
        let size = self.space_size();
        match u64::try_from(&size) {
            Ok(s) if s <= budget => Ok(s),
            _ => Err(Error::BudgetExceeded {
                required: size.to_string(),
                budget,
            }),
        }
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} n={} d={} ell={} M={}",
            self.q,
            self.n,
            self.d,
            self.ell(),
            self.sum_modulus
        )
    }
}

/// The offset `b = (b_0, …, b_{d−2})` selecting one coset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OffsetVector(Vec<u64>);

impl OffsetVector {
    pub fn new(spec: &CodeSpec, values: Vec<u64>) -> Result<Self> {
        if values.len() != spec.redundancy_len() {
            return Err(Error::param(
                "b",
                format!(
                    "offset has {} components, expected d-1 = {}",
                    values.len(),
                    spec.redundancy_len()
                ),
            ));
        }
        for (j, &v) in values.iter().enumerate() {
            let modulus = if j == 0 { spec.sum_modulus() } else { spec.ell() };
            if v >= modulus {
                return Err(Error::OffsetOutOfRange {
                    index: j,
                    value: v,
                    max: modulus - 1,
                });
            }
        }
        Ok(Self(values))
    }

    pub fn zero(spec: &CodeSpec) -> Self {
        Self(vec![0; spec.redundancy_len()])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// Parses `"b0,b1,..."` and validates it against `spec`.
    pub fn parse(spec: &CodeSpec, text: &str) -> Result<Self> {
        let values = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad offset component {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(spec, values)
    }

    fn from_index(spec: &CodeSpec, mut index: u64) -> Self {
        let ell = spec.ell();
        let mut v = vec![0; spec.redundancy_len()];
        for j in (1..v.len()).rev() {
            v[j] = index % ell;
            index /= ell;
        }
        v[0] = index;
        Self(v)
    }
}

impl fmt::Display for OffsetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.0.iter())
    }
}

/// Checksum residues `(t_0 mod M, t_1 mod ℓ, …, t_{d−2} mod ℓ)` of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SyndromeProfile(Vec<u64>);

impl SyndromeProfile {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// The coset this word belongs to.
    pub fn into_offset(self) -> OffsetVector {
        OffsetVector(self.0)
    }
}

impl PartialEq<OffsetVector> for SyndromeProfile {
    fn eq(&self, other: &OffsetVector) -> bool {
        self.0 == other.0
    }
}

/// A received word: each position holds a symbol or is erased.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<Option<u64>>);

impl Word {
    pub fn new(symbols: Vec<Option<u64>>) -> Self {
        Self(symbols)
    }

    pub fn from_symbols(symbols: &[u64]) -> Self {
        Self(symbols.iter().copied().map(Some).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Option<u64>] {
        &self.0
    }

    /// Erased positions, 1-indexed and increasing.
    pub fn erasures(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_none())
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn has_erasures(&self) -> bool {
        self.0.iter().any(Option::is_none)
    }

    /// The symbols of a word without erasures.
    pub fn to_full(&self) -> Result<Vec<u64>> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, s)| s.ok_or(Error::UnexpectedErasure { position: i + 1 }))
            .collect()
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Comma-separated decimal symbols, `?` for an erasure: `"1,?,0,1,1"`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        text.split(',')
            .map(|t| match t.trim() {
                "?" => Ok(None),
                t => t
                    .parse::<u64>()
                    .map(Some)
                    .map_err(|_| Error::Parse(format!("bad symbol {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match s {
                Some(v) => write!(f, "{v}")?,
                None => f.write_str("?")?,
            }
        }
        Ok(())
    }
}

/// Formats a fully specified word in the shared text format.
pub fn format_symbols(word: &[u64]) -> String {
    struct Joined<'a>(&'a [u64]);
    impl fmt::Display for Joined<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_joined(f, self.0.iter())
        }
    }
    Joined(word).to_string()
}

fn write_joined<'a>(f: &mut fmt::Formatter<'_>, it: impl Iterator<Item = &'a u64>) -> fmt::Result {
    for (i, v) in it.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// The exact integer `t_j(x) = Σ_{i=1}^n i^j x_i`.
pub fn checksum(word: &[u64], j: u32) -> BigUint {
    word.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| BigUint::from(i as u64 + 1).pow(j) * x)
        .sum()
}

/// Checksum residues of `word`. The word must be alphabet-valid for `spec`.
pub fn syndrome_profile(spec: &CodeSpec, word: &[u64]) -> SyndromeProfile {
    let f = spec.field();
    let r = spec.redundancy_len();
    let mut out = vec![0u64; r];
    let mut sum = 0u64;
    for (i, &x) in word.iter().enumerate() {
        if x == 0 {
            continue;
        }
        sum += x;
        let k = f.reduce(i as u64 + 1);
        let mut term = f.reduce(x);
        for s in out.iter_mut().skip(1) {
            term = f.mul(term, k);
            *s = f.add(*s, term);
        }
    }
    out[0] = sum % spec.sum_modulus();
    SyndromeProfile(out)
}

/// Membership test for `C_d(b)`.
pub fn is_codeword(spec: &CodeSpec, word: &[u64], b: &OffsetVector) -> bool {
    spec.validate_word(word).is_ok() && syndrome_profile(spec, word) == *b
}

/// Odometer over `[0, q−1]^n` in lexicographic order that keeps the checksum
/// residues of the current word up to date.
struct WordWalker<'a> {
    spec: &'a CodeSpec,
    word: Vec<u64>,
    profile: Vec<u64>,
    // step[i][j] = (i+1)^j mod ℓ, wrap[i][j] = (q−1)(i+1)^j mod ℓ
    step: Vec<Vec<u64>>,
    wrap: Vec<Vec<u64>>,
    started: bool,
}

impl<'a> WordWalker<'a> {
    fn new(spec: &'a CodeSpec) -> Self {
        let f = spec.field();
        let r = spec.redundancy_len();
        let step: Vec<Vec<u64>> = (1..=spec.n() as u64)
            .map(|k| (0..r).map(|j| f.pow(k, j as u64)).collect())
            .collect();
        let q1 = f.reduce(spec.q() - 1);
        let wrap = step
            .iter()
            .map(|row| row.iter().map(|&p| f.mul(p, q1)).collect())
            .collect();
        Self {
            spec,
            word: vec![0; spec.n()],
            profile: vec![0; r],
            step,
            wrap,
            started: false,
        }
    }

    /// Dense offset index, ordered lexicographically by `b`.
    fn index(&self) -> u64 {
        let ell = self.spec.ell();
        self.profile
            .iter()
            .skip(1)
            .fold(self.profile[0], |acc, &s| acc * ell + s)
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        let f = self.spec.field();
        let m = self.spec.sum_modulus();
        let q1 = self.spec.q() - 1;
        for pos in (0..self.word.len()).rev() {
            if self.word[pos] < q1 {
                self.word[pos] += 1;
                self.profile[0] = (self.profile[0] + 1) % m;
                for j in 1..self.profile.len() {
                    self.profile[j] = f.add(self.profile[j], self.step[pos][j]);
                }
                return true;
            }
            self.word[pos] = 0;
            self.profile[0] = (self.profile[0] + m - q1 % m) % m;
            for j in 1..self.profile.len() {
                self.profile[j] = f.sub(self.profile[j], self.wrap[pos][j]);
            }
        }
        false
    }
}

/// All members of `C_d(b)` in lexicographic order.
pub fn enumerate_codewords(spec: &CodeSpec, b: &OffsetVector, budget: u64) -> Result<Vec<Vec<u64>>> {
    let b = OffsetVector::new(spec, b.as_slice().to_vec())?;
    spec.check_budget(budget)?;
    let mut walker = WordWalker::new(spec);
    let mut out = Vec::new();
    while walker.advance() {
        if walker.profile == b.0 {
            out.push(walker.word.clone());
        }
    }
    Ok(out)
}

/// The `index`-th member of `C_d(b)` in lexicographic order, if any.
pub fn encode_by_index(
    spec: &CodeSpec,
    b: &OffsetVector,
    index: u64,
    budget: u64,
) -> Result<Option<Vec<u64>>> {
    let b = OffsetVector::new(spec, b.as_slice().to_vec())?;
    spec.check_budget(budget)?;
    let mut walker = WordWalker::new(spec);
    let mut seen = 0u64;
    while walker.advance() {
        if walker.profile == b.0 {
            if seen == index {
                return Ok(Some(walker.word.clone()));
            }
            seen += 1;
        }
    }
    Ok(None)
}

/// Size of every coset, indexed densely in lexicographic order of `b`.
pub fn coset_sizes(spec: &CodeSpec, budget: u64) -> Result<Vec<u64>> {
    spec.check_budget(budget)?;
    let offsets = spec.offset_count();
    let count = match u64::try_from(&offsets) {
        Ok(c) if c <= budget => c as usize,
        _ => {
            return Err(Error::BudgetExceeded {
                required: offsets.to_string(),
                budget,
            })
        }
    };
    let mut sizes = vec![0u64; count];
    let mut walker = WordWalker::new(spec);
    while walker.advance() {
        sizes[walker.index() as usize] += 1;
    }
    Ok(sizes)
}

/// The offset with the largest coset (lexicographically smallest on ties)
/// and that coset's size.
pub fn best_offset_search(spec: &CodeSpec, budget: u64) -> Result<(OffsetVector, u64)> {
    let sizes = coset_sizes(spec, budget)?;
    let (idx, &size) = sizes
        .iter()
        .enumerate()
        .fold((0, &0), |best, cur| if cur.1 > best.1 { cur } else { best });
    Ok((OffsetVector::from_index(spec, idx as u64), size))
}
