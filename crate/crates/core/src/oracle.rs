//! Brute-force verifiers for small parameters.
//!
//! Membership is recomputed here from the checksum definition over plain
//! integers, independently of the incremental residue code in
//! [`crate::code`]. Decoder checks compare against planted codewords only.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::adversary::{decode_errors, decode_single_error};
use crate::code::{coset_sizes, format_symbols, CodeSpec, OffsetVector, Word};
use crate::erasure::decode_erasures;
use crate::error::{Error, Result};

/// Outcome of one exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: String,
    pub property: String,
    pub instances: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {} ({} instances)",
            self.property,
            self.spec,
            if self.passed { "PASS" } else { "FAIL" },
            self.instances
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "; counterexample: {c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecodeMode {
    Erasure,
    SingleError,
    MultiError,
}

impl fmt::Display for DecodeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecodeMode::Erasure => "erasure",
            DecodeMode::SingleError => "single-error",
            DecodeMode::MultiError => "multi-error",
        })
    }
}

/// All words of `[0, q−1]^n` in lexicographic order.
fn all_words(q: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let mut next = Some(vec![0u64; n]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut w = cur.clone();
        for pos in (0..n).rev() {
            if w[pos] + 1 < q {
                w[pos] += 1;
                next = Some(w);
                break;
            }
            w[pos] = 0;
        }
        Some(cur)
    })
}

/// Checksum residues straight from `t_j = Σ i^j x_i` over `u128`.
fn direct_profile(spec: &CodeSpec, word: &[u64]) -> Vec<u64> {
    (0..spec.redundancy_len())
        .map(|j| {
            let t: u128 = word
                .iter()
                .enumerate()
                .map(|(i, &x)| (i as u128 + 1).pow(j as u32) * x as u128)
                .sum();
            let modulus = if j == 0 { spec.sum_modulus() } else { spec.ell() };
            (t % modulus as u128) as u64
        })
        .collect()
}

fn brute_coset(spec: &CodeSpec, b: &OffsetVector, budget: u64) -> Result<Vec<Vec<u64>>> {
    spec.check_budget(budget)?;
    let b = OffsetVector::new(spec, b.as_slice().to_vec())?;
    Ok(all_words(spec.q(), spec.n())
        .filter(|w| direct_profile(spec, w) == b.as_slice())
        .collect())
}

fn hamming(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Exact minimum distance of `C_d(b)`; `None` when it has fewer than two
/// members.
pub fn exact_min_distance(spec: &CodeSpec, b: &OffsetVector, budget: u64) -> Result<Option<usize>> {
    let coset = brute_coset(spec, b, budget)?;
    let mut best: Option<usize> = None;
    for (i, u) in coset.iter().enumerate() {
        for v in &coset[i + 1..] {
            let dist = hamming(u, v);
            best = Some(best.map_or(dist, |b| b.min(dist)));
        }
    }
    Ok(best)
}

/// Checks that every word has exactly one checksum profile within the
/// offset ranges, that the coset sizes add up to `q^n`, and that the
/// library's coset counts agree with the brute-force tally.
pub fn partition_check(spec: &CodeSpec, budget: u64) -> Result<VerificationReport> {
    let total = spec.check_budget(budget)?;
    let mut tally: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    let mut counterexample = None;
    let mut instances = 0u64;
    for w in all_words(spec.q(), spec.n()) {
        instances += 1;
        let p = direct_profile(spec, &w);
        if OffsetVector::new(spec, p.clone()).is_err() {
            counterexample.get_or_insert_with(|| {
                format!("word {} has out-of-range profile {:?}", format_symbols(&w), p)
            });
        }
        *tally.entry(p).or_default() += 1;
    }
    let sum: u64 = tally.values().sum();
    if counterexample.is_none() && sum != total {
        counterexample = Some(format!("coset sizes sum to {sum}, expected {total}"));
    }
    if counterexample.is_none() {
        let sizes = coset_sizes(spec, budget)?;
        let ell = spec.ell();
        for (idx, &size) in sizes.iter().enumerate() {
            let mut rest = idx as u64;
            let mut b = vec![0u64; spec.redundancy_len()];
            for j in (1..b.len()).rev() {
                b[j] = rest % ell;
                rest /= ell;
            }
            b[0] = rest;
            let expect = tally.get(&b).copied().unwrap_or(0);
            if size != expect {
                counterexample = Some(format!(
                    "coset b={} has {size} members by enumeration, {expect} by brute force",
                    format_symbols(&b)
                ));
                break;
            }
        }
    }
    Ok(VerificationReport {
        spec: spec.to_string(),
        property: "partition".into(),
        instances,
        passed: counterexample.is_none(),
        counterexample,
    })
}

/// Calls `f` with every subset of `0..n` of size `k`, in lexicographic order.
/// Stops early when `f` returns `false`.
fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            if !rec(i + 1, n, k, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}

/// Calls `f` with every assignment of a replacement symbol different from
/// `word[p]` to each position `p` in `positions`.
fn for_each_substitution(
    word: &[u64],
    q: u64,
    positions: &[usize],
    f: &mut impl FnMut(&[u64]) -> bool,
) -> bool {
    fn rec(
        idx: usize,
        positions: &[usize],
        q: u64,
        base: &[u64],
        cur: &mut Vec<u64>,
        f: &mut impl FnMut(&[u64]) -> bool,
    ) -> bool {
        if idx == positions.len() {
            return f(cur);
        }
        let p = positions[idx];
        for v in 0..q {
            if v == base[p] {
                continue;
            }
            cur[p] = v;
            if !rec(idx + 1, positions, q, base, cur, f) {
                return false;
            }
        }
        cur[p] = base[p];
        true
    }
    let mut cur = word.to_vec();
    rec(0, positions, q, word, &mut cur, f)
}

fn describe(result: &Result<Vec<u64>>) -> String {
    match result {
        Ok(w) => format_symbols(w),
        Err(e) => e.to_string(),
    }
}

/// Decodes every codeword under every erasure set of size `1..=d−1`
/// (erasure mode) or every substitution pattern of weight `1..=τ` (error
/// modes) and checks that the planted codeword comes back.
///
/// With `b = None` every coset is covered, i.e. every word of the space
/// acts as a codeword of its own coset.
pub fn exhaustive_decode_check(
    spec: &CodeSpec,
    b: Option<&OffsetVector>,
    mode: DecodeMode,
    budget: u64,
) -> Result<VerificationReport> {
    match mode {
        DecodeMode::SingleError if spec.tau() != 1 => {
            return Err(Error::param("mode", "single-error mode needs d in {3, 4}"))
        }
        DecodeMode::MultiError if spec.tau() < 2 => {
            return Err(Error::param("mode", "multi-error mode needs d >= 5"))
        }
        _ => {}
    }
    let codewords: Vec<(Vec<u64>, OffsetVector)> = match b {
        Some(b) => {
            let b = OffsetVector::new(spec, b.as_slice().to_vec())?;
            brute_coset(spec, &b, budget)?
                .into_iter()
                .map(|w| (w, b.clone()))
                .collect()
        }
        None => {
            spec.check_budget(budget)?;
            all_words(spec.q(), spec.n())
                .map(|w| {
                    let b = OffsetVector::new(spec, direct_profile(spec, &w)).expect("profile in range");
                    (w, b)
                })
                .collect()
        }
    };

    let n = spec.n();
    let mut instances = 0u64;
    let mut counterexample: Option<String> = None;
    'outer: for (cw, b) in &codewords {
        match mode {
            DecodeMode::Erasure => {
                for k in 1..=spec.redundancy_len() {
                    let ok = for_each_subset(n, k, &mut |erased| {
                        instances += 1;
                        let mut symbols: Vec<Option<u64>> = cw.iter().copied().map(Some).collect();
                        for &p in erased {
                            symbols[p] = None;
                        }
                        let received = Word::new(symbols);
                        let got = decode_erasures(spec, &received, b);
                        if got.as_ref() != Ok(cw) {
                            counterexample = Some(format!(
                                "b={b} codeword={} received={received} got={}",
                                format_symbols(cw),
                                describe(&got)
                            ));
                            return false;
                        }
                        true
                    });
                    if !ok {
                        break 'outer;
                    }
                }
            }
            DecodeMode::SingleError | DecodeMode::MultiError => {
                for w in 1..=spec.tau() {
                    let ok = for_each_subset(n, w, &mut |positions| {
                        for_each_substitution(cw, spec.q(), positions, &mut |received| {
                            instances += 1;
                            let got = if mode == DecodeMode::SingleError {
                                decode_single_error(spec, received, b)
                            } else {
                                decode_errors(spec, received, b)
                            };
                            if got.as_ref() != Ok(cw) {
                                counterexample = Some(format!(
                                    "b={b} codeword={} received={} got={}",
                                    format_symbols(cw),
                                    format_symbols(received),
                                    describe(&got)
                                ));
                                return false;
                            }
                            true
                        })
                    });
                    if !ok {
                        break 'outer;
                    }
                }
            }
        }
    }

    Ok(VerificationReport {
        spec: spec.to_string(),
        property: format!("{mode} round-trip"),
        instances,
        passed: counterexample.is_none(),
        counterexample,
    })
}

/// Distance of `C_d(b)` against `d` for every offset `b` of `spec`.
pub fn distance_check(spec: &CodeSpec, budget: u64) -> Result<VerificationReport> {
    spec.check_budget(budget)?;
    let mut cosets: BTreeMap<Vec<u64>, Vec<Vec<u64>>> = BTreeMap::new();
    for w in all_words(spec.q(), spec.n()) {
        cosets.entry(direct_profile(spec, &w)).or_default().push(w);
    }
    let mut instances = 0u64;
    let mut counterexample = None;
    'outer: for (b, words) in &cosets {
        instances += 1;
        for (i, u) in words.iter().enumerate() {
            for v in &words[i + 1..] {
                if hamming(u, v) < spec.d() {
                    counterexample = Some(format!(
                        "b={} words {} and {} at distance {}",
                        format_symbols(b),
                        format_symbols(u),
                        format_symbols(v),
                        hamming(u, v)
                    ));
                    break 'outer;
                }
            }
        }
    }
    Ok(VerificationReport {
        spec: spec.to_string(),
        property: "minimum distance".into(),
        instances,
        passed: counterexample.is_none(),
        counterexample,
    })
}
