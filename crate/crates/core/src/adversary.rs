//! Correction of up to `τ = ⌊(d−1)/2⌋` substituted symbols.
//!
//! For an error vector `e = y − α` the residues
//!
//! ```text
//! S_j = Σ_k e_k · k^j  (mod ℓ),   j = 0..d−2
//! ```
//!
//! are the syndromes of `e` under the parity-check rows `(1^j, 2^j, …, n^j)`
//! of a generalized Reed-Solomon code over `Z_ℓ`. `S_j` for `j ≥ 1` comes
//! straight from the checksum offsets. `S_0` is only known modulo
//! `M = (d−1)(q−1)+1`, so the plain error sum is recovered by a centered
//! lift first; `|Σ e_k| ≤ τ(q−1) ≤ (M−1)/2` makes that lift unique.
//!
//! Decoding then follows the usual route:
//!
//! 1. Berlekamp-Massey turns the syndromes into the shortest LFSR, whose
//!    connection polynomial is the error locator `Λ(z) = Π (1 − k z)`.
//! 2. Chien search evaluates `Λ` at `k⁻¹` for every position `k ∈ [1, n]`.
//! 3. Forney's formula `e_k = −k·Ω(k⁻¹)/Λ′(k⁻¹)` with `Ω = S·Λ mod z^{d−1}`
//!    gives each magnitude in `Z_ℓ`, which is lifted back to the unique
//!    integer that keeps the corrected symbol inside `[0, q−1]`.
//!
//! When `n = ℓ`, position `ℓ` has locator `0`. Such an error adds nothing to
//! `Λ`'s degree but still lengthens the LFSR by one, so it shows up as
//! `length − deg Λ = 1`; its magnitude is whatever `S_0` has left over.

use serde::{Deserialize, Serialize};

use crate::code::{is_codeword, CodeSpec, OffsetVector};
use crate::error::{Error, Result};
use crate::modarith::PrimeField;

/// Unique representative of `residue (mod modulus)` in
/// `[−⌊(modulus−1)/2⌋, ⌈(modulus−1)/2⌉]`.
pub fn centered_lift(residue: u64, modulus: u64) -> i64 {
    let r = residue % modulus;
    let upper = modulus / 2; // = ⌈(modulus−1)/2⌉
    if r > upper {
        r as i64 - modulus as i64
    } else {
        r as i64
    }
}

/// Syndromes of a received word relative to the coset `C_d(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorSyndrome {
    /// Centered lift of `(t_0(y) − b_0) mod M`, the integer error sum.
    pub sum_shift: i64,
    /// `(S_0, …, S_{d−2})` in `Z_ℓ`, with `S_0 = sum_shift mod ℓ`.
    pub residues: Vec<u64>,
}

impl ErrorSyndrome {
    pub fn is_zero(&self) -> bool {
        self.sum_shift == 0 && self.residues.iter().all(|&s| s == 0)
    }
}

pub fn compute_error_syndrome(spec: &CodeSpec, received: &[u64], b: &OffsetVector) -> Result<ErrorSyndrome> {
    spec.validate_word(received)?;
    let b = OffsetVector::new(spec, b.as_slice().to_vec())?;
    let f = spec.field();
    let big_m = spec.sum_modulus();
    let r = spec.redundancy_len();

    let mut sum = 0u64;
    let mut residues = vec![0u64; r];
    for (i, &y) in received.iter().enumerate() {
        if y == 0 {
            continue;
        }
        sum += y;
        let k = f.reduce(i as u64 + 1);
        let mut term = f.reduce(y);
        for s in residues.iter_mut().skip(1) {
            term = f.mul(term, k);
            *s = f.add(*s, term);
        }
    }
    let delta = (sum % big_m + big_m - b.as_slice()[0]) % big_m;
    let sum_shift = centered_lift(delta, big_m);
    residues[0] = f.from_i64(sum_shift);
    for (s, &bj) in residues.iter_mut().zip(b.as_slice()).skip(1) {
        *s = f.sub(*s, bj);
    }
    Ok(ErrorSyndrome { sum_shift, residues })
}

fn require_single_error_radius(spec: &CodeSpec) -> Result<()> {
    if spec.tau() != 1 {
        return Err(Error::param(
            "d",
            format!("single-error decoding needs d in {{3, 4}}, got {}", spec.d()),
        ));
    }
    Ok(())
}

/// Corrects at most one substitution when `d ∈ {3, 4}`, solving for the
/// position directly as `k ≡ S_1 / S_0 (mod ℓ)`.
pub fn decode_single_error(spec: &CodeSpec, received: &[u64], b: &OffsetVector) -> Result<Vec<u64>> {
    require_single_error_radius(spec)?;
    let syn = compute_error_syndrome(spec, received, b)?;
    if syn.is_zero() {
        return Ok(received.to_vec());
    }
    let uncorrectable = || Error::Uncorrectable("no codeword within distance 1".into());
    let e = syn.sum_shift;
    if e == 0 || e.unsigned_abs() >= spec.q() {
        return Err(uncorrectable());
    }
    let f = spec.field();
    let inv = f.inv(syn.residues[0]).ok_or_else(uncorrectable)?;
    let locator = f.mul(syn.residues[1], inv);
    let position = if locator == 0 { spec.ell() } else { locator } as usize;
    if position > spec.n() {
        return Err(uncorrectable());
    }
    let corrected = received[position - 1] as i64 - e;
    if corrected < 0 || corrected as u64 >= spec.q() {
        return Err(uncorrectable());
    }
    let mut out = received.to_vec();
    out[position - 1] = corrected as u64;
    if !is_codeword(spec, &out, b) {
        return Err(uncorrectable());
    }
    Ok(out)
}

/// Exhaustive single-error search: try every position and every alternative
/// symbol, updating the checksums incrementally. `O(n·q·d)` residue
/// operations; kept as a reference for [`decode_single_error`].
pub fn decode_single_error_scan(spec: &CodeSpec, received: &[u64], b: &OffsetVector) -> Result<Vec<u64>> {
    require_single_error_radius(spec)?;
    spec.validate_word(received)?;
    let b = OffsetVector::new(spec, b.as_slice().to_vec())?;
    let profile = crate::code::syndrome_profile(spec, received);
    if profile == b {
        return Ok(received.to_vec());
    }
    let f = spec.field();
    let big_m = spec.sum_modulus() as i64;
    let r = spec.redundancy_len();
    let p = profile.as_slice();
    let target = b.as_slice();
    for k in 1..=spec.n() {
        let yk = received[k - 1] as i64;
        let powers: Vec<u64> = (0..r).map(|j| f.pow(k as u64, j as u64)).collect();
        for alpha in 0..spec.q() as i64 {
            if alpha == yk {
                continue;
            }
            let diff = alpha - yk;
            if (p[0] as i64 + diff).rem_euclid(big_m) as u64 != target[0] {
                continue;
            }
            let dl = f.from_i64(diff);
            let ok = (1..r).all(|j| f.add(p[j], f.mul(powers[j], dl)) == target[j]);
            if ok {
                let mut out = received.to_vec();
                out[k - 1] = alpha as u64;
                return Ok(out);
            }
        }
    }
    Err(Error::Uncorrectable("no codeword within distance 1".into()))
}

/// Shortest LFSR generating a sequence: connection polynomial `Λ` with
/// `Λ(0) = 1`, and register length `length ≥ deg Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lfsr {
    pub connection: Vec<u64>,
    pub length: usize,
}

impl Lfsr {
    pub fn degree(&self) -> usize {
        self.connection.len() - 1
    }
}

/// Berlekamp-Massey over `Z_ℓ`.
pub fn berlekamp_massey(field: PrimeField, syndromes: &[u64]) -> Lfsr {
    let f = field;
    let mut c = vec![1u64];
    let mut prev = vec![1u64];
    let mut length = 0usize;
    let mut shift = 1usize;
    let mut prev_disc = 1u64;

    for n in 0..syndromes.len() {
        let disc = (1..=length.min(c.len() - 1)).fold(f.reduce(syndromes[n]), |acc, i| {
            f.add(acc, f.mul(c[i], syndromes[n - i]))
        });
        if disc == 0 {
            shift += 1;
            continue;
        }
        let coef = f.mul(disc, f.inv(prev_disc).unwrap());
        let next_len = prev.len() + shift;
        let mut next = c.clone();
        if next.len() < next_len {
            next.resize(next_len, 0);
        }
        for (i, &p) in prev.iter().enumerate() {
            next[i + shift] = f.sub(next[i + shift], f.mul(coef, p));
        }
        if 2 * length <= n {
            prev = std::mem::replace(&mut c, next);
            length = n + 1 - length;
            prev_disc = disc;
            shift = 1;
        } else {
            c = next;
            shift += 1;
        }
    }
    while c.len() > 1 && *c.last().unwrap() == 0 {
        c.pop();
    }
    Lfsr {
        connection: c,
        length,
    }
}

/// Syndromes, locator and evaluator for one received word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyEquationState {
    pub syndromes: Vec<u64>,
    /// `Λ(z)`, low degree first, `Λ(0) = 1`.
    pub locator: Vec<u64>,
    /// `Ω(z) = S(z)·Λ(z) mod z^{d−1}`.
    pub evaluator: Vec<u64>,
    /// Number of errors implied by the syndromes.
    pub error_count: usize,
}

/// Runs Berlekamp-Massey and forms the evaluator. More than `τ` implied
/// errors is reported as uncorrectable.
pub fn solve_key_equation(spec: &CodeSpec, syndromes: &[u64]) -> Result<KeyEquationState> {
    let f = spec.field();
    let lfsr = berlekamp_massey(f, syndromes);
    if lfsr.length > spec.tau() {
        return Err(Error::Uncorrectable(format!(
            "syndromes imply at least {} errors, radius is {}",
            lfsr.length,
            spec.tau()
        )));
    }
    let len = syndromes.len();
    let mut evaluator = vec![0u64; len];
    for (i, &s) in syndromes.iter().enumerate() {
        for (j, &l) in lfsr.connection.iter().enumerate() {
            if i + j < len {
                evaluator[i + j] = f.add(evaluator[i + j], f.mul(s, l));
            }
        }
    }
    while evaluator.len() > 1 && *evaluator.last().unwrap() == 0 {
        evaluator.pop();
    }
    Ok(KeyEquationState {
        syndromes: syndromes.to_vec(),
        locator: lfsr.connection,
        evaluator,
        error_count: lfsr.length,
    })
}

/// Error positions (1-indexed) with signed magnitudes `e_k = y_k − α_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ErrorVector(Vec<(usize, i64)>);

impl ErrorVector {
    pub fn new(mut entries: Vec<(usize, i64)>) -> Self {
        entries.sort_unstable();
        Self(entries)
    }

    pub fn entries(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `received − e`, if every corrected symbol stays nonnegative.
    pub fn subtract_from(&self, received: &[u64]) -> Option<Vec<u64>> {
        let mut out = received.to_vec();
        for &(k, e) in &self.0 {
            let v = *out.get(k.checked_sub(1)?)? as i64 - e;
            out[k - 1] = u64::try_from(v).ok()?;
        }
        Some(out)
    }
}

/// Integer `e ≡ residue (mod ℓ)`, `e ≠ 0`, with `y − e ∈ [0, q−1]`.
fn lift_magnitude(field: PrimeField, residue: u64, y: u64, q: u64) -> Option<i64> {
    let ell = field.modulus() as i64;
    let lo = y as i64 - (q as i64 - 1);
    let e = lo + (residue as i64 - lo).rem_euclid(ell);
    (e <= y as i64 && e != 0).then_some(e)
}

fn derivative(field: PrimeField, poly: &[u64]) -> Vec<u64> {
    if poly.len() <= 1 {
        return vec![0];
    }
    poly.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| field.mul(field.reduce(i as u64), c))
        .collect()
}

/// Chien search over positions `1..=n` and Forney magnitudes, lifted to
/// integers against the received symbols.
pub fn locate_and_evaluate(spec: &CodeSpec, state: &KeyEquationState, received: &[u64]) -> Result<ErrorVector> {
    spec.validate_word(received)?;
    let f = spec.field();
    let degree = state.locator.len() - 1;
    if state.error_count == 0 {
        return Ok(ErrorVector::default());
    }
    let zero_locators = state.error_count - degree;
    if zero_locators > 1 || (zero_locators == 1 && spec.ell() as usize > spec.n()) {
        return Err(Error::Uncorrectable("error locator has no valid roots".into()));
    }

    // Λ(k⁻¹) = 0  ⟺  k^deg · Λ(k⁻¹) = Σ_i Λ_i k^{deg−i} = 0.
    let reversed: Vec<u64> = state.locator.iter().rev().copied().collect();
    let mut roots = Vec::with_capacity(degree);
    if degree > 0 {
        for k in 1..=spec.n() {
            let x = f.reduce(k as u64);
            if x != 0 && f.eval_poly(&reversed, x) == 0 {
                roots.push(k);
                if roots.len() > degree {
                    break;
                }
            }
        }
    }
    if roots.len() != degree {
        return Err(Error::Uncorrectable(format!(
            "error locator of degree {degree} has {} roots among the positions",
            roots.len()
        )));
    }

    let d_locator = derivative(f, &state.locator);
    let mut entries = Vec::with_capacity(state.error_count);
    let mut residual_sum = f.reduce(state.syndromes[0]);
    for &k in &roots {
        let x = f.reduce(k as u64);
        let x_inv = f.inv(x).unwrap();
        let denom = f.eval_poly(&d_locator, x_inv);
        let denom_inv = f
            .inv(denom)
            .ok_or_else(|| Error::Uncorrectable("repeated error locator root".into()))?;
        let num = f.mul(x, f.eval_poly(&state.evaluator, x_inv));
        let magnitude = f.neg(f.mul(num, denom_inv));
        residual_sum = f.sub(residual_sum, magnitude);
        entries.push((k, magnitude));
    }
    if zero_locators == 1 {
        entries.push((spec.ell() as usize, residual_sum));
    }

    let lifted = entries
        .into_iter()
        .map(|(k, m)| {
            lift_magnitude(f, m, received[k - 1], spec.q()).map(|e| (k, e)).ok_or_else(|| {
                Error::Uncorrectable(format!("error magnitude at position {k} leaves the alphabet"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorVector::new(lifted))
}

/// Corrects up to `τ` substitutions with the syndrome pipeline.
pub fn decode_errors(spec: &CodeSpec, received: &[u64], b: &OffsetVector) -> Result<Vec<u64>> {
    let syn = compute_error_syndrome(spec, received, b)?;
    if syn.is_zero() {
        return Ok(received.to_vec());
    }
    let state = solve_key_equation(spec, &syn.residues)?;
    let errors = locate_and_evaluate(spec, &state, received)?;
    let corrected = errors
        .subtract_from(received)
        .ok_or_else(|| Error::Uncorrectable("correction leaves the alphabet".into()))?;
    if errors.weight() > spec.tau() || !is_codeword(spec, &corrected, b) {
        return Err(Error::Uncorrectable(
            "corrected word is not a member of the coset".into(),
        ));
    }
    Ok(corrected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{enumerate_codewords, syndrome_profile, DEFAULT_ENUMERATION_BUDGET};
    use proptest::prelude::*;

    fn small() -> (CodeSpec, OffsetVector) {
        let s = CodeSpec::new(2, 5, 3).unwrap();
        let b = OffsetVector::zero(&s);
        (s, b)
    }

    #[test]
    fn centered_lift_ranges() {
        assert_eq!(centered_lift(2, 3), -1);
        assert_eq!(centered_lift(1, 3), 1);
        assert_eq!(centered_lift(2, 4), 2);
        assert_eq!(centered_lift(3, 4), -1);
        assert_eq!(centered_lift(0, 9), 0);
        assert_eq!(centered_lift(5, 9), -4);
        assert_eq!(centered_lift(4, 9), 4);
    }

    #[test]
    fn syndrome_examples() {
        let (s, b) = small();
        let zero = compute_error_syndrome(&s, &[1, 0, 0, 1, 1], &b).unwrap();
        assert!(zero.is_zero());
        let syn = compute_error_syndrome(&s, &[1, 0, 1, 1, 1], &b).unwrap();
        assert_eq!(syn.sum_shift, 1);
        assert_eq!(syn.residues, vec![1, 3]);
    }

    #[test]
    fn syndrome_is_error_moment_sum() {
        let s = CodeSpec::new(3, 7, 5).unwrap();
        let f = s.field();
        let cw = vec![2, 0, 1, 1, 0, 2, 1];
        let b = syndrome_profile(&s, &cw).into_offset();
        let mut y = cw.clone();
        y[1] = 2; // e = +2 at position 2
        y[5] = 0; // e = −2 at position 6
        let syn = compute_error_syndrome(&s, &y, &b).unwrap();
        assert_eq!(syn.sum_shift, 0);
        let expected: Vec<u64> = (0..4)
            .map(|j| f.sub(f.mul(2, f.pow(2, j)), f.mul(2, f.pow(6, j))))
            .collect();
        assert_eq!(syn.residues, expected);
    }

    #[test]
    fn single_error_examples() {
        let (s, b) = small();
        assert_eq!(decode_single_error(&s, &[1, 0, 0, 1, 1], &b).unwrap(), vec![1, 0, 0, 1, 1]);
        assert_eq!(decode_single_error(&s, &[1, 0, 1, 1, 1], &b).unwrap(), vec![1, 0, 0, 1, 1]);
        assert!(matches!(
            decode_single_error(&s, &[1, 1, 1, 1, 0], &b),
            Err(Error::Uncorrectable(_))
        ));
        assert_eq!(decode_single_error_scan(&s, &[1, 0, 1, 1, 1], &b).unwrap(), vec![1, 0, 0, 1, 1]);
        assert!(decode_single_error_scan(&s, &[1, 1, 1, 1, 0], &b).is_err());
    }

    #[test]
    fn single_error_at_position_ell() {
        let (s, b) = small();
        // 10011 with position 5 flipped; locator 5 ≡ 0 mod ℓ.
        assert_eq!(decode_single_error(&s, &[1, 0, 0, 1, 0], &b).unwrap(), vec![1, 0, 0, 1, 1]);
        assert_eq!(decode_errors(&s, &[1, 0, 0, 1, 0], &b).unwrap(), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn single_error_requires_tau_one() {
        let s = CodeSpec::new(3, 7, 5).unwrap();
        let b = OffsetVector::zero(&s);
        assert!(matches!(
            decode_single_error(&s, &[0; 7], &b),
            Err(Error::InvalidParameter { name: "d", .. })
        ));
    }

    #[test]
    fn berlekamp_massey_examples() {
        let f = PrimeField::new(7).unwrap();
        let none = berlekamp_massey(f, &[0, 0, 0, 0]);
        assert_eq!((none.connection.clone(), none.length), (vec![1], 0));

        // S_j = e·k^j with k = 3, e = 2.
        let single: Vec<u64> = (0..4).map(|j| f.mul(2, f.pow(3, j))).collect();
        let l = berlekamp_massey(f, &single);
        assert_eq!(l.connection, vec![1, f.neg(3)]);
        assert_eq!(l.length, 1);

        // Two errors: (k, e) = (2, 1), (5, 2).
        let two: Vec<u64> = (0..4).map(|j| f.add(f.pow(2, j), f.mul(2, f.pow(5, j)))).collect();
        let l = berlekamp_massey(f, &two);
        // (1 − 2z)(1 − 5z) = 1 − 7z + 10z² ≡ 1 + 0z + 3z² (mod 7)
        assert_eq!(l.connection, vec![1, 0, 3]);
        assert_eq!(l.length, 2);
        for k in [2u64, 5] {
            assert_eq!(f.eval_poly(&l.connection, f.inv(k).unwrap()), 0);
        }
    }

    #[test]
    fn berlekamp_massey_zero_locator() {
        // An error at locator 0 contributes (e, 0, 0, …).
        let f = PrimeField::new(5).unwrap();
        let l = berlekamp_massey(f, &[3, 0]);
        assert_eq!((l.connection, l.length), (vec![1], 1));
        let l = berlekamp_massey(f, &[f.add(1, 4), 2, 4, 3]);
        // errors: locator 0 (e=4) and locator 2 (e=1)
        assert_eq!(l.length, 2);
        assert_eq!(l.connection, vec![1, f.neg(2)]);
    }

    #[test]
    fn locate_empty_locator() {
        let s = CodeSpec::new(3, 7, 5).unwrap();
        let state = solve_key_equation(&s, &[0, 0, 0, 0]).unwrap();
        assert!(locate_and_evaluate(&s, &state, &[0; 7]).unwrap().is_empty());
    }

    #[test]
    fn planted_single_error_is_found() {
        let s = CodeSpec::new(3, 7, 5).unwrap();
        let cw = vec![0, 1, 2, 0, 1, 2, 0];
        let b = syndrome_profile(&s, &cw).into_offset();
        let mut y = cw.clone();
        y[3] = 2;
        let syn = compute_error_syndrome(&s, &y, &b).unwrap();
        let state = solve_key_equation(&s, &syn.residues).unwrap();
        let ev = locate_and_evaluate(&s, &state, &y).unwrap();
        assert_eq!(ev.entries(), &[(4, 2)]);
    }

    #[test]
    fn exhaustive_two_errors_q3_n7_d5() {
        let s = CodeSpec::new(3, 7, 5).unwrap();
        let (b, _) = crate::code::best_offset_search(&s, DEFAULT_ENUMERATION_BUDGET).unwrap();
        let coset = enumerate_codewords(&s, &b, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert!(!coset.is_empty());
        for cw in &coset {
            for p1 in 0..7 {
                for p2 in p1 + 1..7 {
                    for v1 in 0..3 {
                        for v2 in 0..3 {
                            if v1 == cw[p1] || v2 == cw[p2] {
                                continue;
                            }
                            let mut y = cw.clone();
                            y[p1] = v1;
                            y[p2] = v2;
                            let syn = compute_error_syndrome(&s, &y, &b).unwrap();
                            let state = solve_key_equation(&s, &syn.residues).unwrap();
                            let ev = locate_and_evaluate(&s, &state, &y).unwrap();
                            let planted = ErrorVector::new(vec![
                                (p1 + 1, v1 as i64 - cw[p1] as i64),
                                (p2 + 1, v2 as i64 - cw[p2] as i64),
                            ]);
                            assert_eq!(ev, planted);
                            assert_eq!(&decode_errors(&s, &y, &b).unwrap(), cw);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn decode_errors_small_examples() {
        let (s, b) = small();
        assert_eq!(decode_errors(&s, &[1, 0, 0, 1, 1], &b).unwrap(), vec![1, 0, 0, 1, 1]);
        assert_eq!(decode_errors(&s, &[1, 0, 1, 1, 1], &b).unwrap(), vec![1, 0, 0, 1, 1]);
        assert!(matches!(decode_errors(&s, &[1, 1, 1, 1, 0], &b), Err(Error::Uncorrectable(_))));
    }

    proptest! {
        #[test]
        fn centered_lift_recovers_small_sums(q in 2u64..40, d in 3u64..12, frac in 0.0f64..=1.0, neg: bool) {
            let m = (d - 1) * (q - 1) + 1;
            let bound = ((d - 1) / 2 * (q - 1)) as i64;
            let s = ((bound as f64) * frac).round() as i64 * if neg { -1 } else { 1 };
            prop_assert_eq!(centered_lift(s.rem_euclid(m as i64) as u64, m), s);
        }

        #[test]
        fn planted_errors_are_corrected(
            word in proptest::collection::vec(0u64..16, 60),
            errs in proptest::collection::btree_map(1usize..=60, 1u64..16, 0..=3),
        ) {
            let s = CodeSpec::new(16, 60, 7).unwrap();
            let b = syndrome_profile(&s, &word).into_offset();
            let mut y = word.clone();
            for (&k, &shift) in &errs {
                y[k - 1] = (y[k - 1] + shift) % 16;
            }
            prop_assert_eq!(decode_errors(&s, &y, &b).unwrap(), word);
        }

        #[test]
        fn case_one_agrees_with_syndrome_pipeline(
            word in proptest::collection::vec(0u64..5, 11),
            pos in 0usize..11,
            shift in 0u64..5,
            d in 3usize..=4,
        ) {
            let s = CodeSpec::new(5, 11, d).unwrap();
            let b = syndrome_profile(&s, &word).into_offset();
            let mut y = word.clone();
            y[pos] = (y[pos] + shift) % 5;
            let direct = decode_single_error(&s, &y, &b).unwrap();
            prop_assert_eq!(&direct, &word);
            prop_assert_eq!(decode_errors(&s, &y, &b).unwrap(), direct.clone());
            prop_assert_eq!(decode_single_error_scan(&s, &y, &b).unwrap(), direct);
        }
    }
}
