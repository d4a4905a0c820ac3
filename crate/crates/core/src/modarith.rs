//! Exact arithmetic over prime fields `Z_ℓ`.
//!
//! Residues are plain `u64` values in `[0, ℓ)`. The modulus is capped below
//! 2^31 so that a product of two residues never overflows a `u64`.

use crate::error::{Error, Result};

/// Largest modulus accepted by [`PrimeField::new`] (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

/// Deterministic primality test by trial division.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m < 4 {
        return true;
    }
    if m % 2 == 0 || m % 3 == 0 {
        return false;
    }
    let mut f = 5u64;
    while f * f <= m {
        if m % f == 0 || m % (f + 2) == 0 {
            return false;
        }
        f += 6;
    }
    true
}

/// Least prime `p >= m`. Values below 2 are treated as 2.
pub fn smallest_prime_geq(m: u64) -> u64 {
    let mut p = m.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// The prime field `Z_ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    /// Canonical representative of a signed integer.
    #[inline]
    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// Horner evaluation of `coeffs[0] + coeffs[1] x + ...`.
    pub fn eval_poly(&self, coeffs: &[u64], x: u64) -> u64 {
        let x = x % self.p;
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

/// The moment system `Σ_i nodes_i^j · x_i ≡ rhs_j (mod ℓ)` for `j = 0..m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VandermondeSystem {
    field: PrimeField,
    nodes: Vec<u64>,
    rhs: Vec<u64>,
}

impl VandermondeSystem {
    /// Nodes and right-hand sides are reduced modulo the field. Nodes must be
    /// pairwise distinct after reduction.
    pub fn new(field: PrimeField, nodes: &[u64], rhs: &[u64]) -> Result<Self> {
        if nodes.len() != rhs.len() {
            return Err(Error::param(
                "rhs",
                format!("{} nodes but {} right-hand sides", nodes.len(), rhs.len()),
            ));
        }
        let nodes: Vec<u64> = nodes.iter().map(|&k| field.reduce(k)).collect();
        let mut seen = nodes.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateNode(w[0]));
        }
        let rhs = rhs.iter().map(|&c| field.reduce(c)).collect();
        Ok(Self { field, nodes, rhs })
    }

    pub fn nodes(&self) -> &[u64] {
        &self.nodes
    }

    pub fn rhs(&self) -> &[u64] {
        &self.rhs
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Solves the system by Gaussian elimination mod ℓ.
    pub fn solve(&self) -> Vec<u64> {
        let f = self.field;
        let m = self.nodes.len();
        // Augmented matrix, row j = (k_1^j, ..., k_m^j | c_j).
        let mut a: Vec<Vec<u64>> = Vec::with_capacity(m);
        let mut powers = vec![1 % f.modulus(); m];
        for j in 0..m {
            let mut row = powers.clone();
            row.push(self.rhs[j]);
            a.push(row);
            for (p, &k) in powers.iter_mut().zip(&self.nodes) {
                *p = f.mul(*p, k);
            }
        }

        for col in 0..m {
            let pivot = (col..m)
                .find(|&r| a[r][col] != 0)
                .expect("Vandermonde matrix on distinct nodes is invertible");
            a.swap(col, pivot);
            let inv = f.inv(a[col][col]).unwrap();
            for v in a[col].iter_mut() {
                *v = f.mul(*v, inv);
            }
            for r in 0..m {
                if r == col || a[r][col] == 0 {
                    continue;
                }
                let factor = a[r][col];
                for c in col..=m {
                    let t = f.mul(factor, a[col][c]);
                    a[r][c] = f.sub(a[r][c], t);
                }
            }
        }
        a.into_iter().map(|row| row[m]).collect()
    }

    /// Returns true if `x` satisfies every moment equation.
    pub fn is_solution(&self, x: &[u64]) -> bool {
        x.len() == self.nodes.len()
            && self.rhs.iter().enumerate().all(|(j, &c)| {
                let lhs = self.nodes.iter().zip(x).fold(0, |acc, (&k, &xi)| {
                    self.field
                        .add(acc, self.field.mul(self.field.pow(k, j as u64), xi))
                });
                lhs == c
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_search_examples() {
        assert_eq!(smallest_prime_geq(22), 23);
        assert_eq!(smallest_prime_geq(5), 5);
        assert_eq!(smallest_prime_geq(88), 89);
        assert_eq!(smallest_prime_geq(86), 89);
        assert_eq!(smallest_prime_geq(2), 2);
        assert_eq!(smallest_prime_geq(100_000), 100_003);
    }

    #[test]
    fn primality_small_table() {
        let primes: Vec<u64> = (0..60).filter(|&m| is_prime(m)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(!is_prime(87));
        assert!(is_prime(383));
    }

    #[test]
    fn field_rejects_bad_moduli() {
        assert_eq!(PrimeField::new(87), Err(Error::NotPrime(87)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(
            PrimeField::new(2_147_483_659),
            Err(Error::ModulusTooLarge(2_147_483_659))
        );
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(23).unwrap();
        assert_eq!(f.inv(0), None);
        for a in 1..23 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn vandermonde_examples() {
        let f = PrimeField::new(5).unwrap();
        let one = VandermondeSystem::new(f, &[3], &[4]).unwrap();
        assert_eq!(one.solve(), vec![4]);
        let hom = VandermondeSystem::new(f, &[2, 3], &[0, 0]).unwrap();
        assert_eq!(hom.solve(), vec![0, 0]);
        let sys = VandermondeSystem::new(f, &[2, 3], &[1, 2]).unwrap();
        assert_eq!(sys.solve(), vec![1, 0]);
        assert!(sys.is_solution(&[1, 0]));
    }

    #[test]
    fn vandermonde_zero_node() {
        // Position ℓ reduces to node 0; the system stays invertible.
        let f = PrimeField::new(5).unwrap();
        let sys = VandermondeSystem::new(f, &[5, 2], &[3, 4]).unwrap();
        let x = sys.solve();
        assert!(sys.is_solution(&x));
        assert_eq!(x, vec![1, 2]);
    }

    #[test]
    fn vandermonde_rejects_duplicates() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(
            VandermondeSystem::new(f, &[2, 9], &[0, 0]),
            Err(Error::DuplicateNode(2))
        );
    }

    proptest! {
        #[test]
        fn prime_within_bertrand(m in 2u64..200_000) {
            let p = smallest_prime_geq(m);
            prop_assert!(p >= m && p < 2 * m);
            prop_assert!(is_prime(p));
            prop_assert!((m..p).all(|k| !is_prime(k)));
        }

        #[test]
        fn solve_reproduces_rhs(
            nodes in proptest::sample::subsequence((1u64..=30).collect::<Vec<_>>(), 1..8),
            seed in proptest::collection::vec(0u64..31, 8),
        ) {
            let f = PrimeField::new(31).unwrap();
            let rhs = &seed[..nodes.len()];
            let sys = VandermondeSystem::new(f, &nodes, rhs).unwrap();
            let x = sys.solve();
            prop_assert!(sys.is_solution(&x));
        }

        #[test]
        fn permuting_nodes_permutes_solution(
            nodes in proptest::sample::subsequence((1u64..=40).collect::<Vec<_>>(), 2..7),
            seed in proptest::collection::vec(0u64..41, 7),
            rot in 0usize..7,
        ) {
            let f = PrimeField::new(41).unwrap();
            let m = nodes.len();
            let rhs = &seed[..m];
            let x = VandermondeSystem::new(f, &nodes, rhs).unwrap().solve();
            let mut permuted = nodes.clone();
            permuted.rotate_left(rot % m);
            let y = VandermondeSystem::new(f, &permuted, rhs).unwrap().solve();
            let mut expect = x.clone();
            expect.rotate_left(rot % m);
            prop_assert_eq!(y, expect);
        }
    }
}
