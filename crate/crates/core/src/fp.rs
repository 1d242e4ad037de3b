//! Arithmetic in the prime field F_p with a runtime modulus.
//!
//! Scalars are stored as canonical residues `0..p` in a `u64`. All matrix and
//! vector code in this crate receives the field as an explicit [`Fp`]
//! context, which keeps element types plain and comparisons exact.

use crate::error::{Error, Result};

/// A prime field F_p, used as an arithmetic context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    /// Reduce a signed value into `0..p`.
    pub fn reduce_signed(&self, x: i64) -> u64 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a % self.p) * (b % self.p) % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn add_vec(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn scale_vec(&self, c: u64, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&x| self.mul(c, x)).collect()
    }
}

/// `p^dim` as a `u128`, for budget checks that must not overflow.
pub fn pow_u128(p: u64, dim: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..dim {
        acc = acc.saturating_mul(p as u128);
    }
    acc
}

/// Iterator over all vectors of F_p^n in odometer order (last coordinate
/// varies fastest, so the stream is lexicographically sorted).
pub struct VectorIter {
    p: u64,
    current: Option<Vec<u64>>,
}

impl VectorIter {
    pub fn new(p: u64, n: usize) -> Self {
        VectorIter {
            p,
            current: Some(vec![0; n]),
        }
    }
}

impl Iterator for VectorIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.p {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

/// Guard an exhaustive enumeration of `p^n` candidates against a budget.
pub fn check_budget(p: u64, n: usize, budget: u64) -> Result<()> {
    let needed = pow_u128(p, n);
    if needed > budget as u128 {
        return Err(Error::TooLarge { needed, budget });
    }
    Ok(())
}
