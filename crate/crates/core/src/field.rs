//! Prime-field arithmetic and row reduction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted modulus.
pub const MAX_MODULUS: u64 = 1 << 31;

/// A prime modulus `p`, validated on construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub const TWO: PrimeModulus = PrimeModulus(2);
    pub const THREE: PrimeModulus = PrimeModulus(3);

    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat's little theorem. `a` must be nonzero mod p.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.0 != 0);
        self.pow(a, self.0 - 2)
    }

    /// `p^e`, or `None` on overflow.
    pub fn checked_power(self, e: usize) -> Option<u128> {
        let mut acc: u128 = 1;
        for _ in 0..e {
            acc = acc.checked_mul(u128::from(self.0))?;
        }
        Some(acc)
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.0
    }
}

impl fmt::Debug for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over `F_p`, row-major, entries reduced into `[0, p)`.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixFp {
    p: PrimeModulus,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl fmt::Debug for MatrixFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixFp({}x{} over {:?})", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl MatrixFp {
    pub fn zeros(p: PrimeModulus, rows: usize, cols: usize) -> Self {
        MatrixFp {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(p: PrimeModulus, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from row vectors; entries are reduced mod p.
    pub fn from_rows(p: PrimeModulus, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(MatrixFp {
            p,
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&x| x % p.get()).collect(),
        })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        self.entries[r * self.cols + c] = value % self.p.get();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> MatrixFp {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Row rank over `F_p` by Gaussian elimination with Fermat inversion.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut m = self.entries.clone();
        let cols = self.cols;
        let mut rank = 0;
        for col in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in col..cols {
                    m.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = p.inv(m[rank * cols + col]);
            for c in col..cols {
                m[rank * cols + c] = p.mul(m[rank * cols + c], inv);
            }
            for r in rank + 1..self.rows {
                let factor = m[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = p.mul(factor, m[rank * cols + c]);
                    m[r * cols + c] = p.sub(m[r * cols + c], sub);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Incremental echelon basis: vectors are inserted one at a time and reduced
/// against the pivots found so far.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    p: PrimeModulus,
    width: usize,
    // (pivot column, normalized row with 1 at the pivot)
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonBasis {
    pub fn new(p: PrimeModulus, width: usize) -> Self {
        EchelonBasis {
            p,
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Returns true when `v` was independent of the current span.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let p = self.p;
        let mut v: Vec<u64> = v.iter().map(|&x| x % p.get()).collect();
        for (pivot, row) in &self.rows {
            let factor = v[*pivot];
            if factor != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = p.sub(*x, p.mul(factor, r));
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = p.inv(v[pivot]);
        for x in &mut v {
            *x = p.mul(*x, inv);
        }
        self.rows.push((pivot, v));
        true
    }
}

/// `#{x ∈ F_p^k : ⟨u, x⟩ ≠ 0}` for nonzero `u`, which is `(p-1)·p^(k-1)`.
pub fn count_nonorthogonal(p: PrimeModulus, u: &[u64]) -> Result<u128> {
    if u.iter().all(|&x| x % p.get() == 0) {
        return Err(Error::InvalidInput("vector must be nonzero".into()));
    }
    let k = u.len();
    let base = p
        .checked_power(k - 1)
        .ok_or_else(|| Error::InvalidInput("p^(k-1) overflows".into()))?;
    Ok(u128::from(p.get() - 1) * base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(PrimeModulus::new(2).is_ok());
        assert!(PrimeModulus::new(3).is_ok());
        assert!(PrimeModulus::new(2_147_483_647).is_ok());
        for bad in [0, 1, 4, 9, 15, 1 << 31, (1 << 31) + 11] {
            assert!(matches!(PrimeModulus::new(bad), Err(Error::NotPrime(_))), "{bad}");
        }
    }

    #[test]
    fn inverse_round_trip() {
        let p = PrimeModulus::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(p.mul(a, p.inv(a)), 1);
        }
    }

    #[test]
    fn rank_identity_and_degenerate() {
        assert_eq!(MatrixFp::identity(PrimeModulus::TWO, 4).rank(), 4);
        assert_eq!(MatrixFp::zeros(PrimeModulus::THREE, 3, 5).rank(), 0);
        let m = MatrixFp::from_rows(PrimeModulus::THREE, &[vec![1, 2, 0], vec![2, 1, 0]]).unwrap();
        // second row = 2 * first row over F3
        assert_eq!(m.rank(), 1);
        let m = MatrixFp::from_rows(PrimeModulus::TWO, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]])
            .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn count_nonorthogonal_examples() {
        assert_eq!(count_nonorthogonal(PrimeModulus::TWO, &[1, 0, 0, 1, 1]).unwrap(), 16);
        assert_eq!(
            count_nonorthogonal(PrimeModulus::THREE, &[0, 1, 0, 0, 0, 0, 0, 0]).unwrap(),
            4374
        );
        assert_eq!(count_nonorthogonal(PrimeModulus::TWO, &[1]).unwrap(), 1);
        assert!(count_nonorthogonal(PrimeModulus::TWO, &[0, 2, 0]).is_err());
    }

    #[test]
    fn nonorthogonal_brute_force_f3_8() {
        let p = PrimeModulus::THREE;
        let u = [2u64, 0, 1, 1, 0, 2, 0, 1];
        let mut count = 0u128;
        for idx in 0..3u64.pow(8) {
            let mut rest = idx;
            let mut dot = 0;
            for &ui in &u {
                dot = p.add(dot, p.mul(ui, rest % 3));
                rest /= 3;
            }
            count += u128::from(dot != 0);
        }
        assert_eq!(count, 4374);
        assert_eq!(count_nonorthogonal(p, &u).unwrap(), count);
    }
}
