//! Exhaustive weight enumeration over the message space `F_p^k`.
//!
//! Scaling a message by a nonzero field element scales every inner product by the
//! same unit, so weights are constant on scalar classes. Only the class
//! representatives whose most significant nonzero digit is 1 are evaluated: these
//! are the radix ranges `[p^j, 2·p^j)`, and each representative is the least member
//! of its class in radix order. Counts are multiplied back by `p - 1`.
//!
//! The representative ranges are cut into fixed-size contiguous chunks that are
//! evaluated in parallel. Each worker keeps a local histogram and its best
//! `(weight, index)` pair; merging adds histograms and takes the lexicographic
//! minimum, so the result does not depend on scheduling.

use rayon::prelude::*;

use crate::code::{Columns, ComplexCode};
use crate::error::{Error, Result};

const CHUNK: u64 = 1 << 12;

/// Histogram over all `p^k` messages plus the least-index message of least positive weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOutcome {
    pub histogram: Vec<u64>,
    /// `(weight, radix index)`.
    pub best: Option<(usize, u64)>,
}

#[derive(Clone)]
struct Accumulator {
    histogram: Vec<u64>,
    best: Option<(usize, u64)>,
}

impl Accumulator {
    fn new(max_weight: usize) -> Self {
        Accumulator {
            histogram: vec![0; max_weight + 1],
            best: None,
        }
    }

    fn record(&mut self, weight: usize, index: u64) {
        self.histogram[weight] += 1;
        if weight > 0 && self.best.map_or(true, |b| (weight, index) < b) {
            self.best = Some((weight, index));
        }
    }

    fn merge(mut self, other: Accumulator) -> Accumulator {
        for (a, b) in self.histogram.iter_mut().zip(other.histogram) {
            *a += b;
        }
        self.best = match (self.best, other.best) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Per-message weight evaluation for one code.
enum Kernel<'a> {
    /// `p = 2`, 0/1 columns: parity of `|x ∧ u|`.
    Parity(&'a [u64]),
    /// 0/1 columns over odd `p`: per-message nibble tables of partial sums.
    Subset {
        masks: &'a [u64],
        p: u64,
        k: usize,
        /// `s % p != 0` for every reachable partial sum, when that range is small.
        nonzero: Option<Vec<bool>>,
    },
    /// Arbitrary columns: direct inner products.
    Dense { digits: &'a [u32], p: u64, k: usize },
}

struct Scratch {
    digits: Vec<u64>,
    table: Vec<u64>,
}

impl<'a> Kernel<'a> {
    fn new(code: &'a ComplexCode) -> Self {
        let p = code.modulus().get();
        let k = code.message_length();
        match code.columns() {
            Columns::Binary(masks) if p == 2 => Kernel::Parity(masks),
            Columns::Binary(masks) => {
                let max_sum = (p - 1) * k as u64;
                let nonzero = (max_sum < 1 << 16)
                    .then(|| (0..=max_sum).map(|s| s % p != 0).collect());
                Kernel::Subset {
                    masks,
                    p,
                    k,
                    nonzero,
                }
            }
            Columns::Dense(digits) => Kernel::Dense { digits, p, k },
        }
    }

    fn scratch(&self) -> Scratch {
        let k = match self {
            Kernel::Parity(_) => 0,
            Kernel::Subset { k, .. } | Kernel::Dense { k, .. } => *k,
        };
        Scratch {
            digits: vec![0; k],
            table: vec![0; k.div_ceil(4) * 16],
        }
    }

    fn weight(&self, index: u64, s: &mut Scratch) -> usize {
        match self {
            Kernel::Parity(masks) => masks
                .iter()
                .filter(|&&x| (x & index).count_ones() & 1 == 1)
                .count(),
            Kernel::Subset { masks, p, k, nonzero } => {
                let mut rest = index;
                for d in s.digits.iter_mut() {
                    *d = rest % p;
                    rest /= p;
                }
                let chunks = k.div_ceil(4);
                for c in 0..chunks {
                    for nib in 0..16usize {
                        let mut sum = 0u64;
                        for b in 0..4 {
                            let v = 4 * c + b;
                            if v < *k && nib >> b & 1 == 1 {
                                sum += s.digits[v];
                            }
                        }
                        s.table[c * 16 + nib] = sum;
                    }
                }
                masks
                    .iter()
                    .filter(|&&x| {
                        let mut sum = 0u64;
                        for c in 0..chunks {
                            sum += s.table[c * 16 + (x >> (4 * c) & 15) as usize];
                        }
                        match nonzero {
                            Some(table) => table[sum as usize],
                            None => sum % p != 0,
                        }
                    })
                    .count()
            }
            Kernel::Dense { digits, p, k } => {
                let mut rest = index;
                for d in s.digits.iter_mut() {
                    *d = rest % p;
                    rest /= p;
                }
                digits
                    .chunks_exact(*k)
                    .filter(|col| {
                        col.iter()
                            .zip(&s.digits)
                            .map(|(&x, &u)| u64::from(x) * u)
                            .sum::<u64>()
                            % p
                            != 0
                    })
                    .count()
            }
        }
    }
}

/// Contiguous chunks covering the scalar-class representatives.
fn representative_chunks(p: u64, k: usize) -> Vec<(u64, u64)> {
    let mut chunks = Vec::new();
    let mut base = 1u64;
    for _ in 0..k {
        let (mut lo, hi) = (base, 2 * base);
        while lo < hi {
            let end = (lo + CHUNK).min(hi);
            chunks.push((lo, end));
            lo = end;
        }
        base *= p;
    }
    chunks
}

fn check_budget(code: &ComplexCode, budget: u64) -> Result<u64> {
    let p = code.modulus();
    let k = code.message_length();
    match p.checked_power(k) {
        Some(total) if total <= u128::from(budget) => Ok(total as u64),
        other => Err(Error::BudgetExceeded {
            what: "message",
            needed: other.unwrap_or(u128::MAX),
            budget: u128::from(budget),
        }),
    }
}

/// Weights of every message against the code's own columns.
pub fn exhaustive(code: &ComplexCode, message_budget: u64) -> Result<SweepOutcome> {
    exhaustive_mapped(code, message_budget, code.len(), |w| w)
}

/// Like [`exhaustive`], but each nonzero message's weight `w` is recorded as
/// `map(w)`, which must not exceed `max_weight`. The zero message always records 0.
pub fn exhaustive_mapped<F>(
    code: &ComplexCode,
    message_budget: u64,
    max_weight: usize,
    map: F,
) -> Result<SweepOutcome>
where
    F: Fn(usize) -> usize + Sync,
{
    check_budget(code, message_budget)?;
    let p = code.modulus().get();
    let kernel = Kernel::new(code);
    let chunks = representative_chunks(p, code.message_length());
    let acc = chunks
        .par_iter()
        .fold(
            || (Accumulator::new(max_weight), kernel.scratch()),
            |(mut acc, mut scratch), &(lo, hi)| {
                for index in lo..hi {
                    acc.record(map(kernel.weight(index, &mut scratch)), index);
                }
                (acc, scratch)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(|| Accumulator::new(max_weight), Accumulator::merge);
    let mut histogram: Vec<u64> = acc.histogram.iter().map(|&c| c * (p - 1)).collect();
    histogram[0] += 1;
    Ok(SweepOutcome {
        histogram,
        best: acc.best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::message_from_index;
    use crate::complex::SimplicialComplex;
    use crate::field::PrimeModulus;

    #[test]
    fn representatives_cover_each_class_once() {
        for (p, k) in [(2u64, 5usize), (3, 4), (5, 3), (7, 2)] {
            let chunks = representative_chunks(p, k);
            let reps: Vec<u64> = chunks.iter().flat_map(|&(a, b)| a..b).collect();
            assert_eq!(reps.len() as u64, (p.pow(k as u32) - 1) / (p - 1));
            let pm = PrimeModulus::new(p).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for r in reps {
                let u = message_from_index(pm, k, r);
                for c in 1..p {
                    let scaled: Vec<u64> = u.iter().map(|&x| x * c % p).collect();
                    let idx = crate::code::message_index(pm, &scaled);
                    assert!(idx >= r, "representative is least in its class");
                    assert!(seen.insert(idx));
                }
            }
            assert_eq!(seen.len() as u64, p.pow(k as u32) - 1);
        }
    }

    #[test]
    fn sweep_matches_direct_weights() {
        let cx = SimplicialComplex::from_facets(5, [vec![0, 1, 2], vec![1, 3], vec![3, 4]]).unwrap();
        for q in [2, 3, 5] {
            let p = PrimeModulus::new(q).unwrap();
            for code in [
                ComplexCode::from_complex(&cx, p).unwrap(),
                ComplexCode::anticode(&cx, p).unwrap(),
            ] {
                let out = exhaustive(&code, 1 << 20).unwrap();
                let total = p.checked_power(5).unwrap() as u64;
                let mut hist = vec![0u64; code.len() + 1];
                let mut best: Option<(usize, u64)> = None;
                for idx in 0..total {
                    let w = code.weight(&message_from_index(p, 5, idx)).unwrap();
                    hist[w] += 1;
                    if w > 0 && best.map_or(true, |b| (w, idx) < b) {
                        best = Some((w, idx));
                    }
                }
                assert_eq!(out.histogram, hist, "p = {q}");
                assert_eq!(out.best, best, "p = {q}");
            }
        }
    }
}
