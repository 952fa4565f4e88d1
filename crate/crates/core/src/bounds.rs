//! Griesmer bound and optimality classification.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeModulus;

/// `Σ_{i=0}^{k-1} ⌈d / p^i⌉`, the least length of any `[n, k, d]` code over `F_p`.
pub fn griesmer_sum(k: u64, d: u64, p: PrimeModulus) -> Result<u64> {
    if k == 0 || d == 0 {
        return Err(Error::InvalidInput(format!(
            "Griesmer bound needs k >= 1 and d >= 1, got k = {k}, d = {d}"
        )));
    }
    let mut sum = 0u64;
    let mut power: u64 = 1;
    for _ in 0..k {
        sum += d.div_ceil(power);
        // once p^i > d every further term is 1
        power = power.saturating_mul(p.get());
    }
    Ok(sum)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Optimality {
    /// `n` equals the Griesmer length: no shorter code has this `k` and `d`.
    LengthOptimal,
    /// `n` exceeds the Griesmer length, but no `[n, k, d+1]` code exists.
    DistanceOptimal,
    Neither,
    /// `n` is below the Griesmer length, so no such code exists.
    Infeasible,
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Optimality::LengthOptimal => "length-optimal",
            Optimality::DistanceOptimal => "distance-optimal",
            Optimality::Neither => "neither",
            Optimality::Infeasible => "infeasible",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityVerdict {
    pub griesmer_length: u64,
    /// `n - griesmer_length`.
    pub gap: i64,
    pub classification: Optimality,
}

pub fn classify(n: u64, k: u64, d: u64, p: PrimeModulus) -> Result<OptimalityVerdict> {
    let griesmer_length = griesmer_sum(k, d, p)?;
    let gap = n as i64 - griesmer_length as i64;
    let classification = if gap < 0 {
        Optimality::Infeasible
    } else if gap == 0 {
        Optimality::LengthOptimal
    } else if griesmer_sum(k, d + 1, p)? > n {
        Optimality::DistanceOptimal
    } else {
        Optimality::Neither
    };
    Ok(OptimalityVerdict {
        griesmer_length,
        gap,
        classification,
    })
}
