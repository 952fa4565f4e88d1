//! Named infinite families of complexes and the anticode asymptotics sweep.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{classify, OptimalityVerdict};
use crate::code::{anticode_summary_identity, Budgets, CodeSummary, ComplexCode, Params};
use crate::complex::{SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::report::{
    evaluate, summarize_face_code, Component, DistancePath, KnownDiscrepancy, Prediction, Status,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// The `N`-simplex on `N+1` vertices.
    FullSimplex,
    /// The `(N-1)`-skeleton of the `N`-simplex.
    Skeleton,
    /// The cone over the `(N-1)`-skeleton of the `N`-simplex.
    ConeSkeleton,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::FullSimplex, Family::Skeleton, Family::ConeSkeleton];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::FullSimplex => "full-simplex",
            Family::Skeleton => "skeleton",
            Family::ConeSkeleton => "cone-skeleton",
        }
    }

    /// Smallest meaningful index.
    pub fn min_index(self) -> u32 {
        match self {
            Family::FullSimplex => 0,
            Family::Skeleton | Family::ConeSkeleton => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family {s:?}")))
    }
}

/// One member of a family with its published parameters attached.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub family: Family,
    pub index: u32,
    pub complex: SimplicialComplex,
    /// Parameters as given by the family's closed form.
    pub predicted: Prediction,
    /// Printed components already known to differ from the computed value.
    pub known: Vec<KnownDiscrepancy>,
}

pub fn make_family_instance(family: Family, index: u32, budgets: &Budgets) -> Result<FamilyInstance> {
    if index < family.min_index() {
        return Err(Error::InvalidInput(format!(
            "{family} needs index >= {}",
            family.min_index()
        )));
    }
    let n = index as usize;
    let vertices = n + 1 + usize::from(family == Family::ConeSkeleton);
    if vertices > MAX_VERTICES || (1u64 << (n + 1).min(63)) > budgets.faces.saturating_mul(2) {
        return Err(Error::BudgetExceeded {
            what: "face",
            needed: 1u128 << (n + 1).min(127),
            budget: u128::from(budgets.faces),
        });
    }
    let pow = |e: usize| 1u64 << e;
    let simplex = SimplicialComplex::simplex(n + 1)?;
    let (complex, params, known) = match family {
        Family::FullSimplex => (
            simplex,
            Params::new(pow(n + 1) - 1, n as u64, pow(n)),
            vec![KnownDiscrepancy {
                component: Component::K,
                computed: n as u64 + 1,
                reason: "all unit columns are present, so the rank is N+1".into(),
            }],
        ),
        Family::Skeleton => (
            simplex.skeleton(n - 1),
            Params::new(pow(n + 1) - 2, n as u64 + 1, pow(n) - 1),
            Vec::new(),
        ),
        Family::ConeSkeleton => (
            simplex.skeleton(n - 1).cone()?,
            Params::new(2 * (pow(n + 1) - 2) + 1, n as u64 + 2, 2 * (pow(n) - 1)),
            Vec::new(),
        ),
    };
    Ok(FamilyInstance {
        family,
        index,
        complex,
        predicted: Prediction::exact(params),
        known,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: Family,
    pub index: u32,
    pub summary: CodeSummary,
    pub predicted: Prediction,
    pub status: Status,
    pub notes: Vec<String>,
    pub optimality: Option<OptimalityVerdict>,
}

pub fn family_report(
    family: Family,
    index: u32,
    p: PrimeModulus,
    budgets: &Budgets,
    path: DistancePath,
) -> Result<FamilyReport> {
    let inst = make_family_instance(family, index, budgets)?;
    let summary = summarize_face_code(&inst.complex, p, budgets, path)?;
    let (status, notes) = evaluate(summary.params(), &inst.predicted, &inst.known);
    let optimality = if summary.k >= 1 && summary.d >= 1 {
        Some(classify(summary.n, summary.k, summary.d, p)?)
    } else {
        None
    };
    Ok(FamilyReport {
        family,
        index,
        summary,
        predicted: inst.predicted,
        status,
        notes,
        optimality,
    })
}

/// Deterministic complex-per-`k` constructor for the asymptotics sweep.
#[derive(Clone, Debug)]
pub enum AnticodeRule {
    /// A fixed base complex plus singleton facets for every vertex in `[k0, k)`.
    /// Dimension is that of the base.
    PaddedFixed(SimplicialComplex),
    /// `⌊k/3⌋` disjoint triangles, remaining vertices as singletons. Dimension 2.
    DisjointTriangles,
    /// Explicit complexes, keyed by ambient vertex count.
    PerK(BTreeMap<usize, SimplicialComplex>),
}

impl AnticodeRule {
    /// The single triangle `{0,1,2}` padded with isolated vertices.
    pub fn triangle_with_isolated_vertices() -> Self {
        AnticodeRule::PaddedFixed(SimplicialComplex::simplex(3).expect("valid"))
    }

    /// Upper bound on the dimension of every member, when the rule fixes one.
    pub fn dimension_bound(&self) -> Option<isize> {
        match self {
            AnticodeRule::PaddedFixed(base) => Some(base.dimension().max(0)),
            AnticodeRule::DisjointTriangles => Some(2),
            AnticodeRule::PerK(m) => m.values().map(|c| c.dimension()).max(),
        }
    }

    pub fn complex_for(&self, k: usize) -> Result<Option<SimplicialComplex>> {
        match self {
            AnticodeRule::PaddedFixed(base) => {
                let k0 = base.ambient_vertex_count();
                if k < k0 {
                    return Ok(None);
                }
                let facets = base
                    .facets()
                    .iter()
                    .map(|f| f.vertices().collect::<Vec<_>>())
                    .chain((k0..k).map(|v| vec![v]));
                SimplicialComplex::from_facets(k, facets).map(Some)
            }
            AnticodeRule::DisjointTriangles => {
                if k == 0 {
                    return Ok(None);
                }
                let t = k / 3;
                let facets = (0..t)
                    .map(|i| vec![3 * i, 3 * i + 1, 3 * i + 2])
                    .chain((3 * t..k).map(|v| vec![v]));
                SimplicialComplex::from_facets(k, facets).map(Some)
            }
            AnticodeRule::PerK(m) => Ok(m.get(&k).cloned()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub k: usize,
    pub n: u64,
    pub d: u64,
    /// `d / n`; `None` for the empty code.
    pub ratio: Option<f64>,
    /// `identity`, or `exhaustive+identity` when both paths ran and agreed.
    pub method: String,
    /// `|Δ_k|`, counting the empty face.
    pub faces: u64,
    /// `|d - (p-1)p^(k-1)|`.
    pub deviation: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub p: PrimeModulus,
    pub rows: Vec<SweepRow>,
    /// Set when the sweep stopped early, naming the first `k` that did not fit.
    pub truncated: Option<String>,
    /// `(p-1)/p`.
    pub limit: f64,
}

impl SweepTable {
    /// `|d/n - (p-1)/p|` on the last row with a defined ratio.
    pub fn final_deviation(&self) -> Option<f64> {
        self.rows
            .iter()
            .rev()
            .find_map(|r| r.ratio)
            .map(|r| (r - self.limit).abs())
    }
}

fn sweep_row(
    rule: &AnticodeRule,
    k: usize,
    p: PrimeModulus,
    budgets: &Budgets,
) -> Result<Option<SweepRow>> {
    let Some(complex) = rule.complex_for(k)? else {
        return Ok(None);
    };
    let identity = anticode_summary_identity(&complex, p, budgets)?;
    let fits_columns = p
        .checked_power(k)
        .is_some_and(|t| t <= u128::from(budgets.columns));
    let method = if fits_columns {
        let direct = ComplexCode::anticode_with(&complex, p, budgets)?.min_distance_exhaustive(budgets)?;
        if direct.params() != identity.params()
            || direct.weight_distribution != identity.weight_distribution
        {
            return Err(Error::InvalidInput(format!(
                "identity and exhaustive paths disagree at k = {k}: {} vs {}",
                identity.params(),
                direct.params()
            )));
        }
        "exhaustive+identity"
    } else {
        "identity"
    };
    let full = crate::code::anticode_full_weight(p, k)?;
    Ok(Some(SweepRow {
        k,
        n: identity.n,
        d: identity.d,
        ratio: identity.ratio(),
        method: method.to_string(),
        faces: complex.face_count(true, budgets.faces)?,
        deviation: full.abs_diff(identity.d),
    }))
}

/// Anticode parameters for each `k` in `ks`, in ascending `k`. Stops at the first
/// `k` whose message space exceeds the budget and marks the table truncated.
pub fn asymptotic_sweep(
    rule: &AnticodeRule,
    ks: impl IntoIterator<Item = usize>,
    p: PrimeModulus,
    budgets: &Budgets,
) -> Result<SweepTable> {
    let mut ks: Vec<usize> = ks.into_iter().collect();
    ks.sort_unstable();
    ks.dedup();
    let mut truncated = None;
    if let Some(pos) = ks.iter().position(|&k| {
        p.checked_power(k)
            .map_or(true, |t| t > u128::from(budgets.messages))
    }) {
        truncated = Some(format!(
            "stopped at k = {}: p^k exceeds the message budget {}",
            ks[pos], budgets.messages
        ));
        ks.truncate(pos);
    }
    let rows: Vec<Option<SweepRow>> = ks
        .par_iter()
        .map(|&k| sweep_row(rule, k, p, budgets))
        .collect::<Result<_>>()?;
    Ok(SweepTable {
        p,
        rows: rows.into_iter().flatten().collect(),
        truncated,
        limit: (p.get() - 1) as f64 / p.get() as f64,
    })
}
