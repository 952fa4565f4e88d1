//! Linear codes whose generator columns come from a simplicial complex.
//!
//! Two constructions are supported. The face code `C_Δ` has one column per nonempty
//! face, the column being the face's characteristic vector. The ambient anticode has
//! one column per vector of `F_p^k` that is *not* the characteristic vector of a face
//! (the zero vector, i.e. the empty face, is always excluded).
//!
//! Minimum distance can be obtained three ways:
//! * geometric: the least number of faces through a single vertex;
//! * exhaustive: evaluate every message (see [`crate::sweep`]);
//! * identity (anticodes only): `(p-1)p^(k-1)` minus the face-code weight, which
//!   never materializes the `p^k` anticode columns.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Face, Gluing, SimplicialComplex, DEFAULT_FACE_BUDGET};
use crate::error::{Error, Result};
use crate::field::{EchelonBasis, MatrixFp, PrimeModulus};
use crate::sweep::{self, SweepOutcome};

/// Resource limits for face enumeration, column materialization and message sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub faces: u64,
    pub columns: u64,
    pub messages: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            faces: DEFAULT_FACE_BUDGET,
            columns: 1 << 24,
            messages: 1 << 24,
        }
    }
}

/// How a minimum distance was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Geometric,
    Exhaustive,
    Identity,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Geometric => "geometric",
            Method::Exhaustive => "exhaustive",
            Method::Identity => "identity",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeKind {
    Faces,
    AmbientComplement,
}

#[derive(Clone, Debug)]
pub(crate) enum Columns {
    /// 0/1 columns as vertex masks.
    Binary(Vec<u64>),
    /// Arbitrary columns, `k` digits each, flattened.
    Dense(Vec<u32>),
}

/// A linear code over `F_p` given by its ordered generator columns.
#[derive(Clone, Debug)]
pub struct ComplexCode {
    source: SimplicialComplex,
    kind: CodeKind,
    p: PrimeModulus,
    k: usize,
    columns: Columns,
}

/// Radix index of a message: vertex 0 is the least significant digit.
pub fn message_index(p: PrimeModulus, digits: &[u64]) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p.get() + d)
}

pub fn message_from_index(p: PrimeModulus, k: usize, mut index: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(index % p.get());
        index /= p.get();
    }
    out
}

fn unit_message(k: usize, v: usize) -> Vec<u64> {
    let mut u = vec![0; k];
    u[v] = 1;
    u
}

impl ComplexCode {
    /// The face code `C_Δ`: columns are the nonempty faces in ascending mask order.
    pub fn from_complex(complex: &SimplicialComplex, p: PrimeModulus) -> Result<Self> {
        Self::from_complex_with(complex, p, &Budgets::default())
    }

    pub fn from_complex_with(
        complex: &SimplicialComplex,
        p: PrimeModulus,
        budgets: &Budgets,
    ) -> Result<Self> {
        let faces = complex.faces_with_budget(false, budgets.faces)?;
        Ok(ComplexCode {
            source: complex.clone(),
            kind: CodeKind::Faces,
            p,
            k: complex.ambient_vertex_count(),
            columns: Columns::Binary(faces.into_iter().map(Face::mask).collect()),
        })
    }

    /// The ambient anticode: every vector of `F_p^k` except characteristic vectors of
    /// faces (including the empty face), in ascending radix order.
    pub fn anticode(complex: &SimplicialComplex, p: PrimeModulus) -> Result<Self> {
        Self::anticode_with(complex, p, &Budgets::default())
    }

    pub fn anticode_with(
        complex: &SimplicialComplex,
        p: PrimeModulus,
        budgets: &Budgets,
    ) -> Result<Self> {
        let k = complex.ambient_vertex_count();
        if k == 0 {
            return Err(Error::InvalidComplex("anticode needs at least one vertex".into()));
        }
        let total = p
            .checked_power(k)
            .filter(|&t| t <= u128::from(budgets.columns))
            .ok_or(Error::BudgetExceeded {
                what: "column",
                needed: p.checked_power(k).unwrap_or(u128::MAX),
                budget: u128::from(budgets.columns),
            })?;
        let columns = if p.get() == 2 {
            Columns::Binary(
                (0..total as u64)
                    .filter(|&m| !complex.is_face(Face::from_mask(m)))
                    .collect(),
            )
        } else {
            let mut digits = Vec::new();
            for index in 0..total as u64 {
                let v = message_from_index(p, k, index);
                let as_face = v
                    .iter()
                    .enumerate()
                    .try_fold(0u64, |m, (i, &d)| match d {
                        0 => Some(m),
                        1 => Some(m | 1 << i),
                        _ => None,
                    });
                if as_face.is_some_and(|m| complex.is_face(Face::from_mask(m))) {
                    continue;
                }
                digits.extend(v.iter().map(|&d| d as u32));
            }
            Columns::Dense(digits)
        };
        Ok(ComplexCode {
            source: complex.clone(),
            kind: CodeKind::AmbientComplement,
            p,
            k,
            columns,
        })
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    /// Message length, the ambient vertex count.
    pub fn message_length(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        match &self.columns {
            Columns::Binary(m) => m.len(),
            Columns::Dense(d) => d.len() / self.k,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// An anticode of length zero (e.g. the full simplex over `F_2`).
    pub fn is_degenerate(&self) -> bool {
        self.is_empty()
    }

    pub(crate) fn columns(&self) -> &Columns {
        &self.columns
    }

    /// Column masks when every column is a 0/1 vector.
    pub fn binary_columns(&self) -> Option<&[u64]> {
        match &self.columns {
            Columns::Binary(m) => Some(m),
            Columns::Dense(_) => None,
        }
    }

    pub fn column(&self, i: usize) -> Vec<u64> {
        match &self.columns {
            Columns::Binary(m) => (0..self.k).map(|v| m[i] >> v & 1).collect(),
            Columns::Dense(d) => d[i * self.k..(i + 1) * self.k]
                .iter()
                .map(|&x| u64::from(x))
                .collect(),
        }
    }

    /// The `k × n` generator matrix.
    pub fn generator_matrix(&self) -> MatrixFp {
        let mut g = MatrixFp::zeros(self.p, self.k, self.len());
        for c in 0..self.len() {
            for (r, x) in self.column(c).into_iter().enumerate() {
                g.set(r, c, x);
            }
        }
        g
    }

    /// Code dimension, the rank of the generator matrix.
    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.p, self.k);
        for c in 0..self.len() {
            if basis.is_full() {
                break;
            }
            basis.insert(&self.column(c));
        }
        basis.rank()
    }

    fn check_message(&self, u: &[u64]) -> Result<()> {
        if u.len() != self.k {
            return Err(Error::LengthMismatch {
                got: u.len(),
                expected: self.k,
            });
        }
        if let Some(&bad) = u.iter().find(|&&x| x >= self.p.get()) {
            return Err(Error::InvalidInput(format!(
                "message symbol {bad} is not reduced mod {}",
                self.p
            )));
        }
        Ok(())
    }

    /// Number of columns `x` with `⟨u, x⟩ ≢ 0 (mod p)`.
    pub fn weight(&self, u: &[u64]) -> Result<usize> {
        self.check_message(u)?;
        let p = self.p.get();
        Ok(match &self.columns {
            Columns::Binary(masks) => masks
                .iter()
                .filter(|&&x| Face::from_mask(x).vertices().map(|v| u[v]).sum::<u64>() % p != 0)
                .count(),
            Columns::Dense(digits) => digits
                .chunks_exact(self.k)
                .filter(|x| {
                    x.iter()
                        .zip(u)
                        .map(|(&a, &b)| u64::from(a) * b % p)
                        .sum::<u64>()
                        % p
                        != 0
                })
                .count(),
        })
    }

    /// Binary-only: number of columns meeting `supp(u)` in an odd number of vertices.
    pub fn weight_odd_intersection(&self, u: &[u64]) -> Result<usize> {
        if self.p.get() != 2 {
            return Err(Error::NotBinary(self.p.get()));
        }
        self.check_message(u)?;
        let support = u
            .iter()
            .enumerate()
            .fold(0u64, |m, (v, &x)| if x == 1 { m | 1 << v } else { m });
        let Columns::Binary(masks) = &self.columns else {
            unreachable!("binary codes always store mask columns")
        };
        Ok(masks
            .iter()
            .filter(|&&x| (x & support).count_ones() & 1 == 1)
            .count())
    }

    /// Exact minimum distance and weight distribution over every message.
    pub fn min_distance_exhaustive(&self, budgets: &Budgets) -> Result<CodeSummary> {
        let outcome = sweep::exhaustive(self, budgets.messages)?;
        Ok(CodeSummary::from_outcome(self.len(), self.k, self.p, outcome, Method::Exhaustive))
    }

    /// Face codes: minimum distance from the least-covered vertex, rank by elimination.
    pub fn summarize_geometric(&self) -> Result<CodeSummary> {
        if self.kind != CodeKind::Faces {
            return Err(Error::InvalidInput(
                "the geometric path only applies to face codes".into(),
            ));
        }
        let (d, v) = min_distance_geometric(&self.source)?;
        Ok(CodeSummary {
            n: self.len() as u64,
            k: self.rank() as u64,
            d,
            message_length: self.k,
            weight_distribution: None,
            witness: Some(unit_message(self.k, v)),
            method: Method::Geometric,
        })
    }
}

/// Builds the face code.
pub fn build_code(complex: &SimplicialComplex, p: PrimeModulus) -> Result<ComplexCode> {
    ComplexCode::from_complex(complex, p)
}

/// Builds the ambient anticode.
pub fn build_anticode(complex: &SimplicialComplex, p: PrimeModulus) -> Result<ComplexCode> {
    ComplexCode::anticode(complex, p)
}

/// Least number of nonempty faces through a single vertex, and the least vertex
/// attaining it. Only vertices lying in some face are considered.
pub fn min_distance_geometric(complex: &SimplicialComplex) -> Result<(u64, usize)> {
    let support = complex.support();
    let mut best: Option<(u64, usize)> = None;
    for v in support.vertices() {
        let c = complex.faces_containing(v)?;
        if best.map_or(true, |(b, _)| c < b) {
            best = Some((c, v));
        }
    }
    best.ok_or_else(|| Error::Degenerate("complex has no nonempty faces".into()))
}

/// Anticode weight of `u` via the face code:
/// `(p-1)p^(k-1) - #{σ ∈ Δ : ⟨χ_σ, u⟩ ≠ 0}`.
pub fn anticode_weight_identity(
    complex: &SimplicialComplex,
    p: PrimeModulus,
    u: &[u64],
) -> Result<u64> {
    let code = ComplexCode::from_complex(complex, p)?;
    code.check_message(u)?;
    if u.iter().all(|&x| x == 0) {
        return Err(Error::InvalidInput("message must be nonzero".into()));
    }
    let total = anticode_full_weight(p, code.k)?;
    Ok(total - code.weight(u)? as u64)
}

/// `(p-1)p^(k-1)`: the weight of every nonzero message against all of `F_p^k`.
pub(crate) fn anticode_full_weight(p: PrimeModulus, k: usize) -> Result<u64> {
    if k == 0 {
        return Ok(0);
    }
    p.checked_power(k - 1)
        .map(|x| x * u128::from(p.get() - 1))
        .and_then(|x| u64::try_from(x).ok())
        .ok_or_else(|| Error::InvalidInput("p^(k-1) overflows".into()))
}

/// Minimum distance and distribution of the anticode without materializing its columns.
pub fn anticode_summary_identity(
    complex: &SimplicialComplex,
    p: PrimeModulus,
    budgets: &Budgets,
) -> Result<CodeSummary> {
    let k = complex.ambient_vertex_count();
    let face_code = ComplexCode::from_complex_with(complex, p, budgets)?;
    let full = anticode_full_weight(p, k)?;
    let faces_incl_empty = face_code.len() as u128 + 1;
    let n = p
        .checked_power(k)
        .map(|t| t - faces_incl_empty)
        .ok_or_else(|| Error::InvalidInput("p^k overflows".into()))?;
    let outcome = sweep::exhaustive_mapped(&face_code, budgets.messages, full as usize, |w| {
        full as usize - w
    })?;
    Ok(CodeSummary::from_outcome(n as usize, k, p, outcome, Method::Identity))
}

/// Parameters `[n, k, d]` plus the data that produced them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: u64,
    /// Dimension (rank of the generator matrix).
    pub k: u64,
    pub d: u64,
    /// Number of message symbols, the ambient vertex count.
    pub message_length: usize,
    /// weight → number of messages, over all `p^k` messages; absent on the geometric path.
    pub weight_distribution: Option<BTreeMap<u64, u64>>,
    /// A message attaining `d` (least in radix order when exhaustive).
    pub witness: Option<Vec<u64>>,
    pub method: Method,
}

impl CodeSummary {
    fn from_outcome(
        n: usize,
        message_length: usize,
        p: PrimeModulus,
        outcome: SweepOutcome,
        method: Method,
    ) -> Self {
        let zero_weight = outcome.histogram.first().copied().unwrap_or(0);
        // The kernel of the encoder has p^(k - rank) elements.
        let mut kernel_dim = 0;
        let mut size = 1u64;
        while size < zero_weight {
            size *= p.get();
            kernel_dim += 1;
        }
        debug_assert_eq!(size, zero_weight);
        let weight_distribution = outcome
            .histogram
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w as u64, c))
            .collect();
        let (d, witness) = match outcome.best {
            Some((w, idx)) => (w as u64, Some(message_from_index(p, message_length, idx))),
            None => (0, None),
        };
        CodeSummary {
            n: n as u64,
            k: (message_length - kernel_dim) as u64,
            d,
            message_length,
            weight_distribution: Some(weight_distribution),
            witness,
            method,
        }
    }

    pub fn params(&self) -> Params {
        Params {
            n: self.n,
            k: self.k,
            d: self.d,
        }
    }

    /// `d / n`, undefined for the empty code.
    pub fn ratio(&self) -> Option<f64> {
        (self.n > 0).then(|| self.d as f64 / self.n as f64)
    }
}

/// A parameter triple `[n, k, d]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

impl Params {
    pub const fn new(n: u64, k: u64, d: u64) -> Self {
        Params { n, k, d }
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d)
    }
}

/// The three summands of the gluing weight decomposition for one message.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueDecomposition {
    /// Weight on the whole glued complex.
    pub total: usize,
    /// Weight restricted to the image of the first component.
    pub first: usize,
    /// Weight restricted to the image of the second component.
    pub second: usize,
    /// Weight restricted to the faces of the glued face.
    pub shared: usize,
}

impl GlueDecomposition {
    pub fn holds(&self) -> bool {
        self.total + self.shared == self.first + self.second
    }
}

fn weight_on(faces: &[Face], p: PrimeModulus, u: &[u64]) -> usize {
    faces
        .iter()
        .filter(|f| f.vertices().map(|v| u[v]).sum::<u64>() % p.get() != 0)
        .count()
}

/// Splits the weight of `u` on a glued complex into the two component images minus
/// their overlap, the faces of the glued face. `u` is indexed by glued vertices.
pub fn glue_weight_decomposition(
    gluing: &Gluing,
    p: PrimeModulus,
    u: &[u64],
) -> Result<GlueDecomposition> {
    let k = gluing.glued.ambient_vertex_count();
    if u.len() != k {
        return Err(Error::LengthMismatch {
            got: u.len(),
            expected: k,
        });
    }
    let split = gluing.first_ambient;
    let image = |keep: &dyn Fn(Face) -> bool| -> Result<Vec<Face>> {
        let facets: Vec<Face> = gluing
            .union
            .facets()
            .iter()
            .copied()
            .filter(|&f| keep(f))
            .map(|f| gluing.map.apply_face(f))
            .collect();
        SimplicialComplex::from_faces(k, &facets)?.faces(false)
    };
    let low = if split >= 64 { u64::MAX } else { (1u64 << split) - 1 };
    let first = image(&|f| f.mask() & !low == 0)?;
    let second = image(&|f| f.mask() & low == 0)?;
    let shared_face = gluing.map.apply_face(gluing.first_face);
    let shared: Vec<Face> = shared_face.subsets().filter(|s| !s.is_empty()).collect();
    let all = gluing.glued.faces(false)?;
    let out = GlueDecomposition {
        total: weight_on(&all, p, u),
        first: weight_on(&first, p, u),
        second: weight_on(&second, p, u),
        shared: weight_on(&shared, p, u),
    };
    if !out.holds() {
        return Err(Error::GlueHypothesis(format!(
            "weight decomposition does not balance: {out:?}"
        )));
    }
    Ok(out)
}
