//! Linear codes built from simplicial complexes.
//!
//! A complex `Δ` on `k` vertices gives the code `C_Δ` whose generator columns are the
//! characteristic vectors of its nonempty faces, and the ambient anticode whose columns
//! are every other vector of `F_p^k`. This crate builds both, applies topological
//! operations (cone, boundary, skeleton, link, gluing, stellar subdivision), and
//! computes exact parameters `[n, k, d]` with the Griesmer-bound verdict.
//!
//! ```
//! use complexcode_core::{build_code, PrimeModulus, SimplicialComplex};
//!
//! let tetra_boundary = SimplicialComplex::simplex(4)?.skeleton(2);
//! let summary = build_code(&tetra_boundary, PrimeModulus::TWO)?.summarize_geometric()?;
//! assert_eq!((summary.n, summary.k, summary.d), (14, 4, 7));
//! # Ok::<(), complexcode_core::Error>(())
//! ```

pub mod bounds;
pub mod code;
pub mod complex;
pub mod error;
pub mod families;
pub mod field;
pub mod io;
pub mod report;
pub mod sweep;

pub use bounds::{classify, griesmer_sum, Optimality, OptimalityVerdict};
pub use code::{
    anticode_summary_identity, anticode_weight_identity, build_anticode, build_code,
    glue_weight_decomposition, message_from_index, message_index, min_distance_geometric,
    Budgets, CodeKind, CodeSummary, ComplexCode, GlueDecomposition, Method, Params,
};
pub use complex::{glue_faces, Face, Gluing, SimplicialComplex, VertexMap, MAX_VERTICES};
pub use error::{Error, Result};
pub use families::{
    asymptotic_sweep, family_report, make_family_instance, AnticodeRule, Family, FamilyInstance,
    FamilyReport, SweepRow, SweepTable,
};
pub use field::{count_nonorthogonal, EchelonBasis, MatrixFp, PrimeModulus};
pub use io::LabeledComplex;
pub use report::{
    evaluate, operation_report, predict_boundary, predict_cone, predict_glue, Component,
    DistancePath, Expect, KnownDiscrepancy, Operation, OperationReport, Prediction, Status,
};
