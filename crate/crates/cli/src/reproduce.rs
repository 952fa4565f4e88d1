//! Recomputes the published instances listed in `fixtures/published_instances.json`.
//! The fixture carries the printed values; nothing here knows what they should be.

use std::fmt::Write as _;
use std::path::Path;

use complexcode_core::io::parse_json;
use complexcode_core::{
    anticode_summary_identity, classify, evaluate, make_family_instance, Budgets, CodeSummary,
    ComplexCode, Family, KnownDiscrepancy, Optimality, Params, Prediction, PrimeModulus, Status,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::render::{table, to_json};
use crate::{Context, Format};

const FIXTURE: &str = include_str!("../fixtures/published_instances.json");

#[derive(Deserialize)]
struct Fixture {
    instances: Vec<Instance>,
    families: Vec<FamilyRow>,
}

#[derive(Deserialize)]
struct Instance {
    name: String,
    field: u64,
    code: CodeChoice,
    complex: Value,
    #[serde(default)]
    identify: Vec<(u64, u64)>,
    #[serde(default)]
    operation: Option<String>,
    printed: [u64; 3],
    #[serde(default)]
    discrepancies: Vec<KnownDiscrepancy>,
    #[serde(default)]
    ratio: Option<RatioClaim>,
}

#[derive(Deserialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum CodeChoice {
    Faces,
    Anticode,
}

#[derive(Deserialize)]
struct RatioClaim {
    value: f64,
    tolerance: f64,
}

#[derive(Deserialize)]
struct FamilyRow {
    family: Family,
    index: u32,
    printed: [u64; 3],
    #[serde(default)]
    discrepancies: Vec<KnownDiscrepancy>,
    /// `length-optimal`, `distance-optimal`, or `optimal` for either.
    optimality: String,
}

#[derive(Serialize)]
struct Row {
    instance: String,
    field: u64,
    computed: String,
    printed: String,
    method: String,
    status: Status,
    notes: Vec<String>,
}

fn params(a: [u64; 3]) -> Params {
    Params::new(a[0], a[1], a[2])
}

fn fail(status: &mut Status, notes: &mut Vec<String>, note: String) {
    *status = Status::Fail;
    notes.push(note);
}

fn instance_row(inst: &Instance, budgets: &Budgets) -> Result<Row, String> {
    let err = |e: complexcode_core::Error| format!("{}: {e}", inst.name);
    let p = PrimeModulus::new(inst.field).map_err(err)?;
    let lc = parse_json(&inst.complex.to_string()).map_err(err)?;
    let mut complex = lc.complex.clone();
    if !inst.identify.is_empty() {
        let (map, _) = lc.vertex_map(&inst.identify).map_err(err)?;
        complex = complex.identify_vertices(&map).map_err(err)?;
    }
    match inst.operation.as_deref() {
        None => {}
        Some("cone") => complex = complex.cone().map_err(err)?,
        Some(other) => return Err(format!("{}: unknown operation {other:?}", inst.name)),
    }

    let mut notes = Vec::new();
    let (summary, method): (CodeSummary, String) = match inst.code {
        CodeChoice::Faces => {
            let s = ComplexCode::from_complex_with(&complex, p, budgets)
                .and_then(|c| c.min_distance_exhaustive(budgets))
                .map_err(err)?;
            (s, "exhaustive".into())
        }
        CodeChoice::Anticode => {
            let identity = anticode_summary_identity(&complex, p, budgets).map_err(err)?;
            let direct = ComplexCode::anticode_with(&complex, p, budgets)
                .and_then(|c| c.min_distance_exhaustive(budgets));
            match direct {
                Ok(direct) => {
                    if direct.params() != identity.params() {
                        notes.push(format!(
                            "identity path gave {}, exhaustive gave {}",
                            identity.params(),
                            direct.params()
                        ));
                    }
                    (direct, "exhaustive+identity".into())
                }
                Err(_) => (identity, "identity".into()),
            }
        }
    };
    let computed = summary.params();
    let printed = params(inst.printed);
    let (mut status, mut more) = evaluate(computed, &Prediction::exact(printed), &inst.discrepancies);
    notes.append(&mut more);
    if notes.iter().any(|n| n.starts_with("identity path")) {
        status = Status::Fail;
    }
    if let Some(claim) = &inst.ratio {
        match summary.ratio() {
            Some(r) if (r - claim.value).abs() <= claim.tolerance => {}
            r => fail(
                &mut status,
                &mut notes,
                format!("d/n = {r:?}, printed {} ± {}", claim.value, claim.tolerance),
            ),
        }
    }
    Ok(Row {
        instance: inst.name.clone(),
        field: inst.field,
        computed: computed.to_string(),
        printed: printed.to_string(),
        method,
        status,
        notes,
    })
}

fn family_row(f: &FamilyRow, budgets: &Budgets) -> Result<Row, String> {
    let name = format!("{} N={}", f.family, f.index);
    let err = |e: complexcode_core::Error| format!("{name}: {e}");
    let p = PrimeModulus::TWO;
    let complex = make_family_instance(f.family, f.index, budgets).map_err(err)?.complex;
    let summary = ComplexCode::from_complex_with(&complex, p, budgets)
        .and_then(|c| c.min_distance_exhaustive(budgets))
        .map_err(err)?;
    let computed = summary.params();
    let printed = params(f.printed);
    let (mut status, mut notes) = evaluate(computed, &Prediction::exact(printed), &f.discrepancies);
    let verdict = classify(computed.n, computed.k, computed.d, p).map_err(err)?;
    let ok = match f.optimality.as_str() {
        "optimal" => matches!(
            verdict.classification,
            Optimality::LengthOptimal | Optimality::DistanceOptimal
        ),
        claim => verdict.classification.to_string() == claim,
    };
    if ok {
        notes.push(format!(
            "{} (Griesmer length {}, gap {})",
            verdict.classification, verdict.griesmer_length, verdict.gap
        ));
    } else {
        fail(
            &mut status,
            &mut notes,
            format!("claimed {}, classified {}", f.optimality, verdict.classification),
        );
    }
    Ok(Row {
        instance: name,
        field: 2,
        computed: computed.to_string(),
        printed: printed.to_string(),
        method: summary.method.as_str().into(),
        status,
        notes,
    })
}

/// Returns the rendered table and whether any row failed.
pub fn run(ctx: &Context, override_path: Option<&Path>) -> Result<(String, bool), String> {
    let fixture: Fixture = match override_path {
        None => serde_json::from_str(FIXTURE).map_err(|e| format!("embedded fixture: {e}"))?,
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", p.display()))?
        }
    };
    let mut rows = Vec::new();
    for inst in &fixture.instances {
        rows.push(instance_row(inst, &ctx.budgets)?);
    }
    for f in &fixture.families {
        rows.push(family_row(f, &ctx.budgets)?);
    }
    let failed = rows.iter().any(|r| r.status == Status::Fail);
    let out = match ctx.format {
        Format::Json => to_json(&serde_json::to_value(&rows).map_err(|e| e.to_string())?),
        Format::Csv => {
            let mut out = String::from("instance,field,computed,printed,method,status\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},\"{}\",\"{}\",{},{}",
                    r.instance, r.field, r.computed, r.printed, r.method, r.status
                );
            }
            out
        }
        Format::Text => {
            let mut cells = vec![["instance", "field", "computed", "printed", "method", "status"].map(String::from)];
            cells.extend(rows.iter().map(|r| {
                [
                    r.instance.clone(),
                    format!("F{}", r.field),
                    r.computed.clone(),
                    r.printed.clone(),
                    r.method.clone(),
                    r.status.to_string(),
                ]
            }));
            let mut out = table(&cells);
            for r in &rows {
                for n in &r.notes {
                    let _ = writeln!(out, "note: {}: {n}", r.instance);
                }
            }
            let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
            let _ = writeln!(
                out,
                "{} rows: {} PASS, {} DISCREPANCY-NOTED, {} FAIL",
                rows.len(),
                count(Status::Pass),
                count(Status::DiscrepancyNoted),
                count(Status::Fail)
            );
            out
        }
    };
    Ok((out, failed))
}
