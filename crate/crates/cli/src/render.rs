//! Report formatting. Every report names the method that produced `d`.

use std::fmt::Write as _;

use complexcode_core::io::{distribution_csv, summary_json, sweep_csv};
use complexcode_core::{CodeSummary, FamilyReport, LabeledComplex, OperationReport, SweepTable};
use serde_json::{json, Value};

use crate::{Context, Format};

pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn ratio(r: Option<f64>) -> String {
    r.map_or_else(|| "nan".into(), |r| format!("{r:.6}"))
}

fn joined<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

pub fn summary(ctx: &Context, code: &str, s: &CodeSummary, distribution: bool) -> Result<String, String> {
    let p = ctx.p.get();
    Ok(match ctx.format {
        Format::Text => {
            let mut out = format!("{} method={}\n", s.params(), s.method.as_str());
            let _ = writeln!(out, "code: {code} over F{p}");
            let _ = writeln!(out, "d/n: {}", ratio(s.ratio()));
            if let Some(w) = &s.witness {
                let _ = writeln!(out, "witness: {}", joined(w, " "));
            }
            if let Some(dist) = &s.weight_distribution {
                let parts: Vec<String> = dist.iter().map(|(w, c)| format!("{w}:{c}")).collect();
                let _ = writeln!(out, "weights: {}", parts.join(" "));
            }
            out
        }
        Format::Json => {
            let mut v = summary_json(s);
            v["code"] = json!(code);
            v["field"] = json!(p);
            to_json(&v)
        }
        Format::Csv if distribution => distribution_csv(s)
            .ok_or_else(|| "no weight distribution; rerun with an exhaustive method".to_string())?,
        Format::Csv => format!(
            "code,field,n,k,d,method\n{code},{p},{},{},{},{}\n",
            s.n,
            s.k,
            s.d,
            s.method.as_str()
        ),
    })
}

fn with_method(s: &CodeSummary) -> String {
    format!("{} method={}", s.params(), s.method.as_str())
}

pub fn operation(ctx: &Context, r: &OperationReport, result: &LabeledComplex) -> Result<String, String> {
    let result_json: Value = serde_json::from_str(&result.to_json()).expect("facet JSON");
    Ok(match ctx.format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "operation: {} over F{}", r.operation, ctx.p.get());
            let _ = writeln!(out, "before: {}", with_method(&r.before));
            let _ = writeln!(out, "after: {}", with_method(&r.after));
            if !r.predicted.is_empty() {
                let _ = writeln!(out, "predicted: {}", r.predicted);
            }
            let _ = writeln!(out, "status: {}", r.status);
            for n in &r.notes {
                let _ = writeln!(out, "note: {n}");
            }
            let _ = writeln!(out, "result: {}", result.to_json());
            out
        }
        Format::Json => {
            let mut v = serde_json::to_value(r).map_err(|e| e.to_string())?;
            v["field"] = json!(ctx.p.get());
            v["result"] = result_json;
            to_json(&v)
        }
        Format::Csv => {
            let (b, a) = (r.before.params(), r.after.params());
            format!(
                "operation,field,before_n,before_k,before_d,after_n,after_k,after_d,method,predicted,status\n\
                 {},{},{},{},{},{},{},{},{},\"{}\",{}\n",
                r.operation,
                ctx.p.get(),
                b.n,
                b.k,
                b.d,
                a.n,
                a.k,
                a.d,
                r.after.method.as_str(),
                r.predicted,
                r.status
            )
        }
    })
}

pub fn families(ctx: &Context, reports: &[FamilyReport]) -> Result<String, String> {
    let row = |r: &FamilyReport| {
        let (g, gap, class) = match &r.optimality {
            Some(v) => (v.griesmer_length.to_string(), v.gap.to_string(), v.classification.to_string()),
            None => ("-".into(), "-".into(), "-".into()),
        };
        [
            r.family.to_string(),
            r.index.to_string(),
            r.summary.params().to_string(),
            r.predicted.to_string(),
            r.status.to_string(),
            g,
            gap,
            class,
            r.summary.method.as_str().to_string(),
        ]
    };
    Ok(match ctx.format {
        Format::Text => {
            let header = [
                "family", "N", "computed", "predicted", "status", "griesmer", "gap", "optimality",
                "method",
            ]
            .map(String::from);
            let mut rows = vec![header];
            rows.extend(reports.iter().map(row));
            let mut out = table(&rows);
            for r in reports {
                for n in &r.notes {
                    let _ = writeln!(out, "note: {} N={}: {n}", r.family, r.index);
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("family,N,n,k,d,predicted,status,griesmer,gap,optimality,method\n");
            for r in reports {
                let c = row(r);
                let s = r.summary.params();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},\"{}\",{},{},{},{},{}",
                    c[0], c[1], s.n, s.k, s.d, c[3], c[4], c[5], c[6], c[7], c[8]
                );
            }
            out
        }
        Format::Json => to_json(&serde_json::to_value(reports).map_err(|e| e.to_string())?),
    })
}

pub fn sweep(ctx: &Context, t: &SweepTable) -> Result<String, String> {
    Ok(match ctx.format {
        Format::Csv => sweep_csv(t),
        Format::Json => to_json(&serde_json::to_value(t).map_err(|e| e.to_string())?),
        Format::Text => {
            let mut rows = vec![["k", "n", "d", "d/n", "faces", "deviation", "method"].map(String::from)];
            rows.extend(t.rows.iter().map(|r| {
                [
                    r.k.to_string(),
                    r.n.to_string(),
                    r.d.to_string(),
                    ratio(r.ratio),
                    r.faces.to_string(),
                    r.deviation.to_string(),
                    r.method.clone(),
                ]
            }));
            let mut out = table(&rows);
            let _ = writeln!(out, "limit (p-1)/p over F{}: {:.6}", ctx.p.get(), t.limit);
            if let Some(dev) = t.final_deviation() {
                let _ = writeln!(out, "final |d/n - limit|: {dev:.6}");
            }
            if let Some(why) = &t.truncated {
                let _ = writeln!(out, "truncated: {why}");
            }
            out
        }
    })
}

/// Left-aligned columns separated by two spaces.
pub fn table<const N: usize>(rows: &[[String; N]]) -> String {
    let mut widths = [0usize; N];
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}
