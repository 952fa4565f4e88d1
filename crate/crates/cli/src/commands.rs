use std::fs;
use std::path::Path;

use complexcode_core::io::{parse_facet_list, parse_vertex_map};
use complexcode_core::{
    anticode_summary_identity, asymptotic_sweep, family_report, operation_report, AnticodeRule,
    ComplexCode, DistancePath, LabeledComplex, Operation,
};

use crate::render;
use crate::{AnticodeArgs, Context, FamilyArgs, OpCommand, ParamsArgs, Rule, SweepArgs};

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load(path: &Path) -> Result<LabeledComplex, String> {
    parse_facet_list(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn path_for(exhaustive: bool) -> DistancePath {
    if exhaustive {
        DistancePath::Exhaustive
    } else {
        DistancePath::Geometric
    }
}

pub fn params(ctx: &Context, a: &ParamsArgs) -> Result<String, String> {
    let lc = load(&a.input)?;
    let code = ComplexCode::from_complex_with(&lc.complex, ctx.p, &ctx.budgets).map_err(|e| e.to_string())?;
    let summary = if a.exhaustive || a.distribution {
        code.min_distance_exhaustive(&ctx.budgets)
    } else {
        code.summarize_geometric()
    }
    .map_err(|e| e.to_string())?;
    render::summary(ctx, "faces", &summary, a.distribution)
}

pub fn anticode(ctx: &Context, a: &AnticodeArgs) -> Result<String, String> {
    let lc = load(&a.input)?;
    let summary = if a.exhaustive {
        ComplexCode::anticode_with(&lc.complex, ctx.p, &ctx.budgets)
            .and_then(|c| c.min_distance_exhaustive(&ctx.budgets))
    } else {
        anticode_summary_identity(&lc.complex, ctx.p, &ctx.budgets)
    }
    .map_err(|e| e.to_string())?;
    render::summary(ctx, "anticode", &summary, a.distribution)
}

pub fn op(ctx: &Context, cmd: &OpCommand) -> Result<String, String> {
    let err = |e: complexcode_core::Error| e.to_string();
    let (input, exhaustive) = match cmd {
        OpCommand::Cone { input, .. }
        | OpCommand::Boundary { input }
        | OpCommand::Skeleton { input, .. }
        | OpCommand::Link { input, .. }
        | OpCommand::Glue { input, .. }
        | OpCommand::Subdivide { input, .. } => (&input.input, input.exhaustive),
    };
    let lc = load(input)?;
    // the labeled result carries vertex labels through the operation for display
    let (op, result) = match cmd {
        OpCommand::Cone { apex, .. } => (Operation::Cone, lc.cone(*apex).map_err(err)?),
        OpCommand::Boundary { .. } => {
            let c = lc.complex.boundary().map_err(err)?;
            let labels = lc.labels.clone();
            (Operation::Boundary, LabeledComplex { complex: c, labels })
        }
        OpCommand::Skeleton { r, .. } => {
            let complex = lc.complex.skeleton(*r);
            (Operation::Skeleton(*r), LabeledComplex { complex, labels: lc.labels.clone() })
        }
        OpCommand::Link { vertex, .. } => {
            let v = lc.index_of(*vertex).map_err(err)?;
            let complex = lc.complex.link(v).map_err(err)?;
            let mut labels = lc.labels.clone();
            labels.remove(v);
            (Operation::Link(v), LabeledComplex { complex, labels })
        }
        OpCommand::Glue { map, .. } => {
            let pairs = parse_vertex_map(&read(map)?).map_err(|e| format!("{}: {e}", map.display()))?;
            let (vm, labels) = lc.vertex_map(&pairs).map_err(err)?;
            let complex = lc.complex.identify_vertices(&vm).map_err(err)?;
            (Operation::Identify(vm), LabeledComplex { complex, labels })
        }
        OpCommand::Subdivide { facet, apex, .. } => {
            let result = lc.stellar_subdivide(facet, *apex).map_err(err)?;
            let face = lc.face_from_labels(facet).map_err(err)?;
            (Operation::Subdivide(face), result)
        }
    };
    let report =
        operation_report(&lc.complex, &op, ctx.p, &ctx.budgets, path_for(exhaustive)).map_err(err)?;
    render::operation(ctx, &report, &result)
}

pub fn family(ctx: &Context, a: &FamilyArgs) -> Result<String, String> {
    if a.from > a.to {
        return Err(format!("empty index range {}..={}", a.from, a.to));
    }
    let reports = (a.from..=a.to)
        .map(|n| family_report(a.family, n, ctx.p, &ctx.budgets, path_for(a.exhaustive)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    render::families(ctx, &reports)
}

pub fn sweep(ctx: &Context, a: &SweepArgs) -> Result<String, String> {
    if a.k_min > a.k_max {
        return Err(format!("empty range k = {}..={}", a.k_min, a.k_max));
    }
    let rule = match (&a.base, a.rule) {
        (Some(path), _) => AnticodeRule::PaddedFixed(load(path)?.complex),
        (None, Rule::Triangle) => AnticodeRule::triangle_with_isolated_vertices(),
        (None, Rule::DisjointTriangles) => AnticodeRule::DisjointTriangles,
    };
    let table =
        asymptotic_sweep(&rule, a.k_min..=a.k_max, ctx.p, &ctx.budgets).map_err(|e| e.to_string())?;
    render::sweep(ctx, &table)
}
