//! Facet-list files, vertex-map files and report serialization.
//!
//! JSON facet lists look like `{"vertices": 5, "facets": [[1,2,3],[3,4,5]]}`. The
//! plain-text form has one facet per line (whitespace-separated labels) and an
//! optional leading `k=<int>` line; `#` starts a comment.
//!
//! Labels are arbitrary non-negative integers. When every label is below the declared
//! vertex count they are used as indices directly; otherwise the distinct labels are
//! ranked and mapped onto `0..`, and the original labels are kept for reporting.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::code::CodeSummary;
use crate::complex::{Face, SimplicialComplex, VertexMap};
use crate::error::{Error, Result};
use crate::families::SweepTable;

#[derive(Debug, Serialize, Deserialize)]
struct FacetFile {
    vertices: usize,
    facets: Vec<Vec<u64>>,
}

/// A complex together with the external label of each vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledComplex {
    pub complex: SimplicialComplex,
    pub labels: Vec<u64>,
}

impl LabeledComplex {
    /// Indices are their own labels.
    pub fn unlabeled(complex: SimplicialComplex) -> Self {
        let labels = (0..complex.ambient_vertex_count() as u64).collect();
        LabeledComplex { complex, labels }
    }

    pub fn from_labeled_facets(vertices: Option<usize>, facets: &[Vec<u64>]) -> Result<Self> {
        let distinct: BTreeSet<u64> = facets.iter().flatten().copied().collect();
        let k = vertices.unwrap_or(distinct.len());
        let direct = distinct.last().map_or(true, |&max| max < k as u64);
        let labels: Vec<u64> = if direct {
            (0..k as u64).collect()
        } else {
            if distinct.len() > k {
                return Err(Error::VertexOutOfRange {
                    vertex: distinct.len() - 1,
                    ambient: k,
                });
            }
            // ranked labels first, then fresh labels for any unused ambient vertices
            let mut labels: Vec<u64> = distinct.iter().copied().collect();
            let mut next = distinct.last().map_or(0, |m| m + 1);
            while labels.len() < k {
                labels.push(next);
                next += 1;
            }
            labels
        };
        let lookup = |l: u64| -> usize {
            if direct {
                l as usize
            } else {
                labels.binary_search(&l).expect("label was ranked")
            }
        };
        let complex = SimplicialComplex::from_facets(
            k,
            facets.iter().map(|f| f.iter().map(|&l| lookup(l)).collect::<Vec<_>>()),
        )?;
        Ok(LabeledComplex { complex, labels })
    }

    pub fn index_of(&self, label: u64) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown vertex label {label}")))
    }

    pub fn face_from_labels(&self, labels: &[u64]) -> Result<Face> {
        Face::from_vertices(
            labels
                .iter()
                .map(|&l| self.index_of(l))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn face_labels(&self, face: Face) -> Vec<u64> {
        face.vertices().map(|v| self.labels[v]).collect()
    }

    fn fresh_label(&self, requested: Option<u64>) -> Result<u64> {
        match requested {
            Some(l) if self.labels.contains(&l) => Err(Error::ApexNotFresh {
                apex: self.index_of(l)?,
                expected: self.labels.len(),
            }),
            Some(l) => Ok(l),
            None => Ok(self.labels.iter().max().map_or(0, |m| m + 1)),
        }
    }

    /// Cone with the apex carrying `apex` (default: one past the largest label).
    pub fn cone(&self, apex: Option<u64>) -> Result<LabeledComplex> {
        let label = self.fresh_label(apex)?;
        let mut labels = self.labels.clone();
        labels.push(label);
        Ok(LabeledComplex {
            complex: self.complex.cone()?,
            labels,
        })
    }

    pub fn stellar_subdivide(&self, facet: &[u64], new_vertex: Option<u64>) -> Result<LabeledComplex> {
        let face = self.face_from_labels(facet)?;
        let label = self.fresh_label(new_vertex)?;
        let mut labels = self.labels.clone();
        labels.push(label);
        Ok(LabeledComplex {
            complex: self.complex.stellar_subdivide(face)?,
            labels,
        })
    }

    /// Vertex map from `(source label, target label)` pairs; unlisted vertices are fixed.
    /// Each target class keeps the smallest label of its members.
    pub fn vertex_map(&self, pairs: &[(u64, u64)]) -> Result<(VertexMap, Vec<u64>)> {
        let idx: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(s, d)| Ok((self.index_of(s)?, self.index_of(d)?)))
            .collect::<Result<_>>()?;
        let map = VertexMap::from_pairs(self.labels.len(), &idx)?;
        let mut labels = vec![u64::MAX; map.target_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            let t = map.apply(v);
            labels[t] = labels[t].min(l);
        }
        Ok((map, labels))
    }

    pub fn to_json(&self) -> String {
        let file = FacetFile {
            vertices: self.complex.ambient_vertex_count(),
            facets: self
                .complex
                .facets()
                .iter()
                .map(|&f| self.face_labels(f))
                .collect(),
        };
        serde_json::to_string(&file).expect("facet lists always serialize")
    }
}

pub fn parse_json(text: &str) -> Result<LabeledComplex> {
    let file: FacetFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("facet JSON: {e}")))?;
    LabeledComplex::from_labeled_facets(Some(file.vertices), &file.facets)
}

fn parse_labels(line: &str, lineno: usize) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::Parse(format!("line {lineno}: bad vertex label {tok:?}")))
        })
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_text(text: &str) -> Result<LabeledComplex> {
    let mut vertices = None;
    let mut facets = Vec::new();
    for (i, (lineno, line)) in content_lines(text).enumerate() {
        if i == 0 {
            if let Some(rest) = line.strip_prefix("k=") {
                vertices = Some(rest.trim().parse::<usize>().map_err(|_| {
                    Error::Parse(format!("line {lineno}: bad vertex count {rest:?}"))
                })?);
                continue;
            }
        }
        facets.push(parse_labels(line, lineno)?);
    }
    if facets.is_empty() {
        return Err(Error::Parse("no facets found".into()));
    }
    LabeledComplex::from_labeled_facets(vertices, &facets)
}

/// JSON when the first non-blank character is `{`, plain text otherwise.
pub fn parse_facet_list(text: &str) -> Result<LabeledComplex> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

/// Lines of `src dst` label pairs.
pub fn parse_vertex_map(text: &str) -> Result<Vec<(u64, u64)>> {
    content_lines(text)
        .map(|(lineno, line)| match parse_labels(line, lineno)?.as_slice() {
            &[s, d] => Ok((s, d)),
            _ => Err(Error::Parse(format!(
                "line {lineno}: expected two labels \"src dst\""
            ))),
        })
        .collect()
}

/// `{n, k, d, weight_distribution, witness, method}`.
pub fn summary_json(summary: &CodeSummary) -> serde_json::Value {
    serde_json::json!({
        "n": summary.n,
        "k": summary.k,
        "d": summary.d,
        "weight_distribution": summary.weight_distribution,
        "witness": summary.witness,
        "method": summary.method.as_str(),
    })
}

/// `weight,count` rows.
pub fn distribution_csv(summary: &CodeSummary) -> Option<String> {
    let dist = summary.weight_distribution.as_ref()?;
    let mut out = String::from("weight,count\n");
    for (w, c) in dist {
        let _ = writeln!(out, "{w},{c}");
    }
    Some(out)
}

fn format_ratio(r: Option<f64>) -> String {
    r.map_or_else(|| "nan".to_string(), |r| format!("{r:.6}"))
}

/// `k,n,d,ratio,method` rows.
pub fn sweep_csv(table: &SweepTable) -> String {
    let mut out = String::from("k,n,d,ratio,method\n");
    for r in &table.rows {
        let _ = writeln!(out, "{},{},{},{},{}", r.k, r.n, r.d, format_ratio(r.ratio), r.method);
    }
    if let Some(t) = &table.truncated {
        let _ = writeln!(out, "# truncated: {t}");
    }
    out
}
