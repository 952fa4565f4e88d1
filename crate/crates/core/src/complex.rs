//! Simplicial complexes over a fixed ambient vertex set, stored by their facets.
//!
//! A face is a bit mask over the ambient vertices, so the mask is the characteristic
//! vector of the face. A complex is the downward closure of its facet list; the full
//! face set is only materialized on request and is guarded by a face-count budget.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ambient vertex count.
pub const MAX_VERTICES: usize = 63;

/// Default cap on the number of faces materialized by [`SimplicialComplex::faces`].
pub const DEFAULT_FACE_BUDGET: u64 = 1 << 22;

/// A set of vertices, stored as a bit mask (bit `v` set iff vertex `v` is a member).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    ambient: MAX_VERTICES,
                });
            }
            mask |= 1 << v;
        }
        Ok(Face(mask))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|members| - 1`; the empty face has dimension -1.
    pub const fn dimension(self) -> isize {
        self.len() as isize - 1
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub const fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn with(self, v: usize) -> Face {
        Face(self.0 | 1 << v)
    }

    pub const fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    /// Member vertices in ascending order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    /// All subsets of this face (including the empty face and the face itself),
    /// in descending mask order.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(Face(cur))
        })
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Keeps only the containment-maximal masks, sorted ascending and deduplicated.
fn maximal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable();
    masks.dedup();
    let mut keep = Vec::with_capacity(masks.len());
    for (i, &m) in masks.iter().enumerate() {
        // A strict superset has a strictly larger mask value.
        if !masks[i + 1..].iter().any(|&o| m & !o == 0) {
            keep.push(m);
        }
    }
    keep
}

/// Number of distinct sets in the downward closure of `generators`, or
/// `None` once the count would pass `budget`.
fn downset_size(generators: &[u64], budget: u64) -> Option<u64> {
    let mut count = 0u64;
    for (i, &g) in generators.iter().enumerate() {
        for sub in Face(g).subsets() {
            if generators[..i].iter().any(|&o| sub.0 & !o == 0) {
                continue;
            }
            count += 1;
            if count > budget {
                return None;
            }
        }
    }
    Some(count)
}

/// Total vertex relabeling: `mapping[v]` is the image of source vertex `v`.
///
/// Images are compressed to a contiguous range `[0, target_count)` preserving the
/// order of the raw target values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    mapping: Vec<usize>,
    target_count: usize,
}

impl VertexMap {
    pub fn new(raw_targets: Vec<usize>) -> Self {
        let mut image = raw_targets.clone();
        image.sort_unstable();
        image.dedup();
        let mapping = raw_targets
            .iter()
            .map(|t| image.binary_search(t).expect("target is in image"))
            .collect();
        VertexMap {
            mapping,
            target_count: image.len(),
        }
    }

    pub fn identity(k: usize) -> Self {
        VertexMap {
            mapping: (0..k).collect(),
            target_count: k,
        }
    }

    /// Builds a map on `[0, k)` from `(source, target)` identifications;
    /// unlisted vertices map to themselves.
    pub fn from_pairs(k: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut raw: Vec<usize> = (0..k).collect();
        for &(src, dst) in pairs {
            for v in [src, dst] {
                if v >= k {
                    return Err(Error::VertexOutOfRange { vertex: v, ambient: k });
                }
            }
            raw[src] = dst;
        }
        Ok(VertexMap::new(raw))
    }

    pub fn source_count(&self) -> usize {
        self.mapping.len()
    }

    pub fn target_count(&self) -> usize {
        self.target_count
    }

    pub fn apply(&self, v: usize) -> usize {
        self.mapping[v]
    }

    pub fn apply_face(&self, face: Face) -> Face {
        Face(face.vertices().fold(0u64, |m, v| m | 1 << self.mapping[v]))
    }
}

/// A finite abstract simplicial complex on the ambient vertex set `[0, k)`.
///
/// The facet list is canonical: containment-maximal, ascending by mask. A facet list
/// holding only the empty face is the complex `{∅}`; an empty facet list is the void
/// complex with no faces at all (only produced as the link of an absent vertex).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ambient: usize,
    facets: Vec<Face>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(k={}, ", self.ambient)?;
        f.debug_list().entries(&self.facets).finish()?;
        f.write_str(")")
    }
}

impl SimplicialComplex {
    /// Builds a complex from candidate facets, dropping candidates contained in others.
    pub fn from_facets<I, F>(k: usize, candidates: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        if k == 0 {
            return Err(Error::InvalidComplex("ambient vertex count must be positive".into()));
        }
        if k > MAX_VERTICES {
            return Err(Error::TooManyVertices(k));
        }
        let mut masks = Vec::new();
        for candidate in candidates {
            let mut mask = 0u64;
            for v in candidate {
                if v >= k {
                    return Err(Error::VertexOutOfRange { vertex: v, ambient: k });
                }
                mask |= 1 << v;
            }
            masks.push(mask);
        }
        if masks.is_empty() {
            return Err(Error::InvalidComplex("facet list is empty".into()));
        }
        Ok(Self::from_masks_unchecked(k, masks))
    }

    /// Builds a complex from facet masks. Masks must fit in `k` bits.
    pub fn from_faces(k: usize, faces: &[Face]) -> Result<Self> {
        Self::from_facets(k, faces.iter().map(|f| f.vertices()))
    }

    pub(crate) fn from_masks_unchecked(k: usize, masks: Vec<u64>) -> Self {
        debug_assert!(masks.iter().all(|&m| k >= 64 || m >> k == 0));
        SimplicialComplex {
            ambient: k,
            facets: maximal_masks(masks).into_iter().map(Face).collect(),
        }
    }

    /// The full simplex on `k` vertices.
    pub fn simplex(k: usize) -> Result<Self> {
        Self::from_facets(k, std::iter::once(0..k))
    }

    /// The complex `{∅}` on `k` ambient vertices.
    pub fn empty_face_only(k: usize) -> Result<Self> {
        Self::from_facets(k, [Vec::<usize>::new()])
    }

    pub fn ambient_vertex_count(&self) -> usize {
        self.ambient
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Facets other than the empty face.
    pub fn nonempty_facet_count(&self) -> usize {
        self.facets.iter().filter(|f| !f.is_empty()).count()
    }

    /// Largest facet dimension; -1 for `{∅}` and -2 for the void complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.dimension()).max().unwrap_or(-2)
    }

    /// Vertices lying in at least one face.
    pub fn support(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    fn facet_masks(&self) -> Vec<u64> {
        self.facets.iter().map(|f| f.0).collect()
    }

    /// Number of faces, counting the empty face when `include_empty` is set.
    pub fn face_count(&self, include_empty: bool, budget: u64) -> Result<u64> {
        let total = downset_size(&self.facet_masks(), budget.saturating_add(1)).ok_or(
            Error::BudgetExceeded {
                what: "face",
                needed: u128::from(budget) + 1,
                budget: u128::from(budget),
            },
        )?;
        let total = if self.facets.is_empty() || include_empty {
            total
        } else {
            total - 1
        };
        if total > budget {
            return Err(Error::BudgetExceeded {
                what: "face",
                needed: u128::from(total),
                budget: u128::from(budget),
            });
        }
        Ok(total)
    }

    pub fn nonempty_face_count(&self) -> Result<u64> {
        self.face_count(false, DEFAULT_FACE_BUDGET)
    }

    /// All faces in ascending mask order, under the default face budget.
    pub fn faces(&self, include_empty: bool) -> Result<Vec<Face>> {
        self.faces_with_budget(include_empty, DEFAULT_FACE_BUDGET)
    }

    pub fn faces_with_budget(&self, include_empty: bool, budget: u64) -> Result<Vec<Face>> {
        let masks = self.facet_masks();
        let mut out = Vec::new();
        for (i, &g) in masks.iter().enumerate() {
            for sub in Face(g).subsets() {
                if sub.is_empty() && !include_empty {
                    continue;
                }
                if masks[..i].iter().any(|&o| sub.0 & !o == 0) {
                    continue;
                }
                if out.len() as u64 >= budget {
                    return Err(Error::BudgetExceeded {
                        what: "face",
                        needed: u128::from(budget) + 1,
                        budget: u128::from(budget),
                    });
                }
                out.push(sub);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.ambient {
            Err(Error::VertexOutOfRange {
                vertex: v,
                ambient: self.ambient,
            })
        } else {
            Ok(())
        }
    }

    /// Number of nonempty faces containing `v`, equivalently the number of faces of
    /// the link of `v` counting the empty face.
    pub fn faces_containing(&self, v: usize) -> Result<u64> {
        self.check_vertex(v)?;
        let star: Vec<u64> = self
            .facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v).0)
            .collect();
        let star = maximal_masks(star);
        Ok(downset_size(&star, u64::MAX).unwrap_or(u64::MAX))
    }

    /// `{τ : v ∉ τ, τ ∪ {v} ∈ Δ}` on the ambient set with `v` removed (vertices above
    /// `v` shift down by one).
    pub fn link(&self, v: usize) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let low = (1u64 << v) - 1;
        let masks = self
            .facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| {
                let m = f.without(v).0;
                (m & low) | (m >> 1 & !low)
            })
            .collect();
        Ok(SimplicialComplex {
            ambient: self.ambient - 1,
            facets: maximal_masks(masks).into_iter().map(Face).collect(),
        })
    }

    /// Faces of dimension at most `r`.
    pub fn skeleton(&self, r: usize) -> SimplicialComplex {
        let width = r + 1;
        let mut masks = Vec::new();
        for f in &self.facets {
            if f.len() <= width {
                masks.push(f.0);
            } else {
                masks.extend(f.subsets().filter(|s| s.len() == width).map(|s| s.0));
            }
        }
        Self::from_masks_unchecked(self.ambient, masks)
    }

    /// All non-maximal faces.
    pub fn boundary(&self) -> Result<SimplicialComplex> {
        if self.facets.iter().all(|f| f.len() <= 1) {
            return Err(Error::Degenerate(
                "every facet is a vertex, so the boundary is only the empty face".into(),
            ));
        }
        let mut masks = Vec::new();
        for f in &self.facets {
            masks.extend(f.vertices().map(|v| f.without(v).0).filter(|&m| m != 0));
        }
        Ok(Self::from_masks_unchecked(self.ambient, masks))
    }

    /// Cone with apex at the next fresh vertex `k`.
    pub fn cone(&self) -> Result<SimplicialComplex> {
        self.cone_at(self.ambient)
    }

    pub fn cone_at(&self, apex: usize) -> Result<SimplicialComplex> {
        self.check_fresh(apex)?;
        let masks = self.facets.iter().map(|f| f.with(apex).0).collect();
        Ok(Self::from_masks_unchecked(self.ambient + 1, masks))
    }

    fn check_fresh(&self, v: usize) -> Result<()> {
        if v != self.ambient {
            return Err(Error::ApexNotFresh {
                apex: v,
                expected: self.ambient,
            });
        }
        if v + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(v + 1));
        }
        Ok(())
    }

    /// `self ⊔ other`, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let k = self.ambient + other.ambient;
        if k > MAX_VERTICES {
            return Err(Error::TooManyVertices(k));
        }
        let shift = self.ambient;
        let masks = self
            .facets
            .iter()
            .map(|f| f.0)
            .chain(other.facets.iter().map(|f| f.0 << shift))
            .collect();
        Ok(Self::from_masks_unchecked(k, masks))
    }

    /// Quotient by a vertex map: facets are pushed through the map and maximality
    /// is restored. Facets that collapse onto smaller faces are kept as their image.
    pub fn identify_vertices(&self, map: &VertexMap) -> Result<SimplicialComplex> {
        if map.source_count() != self.ambient {
            return Err(Error::InvalidInput(format!(
                "vertex map covers {} vertices, complex has {}",
                map.source_count(),
                self.ambient
            )));
        }
        let masks = self.facets.iter().map(|f| map.apply_face(*f).0).collect();
        Ok(Self::from_masks_unchecked(map.target_count(), masks))
    }

    /// Stellar subdivision of `facet` at the next fresh vertex `k`.
    pub fn stellar_subdivide(&self, facet: Face) -> Result<SimplicialComplex> {
        self.stellar_subdivide_at(facet, self.ambient)
    }

    pub fn stellar_subdivide_at(&self, facet: Face, new_vertex: usize) -> Result<SimplicialComplex> {
        if !self.facets.contains(&facet) {
            return Err(Error::NotAFacet(facet.vertices().collect()));
        }
        self.check_fresh(new_vertex)?;
        let mut masks: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| f != facet)
            .map(|f| f.0)
            .collect();
        if facet.is_empty() {
            masks.push(1 << new_vertex);
        } else {
            masks.extend(facet.vertices().map(|v| facet.without(v).with(new_vertex).0));
        }
        Ok(Self::from_masks_unchecked(self.ambient + 1, masks))
    }

    /// All subsets of `[0, k)` that are not faces, ascending.
    pub fn complement_sets(&self, budget: u64) -> Result<Vec<u64>> {
        let total = 1u128 << self.ambient;
        if total > u128::from(budget) {
            return Err(Error::BudgetExceeded {
                what: "complement",
                needed: total,
                budget: u128::from(budget),
            });
        }
        Ok((0..total as u64)
            .filter(|&m| !self.is_face(Face(m)))
            .collect())
    }

    /// Whether the 1-skeleton on the support vertices is connected.
    pub fn is_connected(&self) -> bool {
        let mut component = Face::EMPTY;
        let mut remaining: Vec<Face> = self.facets.iter().copied().filter(|f| !f.is_empty()).collect();
        if let Some(first) = remaining.pop() {
            component = first;
        }
        loop {
            let before = remaining.len();
            remaining.retain(|f| {
                if f.intersection(component).is_empty() {
                    true
                } else {
                    component = component.union(*f);
                    false
                }
            });
            if remaining.is_empty() || remaining.len() == before {
                return remaining.is_empty();
            }
        }
    }
}

/// Result of gluing two complexes along a pair of equal-dimensional faces.
#[derive(Clone, Debug)]
pub struct Gluing {
    /// `Δ1 ⊔ Δ2` before identification.
    pub union: SimplicialComplex,
    /// The quotient complex.
    pub glued: SimplicialComplex,
    /// Quotient map from `union`'s vertices to `glued`'s.
    pub map: VertexMap,
    /// Vertex count of the first component inside `union`.
    pub first_ambient: usize,
    /// The glued face inside `union` (first component's copy).
    pub first_face: Face,
    /// The glued face inside `union` (second component's copy, shifted).
    pub second_face: Face,
}

/// Glues `f1 ∈ d1` to `f2 ∈ d2`, pairing their vertices in ascending order.
///
/// Requires both complexes connected, both faces nonempty faces of their complexes,
/// and equal dimensions.
pub fn glue_faces(
    d1: &SimplicialComplex,
    d2: &SimplicialComplex,
    f1: Face,
    f2: Face,
) -> Result<Gluing> {
    if f1.is_empty() || f1.len() != f2.len() {
        return Err(Error::GlueHypothesis(format!(
            "faces {f1} and {f2} must be nonempty and of equal dimension"
        )));
    }
    if !d1.is_face(f1) || !d2.is_face(f2) {
        return Err(Error::GlueHypothesis(format!(
            "{f1} and {f2} must be faces of their complexes"
        )));
    }
    if !d1.is_connected() || !d2.is_connected() {
        return Err(Error::GlueHypothesis("both components must be connected".into()));
    }
    let union = d1.disjoint_union(d2)?;
    let shift = d1.ambient_vertex_count();
    let pairs: Vec<(usize, usize)> = f2
        .vertices()
        .map(|v| v + shift)
        .zip(f1.vertices())
        .collect();
    let map = VertexMap::from_pairs(union.ambient_vertex_count(), &pairs)?;
    let glued = union.identify_vertices(&map)?;
    Ok(Gluing {
        union,
        glued,
        map,
        first_ambient: shift,
        first_face: f1,
        second_face: Face::from_mask(f2.mask() << shift),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(k: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(k, facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn two_blocks() -> SimplicialComplex {
        cx(8, &[&[0, 1], &[0, 2, 3], &[4, 5, 6, 7]])
    }

    fn skeleton_of_tetrahedron() -> SimplicialComplex {
        SimplicialComplex::simplex(4).unwrap().skeleton(2)
    }

    fn brute_faces(c: &SimplicialComplex, include_empty: bool) -> Vec<Face> {
        (0..1u64 << c.ambient_vertex_count())
            .map(Face)
            .filter(|&f| c.is_face(f) && (include_empty || !f.is_empty()))
            .collect()
    }

    #[test]
    fn containment_absorption() {
        let c = cx(4, &[&[0, 1, 2], &[0, 1], &[3]]);
        assert_eq!(
            c.facets(),
            &[Face::from_vertices([0, 1, 2]).unwrap(), Face::from_vertices([3]).unwrap()]
        );
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            SimplicialComplex::from_facets(3, [vec![0, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, ambient: 3 })
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(0, [vec![]]),
            Err(Error::InvalidComplex(_))
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(3, Vec::<Vec<usize>>::new()),
            Err(Error::InvalidComplex(_))
        ));
        assert!(matches!(
            SimplicialComplex::from_facets(64, [vec![0]]),
            Err(Error::TooManyVertices(64))
        ));
    }

    #[test]
    fn face_counts_of_worked_examples() {
        let c = two_blocks();
        assert_eq!(c.facets().len(), 3);
        assert_eq!(c.faces(false).unwrap().len(), 24);

        let delta0 = cx(5, &[&[0, 1, 2], &[2, 3, 4], &[0, 2, 4]]);
        assert_eq!(delta0.faces(true).unwrap().len(), 16);

        assert_eq!(SimplicialComplex::simplex(4).unwrap().faces(false).unwrap().len(), 15);
    }

    #[test]
    fn faces_match_brute_force_and_are_sorted() {
        let c = two_blocks();
        for include_empty in [false, true] {
            let faces = c.faces(include_empty).unwrap();
            assert_eq!(faces, brute_faces(&c, include_empty));
            assert_eq!(faces, c.faces(include_empty).unwrap());
        }
    }

    #[test]
    fn face_budget_is_enforced() {
        let c = SimplicialComplex::simplex(20).unwrap();
        assert!(matches!(
            c.faces_with_budget(false, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(c.face_count(false, 1000).is_err());
        assert_eq!(c.face_count(true, 1 << 21).unwrap(), 1 << 20);
    }

    #[test]
    fn faces_containing_examples() {
        let s = skeleton_of_tetrahedron();
        for v in 0..4 {
            assert_eq!(s.faces_containing(v).unwrap(), 7);
        }
        assert_eq!(two_blocks().faces_containing(1).unwrap(), 2);
        let iso = cx(3, &[&[0, 1], &[2]]);
        assert_eq!(iso.faces_containing(2).unwrap(), 1);
        assert!(iso.faces_containing(3).is_err());
    }

    #[test]
    fn link_examples() {
        let tri = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(tri.link(0).unwrap(), SimplicialComplex::simplex(2).unwrap());

        // boundary of the triangle on the remaining three vertices
        let lk = skeleton_of_tetrahedron().link(0).unwrap();
        assert_eq!(lk, cx(3, &[&[0, 1], &[0, 2], &[1, 2]]));
        assert_eq!(lk.faces(true).unwrap().len(), 7);

        let lk = two_blocks().link(7).unwrap();
        assert_eq!(lk, cx(7, &[&[4, 5, 6]]));
    }

    #[test]
    fn link_of_absent_vertex_is_void() {
        let c = cx(3, &[&[0, 1]]);
        let lk = c.link(2).unwrap();
        assert!(lk.facets().is_empty());
        assert_eq!(lk.faces(true).unwrap().len(), 0);
        assert_eq!(c.faces_containing(2).unwrap(), 0);
    }

    #[test]
    fn skeleton_examples() {
        assert_eq!(skeleton_of_tetrahedron().faces(false).unwrap().len(), 14);
        let c = two_blocks();
        assert_eq!(c.skeleton(3), c);
        assert_eq!(c.skeleton(10), c);
        let tri = SimplicialComplex::simplex(3).unwrap().skeleton(1);
        assert_eq!(tri.faces(false).unwrap().len(), 6);
        assert_eq!(tri.dimension(), 1);
    }

    #[test]
    fn boundary_examples() {
        let tet = SimplicialComplex::simplex(4).unwrap();
        assert_eq!(tet.boundary().unwrap(), skeleton_of_tetrahedron());
        assert_eq!(two_blocks().boundary().unwrap().faces(false).unwrap().len(), 21);
        for n in 1..7 {
            let s = SimplicialComplex::simplex(n + 1).unwrap();
            assert_eq!(s.boundary().unwrap(), s.skeleton(n - 1));
        }
        assert!(matches!(
            cx(2, &[&[0], &[1]]).boundary(),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn cone_examples() {
        let c = skeleton_of_tetrahedron().cone().unwrap();
        assert_eq!(c.ambient_vertex_count(), 5);
        assert_eq!(c.faces(false).unwrap().len(), 29);
        let point = cx(1, &[&[0]]);
        assert_eq!(point.cone().unwrap(), cx(2, &[&[0, 1]]));
        assert!(matches!(
            point.cone_at(0),
            Err(Error::ApexNotFresh { apex: 0, expected: 1 })
        ));
        let empty = SimplicialComplex::empty_face_only(2).unwrap();
        assert_eq!(empty.cone().unwrap().faces(false).unwrap().len(), 1);
    }

    #[test]
    fn disjoint_union_examples() {
        let point = cx(1, &[&[0]]);
        let two = point.disjoint_union(&point).unwrap();
        assert_eq!(two, cx(2, &[&[0], &[1]]));
        let tri = SimplicialComplex::simplex(3).unwrap();
        let edge = SimplicialComplex::simplex(2).unwrap();
        assert_eq!(tri.disjoint_union(&edge).unwrap().faces(false).unwrap().len(), 10);
    }

    #[test]
    fn identify_vertices_examples() {
        let c = two_blocks();
        let map = VertexMap::from_pairs(8, &[(1, 4), (2, 5), (3, 6)]).unwrap();
        let glued = c.identify_vertices(&map).unwrap();
        assert_eq!(glued.ambient_vertex_count(), 5);
        assert_eq!(glued.faces(false).unwrap().len(), 20);

        assert_eq!(c.identify_vertices(&VertexMap::identity(8)).unwrap(), c);

        let edges = cx(4, &[&[0, 1], &[2, 3]]);
        let path = edges
            .identify_vertices(&VertexMap::from_pairs(4, &[(3, 1)]).unwrap())
            .unwrap();
        assert_eq!(path.ambient_vertex_count(), 3);
        assert_eq!(path.faces(false).unwrap().len(), 5);
    }

    #[test]
    fn collapsing_map_keeps_image_face() {
        let tri = SimplicialComplex::simplex(3).unwrap();
        let map = VertexMap::new(vec![0, 0, 1]);
        assert_eq!(tri.identify_vertices(&map).unwrap(), cx(2, &[&[0, 1]]));
    }

    #[test]
    fn stellar_subdivision_examples() {
        let edge = SimplicialComplex::simplex(2).unwrap();
        let path = edge.stellar_subdivide(edge.facets()[0]).unwrap();
        assert_eq!(path, cx(3, &[&[0, 2], &[1, 2]]));

        let tri = SimplicialComplex::simplex(3).unwrap();
        let sub = tri.stellar_subdivide(tri.facets()[0]).unwrap();
        assert_eq!(sub, cx(4, &[&[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]));
        assert!(!sub.is_face(tri.facets()[0]));

        assert!(matches!(
            tri.stellar_subdivide(Face::from_vertices([0, 1]).unwrap()),
            Err(Error::NotAFacet(_))
        ));
    }

    #[test]
    fn subdividing_delta0_gives_nine_triangles() {
        let delta0 = cx(5, &[&[0, 1, 2], &[2, 3, 4], &[0, 2, 4]]);
        let t = |v: &[usize]| Face::from_vertices(v.iter().copied()).unwrap();
        let step1 = delta0.stellar_subdivide(t(&[2, 3, 4])).unwrap();
        let step2 = step1.stellar_subdivide(t(&[0, 2, 4])).unwrap();
        let step3 = step2.stellar_subdivide(t(&[0, 1, 2])).unwrap();
        // 1-based labels {1..8} shifted down by one.
        let expected = cx(
            8,
            &[
                &[0, 1, 7], &[0, 2, 7], &[1, 2, 7],
                &[2, 3, 5], &[2, 4, 5], &[3, 4, 5],
                &[0, 4, 6], &[0, 2, 6], &[2, 4, 6],
            ],
        );
        assert_eq!(step3, expected);
        assert_eq!(step3.faces(true).unwrap().len(), 34);
    }

    #[test]
    fn complement_set_examples() {
        let delta0 = cx(5, &[&[0, 1, 2], &[2, 3, 4], &[0, 2, 4]]);
        assert_eq!(delta0.complement_sets(1 << 24).unwrap().len(), 16);
        assert!(SimplicialComplex::simplex(5).unwrap().complement_sets(1 << 24).unwrap().is_empty());
        assert!(SimplicialComplex::simplex(30).unwrap().complement_sets(1 << 24).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(!two_blocks().is_connected());
        assert!(cx(4, &[&[0, 1], &[1, 2], &[2, 3]]).is_connected());
        assert!(cx(4, &[&[2, 3], &[0, 1], &[1, 2]]).is_connected());
    }

    #[test]
    fn glue_faces_validates_and_glues() {
        let tri = SimplicialComplex::simplex(3).unwrap();
        let e = |a, b| Face::from_vertices([a, b]).unwrap();
        let g = glue_faces(&tri, &tri, e(0, 1), e(0, 1)).unwrap();
        assert_eq!(g.glued.ambient_vertex_count(), 4);
        assert_eq!(g.glued.faces(false).unwrap().len(), 7 + 7 - 3);

        assert!(glue_faces(&tri, &tri, e(0, 1), Face::from_vertices([0]).unwrap()).is_err());
        let disconnected = cx(4, &[&[0, 1], &[2, 3]]);
        assert!(matches!(
            glue_faces(&disconnected, &tri, e(0, 1), e(0, 1)),
            Err(Error::GlueHypothesis(_))
        ));
    }
}
