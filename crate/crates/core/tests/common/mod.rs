#![allow(dead_code)]

use complexcode_core::SimplicialComplex;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn cx(k: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(k, facets.iter().map(|f| f.iter().copied())).unwrap()
}

/// Facets `{0,1},{0,2,3},{4,5,6,7}` on 8 vertices.
pub fn two_blocks() -> SimplicialComplex {
    cx(8, &[&[0, 1], &[0, 2, 3], &[4, 5, 6, 7]])
}

/// `⟨{1,2,3},{3,4,5},{1,3,5}⟩` relabeled to 0-based.
pub fn delta0() -> SimplicialComplex {
    cx(5, &[&[0, 1, 2], &[2, 3, 4], &[0, 2, 4]])
}

/// The nine-triangle refinement of `delta0`, 1-based labels shifted down by one.
pub fn nine_triangles() -> SimplicialComplex {
    cx(
        8,
        &[
            &[0, 1, 7], &[0, 2, 7], &[1, 2, 7],
            &[2, 3, 5], &[2, 4, 5], &[3, 4, 5],
            &[0, 4, 6], &[0, 2, 6], &[2, 4, 6],
        ],
    )
}

/// Random complexes with `k <= max_k`, at most 5 facets, facet size at most 6.
/// Every vertex of `[0, k)` lies in some facet, so unit columns are all present.
pub fn random_complexes(seed: u64, count: usize, max_k: usize) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(1..=max_k);
        let facet_count = rng.gen_range(1..=5);
        let mut vertices: Vec<usize> = (0..k).collect();
        let mut facets: Vec<Vec<usize>> = (0..facet_count)
            .map(|_| {
                vertices.shuffle(&mut rng);
                let size = rng.gen_range(1..=k.min(6));
                vertices[..size].to_vec()
            })
            .collect();
        let covered: std::collections::BTreeSet<usize> = facets.iter().flatten().copied().collect();
        let missing: Vec<usize> = (0..k).filter(|v| !covered.contains(v)).collect();
        if !missing.is_empty() {
            // spread uncovered vertices over facets while respecting the size cap
            for v in missing {
                match facets.iter_mut().find(|f| f.len() < 6) {
                    Some(f) => f.push(v),
                    None => facets.push(vec![v]),
                }
            }
            if facets.len() > 5 {
                continue;
            }
        }
        out.push(SimplicialComplex::from_facets(k, facets).unwrap());
    }
    out
}
