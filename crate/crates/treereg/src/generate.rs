//! Instance generation: explicit tree families, exhaustive enumeration up to
//! isomorphism, and seeded random corpora for the verification suites.
//!
//! Random construction is deterministic in the seed. Simplicial forests are
//! grown facet by facet, each new facet attached so that its intersections
//! with the existing facets form a chain; the attach order read backwards is
//! then a good leaf ordering, so the result is a forest by construction.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::rng::Rng;
use crate::rooted::RootedTree;

/// The degree-3 squarefree ideal in six variables whose square loses the
/// linear resolution in characteristic 0 while the ideal itself keeps one.
pub fn terai_ideal() -> MonomialIdeal {
    let supports: [&[usize]; 10] = [
        &[0, 1, 3], // abd
        &[0, 1, 5], // abf
        &[0, 2, 4], // ace
        &[0, 2, 3], // acd
        &[0, 4, 5], // aef
        &[1, 3, 4], // bde
        &[1, 2, 5], // bcf
        &[1, 2, 4], // bce
        &[2, 3, 5], // cdf
        &[3, 4, 5], // def
    ];
    MonomialIdeal::minimalize(
        6,
        supports
            .iter()
            .map(|s| Monomial::squarefree(s.iter().copied(), 6))
            .collect(),
    )
    .expect("fixture is well formed")
}

/// The characteristic-free example: eight ordered generators with linear
/// quotients whose square has no linear resolution. The order matters.
pub fn sturmfels_ordered_generators() -> Vec<Monomial> {
    let supports: [&[usize]; 8] = [
        &[3, 4, 5], // def
        &[2, 4, 5], // cef
        &[2, 3, 5], // cdf
        &[2, 3, 4], // cde
        &[1, 4, 5], // bef
        &[1, 2, 3], // bcd
        &[0, 2, 5], // acf
        &[0, 3, 4], // ade
    ];
    supports
        .iter()
        .map(|s| Monomial::squarefree(s.iter().copied(), 6))
        .collect()
}

/// How random simplicial complexes grow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthMode {
    /// Facets may attach with empty intersection: disconnected forests arise.
    Forest,
    /// Every new facet shares at least one vertex with its host: connected.
    Tree,
    /// Pure, with every new facet glued along a codimension-one face; this
    /// targets the intersection property.
    PureCodimOneTree,
}

/// Directed path on `n` vertices rooted at one end.
pub fn path_tree(n: usize) -> RootedTree {
    assert!(n >= 1);
    let parent = (0..n).map(|v| if v == 0 { None } else { Some(v - 1) }).collect();
    RootedTree::from_parents(parent).expect("a path is a tree")
}

/// Perfect tree of the given height in which every internal vertex has
/// exactly `k` children, vertices numbered level by level.
pub fn perfect_knary_tree(k: usize, h: u32) -> RootedTree {
    assert!(k >= 1);
    let mut parent: Vec<Option<usize>> = vec![None];
    let mut frontier = vec![0usize];
    for _ in 0..h {
        let mut next = Vec::new();
        for &v in &frontier {
            for _ in 0..k {
                parent.push(Some(v));
                next.push(parent.len() - 1);
            }
        }
        frontier = next;
    }
    RootedTree::from_parents(parent).expect("construction is a tree")
}

/// Broom with handle `0..=h` and `bristles[i-1]` extra leaves at level `i`.
pub fn broom_tree(h: u32, bristles: &[usize]) -> Result<RootedTree> {
    if bristles.len() != h as usize {
        return Err(Error::Structural(format!(
            "expected {h} bristle counts (levels 1..={h}), got {}",
            bristles.len()
        )));
    }
    let mut parent: Vec<Option<usize>> = (0..=h as usize)
        .map(|v| if v == 0 { None } else { Some(v - 1) })
        .collect();
    for (idx, &count) in bristles.iter().enumerate() {
        for _ in 0..count {
            parent.push(Some(idx)); // leaf at level idx + 1
        }
    }
    RootedTree::from_parents(parent)
}

/// Glue child trees under a fresh root.
fn compose(children: &[&RootedTree]) -> RootedTree {
    let mut parent: Vec<Option<usize>> = vec![None];
    for child in children {
        let offset = parent.len();
        for v in 0..child.vertex_count() {
            parent.push(Some(child.parent(v).map_or(0, |p| p + offset)));
        }
    }
    RootedTree::from_parents(parent).expect("composition is a tree")
}

/// Every rooted tree with `1..=max_vertices` vertices, one representative per
/// isomorphism class, grouped by vertex count (index 0 unused).
pub fn enumerate_rooted_trees(max_vertices: usize) -> Vec<Vec<RootedTree>> {
    let mut by_size: Vec<Vec<RootedTree>> = vec![Vec::new(); max_vertices + 1];
    if max_vertices == 0 {
        return by_size;
    }
    by_size[1].push(path_tree(1));
    for n in 2..=max_vertices {
        let mut out = Vec::new();
        // Children chosen as a non-increasing sequence of (size, index) ids,
        // so each multiset of subtrees appears exactly once.
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        collect_child_multisets(n - 1, (n - 1, usize::MAX), &by_size, &mut chosen, &mut out);
        by_size[n] = out;
    }
    by_size
}

fn collect_child_multisets(
    remaining: usize,
    max_id: (usize, usize),
    by_size: &[Vec<RootedTree>],
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<RootedTree>,
) {
    if remaining == 0 {
        let children: Vec<&RootedTree> =
            chosen.iter().map(|&(s, i)| &by_size[s][i]).collect();
        out.push(compose(&children));
        return;
    }
    let size_cap = remaining.min(max_id.0);
    for size in (1..=size_cap).rev() {
        let idx_cap = if size == max_id.0 {
            max_id.1.min(by_size[size].len().saturating_sub(1))
        } else {
            by_size[size].len() - 1
        };
        if by_size[size].is_empty() {
            continue;
        }
        for idx in (0..=idx_cap).rev() {
            chosen.push((size, idx));
            collect_child_multisets(remaining - size, (size, idx), by_size, chosen, out);
            chosen.pop();
        }
    }
}

/// Every perfect rooted tree of exactly the given height with `1..=max_branch`
/// children per internal vertex, up to isomorphism.
pub fn enumerate_perfect_trees(height: u32, max_branch: usize) -> Vec<RootedTree> {
    let mut level: Vec<RootedTree> = vec![path_tree(1)];
    for _ in 0..height {
        let mut next = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        // non-increasing index sequences of length 1..=max_branch
        fn go(
            start_from: usize,
            depth: usize,
            max_branch: usize,
            level: &[RootedTree],
            chosen: &mut Vec<usize>,
            next: &mut Vec<RootedTree>,
        ) {
            if !chosen.is_empty() {
                let children: Vec<&RootedTree> = chosen.iter().map(|&i| &level[i]).collect();
                next.push(compose(&children));
            }
            if depth == max_branch {
                return;
            }
            for i in (0..=start_from).rev() {
                chosen.push(i);
                go(i, depth + 1, max_branch, level, chosen, next);
                chosen.pop();
            }
        }
        go(level.len() - 1, 0, max_branch, &level, &mut chosen, &mut next);
        level = next;
    }
    level
}

/// Every broom of height `1..=max_height` with at most `max_bristles` extra
/// leaves per level.
pub fn enumerate_brooms(max_height: u32, max_bristles: usize) -> Vec<RootedTree> {
    let mut out = Vec::new();
    for h in 1..=max_height {
        let mut counts = vec![0usize; h as usize];
        loop {
            out.push(broom_tree(h, &counts).expect("valid bristle vector"));
            // odometer
            let mut pos = 0;
            loop {
                if pos == counts.len() {
                    break;
                }
                counts[pos] += 1;
                if counts[pos] <= max_bristles {
                    break;
                }
                counts[pos] = 0;
                pos += 1;
            }
            if pos == counts.len() {
                break;
            }
        }
    }
    out
}

/// Uniformly random recursive tree on `2..=max_vertices` vertices.
pub fn random_rooted_tree(rng: &mut Rng, max_vertices: usize) -> RootedTree {
    let n = rng.range(2, max_vertices.max(2));
    let mut parent: Vec<Option<usize>> = vec![None];
    for v in 1..n {
        parent.push(Some(rng.below(v)));
    }
    RootedTree::from_parents(parent).expect("attachment is a tree")
}

/// Random simplicial forest with at most `max_facets` facets and dimension at
/// most `max_dim`, grown by good-leaf attachment in the requested mode.
pub fn random_simplicial_forest(
    rng: &mut Rng,
    max_facets: usize,
    max_dim: usize,
    mode: GrowthMode,
) -> SimplicialComplex {
    let pure_codim_one = mode == GrowthMode::PureCodimOneTree;
    let facet_target = rng.range(1, max_facets.max(1));
    let dim = if pure_codim_one { max_dim.max(1) } else { 0 };
    let first_size = if pure_codim_one { dim + 1 } else { rng.range(2, max_dim + 1) };
    let mut facets: Vec<Vec<usize>> = vec![(0..first_size).collect()];
    let mut n = first_size;
    while facets.len() < facet_target {
        let mut attached = false;
        for _attempt in 0..24 {
            let host = facets[rng.below(facets.len())].clone();
            let size = if pure_codim_one { dim + 1 } else { rng.range(2, max_dim + 1) };
            let max_shared = (host.len() - 1).min(size - 1);
            let shared = match mode {
                GrowthMode::Forest => rng.range(0, max_shared),
                GrowthMode::Tree => rng.range(1.min(max_shared), max_shared),
                GrowthMode::PureCodimOneTree => {
                    if max_shared + 1 < size {
                        break; // host too small for a codim-one attach
                    }
                    size - 1
                }
            };
            let mut candidate = rng.choose_subset(&host, shared);
            let fresh = size - shared;
            candidate.extend(n..n + fresh);
            // Accept only when the new intersections form a chain, which
            // keeps the attach order a good leaf ordering read backwards.
            let mut meets: Vec<Vec<usize>> = facets
                .iter()
                .map(|f| candidate.iter().copied().filter(|v| f.contains(v)).collect())
                .collect();
            meets.sort_by_key(Vec::len);
            let chain = meets
                .windows(2)
                .all(|w| w[0].iter().all(|v| w[1].contains(v)));
            if chain {
                n += fresh;
                facets.push(candidate);
                attached = true;
                break;
            }
        }
        if !attached {
            break;
        }
    }
    let complex = SimplicialComplex::new(n, facets).expect("construction is valid");
    debug_assert!(complex.is_forest());
    complex
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_tree_counts_match_the_classical_sequence() {
        let by_size = enumerate_rooted_trees(8);
        let counts: Vec<usize> = (1..=8).map(|n| by_size[n].len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
        // all distinct up to isomorphism
        for n in 1..=8 {
            let mut codes: Vec<Vec<u8>> = by_size[n]
                .iter()
                .map(crate::rooted::canonical_code)
                .collect();
            codes.sort();
            codes.dedup();
            assert_eq!(codes.len(), by_size[n].len());
        }
    }

    #[test]
    fn perfect_tree_counts() {
        assert_eq!(enumerate_perfect_trees(1, 3).len(), 3);
        assert_eq!(enumerate_perfect_trees(2, 3).len(), 19);
        assert_eq!(enumerate_perfect_trees(3, 3).len(), 1539);
        for t in enumerate_perfect_trees(2, 3) {
            assert!(t.is_perfect());
            assert_eq!(t.height(), 2);
        }
    }

    #[test]
    fn broom_counts_and_shape() {
        let brooms = enumerate_brooms(3, 3);
        assert_eq!(brooms.len(), 4 + 16 + 64);
        for b in &brooms {
            assert!(b.broom_handle().is_some());
        }
    }

    #[test]
    fn random_forests_are_forests() {
        let mut rng = Rng::new(11);
        for _ in 0..40 {
            let c = random_simplicial_forest(&mut rng, 6, 3, GrowthMode::Forest);
            assert!(c.is_forest());
            assert!(c.dimension() <= 3);
            assert!(c.facet_count() <= 6);
        }
    }

    #[test]
    fn targeted_mode_often_hits_the_intersection_property() {
        let mut rng = Rng::new(5);
        let mut hits = 0;
        for _ in 0..40 {
            let c = random_simplicial_forest(&mut rng, 5, 2, GrowthMode::PureCodimOneTree);
            assert!(c.is_pure());
            if c.intersection_property().holds() {
                hits += 1;
            }
        }
        assert!(hits >= 20, "only {hits} of 40 targeted instances satisfied it");
    }

    #[test]
    fn generation_is_deterministic() {
        let a = random_simplicial_forest(&mut Rng::new(42), 6, 3, GrowthMode::Forest);
        let b = random_simplicial_forest(&mut Rng::new(42), 6, 3, GrowthMode::Forest);
        assert_eq!(a, b);
    }
}
