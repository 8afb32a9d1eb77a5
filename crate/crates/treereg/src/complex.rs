//! Simplicial complexes given by their facets, and the leaf combinatorics of
//! simplicial forests: good leaves, good leaf orderings, proper chains, facet
//! distance, and the intersection property.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// A simplicial complex presented by its facets (maximal faces).
///
/// Vertices are `0..n` internally and 1-based in files and display. Every
/// vertex must lie in some facet and no facet may contain another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

/// Why the intersection property failed, or that it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IntersectionStatus {
    Satisfied,
    NotPure,
    NotForest,
    NotCodimOneConnected,
    /// Pair of facet indices with `dim(G ∩ H) != dim − dist(G, H)`.
    PairFailure(usize, usize),
}

impl IntersectionStatus {
    pub fn holds(&self) -> bool {
        matches!(self, IntersectionStatus::Satisfied)
    }
}

impl SimplicialComplex {
    /// Build a complex from 0-based facets. Rejects nested or duplicate
    /// facets (naming the offending pair) and uncovered vertices.
    pub fn new(n: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Structural("vertex count must be positive".into()));
        }
        if facets.is_empty() {
            return Err(Error::Structural("a complex needs at least one facet".into()));
        }
        let mut cleaned: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        for f in &facets {
            if f.is_empty() {
                return Err(Error::Structural("empty facet".into()));
            }
            let mut g = f.clone();
            g.sort_unstable();
            g.dedup();
            if g.len() != f.len() {
                return Err(Error::Structural(format!(
                    "facet {:?} lists a vertex twice",
                    one_based(f)
                )));
            }
            if *g.last().unwrap() >= n {
                return Err(Error::Structural(format!(
                    "facet {:?} uses a vertex beyond n = {n}",
                    one_based(&g)
                )));
            }
            cleaned.push(g);
        }
        for a in 0..cleaned.len() {
            for b in 0..cleaned.len() {
                if a != b && subset(&cleaned[a], &cleaned[b]) {
                    return Err(Error::Structural(format!(
                        "facet {:?} is contained in facet {:?}; facets must be maximal",
                        one_based(&cleaned[a]),
                        one_based(&cleaned[b])
                    )));
                }
            }
        }
        let mut covered = vec![false; n];
        for f in &cleaned {
            for &v in f {
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Error::Structural(format!(
                "vertex {} lies in no facet; drop isolated vertices first",
                v + 1
            )));
        }
        Ok(SimplicialComplex { n, facets: cleaned })
    }

    /// Parse the JSON file format `{ "n": ..., "facets": [[1-based], ...] }`.
    /// Isolated vertices are dropped and reported (1-based) in the second
    /// component.
    pub fn parse_json(text: &str) -> Result<(Self, Vec<usize>)> {
        #[derive(serde::Deserialize)]
        struct Raw {
            n: usize,
            facets: Vec<Vec<usize>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        let mut zero_based: Vec<Vec<usize>> = Vec::with_capacity(raw.facets.len());
        for f in &raw.facets {
            let mut g = Vec::with_capacity(f.len());
            for &v in f {
                if v == 0 || v > raw.n {
                    return Err(Error::Parse(format!(
                        "vertex {v} out of range 1..={}",
                        raw.n
                    )));
                }
                g.push(v - 1);
            }
            zero_based.push(g);
        }
        let mut covered = vec![false; raw.n];
        for f in &zero_based {
            for &v in f {
                covered[v] = true;
            }
        }
        let dropped: Vec<usize> = (0..raw.n).filter(|&v| !covered[v]).map(|v| v + 1).collect();
        let map: Vec<usize> = (0..raw.n).filter(|&v| covered[v]).collect();
        let mut renumber = vec![usize::MAX; raw.n];
        for (new, &old) in map.iter().enumerate() {
            renumber[old] = new;
        }
        let facets = zero_based
            .into_iter()
            .map(|f| f.into_iter().map(|v| renumber[v]).collect())
            .collect();
        match SimplicialComplex::new(map.len(), facets) {
            Ok(complex) => Ok((complex, dropped)),
            // Structural defects in a file are parse rejections, with the
            // diagnostic (e.g. the nested facet pair) passed through.
            Err(Error::Structural(msg)) => Err(Error::Parse(msg)),
            Err(other) => Err(other),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "facets": self.facets.iter().map(|f| one_based(f)).collect::<Vec<_>>(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> &[usize] {
        &self.facets[i]
    }

    /// `max |F| - 1` over facets.
    pub fn dimension(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap() - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// One squarefree generator per facet.
    pub fn facet_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            self.n,
            self.facets
                .iter()
                .map(|f| Monomial::squarefree(f.iter().copied(), self.n))
                .collect(),
        )
        .expect("facets share the ambient")
    }

    /// A facet is a good leaf when its intersections with all facets form a
    /// chain under inclusion.
    pub fn is_good_leaf(&self, facet_index: usize) -> Result<bool> {
        if facet_index >= self.facets.len() {
            return Err(Error::Structural(format!(
                "facet index {facet_index} out of range"
            )));
        }
        Ok(good_leaf_in(&self.facets, facet_index))
    }

    /// Greedy good-leaf ordering: repeatedly remove a good leaf (lowest facet
    /// index on ties) and place it last. Succeeds exactly on simplicial
    /// forests.
    pub fn good_leaf_order(&self) -> Option<Vec<usize>> {
        let mut remaining: Vec<usize> = (0..self.facets.len()).collect();
        let mut order_rev: Vec<usize> = Vec::with_capacity(remaining.len());
        while remaining.len() > 1 {
            let live: Vec<Vec<usize>> = remaining
                .iter()
                .map(|&i| self.facets[i].clone())
                .collect();
            let found = (0..remaining.len()).find(|&k| good_leaf_in(&live, k))?;
            order_rev.push(remaining.remove(found));
        }
        order_rev.push(remaining[0]);
        order_rev.reverse();
        Some(order_rev)
    }

    pub fn is_forest(&self) -> bool {
        self.good_leaf_order().is_some()
    }

    /// Exhaustive reference check used to validate the greedy construction on
    /// small inputs: does any permutation of the facets form a good leaf
    /// ordering?
    pub fn has_good_leaf_order_exhaustive(&self) -> bool {
        let r = self.facets.len();
        let mut perm: Vec<usize> = (0..r).collect();
        permutations_any(&mut perm, 0, &mut |p| {
            (2..=r).all(|len| {
                let prefix: Vec<Vec<usize>> =
                    p[..len].iter().map(|&i| self.facets[i].clone()).collect();
                good_leaf_in(&prefix, len - 1)
            })
        })
    }

    /// Validate that `order` is a good leaf ordering of the facets.
    pub fn is_good_leaf_order(&self, order: &[usize]) -> bool {
        if order.len() != self.facets.len() {
            return false;
        }
        let mut seen = vec![false; self.facets.len()];
        for &i in order {
            if i >= self.facets.len() || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        (2..=order.len()).all(|len| {
            let prefix: Vec<Vec<usize>> = order[..len]
                .iter()
                .map(|&i| self.facets[i].clone())
                .collect();
            good_leaf_in(&prefix, len - 1)
        })
    }

    /// Adjacency on facets: an edge where `|G ∩ H| = |H| - 1` (codimension
    /// one in the pure case).
    fn codim_one_adjacency(&self) -> Vec<Vec<usize>> {
        let r = self.facets.len();
        let mut adj = vec![Vec::new(); r];
        for a in 0..r {
            for b in 0..r {
                if a != b
                    && intersection_size(&self.facets[a], &self.facets[b])
                        == self.facets[b].len() - 1
                {
                    adj[a].push(b);
                }
            }
        }
        adj
    }

    /// Connectivity in codimension one; defined here for pure complexes only.
    pub fn is_connected_codim_one(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::Precondition(
                "codimension-one connectivity is checked on pure complexes".into(),
            ));
        }
        let adj = self.codim_one_adjacency();
        let mut seen = vec![false; self.facets.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok(seen.iter().all(|&s| s))
    }

    fn require_distance_hypotheses(&self) -> Result<()> {
        if !self.is_pure() {
            return Err(Error::Precondition("facet distance requires a pure complex".into()));
        }
        if !self.is_forest() {
            return Err(Error::Precondition("facet distance requires a simplicial forest".into()));
        }
        if !self.is_connected_codim_one()? {
            return Err(Error::Precondition(
                "facet distance requires connectivity in codimension one".into(),
            ));
        }
        Ok(())
    }

    /// The unique irredundant proper chain between two facets of a pure
    /// forest connected in codimension one. On small complexes uniqueness is
    /// re-verified by exhaustive enumeration.
    pub fn irredundant_proper_chain(&self, g: usize, h: usize) -> Result<Vec<usize>> {
        self.require_distance_hypotheses()?;
        if g >= self.facets.len() || h >= self.facets.len() {
            return Err(Error::Structural("facet index out of range".into()));
        }
        let adj = self.codim_one_adjacency();
        let chain = bfs_path(&adj, g, h).ok_or_else(|| {
            Error::InvariantViolation("codim-1 connected but no proper chain found".into())
        })?;
        if self.facets.len() <= 8 {
            let all = all_irredundant_chains(self, &adj, g, h);
            if all.len() != 1 {
                return Err(Error::InvariantViolation(format!(
                    "expected a unique irredundant proper chain between {g} and {h}, found {}",
                    all.len()
                )));
            }
            if all[0] != chain {
                return Err(Error::InvariantViolation(
                    "shortest proper chain differs from the unique irredundant one".into(),
                ));
            }
        }
        Ok(chain)
    }

    /// Length of the irredundant proper chain; `dist(G, G) = 0`.
    pub fn distance(&self, g: usize, h: usize) -> Result<usize> {
        Ok(self.irredundant_proper_chain(g, h)?.len() - 1)
    }

    /// The intersection property: `dim(G ∩ H) = dim Δ − dist(G, H)` for all
    /// facet pairs. Failed hypotheses fold into a reason code instead of an
    /// error.
    pub fn intersection_property(&self) -> IntersectionStatus {
        if !self.is_pure() {
            return IntersectionStatus::NotPure;
        }
        if !self.is_forest() {
            return IntersectionStatus::NotForest;
        }
        if !self.is_connected_codim_one().expect("pure checked") {
            return IntersectionStatus::NotCodimOneConnected;
        }
        let d = self.dimension() as i64;
        for g in 0..self.facets.len() {
            for h in (g + 1)..self.facets.len() {
                let dist = self.distance(g, h).expect("hypotheses verified") as i64;
                let dim_meet = intersection_size(&self.facets[g], &self.facets[h]) as i64 - 1;
                if dim_meet != d - dist {
                    return IntersectionStatus::PairFailure(g, h);
                }
            }
        }
        IntersectionStatus::Satisfied
    }

    /// An ordering that is simultaneously a good leaf ordering and has
    /// consecutive facets at distance one. Exists whenever the intersection
    /// property holds; the construction peels a good leaf, then steps to a
    /// distance-one neighbour that keeps a free vertex in the remainder.
    pub fn adjacent_good_leaf_order(&self) -> Result<Vec<usize>> {
        if !self.intersection_property().holds() {
            return Err(Error::Precondition(
                "adjacent good leaf order requires the intersection property".into(),
            ));
        }
        let r = self.facets.len();
        let mut order_rev: Vec<usize> = Vec::with_capacity(r);
        let mut remaining: Vec<usize> = (0..r).collect();

        // Last facet: any good leaf, lowest index on ties.
        let live: Vec<Vec<usize>> = remaining.iter().map(|&i| self.facets[i].clone()).collect();
        let first = (0..remaining.len())
            .find(|&k| good_leaf_in(&live, k))
            .ok_or_else(|| Error::InvariantViolation("forest without a good leaf".into()))?;
        let mut current = remaining.remove(first);
        order_rev.push(current);

        while !remaining.is_empty() {
            let next = remaining
                .iter()
                .position(|&cand| {
                    intersection_size(&self.facets[cand], &self.facets[current])
                        == self.facets[current].len() - 1
                        && has_free_vertex_among(&self.facets, &remaining, cand)
                })
                .ok_or_else(|| {
                    Error::InvariantViolation(
                        "no distance-one neighbour with a free vertex; construction failed".into(),
                    )
                })?;
            current = remaining.remove(next);
            order_rev.push(current);
        }
        order_rev.reverse();

        if !self.is_good_leaf_order(&order_rev) {
            return Err(Error::InvariantViolation(
                "constructed ordering is not a good leaf ordering".into(),
            ));
        }
        for w in order_rev.windows(2) {
            if self.distance(w[0], w[1])? != 1 {
                return Err(Error::InvariantViolation(
                    "constructed ordering has a consecutive pair at distance > 1".into(),
                ));
            }
        }
        Ok(order_rev)
    }

    /// Exhaustively verify the two structural consequences of an adjacent
    /// good-leaf ordering:
    ///
    /// (a) each vertex occupies a contiguous block of facets in the order;
    /// (b) for `j < i` there is `k` in `[j, i)` with `|F_k ∩ F_i| = |F_i| - 1`
    ///     and `F_j ∩ F_k ⊄ F_i`.
    pub fn ordering_consequences_check(&self, order: &[usize]) -> bool {
        let r = order.len();
        if r != self.facets.len() {
            return false;
        }
        // (a) contiguous occurrences per vertex
        for v in 0..self.n {
            let occurrences: Vec<usize> = (0..r)
                .filter(|&pos| self.facets[order[pos]].binary_search(&v).is_ok())
                .collect();
            if let (Some(&first), Some(&last)) = (occurrences.first(), occurrences.last()) {
                if occurrences.len() != last - first + 1 {
                    return false;
                }
            }
        }
        // (b)
        for i in 1..r {
            for j in 0..i {
                let fi = &self.facets[order[i]];
                let fj = &self.facets[order[j]];
                let found = (j..i).any(|k| {
                    let fk = &self.facets[order[k]];
                    intersection_size(fk, fi) == fi.len() - 1
                        && !subset(&intersect(fj, fk), fi)
                });
                if !found {
                    return false;
                }
            }
        }
        true
    }
}

fn one_based(f: &[usize]) -> Vec<usize> {
    f.iter().map(|&v| v + 1).collect()
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}

/// Good-leaf test for `facets[index]` inside the subcomplex `facets`.
fn good_leaf_in(facets: &[Vec<usize>], index: usize) -> bool {
    let mut meets: Vec<Vec<usize>> = facets
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != index)
        .map(|(_, f)| intersect(&facets[index], f))
        .collect();
    meets.sort_by_key(|m| m.len());
    meets
        .windows(2)
        .all(|w| subset(&w[0], &w[1]))
}

fn has_free_vertex_among(facets: &[Vec<usize>], remaining: &[usize], candidate: usize) -> bool {
    facets[candidate].iter().any(|&v| {
        remaining
            .iter()
            .filter(|&&i| facets[i].binary_search(&v).is_ok())
            .count()
            == 1
    })
}

fn bfs_path(adj: &[Vec<usize>], from: usize, to: usize) -> Option<Vec<usize>> {
    if from == to {
        return Some(vec![from]);
    }
    let mut prev = vec![usize::MAX; adj.len()];
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = v;
                if w == to {
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

/// Every irredundant proper chain between two facets, by exhaustive search
/// over simple paths in the codim-1 adjacency graph.
fn all_irredundant_chains(
    complex: &SimplicialComplex,
    adj: &[Vec<usize>],
    from: usize,
    to: usize,
) -> Vec<Vec<usize>> {
    let mut all_paths = Vec::new();
    let mut stack = vec![from];
    let mut used = vec![false; complex.facet_count()];
    used[from] = true;
    fn dfs(
        v: usize,
        to: usize,
        adj: &[Vec<usize>],
        stack: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == to {
            out.push(stack.clone());
            return;
        }
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                stack.push(w);
                dfs(w, to, adj, stack, used, out);
                stack.pop();
                used[w] = false;
            }
        }
    }
    dfs(from, to, adj, &mut stack, &mut used, &mut all_paths);
    all_paths
        .into_iter()
        .filter(|path| is_irredundant(complex, path))
        .collect()
}

/// A proper chain is irredundant when no proper subsequence (keeping the two
/// endpoints) is itself a proper chain.
fn is_irredundant(complex: &SimplicialComplex, path: &[usize]) -> bool {
    let len = path.len();
    if len <= 2 {
        return true;
    }
    let inner = len - 2;
    // Every proper subset of the interior, tested as a subsequence.
    for mask in 0..(1u32 << inner) - 1 {
        let mut sub = vec![path[0]];
        for k in 0..inner {
            if mask >> k & 1 == 1 {
                sub.push(path[k + 1]);
            }
        }
        sub.push(path[len - 1]);
        let proper = sub.windows(2).all(|w| {
            intersection_size(complex.facet(w[0]), complex.facet(w[1]))
                == complex.facet(w[1]).len() - 1
        });
        if proper {
            return false;
        }
    }
    true
}

fn permutations_any(perm: &mut Vec<usize>, k: usize, test: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return test(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations_any(perm, k + 1, test) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    fn path3() -> SimplicialComplex {
        complex(4, &[&[0, 1], &[1, 2], &[2, 3]])
    }

    fn triangle() -> SimplicialComplex {
        complex(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    fn pure_path_2dim() -> SimplicialComplex {
        complex(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]])
    }

    #[test]
    fn dimension_and_purity() {
        let c = complex(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(c.dimension(), 2);
        assert!(c.is_pure());
        let c = complex(4, &[&[0, 1], &[1, 2, 3]]);
        assert_eq!(c.dimension(), 2);
        assert!(!c.is_pure());
        let c = complex(1, &[&[0]]);
        assert_eq!(c.dimension(), 0);
        assert!(c.is_pure());
    }

    #[test]
    fn nested_facets_rejected_with_pair() {
        let err = SimplicialComplex::new(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("[1, 2]") && msg.contains("[1, 2, 3]"), "{msg}");
    }

    #[test]
    fn facet_ideal_examples() {
        let c = complex(3, &[&[0, 1], &[1, 2]]);
        let gens: Vec<String> = c.facet_ideal().generators().iter().map(|m| m.to_string()).collect();
        assert_eq!(gens, vec!["x1*x2", "x2*x3"]);
        assert_eq!(triangle().facet_ideal().num_generators(), 3);
    }

    #[test]
    fn good_leaf_examples() {
        let p = path3();
        assert!(p.is_good_leaf(0).unwrap());
        assert!(!p.is_good_leaf(1).unwrap());
        assert!(!triangle().is_good_leaf(0).unwrap());
        let single = complex(3, &[&[0, 1, 2]]);
        assert!(single.is_good_leaf(0).unwrap());
    }

    #[test]
    fn forest_recognition_matches_exhaustive() {
        assert!(path3().is_forest());
        assert!(path3().has_good_leaf_order_exhaustive());
        assert!(!triangle().is_forest());
        assert!(!triangle().has_good_leaf_order_exhaustive());
        let single = complex(2, &[&[0, 1]]);
        assert!(single.is_forest());
    }

    #[test]
    fn good_leaf_order_is_valid() {
        let p = path3();
        let order = p.good_leaf_order().unwrap();
        assert!(p.is_good_leaf_order(&order));
    }

    #[test]
    fn codim_one_connectivity() {
        assert!(pure_path_2dim().is_connected_codim_one().unwrap());
        let gap = complex(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(!gap.is_connected_codim_one().unwrap());
        let single = complex(2, &[&[0, 1]]);
        assert!(single.is_connected_codim_one().unwrap());
        let impure = complex(4, &[&[0, 1], &[1, 2, 3]]);
        assert!(impure.is_connected_codim_one().is_err());
    }

    #[test]
    fn distances_and_chains() {
        let c = pure_path_2dim();
        let chain = c.irredundant_proper_chain(0, 2).unwrap();
        assert_eq!(chain, vec![0, 1, 2]);
        assert_eq!(c.distance(0, 2).unwrap(), 2);
        assert_eq!(c.distance(0, 1).unwrap(), 1);
        assert_eq!(c.distance(1, 1).unwrap(), 0);
        let gap = complex(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(gap.distance(0, 1).is_err());
    }

    #[test]
    fn intersection_property_examples() {
        assert!(pure_path_2dim().intersection_property().holds());
        let gap = complex(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(
            gap.intersection_property(),
            IntersectionStatus::NotCodimOneConnected
        );
        let single = complex(3, &[&[0, 1, 2]]);
        assert!(single.intersection_property().holds());
        assert_eq!(triangle().intersection_property(), IntersectionStatus::NotForest);
        let impure = complex(4, &[&[0, 1], &[1, 2, 3]]);
        assert_eq!(impure.intersection_property(), IntersectionStatus::NotPure);
    }

    #[test]
    fn adjacent_order_on_paths() {
        let p = path3();
        let order = p.adjacent_good_leaf_order().unwrap();
        // Must be the path order or its reverse.
        assert!(order == vec![0, 1, 2] || order == vec![2, 1, 0]);
        assert!(p.ordering_consequences_check(&order));

        let t = pure_path_2dim();
        let order = t.adjacent_good_leaf_order().unwrap();
        for w in order.windows(2) {
            assert_eq!(intersection_size(t.facet(w[0]), t.facet(w[1])), 2);
        }
        assert!(t.ordering_consequences_check(&order));

        let single = complex(3, &[&[0, 1, 2]]);
        assert_eq!(single.adjacent_good_leaf_order().unwrap(), vec![0]);
    }

    #[test]
    fn adjacent_order_requires_intersection_property() {
        let gap = complex(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert!(matches!(
            gap.adjacent_good_leaf_order(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn parse_drops_isolated_vertices() {
        let (c, dropped) =
            SimplicialComplex::parse_json(r#"{"n": 5, "facets": [[1,2],[2,3]]}"#).unwrap();
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(dropped, vec![4, 5]);
        let bad = SimplicialComplex::parse_json(r#"{"n": 3, "facets": [[1,2],[1,2,3]]}"#);
        assert!(bad.is_err());
    }
}
