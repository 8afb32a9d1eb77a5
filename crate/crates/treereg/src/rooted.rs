//! Rooted trees and forests, their t-path ideals, and the regularity
//! machinery built on them: the perfect-tree closed form, the broom closed
//! form, a general upper bound, a recursive exact computation driven by leaf
//! decompositions, and the explicit good-leaf facet ordering of a broom's
//! path complex.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// A rooted tree with edges directed away from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
    level: Vec<u32>,
    height: u32,
}

/// Disjoint rooted trees; the t-path ideal of a forest is the sum of the
/// component ideals in a common ambient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RootedForest {
    pub trees: Vec<RootedTree>,
}

/// Per-tree statistics gathered in one pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStats {
    pub height: u32,
    pub levels: Vec<u32>,
    pub outdegrees: Vec<usize>,
    pub leaves: Vec<usize>,
    /// Leaves per level, indices `0..=height`.
    pub leaf_count_by_level: Vec<usize>,
    /// Number of vertices at the top level.
    pub top_level_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Every leaf sits at the top level.
    pub perfect: bool,
    /// `Some(k)` when every vertex strictly below the top level has exactly
    /// `k` children; undefined for a single vertex.
    pub knary: Option<u32>,
    /// Handle of the broom (vertices level by level) when every vertex off
    /// that handle is a leaf.
    pub broom_handle: Option<Vec<usize>>,
}

impl Classification {
    pub fn is_broom(&self) -> bool {
        self.broom_handle.is_some()
    }
}

/// The decomposition of a tree at a top-level leaf `z`: the unique t-vertex
/// path ending in `z`, the parent of that path when it exists, the remainder
/// tree, and the side forests hanging off the path.
#[derive(Clone, Debug)]
pub struct LeafDecomposition {
    pub leaf: usize,
    /// `x_1(z), ..., x_t(z) = z`.
    pub path: Vec<usize>,
    /// `x_0(z)`, the parent of `x_1(z)`, when it exists.
    pub path_parent: Option<usize>,
    /// Vertices of the remainder tree (empty when the path starts at the root
    /// and has no parent side).
    pub remainder: Vec<usize>,
    /// `side[j]` holds the vertices of the forest rooted at the children of
    /// `x_j(z)` other than `x_{j+1}(z)`, for `j = 0..t-1`.
    pub side: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::Structural("a tree needs at least one vertex".into()));
        }
        let roots: Vec<usize> = parent
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(v, _)| v)
            .collect();
        if roots.len() != 1 {
            return Err(Error::Structural(format!(
                "expected exactly one root, found {}",
                roots.len()
            )));
        }
        let root = roots[0];
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::Structural(format!("parent {p} out of range")));
                }
                children[p].push(v);
            }
        }
        for c in &mut children {
            c.sort_unstable();
        }
        let mut level = vec![u32::MAX; n];
        let mut stack = vec![root];
        level[root] = 0;
        let mut visited = 1;
        while let Some(v) = stack.pop() {
            for &c in &children[v] {
                if level[c] != u32::MAX {
                    return Err(Error::Structural("parent structure has a cycle".into()));
                }
                level[c] = level[v] + 1;
                visited += 1;
                stack.push(c);
            }
        }
        if visited != n {
            return Err(Error::Structural(
                "parent structure is not connected to the root".into(),
            ));
        }
        let height = level.iter().copied().max().unwrap();
        Ok(RootedTree { parent, children, root, level, height })
    }

    /// Parse `{ "n": ..., "root": ..., "parent": [...] }` with -1 at the root
    /// and 0-based vertices.
    pub fn parse_json(text: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Raw {
            n: usize,
            root: usize,
            parent: Vec<i64>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.parent.len() != raw.n {
            return Err(Error::Parse(format!(
                "parent array has {} entries, expected n = {}",
                raw.parent.len(),
                raw.n
            )));
        }
        let parent: Vec<Option<usize>> = raw
            .parent
            .iter()
            .map(|&p| if p < 0 { None } else { Some(p as usize) })
            .collect();
        let tree = RootedTree::from_parents(parent)?;
        if tree.root != raw.root {
            return Err(Error::Parse(format!(
                "declared root {} disagrees with the parent array root {}",
                raw.root, tree.root
            )));
        }
        Ok(tree)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.vertex_count(),
            "root": self.root,
            "parent": self.parent.iter().map(|p| p.map_or(-1i64, |v| v as i64)).collect::<Vec<_>>(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn level(&self, v: usize) -> u32 {
        self.level[v]
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.children[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn stats(&self) -> TreeStats {
        let n = self.vertex_count();
        let mut leaf_count_by_level = vec![0usize; self.height as usize + 1];
        let mut leaves = Vec::new();
        for v in 0..n {
            if self.is_leaf(v) {
                leaves.push(v);
                leaf_count_by_level[self.level[v] as usize] += 1;
            }
        }
        let top_level_count = (0..n).filter(|&v| self.level[v] == self.height).count();
        TreeStats {
            height: self.height,
            levels: self.level.clone(),
            outdegrees: (0..n).map(|v| self.outdegree(v)).collect(),
            leaves,
            leaf_count_by_level,
            top_level_count,
        }
    }

    pub fn is_perfect(&self) -> bool {
        (0..self.vertex_count()).all(|v| !self.is_leaf(v) || self.level[v] == self.height)
    }

    pub fn classify(&self) -> Classification {
        let perfect = self.is_perfect();
        let knary = if self.height == 0 {
            None
        } else {
            let below_top: Vec<usize> = (0..self.vertex_count())
                .filter(|&v| self.level[v] < self.height)
                .collect();
            let k = self.outdegree(below_top[0]) as u32;
            below_top
                .iter()
                .all(|&v| self.outdegree(v) as u32 == k)
                .then_some(k)
        };
        Classification { perfect, knary, broom_handle: self.broom_handle() }
    }

    /// The handle when this tree is a broom: the internal vertices must form
    /// a single descending chain and everything else must be a leaf.
    pub fn broom_handle(&self) -> Option<Vec<usize>> {
        let mut handle = vec![self.root];
        loop {
            let current = *handle.last().unwrap();
            let internal: Vec<usize> = self
                .children[current]
                .iter()
                .copied()
                .filter(|&c| !self.is_leaf(c))
                .collect();
            match internal.len() {
                0 => break,
                1 => handle.push(internal[0]),
                _ => return None,
            }
        }
        // Extend by a top-level leaf child to reach the full height.
        let current = *handle.last().unwrap();
        if let Some(&tip) = self.children[current].first() {
            handle.push(tip);
        }
        if handle.len() as u32 != self.height + 1 {
            return None;
        }
        Some(handle)
    }

    /// Preorder vertex list of the subtree rooted at `v`.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().copied());
        }
        out.sort_unstable();
        out
    }

    /// All directed paths on `t` vertices, each listed top-down. A path is
    /// determined by its bottom vertex, which must sit at level >= t - 1.
    pub fn t_paths(&self, t: u32) -> Vec<Vec<usize>> {
        assert!(t >= 1);
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            if self.level[v] + 1 >= t {
                let mut path = vec![v];
                let mut cur = v;
                for _ in 1..t {
                    cur = self.parent[cur].expect("level bound guarantees a parent");
                    path.push(cur);
                }
                path.reverse();
                out.push(path);
            }
        }
        out
    }

    /// The t-path ideal: one squarefree degree-t generator per directed path
    /// on `t` vertices; the zero ideal when no such path exists.
    pub fn t_path_ideal(&self, t: u32) -> MonomialIdeal {
        let n = self.vertex_count();
        MonomialIdeal::minimalize(
            n,
            self.t_paths(t)
                .into_iter()
                .map(|p| Monomial::squarefree(p, n))
                .collect(),
        )
        .expect("single ambient")
    }

    /// The simplicial complex whose facets are the t-vertex paths, on the
    /// covered vertices (second component maps new to original ids). The
    /// result is checked to be a simplicial forest.
    pub fn path_complex(&self, t: u32) -> Result<(SimplicialComplex, Vec<usize>)> {
        let paths = self.t_paths(t);
        if paths.is_empty() {
            return Err(Error::Precondition(format!(
                "no directed path on {t} vertices exists"
            )));
        }
        let mut covered = vec![false; self.vertex_count()];
        for p in &paths {
            for &v in p {
                covered[v] = true;
            }
        }
        let map: Vec<usize> = (0..self.vertex_count()).filter(|&v| covered[v]).collect();
        let mut renumber = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in map.iter().enumerate() {
            renumber[old] = new;
        }
        let facets: Vec<Vec<usize>> = paths
            .iter()
            .map(|p| p.iter().map(|&v| renumber[v]).collect())
            .collect();
        let complex = SimplicialComplex::new(map.len(), facets)?;
        if !complex.is_forest() {
            return Err(Error::InvariantViolation(
                "path complex of a rooted tree must be a simplicial forest".into(),
            ));
        }
        Ok((complex, map))
    }

    /// Remove leaves at levels below `t - 1` until none remain. The surviving
    /// tree generates the same t-path ideal up to unused variables; `None`
    /// when every vertex disappears.
    pub fn clean_form(&self, t: u32) -> Option<(RootedTree, Vec<usize>)> {
        let mut alive = vec![true; self.vertex_count()];
        loop {
            let mut removed = false;
            for v in 0..self.vertex_count() {
                if alive[v]
                    && self.level[v] + 1 < t
                    && self.children[v].iter().all(|&c| !alive[c])
                {
                    alive[v] = false;
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        let map: Vec<usize> = (0..self.vertex_count()).filter(|&v| alive[v]).collect();
        if map.is_empty() {
            return None;
        }
        let mut renumber = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in map.iter().enumerate() {
            renumber[old] = new;
        }
        let parent = map
            .iter()
            .map(|&old| self.parent[old].map(|p| renumber[p]))
            .collect();
        let tree = RootedTree::from_parents(parent).expect("clean form stays a tree");
        Some((tree, map))
    }

    /// Split an arbitrary vertex set into the components it induces, each as
    /// a rooted tree with its original vertex ids.
    pub fn extract_forest(&self, verts: &[usize]) -> Vec<(RootedTree, Vec<usize>)> {
        let mut keep = vec![false; self.vertex_count()];
        for &v in verts {
            keep[v] = true;
        }
        let roots: Vec<usize> = verts
            .iter()
            .copied()
            .filter(|&v| self.parent[v].map_or(true, |p| !keep[p]))
            .collect();
        let mut out = Vec::new();
        for &r in &roots {
            let mut ids = Vec::new();
            let mut stack = vec![r];
            while let Some(v) = stack.pop() {
                ids.push(v);
                stack.extend(self.children[v].iter().copied().filter(|&c| keep[c]));
            }
            ids.sort_unstable();
            let mut renumber = HashMap::new();
            for (new, &old) in ids.iter().enumerate() {
                renumber.insert(old, new);
            }
            let parent = ids
                .iter()
                .map(|&old| {
                    self.parent[old]
                        .filter(|p| keep[*p] && old != r)
                        .map(|p| renumber[&p])
                })
                .collect();
            let tree = RootedTree::from_parents(parent).expect("component is a tree");
            out.push((tree, ids));
        }
        out.sort_by_key(|(_, ids)| ids[0]);
        out
    }

    /// Decompose at a top-level leaf `z`: the unique path of `t` vertices
    /// ending at `z`, its parent if any, the remainder tree, and the side
    /// forests along the path.
    pub fn leaf_decomposition(&self, z: usize, t: u32) -> Result<LeafDecomposition> {
        if t < 1 {
            return Err(Error::Precondition("t must be positive".into()));
        }
        if !self.is_leaf(z) || self.level[z] != self.height {
            return Err(Error::Precondition(format!(
                "vertex {z} is not a leaf at the top level"
            )));
        }
        if self.height + 1 < t {
            return Err(Error::Precondition(format!(
                "height {} is below t - 1 = {}",
                self.height,
                t - 1
            )));
        }
        let mut path = vec![z];
        let mut cur = z;
        for _ in 1..t {
            cur = self.parent[cur].expect("height bound");
            path.push(cur);
        }
        path.reverse();
        let path_parent = self.parent[path[0]];
        let removed_root = path_parent.unwrap_or(path[0]);
        let removed = self.subtree(removed_root);
        let removed_set: std::collections::HashSet<usize> = removed.iter().copied().collect();
        let remainder: Vec<usize> = (0..self.vertex_count())
            .filter(|v| !removed_set.contains(v))
            .collect();
        let mut side = Vec::with_capacity(t as usize);
        for j in 0..t as usize {
            // side[j] hangs off x_j(z); empty when x_0 is absent and j = 0.
            let holder = if j == 0 {
                match path_parent {
                    Some(p) => p,
                    None => {
                        side.push(Vec::new());
                        continue;
                    }
                }
            } else {
                path[j - 1]
            };
            // children of x_j other than x_{j+1}
            let next_on_path = path[j];
            let mut verts = Vec::new();
            for &c in &self.children[holder] {
                if c != next_on_path {
                    verts.extend(self.subtree(c));
                }
            }
            verts.sort_unstable();
            side.push(verts);
        }
        // The removed subtree must split exactly into the path, the optional
        // parent, and the side forests.
        let mut rebuilt: Vec<usize> = path.clone();
        rebuilt.extend(path_parent);
        for s in &side {
            rebuilt.extend(s.iter().copied());
        }
        rebuilt.sort_unstable();
        if rebuilt != removed {
            return Err(Error::InvariantViolation(
                "leaf decomposition does not partition the removed subtree".into(),
            ));
        }
        Ok(LeafDecomposition { leaf: z, path, path_parent, remainder, side })
    }
}

impl RootedForest {
    pub fn new(trees: Vec<RootedTree>) -> Self {
        RootedForest { trees }
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(RootedTree::vertex_count).sum()
    }

    pub fn height(&self) -> Option<u32> {
        self.trees.iter().map(RootedTree::height).max()
    }

    /// Sum of the component path ideals, components embedded side by side in
    /// a common ambient.
    pub fn t_path_ideal(&self, t: u32) -> MonomialIdeal {
        let total = self.vertex_count();
        let mut gens = Vec::new();
        let mut offset = 0;
        for tree in &self.trees {
            for p in tree.t_paths(t) {
                gens.push(Monomial::squarefree(p.into_iter().map(|v| v + offset), total));
            }
            offset += tree.vertex_count();
        }
        MonomialIdeal::minimalize(total, gens).expect("single ambient")
    }
}

/// Sum of outdegrees over levels `from..=to`, with the convention that the
/// virtual level -1 contributes 1. This is the common shape of the
/// perfect-tree formulas at every admissible t.
fn outdegree_level_sum(tree: &RootedTree, from: i64, to: i64) -> i64 {
    let mut sum = 0i64;
    for i in from..=to {
        if i == -1 {
            sum += 1;
        } else if i >= 0 {
            sum += (0..tree.vertex_count())
                .filter(|&v| tree.level(v) as i64 == i)
                .map(|v| tree.outdegree(v) as i64)
                .sum::<i64>();
        }
    }
    sum
}

fn check_t_window(tree: &RootedTree, t: u32) -> Result<()> {
    let h = tree.height();
    if h < 1 {
        return Err(Error::Precondition("tree height must be at least 1".into()));
    }
    let lo = (h + 2) / 2; // ceil((h+1)/2)
    if t < lo || t > h + 1 {
        return Err(Error::Precondition(format!(
            "t = {t} outside the admissible window {lo}..={}",
            h + 1
        )));
    }
    Ok(())
}

/// Closed form for `reg(R/I_t)` of a perfect rooted tree with
/// `ceil((h+1)/2) <= t <= h+1`: the outdegree sum over levels `h-t..h-2`.
pub fn reg_formula_perfect(tree: &RootedTree, t: u32) -> Result<i64> {
    if !tree.is_perfect() {
        return Err(Error::Precondition("tree is not perfect".into()));
    }
    check_t_window(tree, t)?;
    let h = tree.height() as i64;
    Ok(outdegree_level_sum(tree, h - t as i64, h - 2))
}

/// Upper bound for `reg(R/I_t)` of an arbitrary rooted tree in the same t
/// window, evaluated on the clean form: the perfect-tree sum plus a penalty
/// for each leaf stranded strictly below the top.
pub fn reg_upper_bound_general(tree: &RootedTree, t: u32) -> Result<i64> {
    check_t_window(tree, t)?;
    let (clean, _) = tree
        .clean_form(t)
        .ok_or_else(|| Error::Precondition("clean form is empty".into()))?;
    let h = clean.height() as i64;
    let stats = clean.stats();
    let base = outdegree_level_sum(&clean, h - t as i64, h - 2);
    let penalty: i64 = (t as i64 - 1..=h - 2)
        .map(|i| (h - i - 1) * stats.leaf_count_by_level[i as usize] as i64)
        .sum();
    Ok(base + penalty)
}

/// Closed form for a broom: `(t-1) * ceil((h - t + 2) / (t + 1))`.
pub fn reg_broom(tree: &RootedTree, t: u32) -> Result<i64> {
    if tree.broom_handle().is_none() {
        return Err(Error::Precondition("tree is not a broom".into()));
    }
    let h = tree.height() as i64;
    let t = t as i64;
    if h < t - 1 {
        return Err(Error::Precondition(format!("broom height {h} is below t - 1")));
    }
    Ok((t - 1) * div_ceil(h - t + 2, t + 1))
}

fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    if a <= 0 {
        0
    } else {
        (a + b - 1) / b
    }
}

/// Memoizing calculator for the exact recursion
/// `reg(R/I_t(G)) = max( reg without the top leaf z,
///                       reg of the remainder + sum over side forests + t-1 )`
/// evaluated at a deterministic top-level leaf, with forests summing over
/// components. Results are cached on the canonical shape of each component.
pub struct RegCalculator {
    memo: Mutex<HashMap<(Vec<u8>, u32), i64>>,
}

impl Default for RegCalculator {
    fn default() -> Self {
        Self::new()
    }
}

impl RegCalculator {
    pub fn new() -> Self {
        RegCalculator { memo: Mutex::new(HashMap::new()) }
    }

    pub fn tree_regularity(&self, tree: &RootedTree, t: u32) -> Result<i64> {
        let verts: Vec<usize> = (0..tree.vertex_count()).collect();
        self.reg_of_vertex_set(tree, &verts, t)
    }

    pub fn forest_regularity(&self, forest: &RootedForest, t: u32) -> Result<i64> {
        let mut sum = 0;
        for tree in &forest.trees {
            sum += self.tree_regularity(tree, t)?;
        }
        Ok(sum)
    }

    /// Regularity of the quotient by the t-path ideal of the forest induced
    /// on `verts` inside `tree`.
    fn reg_of_vertex_set(&self, tree: &RootedTree, verts: &[usize], t: u32) -> Result<i64> {
        if verts.is_empty() {
            return Ok(0);
        }
        if t <= 1 {
            // I_1 is generated by every surviving variable.
            return Ok(0);
        }
        let mut sum = 0;
        for (component, _ids) in tree.extract_forest(verts) {
            sum += self.reg_component(&component, t)?;
        }
        Ok(sum)
    }

    fn reg_component(&self, tree: &RootedTree, t: u32) -> Result<i64> {
        if tree.height() + 1 < t {
            return Ok(0); // no t-vertex path
        }
        let key = (canonical_code(tree), t);
        if let Some(&v) = self.memo.lock().expect("memo poisoned").get(&key) {
            return Ok(v);
        }
        // Deterministic choice: the smallest top-level leaf.
        let z = (0..tree.vertex_count())
            .find(|&v| tree.level(v) == tree.height())
            .expect("tree has a top level");
        let decomposition = tree.leaf_decomposition(z, t)?;

        let without_z: Vec<usize> = (0..tree.vertex_count()).filter(|&v| v != z).collect();
        let branch_delete = self.reg_of_vertex_set(tree, &without_z, t)?;

        let mut branch_path = self.reg_of_vertex_set(tree, &decomposition.remainder, t)?;
        for (j, side) in decomposition.side.iter().enumerate() {
            branch_path += self.reg_of_vertex_set(tree, side, t - j as u32)?;
        }
        branch_path += t as i64 - 1;

        let value = branch_delete.max(branch_path);
        self.memo.lock().expect("memo poisoned").insert(key, value);
        Ok(value)
    }
}

/// Convenience wrapper with a fresh memo table.
pub fn quotient_regularity_recursive(tree: &RootedTree, t: u32) -> Result<i64> {
    RegCalculator::new().tree_regularity(tree, t)
}

/// The recursive upper bound obtained by maximising the path branch over all
/// top-level leaves and recursing on the tree with the whole top level
/// removed. Always at least the exact value.
pub fn alpha_bound(calc: &RegCalculator, tree: &RootedTree, t: u32) -> Result<i64> {
    if tree.height() + 1 < t {
        return Err(Error::Precondition(format!(
            "height {} is below t - 1 = {}",
            tree.height(),
            t - 1
        )));
    }
    if t <= 1 {
        return Ok(0);
    }
    let mut alpha = i64::MIN;
    for z in 0..tree.vertex_count() {
        if tree.level(z) != tree.height() {
            continue;
        }
        let d = tree.leaf_decomposition(z, t)?;
        let mut value = calc.reg_of_vertex_set(tree, &d.remainder, t)?;
        for (j, side) in d.side.iter().enumerate() {
            value += calc.reg_of_vertex_set(tree, side, t - j as u32)?;
        }
        value += t as i64 - 1;
        alpha = alpha.max(value);
    }
    let trimmed: Vec<usize> = (0..tree.vertex_count())
        .filter(|&v| tree.level(v) != tree.height())
        .collect();
    let trimmed_reg = calc.reg_of_vertex_set(tree, &trimmed, t)?;
    Ok(trimmed_reg.max(alpha))
}

/// Canonical shape code: children codes sorted recursively, so isomorphic
/// rooted trees share a key.
pub fn canonical_code(tree: &RootedTree) -> Vec<u8> {
    fn go(tree: &RootedTree, v: usize) -> Vec<u8> {
        let mut parts: Vec<Vec<u8>> = tree
            .children(v)
            .iter()
            .map(|&c| go(tree, c))
            .collect();
        parts.sort();
        let mut out = vec![b'('];
        for p in parts {
            out.extend(p);
        }
        out.push(b')');
        out
    }
    go(tree, tree.root())
}

/// The path complex of a broom together with its explicit good-leaf facet
/// ordering: facets run along the handle, and within one handle position the
/// bristle endpoints precede the handle endpoint.
///
/// The broom must already be clean for `t` (no leaf strictly below level
/// t-1), which is exactly the labelling the ordering is defined for.
pub fn broom_facet_order(tree: &RootedTree, t: u32) -> Result<(SimplicialComplex, Vec<usize>)> {
    let handle = tree
        .broom_handle()
        .ok_or_else(|| Error::Precondition("tree is not a broom".into()))?;
    let h = tree.height();
    if t < 2 || t > h + 1 {
        return Err(Error::Precondition(format!(
            "t = {t} outside 2..={} for this broom",
            h + 1
        )));
    }
    for v in 0..tree.vertex_count() {
        if tree.is_leaf(v) && tree.level(v) + 1 < t {
            return Err(Error::Precondition(format!(
                "broom has a leaf at level {} below t - 1; take the clean form first",
                tree.level(v)
            )));
        }
    }
    let on_handle = {
        let mut mask = vec![false; tree.vertex_count()];
        for &v in &handle {
            mask[v] = true;
        }
        mask
    };
    let mut bristles: Vec<Vec<usize>> = vec![Vec::new(); h as usize + 1];
    for v in 0..tree.vertex_count() {
        if !on_handle[v] {
            bristles[tree.level(v) as usize].push(v);
        }
    }
    for b in &mut bristles {
        b.sort_unstable();
    }
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for i in 0..=(h + 1 - t) as usize {
        let spine: Vec<usize> = handle[i..i + t as usize - 1].to_vec();
        let end_level = i + t as usize - 1;
        // Larger bristle index first, handle endpoint last.
        for &b in bristles[end_level].iter().rev() {
            let mut f = spine.clone();
            f.push(b);
            facets.push(f);
        }
        let mut f = spine;
        f.push(handle[end_level]);
        facets.push(f);
    }
    let complex = SimplicialComplex::new(tree.vertex_count(), facets)?;
    let order: Vec<usize> = (0..complex.facet_count()).collect();
    if !complex.is_good_leaf_order(&order) {
        return Err(Error::InvariantViolation(
            "broom facet ordering failed the good-leaf check".into(),
        ));
    }
    // Sanity: the facets are exactly the t-vertex paths.
    let (paths, map) = tree.path_complex(t)?;
    let mut a: Vec<Vec<usize>> = complex.facets().to_vec();
    let mut b: Vec<Vec<usize>> = paths
        .facets()
        .iter()
        .map(|f| {
            let mut g: Vec<usize> = f.iter().map(|&v| map[v]).collect();
            g.sort_unstable();
            g
        })
        .collect();
    a.sort();
    b.sort();
    if a != b {
        return Err(Error::InvariantViolation(
            "broom facets disagree with the path complex".into(),
        ));
    }
    Ok((complex, order))
}
