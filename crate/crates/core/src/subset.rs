//! Subset vertex graphs: graphs whose vertices are nonempty subsets of a base
//! vertex set.
//!
//! A type I graph is determined by its host: every nonempty subset is a
//! vertex, and two distinct subsets `A`, `B` are joined when some `a` in `A`
//! and `b` in `B` with `a != b` are adjacent in the host. Sharing elements
//! alone never creates an edge. A type II graph is any simple graph on a
//! family of subsets; those are counted as labeled graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{too_large, Error, Result};
use crate::graph::{Kind, NeutroGraph};

pub const DEFAULT_TYPE_ONE_CAP: usize = 10;
/// Largest base size accepted by the closed-form counts.
pub const MAX_COUNT_BASE: u32 = 12;
/// Largest subset universe whose labeled trees are listed explicitly.
pub const DEFAULT_TREE_CAP: usize = 7;
pub const MAX_ISO_VERTICES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetVertexGraph {
    base: Vec<String>,
    /// Subset masks over `base`, ascending.
    vertices: Vec<u64>,
    /// Index pairs `(i, j)` with `i < j`.
    edges: BTreeSet<(usize, usize)>,
    root: Option<usize>,
}

impl SubsetVertexGraph {
    /// A graph on the given subsets of `base` (bit `i` of a mask stands for
    /// `base[i]`).
    pub fn new(base: Vec<String>, vertices: Vec<u64>, edges: &[(u64, u64)]) -> Result<Self> {
        if base.len() > 63 {
            return Err(too_large("subset base", base.len(), 63));
        }
        let full = full_mask(base.len());
        let mut vs = vertices;
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset("duplicate subset vertex".into()));
        }
        if let Some(&bad) = vs.iter().find(|&&m| m == 0 || m & !full != 0) {
            return Err(Error::InvalidSubset(format!("mask {bad:#b} is not a nonempty subset of the base")));
        }
        let mut g = SubsetVertexGraph { base, vertices: vs, edges: BTreeSet::new(), root: None };
        for &(a, b) in edges {
            let i = g.position(a).ok_or_else(|| Error::InvalidSubset(format!("{} is not a vertex", g.mask_label(a))))?;
            let j = g.position(b).ok_or_else(|| Error::InvalidSubset(format!("{} is not a vertex", g.mask_label(b))))?;
            if i == j {
                return Err(Error::SelfLoop(g.mask_label(a)));
            }
            if !g.edges.insert((i.min(j), i.max(j))) {
                return Err(Error::DuplicateEdge(g.mask_label(a), g.mask_label(b)));
            }
        }
        Ok(g)
    }

    /// Reads a subset vertex graph from an ordinary graph whose vertex ids
    /// are brace-sets such as `{v1,v2}` over `base`.
    pub fn from_graph(g: &NeutroGraph, base: Vec<String>) -> Result<Self> {
        let masks = g.vertices().iter().map(|v| parse_subset(&v.id, &base)).collect::<Result<Vec<_>>>()?;
        let edges: Vec<(u64, u64)> = g.edges().iter().map(|e| (masks[e.a], masks[e.b])).collect();
        Self::new(base, masks, &edges)
    }

    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn position(&self, mask: u64) -> Option<usize> {
        self.vertices.binary_search(&mask).ok()
    }

    pub fn has_edge(&self, a: u64, b: u64) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => self.edges.contains(&(i.min(j), i.max(j))),
            _ => false,
        }
    }

    pub fn label(&self, i: usize) -> String {
        self.mask_label(self.vertices[i])
    }

    pub fn mask_label(&self, mask: u64) -> String {
        subset_label(mask, &self.base)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == i || b == i).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// As a plain all-real graph with brace-set ids.
    pub fn to_graph(&self) -> NeutroGraph {
        let mut g = NeutroGraph::new();
        for i in 0..self.vertex_count() {
            g.add_vertex(self.label(i), Kind::Real).expect("distinct subsets have distinct labels");
        }
        for &(a, b) in &self.edges {
            g.add_edge_ix(a, b, Kind::Real).expect("simple");
        }
        g
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `{v1,v2}` for the subset with bits 0 and 1 over base `[v1, v2, ..]`.
pub fn subset_label(mask: u64, base: &[String]) -> String {
    let parts: Vec<&str> = (0..base.len()).filter(|&i| mask >> i & 1 == 1).map(|i| base[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn parse_subset(label: &str, base: &[String]) -> Result<u64> {
    let bad = |why: &str| Error::InvalidSubset(format!("`{label}`: {why}"));
    let inner = label
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| bad("expected a brace-set such as {v1,v2}"))?;
    let mut mask = 0u64;
    for item in inner.split(',') {
        let item = item.trim();
        let i = base.iter().position(|b| b == item).ok_or_else(|| bad(&format!("`{item}` is not in the base")))?;
        if mask >> i & 1 == 1 {
            return Err(bad("repeated element"));
        }
        mask |= 1 << i;
    }
    Ok(mask)
}

/// The type I subset vertex graph of `g`. Vertex kinds and edge kinds of the
/// host are ignored.
pub fn build_type_one(g: &NeutroGraph, cap: usize) -> Result<SubsetVertexGraph> {
    let n = g.vertex_count();
    if n > cap || n > 63 {
        return Err(too_large("host for a type I subset vertex graph", n, cap.min(63)));
    }
    let base: Vec<String> = g.vertices().iter().map(|v| v.id.clone()).collect();
    let neighbours: Vec<u64> = (0..n).map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w)).collect();
    let vertices: Vec<u64> = (1..=full_mask(n)).collect();
    // reach[A] = union of the host neighbourhoods of A's elements
    let reach: Vec<u64> = vertices
        .iter()
        .map(|&a| (0..n).filter(|&i| a >> i & 1 == 1).fold(0u64, |m, i| m | neighbours[i]))
        .collect();
    let mut edges = BTreeSet::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            // a host edge {x, y} has x != y, so reach[A] & B != 0 is exactly
            // the existence of a in A, b in B with a ~ b
            if reach[i] & vertices[j] != 0 {
                edges.insert((i, j));
            }
        }
    }
    Ok(SubsetVertexGraph { base, vertices, edges, root: None })
}

fn subset_universe(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidSubset("base must have at least one vertex".into()));
    }
    if n > MAX_COUNT_BASE {
        return Err(too_large("base for closed-form counting", n, MAX_COUNT_BASE));
    }
    Ok((BigUint::one() << n) - 1u32)
}

fn pair_count(n: u32) -> Result<BigUint> {
    let m = subset_universe(n)?;
    Ok(&m * (&m - 1u32) / 2u32)
}

/// Labeled type II graphs over a base of size `n`: `2^M` with
/// `M = m(m-1)/2` and `m = 2^n - 1`.
pub fn count_type_two(n: u32) -> Result<BigUint> {
    let pairs = pair_count(n)?;
    let shift = usize::try_from(&pairs).expect("bounded by MAX_COUNT_BASE");
    Ok(BigUint::one() << shift)
}

/// Labeled type II graphs with exactly `r` edges: `C(M, r)`.
pub fn count_type_two_with_edges(n: u32, r: &BigUint) -> Result<BigUint> {
    Ok(binomial(&pair_count(n)?, r))
}

pub fn binomial(n: &BigUint, k: &BigUint) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = std::cmp::min(k.clone(), n - k);
    let mut acc = BigUint::one();
    let mut i = BigUint::zero();
    while i < k {
        acc *= n - &i;
        i += 1u32;
        acc /= &i;
    }
    acc
}

/// `2^n - 2`: a subset vertex can be joined to every other one.
pub fn max_subset_degree(n: u32) -> Result<BigUint> {
    Ok(subset_universe(n)? - 1u32)
}

/// Labeled trees on `m` vertices, `m^(m-2)` (and 1 for `m <= 2`).
pub fn labeled_tree_count(m: u64) -> BigUint {
    match m {
        0..=2 => BigUint::one(),
        _ => BigUint::from(m).pow((m - 2) as u32),
    }
}

/// Labeled trees on the `2^n - 1` nonempty subsets. Fixing the full set as
/// the root does not change the count.
pub fn count_labeled_trees(n: u32) -> Result<BigUint> {
    let m = u64::try_from(&subset_universe(n)?).expect("bounded");
    Ok(labeled_tree_count(m))
}

/// Every labeled tree on vertices `0..m`, as sorted edge lists, decoded from
/// Prüfer sequences in lexicographic order.
pub fn enumerate_labeled_trees(m: usize) -> Vec<Vec<(usize, usize)>> {
    match m {
        0 => return Vec::new(),
        1 => return vec![Vec::new()],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    std::iter::repeat_n(0..m, m - 2).multi_cartesian_product().map(|seq| prufer_decode(&seq, m)).collect()
}

fn prufer_decode(seq: &[usize], m: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; m];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    for &x in seq {
        let leaf = (0..m).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..m).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort_unstable();
    edges
}

/// All labeled trees on the subset universe of a base of size `n`, rooted
/// at the full set. Refused when the universe has more than `cap` subsets.
pub fn enumerate_trees(base: Vec<String>, cap: usize) -> Result<Vec<SubsetVertexGraph>> {
    let n = base.len();
    if n == 0 {
        return Err(Error::InvalidSubset("base must have at least one vertex".into()));
    }
    let m = if n >= 63 { usize::MAX } else { (1usize << n) - 1 };
    if m > cap {
        return Err(too_large("subset universe for tree enumeration", m, cap));
    }
    let vertices: Vec<u64> = (1..=full_mask(n)).collect();
    let root = Some(m - 1);
    Ok(enumerate_labeled_trees(m)
        .into_iter()
        .map(|edges| SubsetVertexGraph {
            base: base.clone(),
            vertices: vertices.clone(),
            edges: edges.into_iter().collect(),
            root,
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    /// Edges of the canonical representative on vertices `0..m`.
    pub representative: Vec<(usize, usize)>,
    pub edge_count: usize,
    /// Labeled graphs in this class.
    pub labeled_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCensus {
    pub m: usize,
    pub edges: Option<usize>,
    pub classes: Vec<IsoClass>,
}

impl IsoCensus {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn labeled_total(&self) -> usize {
        self.classes.iter().map(|c| c.labeled_count).sum()
    }
}

/// Graphs on `m <= 5` vertices up to isomorphism, optionally only those with
/// `edges` edges. The canonical form of a graph is the smallest edge bitmask
/// over all vertex relabelings.
pub fn enumerate_type_two_iso(m: usize, edges: Option<usize>) -> Result<IsoCensus> {
    if m > MAX_ISO_VERTICES {
        return Err(too_large("vertex count for isomorphism enumeration", m, MAX_ISO_VERTICES));
    }
    let pairs: Vec<(usize, usize)> = (0..m).tuple_combinations().collect();
    let mut slot = vec![vec![0usize; m]; m];
    for (k, &(a, b)) in pairs.iter().enumerate() {
        slot[a][b] = k;
        slot[b][a] = k;
    }
    let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    let mut classes: BTreeMap<u32, usize> = BTreeMap::new();
    for graph in 0u32..(1 << pairs.len()) {
        if edges.is_some_and(|r| graph.count_ones() as usize != r) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| graph >> k & 1 == 1)
                    .fold(0u32, |acc, (_, &(a, b))| acc | 1 << slot[p[a]][p[b]])
            })
            .min()
            .unwrap_or(graph);
        *classes.entry(canon).or_default() += 1;
    }
    let classes = classes
        .into_iter()
        .map(|(canon, labeled_count)| IsoClass {
            representative: pairs.iter().enumerate().filter(|(k, _)| canon >> k & 1 == 1).map(|(_, &p)| p).collect(),
            edge_count: canon.count_ones() as usize,
            labeled_count,
        })
        .collect();
    Ok(IsoCensus { m, edges, classes })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge {
    pub graph: SubsetVertexGraph,
    pub is_tree: bool,
    /// Both inputs are trees and the union is connected but not a tree.
    pub meshed: bool,
}

/// Union of two subset vertex graphs over the same base.
pub fn merge(a: &SubsetVertexGraph, b: &SubsetVertexGraph) -> Result<Merge> {
    if a.base != b.base {
        return Err(Error::BaseMismatch);
    }
    let vertices: Vec<u64> = a.vertices.iter().chain(&b.vertices).copied().collect::<BTreeSet<_>>().into_iter().collect();
    let edge_masks: BTreeSet<(u64, u64)> = [a, b]
        .iter()
        .flat_map(|g| g.edges.iter().map(|&(i, j)| (g.vertices[i], g.vertices[j])))
        .collect();
    let edges: Vec<(u64, u64)> = edge_masks.into_iter().collect();
    let graph = SubsetVertexGraph::new(a.base.clone(), vertices, &edges)?;
    let is_tree = graph.is_tree();
    let meshed = a.is_tree() && b.is_tree() && graph.is_connected() && !is_tree;
    Ok(Merge { graph, is_tree, meshed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Kind::Real as R;

    fn base(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("v{i}")).collect()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn single_vertex_host() {
        let g = build_type_one(&fixtures::empty(1), DEFAULT_TYPE_ONE_CAP).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.label(0), "{v1}");
    }

    #[test]
    fn single_edge_host_gives_a_triangle() {
        let host = NeutroGraph::from_parts(&[("v1", R), ("v2", R)], &[("v1", "v2", R)]).unwrap();
        let g = build_type_one(&host, DEFAULT_TYPE_ONE_CAP).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(g.has_edge(0b01, 0b10));
        assert!(g.has_edge(0b01, 0b11));
        assert!(g.has_edge(0b10, 0b11));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edgeless_host_gives_no_edges() {
        let g = build_type_one(&fixtures::empty(2), DEFAULT_TYPE_ONE_CAP).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 0));
        assert!(build_type_one(&fixtures::empty(11), DEFAULT_TYPE_ONE_CAP).is_err());
    }

    /// The edge rule straight from its statement, over element pairs.
    fn rule(host: &NeutroGraph, a: u64, b: u64) -> bool {
        let n = host.vertex_count();
        a != b
            && (0..n).any(|x| {
                a >> x & 1 == 1 && (0..n).any(|y| b >> y & 1 == 1 && x != y && host.edge_between(x, y).is_some())
            })
    }

    #[test]
    fn type_one_matches_rule_and_grows_with_host() {
        let host = fixtures::p3();
        let g = build_type_one(&host, DEFAULT_TYPE_ONE_CAP).unwrap();
        for (i, &a) in g.vertices().iter().enumerate() {
            for &b in &g.vertices()[i + 1..] {
                assert_eq!(g.has_edge(a, b), rule(&host, a, b));
            }
        }
        let bigger = build_type_one(&fixtures::k3(), DEFAULT_TYPE_ONE_CAP).unwrap();
        assert!(g.edges().is_subset(bigger.edges()));
        assert_eq!(g, build_type_one(&fixtures::p3(), DEFAULT_TYPE_ONE_CAP).unwrap());
    }

    #[test]
    fn type_two_counts() {
        assert_eq!(count_type_two(1).unwrap(), big(1));
        assert_eq!(count_type_two(2).unwrap(), big(8));
        assert_eq!(count_type_two(3).unwrap(), big(1 << 21));
        assert_eq!(count_type_two_with_edges(3, &big(1)).unwrap(), big(21));
        assert_eq!(count_type_two_with_edges(2, &big(4)).unwrap(), big(0));
        assert!(count_type_two(0).is_err());
        assert!(count_type_two(13).is_err());
    }

    #[test]
    fn edge_counts_sum_to_total() {
        for n in 1..=4 {
            let pairs = pair_count(n).unwrap();
            let mut sum = BigUint::zero();
            let mut r = BigUint::zero();
            while r <= pairs {
                sum += count_type_two_with_edges(n, &r).unwrap();
                r += 1u32;
            }
            assert_eq!(sum, count_type_two(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn max_degree() {
        assert_eq!(max_subset_degree(3).unwrap(), big(6));
        assert_eq!(max_subset_degree(1).unwrap(), big(0));
        let subsets: Vec<u64> = vec![1, 2, 3];
        let all: Vec<(u64, u64)> = vec![(1, 2), (1, 3), (2, 3)];
        let k3 = SubsetVertexGraph::new(base(2), subsets, &all).unwrap();
        assert_eq!(big(k3.max_degree() as u64), max_subset_degree(2).unwrap());
    }

    #[test]
    fn tree_counts() {
        assert_eq!(count_labeled_trees(1).unwrap(), big(1));
        assert_eq!(count_labeled_trees(2).unwrap(), big(3));
        assert_eq!(count_labeled_trees(3).unwrap(), big(16807));
        assert_eq!(labeled_tree_count(4), big(16));
        assert_eq!(enumerate_labeled_trees(4).len(), 16);
    }

    #[test]
    fn enumerated_trees_are_distinct_trees() {
        let trees = enumerate_trees(base(2), DEFAULT_TREE_CAP).unwrap();
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(SubsetVertexGraph::is_tree));
        assert!(trees.iter().all(|t| t.root() == Some(2) && t.vertices()[2] == 0b11));
        let distinct: BTreeSet<Vec<(usize, usize)>> = trees.iter().map(|t| t.edges().iter().copied().collect()).collect();
        assert_eq!(distinct.len(), 3);
        assert_eq!(enumerate_trees(base(1), DEFAULT_TREE_CAP).unwrap().len(), 1);
        assert!(enumerate_trees(base(4), DEFAULT_TREE_CAP).is_err());
    }

    #[test]
    fn iso_enumeration() {
        assert_eq!(enumerate_type_two_iso(3, None).unwrap().class_count(), 4);
        assert_eq!(enumerate_type_two_iso(3, Some(1)).unwrap().class_count(), 1);
        assert_eq!(enumerate_type_two_iso(4, None).unwrap().class_count(), 11);
        assert_eq!(enumerate_type_two_iso(5, None).unwrap().class_count(), 34);
        let c3 = enumerate_type_two_iso(3, None).unwrap();
        assert_eq!(BigUint::from(c3.labeled_total()), count_type_two(2).unwrap());
        assert!(enumerate_type_two_iso(6, None).is_err());
    }

    #[test]
    fn merging() {
        let b = base(2);
        let path = |edges: &[(u64, u64)]| SubsetVertexGraph::new(b.clone(), vec![1, 2, 3], edges).unwrap();
        // {v1}-{v2}-{v1,v2} and {v2}-{v1}-{v1,v2}
        let p1 = path(&[(1, 2), (2, 3)]);
        let p2 = path(&[(2, 1), (1, 3)]);
        let m = merge(&p1, &p2).unwrap();
        assert!(m.meshed && !m.is_tree);
        assert_eq!(m.graph.edge_count(), 3);

        let b3 = base(3);
        let t1 = SubsetVertexGraph::new(b3.clone(), vec![1, 3], &[(1, 3)]).unwrap();
        let t2 = SubsetVertexGraph::new(b3.clone(), vec![3, 7], &[(3, 7)]).unwrap();
        let m = merge(&t1, &t2).unwrap();
        assert!(m.is_tree && !m.meshed);

        let t3 = SubsetVertexGraph::new(b3.clone(), vec![2, 4], &[(2, 4)]).unwrap();
        let m = merge(&t1, &t3).unwrap();
        assert!(!m.is_tree && !m.meshed);

        assert_eq!(merge(&p1, &t1), Err(Error::BaseMismatch));
    }

    #[test]
    fn subset_labels_round_trip() {
        let b = base(3);
        for mask in 1..8u64 {
            assert_eq!(parse_subset(&subset_label(mask, &b), &b).unwrap(), mask);
        }
        assert!(parse_subset("{v1,v1}", &b).is_err());
        assert!(parse_subset("{v9}", &b).is_err());
        assert!(parse_subset("v1", &b).is_err());
        assert!(SubsetVertexGraph::new(b.clone(), vec![0], &[]).is_err());
        assert!(SubsetVertexGraph::new(b.clone(), vec![8], &[]).is_err());
        assert!(SubsetVertexGraph::new(b, vec![1, 1], &[]).is_err());
    }
}
