//! Subgraphs of a host graph and the family S(G) of all of them, ordered by
//! containment.
//!
//! A subgraph is any pair (vertex subset, edge subset) whose edges have both
//! endpoints in the vertex subset; induced-ness is not required. The family
//! includes the empty subgraph and the host itself.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{too_large, Error, Result};
use crate::graph::{Kind, NeutroGraph};

/// Components larger than this are refused by [`count_subgraphs`]; the
/// closed form visits every vertex subset of each component.
pub const MAX_COUNT_COMPONENT: usize = 30;

pub const DEFAULT_SPACE_CAP: u64 = 100_000;

#[derive(Clone, Debug)]
pub struct Subgraph<'g> {
    host: &'g NeutroGraph,
    vertices: BTreeSet<usize>,
    edges: BTreeSet<usize>,
}

impl<'g> Subgraph<'g> {
    pub fn new(host: &'g NeutroGraph, vertices: BTreeSet<usize>, edges: BTreeSet<usize>) -> Result<Self> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= host.vertex_count()) {
            return Err(Error::UndeclaredEndpoint(format!("#{v}")));
        }
        for &e in &edges {
            if e >= host.edge_count() {
                return Err(Error::InvalidWalk(format!("edge #{e} is not in the host")));
            }
            let edge = host.edge(e);
            if !vertices.contains(&edge.a) || !vertices.contains(&edge.b) {
                return Err(Error::UndeclaredEndpoint(format!(
                    "edge {}-{} needs both endpoints in the subgraph",
                    host.id(edge.a),
                    host.id(edge.b)
                )));
            }
        }
        Ok(Subgraph { host, vertices, edges })
    }

    /// The empty subgraph.
    pub fn empty(host: &'g NeutroGraph) -> Self {
        Subgraph { host, vertices: BTreeSet::new(), edges: BTreeSet::new() }
    }

    pub fn full(host: &'g NeutroGraph) -> Self {
        Subgraph { host, vertices: (0..host.vertex_count()).collect(), edges: (0..host.edge_count()).collect() }
    }

    pub fn edgeless(host: &'g NeutroGraph, vertices: BTreeSet<usize>) -> Result<Self> {
        Self::new(host, vertices, BTreeSet::new())
    }

    /// The given edges together with their endpoints.
    pub fn spanned_by_edges(host: &'g NeutroGraph, edges: impl IntoIterator<Item = usize>) -> Self {
        let edges: BTreeSet<usize> = edges.into_iter().collect();
        let vertices = edges.iter().flat_map(|&e| [host.edge(e).a, host.edge(e).b]).collect();
        Subgraph { host, vertices, edges }
    }

    pub fn host(&self) -> &'g NeutroGraph {
        self.host
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<usize> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of vertices plus number of edges.
    pub fn rank(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    fn same_host(&self, other: &Subgraph<'_>) -> bool {
        std::ptr::eq(self.host, other.host) || self.host == other.host
    }

    pub fn union(&self, other: &Subgraph<'g>) -> Result<Subgraph<'g>> {
        if !self.same_host(other) {
            return Err(Error::HostMismatch);
        }
        Ok(Subgraph {
            host: self.host,
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        })
    }

    pub fn intersect(&self, other: &Subgraph<'g>) -> Result<Subgraph<'g>> {
        if !self.same_host(other) {
            return Err(Error::HostMismatch);
        }
        Ok(Subgraph {
            host: self.host,
            vertices: self.vertices.intersection(&other.vertices).copied().collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
        })
    }

    pub fn is_subgraph_of(&self, other: &Subgraph<'_>) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }

    /// Materializes the subgraph as a standalone graph with inherited kinds.
    pub fn to_graph(&self) -> NeutroGraph {
        let mut g = NeutroGraph::new();
        for &v in &self.vertices {
            let vx = self.host.vertex(v);
            g.add_vertex(vx.id.clone(), vx.kind).expect("host ids are unique");
        }
        for &e in &self.edges {
            let edge = self.host.edge(e);
            g.add_edge(self.host.id(edge.a), self.host.id(edge.b), edge.kind).expect("host edges are simple");
        }
        g
    }

    pub fn component_count(&self) -> usize {
        self.to_graph().connected_components().len()
    }

    /// Nonempty and in one piece.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// True when every edge has the given kind.
    pub fn edges_all(&self, kind: Kind) -> bool {
        self.edges.iter().all(|&e| self.host.edge(e).kind == kind)
    }

    /// `{v0,v1|v0-v1}` style label; `∅` for the empty subgraph.
    pub fn label(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let vs: Vec<&str> = self.vertices.iter().map(|&v| self.host.id(v)).collect();
        let es: Vec<String> = self
            .edges
            .iter()
            .map(|&e| {
                let edge = self.host.edge(e);
                format!("{}-{}", self.host.id(edge.a), self.host.id(edge.b))
            })
            .collect();
        if es.is_empty() {
            format!("{{{}}}", vs.join(","))
        } else {
            format!("{{{}|{}}}", vs.join(","), es.join(","))
        }
    }

    fn key(&self) -> (&BTreeSet<usize>, &BTreeSet<usize>) {
        (&self.vertices, &self.edges)
    }
}

impl PartialEq for Subgraph<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key() && self.same_host(other)
    }
}

impl Eq for Subgraph<'_> {}

impl PartialOrd for Subgraph<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Vertex subset first, then edge subset, each compared lexicographically.
impl Ord for Subgraph<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// |S(G)| by the closed form: the sum over vertex subsets `S` of
/// `2^e(S)`, where `e(S)` counts host edges inside `S`.
///
/// The sum factors over connected components, so each component is summed
/// separately and the results multiplied.
pub fn count_subgraphs(g: &NeutroGraph) -> Result<BigUint> {
    let mut total = BigUint::one();
    for comp in g.connected_components() {
        if comp.len() > MAX_COUNT_COMPONENT {
            return Err(too_large("component for subgraph counting", comp.len(), MAX_COUNT_COMPONENT));
        }
        total *= component_sum(g, &comp);
    }
    Ok(total)
}

fn component_sum(g: &NeutroGraph, comp: &[usize]) -> BigUint {
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    // lower[i]: neighbours of local vertex i with a smaller local index
    let lower: Vec<u32> = comp
        .iter()
        .enumerate()
        .map(|(i, &v)| g.neighbors(v).map(|w| local[w]).filter(|&j| j < i).fold(0u32, |m, j| m | (1 << j)))
        .collect();
    let max_edges = g.edge_count();
    let mut histogram = vec![0u64; max_edges + 1];
    fn walk(i: usize, chosen: u32, inside: usize, lower: &[u32], hist: &mut [u64]) {
        if i == lower.len() {
            hist[inside] += 1;
            return;
        }
        walk(i + 1, chosen, inside, lower, hist);
        let added = (lower[i] & chosen).count_ones() as usize;
        walk(i + 1, chosen | (1 << i), inside + added, lower, hist);
    }
    walk(0, 0, 0, &lower, &mut histogram);
    histogram
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(e, &c)| BigUint::from(c) << e)
        .fold(BigUint::zero(), |acc, x| acc + x)
}

/// A materialized S(G).
#[derive(Clone, Debug)]
pub struct SubgraphSpace<'g> {
    host: &'g NeutroGraph,
    members: Vec<Subgraph<'g>>,
    cardinality: BigUint,
}

impl<'g> SubgraphSpace<'g> {
    /// Lists every subgraph of `host` in canonical order. Refuses when the
    /// exact count exceeds `cap`.
    pub fn enumerate(host: &'g NeutroGraph, cap: u64) -> Result<Self> {
        let cardinality = count_subgraphs(host)?;
        if cardinality > BigUint::from(cap) {
            return Err(too_large("subgraph space", &cardinality, cap));
        }
        let n = host.vertex_count();
        let mut members = Vec::with_capacity(usize::try_from(cap).unwrap_or(usize::MAX).min(1 << 20));
        // 2^n <= |S(G)| <= cap, so the vertex masks fit in a u64
        for mask in 0u64..(1u64 << n) {
            let vertices: BTreeSet<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let inside: Vec<usize> = host
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| mask >> e.a & 1 == 1 && mask >> e.b & 1 == 1)
                .map(|(i, _)| i)
                .collect();
            for pick in 0u64..(1u64 << inside.len()) {
                let edges = inside.iter().enumerate().filter(|(k, _)| pick >> k & 1 == 1).map(|(_, &e)| e).collect();
                members.push(Subgraph { host, vertices: vertices.clone(), edges });
            }
        }
        members.sort();
        debug_assert_eq!(BigUint::from(members.len()), cardinality);
        Ok(SubgraphSpace { host, members, cardinality })
    }

    pub fn host(&self) -> &'g NeutroGraph {
        self.host
    }

    pub fn members(&self) -> &[Subgraph<'g>] {
        &self.members
    }

    pub fn cardinality(&self) -> &BigUint {
        &self.cardinality
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, s: &Subgraph<'_>) -> Option<usize> {
        self.members.binary_search_by(|m| m.key().cmp(&s.key())).ok()
    }

    pub fn contains(&self, s: &Subgraph<'_>) -> bool {
        self.position(s).is_some()
    }

    pub fn check(&self) -> LatticeReport {
        lattice_check(&self.members)
    }

    /// The `2^n` edgeless subgraphs, checked to form a Boolean algebra.
    pub fn boolean_subalgebra(&self) -> BooleanSubalgebra<'g> {
        let n = self.host.vertex_count();
        let members: Vec<Subgraph<'g>> = self.members.iter().filter(|m| m.edges.is_empty()).cloned().collect();
        debug_assert_eq!(members.len(), 1usize << n);
        let report = lattice_check(&members);
        BooleanSubalgebra { order: members.len(), members, report }
    }

    /// A proper subfamily that is a Boolean algebra under the same union and
    /// intersection, if one exists.
    ///
    /// With at least one edge the edgeless subgraphs already form a proper
    /// Boolean subalgebra of order `2^n`. On an edgeless host with `n >= 2`
    /// the subsets avoiding the last vertex give one of order `2^(n-1)`.
    pub fn smarandache_witness(&self) -> Option<Vec<Subgraph<'g>>> {
        let n = self.host.vertex_count();
        let candidate: Vec<Subgraph<'g>> = if self.host.edge_count() > 0 {
            self.boolean_subalgebra().members
        } else if n >= 2 {
            self.members.iter().filter(|m| !m.vertices.contains(&(n - 1))).cloned().collect()
        } else {
            return None;
        };
        let proper = candidate.len() >= 2 && candidate.len() < self.members.len();
        let inside = candidate.iter().all(|c| self.contains(c));
        (proper && inside && lattice_check(&candidate).is_boolean_algebra).then_some(candidate)
    }

    pub fn is_smarandache_lattice(&self) -> bool {
        self.smarandache_witness().is_some()
    }

    /// Cover relations of the containment order.
    ///
    /// In S(G), `a` is covered by `b` exactly when `b` is `a` plus one edge,
    /// or `a` plus one vertex that carries no edge of `b`. Each member is
    /// therefore checked against its one-element deletions.
    pub fn hasse(&self) -> HasseDiagram {
        let mut covers = Vec::new();
        for (upper, b) in self.members.iter().enumerate() {
            let mut lowers = Vec::new();
            for &e in &b.edges {
                let mut a = b.clone();
                a.edges.remove(&e);
                lowers.extend(self.position(&a));
            }
            for &v in &b.vertices {
                let touches = b.edges.iter().any(|&e| {
                    let edge = self.host.edge(e);
                    edge.a == v || edge.b == v
                });
                if !touches {
                    let mut a = b.clone();
                    a.vertices.remove(&v);
                    lowers.extend(self.position(&a));
                }
            }
            lowers.sort_unstable();
            covers.extend(lowers.into_iter().map(|lower| (lower, upper)));
        }
        covers.sort_unstable();
        HasseDiagram {
            labels: self.members.iter().map(Subgraph::label).collect(),
            ranks: self.members.iter().map(Subgraph::rank).collect(),
            covers,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    pub is_lattice: bool,
    pub is_distributive: bool,
    pub is_complemented: bool,
    pub is_bounded: bool,
    pub is_boolean_algebra: bool,
    pub is_topology: bool,
}

/// Order-theoretic checks on a family of subgraphs of one host, with join
/// given by union and meet by intersection.
///
/// The bounds are the family's own: the intersection of all members and the
/// union of all members. Distributivity is checked over every triple.
pub fn lattice_check<'g>(family: &[Subgraph<'g>]) -> LatticeReport {
    let Some(first) = family.first() else {
        return LatticeReport {
            is_lattice: false,
            is_distributive: false,
            is_complemented: false,
            is_bounded: false,
            is_boolean_algebra: false,
            is_topology: false,
        };
    };
    let set: BTreeSet<(&BTreeSet<usize>, &BTreeSet<usize>)> = family.iter().map(Subgraph::key).collect();
    let has = |s: &Subgraph<'_>| set.contains(&s.key());
    let join = |a: &Subgraph<'g>, b: &Subgraph<'g>| Subgraph {
        host: a.host,
        vertices: a.vertices.union(&b.vertices).copied().collect(),
        edges: a.edges.union(&b.edges).copied().collect(),
    };
    let meet = |a: &Subgraph<'g>, b: &Subgraph<'g>| Subgraph {
        host: a.host,
        vertices: a.vertices.intersection(&b.vertices).copied().collect(),
        edges: a.edges.intersection(&b.edges).copied().collect(),
    };

    let top = family.iter().skip(1).fold(first.clone(), |acc, s| join(&acc, s));
    let bottom = family.iter().skip(1).fold(first.clone(), |acc, s| meet(&acc, s));
    let is_bounded = has(&top) && has(&bottom);

    let closed = family.iter().all(|a| family.iter().all(|b| has(&join(a, b)) && has(&meet(a, b))));
    let is_distributive = family.iter().all(|a| {
        family.iter().all(|b| family.iter().all(|c| meet(a, &join(b, c)) == join(&meet(a, b), &meet(a, c))))
    });
    let is_complemented = is_bounded
        && family.iter().all(|a| family.iter().any(|b| join(a, b) == top && meet(a, b) == bottom));
    let is_lattice = closed && is_bounded;
    let phi = Subgraph::empty(first.host);
    LatticeReport {
        is_lattice,
        is_distributive,
        is_complemented,
        is_bounded,
        is_boolean_algebra: is_lattice && is_distributive && is_complemented,
        is_topology: closed && has(&phi) && has(&top),
    }
}

#[derive(Clone, Debug)]
pub struct BooleanSubalgebra<'g> {
    pub members: Vec<Subgraph<'g>>,
    pub order: usize,
    pub report: LatticeReport,
}

/// Cover relations between members, indexed by position in the space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub labels: Vec<String>,
    /// Vertex count plus edge count of each member.
    pub ranks: Vec<usize>,
    /// `(lower, upper)` pairs, sorted.
    pub covers: Vec<(usize, usize)>,
}
