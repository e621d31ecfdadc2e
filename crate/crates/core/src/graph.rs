//! Simple undirected graphs whose vertices and edges are each either real or
//! indeterminate, and the classification of such graphs by kind.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Real,
    Indeterminate,
}

impl Kind {
    pub fn toggled(self) -> Kind {
        match self {
            Kind::Real => Kind::Indeterminate,
            Kind::Indeterminate => Kind::Real,
        }
    }

    pub fn is_real(self) -> bool {
        self == Kind::Real
    }

    pub fn token(self) -> &'static str {
        match self {
            Kind::Real => "real",
            Kind::Indeterminate => "indet",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "real" => Ok(Kind::Real),
            "indet" => Ok(Kind::Indeterminate),
            other => Err(Error::Parse { line: 0, message: format!("bad kind token `{other}`") }),
        }
    }
}

/// How the kinds of a set of vertices (or edges) are distributed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    AllReal,
    Mixed,
    AllIndeterminate,
    Empty,
}

impl Profile {
    pub fn of<I: IntoIterator<Item = Kind>>(kinds: I) -> Profile {
        let (mut real, mut indet) = (false, false);
        for k in kinds {
            match k {
                Kind::Real => real = true,
                Kind::Indeterminate => indet = true,
            }
        }
        match (real, indet) {
            (false, false) => Profile::Empty,
            (true, false) => Profile::AllReal,
            (false, true) => Profile::AllIndeterminate,
            (true, true) => Profile::Mixed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Usual,
    PureNeutrosophic,
    Neutrosophic,
    StrongNeutrosophic,
    StrongPureNeutrosophic,
    SemiStrongVertexNeutrosophic,
    QuasiStrongVertexNeutrosophic,
    SemiStrongEdgeNeutrosophic,
    EdgeWeakNeutrosophic,
    /// No edges; carries the vertex profile.
    Edgeless(Profile),
}

impl GraphClass {
    pub fn name(&self) -> String {
        match self {
            GraphClass::Usual => "usual".into(),
            GraphClass::PureNeutrosophic => "pure neutrosophic".into(),
            GraphClass::Neutrosophic => "neutrosophic".into(),
            GraphClass::StrongNeutrosophic => "strong neutrosophic".into(),
            GraphClass::StrongPureNeutrosophic => "strong pure neutrosophic".into(),
            GraphClass::SemiStrongVertexNeutrosophic => "semi strong vertex neutrosophic".into(),
            GraphClass::QuasiStrongVertexNeutrosophic => "quasi strong vertex neutrosophic".into(),
            GraphClass::SemiStrongEdgeNeutrosophic => "semi strong edge neutrosophic".into(),
            GraphClass::EdgeWeakNeutrosophic => "edge weak neutrosophic".into(),
            GraphClass::Edgeless(p) => {
                let v = match p {
                    Profile::AllReal => "real",
                    Profile::Mixed => "mixed",
                    Profile::AllIndeterminate => "indeterminate",
                    Profile::Empty => "empty",
                };
                format!("edgeless ({v} vertices)")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub kind: Kind,
}

/// An edge between two vertex indices, kept in declaration orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub kind: Kind,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn key(&self) -> (usize, usize) {
        (self.a.min(self.b), self.a.max(self.b))
    }
}

/// A simple undirected graph with a [`Kind`] on every vertex and edge.
///
/// Vertices and edges are indexed in declaration order. Equality is
/// structural: two graphs are equal when they declare the same vertex ids with
/// the same kinds and the same edges with the same kinds, in any order.
#[derive(Clone, Debug, Default)]
pub struct NeutroGraph {
    vertices: Vec<Vertex>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    edge_index: HashMap<(usize, usize), usize>,
    incident: Vec<Vec<usize>>,
}

impl NeutroGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex and edge lists given by id.
    pub fn from_parts(vertices: &[(&str, Kind)], edges: &[(&str, &str, Kind)]) -> Result<Self> {
        let mut g = NeutroGraph::new();
        for &(id, kind) in vertices {
            g.add_vertex(id, kind)?;
        }
        for &(a, b, kind) in edges {
            g.add_edge(a, b, kind)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, kind: Kind) -> Result<usize> {
        let id = id.into();
        if self.index.contains_key(&id) {
            return Err(Error::DuplicateVertex(id));
        }
        let ix = self.vertices.len();
        self.index.insert(id.clone(), ix);
        self.vertices.push(Vertex { id, kind });
        self.incident.push(Vec::new());
        Ok(ix)
    }

    pub fn add_edge(&mut self, a: &str, b: &str, kind: Kind) -> Result<usize> {
        let u = self.vertex_index(a).ok_or_else(|| Error::UndeclaredEndpoint(a.to_string()))?;
        let v = self.vertex_index(b).ok_or_else(|| Error::UndeclaredEndpoint(b.to_string()))?;
        self.add_edge_ix(u, v, kind)
    }

    pub fn add_edge_ix(&mut self, u: usize, v: usize, kind: Kind) -> Result<usize> {
        let n = self.vertices.len();
        if u >= n || v >= n {
            return Err(Error::UndeclaredEndpoint(format!("#{}", u.max(v))));
        }
        if u == v {
            return Err(Error::SelfLoop(self.vertices[u].id.clone()));
        }
        let key = (u.min(v), u.max(v));
        if self.edge_index.contains_key(&key) {
            return Err(Error::DuplicateEdge(self.vertices[u].id.clone(), self.vertices[v].id.clone()));
        }
        let e = self.edges.len();
        self.edges.push(Edge { a: u, b: v, kind });
        self.edge_index.insert(key, e);
        self.incident[u].push(e);
        self.incident[v].push(e);
        Ok(e)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Edge indices incident to `v`, in declaration order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incident[v].iter().map(move |&e| self.edges[e].other(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    /// Number of real vertices.
    pub fn real_vertex_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.kind.is_real()).count()
    }

    /// Number of real edges.
    pub fn real_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.kind.is_real()).count()
    }

    pub fn indeterminate_edge_count(&self) -> usize {
        self.edge_count() - self.real_edge_count()
    }

    /// Same structure, kinds rewritten by the two maps.
    pub fn map_kinds(&self, vertex: impl Fn(Kind) -> Kind, edge: impl Fn(Kind) -> Kind) -> NeutroGraph {
        let mut g = self.clone();
        for v in &mut g.vertices {
            v.kind = vertex(v.kind);
        }
        for e in &mut g.edges {
            e.kind = edge(e.kind);
        }
        g
    }

    /// Connected components as sorted vertex-index lists, ordered by their
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected in the usual sense; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn kind_profile(&self) -> (Profile, Profile) {
        (
            Profile::of(self.vertices.iter().map(|v| v.kind)),
            Profile::of(self.edges.iter().map(|e| e.kind)),
        )
    }

    pub fn classify(&self) -> GraphClass {
        use Profile::*;
        match self.kind_profile() {
            (vp, Empty) => GraphClass::Edgeless(vp),
            (AllReal, AllReal) => GraphClass::Usual,
            (AllReal, AllIndeterminate) => GraphClass::PureNeutrosophic,
            (AllReal, Mixed) => GraphClass::Neutrosophic,
            (Mixed, Mixed) => GraphClass::StrongNeutrosophic,
            (AllIndeterminate, AllIndeterminate) => GraphClass::StrongPureNeutrosophic,
            (AllIndeterminate, AllReal) => GraphClass::SemiStrongVertexNeutrosophic,
            (Mixed, AllReal) => GraphClass::QuasiStrongVertexNeutrosophic,
            (Mixed, AllIndeterminate) => GraphClass::SemiStrongEdgeNeutrosophic,
            (AllIndeterminate, Mixed) => GraphClass::EdgeWeakNeutrosophic,
            // edges imply vertices
            (Empty, _) => unreachable!("edges without vertices"),
        }
    }

    /// True when every part is an independent set whose vertices all share
    /// one kind. `parts` must partition the vertex set.
    pub fn is_neutro_k_partition<S: AsRef<str>>(&self, parts: &[Vec<S>]) -> Result<bool> {
        let mut owner = vec![usize::MAX; self.vertex_count()];
        for (p, part) in parts.iter().enumerate() {
            for id in part {
                let id = id.as_ref();
                let v = self
                    .vertex_index(id)
                    .ok_or_else(|| Error::NotAPartition(format!("unknown vertex `{id}`")))?;
                if owner[v] != usize::MAX {
                    return Err(Error::NotAPartition(format!("vertex `{id}` appears twice")));
                }
                owner[v] = p;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::NotAPartition(format!("vertex `{}` is not covered", self.id(v))));
        }
        let independent = self.edges.iter().all(|e| owner[e.a] != owner[e.b]);
        let homogeneous = parts.iter().all(|part| {
            let kinds = part.iter().map(|id| self.vertices[self.index[id.as_ref()]].kind);
            Profile::of(kinds) != Profile::Mixed
        });
        Ok(independent && homogeneous)
    }

    fn canonical_maps(&self) -> (BTreeMap<&str, Kind>, BTreeMap<(&str, &str), Kind>) {
        let vs = self.vertices.iter().map(|v| (v.id.as_str(), v.kind)).collect();
        let es = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (self.id(e.a), self.id(e.b));
                ((a.min(b), a.max(b)), e.kind)
            })
            .collect();
        (vs, es)
    }
}

impl PartialEq for NeutroGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.canonical_maps() == other.canonical_maps()
    }
}

impl Eq for NeutroGraph {}

/// Vertex ids of each part, for convenience when comparing against
/// hand-written expectations.
pub fn ids_of(g: &NeutroGraph, parts: &[Vec<usize>]) -> Vec<Vec<String>> {
    parts.iter().map(|p| p.iter().map(|&v| g.id(v).to_string()).collect()).collect()
}

/// Named graphs used throughout the tests and the CLI.
pub mod fixtures {
    use super::Kind::{Indeterminate as I, Real as R};
    use super::*;

    /// Four real vertices; edges v0v1, v1v2, v1v3 real and v0v2, v2v3
    /// indeterminate.
    pub fn diamond() -> NeutroGraph {
        NeutroGraph::from_parts(
            &[("v0", R), ("v1", R), ("v2", R), ("v3", R)],
            &[("v0", "v1", R), ("v0", "v2", I), ("v1", "v2", R), ("v1", "v3", R), ("v2", "v3", I)],
        )
        .expect("fixture")
    }

    /// A mixed triangle on v0..v2 plus a disjoint indeterminate edge v3v4.
    pub fn triangle_edge() -> NeutroGraph {
        NeutroGraph::from_parts(
            &[("v0", R), ("v1", R), ("v2", R), ("v3", R), ("v4", R)],
            &[("v0", "v1", R), ("v0", "v2", I), ("v1", "v2", R), ("v3", "v4", I)],
        )
        .expect("fixture")
    }

    pub fn k3() -> NeutroGraph {
        NeutroGraph::from_parts(
            &[("v1", R), ("v2", R), ("v3", R)],
            &[("v1", "v2", R), ("v1", "v3", R), ("v2", "v3", R)],
        )
        .expect("fixture")
    }

    /// The path v2 - v1 - v3.
    pub fn p3() -> NeutroGraph {
        NeutroGraph::from_parts(&[("v1", R), ("v2", R), ("v3", R)], &[("v2", "v1", R), ("v1", "v3", R)])
            .expect("fixture")
    }

    /// `n` isolated real vertices v1..vn.
    pub fn empty(n: usize) -> NeutroGraph {
        let mut g = NeutroGraph::new();
        for i in 1..=n {
            g.add_vertex(format!("v{i}"), R).expect("fresh id");
        }
        g
    }

    pub fn catalogue() -> Vec<(String, NeutroGraph)> {
        let mut out = vec![
            ("diamond".to_string(), diamond()),
            ("triangle_edge".to_string(), triangle_edge()),
            ("K3".to_string(), k3()),
            ("P3".to_string(), p3()),
        ];
        for n in 1..=4 {
            out.push((format!("E{n}"), empty(n)));
        }
        out
    }

    pub fn by_name(name: &str) -> Option<NeutroGraph> {
        match name {
            "diamond" => Some(diamond()),
            "triangle_edge" => Some(triangle_edge()),
            "K3" => Some(k3()),
            "P3" => Some(p3()),
            _ => name.strip_prefix('E').and_then(|n| n.parse().ok()).map(empty),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::Kind::{Indeterminate as I, Real as R};
    use super::*;

    #[test]
    fn profiles() {
        assert_eq!(k3().kind_profile(), (Profile::AllReal, Profile::AllReal));
        assert_eq!(diamond().kind_profile(), (Profile::AllReal, Profile::Mixed));
        let lone = NeutroGraph::from_parts(&[("x", I)], &[]).unwrap();
        assert_eq!(lone.kind_profile(), (Profile::AllIndeterminate, Profile::Empty));
        assert_eq!(lone.classify(), GraphClass::Edgeless(Profile::AllIndeterminate));
    }

    #[test]
    fn classification_table() {
        let tri = |vk: [Kind; 3], ek: [Kind; 3]| {
            NeutroGraph::from_parts(
                &[("a", vk[0]), ("b", vk[1]), ("c", vk[2])],
                &[("a", "b", ek[0]), ("b", "c", ek[1]), ("a", "c", ek[2])],
            )
            .unwrap()
            .classify()
        };
        assert_eq!(tri([R, R, R], [R, R, R]), GraphClass::Usual);
        assert_eq!(tri([R, R, R], [I, I, I]), GraphClass::PureNeutrosophic);
        assert_eq!(tri([R, R, R], [R, I, R]), GraphClass::Neutrosophic);
        assert_eq!(tri([R, I, R], [R, I, R]), GraphClass::StrongNeutrosophic);
        assert_eq!(tri([I, I, I], [I, I, I]), GraphClass::StrongPureNeutrosophic);
        assert_eq!(tri([I, I, I], [R, R, R]), GraphClass::SemiStrongVertexNeutrosophic);
        assert_eq!(tri([I, R, R], [R, R, R]), GraphClass::QuasiStrongVertexNeutrosophic);
        assert_eq!(tri([I, R, R], [I, I, I]), GraphClass::SemiStrongEdgeNeutrosophic);
        assert_eq!(tri([I, I, I], [I, R, R]), GraphClass::EdgeWeakNeutrosophic);
    }

    #[test]
    fn construction_errors() {
        let mut g = NeutroGraph::new();
        g.add_vertex("a", R).unwrap();
        assert_eq!(g.add_vertex("a", I), Err(Error::DuplicateVertex("a".into())));
        assert_eq!(g.add_edge("a", "b", R), Err(Error::UndeclaredEndpoint("b".into())));
        assert_eq!(g.add_edge("a", "a", R), Err(Error::SelfLoop("a".into())));
        g.add_vertex("b", R).unwrap();
        g.add_edge("a", "b", R).unwrap();
        assert!(matches!(g.add_edge("b", "a", I), Err(Error::DuplicateEdge(..))));
    }

    #[test]
    fn equality_ignores_declaration_order() {
        let a = NeutroGraph::from_parts(&[("x", R), ("y", I), ("z", R)], &[("x", "y", I), ("z", "y", R)]).unwrap();
        let b = NeutroGraph::from_parts(&[("z", R), ("x", R), ("y", I)], &[("y", "z", R), ("y", "x", I)]).unwrap();
        assert_eq!(a, b);
        let c = b.map_kinds(|k| k, Kind::toggled);
        assert_ne!(a, c);
    }

    #[test]
    fn partitions() {
        let bip = NeutroGraph::from_parts(
            &[("a", R), ("b", R), ("c", R), ("d", R)],
            &[("a", "c", R), ("a", "d", R), ("b", "c", R)],
        )
        .unwrap();
        assert!(bip.is_neutro_k_partition(&[vec!["a", "b"], vec!["c", "d"]]).unwrap());
        assert!(!bip.is_neutro_k_partition(&[vec!["a", "c"], vec!["b", "d"]]).unwrap());

        let mixed = NeutroGraph::from_parts(&[("a", R), ("b", I)], &[]).unwrap();
        assert!(!mixed.is_neutro_k_partition(&[vec!["a", "b"]]).unwrap());
        assert!(mixed.is_neutro_k_partition(&[vec!["a"], vec!["b"]]).unwrap());

        assert!(mixed.is_neutro_k_partition(&[vec!["a"]]).is_err());
        assert!(mixed.is_neutro_k_partition(&[vec!["a", "b"], vec!["b"]]).is_err());
        assert!(mixed.is_neutro_k_partition(&[vec!["a", "b", "q"]]).is_err());
    }

    #[test]
    fn fixtures_shape() {
        assert_eq!(empty(3).edge_count(), 0);
        assert_eq!(diamond().edge_count(), 5);
        assert_eq!(triangle_edge().connected_components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(diamond().is_connected());
        for (name, g) in catalogue() {
            assert_eq!(by_name(&name).as_ref(), Some(&g));
        }
    }

    #[test]
    fn edge_changes_keep_vertex_profile() {
        let mut g = NeutroGraph::from_parts(&[("a", R), ("b", I), ("c", R)], &[]).unwrap();
        let before = g.kind_profile().0;
        g.add_edge("a", "b", I).unwrap();
        assert_eq!(g.kind_profile().0, before);
        g.add_edge("b", "c", R).unwrap();
        assert_eq!(g.kind_profile().0, before);
    }
}
