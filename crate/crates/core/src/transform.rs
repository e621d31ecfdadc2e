//! Kind complements, self-complementedness, the largest kind-homogeneous
//! subgraphs and the connectivity profile built from them.
//!
//! Every complement here keeps the structure fixed and swaps kinds. The
//! complement of a pure neutrosophic graph is therefore a usual graph on the
//! same vertices and edges.

use crate::error::{too_large, Result};
use crate::graph::{Kind, NeutroGraph};
use crate::subgraph::Subgraph;

pub const DEFAULT_SELF_COMPLEMENT_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplementMode {
    /// Toggle every edge kind.
    EdgeKind,
    /// Toggle every vertex kind.
    VertexKind,
    /// Toggle both.
    Strong,
}

impl ComplementMode {
    pub const ALL: [ComplementMode; 3] = [ComplementMode::EdgeKind, ComplementMode::VertexKind, ComplementMode::Strong];
}

pub fn complement(g: &NeutroGraph, mode: ComplementMode) -> NeutroGraph {
    let keep = |k: Kind| k;
    match mode {
        ComplementMode::EdgeKind => g.map_kinds(keep, Kind::toggled),
        ComplementMode::VertexKind => g.map_kinds(Kind::toggled, keep),
        ComplementMode::Strong => g.map_kinds(Kind::toggled, Kind::toggled),
    }
}

/// Edge-kind complement with every vertex made indeterminate. Not an
/// involution.
pub fn quasi_vertex_strong_complement(g: &NeutroGraph) -> NeutroGraph {
    g.map_kinds(|_| Kind::Indeterminate, Kind::toggled)
}

/// Searches for a vertex bijection `p` carrying `g` onto
/// `complement(g, mode)`: every vertex `v` keeps its kind at `p(v)` and every
/// edge `uv` reappears as `p(u)p(v)` with the same kind.
///
/// Returns the lexicographically first witness, as `witness[v] = p(v)`.
pub fn is_self_complemented(g: &NeutroGraph, mode: ComplementMode, cap: usize) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(too_large("graph for self-complement search", n, cap));
    }
    let target = complement(g, mode);
    // cheap kind-count obstruction
    if g.real_edge_count() != target.real_edge_count() || g.real_vertex_count() != target.real_vertex_count() {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(assign(g, &target, 0, &mut map, &mut used).then_some(map))
}

fn assign(g: &NeutroGraph, target: &NeutroGraph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = g.vertex_count();
    if v == n {
        return true;
    }
    for image in 0..n {
        if used[image] || target.vertex(image).kind != g.vertex(v).kind || target.degree(image) != g.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| {
            let here = g.edge_between(u, v).map(|e| g.edge(e).kind);
            let there = target.edge_between(map[u], image).map(|e| target.edge(e).kind);
            here == there
        });
        if !consistent {
            continue;
        }
        map[v] = image;
        used[image] = true;
        if assign(g, target, v + 1, map, used) {
            return true;
        }
        used[image] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Applies a vertex permutation: vertex `v` of `g` becomes vertex `p[v]` of
/// the result (which takes over that vertex's id).
pub fn apply_permutation(g: &NeutroGraph, p: &[usize]) -> NeutroGraph {
    let n = g.vertex_count();
    let mut kinds = vec![Kind::Real; n];
    for v in 0..n {
        kinds[p[v]] = g.vertex(v).kind;
    }
    let mut out = NeutroGraph::new();
    for (v, kind) in kinds.into_iter().enumerate() {
        out.add_vertex(g.id(v), kind).expect("ids are unique");
    }
    for e in g.edges() {
        out.add_edge_ix(p[e.a], p[e.b], e.kind).expect("a permutation keeps the graph simple");
    }
    out
}

/// All edges of the given kind together with their endpoints. Vertices
/// without such an edge are left out.
pub fn largest_homogeneous_subgraph(g: &NeutroGraph, kind: Kind) -> Subgraph<'_> {
    Subgraph::spanned_by_edges(g, (0..g.edge_count()).filter(|&e| g.edge(e).kind == kind))
}

pub fn largest_usual_subgraph(g: &NeutroGraph) -> Subgraph<'_> {
    largest_homogeneous_subgraph(g, Kind::Real)
}

pub fn largest_pure_neutrosophic_subgraph(g: &NeutroGraph) -> Subgraph<'_> {
    largest_homogeneous_subgraph(g, Kind::Indeterminate)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectivityProfile {
    /// Connected, but both largest homogeneous subgraphs are disconnected.
    PseudoStronglyDisconnected,
    /// Connected, and both largest homogeneous subgraphs are connected.
    StronglyConnected,
    /// Connected, and exactly one of them is connected.
    JustConnected,
    /// Two components: one all-real, one all-indeterminate, both connected.
    SpecialDisconnectedStrong,
    Unclassified,
}

impl ConnectivityProfile {
    pub fn name(self) -> &'static str {
        match self {
            ConnectivityProfile::PseudoStronglyDisconnected => "pseudo strongly disconnected",
            ConnectivityProfile::StronglyConnected => "strongly connected",
            ConnectivityProfile::JustConnected => "just connected",
            ConnectivityProfile::SpecialDisconnectedStrong => "special disconnected strong",
            ConnectivityProfile::Unclassified => "unclassified",
        }
    }
}

/// Requires at least one real and one indeterminate edge; anything else is
/// [`ConnectivityProfile::Unclassified`].
pub fn connectivity_profile(g: &NeutroGraph) -> ConnectivityProfile {
    if g.real_edge_count() == 0 || g.indeterminate_edge_count() == 0 {
        return ConnectivityProfile::Unclassified;
    }
    let usual = largest_usual_subgraph(g).is_connected();
    let pure = largest_pure_neutrosophic_subgraph(g).is_connected();
    if g.is_connected() {
        return match (usual, pure) {
            (true, true) => ConnectivityProfile::StronglyConnected,
            (false, false) => ConnectivityProfile::PseudoStronglyDisconnected,
            _ => ConnectivityProfile::JustConnected,
        };
    }
    let comps = g.connected_components();
    if comps.len() == 2 {
        let kinds: Vec<Option<Kind>> = comps
            .iter()
            .map(|c| {
                let es: Vec<Kind> = c.iter().flat_map(|&v| g.incident_edges(v)).map(|&e| g.edge(e).kind).collect();
                match es.first() {
                    Some(&k) if es.iter().all(|&x| x == k) => Some(k),
                    _ => None,
                }
            })
            .collect();
        let one_each = matches!(
            (kinds[0], kinds[1]),
            (Some(Kind::Real), Some(Kind::Indeterminate)) | (Some(Kind::Indeterminate), Some(Kind::Real))
        );
        if one_each {
            return ConnectivityProfile::SpecialDisconnectedStrong;
        }
    }
    ConnectivityProfile::Unclassified
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::GraphClass;
    use crate::graph::Kind::{Indeterminate as I, Real as R};

    fn path3(e1: Kind, e2: Kind) -> NeutroGraph {
        NeutroGraph::from_parts(&[("v1", R), ("v2", R), ("v3", R)], &[("v1", "v2", e1), ("v2", "v3", e2)]).unwrap()
    }

    #[test]
    fn pure_complement_is_usual() {
        let pure = fixtures::k3().map_kinds(|k| k, |_| I);
        assert_eq!(pure.classify(), GraphClass::PureNeutrosophic);
        assert_eq!(complement(&pure, ComplementMode::EdgeKind).classify(), GraphClass::Usual);
    }

    #[test]
    fn diamond_edge_complement() {
        let c = complement(&fixtures::diamond(), ComplementMode::EdgeKind);
        let expected = NeutroGraph::from_parts(
            &[("v0", R), ("v1", R), ("v2", R), ("v3", R)],
            &[("v0", "v1", I), ("v0", "v2", R), ("v1", "v2", I), ("v1", "v3", I), ("v2", "v3", R)],
        )
        .unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn complements_are_involutions() {
        let g = fixtures::diamond().map_kinds(|k| k, |k| k);
        for mode in ComplementMode::ALL {
            assert_eq!(complement(&complement(&g, mode), mode), g);
        }
    }

    #[test]
    fn quasi_complement() {
        let edge = NeutroGraph::from_parts(&[("a", R), ("b", R)], &[("a", "b", R)]).unwrap();
        let q = quasi_vertex_strong_complement(&edge);
        assert!(q.vertices().iter().all(|v| v.kind == I));
        assert_eq!(q.edge(0).kind, I);
        let qq = quasi_vertex_strong_complement(&q);
        assert_ne!(qq, edge);
        assert!(qq.vertices().iter().all(|v| v.kind == I));

        let e3 = quasi_vertex_strong_complement(&fixtures::empty(3));
        assert_eq!(e3.edge_count(), 0);
        assert!(e3.vertices().iter().all(|v| v.kind == I));
    }

    #[test]
    fn path_is_self_complemented_by_reversal() {
        let g = path3(R, I);
        let w = is_self_complemented(&g, ComplementMode::EdgeKind, DEFAULT_SELF_COMPLEMENT_CAP).unwrap();
        assert_eq!(w, Some(vec![2, 1, 0]));
        assert_eq!(apply_permutation(&g, &[2, 1, 0]), complement(&g, ComplementMode::EdgeKind));
    }

    #[test]
    fn self_complement_negatives_and_trivial_cases() {
        let edge = NeutroGraph::from_parts(&[("a", R), ("b", R)], &[("a", "b", R)]).unwrap();
        assert_eq!(is_self_complemented(&edge, ComplementMode::EdgeKind, 9).unwrap(), None);
        let e4 = fixtures::empty(4);
        assert_eq!(is_self_complemented(&e4, ComplementMode::EdgeKind, 9).unwrap(), Some(vec![0, 1, 2, 3]));
        // all-real vertices can never map onto all-indeterminate ones
        assert_eq!(is_self_complemented(&e4, ComplementMode::VertexKind, 9).unwrap(), None);
        assert!(is_self_complemented(&fixtures::empty(10), ComplementMode::EdgeKind, 9).is_err());
    }

    #[test]
    fn vertex_mode_self_complement() {
        let g = NeutroGraph::from_parts(&[("a", R), ("b", I)], &[("a", "b", R)]).unwrap();
        assert_eq!(is_self_complemented(&g, ComplementMode::VertexKind, 9).unwrap(), Some(vec![1, 0]));
        assert_eq!(is_self_complemented(&g, ComplementMode::Strong, 9).unwrap(), None);
    }

    #[test]
    fn largest_subgraphs_of_diamond() {
        let g = fixtures::diamond();
        let u = largest_usual_subgraph(&g);
        assert_eq!(u.vertices().iter().copied().collect::<Vec<_>>(), [0, 1, 2, 3]);
        assert_eq!(u.edges().iter().copied().collect::<Vec<_>>(), [0, 2, 3]);
        let p = largest_pure_neutrosophic_subgraph(&g);
        assert_eq!(p.vertices().iter().copied().collect::<Vec<_>>(), [0, 2, 3]);
        assert_eq!(p.edges().iter().copied().collect::<Vec<_>>(), [1, 4]);
    }

    #[test]
    fn largest_subgraphs_of_a_usual_graph() {
        let mut g = fixtures::k3();
        g.add_vertex("iso", R).unwrap();
        let u = largest_usual_subgraph(&g);
        assert_eq!(u.to_graph(), fixtures::k3());
        assert!(largest_pure_neutrosophic_subgraph(&g).is_empty());
    }

    #[test]
    fn smallest_pure_subgraph_is_one_edge() {
        let g = fixtures::diamond();
        let p = largest_pure_neutrosophic_subgraph(&g);
        for &e in p.edges() {
            let s = Subgraph::spanned_by_edges(&g, [e]);
            assert!(s.is_subgraph_of(&p));
            assert_eq!((s.vertex_count(), s.edge_count()), (2, 1));
        }
    }

    #[test]
    fn connectivity_profiles() {
        let tri = NeutroGraph::from_parts(
            &[("a", R), ("b", R), ("c", R)],
            &[("a", "b", R), ("b", "c", R), ("a", "c", I)],
        )
        .unwrap();
        assert_eq!(connectivity_profile(&tri), ConnectivityProfile::StronglyConnected);

        let square = NeutroGraph::from_parts(
            &[("a", R), ("b", R), ("c", R), ("d", R)],
            &[("a", "b", R), ("b", "c", I), ("c", "d", R), ("d", "a", I)],
        )
        .unwrap();
        assert_eq!(connectivity_profile(&square), ConnectivityProfile::PseudoStronglyDisconnected);

        let split = NeutroGraph::from_parts(
            &[("a", R), ("b", R), ("c", R), ("x", R), ("y", R), ("z", R)],
            &[("a", "b", R), ("b", "c", R), ("x", "y", I), ("y", "z", I), ("x", "z", I)],
        )
        .unwrap();
        assert_eq!(connectivity_profile(&split), ConnectivityProfile::SpecialDisconnectedStrong);

        // a lone indeterminate edge is a connected pure part
        let just = NeutroGraph::from_parts(
            &[("a", R), ("b", R), ("c", R), ("d", R)],
            &[("a", "b", R), ("b", "c", R), ("a", "d", I), ("c", "d", R)],
        )
        .unwrap();
        assert_eq!(connectivity_profile(&just), ConnectivityProfile::StronglyConnected);
        let just = NeutroGraph::from_parts(
            &[("a", R), ("b", R), ("c", R), ("d", R)],
            &[("a", "b", I), ("b", "c", R), ("c", "d", I)],
        )
        .unwrap();
        assert_eq!(connectivity_profile(&just), ConnectivityProfile::JustConnected);

        assert_eq!(connectivity_profile(&fixtures::k3()), ConnectivityProfile::Unclassified);
        assert_eq!(connectivity_profile(&fixtures::triangle_edge()), ConnectivityProfile::Unclassified);
    }

    #[test]
    fn disjoint_mixed_components_split_both_largest_subgraphs() {
        let g = NeutroGraph::from_parts(
            &[("a", R), ("b", R), ("c", R), ("x", R), ("y", R), ("z", R)],
            &[("a", "b", R), ("b", "c", I), ("x", "y", R), ("y", "z", I)],
        )
        .unwrap();
        assert!(!largest_usual_subgraph(&g).is_connected());
        assert!(!largest_pure_neutrosophic_subgraph(&g).is_connected());
    }
}
