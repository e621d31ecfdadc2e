use std::collections::BTreeSet;

use proptest::prelude::*;

use neutrograph::matrix::{self, adjacency};
use neutrograph::subgraph::{count_subgraphs, SubgraphSpace};
use neutrograph::subset::{self, binomial, build_type_one};
use neutrograph::transform::{self, ComplementMode};
use neutrograph::walks::{self, canonical_cycle, classify_walk, edge_kind_split, Walk, WalkClass};
use neutrograph::{io, BigUint, GraphClass, Kind, Neutro, NeutroGraph, NeutroMatrix, Profile};

fn kind() -> impl Strategy<Value = Kind> {
    prop_oneof![Just(Kind::Real), Just(Kind::Indeterminate)]
}

/// Vertex kinds plus, for each pair `u < v`, an optional edge kind.
fn layout(max_n: usize) -> impl Strategy<Value = (Vec<Kind>, Vec<Option<Kind>>)> {
    (1..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(kind(), n), prop::collection::vec(prop::option::of(kind()), n * (n - 1) / 2))
    })
}

fn build(vertices: &[Kind], pairs: &[Option<Kind>], order: Option<&[usize]>) -> NeutroGraph {
    let n = vertices.len();
    let mut g = NeutroGraph::new();
    for (i, &k) in vertices.iter().enumerate() {
        g.add_vertex(format!("v{i}"), k).unwrap();
    }
    let all: Vec<(usize, usize, Kind)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .zip(pairs)
        .filter_map(|((u, v), k)| k.map(|k| (u, v, k)))
        .collect();
    let idx: Vec<usize> = match order {
        Some(o) => o.iter().copied().filter(|&i| i < all.len()).collect(),
        None => (0..all.len()).collect(),
    };
    for i in idx {
        let (u, v, k) = all[i];
        g.add_edge_ix(u, v, k).unwrap();
    }
    g
}

fn graph(max_n: usize) -> impl Strategy<Value = NeutroGraph> {
    layout(max_n).prop_map(|(v, p)| build(&v, &p, None))
}

fn edge_pairs(g: &NeutroGraph) -> BTreeSet<(String, String)> {
    g.edges()
        .iter()
        .map(|e| {
            let (a, b) = (g.id(e.a).to_string(), g.id(e.b).to_string());
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

fn ids(g: &NeutroGraph) -> Vec<String> {
    g.vertices().iter().map(|v| v.id.clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_render_round_trip(g in graph(8)) {
        prop_assert_eq!(io::parse(&io::render(&g)).unwrap(), g);
    }

    #[test]
    fn usual_iff_all_real(g in graph(6)) {
        let usual = g.classify() == GraphClass::Usual;
        prop_assert_eq!(usual, g.kind_profile() == (Profile::AllReal, Profile::AllReal));
        prop_assert_eq!(g.classify(), g.classify());
    }

    #[test]
    fn edges_never_change_vertex_profile((v, p) in layout(6), k in kind()) {
        let g = build(&v, &p, None);
        let before = g.kind_profile().0;
        if let Some(i) = p.iter().position(Option::is_none) {
            let mut q = p.clone();
            q[i] = Some(k);
            prop_assert_eq!(build(&v, &q, None).kind_profile().0, before);
        }
        if let Some(i) = p.iter().position(Option::is_some) {
            let mut q = p.clone();
            q[i] = None;
            prop_assert_eq!(build(&v, &q, None).kind_profile().0, before);
        }
    }

    #[test]
    fn equality_ignores_edge_order((v, p) in layout(6), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..p.len()).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(build(&v, &p, Some(&order)), build(&v, &p, None));
    }

    #[test]
    fn complement_is_an_involution(g in graph(8)) {
        for mode in ComplementMode::ALL {
            let c = transform::complement(&g, mode);
            prop_assert_eq!(ids(&c), ids(&g));
            prop_assert_eq!(edge_pairs(&c), edge_pairs(&g));
            prop_assert_eq!(transform::complement(&c, mode), g.clone());
        }
        let q = transform::quasi_vertex_strong_complement(&g);
        prop_assert!(q.vertices().iter().all(|v| v.kind == Kind::Indeterminate));
        prop_assert_eq!(q.real_edge_count(), g.indeterminate_edge_count());
    }

    #[test]
    fn self_complement_witness_rechecks(g in graph(6)) {
        for mode in ComplementMode::ALL {
            if let Some(p) = transform::is_self_complemented(&g, mode, 9).unwrap() {
                prop_assert_eq!(transform::apply_permutation(&g, &p), transform::complement(&g, mode));
                if mode == ComplementMode::EdgeKind {
                    prop_assert_eq!(g.real_edge_count(), g.indeterminate_edge_count());
                }
            }
        }
    }

    #[test]
    fn powers_are_symmetric(g in graph(7), k in 1u32..=5) {
        let m: NeutroMatrix = matrix::walk_counts(&g, k).unwrap();
        prop_assert!(m.is_symmetric());
    }

    #[test]
    fn square_diagonal_splits_degree(g in graph(8)) {
        let a2: NeutroMatrix = adjacency::<Neutro>(&g).pow(2).unwrap();
        for v in 0..g.vertex_count() {
            let real = g.incident_edges(v).iter().filter(|&&e| g.edge(e).kind == Kind::Real).count();
            let indet = g.degree(v) - real;
            prop_assert_eq!(a2.get(v, v), &Neutro::new(BigUint::from(real), BigUint::from(indet)));
        }
    }

    #[test]
    fn walk_class_and_split(g in graph(6), steps in prop::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        // Random walk along existing edges; stop where there is nowhere to go.
        let mut at = 0;
        let mut path = vec![0];
        for s in &steps {
            let nbrs: Vec<usize> = g.neighbors(at).collect();
            if nbrs.is_empty() {
                break;
            }
            at = nbrs[s.index(nbrs.len())];
            path.push(at);
        }
        let w = Walk::from_indices(&g, path.clone()).unwrap();
        let (indet, real) = edge_kind_split(&g, &w);
        prop_assert_eq!(indet + real, w.len());
        if w.is_empty() {
            prop_assert!(classify_walk(&g, &w).is_err());
        } else {
            let all_real = path.iter().all(|&v| g.vertex(v).kind == Kind::Real) && indet == 0;
            prop_assert_eq!(classify_walk(&g, &w).unwrap() == WalkClass::Usual, all_real);
            prop_assert_eq!(classify_walk(&g, &w.reversed()).unwrap(), classify_walk(&g, &w).unwrap());
        }
    }

    #[test]
    fn circuits_are_canonical(g in graph(6)) {
        for c in walks::enumerate_circuits(&g, 12).unwrap() {
            let mut rev = c.vertices.clone();
            rev.reverse();
            prop_assert_eq!(canonical_cycle(&rev), c.vertices.clone());
            prop_assert_eq!(classify_walk(&g, &c.walk(&g).reversed()).unwrap(), c.class);
            if g.indeterminate_edge_count() == 0 {
                prop_assert!(matches!(c.class, WalkClass::Usual | WalkClass::StrongNeutrosophic));
            }
        }
    }

    #[test]
    fn space_is_closed_and_bounded(g in graph(3)) {
        let s = SubgraphSpace::enumerate(&g, 1 << 12).unwrap();
        let members = s.members();
        for a in members {
            for b in members {
                prop_assert!(s.contains(&a.union(b).unwrap()));
                prop_assert!(s.contains(&a.intersect(b).unwrap()));
            }
            prop_assert!(a.is_subgraph_of(&neutrograph::Subgraph::full(&g)));
            prop_assert!(neutrograph::Subgraph::empty(&g).is_subgraph_of(a));
        }
        prop_assert_eq!(count_subgraphs(&g).unwrap(), BigUint::from(s.len()));
    }

    #[test]
    fn adding_an_edge_adds_subgraphs((v, p) in layout(7), k in kind()) {
        if let Some(i) = p.iter().position(Option::is_none) {
            let mut q = p.clone();
            q[i] = Some(k);
            prop_assert!(count_subgraphs(&build(&v, &q, None)).unwrap() > count_subgraphs(&build(&v, &p, None)).unwrap());
        }
    }

    #[test]
    fn type_one_is_deterministic_and_monotone((v, p) in layout(5), k in kind()) {
        let g = build(&v, &p, None);
        let t = build_type_one(&g, 10).unwrap();
        prop_assert_eq!(&t, &build_type_one(&g.clone(), 10).unwrap());
        prop_assert_eq!(t.vertex_count(), (1 << g.vertex_count()) - 1);
        if let Some(i) = p.iter().position(Option::is_none) {
            let mut q = p.clone();
            q[i] = Some(k);
            let bigger = build_type_one(&build(&v, &q, None), 10).unwrap();
            prop_assert!(t.edges().is_subset(bigger.edges()));
        }
    }
}

#[test]
fn type_one_universe_size_up_to_six() {
    for n in 1..=6 {
        let g = neutrograph::fixtures::empty(n);
        assert_eq!(build_type_one(&g, 10).unwrap().vertex_count(), (1 << n) - 1);
    }
}

#[test]
fn edge_counts_sum_to_total() {
    for n in 1..=4u32 {
        let m = (1u64 << n) - 1;
        let pairs = m * (m - 1) / 2;
        let sum: BigUint = (0..=pairs).map(|r| subset::count_type_two_with_edges(n, &BigUint::from(r)).unwrap()).sum();
        assert_eq!(sum, subset::count_type_two(n).unwrap());
        assert_eq!(binomial(&BigUint::from(pairs), &BigUint::from(pairs + 1)), BigUint::from(0u32));
    }
}

#[test]
fn orbits_on_three_vertices_sum_to_eight() {
    let census = subset::enumerate_type_two_iso(3, None).unwrap();
    assert_eq!(census.class_count(), 4);
    assert_eq!(BigUint::from(census.labeled_total()), subset::count_type_two(2).unwrap());
}

#[test]
fn largest_subgraphs_of_two_mixed_components_are_disconnected() {
    let r = Kind::Real;
    let i = Kind::Indeterminate;
    let g = NeutroGraph::from_parts(
        &[("a", r), ("b", r), ("c", r), ("d", r), ("e", r), ("f", r)],
        &[("a", "b", r), ("b", "c", i), ("d", "e", r), ("e", "f", i)],
    )
    .unwrap();
    assert!(!transform::largest_usual_subgraph(&g).is_connected());
    assert!(!transform::largest_pure_neutrosophic_subgraph(&g).is_connected());
    assert_eq!(transform::largest_usual_subgraph(&g).component_count(), 2);
}
