//! Walks, circuits and their classification by the kinds they pass through.

use crate::error::{too_large, Error, Result};
use crate::graph::{Kind, NeutroGraph, Profile};

pub const DEFAULT_CIRCUIT_CAP: usize = 12;

/// An alternating vertex/edge sequence `v0 e1 v1 ... ek vk` in a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Walk {
    /// Builds the walk through consecutive vertex indices, resolving each
    /// step to the host edge joining the pair.
    pub fn from_indices(g: &NeutroGraph, vertices: Vec<usize>) -> Result<Walk> {
        if vertices.is_empty() {
            return Err(Error::InvalidWalk("a walk needs at least one vertex".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::InvalidWalk(format!("vertex #{v} is not in the graph")));
        }
        let edges = vertices
            .windows(2)
            .map(|w| {
                g.edge_between(w[0], w[1])
                    .ok_or_else(|| Error::InvalidWalk(format!("no edge {} -- {}", g.id(w[0]), g.id(w[1]))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Walk { vertices, edges })
    }

    pub fn from_ids(g: &NeutroGraph, ids: &[&str]) -> Result<Walk> {
        let vertices = ids
            .iter()
            .map(|id| g.vertex_index(id).ok_or_else(|| Error::InvalidWalk(format!("unknown vertex `{id}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(g, vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn reversed(&self) -> Walk {
        Walk {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkClass {
    Usual,
    Neutrosophic,
    PureNeutrosophic,
    StrongNeutrosophic,
    StrongPureNeutrosophic,
}

impl WalkClass {
    pub const ALL: [WalkClass; 5] = [
        WalkClass::Usual,
        WalkClass::Neutrosophic,
        WalkClass::PureNeutrosophic,
        WalkClass::StrongNeutrosophic,
        WalkClass::StrongPureNeutrosophic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WalkClass::Usual => "usual",
            WalkClass::Neutrosophic => "neutrosophic",
            WalkClass::PureNeutrosophic => "pure neutrosophic",
            WalkClass::StrongNeutrosophic => "strong neutrosophic",
            WalkClass::StrongPureNeutrosophic => "strong pure neutrosophic",
        }
    }
}

/// Classifies a walk of positive length by the kinds on it.
///
/// | vertices        | edges     | class                 |
/// |-----------------|-----------|-----------------------|
/// | all real        | all real  | usual                 |
/// | all real        | mixed     | neutrosophic          |
/// | all real        | all indet | pure neutrosophic     |
/// | some indet      | all indet | strong pure           |
/// | some indet      | mixed     | strong                |
/// | some indet      | all real  | strong (degenerate)   |
pub fn classify_walk(g: &NeutroGraph, w: &Walk) -> Result<WalkClass> {
    if w.is_empty() {
        return Err(Error::EmptyWalk);
    }
    let vertices_real = w.vertices.iter().all(|&v| g.vertex(v).kind.is_real());
    let edges = Profile::of(w.edges.iter().map(|&e| g.edge(e).kind));
    Ok(match (vertices_real, edges) {
        (true, Profile::AllReal) => WalkClass::Usual,
        (true, Profile::Mixed) => WalkClass::Neutrosophic,
        (true, Profile::AllIndeterminate) => WalkClass::PureNeutrosophic,
        (false, Profile::AllIndeterminate) => WalkClass::StrongPureNeutrosophic,
        (false, Profile::Mixed | Profile::AllReal) => WalkClass::StrongNeutrosophic,
        (_, Profile::Empty) => unreachable!("walk has edges"),
    })
}

/// `(indeterminate edges, real edges)` along the walk, counted with
/// multiplicity.
pub fn edge_kind_split(g: &NeutroGraph, w: &Walk) -> (usize, usize) {
    let real = w.edges.iter().filter(|&&e| g.edge(e).kind == Kind::Real).count();
    (w.len() - real, real)
}

/// A cycle of length at least 3, stored once in canonical orientation: it
/// starts at its smallest vertex and the second vertex is smaller than the
/// last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub vertices: Vec<usize>,
    pub class: WalkClass,
}

impl Circuit {
    /// The closed walk around the circuit.
    pub fn walk(&self, g: &NeutroGraph) -> Walk {
        let mut vs = self.vertices.clone();
        vs.push(vs[0]);
        Walk::from_indices(g, vs).expect("circuit edges exist")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Canonical rotation/orientation of a cycle given as a vertex sequence.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let start = (0..n).min_by_key(|&i| cycle[i]).expect("nonempty cycle");
    let forward: Vec<usize> = (0..n).map(|k| cycle[(start + k) % n]).collect();
    let backward: Vec<usize> = (0..n).map(|k| cycle[(start + n - k) % n]).collect();
    forward.min(backward)
}

/// Every circuit of `g`, each once, sorted by canonical vertex sequence.
pub fn enumerate_circuits(g: &NeutroGraph, cap: usize) -> Result<Vec<Circuit>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(too_large("graph for circuit enumeration", n, cap));
    }
    let mut found = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        let mut path = vec![start];
        on_path[start] = true;
        extend(g, start, &mut path, &mut on_path, &mut found);
        on_path[start] = false;
    }
    found.sort();
    found
        .into_iter()
        .map(|vertices| {
            let mut closed = vertices.clone();
            closed.push(vertices[0]);
            let class = classify_walk(g, &Walk::from_indices(g, closed)?)?;
            Ok(Circuit { vertices, class })
        })
        .collect()
}

fn extend(g: &NeutroGraph, start: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let u = *path.last().expect("path starts at start");
    for w in g.neighbors(u) {
        if w == start && path.len() >= 3 && path[1] < u {
            out.push(path.clone());
        }
        if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, start, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CircuitCensus {
    pub usual: usize,
    pub neutrosophic: usize,
    pub pure: usize,
    pub strong: usize,
    pub strong_pure: usize,
}

impl CircuitCensus {
    pub fn of(circuits: &[Circuit]) -> Self {
        let mut c = CircuitCensus::default();
        for circuit in circuits {
            *c.slot(circuit.class) += 1;
        }
        c
    }

    fn slot(&mut self, class: WalkClass) -> &mut usize {
        match class {
            WalkClass::Usual => &mut self.usual,
            WalkClass::Neutrosophic => &mut self.neutrosophic,
            WalkClass::PureNeutrosophic => &mut self.pure,
            WalkClass::StrongNeutrosophic => &mut self.strong,
            WalkClass::StrongPureNeutrosophic => &mut self.strong_pure,
        }
    }

    pub fn total(&self) -> usize {
        self.usual + self.neutrosophic + self.pure + self.strong + self.strong_pure
    }
}

/// Whether some trail (open or closed) uses every edge exactly once. Kinds
/// are ignored.
pub fn has_eulerian_trail(g: &NeutroGraph) -> bool {
    if g.edge_count() == 0 {
        return false;
    }
    let bearing = g.connected_components().iter().filter(|c| c.iter().any(|&v| g.degree(v) > 0)).count();
    let odd = (0..g.vertex_count()).filter(|&v| g.degree(v) % 2 == 1).count();
    bearing == 1 && (odd == 0 || odd == 2)
}
