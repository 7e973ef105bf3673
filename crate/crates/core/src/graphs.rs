//! Power graphs, enhanced power graphs, complements, and distance metrics.

use std::collections::VecDeque;
use std::fmt::Write;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{ElementId, GroupTable};
use crate::subgroups::{CyclicLattice, MaximalCyclicFamily};

/// Which graph on the group is meant.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Power,
    Enhanced,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GraphKind::Power => "power",
            GraphKind::Enhanced => "enhanced",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),
    #[error("graph has no vertices")]
    Empty,
}

/// Group element carried by a graph vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct VertexLabel {
    pub element: ElementId,
    pub order: u32,
}

/// Undirected simple graph on `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<FixedBitSet>,
    labels: Option<Vec<VertexLabel>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph { adjacency: vec![FixedBitSet::with_capacity(vertex_count); vertex_count], labels: None }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(vertex_count: usize) -> Self {
        complement(&Self::new(vertex_count))
    }

    /// Labels every vertex with the group element of the same index.
    pub fn with_group_labels(mut self, group: &GroupTable) -> Self {
        assert_eq!(self.vertex_count(), group.order());
        self.labels = Some(
            group.elements().map(|g| VertexLabel { element: g, order: group.orders()[g.0] }).collect(),
        );
        self
    }

    /// Ignores loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    /// Element carried by vertex `v`, or `v` itself when unlabeled.
    pub fn element_of(&self, v: usize) -> ElementId {
        self.labels.as_ref().map_or(ElementId(v), |l| l[v].element)
    }
}

/// g ∼ h iff g ≠ h and one is a power of the other.
pub fn power_graph(group: &GroupTable) -> SimpleGraph {
    power_graph_from(group, &CyclicLattice::new(group))
}

pub fn power_graph_from(group: &GroupTable, lattice: &CyclicLattice) -> SimpleGraph {
    let n = group.order();
    let mut g = SimpleGraph::new(n);
    for h in 0..n {
        for x in lattice.get(ElementId(h)).members().ones() {
            g.add_edge(x, h);
        }
    }
    g.with_group_labels(group)
}

/// g ∼ h iff g ≠ h and ⟨g, h⟩ is cyclic, decided by a shared maximal cyclic subgroup.
pub fn enhanced_power_graph(group: &GroupTable, family: &MaximalCyclicFamily) -> SimpleGraph {
    let n = group.order();
    let mut g = SimpleGraph::new(n);
    for m in family.subgroups() {
        let members: Vec<usize> = m.members().ones().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    g.with_group_labels(group)
}

pub fn complement(g: &SimpleGraph) -> SimpleGraph {
    let n = g.vertex_count();
    let adjacency = g
        .adjacency
        .iter()
        .enumerate()
        .map(|(v, adj)| {
            let mut c = adj.clone();
            c.toggle_range(..);
            c.set(v, false);
            c
        })
        .collect();
    debug_assert!(n == 0 || g.adjacency[0].len() == n);
    SimpleGraph { adjacency, labels: g.labels.clone() }
}

/// Non-isolated vertices of a graph and the subgraph they induce.
#[derive(Clone, Debug)]
pub struct StarDecomposition {
    /// Original ids of non-isolated vertices, ascending. Vertex `i` of `graph` is `kept[i]`.
    pub kept: Vec<usize>,
    pub isolated: Vec<usize>,
    pub graph: SimpleGraph,
}

impl StarDecomposition {
    pub fn isolated_elements(&self, original: &SimpleGraph) -> Vec<ElementId> {
        self.isolated.iter().map(|&v| original.element_of(v)).collect()
    }
}

pub fn star(g: &SimpleGraph) -> StarDecomposition {
    let (kept, isolated): (Vec<usize>, Vec<usize>) = (0..g.vertex_count()).partition(|&v| g.degree(v) > 0);
    let mut position = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in kept.iter().enumerate() {
        position[v] = i;
    }
    let mut graph = SimpleGraph::new(kept.len());
    for (i, &v) in kept.iter().enumerate() {
        for w in g.neighbors(v) {
            graph.adjacency[i].insert(position[w]);
        }
    }
    // Unlabeled input still records original ids; order 0 marks "unknown".
    graph.labels = Some(match &g.labels {
        Some(l) => kept.iter().map(|&v| l[v]).collect(),
        None => kept.iter().map(|&v| VertexLabel { element: ElementId(v), order: 0 }).collect(),
    });
    StarDecomposition { kept, isolated, graph }
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if !seen.put(w) {
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

/// Breadth-first distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(g: &SimpleGraph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distance(g: &SimpleGraph, u: usize, v: usize) -> Option<usize> {
    bfs_distances(g, u)[v]
}

/// Eccentricity of `source`, with the first vertex realizing it.
fn eccentricity(g: &SimpleGraph, source: usize) -> Result<(usize, usize), GraphError> {
    let mut best = (0, source);
    for (v, d) in bfs_distances(g, source).into_iter().enumerate() {
        match d {
            None => return Err(GraphError::Disconnected(source, v)),
            Some(d) if d > best.0 => best = (d, v),
            _ => {}
        }
    }
    Ok(best)
}

/// Diameter together with the lexicographically first pair `(u, v)` at that distance.
pub fn diameter_with_witness(g: &SimpleGraph) -> Result<(usize, usize, usize), GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    #[cfg(feature = "parallel")]
    let eccs: Vec<_> = {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(|s| eccentricity(g, s)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let eccs: Vec<_> = (0..n).map(|s| eccentricity(g, s)).collect();

    let mut best = (0, 0, 0);
    for (s, e) in eccs.into_iter().enumerate() {
        let (d, v) = e?;
        if d > best.0 {
            best = (d, s, v);
        }
    }
    Ok(best)
}

/// Greatest distance between two vertices, by breadth-first search from every vertex.
pub fn diameter(g: &SimpleGraph) -> Result<usize, GraphError> {
    diameter_with_witness(g).map(|(d, _, _)| d)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    EdgeList,
}

pub fn export_graph(g: &SimpleGraph, format: ExportFormat) -> String {
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        ExportFormat::Dot => {
            out.push_str("graph G {\n");
            for v in 0..g.vertex_count() {
                match g.labels() {
                    Some(l) if l[v].order > 0 => {
                        writeln!(out, "  {v} [label=\"{} (o={})\"];", l[v].element, l[v].order).unwrap()
                    }
                    Some(l) => writeln!(out, "  {v} [label=\"{}\"];", l[v].element).unwrap(),
                    None => writeln!(out, "  {v};").unwrap(),
                }
            }
            for (u, v) in g.edges() {
                writeln!(out, "  {u} -- {v};").unwrap();
            }
            out.push_str("}\n");
        }
    }
    out
}
