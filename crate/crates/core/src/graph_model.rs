//! Vertex-labelled simplicial graphs and the graph predicates used by the
//! planarity criterion.
//!
//! Vertices are identified by opaque string ids. Internally every graph keeps
//! its vertices sorted lexicographically by id, so a vertex index doubles as
//! its rank in the canonical total order. Everything downstream (normal
//! forms, tie-breaking in searches, decomposition plans) relies on that.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use crate::subdivision::Model;

/// A K4 / K2,3 / K5 / K3,3 subdivision expressed over vertex ids.
pub type GraphCertificate = crate::subdivision::Subdivision<String>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex id {0:?}")]
    UnknownVertex(String),
    #[error("vertex {id:?} has order {order}; orders must be at least 2")]
    InvalidOrder { id: String, order: u64 },
    #[error("vertex {0:?} has no cyclic factors")]
    NoFactors(String),
    #[error("invalid vertex id {0:?}: ids must be non-empty and contain no whitespace or '^'")]
    InvalidId(String),
    #[error("self-loop on vertex {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {{{0:?}, {1:?}}}")]
    DuplicateEdge(String, String),
}

pub(crate) fn validate_id(id: &str) -> Result<(), GraphError> {
    if id.is_empty() || id.chars().any(|c| c.is_whitespace() || c == '^') {
        return Err(GraphError::InvalidId(id.to_owned()));
    }
    Ok(())
}

/// A finite simplicial graph whose vertices carry finite cyclic groups,
/// recorded by their order.
#[derive(Clone, PartialEq, Eq)]
pub struct ProductGraph {
    ids: Vec<String>,
    orders: Vec<u32>,
    neighbors: Vec<Vec<usize>>,
    // n*n adjacency matrix; normal-form computations query it constantly.
    matrix: Vec<bool>,
}

impl ProductGraph {
    pub fn new<V, E, S, T>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = (S, u32)>,
        E: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: AsRef<str>,
    {
        let mut labelled: Vec<(String, u32)> = Vec::new();
        for (id, order) in vertices {
            let id = id.into();
            validate_id(&id)?;
            if order < 2 {
                return Err(GraphError::InvalidOrder { id, order: order.into() });
            }
            labelled.push((id, order));
        }
        labelled.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = labelled.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(GraphError::DuplicateVertex(w[0].0.clone()));
        }
        let (ids, orders): (Vec<_>, Vec<_>) = labelled.into_iter().unzip();
        let mut graph = Self::with_sorted(ids, orders);
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = graph.require(a)?;
            let j = graph.require(b)?;
            if i == j {
                return Err(GraphError::SelfLoop(a.to_owned()));
            }
            if graph.adjacent(i, j) {
                return Err(GraphError::DuplicateEdge(a.to_owned(), b.to_owned()));
            }
            graph.connect(i, j);
        }
        graph.finish();
        Ok(graph)
    }

    fn with_sorted(ids: Vec<String>, orders: Vec<u32>) -> Self {
        let n = ids.len();
        Self {
            ids,
            orders,
            neighbors: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    fn connect(&mut self, i: usize, j: usize) {
        let n = self.len();
        self.matrix[i * n + j] = true;
        self.matrix[j * n + i] = true;
        self.neighbors[i].push(j);
        self.neighbors[j].push(i);
    }

    fn finish(&mut self) {
        for list in &mut self.neighbors {
            list.sort_unstable();
        }
    }

    /// Builds a graph from index-based data. `ids` must already be sorted and
    /// unique, and `edges` must be valid and duplicate-free.
    pub(crate) fn from_parts(ids: Vec<String>, orders: Vec<u32>, edges: &[(usize, usize)]) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        let mut graph = Self::with_sorted(ids, orders);
        for &(i, j) in edges {
            graph.connect(i, j);
        }
        graph.finish();
        graph
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn order(&self, v: usize) -> u32 {
        self.orders[v]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.binary_search_by(|probe| probe.as_str().cmp(id)).ok()
    }

    pub(crate) fn require(&self, id: &str) -> Result<usize, GraphError> {
        self.index_of(id).ok_or_else(|| GraphError::UnknownVertex(id.to_owned()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.matrix[i * self.len() + j]
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges().map(|(i, j)| (self.id(i), self.id(j)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&str, u32)> + '_ {
        self.ids.iter().map(String::as_str).zip(self.orders.iter().copied())
    }

    /// The subgraph generated by the given vertex indices.
    pub(crate) fn induced_by_indices(&self, keep: &[usize]) -> (ProductGraph, Vec<usize>) {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_index = vec![usize::MAX; self.len()];
        for (k, &v) in keep.iter().enumerate() {
            new_index[v] = k;
        }
        let ids = keep.iter().map(|&v| self.ids[v].clone()).collect();
        let orders = keep.iter().map(|&v| self.orders[v]).collect();
        let edges: Vec<_> = self
            .edges()
            .filter(|&(i, j)| new_index[i] != usize::MAX && new_index[j] != usize::MAX)
            .map(|(i, j)| (new_index[i], new_index[j]))
            .collect();
        (Self::from_parts(ids, orders, &edges), keep)
    }

    /// ⟨vs⟩: the vertices `vs` together with every edge of `self` between them.
    pub fn induced_subgraph<I, S>(&self, vs: I) -> Result<ProductGraph, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let keep = vs
            .into_iter()
            .map(|id| self.require(id.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.induced_by_indices(&keep).0)
    }

    /// Splits into (Γ₌₂, Γ₍>₂₎), the subgraphs generated by the order-2 and
    /// the higher-order vertices respectively.
    pub fn split_by_order(&self) -> (ProductGraph, ProductGraph) {
        let (two, more): (Vec<usize>, Vec<usize>) = (0..self.len()).partition(|&v| self.orders[v] == 2);
        (self.induced_by_indices(&two).0, self.induced_by_indices(&more).0)
    }

    /// lk(v): the subgraph generated by the neighbours of `v`.
    pub fn link(&self, v: &str) -> Result<ProductGraph, GraphError> {
        let v = self.require(v)?;
        Ok(self.induced_by_indices(&self.neighbors[v]).0)
    }

    pub(crate) fn component_indices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut components = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// Connected components as id sets, ordered by their smallest id.
    pub fn connected_components(&self) -> Vec<BTreeSet<String>> {
        self.component_indices()
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.ids[v].clone()).collect())
            .collect()
    }

    /// Finds a shortest induced cycle through `v`, if any.
    ///
    /// Two neighbours that are adjacent give a triangle. Otherwise a shortest
    /// path between them that avoids `v` and all of `v`'s other neighbours is
    /// chordless, and closing it through `v` gives an induced cycle.
    pub(crate) fn induced_cycle_indices(&self, v: usize) -> Option<Vec<usize>> {
        let ns = &self.neighbors[v];
        let mut best: Option<Vec<usize>> = None;
        for (a, &x) in ns.iter().enumerate() {
            for &y in &ns[a + 1..] {
                if self.adjacent(x, y) {
                    return Some(vec![v, x, y]);
                }
                let Some(path) = self.shortest_path_avoiding(x, y, |u| u == v || (u != y && self.adjacent(u, v)))
                else {
                    continue;
                };
                if best.as_ref().is_none_or(|b| path.len() + 1 < b.len()) {
                    let mut cycle = Vec::with_capacity(path.len() + 1);
                    cycle.push(v);
                    cycle.extend(path);
                    best = Some(cycle);
                }
            }
        }
        best
    }

    fn shortest_path_avoiding(&self, from: usize, to: usize, blocked: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.neighbors[u] {
                if parent[w] == usize::MAX && !blocked(w) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// An induced cycle (length ≥ 3) containing `v`, as a vertex id sequence
    /// starting at `v`.
    pub fn has_induced_cycle_through(&self, v: &str) -> Result<Option<Vec<String>>, GraphError> {
        let v = self.require(v)?;
        Ok(self
            .induced_cycle_indices(v)
            .map(|c| c.into_iter().map(|u| self.ids[u].clone()).collect()))
    }

    /// True when `cycle` lists ≥ 3 distinct vertices forming a cycle with no
    /// chords.
    pub fn is_induced_cycle<S: AsRef<str>>(&self, cycle: &[S]) -> bool {
        let Ok(idx) = cycle.iter().map(|s| self.require(s.as_ref())).collect::<Result<Vec<_>, _>>() else {
            return false;
        };
        let k = idx.len();
        if k < 3 || idx.iter().collect::<BTreeSet<_>>().len() != k {
            return false;
        }
        for a in 0..k {
            for b in a + 1..k {
                let consecutive = b == a + 1 || (a == 0 && b == k - 1);
                if self.adjacent(idx[a], idx[b]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// Relabels vertices through `rename`, which must be injective.
    pub fn relabel(&self, rename: impl Fn(&str) -> String) -> Result<ProductGraph, GraphError> {
        let vertices: Vec<_> = self.vertices().map(|(id, o)| (rename(id), o)).collect();
        let edges: Vec<_> = self.edge_ids().map(|(a, b)| (rename(a), rename(b))).collect();
        ProductGraph::new(vertices, edges)
    }
}

impl fmt::Debug for ProductGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProductGraph")
            .field("vertices", &self.vertices().collect::<Vec<_>>())
            .field("edges", &self.edge_ids().collect::<Vec<_>>())
            .finish()
    }
}

/// A graph whose vertices carry finite abelian groups, given as lists of
/// cyclic factor orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianProductGraph {
    vertices: Vec<(String, Vec<u32>)>,
    edges: Vec<(String, String)>,
}

impl AbelianProductGraph {
    pub fn new<V, E, S, T>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = (S, Vec<u32>)>,
        E: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let vertices: Vec<(String, Vec<u32>)> = vertices.into_iter().map(|(id, o)| (id.into(), o)).collect();
        let edges: Vec<(String, String)> = edges.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        for (id, factors) in &vertices {
            if factors.is_empty() {
                return Err(GraphError::NoFactors(id.clone()));
            }
            if let Some(&bad) = factors.iter().find(|&&o| o < 2) {
                return Err(GraphError::InvalidOrder { id: id.clone(), order: bad.into() });
            }
        }
        // Reuse the simple-graph validation on a stand-in with order 2 everywhere.
        ProductGraph::new(vertices.iter().map(|(id, _)| (id.clone(), 2)), edges.iter().map(|(a, b)| (a, b)))?;
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> &[(String, Vec<u32>)] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    /// Replaces every vertex by a clique on its cyclic factors and every edge
    /// by the complete join between the two cliques.
    ///
    /// A vertex with a single factor keeps its id; a vertex `x` with `k > 1`
    /// factors becomes `x.0`, …, `x.{k-1}`.
    pub fn expand(&self) -> ProductGraph {
        let mut taken: BTreeSet<String> = self
            .vertices
            .iter()
            .filter(|(_, f)| f.len() == 1)
            .map(|(id, _)| id.clone())
            .collect();
        let mut blocks: HashMap<&str, Vec<String>> = HashMap::new();
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (id, factors) in &self.vertices {
            let names: Vec<String> = if factors.len() == 1 {
                vec![id.clone()]
            } else {
                (0..factors.len())
                    .map(|i| {
                        let mut name = format!("{id}.{i}");
                        while taken.contains(&name) {
                            name.push('_');
                        }
                        taken.insert(name.clone());
                        name
                    })
                    .collect()
            };
            for (a, name) in names.iter().enumerate() {
                vertices.push((name.clone(), factors[a]));
                for other in &names[a + 1..] {
                    edges.push((name.clone(), other.clone()));
                }
            }
            blocks.insert(id.as_str(), names);
        }
        for (a, b) in &self.edges {
            for x in &blocks[a.as_str()] {
                for y in &blocks[b.as_str()] {
                    edges.push((x.clone(), y.clone()));
                }
            }
        }
        ProductGraph::new(vertices, edges).expect("expansion of a valid abelian graph is valid")
    }
}

pub fn expand_abelian(g: &AbelianProductGraph) -> ProductGraph {
    g.expand()
}

/// Serialized shape shared by the JSON reader and writer.
#[derive(Serialize, Deserialize)]
pub(crate) struct VertexRecord {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orders: Option<Vec<u32>>,
}

impl Serialize for ProductGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            vertices: Vec<VertexRecord>,
            edges: Vec<[&'a str; 2]>,
        }
        Out {
            vertices: self
                .vertices()
                .map(|(id, o)| VertexRecord { id: id.to_owned(), order: Some(o), orders: None })
                .collect(),
            edges: self.edge_ids().map(|(a, b)| [a, b]).collect(),
        }
        .serialize(serializer)
    }
}

impl Serialize for AbelianProductGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            vertices: Vec<VertexRecord>,
            edges: Vec<[&'a str; 2]>,
        }
        Out {
            vertices: self
                .vertices
                .iter()
                .map(|(id, o)| VertexRecord { id: id.clone(), order: None, orders: Some(o.clone()) })
                .collect(),
            edges: self.edges.iter().map(|(a, b)| [a.as_str(), b.as_str()]).collect(),
        }
        .serialize(serializer)
    }
}
