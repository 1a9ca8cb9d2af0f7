//! Finite balls of the Cayley graph Cay(G(Γ)) with respect to {a_v}, taken
//! undirected and without multiple edges.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph_model::{GraphError, ProductGraph};
use crate::planarity::SimpleGraph;
use crate::words::{NormalForm, Syllable};

pub const DEFAULT_MAX_VERTICES: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BallError {
    #[error("ball of radius {radius} exceeds the cap of {cap} vertices")]
    CapExceeded { radius: u32, cap: usize },
}

/// An edge `{a, b}` of the ball with `b = a · a_v^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BallEdge {
    pub a: usize,
    pub b: usize,
    pub generator: usize,
}

#[derive(Debug, Clone)]
pub struct CayleyBall {
    graph: ProductGraph,
    radius: u32,
    elements: Vec<NormalForm>,
    distance: Vec<u32>,
    edges: Vec<BallEdge>,
    index: HashMap<NormalForm, usize>,
}

impl CayleyBall {
    pub fn graph(&self) -> &ProductGraph {
        &self.graph
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Elements in BFS order; index 0 is the identity.
    pub fn elements(&self) -> &[NormalForm] {
        &self.elements
    }

    pub fn distance(&self, i: usize) -> u32 {
        self.distance[i]
    }

    pub fn distances(&self) -> &[u32] {
        &self.distance
    }

    pub fn edges(&self) -> &[BallEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &NormalForm) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.index.contains_key(x)
    }

    pub fn to_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.len(), self.edges.iter().map(|e| (e.a, e.b)))
    }

    /// Counts of elements at each exact distance `0..=radius`.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.radius as usize + 1];
        for &d in &self.distance {
            sizes[d as usize] += 1;
        }
        sizes
    }

    /// The sub-ball of elements supported on `vs`, re-expressed over the
    /// subgraph ⟨vs⟩.
    pub fn restrict_to_subgroup<I, S>(&self, vs: I) -> Result<CayleyBall, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let keep = vs
            .into_iter()
            .map(|id| self.graph.require(id.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        let (sub, kept) = self.graph.induced_by_indices(&keep);
        let mut new_vertex = vec![usize::MAX; self.graph.len()];
        for (k, &v) in kept.iter().enumerate() {
            new_vertex[v] = k;
        }
        let mut new_index = vec![usize::MAX; self.len()];
        let mut elements = Vec::new();
        let mut distance = Vec::new();
        for (i, x) in self.elements.iter().enumerate() {
            if x.support().all(|v| new_vertex[v] != usize::MAX) {
                new_index[i] = elements.len();
                elements.push(x.remap(|v| new_vertex[v]));
                distance.push(self.distance[i]);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_index[e.a] != usize::MAX && new_index[e.b] != usize::MAX)
            .map(|e| BallEdge { a: new_index[e.a], b: new_index[e.b], generator: new_vertex[e.generator] })
            .collect();
        let index = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        Ok(CayleyBall { graph: sub, radius: self.radius, elements, distance, edges, index })
    }

    pub fn label(&self, i: usize) -> String {
        let text = self.elements[i].to_text(&self.graph);
        if text.is_empty() {
            "1".to_owned()
        } else {
            text
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph cayley_ball {\n");
        for i in 0..self.len() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", self.label(i));
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.a, e.b, self.graph.id(e.generator));
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for CayleyBall {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            radius: u32,
            vertices: Vec<String>,
            distance: &'a [u32],
            edges: Vec<(usize, usize, &'a str)>,
        }
        Out {
            radius: self.radius,
            vertices: self.elements.iter().map(|x| x.to_text(&self.graph)).collect(),
            distance: &self.distance,
            edges: self.edges.iter().map(|e| (e.a, e.b, self.graph.id(e.generator))).collect(),
        }
        .serialize(serializer)
    }
}

/// Breadth-first construction of the radius-`r` ball around the identity.
pub fn ball(g: &ProductGraph, r: u32) -> Result<CayleyBall, BallError> {
    ball_with_cap(g, r, DEFAULT_MAX_VERTICES)
}

pub fn ball_with_cap(g: &ProductGraph, r: u32, cap: usize) -> Result<CayleyBall, BallError> {
    // a_v and its inverse; they coincide for order 2
    let steps: Vec<(Syllable, usize)> = (0..g.len())
        .flat_map(|v| {
            let up = Syllable::new(g, v, 1).expect("orders are at least 2");
            let down = up.inverse(g);
            let both = if up == down { vec![up] } else { vec![up, down] };
            both.into_iter().map(move |s| (s, v))
        })
        .collect();
    let mut elements = vec![NormalForm::identity()];
    let mut distance = vec![0];
    let mut index = HashMap::from([(NormalForm::identity(), 0)]);
    let mut edges = Vec::new();
    let mut seen_edges = HashSet::new();
    let mut head = 0;
    while head < elements.len() {
        let d = distance[head];
        for &(s, v) in &steps {
            let y = elements[head].mul_syllable(g, s);
            let j = match index.get(&y) {
                Some(&j) => j,
                None if d < r => {
                    if elements.len() >= cap {
                        return Err(BallError::CapExceeded { radius: r, cap });
                    }
                    let j = elements.len();
                    index.insert(y.clone(), j);
                    elements.push(y);
                    distance.push(d + 1);
                    j
                }
                None => continue,
            };
            let key = (head.min(j), head.max(j));
            if seen_edges.insert(key) {
                edges.push(BallEdge { a: key.0, b: key.1, generator: v });
            }
        }
        head += 1;
    }
    Ok(CayleyBall { graph: g.clone(), radius: r, elements, distance, edges, index })
}

pub fn sphere_sizes(g: &ProductGraph, r: u32) -> Result<Vec<usize>, BallError> {
    Ok(ball(g, r)?.sphere_sizes())
}
