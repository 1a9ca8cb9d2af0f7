//! Subdivisions of small complete (bipartite) graphs, generic over the host
//! graph's vertex type.
//!
//! The same certificate shape is used for vertex-id certificates inside a
//! product graph, index certificates inside a [`SimpleGraph`], and
//! group-element witnesses inside a Cayley graph.
//!
//! [`SimpleGraph`]: crate::planarity::SimpleGraph

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    K4,
    K23,
    K5,
    K33,
}

impl Model {
    pub fn branch_count(self) -> usize {
        match self {
            Model::K4 => 4,
            Model::K23 | Model::K5 => 5,
            Model::K33 => 6,
        }
    }

    /// Edges of the model graph as pairs of branch positions.
    ///
    /// Bipartite models list one side first: K2,3 is `{0,1} × {2,3,4}`, K3,3
    /// is `{0,1,2} × {3,4,5}`.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let complete = |k: usize| (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j))).collect();
        let bipartite = |a: usize, b: usize| (0..a).flat_map(move |i| (a..a + b).map(move |j| (i, j))).collect();
        match self {
            Model::K4 => complete(4),
            Model::K5 => complete(5),
            Model::K23 => bipartite(2, 3),
            Model::K33 => bipartite(3, 3),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::K4 => "K4",
            Model::K23 => "K23",
            Model::K5 => "K5",
            Model::K33 => "K33",
        })
    }
}

/// Branch vertices plus one path per model edge, `paths[k]` realising
/// `model.edges()[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subdivision<V> {
    pub model: Model,
    pub branch: Vec<V>,
    pub paths: Vec<Vec<V>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Defect {
    #[error("{model} needs {expected} branch vertices, found {found}")]
    BranchCount { model: Model, expected: usize, found: usize },
    #[error("branch vertices are not distinct")]
    RepeatedBranch,
    #[error("{model} needs {expected} paths, found {found}")]
    PathCount { model: Model, expected: usize, found: usize },
    #[error("path {0} does not join the branch pair it stands for")]
    WrongEndpoints(usize),
    #[error("path {0} repeats a vertex")]
    PathRepeats(usize),
    #[error("path {path} steps between non-adjacent vertices at position {position}")]
    NotAdjacent { path: usize, position: usize },
    #[error("path {0} passes through a vertex already used elsewhere")]
    NotDisjoint(usize),
}

impl<V: Clone + Eq + Hash> Subdivision<V> {
    /// Checks the certificate against a host adjacency relation.
    pub fn check(&self, adjacent: impl Fn(&V, &V) -> bool) -> Result<(), Defect> {
        let model = self.model;
        if self.branch.len() != model.branch_count() {
            return Err(Defect::BranchCount { model, expected: model.branch_count(), found: self.branch.len() });
        }
        let mut used: HashSet<&V> = HashSet::new();
        for b in &self.branch {
            if !used.insert(b) {
                return Err(Defect::RepeatedBranch);
            }
        }
        let pattern = model.edges();
        if self.paths.len() != pattern.len() {
            return Err(Defect::PathCount { model, expected: pattern.len(), found: self.paths.len() });
        }
        for (k, (path, &(i, j))) in self.paths.iter().zip(&pattern).enumerate() {
            let (Some(first), Some(last)) = (path.first(), path.last()) else {
                return Err(Defect::WrongEndpoints(k));
            };
            let forward = *first == self.branch[i] && *last == self.branch[j];
            let backward = *first == self.branch[j] && *last == self.branch[i];
            if path.len() < 2 || !(forward || backward) {
                return Err(Defect::WrongEndpoints(k));
            }
            let mut own: HashSet<&V> = HashSet::new();
            if !path.iter().all(|v| own.insert(v)) {
                return Err(Defect::PathRepeats(k));
            }
            if let Some(position) = path.windows(2).position(|w| !adjacent(&w[0], &w[1])) {
                return Err(Defect::NotAdjacent { path: k, position });
            }
            for v in &path[1..path.len() - 1] {
                if !used.insert(v) {
                    return Err(Defect::NotDisjoint(k));
                }
            }
        }
        Ok(())
    }

    /// Every vertex mentioned by the certificate, branch vertices first.
    pub fn vertices(&self) -> Vec<V> {
        let mut seen = HashSet::new();
        self.branch
            .iter()
            .chain(self.paths.iter().flatten())
            .filter(|v| seen.insert(*v))
            .cloned()
            .collect()
    }

    /// Edges of the spanned subgraph, one per consecutive path pair.
    pub fn edges(&self) -> Vec<(V, V)> {
        self.paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0].clone(), w[1].clone())))
            .collect()
    }

    pub fn map<W>(&self, f: impl Fn(&V) -> W) -> Subdivision<W> {
        Subdivision {
            model: self.model,
            branch: self.branch.iter().map(&f).collect(),
            paths: self.paths.iter().map(|p| p.iter().map(&f).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33_in_k33() -> Subdivision<u32> {
        let branch = vec![0, 1, 2, 3, 4, 5];
        let paths = Model::K33.edges().into_iter().map(|(i, j)| vec![i as u32, j as u32]).collect();
        Subdivision { model: Model::K33, branch, paths }
    }

    fn k33_adjacent(a: &u32, b: &u32) -> bool {
        (*a < 3) != (*b < 3)
    }

    #[test]
    fn model_edge_counts() {
        assert_eq!(Model::K4.edges().len(), 6);
        assert_eq!(Model::K23.edges().len(), 6);
        assert_eq!(Model::K5.edges().len(), 10);
        assert_eq!(Model::K33.edges().len(), 9);
    }

    #[test]
    fn accepts_plain_k33() {
        assert_eq!(k33_in_k33().check(k33_adjacent), Ok(()));
    }

    #[test]
    fn rejects_shared_interior_vertex() {
        // Host: K3,3 plus a hub 9 joined to everything.
        let adjacent = |a: &u32, b: &u32| *a == 9 || *b == 9 || k33_adjacent(a, b);
        let mut c = k33_in_k33();
        c.paths[0] = vec![0, 9, 3];
        assert_eq!(c.check(adjacent), Ok(()));
        c.paths[1] = vec![0, 9, 4];
        assert_eq!(c.check(adjacent), Err(Defect::NotDisjoint(1)));
    }

    #[test]
    fn rejects_non_adjacent_step() {
        let mut c = k33_in_k33();
        c.paths[0] = vec![0, 1, 3];
        assert!(matches!(c.check(k33_adjacent), Err(Defect::NotAdjacent { path: 0, .. })));
    }

    #[test]
    fn rejects_wrong_endpoints_and_counts() {
        let mut c = k33_in_k33();
        c.paths[2] = vec![0, 4];
        assert_eq!(c.check(k33_adjacent), Err(Defect::WrongEndpoints(2)));
        let mut c = k33_in_k33();
        c.paths.pop();
        assert!(matches!(c.check(k33_adjacent), Err(Defect::PathCount { .. })));
        let mut c = k33_in_k33();
        c.branch[5] = 0;
        assert_eq!(c.check(k33_adjacent), Err(Defect::RepeatedBranch));
    }
}
