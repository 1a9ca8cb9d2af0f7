//! Combinatorial planarity: embedding test with a rotation-system
//! certificate, outerplanarity, and Kuratowski subdivision extraction.
//!
//! The embedding test is the path-addition algorithm of Demoucron, Malgrange
//! and Pertuiset run on each biconnected block: start from a cycle, and
//! repeatedly route a path of some fragment through a face that contains all
//! of the fragment's attachment vertices, preferring fragments with a single
//! admissible face. A fragment with no admissible face proves the block
//! non-planar. Block embeddings are glued at cut vertices by concatenating
//! rotations.

use std::collections::VecDeque;

use thiserror::Error;

use crate::subdivision::{Model, Subdivision};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list; loops are dropped and parallel edges
    /// glued.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts `{u, v}`; returns false for loops and existing edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.has_edge(u, v) {
            return false;
        }
        let at = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(at, v);
        let at = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(at, u);
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(i) => {
                self.adj[u].remove(i);
                let j = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(j);
                true
            }
            Err(_) => false,
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for s in 0..self.adj.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Graph plus one apex joined to every vertex.
    pub fn with_apex(&self) -> SimpleGraph {
        let mut g = self.clone();
        let apex = g.add_vertex();
        for v in 0..apex {
            g.adj[v].push(apex);
            g.adj[apex].push(v);
        }
        g
    }

    /// Edge sets of the biconnected blocks (bridges are one-edge blocks).
    pub fn blocks(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.adj.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[u].len() {
                    let w = self.adj[u][*pos];
                    *pos += 1;
                    if disc[w] == usize::MAX {
                        edge_stack.push((u, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, u, 0));
                    } else if w != parent && disc[w] < disc[u] {
                        edge_stack.push((u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == (p, u) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }
}

/// Cyclic order of neighbours around every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(rotation: Vec<Vec<usize>>) -> Self {
        Self { rotation }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// True when every vertex's rotation is a permutation of its neighbours.
    pub fn matches(&self, g: &SimpleGraph) -> bool {
        self.rotation.len() == g.vertex_count()
            && self.rotation.iter().enumerate().all(|(v, r)| {
                let mut sorted = r.clone();
                sorted.sort_unstable();
                sorted == g.neighbors(v)
            })
    }

    /// Traces the faces: dart `u → v` is followed by `v → w` where `w` comes
    /// after `u` in the rotation at `v`. Each face is returned as its vertex
    /// sequence.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.rotation.len();
        // position of each neighbour inside the rotation, sorted for lookup
        let index: Vec<Vec<(usize, usize)>> = self
            .rotation
            .iter()
            .map(|r| {
                let mut p: Vec<(usize, usize)> = r.iter().enumerate().map(|(i, &w)| (w, i)).collect();
                p.sort_unstable();
                p
            })
            .collect();
        let pos = |v: usize, u: usize| index[v][index[v].binary_search_by_key(&u, |&(w, _)| w).unwrap()].1;
        let mut used: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..n {
            for i in 0..self.rotation[u].len() {
                if used[u][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut ai) = (u, i);
                while !used[a][ai] {
                    used[a][ai] = true;
                    face.push(a);
                    let b = self.rotation[a][ai];
                    let r = &self.rotation[b];
                    let next = (pos(b, a) + 1) % r.len();
                    a = b;
                    ai = next;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Euler's formula V − E + F = 2 on every connected component.
    pub fn satisfies_euler(&self, g: &SimpleGraph) -> bool {
        if !self.matches(g) {
            return false;
        }
        let comps = g.components();
        let mut comp_of = vec![0; g.vertex_count()];
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                comp_of[v] = c;
            }
        }
        let mut faces = vec![0i64; comps.len()];
        for f in self.faces() {
            faces[comp_of[f[0]]] += 1;
        }
        comps.iter().enumerate().all(|(c, vs)| {
            let v = vs.len() as i64;
            let e = vs.iter().map(|&x| g.degree(x)).sum::<usize>() as i64 / 2;
            let f = if e == 0 { 1 } else { faces[c] };
            v - e + f == 2
        })
    }
}

/// Planarity test; on success returns a rotation system of a plane embedding.
pub fn is_planar(g: &SimpleGraph) -> (bool, Option<RotationSystem>) {
    match embed(g) {
        Some(rot) => (true, Some(rot)),
        None => (false, None),
    }
}

pub fn planar(g: &SimpleGraph) -> bool {
    embed(g).is_some()
}

pub fn embed(g: &SimpleGraph) -> Option<RotationSystem> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in g.blocks() {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        if block.len() > 3 * verts.len() - 6 {
            return None;
        }
        let local = |x: usize| verts.binary_search(&x).unwrap();
        let mut adj = vec![Vec::new(); verts.len()];
        for &(u, v) in &block {
            adj[local(u)].push(local(v));
            adj[local(v)].push(local(u));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let faces = embed_biconnected(&adj)?;
        for (lv, order) in rotation_from_faces(&adj, &faces).into_iter().enumerate() {
            rotation[verts[lv]].extend(order.into_iter().map(|w| verts[w]));
        }
    }
    Some(RotationSystem { rotation })
}

fn rotation_from_faces(adj: &[Vec<usize>], faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    // succ[y][k] = neighbour following adj[y][k] in the rotation at y
    let mut succ: Vec<Vec<usize>> = adj.iter().map(|a| vec![usize::MAX; a.len()]).collect();
    for face in faces {
        let len = face.len();
        for i in 0..len {
            let x = face[(i + len - 1) % len];
            let y = face[i];
            let z = face[(i + 1) % len];
            let k = adj[y].binary_search(&x).unwrap();
            succ[y][k] = z;
        }
    }
    adj.iter()
        .enumerate()
        .map(|(y, ns)| {
            let mut order = Vec::with_capacity(ns.len());
            let mut cur = ns[0];
            for _ in 0..ns.len() {
                order.push(cur);
                cur = succ[y][ns.binary_search(&cur).unwrap()];
            }
            order
        })
        .collect()
}

enum FragmentKind {
    Chord(usize, usize),
    Component(usize),
}

struct Fragment {
    attachments: Vec<usize>,
    kind: FragmentKind,
}

/// Path-addition embedding of a biconnected graph with ≥ 3 vertices. Returns
/// consistently oriented faces, or `None` when the graph is non-planar.
fn embed_biconnected(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let edge_base: Vec<usize> = adj
        .iter()
        .scan(0, |acc, a| {
            let base = *acc;
            *acc += a.len();
            Some(base)
        })
        .collect();
    let slot = |u: usize, w: usize| edge_base[u] + adj[u].binary_search(&w).unwrap();
    let total_slots = adj.iter().map(Vec::len).sum();
    let mut in_h_edge = vec![false; total_slots];
    let mut in_h = vec![false; n];
    let mut vertex_faces: Vec<Vec<usize>> = vec![Vec::new(); n];

    let cycle = find_cycle(adj);
    for (i, &u) in cycle.iter().enumerate() {
        let w = cycle[(i + 1) % cycle.len()];
        in_h[u] = true;
        in_h_edge[slot(u, w)] = true;
        in_h_edge[slot(w, u)] = true;
        vertex_faces[u].extend([0, 1]);
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];

    let mut comp_of = vec![usize::MAX; n];
    let mut stamp = vec![usize::MAX; n];
    loop {
        // Fragments relative to the embedded subgraph H.
        let mut fragments = Vec::new();
        for u in 0..n {
            if !in_h[u] {
                continue;
            }
            for &w in &adj[u] {
                if w > u && in_h[w] && !in_h_edge[slot(u, w)] {
                    fragments.push(Fragment { attachments: vec![u, w], kind: FragmentKind::Chord(u, w) });
                }
            }
        }
        comp_of.iter_mut().for_each(|c| *c = usize::MAX);
        let mut comp_count = 0;
        for s in 0..n {
            if in_h[s] || comp_of[s] != usize::MAX {
                continue;
            }
            let id = comp_count;
            comp_count += 1;
            comp_of[s] = id;
            let mut queue = vec![s];
            let mut attachments = Vec::new();
            while let Some(u) = queue.pop() {
                for &w in &adj[u] {
                    if in_h[w] {
                        if stamp[w] != id {
                            stamp[w] = id;
                            attachments.push(w);
                        }
                    } else if comp_of[w] == usize::MAX {
                        comp_of[w] = id;
                        queue.push(w);
                    }
                }
            }
            fragments.push(Fragment { attachments, kind: FragmentKind::Component(id) });
        }
        stamp.iter_mut().for_each(|s| *s = usize::MAX);
        if fragments.is_empty() {
            return Some(faces);
        }

        let mut choice: Option<(usize, usize)> = None;
        for (k, frag) in fragments.iter().enumerate() {
            let pivot = *frag
                .attachments
                .iter()
                .min_by_key(|&&a| vertex_faces[a].len())
                .expect("fragments have attachments");
            let mut admissible = vertex_faces[pivot]
                .iter()
                .copied()
                .filter(|&f| frag.attachments.iter().all(|&a| vertex_faces[a].contains(&f)));
            let first = admissible.next()?;
            if admissible.next().is_none() {
                choice = Some((k, first));
                break;
            }
            if choice.is_none() {
                choice = Some((k, first));
            }
        }
        let (k, f) = choice.expect("at least one fragment");
        let path = match fragments[k].kind {
            FragmentKind::Chord(u, w) => vec![u, w],
            FragmentKind::Component(id) => component_path(adj, &in_h, &comp_of, id, fragments[k].attachments[0]),
        };

        // Split face f along the path.
        let face = std::mem::take(&mut faces[f]);
        let u = path[0];
        let w = *path.last().unwrap();
        let len = face.len();
        let i = face.iter().position(|&x| x == u).unwrap();
        let j = face.iter().position(|&x| x == w).unwrap();
        let mut a = Vec::new();
        let mut t = i;
        loop {
            a.push(face[t]);
            if t == j {
                break;
            }
            t = (t + 1) % len;
        }
        a.extend(path[1..path.len() - 1].iter().rev());
        let mut b = Vec::new();
        let mut t = j;
        loop {
            b.push(face[t]);
            if t == i {
                break;
            }
            t = (t + 1) % len;
        }
        b.extend(&path[1..path.len() - 1]);

        for &x in &face {
            vertex_faces[x].retain(|&g| g != f);
        }
        let fb = faces.len();
        for &x in &a {
            vertex_faces[x].push(f);
        }
        for &x in &b {
            vertex_faces[x].push(fb);
        }
        faces[f] = a;
        faces.push(b);
        for pair in path.windows(2) {
            in_h_edge[slot(pair[0], pair[1])] = true;
            in_h_edge[slot(pair[1], pair[0])] = true;
        }
        for &x in &path {
            in_h[x] = true;
        }
    }
}

/// A path from `start` through component `id` to a different attachment.
fn component_path(adj: &[Vec<usize>], in_h: &[bool], comp_of: &[usize], id: usize, start: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    for &c in &adj[start] {
        if !in_h[c] && comp_of[c] == id && parent[c] == usize::MAX {
            parent[c] = start;
            queue.push_back(c);
        }
    }
    while let Some(c) = queue.pop_front() {
        if let Some(&end) = adj[c].iter().find(|&&h| in_h[h] && h != start) {
            let mut path = vec![end, c];
            let mut cur = c;
            while parent[cur] != start {
                cur = parent[cur];
                path.push(cur);
            }
            path.push(start);
            path.reverse();
            return path;
        }
        for &x in &adj[c] {
            if !in_h[x] && parent[x] == usize::MAX {
                parent[x] = c;
                queue.push_back(x);
            }
        }
    }
    unreachable!("a fragment of a biconnected graph has two attachments")
}

/// Some cycle of a biconnected graph, via the first back edge of a DFS.
fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
        if *pos == adj[u].len() {
            stack.pop();
            continue;
        }
        let w = adj[u][*pos];
        *pos += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            stack.push((w, 0));
        } else if w != parent[u] && depth[w] < depth[u] {
            let mut cycle = vec![u];
            let mut cur = u;
            while cur != w {
                cur = parent[cur];
                cycle.push(cur);
            }
            return cycle;
        }
    }
    unreachable!("biconnected graphs with three or more vertices contain a cycle")
}

/// Outerplanar iff every block is. A block reduces by suppressing degree-2
/// vertices; each surviving edge remembers whether it must stay on the outer
/// cycle, and two such edges in parallel cannot both do so.
pub fn is_outerplanar(g: &SimpleGraph) -> bool {
    let n = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).count();
    if n < 4 {
        return true;
    }
    if g.edge_count() > 2 * n - 3 {
        return false;
    }
    let mut local = vec![usize::MAX; g.vertex_count()];
    g.blocks().iter().all(|block| {
        let mut names = Vec::new();
        let mut edges = Vec::with_capacity(block.len());
        for &(u, v) in block {
            for x in [u, v] {
                if local[x] == usize::MAX {
                    local[x] = names.len();
                    names.push(x);
                }
            }
            edges.push((local[u], local[v]));
        }
        let ok = block_is_outerplanar(names.len(), &edges);
        for x in names {
            local[x] = usize::MAX;
        }
        ok
    })
}

fn block_is_outerplanar(n: usize, edges: &[(usize, usize)]) -> bool {
    if n < 4 {
        return true;
    }
    if edges.len() > 2 * n - 3 {
        return false;
    }
    // neighbour and whether that edge must lie on the outer cycle
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push((v, false));
        adj[v].push((u, false));
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 2).collect();
    let mut alive = n;
    while alive > 3 {
        let Some(v) = ready.pop() else {
            return false;
        };
        if adj[v].len() != 2 {
            continue;
        }
        let (a, b) = (adj[v][0].0, adj[v][1].0);
        adj[v].clear();
        alive -= 1;
        adj[a].retain(|&(x, _)| x != v);
        adj[b].retain(|&(x, _)| x != v);
        match adj[a].iter().position(|&(x, _)| x == b) {
            Some(i) => {
                if adj[a][i].1 {
                    return false;
                }
                adj[a][i].1 = true;
                let j = adj[b].iter().position(|&(x, _)| x == a).expect("adjacency is symmetric");
                adj[b][j].1 = true;
                for x in [a, b] {
                    if adj[x].len() == 2 {
                        ready.push(x);
                    }
                }
            }
            None => {
                adj[a].push((b, true));
                adj[b].push((a, true));
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarityError {
    #[error("graph is planar; no Kuratowski subdivision exists")]
    Planar,
    #[error("graph is outerplanar; no K4 or K2,3 subdivision exists")]
    Outerplanar,
}

/// Greedily deletes edges while `still_bad` holds, leaving an edge-minimal
/// subgraph. Chunks of edges are tried at once and halved on failure, so
/// large hosts need far fewer predicate calls than one per edge.
fn minimize_edges(g: &SimpleGraph, still_bad: impl Fn(&SimpleGraph) -> bool) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut current = g.clone();
    let mut idx = 0;
    let mut chunk = (edges.len() / 8).max(1);
    while idx < edges.len() {
        let end = (idx + chunk).min(edges.len());
        for &(u, v) in &edges[idx..end] {
            current.remove_edge(u, v);
        }
        if still_bad(&current) {
            idx = end;
            chunk *= 2;
        } else {
            for &(u, v) in &edges[idx..end] {
                current.add_edge(u, v);
            }
            if chunk == 1 {
                idx += 1;
            } else {
                chunk /= 2;
            }
        }
    }
    current
}

/// A K5 or K3,3 subdivision inside a non-planar graph.
pub fn kuratowski_witness(g: &SimpleGraph) -> Result<Subdivision<usize>, PlanarityError> {
    if planar(g) {
        return Err(PlanarityError::Planar);
    }
    // Shrink to one non-planar block first; the rest is irrelevant.
    let mut host = SimpleGraph::new(g.vertex_count());
    for block in g.blocks() {
        let b = SimpleGraph::from_edges(g.vertex_count(), block);
        if !planar(&b) {
            host = b;
            break;
        }
    }
    let minimal = minimize_edges(&host, |h| !planar(h));
    Ok(read_subdivision(&minimal).expect("an edge-minimal non-planar graph is a Kuratowski subdivision"))
}

/// A K4 or K2,3 subdivision inside a non-outerplanar graph.
pub fn outerplanar_obstruction(g: &SimpleGraph) -> Result<Subdivision<usize>, PlanarityError> {
    if is_outerplanar(g) {
        return Err(PlanarityError::Outerplanar);
    }
    let mut host = g.clone();
    for block in g.blocks() {
        let b = SimpleGraph::from_edges(g.vertex_count(), block);
        if !is_outerplanar(&b) {
            host = b;
            break;
        }
    }
    let minimal = minimize_edges(&host, |h| !is_outerplanar(h));
    Ok(read_subdivision(&minimal).expect("an edge-minimal non-outerplanar graph is a K4 or K2,3 subdivision"))
}

/// Recognises a subdivision of K4, K2,3, K5 or K3,3 (isolated vertices are
/// ignored) and lays it out as a certificate. Returns `None` for anything
/// else.
pub fn read_subdivision(h: &SimpleGraph) -> Option<Subdivision<usize>> {
    let n = h.vertex_count();
    if (0..n).any(|v| h.degree(v) == 1) {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 3).collect();
    let is_branch = |v: usize| h.degree(v) >= 3;
    // Trace every thread between branch vertices.
    let mut threads: Vec<Vec<usize>> = Vec::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while !is_branch(cur) {
                let next = *h.neighbors(cur).iter().find(|&&x| x != prev)?;
                prev = cur;
                cur = next;
                path.push(cur);
                if path.len() > n + 1 {
                    return None;
                }
            }
            if (b, path[1]) < (cur, path[path.len() - 2]) {
                threads.push(path);
            }
        }
    }
    let edges_used: usize = threads.iter().map(|p| p.len() - 1).sum();
    if edges_used != h.edge_count() {
        // leftover cycles not touching a branch vertex
        return None;
    }
    let degree_all = |d: usize| branch.iter().all(|&b| h.degree(b) == d);
    let between = |a: usize, b: usize| -> Vec<&Vec<usize>> {
        threads
            .iter()
            .filter(|p| (p[0] == a && *p.last().unwrap() == b) || (p[0] == b && *p.last().unwrap() == a))
            .collect()
    };
    let oriented = |p: &Vec<usize>, from: usize| -> Vec<usize> {
        if p[0] == from {
            p.clone()
        } else {
            p.iter().rev().copied().collect()
        }
    };
    let layout = |model: Model, order: Vec<usize>| -> Option<Subdivision<usize>> {
        let mut paths = Vec::new();
        for (i, j) in model.edges() {
            let found = between(order[i], order[j]);
            if found.len() != 1 {
                return None;
            }
            paths.push(oriented(found[0], order[i]));
        }
        if paths.len() != threads.len() {
            return None;
        }
        Some(Subdivision { model, branch: order, paths })
    };
    match (branch.len(), degree_all(3), degree_all(4)) {
        (4, true, _) => layout(Model::K4, branch.clone()),
        (5, _, true) => layout(Model::K5, branch.clone()),
        (6, true, _) => {
            // two-colour the branch vertices through the threads
            let mut side = vec![None; n];
            side[branch[0]] = Some(0);
            let mut queue = VecDeque::from([branch[0]]);
            while let Some(x) = queue.pop_front() {
                for p in threads.iter().filter(|p| p[0] == x || *p.last().unwrap() == x) {
                    let y = if p[0] == x { *p.last().unwrap() } else { p[0] };
                    match side[y] {
                        None => {
                            side[y] = Some(1 - side[x].unwrap());
                            queue.push_back(y);
                        }
                        Some(s) if s == side[x].unwrap() => return None,
                        Some(_) => {}
                    }
                }
            }
            let mut order: Vec<usize> = branch.iter().copied().filter(|&b| side[b] == Some(0)).collect();
            order.extend(branch.iter().copied().filter(|&b| side[b] == Some(1)));
            if order.len() != 6 {
                return None;
            }
            layout(Model::K33, order)
        }
        (2, true, _) => {
            let (x, y) = (branch[0], branch[1]);
            let mut routes: Vec<Vec<usize>> = between(x, y).into_iter().map(|p| oriented(p, x)).collect();
            if routes.len() != 3 || threads.len() != 3 || routes.iter().any(|p| p.len() < 3) {
                return None;
            }
            routes.sort_by_key(|p| p[1]);
            let mut order = vec![x, y];
            order.extend(routes.iter().map(|p| p[1]));
            let mut paths: Vec<Vec<usize>> = routes.iter().map(|p| p[..2].to_vec()).collect();
            paths.extend(routes.iter().map(|p| p[1..].iter().rev().copied().collect::<Vec<_>>()));
            Some(Subdivision { model: Model::K23, branch: order, paths })
        }
        _ => None,
    }
}

pub fn verify_certificate(g: &SimpleGraph, c: &Subdivision<usize>) -> bool {
    let n = g.vertex_count();
    c.branch.iter().chain(c.paths.iter().flatten()).all(|&v| v < n) && c.check(|&a, &b| g.has_edge(a, b)).is_ok()
}

/// Named graphs used throughout the tests and the CLI.
pub mod named {
    use super::SimpleGraph;

    pub fn complete(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
        SimpleGraph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn petersen() -> SimpleGraph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        SimpleGraph::from_edges(10, outer.chain(spokes).chain(inner))
    }

    pub fn grid(w: usize, h: usize) -> SimpleGraph {
        let id = |x: usize, y: usize| y * w + x;
        let mut g = SimpleGraph::new(w * h);
        for y in 0..h {
            for x in 0..w {
                if x + 1 < w {
                    g.add_edge(id(x, y), id(x + 1, y));
                }
                if y + 1 < h {
                    g.add_edge(id(x, y), id(x, y + 1));
                }
            }
        }
        g
    }
}
