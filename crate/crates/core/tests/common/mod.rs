//! Independent reference implementations used as test oracles.

#![allow(dead_code)]

use gpplanar::{ProductGraph, SimpleGraph};

pub fn graph(vertices: &[(&str, u32)], edges: &[(&str, &str)]) -> ProductGraph {
    ProductGraph::new(vertices.iter().copied(), edges.iter().copied()).unwrap()
}

/// Vertex pairs of K_n in the bit order used by [`graph_from_mask`].
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let edges = pairs(n).into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e);
    SimpleGraph::from_edges(n, edges)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest edge mask over all relabellings; equal exactly for isomorphic
/// graphs.
pub fn canonical_mask(n: usize, mask: u64, perms: &[Vec<usize>]) -> u64 {
    let ps = pairs(n);
    let mut bit = vec![vec![0u32; n]; n];
    for (k, &(i, j)) in ps.iter().enumerate() {
        bit[i][j] = k as u32;
        bit[j][i] = k as u32;
    }
    let edges: Vec<(usize, usize)> = ps.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
    perms
        .iter()
        .map(|p| edges.iter().fold(0u64, |m, &(i, j)| m | 1 << bit[p[i]][p[j]]))
        .min()
        .unwrap_or(0)
}

fn components(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

fn count_faces(g: &SimpleGraph, rot: &[Vec<usize>]) -> usize {
    let n = g.vertex_count();
    let pos = |v: usize, w: usize| rot[v].iter().position(|&x| x == w).unwrap();
    let mut used: Vec<Vec<bool>> = (0..n).map(|v| vec![false; rot[v].len()]).collect();
    let mut faces = 0;
    for v in 0..n {
        if rot[v].is_empty() {
            faces += 1;
            continue;
        }
        for i in 0..rot[v].len() {
            if used[v][i] {
                continue;
            }
            faces += 1;
            let (mut a, mut k) = (v, i);
            while !used[a][k] {
                used[a][k] = true;
                let b = rot[a][k];
                let back = pos(b, a);
                let next = (back + 1) % rot[b].len();
                a = b;
                k = next;
            }
        }
    }
    faces
}

/// Planarity by trying every rotation system: some choice of cyclic orders
/// gives V − E + F = 2 per component, isolated vertices counting one face.
pub fn planar_by_rotation_search(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let e = g.edge_count();
    if n >= 3 && e > 3 * n - 6 {
        return false;
    }
    let c = components(g);
    let choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let nb = g.neighbors(v);
            if nb.len() <= 2 {
                return vec![nb.to_vec()];
            }
            permutations(nb.len() - 1)
                .into_iter()
                .map(|p| std::iter::once(nb[0]).chain(p.into_iter().map(|i| nb[i + 1])).collect())
                .collect()
        })
        .collect();
    let mut idx = vec![0usize; n];
    loop {
        let rot: Vec<Vec<usize>> = (0..n).map(|v| choices[v][idx[v]].clone()).collect();
        let f = count_faces(g, &rot);
        if n as i64 - e as i64 + f as i64 == 2 * c as i64 {
            return true;
        }
        let mut v = 0;
        loop {
            if v == n {
                return false;
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

/// Whether the edges in `mask` form a subdivision of K4 or of K2,3.
fn is_k4_or_k23_subdivision(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let used: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();
    if used.iter().any(|&v| adj[v].len() != 2 && adj[v].len() != 3) {
        return false;
    }
    let branch: Vec<usize> = used.iter().copied().filter(|&v| adj[v].len() == 3).collect();
    // follow each thread from a branch vertex to the next branch vertex
    let trace = |from: usize, first: usize| -> (usize, usize) {
        let (mut prev, mut cur, mut len) = (from, first, 1);
        while adj[cur].len() == 2 {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
            len += 1;
        }
        (cur, len)
    };
    let connected = {
        let mut seen = vec![false; n];
        let mut stack = vec![used[0]];
        seen[used[0]] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        used.iter().all(|&v| seen[v])
    };
    if !connected {
        return false;
    }
    match branch.len() {
        4 => {
            let mut ends = Vec::new();
            for &b in &branch {
                for &w in &adj[b] {
                    let (end, _) = trace(b, w);
                    if end == b {
                        return false;
                    }
                    ends.push((b.min(end), b.max(end)));
                }
            }
            ends.sort();
            ends.dedup();
            ends.len() == 6
        }
        2 => {
            let (a, b) = (branch[0], branch[1]);
            adj[a].iter().all(|&w| {
                let (end, len) = trace(a, w);
                end == b && len >= 2
            })
        }
        _ => false,
    }
}

/// Outerplanarity by searching every edge subset for a K4 or K2,3
/// subdivision.
pub fn outerplanar_by_subdivision_search(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if m < 6 {
        return true;
    }
    for mask in 1u64..1 << m {
        if mask.count_ones() < 6 {
            continue;
        }
        let sub: Vec<(usize, usize)> = (0..m).filter(|&k| mask >> k & 1 == 1).map(|k| edges[k]).collect();
        if is_k4_or_k23_subdivision(n, &sub) {
            return false;
        }
    }
    true
}

/// Sphere sizes of the free product of cyclic groups of the given orders,
/// from the recursion over the last syllable's factor.
pub fn free_product_spheres(orders: &[u32], r: usize) -> Vec<u64> {
    let k = orders.len();
    // syllables of factor i with word length l
    let syll = |i: usize, l: usize| -> u64 {
        let n = orders[i] as usize;
        if l == 0 || 2 * l > n {
            0
        } else if 2 * l == n {
            1
        } else {
            2
        }
    };
    let mut total = vec![0u64; r + 1];
    let mut ending = vec![vec![0u64; k]; r + 1];
    total[0] = 1;
    for len in 1..=r {
        for i in 0..k {
            let mut c = 0;
            for l in 1..=len {
                c += syll(i, l) * (total[len - l] - ending[len - l][i]);
            }
            ending[len][i] = c;
        }
        total[len] = ending[len].iter().sum();
    }
    total
}

/// Word length in the sense of a single cyclic factor: min(e, n − e).
pub fn cyclic_length(e: u32, n: u32) -> u32 {
    e.min(n - e)
}
