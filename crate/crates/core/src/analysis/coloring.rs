use std::collections::VecDeque;

use crate::error::{Result, TGraphError};
use crate::graph::TGraph;
use crate::Limits;

use super::components::connected_components;

/// Outcome of a 2-coloring attempt, with a witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Proper coloring with colors 0/1; each component's smallest vertex
    /// gets 0.
    Bipartite { coloring: Vec<u8> },
    /// Odd closed walk `v_0, v_1, ..., v_{L-1}` (closing edge `v_{L-1} v_0`),
    /// `L` odd.
    NotBipartite { odd_cycle: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// Breadth-first 2-coloring.
pub fn is_bipartite(g: &TGraph) -> Bipartiteness {
    let n = g.order();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(1 - cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Bipartiteness::NotBipartite {
                            odd_cycle: tree_cycle(u, v, &parent, &depth),
                        };
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite {
        coloring: color.into_iter().map(|c| c.unwrap_or(0)).collect(),
    }
}

// u -> lca along the BFS tree, then lca -> v; the edge v-u closes it.
fn tree_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Exact chromatic number with the default per-component cap.
pub fn chromatic_number(g: &TGraph) -> Result<usize> {
    chromatic_number_with_cap(g, Limits::default().chromatic_component_cap)
}

/// Exact chromatic number, solved component by component with a DSATUR
/// branch and bound. `0` for the empty graph.
pub fn chromatic_number_with_cap(g: &TGraph, cap: usize) -> Result<usize> {
    let mut chi = 0;
    for block in connected_components(g) {
        if block.len() > cap {
            return Err(TGraphError::size(
                "component size for exact coloring",
                block.len() as u64,
                cap as u64,
            ));
        }
        chi = chi.max(component_chromatic(g, &block));
    }
    Ok(chi)
}

struct Local {
    adj: Vec<Vec<usize>>,
}

fn localize(g: &TGraph, block: &[usize]) -> Local {
    let adj = block
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .map(|w| {
                    block
                        .binary_search(w)
                        .expect("component is closed under adjacency")
                })
                .collect()
        })
        .collect();
    Local { adj }
}

fn component_chromatic(g: &TGraph, block: &[usize]) -> usize {
    let local = localize(g, block);
    let n = local.adj.len();
    if local.adj.iter().all(Vec::is_empty) {
        return 1;
    }
    let lower = greedy_clique(&local.adj);
    let upper = dsatur_greedy(&local.adj);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if colorable(&local.adj, k, &mut colors, 0) {
            return k;
        }
    }
    upper
}

fn greedy_clique(adj: &[Vec<usize>]) -> usize {
    let mut best = 1;
    for start in 0..adj.len() {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = adj[start].clone();
        candidates.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
        for v in candidates {
            if clique.iter().all(|c| adj[v].contains(c)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn saturation(adj: &[Vec<usize>], colors: &[usize], v: usize) -> usize {
    let mut seen: Vec<usize> = adj[v]
        .iter()
        .map(|&w| colors[w])
        .filter(|&c| c != usize::MAX)
        .collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

// uncolored vertex with highest saturation, then degree, then lowest index
fn next_vertex(adj: &[Vec<usize>], colors: &[usize]) -> Option<usize> {
    (0..adj.len())
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| {
            (
                saturation(adj, colors, v),
                adj[v].len(),
                std::cmp::Reverse(v),
            )
        })
}

fn dsatur_greedy(adj: &[Vec<usize>]) -> usize {
    let mut colors = vec![usize::MAX; adj.len()];
    let mut used = 0;
    while let Some(v) = next_vertex(adj, &colors) {
        let c = (0..)
            .find(|c| adj[v].iter().all(|&w| colors[w] != *c))
            .expect("some color is free");
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable(adj: &[Vec<usize>], k: usize, colors: &mut [usize], used: usize) -> bool {
    let Some(v) = next_vertex(adj, colors) else {
        return true;
    };
    // a fresh color is interchangeable with any other unused one
    for c in 0..k.min(used + 1) {
        if adj[v].iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if colorable(adj, k, colors, used.max(c + 1)) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}
