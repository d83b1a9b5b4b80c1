//! t-graph construction and export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TGraphError};
use crate::metric::distance;
use crate::presentation::{GeneratorBounds, GroupElement};

/// The t-graph of a bounds family. Vertex `i` is the `i`-th element in
/// lexicographic order; immutable after [`build_tgraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TGraph {
    bounds: GeneratorBounds,
    t: u32,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// Adjacent in the t-graph iff at distance exactly `t`.
///
/// Edges are produced by sliding every offset of taxicab norm `t` over the
/// lattice instead of comparing all pairs, so the work is proportional to
/// `|V| * #offsets`. Edges come out sorted lexicographically with `u < v`.
pub fn build_tgraph(bounds: &GeneratorBounds, t: u32) -> Result<TGraph> {
    if t == 0 {
        return Err(TGraphError::InvalidParameter(
            "t must be at least 1 (t-graphs have no loops)".into(),
        ));
    }
    let order = bounds.element_count();
    let dims = bounds.as_slice();
    let offsets = forward_offsets(dims, t);

    // index stride of each coordinate
    let mut stride = vec![1isize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        stride[i] = stride[i + 1] * dims[i + 1] as isize;
    }
    let offset_steps: Vec<isize> = offsets
        .iter()
        .map(|d| d.iter().zip(&stride).map(|(&x, &s)| x as isize * s).sum())
        .collect();

    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); order];
    let mut forward = Vec::new();
    for (u, x) in bounds.enumerate_elements().iter().enumerate() {
        forward.clear();
        for (delta, step) in offsets.iter().zip(&offset_steps) {
            let inside = x
                .exponents()
                .iter()
                .zip(delta)
                .zip(dims)
                .all(|((&xi, &di), &e)| {
                    let yi = i64::from(xi) + i64::from(di);
                    (0..i64::from(e)).contains(&yi)
                });
            if inside {
                forward.push((u as isize + step) as usize);
            }
        }
        forward.sort_unstable();
        for &v in &forward {
            edges.push((u, v));
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(TGraph {
        bounds: bounds.clone(),
        t,
        edges,
        adjacency,
    })
}

/// Integer offsets `d` with `sum |d_i| = t`, `|d_i| < e_i`, and first nonzero
/// coordinate positive (so each undirected pair is produced once).
fn forward_offsets(dims: &[u32], t: u32) -> Vec<Vec<i32>> {
    fn rec(
        dims: &[u32],
        budget: u32,
        leading: bool,
        prefix: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        let i = prefix.len();
        if i == dims.len() {
            if budget == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let tail: u32 = dims[i + 1..].iter().map(|e| e - 1).sum();
        let max = (dims[i] - 1).min(budget);
        for mag in 0..=max {
            if budget - mag > tail {
                continue;
            }
            let signs: &[i32] = match (mag, leading) {
                (0, _) => &[1],
                (_, true) => &[1],
                (_, false) => &[1, -1],
            };
            for &sign in signs {
                prefix.push(sign * mag as i32);
                rec(dims, budget - mag, leading && mag == 0, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(dims, t, true, &mut Vec::with_capacity(dims.len()), &mut out);
    out
}

impl TGraph {
    pub fn bounds(&self) -> &GeneratorBounds {
        &self.bounds
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    pub fn element(&self, v: usize) -> GroupElement {
        self.bounds
            .element_at(v)
            .expect("vertex index within the graph's own bounds")
    }

    /// Degrees in ascending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Edges of `self` with both endpoints in `subset`.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<InducedSubgraph> {
        if let Some(&bad) = subset.iter().find(|&&v| v >= self.order()) {
            return Err(TGraphError::InvalidArgument(format!(
                "vertex {bad} out of range for a graph of order {}",
                self.order()
            )));
        }
        let mut vertices = subset.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        let mut member = vec![false; self.order()];
        for &v in &vertices {
            member[v] = true;
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| member[u] && member[v])
            .collect();
        Ok(InducedSubgraph { vertices, edges })
    }

    /// Graphviz rendering; vertices carry their normal-form words.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let bounds: Vec<String> = self.bounds.as_slice().iter().map(u32::to_string).collect();
        let _ = writeln!(out, "// t-graph bounds=[{}] t={}", bounds.join(","), self.t);
        out.push_str("graph tgraph {\n");
        let _ = writeln!(
            out,
            "  comment=\"bounds=[{}] t={}\";",
            bounds.join(","),
            self.t
        );
        for (v, x) in self.bounds.enumerate_elements().iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", x.word());
        }
        for (u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_export(&self) -> GraphExport {
        GraphExport {
            bounds: self.bounds.as_slice().to_vec(),
            t: self.t,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    /// `{"bounds":[...],"t":...,"edges":[[u,v],...]}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_export()).expect("plain data serializes")
    }
}

/// JSON wire form of a t-graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub bounds: Vec<u32>,
    pub t: u32,
    pub edges: Vec<[usize; 2]>,
}

/// Vertex subset of a [`TGraph`] with the edges it induces, in the parent's
/// vertex numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl InducedSubgraph {
    /// True when the subgraph is a simple path visiting the vertices in the
    /// given order.
    pub fn is_path_in_order(&self, order: &[usize]) -> bool {
        let mut want: Vec<(usize, usize)> = order
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect();
        want.sort_unstable();
        want == self.edges
    }
}

/// Brute-force membership check: does the edge list equal the set of all
/// pairs at distance `t`? Quadratic, intended for verification sweeps.
pub fn edges_match_distance_predicate(g: &TGraph) -> bool {
    let els = g.bounds.enumerate_elements();
    let mut k = 0;
    for u in 0..els.len() {
        for v in u + 1..els.len() {
            if distance(els[u].exponents(), els[v].exponents()) == g.t {
                if g.edges.get(k) != Some(&(u, v)) {
                    return false;
                }
                k += 1;
            }
        }
    }
    k == g.edges.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(b: &[u32], t: u32) -> TGraph {
        build_tgraph(&GeneratorBounds::new(b.to_vec()).unwrap(), t).unwrap()
    }

    #[test]
    fn dihedral_four_edge_counts() {
        assert_eq!(g(&[2, 4], 1).edge_count(), 10);
        assert_eq!(g(&[2, 4], 2).edge_count(), 10);
        assert_eq!(g(&[2, 4], 3).edge_count(), 6);
        assert_eq!(g(&[2, 4], 4).edge_count(), 2);
    }

    #[test]
    fn cyclic_edge_counts() {
        assert_eq!(g(&[8], 3).edge_count(), 5);
        for t in 5..9 {
            assert_eq!(g(&[5], t).edge_count(), 0);
        }
    }

    #[test]
    fn zero_t_rejected() {
        let b = GeneratorBounds::new(vec![2, 4]).unwrap();
        assert!(matches!(
            build_tgraph(&b, 0),
            Err(TGraphError::InvalidParameter(_))
        ));
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(
            g(&[2, 4], 4).degree_sequence(),
            vec![0, 0, 0, 0, 1, 1, 1, 1]
        );
        assert_eq!(g(&[2, 2], 1).degree_sequence(), vec![2, 2, 2, 2]);
        assert_eq!(g(&[3, 3], 9).degree_sequence(), vec![0; 9]);
        let h = g(&[3, 4, 2], 3);
        assert_eq!(
            h.degree_sequence().iter().sum::<usize>(),
            2 * h.edge_count()
        );
    }

    #[test]
    fn induced_subgraph_of_cyclic_subgroup() {
        let h = g(&[8], 2);
        let sub = h.induced_subgraph(&[0, 2, 4, 6]).unwrap();
        assert_eq!(sub.edges, vec![(0, 2), (2, 4), (4, 6)]);
        assert!(sub.is_path_in_order(&[0, 2, 4, 6]));
        assert!(h.induced_subgraph(&[]).unwrap().edges.is_empty());
        let all: Vec<usize> = (0..8).collect();
        assert_eq!(h.induced_subgraph(&all).unwrap().edges, h.edges());
        assert!(matches!(
            h.induced_subgraph(&[8]),
            Err(TGraphError::InvalidArgument(_))
        ));
    }

    #[test]
    fn adjacency_consistent_with_edges() {
        let h = g(&[3, 4, 2], 2);
        for &(u, v) in h.edges() {
            assert!(u < v);
            assert!(h.has_edge(u, v) && h.has_edge(v, u));
        }
        let mut sorted = h.edges().to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted, h.edges());
    }

    #[test]
    fn dot_export() {
        let dot = g(&[2, 4], 2).to_dot();
        assert!(dot.contains("comment=\"bounds=[2,4] t=2\""));
        assert!(dot.contains("7 [label=\"a^1 b^3\"];"));
        assert!(dot.contains("0 [label=\"1\"];"));
        assert_eq!(dot.matches(" -- ").count(), 10);
        assert_eq!(dot.matches("[label=").count(), 8);
    }

    #[test]
    fn json_export() {
        assert_eq!(
            g(&[2, 2], 2).to_json(),
            r#"{"bounds":[2,2],"t":2,"edges":[[0,3],[1,2]]}"#
        );
        assert_eq!(g(&[6], 7).to_json(), r#"{"bounds":[6],"t":7,"edges":[]}"#);
    }

    #[test]
    fn forward_offsets_count() {
        // norm-1 offsets in 2D, forward half: (0,1) and (1,0)
        assert_eq!(forward_offsets(&[5, 5], 1).len(), 2);
        // all 4t vectors of norm t in Z^2, half of them forward
        assert_eq!(forward_offsets(&[10, 10], 3).len(), 6);
        assert!(forward_offsets(&[2, 2], 3).is_empty());
    }
}
