use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Result, TGraphError};
use crate::graph::TGraph;
use crate::Limits;

use super::components::connected_components;

/// Shape of one connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    Isolated,
    /// Path on the given number of vertices (at least 2).
    Path(usize),
    /// Cycle on the given number of vertices (at least 3).
    Cycle(usize),
    Other(usize),
}

impl ComponentKind {
    pub fn size(&self) -> usize {
        match *self {
            ComponentKind::Isolated => 1,
            ComponentKind::Path(n) | ComponentKind::Cycle(n) | ComponentKind::Other(n) => n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ComponentKind::Isolated => "isolated",
            ComponentKind::Path(_) => "path",
            ComponentKind::Cycle(_) => "cycle",
            ComponentKind::Other(_) => "other",
        }
    }
}

/// `{"kind":"path","size":4}`
impl Serialize for ComponentKind {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ComponentKind", 2)?;
        s.serialize_field("kind", self.name())?;
        s.serialize_field("size", &self.size())?;
        s.end()
    }
}

impl std::fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComponentKind::Isolated => f.write_str("isolated"),
            _ => write!(f, "{}({})", self.name(), self.size()),
        }
    }
}

/// A component with its (sorted) vertices. Serializes as
/// `{"kind":"path","size":4}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentClassification {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
}

impl Serialize for ComponentClassification {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.kind.serialize(serializer)
    }
}

fn kind_of(g: &TGraph, block: &[usize]) -> ComponentKind {
    let n = block.len();
    if n == 1 {
        return ComponentKind::Isolated;
    }
    // a component's edges all stay inside it
    let degree_sum: usize = block.iter().map(|&v| g.degree(v)).sum();
    let edges = degree_sum / 2;
    let leaves = block.iter().filter(|&&v| g.degree(v) == 1).count();
    let max_degree = block.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
    if max_degree <= 2 && edges == n - 1 && leaves == 2 {
        ComponentKind::Path(n)
    } else if block.iter().all(|&v| g.degree(v) == 2) && edges == n {
        ComponentKind::Cycle(n)
    } else {
        ComponentKind::Other(n)
    }
}

/// Components in order of smallest vertex, each tagged by shape.
pub fn classify_components(g: &TGraph) -> Vec<ComponentClassification> {
    connected_components(g)
        .into_iter()
        .map(|vertices| ComponentClassification {
            kind: kind_of(g, &vertices),
            vertices,
        })
        .collect()
}

pub fn components_isomorphic(g: &TGraph, a: &[usize], b: &[usize]) -> Result<bool> {
    components_isomorphic_with_cap(g, a, b, Limits::default().isomorphism_cap)
}

/// Whether the subgraphs induced by `a` and `b` are isomorphic.
///
/// Invariant checks (order, edge count, degree sequence) and the
/// path/cycle/isolated shapes are decided directly; everything else goes to
/// a backtracking matcher limited to `cap` vertices.
pub fn components_isomorphic_with_cap(
    g: &TGraph,
    a: &[usize],
    b: &[usize],
    cap: usize,
) -> Result<bool> {
    let la = Induced::new(g, a)?;
    let lb = Induced::new(g, b)?;
    if la.adj.len() != lb.adj.len() || la.edge_count() != lb.edge_count() {
        return Ok(false);
    }
    if la.sorted_degrees() != lb.sorted_degrees() {
        return Ok(false);
    }
    if let (Some(sa), Some(sb)) = (la.simple_shape(), lb.simple_shape()) {
        return Ok(sa == sb);
    }
    let n = la.adj.len();
    if n > cap {
        return Err(TGraphError::size(
            "block size for isomorphism",
            n as u64,
            cap as u64,
        ));
    }
    Ok(match_backtrack(&la, &lb))
}

/// Checks that `map[i]` (image of `a[i]`) is a bijection onto `b` carrying
/// the induced edges of `a` exactly onto those of `b`.
pub fn is_isomorphism(g: &TGraph, a: &[usize], b: &[usize], map: &[usize]) -> bool {
    if a.len() != b.len() || map.len() != a.len() {
        return false;
    }
    let mut image: Vec<usize> = map.to_vec();
    image.sort_unstable();
    let mut target = b.to_vec();
    target.sort_unstable();
    if image != target || image.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if g.has_edge(a[i], a[j]) != g.has_edge(map[i], map[j]) {
                return false;
            }
        }
    }
    true
}

/// Looks for a reflection of the exponent box (`x_i -> e_i - 1 - x_i` on some
/// subset of coordinates) carrying block `a` onto block `b` and preserving
/// the induced edges. Returns the image of each vertex of `a`, in `a`'s order.
///
/// Reflections are isometries of the taxicab metric, so any hit is a valid
/// isomorphism; a miss proves nothing.
pub fn box_symmetry_witness(g: &TGraph, a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let dims = g.bounds().as_slice();
    let k = dims.len();
    if k > 16 {
        return None;
    }
    let mut target = b.to_vec();
    target.sort_unstable();
    for mask in 0u32..(1 << k) {
        let map: Vec<usize> = a
            .iter()
            .map(|&v| {
                let x = g.element(v);
                let reflected: Vec<u32> = x
                    .exponents()
                    .iter()
                    .zip(dims)
                    .enumerate()
                    .map(|(i, (&xi, &e))| if mask >> i & 1 == 1 { e - 1 - xi } else { xi })
                    .collect();
                g.bounds().index_unchecked(&reflected)
            })
            .collect();
        let mut image = map.clone();
        image.sort_unstable();
        if image == target && is_isomorphism(g, a, b, &map) {
            return Some(map);
        }
    }
    None
}

struct Induced {
    adj: Vec<Vec<usize>>,
}

impl Induced {
    fn new(g: &TGraph, block: &[usize]) -> Result<Self> {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&v| v >= g.order()) {
            return Err(TGraphError::InvalidArgument(format!(
                "vertex {bad} out of range"
            )));
        }
        let adj = sorted
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter_map(|w| sorted.binary_search(w).ok())
                    .collect()
            })
            .collect();
        Ok(Induced { adj })
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn sorted_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    fn connected(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    fn simple_shape(&self) -> Option<ComponentKind> {
        let n = self.adj.len();
        if n == 1 {
            return Some(ComponentKind::Isolated);
        }
        if n == 0 || !self.connected() {
            return None;
        }
        let degrees = self.sorted_degrees();
        let edges = self.edge_count();
        if edges == n - 1 && degrees.iter().all(|&d| d <= 2) {
            Some(ComponentKind::Path(n))
        } else if edges == n && degrees.iter().all(|&d| d == 2) {
            Some(ComponentKind::Cycle(n))
        } else {
            None
        }
    }
}

fn match_backtrack(a: &Induced, b: &Induced) -> bool {
    let n = a.adj.len();
    // breadth-first order from a max-degree vertex keeps mapped neighbors early
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (a.adj[v].len(), std::cmp::Reverse(v)))
            .expect("unplaced vertex exists");
        placed[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in &a.adj[u] {
                if !placed[v] {
                    placed[v] = true;
                    order.push(v);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &order, 0, &mut map, &mut used)
}

fn extend(
    a: &Induced,
    b: &Induced,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for cand in 0..b.adj.len() {
        if used[cand] || b.adj[cand].len() != a.adj[u].len() {
            continue;
        }
        let consistent = order[..depth].iter().all(|&w| {
            let mw = map[w];
            a.adj[u].contains(&w) == b.adj[cand].contains(&mw)
        });
        if !consistent {
            continue;
        }
        map[u] = cand;
        used[cand] = true;
        if extend(a, b, order, depth + 1, map, used) {
            return true;
        }
        map[u] = usize::MAX;
        used[cand] = false;
    }
    false
}
