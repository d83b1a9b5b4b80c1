use crate::graph::TGraph;

/// Union by size with path halving.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `x` and `y` were already joined.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut a, mut b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

/// Vertex partition into connected components. Blocks are sorted
/// internally and ordered by their smallest vertex.
pub fn connected_components(g: &TGraph) -> Vec<Vec<usize>> {
    let mut sets = DisjointSets::new(g.order());
    for &(u, v) in g.edges() {
        sets.union(u, v);
    }
    let mut block_of_root = vec![usize::MAX; g.order()];
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(sets.set_count());
    for v in 0..g.order() {
        let root = sets.find(v);
        if block_of_root[root] == usize::MAX {
            block_of_root[root] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_of_root[root]].push(v);
    }
    blocks
}
