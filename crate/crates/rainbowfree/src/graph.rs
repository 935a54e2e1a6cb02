//! Undirected simple graphs on a small, dense vertex set, plus the `Tree`
//! refinement used throughout the tree theorems.
//!
//! Vertices are the integers `0..n`. Adjacency is kept both as a sorted edge
//! list and as one `u64` bitmask per vertex; the search code leans on the
//! masks heavily.

use std::fmt;

use thiserror::Error;

/// Hard cap on graph order so adjacency rows fit in a single `u64`.
pub const MAX_VERTICES: usize = 64;

/// Errors from graph construction and basic validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("not a tree: {0}")]
    NotATree(&'static str),
    #[error("forbidden path must have at least 2 vertices, got {0}")]
    PatternTooShort(usize),
}

/// The forbidden pattern: a path on `k >= 2` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPattern(usize);

impl PathPattern {
    pub const P2: PathPattern = PathPattern(2);
    pub const P3: PathPattern = PathPattern(3);
    pub const P4: PathPattern = PathPattern(4);
    pub const P5: PathPattern = PathPattern(5);
    pub const P6: PathPattern = PathPattern(6);

    pub fn new(k: usize) -> Result<Self, GraphError> {
        if k < 2 {
            return Err(GraphError::PatternTooShort(k));
        }
        Ok(PathPattern(k))
    }

    /// Number of vertices of the forbidden path.
    pub fn order(self) -> usize {
        self.0
    }
}

impl fmt::Display for PathPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

/// An undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Mask with the lowest `n` bits set.
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bit positions of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge iterator, rejecting
    /// self-loops, duplicates and out-of-range endpoints.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if adj[u] & (1 << v) != 0 {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            adj,
            edges: list,
        })
    }

    /// The path on `n` vertices, `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path construction")
    }

    /// The star `K_{1,b}` with center `0`.
    pub fn star(b: usize) -> Graph {
        Graph::new(b + 1, (1..=b).map(|v| (0, v))).expect("star construction")
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph construction")
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Graph::new(n, edges).expect("cycle construction")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted list of edges as `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Bitmask of the neighbors of `v`.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Vertices of degree 1.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Copy of the graph with the given edges removed. Edges not present are
    /// ignored.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        let mut gone = vec![false; self.edges.len()];
        for &(a, b) in removed {
            let (u, v) = (a.min(b), a.max(b));
            if v < self.n && adj[u] & (1 << v) != 0 {
                adj[u] &= !(1 << v);
                adj[v] &= !(1 << u);
                if let Ok(i) = self.edges.binary_search(&(u, v)) {
                    gone[i] = true;
                }
            }
        }
        let edges = self
            .edges
            .iter()
            .zip(&gone)
            .filter(|(_, &g)| !g)
            .map(|(&e, _)| e)
            .collect();
        Graph {
            n: self.n,
            adj,
            edges,
        }
    }

    /// Connected component masks, ordered by smallest contained vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & (1 << v) != 0 {
                continue;
            }
            let comp = self.component_of(v, low_mask(self.n));
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Mask of the component containing `v` inside `within`.
    pub(crate) fn component_of(&self, v: usize, within: u64) -> u64 {
        debug_assert!(within & (1 << v) != 0);
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= self.adj[u] & within & !comp;
            }
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0, low_mask(self.n)).count_ones() as usize == self.n
    }

    /// BFS distances from `v`; `usize::MAX` marks unreachable vertices.
    pub fn distances(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut frontier = 1u64 << v;
        let mut seen = frontier;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= self.adj[u] & !seen;
            }
            for u in bits(next) {
                dist[u] = d;
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// True if some simple path on `k` vertices lies inside `within`.
    pub(crate) fn has_path_within(&self, k: usize, within: u64) -> bool {
        if k == 0 {
            return true;
        }
        if k == 1 {
            return within != 0;
        }
        for start in bits(within) {
            if self.path_dfs(start, 1u64 << start, 1, k, within) {
                return true;
            }
        }
        false
    }

    fn path_dfs(&self, v: usize, visited: u64, len: usize, k: usize, within: u64) -> bool {
        if len == k {
            return true;
        }
        for u in bits(self.adj[v] & within & !visited) {
            if self.path_dfs(u, visited | (1 << u), len + 1, k, within) {
                return true;
            }
        }
        false
    }

    /// True if the graph contains a simple path on `k` vertices.
    pub fn has_simple_path(&self, k: usize) -> bool {
        self.has_path_within(k, low_mask(self.n))
    }

    /// Subgraph induced by the given vertices, relabeled densely in the
    /// order supplied.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                Some((index[u], index[v]))
            } else {
                None
            }
        });
        Graph::new(vertices.len(), edges).expect("induced subgraph is simple")
    }

    /// 2-coloring-induced partition `(X, Y)` with `X` the larger class, ties
    /// broken so that `X` contains vertex 0. `None` if the graph has an odd
    /// cycle. Disconnected graphs are split per component, the component root
    /// (smallest vertex) going to the first side.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        let a: Vec<usize> = (0..self.n).filter(|&v| side[v] == 0).collect();
        let b: Vec<usize> = (0..self.n).filter(|&v| side[v] == 1).collect();
        // `a` contains vertex 0 whenever n > 0, which also settles ties.
        if b.len() > a.len() {
            Some((b, a))
        } else {
            Some((a, b))
        }
    }
}

/// A connected acyclic graph. Construction validates the invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        if graph.vertex_count() == 0 {
            return Err(GraphError::NotATree("empty graph"));
        }
        if graph.edge_count() != graph.vertex_count() - 1 {
            return Err(GraphError::NotATree("edge count is not n - 1"));
        }
        if !graph.is_connected() {
            return Err(GraphError::NotATree("not connected"));
        }
        Ok(Tree { graph })
    }

    /// The path `P_n` as a tree.
    pub fn path(n: usize) -> Tree {
        Tree::new(Graph::path(n)).expect("paths are trees")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

impl std::ops::Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}
