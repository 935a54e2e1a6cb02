//! Enumeration of all non-isomorphic free trees of a given order, canonical
//! forms, and native generation of small connected cubic graphs.
//!
//! Rooted trees are generated as canonical level sequences in reverse
//! lexicographic order (the classic successor algorithm: find the last
//! entry above 2, step it down by repeating the block that ends before it).
//! Each rooted tree is kept iff its root and arrangement coincide with the
//! free canonical form, which roots at the tree's center, so every free
//! tree is emitted exactly once.

use thiserror::Error;

use crate::graph::{bits, Graph, Tree};

/// Native free-tree enumeration guard.
pub const TREE_ORDER_GUARD: usize = 16;
/// Native cubic-graph generation guard; larger orders are ingested from
/// graph6 files instead.
pub const CUBIC_ORDER_GUARD: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("tree enumeration supports 1 ..= {max} vertices, got {n}")]
    OrderGuard { n: usize, max: usize },
    #[error("cubic graphs have even order, got {0}")]
    OddCubicOrder(usize),
    #[error("native cubic generation supports n <= {max}, got {n}; ingest a graph6 file instead")]
    CubicGuard { n: usize, max: usize },
    #[error("invalid pruefer sequence: {0}")]
    BadPrufer(String),
}

/// Iterator over all free trees of one order, each exactly once, in a
/// deterministic canonical order.
pub struct TreeStream {
    n: usize,
    level: Vec<u8>,
    started: bool,
    done: bool,
}

impl TreeStream {
    /// Order of the trees this stream yields.
    pub fn order(&self) -> usize {
        self.n
    }
}

/// All non-isomorphic free trees on `n` vertices.
pub fn all_trees(n: usize) -> Result<TreeStream, EnumerateError> {
    if !(1..=TREE_ORDER_GUARD).contains(&n) {
        return Err(EnumerateError::OrderGuard {
            n,
            max: TREE_ORDER_GUARD,
        });
    }
    Ok(TreeStream {
        n,
        level: (1..=n as u8).collect(),
        started: false,
        done: false,
    })
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        loop {
            if self.done {
                return None;
            }
            if self.started {
                if !successor(&mut self.level) {
                    self.done = true;
                    return None;
                }
            } else {
                self.started = true;
            }
            let tree = tree_from_level_sequence(&self.level);
            if free_canonical_sequence(&tree) == self.level {
                return Some(tree);
            }
        }
    }
}

/// Advances a canonical rooted level sequence to its successor in reverse
/// lexicographic order; `false` when the star (the last sequence) is passed.
fn successor(level: &mut [u8]) -> bool {
    let p = match level.iter().rposition(|&l| l > 2) {
        Some(p) => p,
        None => return false,
    };
    let q = level[..p]
        .iter()
        .rposition(|&l| l == level[p] - 1)
        .expect("canonical sequences have a parent entry");
    for i in p..level.len() {
        level[i] = level[i - (p - q)];
    }
    true
}

/// Builds the tree encoded by a rooted level sequence (root level 1): the
/// parent of position `i` is the nearest earlier position one level up.
fn tree_from_level_sequence(level: &[u8]) -> Tree {
    let n = level.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = level[..i]
            .iter()
            .rposition(|&l| l == level[i] - 1)
            .expect("valid level sequence");
        edges.push((parent, i));
    }
    Tree::new(Graph::new(n, edges).expect("level sequence is simple")).expect("connected acyclic")
}

/// Center vertices of a tree (one or two), by repeated leaf removal.
fn centers(t: &Tree) -> Vec<usize> {
    let g = t.graph();
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for u in g.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Canonical (lexicographically maximal) level sequence of the tree rooted
/// at `root`: children subtrees are ordered by decreasing sequence.
fn canonical_rooted_sequence(t: &Tree, root: usize) -> Vec<u8> {
    fn subtree(g: &Graph, v: usize, parent: usize, depth: u8, out: &mut Vec<u8>) {
        let mut kids: Vec<Vec<u8>> = g
            .neighbors(v)
            .filter(|&u| u != parent)
            .map(|u| {
                let mut s = Vec::new();
                subtree(g, u, v, depth + 1, &mut s);
                s
            })
            .collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        out.push(depth);
        for k in kids {
            out.extend_from_slice(&k);
        }
    }
    let mut out = Vec::with_capacity(t.graph().vertex_count());
    subtree(t.graph(), root, usize::MAX, 1, &mut out);
    out
}

/// Canonical level sequence of a free tree: root at the center, or at the
/// better of the two centers.
fn free_canonical_sequence(t: &Tree) -> Vec<u8> {
    let cs = centers(t);
    match cs.as_slice() {
        [c] => canonical_rooted_sequence(t, *c),
        [c1, c2] => {
            let s1 = canonical_rooted_sequence(t, *c1);
            let s2 = canonical_rooted_sequence(t, *c2);
            s1.max(s2)
        }
        _ => unreachable!("trees have one or two centers"),
    }
}

/// Isomorphism-invariant key: two trees are isomorphic iff their canonical
/// forms are equal.
pub fn canonical_form(t: &Tree) -> String {
    let seq = free_canonical_sequence(t);
    seq.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Decodes a Pruefer sequence over `0..n` (with `n = seq.len() + 2`) into a
/// labeled tree. Used as the independent generate-and-canonize oracle and
/// for random tree sampling.
pub fn tree_from_prufer(seq: &[usize]) -> Result<Tree, EnumerateError> {
    let n = seq.len() + 2;
    if n > crate::graph::MAX_VERTICES {
        return Err(EnumerateError::BadPrufer(format!(
            "order {n} exceeds the vertex cap"
        )));
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(EnumerateError::BadPrufer(format!(
            "entry {v} out of range for order {n}"
        )));
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // `ptr` scans for the smallest current leaf; `leaf` may drop below it.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::new(Graph::new(n, edges).expect("pruefer edges are simple"))
        .map_err(|e| EnumerateError::BadPrufer(e.to_string()))
}

/// All connected 3-regular graphs on `n` vertices, non-isomorphic, by
/// native backtracking generation with isomorphism dedup. `n` must be even
/// and at most [`CUBIC_ORDER_GUARD`].
pub fn all_cubic_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if !n.is_multiple_of(2) {
        return Err(EnumerateError::OddCubicOrder(n));
    }
    if n > CUBIC_ORDER_GUARD {
        return Err(EnumerateError::CubicGuard {
            n,
            max: CUBIC_ORDER_GUARD,
        });
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let mut st = CubicSearch {
        n,
        adj: vec![0u64; n],
        deg: vec![0u8; n],
        reps: Vec::new(),
    };
    // Vertex 0's neighborhood can be fixed as {1, 2, 3} up to relabeling.
    for w in [1, 2, 3] {
        st.adj[0] |= 1 << w;
        st.adj[w] |= 1;
        st.deg[0] += 1;
        st.deg[w] += 1;
    }
    st.extend(0);
    Ok(st.reps.into_iter().map(|(_, g)| g).collect())
}

type VertexInvariant = (u8, Vec<u8>);

struct CubicSearch {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<u8>,
    reps: Vec<(Vec<VertexInvariant>, Graph)>,
}

impl CubicSearch {
    fn extend(&mut self, from_w: usize) {
        let u = match (0..self.n).find(|&v| self.deg[v] < 3) {
            Some(u) => u,
            None => {
                self.record();
                return;
            }
        };
        let lo = from_w.max(u + 1);
        // Not enough remaining partners for u: dead end.
        let partners = (lo..self.n)
            .filter(|&w| self.deg[w] < 3 && self.adj[u] & (1 << w) == 0)
            .count();
        if partners < (3 - self.deg[u]) as usize {
            return;
        }
        for w in lo..self.n {
            if self.deg[w] == 3 || self.adj[u] & (1 << w) != 0 {
                continue;
            }
            self.adj[u] |= 1 << w;
            self.adj[w] |= 1 << u;
            self.deg[u] += 1;
            self.deg[w] += 1;
            let next_from = if self.deg[u] == 3 { 0 } else { w + 1 };
            self.extend(next_from);
            self.adj[u] &= !(1 << w);
            self.adj[w] &= !(1 << u);
            self.deg[u] -= 1;
            self.deg[w] -= 1;
        }
    }

    fn record(&mut self) {
        let n = self.n;
        let edges = (0..n)
            .flat_map(|u| bits(self.adj[u]).filter(move |&w| w > u).map(move |w| (u, w)));
        let g = Graph::new(n, edges).expect("generated graph is simple");
        if !g.is_connected() {
            return;
        }
        let inv = graph_invariant(&g);
        if self
            .reps
            .iter()
            .any(|(k, r)| *k == inv && isomorphic(&g, r))
        {
            return;
        }
        self.reps.push((inv, g));
    }
}

fn vertex_invariant(g: &Graph, v: usize) -> VertexInvariant {
    let mut tri = 0u8;
    for u in g.neighbors(v) {
        tri += (g.neighbors_mask(v) & g.neighbors_mask(u)).count_ones() as u8;
    }
    let mut dist: Vec<u8> = g
        .distances(v)
        .into_iter()
        .map(|d| if d == usize::MAX { u8::MAX } else { d as u8 })
        .collect();
    dist.sort_unstable();
    (tri / 2, dist)
}

/// Sorted per-vertex invariants: (triangles at v, sorted BFS distances).
fn graph_invariant(g: &Graph) -> Vec<VertexInvariant> {
    let mut inv: Vec<VertexInvariant> = (0..g.vertex_count())
        .map(|v| vertex_invariant(g, v))
        .collect();
    inv.sort_unstable();
    inv
}

/// Backtracking isomorphism test with per-vertex invariant pruning.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let inv_a: Vec<VertexInvariant> = (0..n).map(|v| vertex_invariant(a, v)).collect();
    let inv_b: Vec<VertexInvariant> = (0..n).map(|v| vertex_invariant(b, v)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    iso_rec(a, b, &inv_a, &inv_b, &mut map, &mut used, 0)
}

fn iso_rec(
    a: &Graph,
    b: &Graph,
    inv_a: &[VertexInvariant],
    inv_b: &[VertexInvariant],
    map: &mut Vec<usize>,
    used: &mut u64,
    v: usize,
) -> bool {
    let n = a.vertex_count();
    if v == n {
        return true;
    }
    for w in 0..n {
        if *used & (1 << w) != 0 || inv_a[v] != inv_b[w] {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if iso_rec(a, b, inv_a, inv_b, map, used, v + 1) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}
