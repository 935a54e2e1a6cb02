//! Vertex colorings as canonical set partitions, and the rainbow-path
//! predicate everything else is built on.
//!
//! A coloring is a total map from vertices to color ids. Two colorings are
//! equal iff they induce the same partition of the vertex set, so labels are
//! normalized on construction to restricted-growth form: scanning vertices in
//! order, each new class takes the smallest unused id.

use serde::{Deserialize, Deserializer, Serialize};

use crate::graph::{bits, low_mask, Graph, PathPattern};

/// A total vertex coloring in restricted-growth (canonical) form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Coloring {
    labels: Vec<u32>,
}

impl Coloring {
    /// Builds a coloring from arbitrary labels, normalizing to canonical form.
    pub fn from_labels<L: Copy + Eq + std::hash::Hash>(labels: &[L]) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let mut out = Vec::with_capacity(labels.len());
        for &l in labels {
            let next = map.len() as u32;
            out.push(*map.entry(l).or_insert(next));
        }
        Coloring { labels: out }
    }

    /// All-distinct coloring on `n` vertices.
    pub fn rainbow(n: usize) -> Coloring {
        Coloring {
            labels: (0..n as u32).collect(),
        }
    }

    /// Single-class coloring on `n` vertices.
    pub fn constant(n: usize) -> Coloring {
        Coloring {
            labels: vec![0; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Number of nonempty color classes.
    pub fn color_count(&self) -> usize {
        self.labels.iter().map(|&l| l + 1).max().unwrap_or(0) as usize
    }

    /// Color classes as vertex lists, indexed by canonical label.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.color_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(v);
        }
        out
    }

    /// Coloring with classes `a` and `b` merged; a no-op when `a == b`.
    pub fn merged(&self, a: u32, b: u32) -> Coloring {
        let labels: Vec<u32> = self
            .labels
            .iter()
            .map(|&l| if l == b { a } else { l })
            .collect();
        Coloring::from_labels(&labels)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<u32>::deserialize(deserializer)?;
        Ok(Coloring::from_labels(&labels))
    }
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    assert_eq!(c.vertex_count(), g.vertex_count(), "coloring must be total");
    g.edges().iter().all(|&(u, v)| c.label(u) != c.label(v))
}

/// Edges whose endpoints share a color.
pub fn monochromatic_edges(g: &Graph, c: &Coloring) -> Vec<(usize, usize)> {
    assert_eq!(c.vertex_count(), g.vertex_count(), "coloring must be total");
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| c.label(u) == c.label(v))
        .collect()
}

/// True iff some simple path on `p.order()` vertices is rainbow under `c`.
///
/// DFS over simple paths, pruning as soon as a color repeats. Each undirected
/// path is accepted from its lower-id endpoint only.
pub fn has_rainbow_path(g: &Graph, c: &Coloring, p: PathPattern) -> bool {
    assert_eq!(c.vertex_count(), g.vertex_count(), "coloring must be total");
    rainbow_path_within(g, c.labels(), p.order(), low_mask(g.vertex_count()))
}

/// Rainbow-path existence restricted to the vertices in `within`. Labels are
/// read only for vertices inside the mask and must be `< 64`.
pub(crate) fn rainbow_path_within(g: &Graph, labels: &[u32], k: usize, within: u64) -> bool {
    for start in bits(within) {
        if rainbow_dfs(
            g,
            labels,
            start,
            start,
            1u64 << start,
            1u64 << labels[start],
            1,
            k,
            within,
        ) {
            return true;
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn rainbow_dfs(
    g: &Graph,
    labels: &[u32],
    start: usize,
    v: usize,
    visited: u64,
    colors: u64,
    len: usize,
    k: usize,
    within: u64,
) -> bool {
    if len == k {
        return start < v;
    }
    for u in bits(g.neighbors_mask(v) & within & !visited) {
        let bit = 1u64 << labels[u];
        if colors & bit == 0
            && rainbow_dfs(
                g,
                labels,
                start,
                u,
                visited | (1 << u),
                colors | bit,
                len + 1,
                k,
                within,
            )
        {
            return true;
        }
    }
    false
}

/// Rainbow-path existence where the path must pass through `pivot`. Used by
/// the solver to check partial colorings incrementally: only paths through
/// the newest colored vertex can be newly rainbow.
pub(crate) fn rainbow_path_through(
    g: &Graph,
    labels: &[u32],
    k: usize,
    pivot: usize,
    within: u64,
) -> bool {
    debug_assert!(within & (1 << pivot) != 0);
    let colors = 1u64 << labels[pivot];
    // Split the path at the pivot into two arms of a and b extra vertices.
    for a in 0..k {
        let b = k - 1 - a;
        if a > b {
            break;
        }
        if arm_dfs(g, labels, pivot, pivot, 1u64 << pivot, colors, a, b, within) {
            return true;
        }
    }
    false
}

/// Grows the first arm away from the pivot; once done, grows the second.
#[allow(clippy::too_many_arguments)]
fn arm_dfs(
    g: &Graph,
    labels: &[u32],
    pivot: usize,
    end: usize,
    visited: u64,
    colors: u64,
    rem_first: usize,
    rem_second: usize,
    within: u64,
) -> bool {
    if rem_first == 0 {
        return second_arm_dfs(g, labels, pivot, visited, colors, rem_second, within);
    }
    for u in bits(g.neighbors_mask(end) & within & !visited) {
        let bit = 1u64 << labels[u];
        if colors & bit == 0
            && arm_dfs(
                g,
                labels,
                pivot,
                u,
                visited | (1 << u),
                colors | bit,
                rem_first - 1,
                rem_second,
                within,
            )
        {
            return true;
        }
    }
    false
}

fn second_arm_dfs(
    g: &Graph,
    labels: &[u32],
    end: usize,
    visited: u64,
    colors: u64,
    rem: usize,
    within: u64,
) -> bool {
    if rem == 0 {
        return true;
    }
    for u in bits(g.neighbors_mask(end) & within & !visited) {
        let bit = 1u64 << labels[u];
        if colors & bit == 0
            && second_arm_dfs(
                g,
                labels,
                u,
                visited | (1 << u),
                colors | bit,
                rem - 1,
                within,
            )
        {
            return true;
        }
    }
    false
}
