//! The `P_k`-thwarting number: the minimum number of edges whose removal
//! destroys every simple path on `k` vertices.
//!
//! On trees this is computed exactly by dynamic programming over a rooted
//! orientation; `theta_bruteforce` is the independent oracle for any small
//! graph. Monochromatic edges of a coloring that form a thwarting set make
//! the coloring rainbow-free, which yields `c_k(T) = n - theta(T)` on trees;
//! `coloring_from_thwarting` realizes the lower-bound direction.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{bits, low_mask, Graph, PathPattern, Tree};

const BRUTE_FORCE_EDGE_GUARD: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThwartError {
    #[error("edge {0} {1} is not an edge of the host graph")]
    NotAnEdge(usize, usize),
    #[error("edge set is not {pattern}-thwarting: a path survives removal")]
    NotThwarting { pattern: PathPattern },
    #[error("brute force supports at most {guard} edges, got {edges}")]
    TooManyEdges { edges: usize, guard: usize },
    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),
}

/// An edge set whose removal leaves no simple path on `k` vertices,
/// validated against its host graph at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThwartingSet {
    pattern: PathPattern,
    edges: Vec<(usize, usize)>,
}

impl ThwartingSet {
    pub fn new(
        host: &Graph,
        pattern: PathPattern,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ThwartError> {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        list.sort_unstable();
        list.dedup();
        for &(u, v) in &list {
            if v >= host.vertex_count() || !host.has_edge(u, v) {
                return Err(ThwartError::NotAnEdge(u, v));
            }
        }
        if host.without_edges(&list).has_simple_path(pattern.order()) {
            return Err(ThwartError::NotThwarting { pattern });
        }
        Ok(ThwartingSet {
            pattern,
            edges: list,
        })
    }

    fn new_unchecked(pattern: PathPattern, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        ThwartingSet { pattern, edges }
    }

    pub fn pattern(&self) -> PathPattern {
        self.pattern
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Exact thwarting number together with a witness set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaResult {
    pub value: usize,
    pub witness: ThwartingSet,
}

const INF: usize = usize::MAX / 2;

/// Exact `theta_{P_k}` for a tree, by DP over a rooted orientation.
///
/// State: for each vertex, the minimum number of cut edges in its subtree
/// given the number of vertices on the tallest downward path inside the
/// vertex's current component (`depth`, in `1..k`). Keeping a child edge
/// with child depth `dc` against an accumulated depth `d` requires
/// `d + dc <= k - 1` (the through-path at the vertex has `d + dc` vertices)
/// and updates the depth to `max(d, dc + 1)`; cutting costs 1 plus the
/// child's best.
pub fn theta_tree_dp(t: &Tree, pattern: PathPattern) -> ThetaResult {
    let g = t.graph();
    let n = g.vertex_count();
    let k = pattern.order();
    if n < 2 || !g.has_simple_path(k) {
        return ThetaResult {
            value: 0,
            witness: ThwartingSet::new_unchecked(pattern, Vec::new()),
        };
    }

    // Root at 0; children in ascending id order.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut seen = 1u64;
    while let Some(v) = stack.pop() {
        order.push(v);
        for u in bits(g.neighbors_mask(v) & !seen) {
            seen |= 1 << u;
            parent[u] = v;
            stack.push(u);
        }
    }
    let mut children = vec![Vec::new(); n];
    for &v in &order {
        if parent[v] != usize::MAX {
            children[parent[v]].push(v);
        }
    }
    for ch in &mut children {
        ch.sort_unstable();
    }

    // steps[v][i][d-1]: min cuts in v's subtree after merging the first i
    // children, with current component depth d at v.
    let max_depth = k - 1;
    let mut steps: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut table = Vec::with_capacity(children[v].len() + 1);
        let mut cur = vec![INF; max_depth];
        cur[0] = 0; // v alone: depth 1, no cuts
        table.push(cur.clone());
        for &c in &children[v] {
            let child_dp = steps[c].last().expect("child computed");
            let child_best = *child_dp.iter().min().expect("nonempty");
            let mut next = vec![INF; max_depth];
            for d in 1..=max_depth {
                let base = cur[d - 1];
                if base >= INF {
                    continue;
                }
                // Cut the edge to c.
                let cut = base + child_best + 1;
                if cut < next[d - 1] {
                    next[d - 1] = cut;
                }
                // Keep the edge for each feasible child depth.
                for dc in 1..=max_depth {
                    let cc = child_dp[dc - 1];
                    if cc >= INF || d + dc > k - 1 {
                        continue;
                    }
                    let nd = d.max(dc + 1);
                    let cost = base + cc;
                    if cost < next[nd - 1] {
                        next[nd - 1] = cost;
                    }
                }
            }
            cur = next;
            table.push(cur.clone());
        }
        steps[v] = table;
    }

    let root_dp = steps[0].last().expect("root computed");
    let (best_depth, &value) = root_dp
        .iter()
        .enumerate()
        .min_by_key(|&(d, &c)| (c, d))
        .expect("nonempty dp");

    // Reconstruct one witness by walking each vertex's merge steps backwards,
    // preferring kept edges on ties, then smaller depths.
    let mut cuts = Vec::new();
    let mut agenda = vec![(0usize, best_depth + 1, value)];
    while let Some((v, depth, cost)) = agenda.pop() {
        let table = &steps[v];
        let (mut d, mut c) = (depth, cost);
        for (i, &child) in children[v].iter().enumerate().rev() {
            let prev = &table[i];
            let child_dp = steps[child].last().expect("child computed");
            let child_best = *child_dp.iter().min().expect("nonempty");
            // A keep transition (pd, pc) --keep(dc)--> (d, c) needs
            // max(pd, dc+1) == d, pd + dc <= k-1, pc + child_dp[dc] == c.
            let mut keep = None;
            'keep: for dc in 1..=max_depth {
                let cc = child_dp[dc - 1];
                if cc >= INF || dc + 1 > d {
                    continue;
                }
                for pd in 1..=max_depth {
                    if pd.max(dc + 1) != d || pd + dc > k - 1 {
                        continue;
                    }
                    if prev[pd - 1] < INF && prev[pd - 1] + cc == c {
                        keep = Some((pd, dc));
                        break 'keep;
                    }
                }
            }
            if let Some((pd, dc)) = keep {
                agenda.push((child, dc, child_dp[dc - 1]));
                c -= child_dp[dc - 1];
                d = pd;
            } else {
                // Must be a cut: predecessor has the same depth.
                assert!(
                    prev[d - 1] < INF && prev[d - 1] + child_best + 1 == c,
                    "theta DP reconstruction failed at vertex {v}"
                );
                cuts.push((v.min(child), v.max(child)));
                let cd = child_dp
                    .iter()
                    .enumerate()
                    .min_by_key(|&(dd, &cc)| (cc, dd))
                    .map(|(dd, _)| dd + 1)
                    .expect("nonempty");
                agenda.push((child, cd, child_best));
                c -= child_best + 1;
            }
        }
        assert!(d == 1 && c == 0, "theta DP reconstruction did not close");
    }

    debug_assert_eq!(cuts.len(), value);
    let witness = ThwartingSet::new(g, pattern, cuts).expect("DP witness is thwarting");
    ThetaResult { value, witness }
}

/// Exact `theta_{P_k}` for any small graph by increasing-cardinality search
/// over edge subsets. The first valid subset in lexicographic edge order is
/// returned, so witnesses are deterministic.
pub fn theta_bruteforce(g: &Graph, pattern: PathPattern) -> Result<ThetaResult, ThwartError> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_EDGE_GUARD {
        return Err(ThwartError::TooManyEdges {
            edges: m,
            guard: BRUTE_FORCE_EDGE_GUARD,
        });
    }
    let k = pattern.order();
    if !g.has_simple_path(k) {
        return Ok(ThetaResult {
            value: 0,
            witness: ThwartingSet::new_unchecked(pattern, Vec::new()),
        });
    }
    for size in 1..=m {
        if let Some(witness) = first_thwarting_subset(g, k, size, &mut Vec::new(), 0, None) {
            return Ok(ThetaResult {
                value: size,
                witness: ThwartingSet::new_unchecked(pattern, witness),
            });
        }
    }
    unreachable!("removing every edge thwarts any pattern with k >= 2");
}

/// Lexicographically first `size`-subset of edges (optionally constrained)
/// whose removal destroys all `P_k`. `forced` pins one edge into the subset;
/// `chosen` carries the partial selection as edge indices.
fn first_thwarting_subset(
    g: &Graph,
    k: usize,
    size: usize,
    chosen: &mut Vec<usize>,
    from: usize,
    skip: Option<usize>,
) -> Option<Vec<(usize, usize)>> {
    if chosen.len() == size {
        let edges: Vec<(usize, usize)> = chosen.iter().map(|&i| g.edges()[i]).collect();
        if !g.without_edges(&edges).has_simple_path(k) {
            return Some(edges);
        }
        return None;
    }
    let remaining = size - chosen.len();
    let m = g.edge_count();
    for i in from..m {
        if Some(i) == skip {
            continue;
        }
        if m - i < remaining {
            break;
        }
        chosen.push(i);
        if let Some(found) = first_thwarting_subset(g, k, size, chosen, i + 1, skip) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// One color per connected component of `(V, f.edges)`. On a tree with a
/// valid thwarting set this uses exactly `n - |f|` colors and has no rainbow
/// `P_k`; the monochromatic edges are exactly `f`.
pub fn coloring_from_thwarting(g: &Graph, f: &ThwartingSet) -> Result<Coloring, ThwartError> {
    // Re-validate against this host: the set may have been built elsewhere.
    let f = ThwartingSet::new(g, f.pattern(), f.edges().iter().copied())?;
    let n = g.vertex_count();
    let kept = Graph::new(n, f.edges().iter().copied()).expect("edges validated");
    let mut labels = vec![u32::MAX; n];
    let mut next = 0u32;
    for v in 0..n {
        if labels[v] != u32::MAX {
            continue;
        }
        for u in bits(kept.component_of(v, low_mask(n))) {
            labels[u] = next;
        }
        next += 1;
    }
    Ok(Coloring::from_labels(&labels))
}

/// A minimum `P_4`-thwarting set avoiding the edge at the given leaf, if one
/// exists. On trees one always exists; `None` would contradict that and is
/// treated by the harness as a counterexample.
pub fn min_thwarting_avoiding_leaf_edge(
    t: &Tree,
    leaf: usize,
) -> Result<Option<ThetaResult>, ThwartError> {
    constrained_minimum(t, leaf, false)
}

/// A minimum `P_4`-thwarting set containing the edge at the given leaf, if
/// one exists. Guaranteed to exist when the tree is a corona; a star has
/// `theta = 0`, so there the answer is `None`.
pub fn min_thwarting_containing_leaf_edge(
    t: &Tree,
    leaf: usize,
) -> Result<Option<ThetaResult>, ThwartError> {
    constrained_minimum(t, leaf, true)
}

fn constrained_minimum(
    t: &Tree,
    leaf: usize,
    must_contain: bool,
) -> Result<Option<ThetaResult>, ThwartError> {
    let g = t.graph();
    if g.degree(leaf) != 1 {
        return Err(ThwartError::NotALeaf(leaf));
    }
    let pattern = PathPattern::P4;
    let theta = theta_tree_dp(t, pattern).value;
    let neighbor = g.neighbors(leaf).next().expect("leaf has a neighbor");
    let leaf_edge = (leaf.min(neighbor), leaf.max(neighbor));
    let leaf_idx = g
        .edges()
        .binary_search(&leaf_edge)
        .expect("leaf edge present");

    if must_contain {
        if theta == 0 {
            return Ok(None); // an empty set cannot contain an edge
        }
        let mut chosen = vec![leaf_idx];
        let found = first_thwarting_subset(g, 4, theta, &mut chosen, 0, Some(leaf_idx));
        Ok(found.map(|edges| ThetaResult {
            value: theta,
            witness: ThwartingSet::new_unchecked(pattern, edges),
        }))
    } else {
        let found =
            first_thwarting_subset(g, 4, theta, &mut Vec::new(), 0, Some(leaf_idx));
        Ok(found.map(|edges| ThetaResult {
            value: theta,
            witness: ThwartingSet::new_unchecked(pattern, edges),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::has_rainbow_path;
    use crate::graph::{Graph, PathPattern, Tree};
    use crate::zoo;

    fn corona_of_path(len: usize) -> Tree {
        let core = Graph::path(len);
        Tree::new(zoo::build(&zoo::FamilySpec::Corona { core }).unwrap()).unwrap()
    }

    #[test]
    fn dp_examples() {
        // Corona with core P_4: theta_{P_4} = n/2 - 1 = 3.
        let h = corona_of_path(4);
        assert_eq!(theta_tree_dp(&h, PathPattern::P4).value, 3);

        // Stars have no P_4 at all.
        let star = Tree::new(Graph::star(6)).unwrap();
        assert_eq!(theta_tree_dp(&star, PathPattern::P4).value, 0);

        // Octopus O_5, k = 5: one edge from 4 of the 5 arms.
        let o5 = Tree::new(zoo::build(&zoo::FamilySpec::Octopus { b: 5 }).unwrap()).unwrap();
        assert_eq!(theta_tree_dp(&o5, PathPattern::P5).value, 4);
    }

    #[test]
    fn brute_force_examples() {
        let p4 = Graph::path(4);
        assert_eq!(theta_bruteforce(&p4, PathPattern::P4).unwrap().value, 1);

        let p11 = Graph::path(11);
        assert_eq!(theta_bruteforce(&p11, PathPattern::P5).unwrap().value, 2);

        assert_eq!(
            theta_bruteforce(&Graph::star(5), PathPattern::P4)
                .unwrap()
                .value,
            0
        );
    }

    #[test]
    fn brute_force_guard() {
        let big = Graph::complete(7); // 21 edges
        assert!(matches!(
            theta_bruteforce(&big, PathPattern::P4),
            Err(ThwartError::TooManyEdges { .. })
        ));
    }

    #[test]
    fn dp_agrees_with_brute_force_on_small_trees() {
        for n in 2..=8 {
            for t in crate::enumerate::all_trees(n).unwrap() {
                for k in [3, 4, 5, 6] {
                    let p = PathPattern::new(k).unwrap();
                    let dp = theta_tree_dp(&t, p);
                    let bf = theta_bruteforce(t.graph(), p).unwrap();
                    assert_eq!(dp.value, bf.value, "tree {t:?} k {k}");
                    assert_eq!(dp.witness.len(), dp.value);
                }
            }
        }
    }

    #[test]
    fn dp_is_root_independent() {
        // Re-rooting by relabeling must not change the value.
        let t = corona_of_path(3);
        let g = t.graph();
        let n = g.vertex_count();
        let relabel: Vec<usize> = (0..n).map(|v| (v + 3) % n).collect();
        let edges = g.edges().iter().map(|&(u, v)| (relabel[u], relabel[v]));
        let t2 = Tree::new(Graph::new(n, edges).unwrap()).unwrap();
        assert_eq!(
            theta_tree_dp(&t, PathPattern::P4).value,
            theta_tree_dp(&t2, PathPattern::P4).value
        );
    }

    #[test]
    fn thwarting_set_validation() {
        let p4 = Graph::path(4);
        assert!(ThwartingSet::new(&p4, PathPattern::P4, [(1, 2)]).is_ok());
        // Removing an end edge of P_5 leaves a P_4 intact.
        let p5 = Graph::path(5);
        assert_eq!(
            ThwartingSet::new(&p5, PathPattern::P4, [(0, 1)]),
            Err(ThwartError::NotThwarting {
                pattern: PathPattern::P4
            })
        );
        assert_eq!(
            ThwartingSet::new(&p4, PathPattern::P4, [(0, 3)]),
            Err(ThwartError::NotAnEdge(0, 3))
        );
    }

    #[test]
    fn coloring_from_thwarting_round_trips() {
        // Empty set on a tree with no P_5: rainbow coloring.
        let t = Tree::path(4);
        let empty = ThwartingSet::new(t.graph(), PathPattern::P5, []).unwrap();
        let c = coloring_from_thwarting(t.graph(), &empty).unwrap();
        assert_eq!(c.color_count(), 4);

        // Corona with core P_4: the 3 core edges give n/2 + 1 = 5 colors.
        let h = corona_of_path(4);
        let core_edges = ThwartingSet::new(h.graph(), PathPattern::P4, [(0, 1), (1, 2), (2, 3)])
            .unwrap();
        let c = coloring_from_thwarting(h.graph(), &core_edges).unwrap();
        assert_eq!(c.color_count(), 5);
        assert!(!has_rainbow_path(h.graph(), &c, PathPattern::P4));
        assert_eq!(
            crate::coloring::monochromatic_edges(h.graph(), &c),
            core_edges.edges().to_vec()
        );

        // P_11, k=5, DP witness: a valid 9-color coloring.
        let p11 = Tree::path(11);
        let theta = theta_tree_dp(&p11, PathPattern::P5);
        let c = coloring_from_thwarting(p11.graph(), &theta.witness).unwrap();
        assert_eq!(c.color_count(), 11 - theta.value);
        assert!(!has_rainbow_path(p11.graph(), &c, PathPattern::P5));
    }

    #[test]
    fn leaf_edge_constrained_sets() {
        // P_4: avoiding an endpoint edge yields the middle edge.
        let p4 = Tree::path(4);
        let r = min_thwarting_avoiding_leaf_edge(&p4, 0).unwrap().unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.edges(), &[(1, 2)]);

        // The 4-vertex corona of K_2 is P_4 itself: a minimum set through a
        // designated foot edge exists with size 1.
        let r = min_thwarting_containing_leaf_edge(&p4, 0).unwrap().unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.edges(), &[(0, 1)]);

        // Corona with core P_4, any designated foot edge: size 3.
        let h = corona_of_path(4);
        for leaf in h.graph().leaves() {
            let r = min_thwarting_containing_leaf_edge(&h, leaf).unwrap().unwrap();
            assert_eq!(r.value, 3);
            let neighbor = h.graph().neighbors(leaf).next().unwrap();
            let e = (leaf.min(neighbor), leaf.max(neighbor));
            assert!(r.witness.edges().contains(&e));
        }

        // Star: theta = 0, so no set can contain an edge.
        let star = Tree::new(Graph::star(3)).unwrap();
        assert_eq!(min_thwarting_containing_leaf_edge(&star, 1).unwrap(), None);

        // Non-leaf input is a domain error.
        assert!(min_thwarting_avoiding_leaf_edge(&p4, 1).is_err());
    }
}
