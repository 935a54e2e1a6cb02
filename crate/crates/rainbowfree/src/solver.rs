//! Exact computation of `c_k(G)` and `cp_k(G)` for small graphs by
//! branch-and-bound over canonical set partitions, enumeration of all valid
//! colorings at a given color count, optimal-partition counting, and the
//! boring-vertex recoloring for proper `P_4`-free colorings of trees.
//!
//! Partitions are searched in restricted-growth form (each new class takes
//! the smallest unused id), which visits every vertex partition exactly once.
//! Partial colorings are pruned as soon as the colored prefix contains a
//! rainbow path (only paths through the newest vertex need checking) or
//! when the class count can no longer reach the incumbent.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{is_proper, rainbow_path_through, Coloring};
use crate::graph::{bits, low_mask, Graph, PathPattern, Tree};
use crate::graph6::to_graph6;
use crate::thwarting::theta_tree_dp;

/// Default order guard for unrestricted solves.
pub const DEFAULT_GUARD: usize = 14;
/// Default order guard for proper solves on trees.
pub const DEFAULT_GUARD_PROPER_TREE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph on {n} vertices exceeds the solve guard of {guard} (override with max_n)")]
    TooLarge { n: usize, guard: usize },
    #[error("proper colorings need k >= 3, got k = {0}")]
    ProperNeedsK3(usize),
    #[error("optimum is undefined: no valid coloring exists")]
    UndefinedOptimum,
    #[error("coloring is not a valid input: {0}")]
    InvalidColoring(String),
    #[error("boring recoloring is defined for P_4 only")]
    BoringNeedsP4,
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

/// Solve guards, overridable per call.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Overrides the order guard (`DEFAULT_GUARD`, or
    /// `DEFAULT_GUARD_PROPER_TREE` for proper solves on trees).
    pub max_n: Option<usize>,
}

/// An optimum together with a witness coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub value: usize,
    pub witness: Coloring,
    /// Search-tree nodes explored; deterministic for a given input.
    pub nodes: u64,
}

/// Outcome of a proper solve: the optimum may not exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Solved(Solution),
    Undefined,
}

impl SolveResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            SolveResult::Solved(s) => Some(s.value),
            SolveResult::Undefined => None,
        }
    }

    pub fn expect_value(&self, what: &str) -> usize {
        self.value().unwrap_or_else(|| panic!("{what} is undefined"))
    }
}

fn effective_guard(g: &Graph, proper: bool, opts: &SolveOptions) -> usize {
    opts.max_n.unwrap_or({
        let is_tree = g.vertex_count() >= 1
            && g.edge_count() == g.vertex_count() - 1
            && g.is_connected();
        if proper && is_tree {
            DEFAULT_GUARD_PROPER_TREE
        } else {
            DEFAULT_GUARD
        }
    })
}

/// Maximum number of colors with no rainbow `P_k`; always defined.
pub fn exact_c_k(g: &Graph, p: PathPattern) -> Result<Solution, SolveError> {
    exact_c_k_with(g, p, &SolveOptions::default())
}

pub fn exact_c_k_with(
    g: &Graph,
    p: PathPattern,
    opts: &SolveOptions,
) -> Result<Solution, SolveError> {
    let guard = effective_guard(g, false, opts);
    if g.vertex_count() > guard {
        return Err(SolveError::TooLarge {
            n: g.vertex_count(),
            guard,
        });
    }
    match branch_and_bound(g, p.order(), false) {
        SolveResult::Solved(s) => Ok(s),
        // The constant coloring is always valid, so this cannot happen.
        SolveResult::Undefined => Err(SolveError::Internal("c_k search found no coloring")),
    }
}

/// Maximum number of colors over proper colorings with no rainbow `P_k`;
/// `Undefined` when no proper valid coloring exists.
pub fn exact_cp_k(g: &Graph, p: PathPattern) -> Result<SolveResult, SolveError> {
    exact_cp_k_with(g, p, &SolveOptions::default())
}

pub fn exact_cp_k_with(
    g: &Graph,
    p: PathPattern,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    if p.order() < 3 {
        return Err(SolveError::ProperNeedsK3(p.order()));
    }
    let guard = effective_guard(g, true, opts);
    if g.vertex_count() > guard {
        return Err(SolveError::TooLarge {
            n: g.vertex_count(),
            guard,
        });
    }
    Ok(branch_and_bound(g, p.order(), true))
}

const UNSET: u32 = u32::MAX;

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    proper: bool,
    order: Vec<usize>,
    labels: Vec<u32>,
    colored: u64,
    best: Option<(usize, Vec<u32>)>,
    nodes: u64,
}

fn branch_and_bound(g: &Graph, k: usize, proper: bool) -> SolveResult {
    let n = g.vertex_count();
    if n == 0 {
        return SolveResult::Solved(Solution {
            value: 0,
            witness: Coloring::from_labels::<u32>(&[]),
            nodes: 1,
        });
    }
    // Branch on high-degree vertices first: rainbow prunes hit earlier.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search {
        g,
        k,
        proper,
        order,
        labels: vec![UNSET; n],
        colored: 0,
        best: None,
        nodes: 0,
    };
    search.run(0, 0);
    let nodes = search.nodes;
    match search.best {
        Some((value, labels)) => SolveResult::Solved(Solution {
            value,
            witness: Coloring::from_labels(&labels),
            nodes,
        }),
        None => SolveResult::Undefined,
    }
}

impl Search<'_> {
    fn run(&mut self, idx: usize, used: usize) {
        self.nodes += 1;
        let n = self.g.vertex_count();
        if idx == n {
            if self.best.as_ref().is_none_or(|(b, _)| used > *b) {
                self.best = Some((used, self.labels.clone()));
            }
            return;
        }
        // No completion can beat the incumbent.
        if let Some((b, _)) = &self.best {
            if used + (n - idx) <= *b {
                return;
            }
        }
        let v = self.order[idx];
        let vbit = 1u64 << v;
        let mut neighbor_colors = 0u64;
        if self.proper {
            for u in bits(self.g.neighbors_mask(v) & self.colored) {
                neighbor_colors |= 1 << self.labels[u];
            }
        }
        for c in 0..=used as u32 {
            if self.proper && neighbor_colors & (1 << c) != 0 {
                continue;
            }
            self.labels[v] = c;
            self.colored |= vbit;
            if !rainbow_path_through(self.g, &self.labels, self.k, v, self.colored) {
                self.run(idx + 1, used.max(c as usize + 1));
            }
            self.colored &= !vbit;
        }
        self.labels[v] = UNSET;
    }
}

/// All valid colorings with exactly the given number of classes, in
/// restricted-growth order over vertex ids.
pub fn enumerate_valid_colorings(
    g: &Graph,
    p: PathPattern,
    proper: bool,
    exactly: usize,
) -> Result<ValidColorings<'_>, SolveError> {
    if proper && p.order() < 3 {
        return Err(SolveError::ProperNeedsK3(p.order()));
    }
    let guard = effective_guard(g, proper, &SolveOptions::default());
    if g.vertex_count() > guard {
        return Err(SolveError::TooLarge {
            n: g.vertex_count(),
            guard,
        });
    }
    Ok(ValidColorings::new(g, p.order(), proper, exactly))
}

/// Backtracking iterator over valid colorings; see
/// [`enumerate_valid_colorings`].
pub struct ValidColorings<'a> {
    g: &'a Graph,
    k: usize,
    proper: bool,
    exactly: usize,
    labels: Vec<u32>,
    /// classes used among the first `d` vertices
    used: Vec<usize>,
    /// next candidate class at each depth
    next_try: Vec<u32>,
    depth: usize,
    exhausted: bool,
}

impl<'a> ValidColorings<'a> {
    fn new(g: &'a Graph, k: usize, proper: bool, exactly: usize) -> Self {
        let n = g.vertex_count();
        let exhausted = exactly > n || (n > 0 && exactly == 0);
        ValidColorings {
            g,
            k,
            proper,
            exactly,
            labels: vec![UNSET; n],
            used: vec![0; n + 1],
            next_try: vec![0; n + 1],
            depth: 0,
            exhausted,
        }
    }

    fn pop(&mut self) {
        self.depth -= 1;
        self.labels[self.depth] = UNSET;
    }

    /// Tries to color vertex `depth` with class `c`; pushes on success.
    fn try_push(&mut self, c: u32) -> bool {
        let d = self.depth;
        let n = self.g.vertex_count();
        let used = self.used[d];
        let new_used = used.max(c as usize + 1);
        if new_used > self.exactly || new_used + (n - d - 1) < self.exactly {
            return false;
        }
        if self.proper {
            let below = low_mask(d);
            for u in bits(self.g.neighbors_mask(d) & below) {
                if self.labels[u] == c {
                    return false;
                }
            }
        }
        self.labels[d] = c;
        let prefix = low_mask(d + 1);
        if rainbow_path_through(self.g, &self.labels, self.k, d, prefix) {
            self.labels[d] = UNSET;
            return false;
        }
        self.depth = d + 1;
        self.used[d + 1] = new_used;
        self.next_try[d + 1] = 0;
        true
    }
}

impl Iterator for ValidColorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.exhausted {
            return None;
        }
        let n = self.g.vertex_count();
        if n == 0 {
            self.exhausted = true;
            return if self.exactly == 0 {
                Some(Coloring::from_labels::<u32>(&[]))
            } else {
                None
            };
        }
        loop {
            if self.depth == n {
                debug_assert_eq!(self.used[n], self.exactly);
                let item = Coloring::from_labels(&self.labels);
                self.pop();
                return Some(item);
            }
            let d = self.depth;
            // Restricted growth: classes 0..=used, where class == used is new.
            let max_class = self.used[d] as u32;
            let mut advanced = false;
            while self.next_try[d] <= max_class {
                let c = self.next_try[d];
                self.next_try[d] += 1;
                if self.try_push(c) {
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if d == 0 {
                    self.exhausted = true;
                    return None;
                }
                self.pop();
            }
        }
    }
}

/// Number of distinct vertex partitions achieving the optimum.
pub fn count_optimal_partitions(
    g: &Graph,
    p: PathPattern,
    proper: bool,
) -> Result<u64, SolveError> {
    let opt = if proper {
        match exact_cp_k(g, p)? {
            SolveResult::Solved(s) => s.value,
            SolveResult::Undefined => return Err(SolveError::UndefinedOptimum),
        }
    } else {
        exact_c_k(g, p)?.value
    };
    Ok(enumerate_valid_colorings(g, p, proper, opt)?.count() as u64)
}

/// A vertex is boring when all its neighbors share one color, or all
/// vertices at distance two share its own color (vacuously if either set is
/// empty or a singleton).
pub fn is_boring(t: &Tree, c: &Coloring, v: usize) -> bool {
    let g = t.graph();
    assert_eq!(c.vertex_count(), g.vertex_count(), "coloring must be total");
    labels_boring(g, c.labels(), v)
}

fn labels_boring(g: &Graph, labels: &[u32], v: usize) -> bool {
    let mut neighbor_colors = g.neighbors(v).map(|u| labels[u]);
    let same_neighbors = match neighbor_colors.next() {
        None => true,
        Some(first) => neighbor_colors.all(|c| c == first),
    };
    if same_neighbors {
        return true;
    }
    distance_two(g, v).all(|u| labels[u] == labels[v])
}

/// Vertices at distance exactly 2 from `v`. In a tree these are the
/// neighbors' other neighbors.
fn distance_two(g: &Graph, v: usize) -> impl Iterator<Item = usize> + '_ {
    let mut mask = 0u64;
    for m in g.neighbors(v) {
        mask |= g.neighbors_mask(m);
    }
    mask &= !(1u64 << v);
    mask &= !g.neighbors_mask(v);
    bits(mask)
}

/// Result of [`make_boring`]: the recoloring and the number of swap rounds
/// it took (at most `n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoringOutcome {
    pub coloring: Coloring,
    pub swap_rounds: usize,
}

/// Rewrites a valid proper rainbow-`P_4`-free coloring of a tree into one
/// with the same number of colors in which every vertex is boring.
///
/// Repeatedly picks the smallest non-boring vertex `x3`, a witness `x1` at
/// distance two with a different color and their common neighbor `x2`, and
/// swaps colors inside each subtree hanging at distance two from `x3`:
/// `color(x1) <-> color(x3)` where the subtree root has `x1`'s color,
/// `color(x2) <-> color(x3)` where it has `x2`'s. Each round strictly
/// increases the number of boring vertices.
pub fn make_boring(t: &Tree, c: &Coloring) -> Result<BoringOutcome, SolveError> {
    let g = t.graph();
    let n = g.vertex_count();
    if c.vertex_count() != n {
        return Err(SolveError::InvalidColoring(
            "coloring is not total on the tree".into(),
        ));
    }
    if !is_proper(g, c) {
        return Err(SolveError::InvalidColoring("coloring is not proper".into()));
    }
    if crate::coloring::has_rainbow_path(g, c, PathPattern::P4) {
        return Err(SolveError::InvalidColoring(
            "coloring has a rainbow P_4".into(),
        ));
    }

    let mut labels = c.labels().to_vec();
    let mut rounds = 0usize;
    loop {
        let non_boring = (0..n).find(|&v| !labels_boring(g, &labels, v));
        let x3 = match non_boring {
            None => break,
            Some(v) => v,
        };
        rounds += 1;
        if rounds > n {
            return Err(SolveError::Internal("boring recoloring did not converge"));
        }
        let c3 = labels[x3];
        let x1 = distance_two(g, x3)
            .find(|&u| labels[u] != c3)
            .ok_or(SolveError::Internal("non-boring vertex lacks a witness"))?;
        // The unique middle vertex of the x1 - x3 path.
        let x2 = bits(g.neighbors_mask(x1) & g.neighbors_mask(x3))
            .next()
            .ok_or(SolveError::Internal("distance-two witness has no middle"))?;
        let c1 = labels[x1];
        let c2 = labels[x2];
        // Swap inside every subtree hanging off a distance-two vertex.
        let within = low_mask(n);
        for y in distance_two(g, x3).collect::<Vec<_>>() {
            let cy = labels[y];
            let swap_with = if cy == c1 {
                c1
            } else if cy == c2 {
                c2
            } else if cy == c3 {
                continue;
            } else {
                return Err(SolveError::Internal(
                    "distance-two vertex outside the three proof colors",
                ));
            };
            let m = bits(g.neighbors_mask(y) & g.neighbors_mask(x3))
                .next()
                .expect("distance-two vertex has a middle");
            // Component of y with the edge to its middle removed.
            let subtree = g.component_of(y, within & !(1u64 << m));
            for u in bits(subtree) {
                if labels[u] == swap_with {
                    labels[u] = c3;
                } else if labels[u] == c3 {
                    labels[u] = swap_with;
                }
            }
        }
    }

    let coloring = Coloring::from_labels(&labels);
    debug_assert_eq!(coloring.color_count(), c.color_count());
    debug_assert!(is_proper(g, &coloring));
    debug_assert!(!crate::coloring::has_rainbow_path(
        g,
        &coloring,
        PathPattern::P4
    ));
    Ok(BoringOutcome {
        coloring,
        swap_rounds: rounds,
    })
}

/// Re-checkable record of one exact computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format_version: u32,
    /// graph6 encoding of the instance.
    pub graph: String,
    pub k: usize,
    pub proper: bool,
    pub value: CertificateValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Coloring>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<UpperBound>,
}

pub const CERTIFICATE_FORMAT_VERSION: u32 = 1;

/// Either an achieved optimum or the literal string `"undefined"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateValue {
    Defined(usize),
    Undefined,
}

impl Serialize for CertificateValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CertificateValue::Defined(v) => s.serialize_u64(*v as u64),
            CertificateValue::Undefined => s.serialize_str("undefined"),
        }
    }
}

impl<'de> Deserialize<'de> for CertificateValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(|v| CertificateValue::Defined(v as usize))
                .ok_or_else(|| D::Error::custom("value must be a non-negative integer")),
            serde_json::Value::String(s) if s == "undefined" => Ok(CertificateValue::Undefined),
            _ => Err(D::Error::custom("value must be an integer or \"undefined\"")),
        }
    }
}

/// How the optimum's upper bound was established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum UpperBound {
    /// A minimum thwarting set; on trees `c_k = n - theta`.
    Thwarting { edges: Vec<(usize, usize)> },
    /// Exhaustive branch-and-bound, with the explored node count.
    Exhaustive { nodes: u64 },
}

/// Solves and packages the result with its witnesses.
pub fn certificate(
    g: &Graph,
    p: PathPattern,
    proper: bool,
    opts: &SolveOptions,
) -> Result<Certificate, SolveError> {
    let (value, witness, nodes) = if proper {
        match exact_cp_k_with(g, p, opts)? {
            SolveResult::Solved(s) => (CertificateValue::Defined(s.value), Some(s.witness), s.nodes),
            SolveResult::Undefined => (CertificateValue::Undefined, None, 0),
        }
    } else {
        let s = exact_c_k_with(g, p, opts)?;
        (CertificateValue::Defined(s.value), Some(s.witness), s.nodes)
    };
    // For unrestricted solves on trees the thwarting duality provides a
    // matching combinatorial upper bound; otherwise record the exhaustion.
    let upper_bound = if !proper {
        match Tree::new(g.clone()) {
            Ok(t) => {
                let theta = theta_tree_dp(&t, p);
                debug_assert_eq!(
                    CertificateValue::Defined(g.vertex_count() - theta.value),
                    value
                );
                Some(UpperBound::Thwarting {
                    edges: theta.witness.edges().to_vec(),
                })
            }
            Err(_) => Some(UpperBound::Exhaustive { nodes }),
        }
    } else {
        Some(UpperBound::Exhaustive { nodes })
    };
    Ok(Certificate {
        format_version: CERTIFICATE_FORMAT_VERSION,
        graph: to_graph6(g),
        k: p.order(),
        proper,
        value,
        witness,
        upper_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::has_rainbow_path;
    use crate::graph::{Graph, PathPattern, Tree};
    use crate::paths::{c_k_path, cp_k_path};
    use crate::zoo;

    /// Independent oracle: maximize colors by enumerating all partitions in
    /// restricted-growth form, checking validity with the public predicate.
    fn brute_force_optimum(g: &Graph, k: usize, proper: bool) -> Option<usize> {
        fn rec(
            g: &Graph,
            k: usize,
            proper: bool,
            labels: &mut Vec<u32>,
            used: u32,
            best: &mut Option<usize>,
        ) {
            let n = g.vertex_count();
            let d = labels.len();
            if d == n {
                let c = Coloring::from_labels(labels);
                let p = PathPattern::new(k).unwrap();
                if (!proper || is_proper(g, &c)) && !has_rainbow_path(g, &c, p) {
                    let count = c.color_count();
                    if best.is_none() || count > best.unwrap() {
                        *best = Some(count);
                    }
                }
                return;
            }
            for c in 0..=used {
                labels.push(c);
                rec(g, k, proper, labels, used.max(c + 1), best);
                labels.pop();
            }
        }
        let mut best = None;
        rec(g, k, proper, &mut Vec::new(), 0, &mut best);
        best
    }

    #[test]
    fn solver_matches_brute_force_oracle() {
        let instances = [
            Graph::path(6),
            Graph::path(7),
            Graph::star(5),
            Graph::cycle(6),
            Graph::complete(4),
            Graph::new(7, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (5, 6)]).unwrap(),
        ];
        for g in &instances {
            for k in [3, 4, 5] {
                let p = PathPattern::new(k).unwrap();
                assert_eq!(
                    Some(exact_c_k(g, p).unwrap().value),
                    brute_force_optimum(g, k, false),
                    "c_{k} of {g:?}"
                );
                assert_eq!(
                    exact_cp_k(g, p).unwrap().value(),
                    brute_force_optimum(g, k, true),
                    "cp_{k} of {g:?}"
                );
            }
        }
    }

    #[test]
    fn exhaustive_oracle_pins_formula_values() {
        // Full partition enumerations confirming the formula values the
        // formulas module freezes: c_4(P_10) = 7 and cp_4(P_9) = 6.
        assert_eq!(brute_force_optimum(&Graph::path(10), 4, false), Some(7));
        assert_eq!(brute_force_optimum(&Graph::path(9), 4, true), Some(6));
        assert_eq!(c_k_path(10, 4), 7);
        assert_eq!(cp_k_path(9, 4), 6);
    }

    #[test]
    fn known_values() {
        // P_11, k = 5: nine colors.
        let p11 = Graph::path(11);
        assert_eq!(exact_c_k(&p11, PathPattern::P5).unwrap().value, 9);

        // Corona with core P_4: c_4 = n/2 + 1 = 5.
        let core = Graph::path(4);
        let corona = zoo::build(&zoo::FamilySpec::Corona { core }).unwrap();
        assert_eq!(exact_c_k(&corona, PathPattern::P4).unwrap().value, 5);

        // No P_4 at all: the value is n.
        let star = Graph::star(7);
        assert_eq!(exact_c_k(&star, PathPattern::P4).unwrap().value, 8);
    }

    #[test]
    fn proper_known_values() {
        // cp_4 does not exist for K_n with n >= 4.
        assert_eq!(
            exact_cp_k(&Graph::complete(4), PathPattern::P4).unwrap(),
            SolveResult::Undefined
        );

        // Double star D_2: cp_4 = 4.
        let d2 = zoo::build(&zoo::FamilySpec::DoubleStar { b: 2 }).unwrap();
        assert_eq!(exact_cp_k(&d2, PathPattern::P4).unwrap().value(), Some(4));

        // K_3 has cp_4 = 3, and attaching a P_2 does not raise it.
        let k3 = Graph::complete(3);
        assert_eq!(exact_cp_k(&k3, PathPattern::P4).unwrap().value(), Some(3));
        let k3p2 = crate::paths::attach_path(&k3, 0, 2).unwrap();
        assert_eq!(exact_cp_k(&k3p2, PathPattern::P4).unwrap().value(), Some(3));
    }

    #[test]
    fn witnesses_validate() {
        for g in [Graph::path(9), Graph::cycle(7), Graph::star(4)] {
            for k in [4, 5] {
                let p = PathPattern::new(k).unwrap();
                let s = exact_c_k(&g, p).unwrap();
                assert_eq!(s.witness.color_count(), s.value);
                assert!(!has_rainbow_path(&g, &s.witness, p));
                if let SolveResult::Solved(s) = exact_cp_k(&g, p).unwrap() {
                    assert_eq!(s.witness.color_count(), s.value);
                    assert!(is_proper(&g, &s.witness));
                    assert!(!has_rainbow_path(&g, &s.witness, p));
                }
            }
        }
    }

    #[test]
    fn formula_cross_check_on_paths() {
        for n in 1..=12 {
            let g = Graph::path(n);
            for k in [4, 5, 6] {
                let p = PathPattern::new(k).unwrap();
                assert_eq!(exact_c_k(&g, p).unwrap().value, c_k_path(n, k));
                if n >= 2 {
                    assert_eq!(
                        exact_cp_k(&g, p).unwrap().value(),
                        Some(cp_k_path(n, k)),
                        "cp n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn value_monotone_in_k() {
        for g in [Graph::path(8), Graph::cycle(6), Graph::star(5)] {
            for k in 2..=5 {
                let a = exact_c_k(&g, PathPattern::new(k).unwrap()).unwrap().value;
                let b = exact_c_k(&g, PathPattern::new(k + 1).unwrap()).unwrap().value;
                assert!(a <= b, "c_k not monotone on {g:?} at k={k}");
            }
        }
    }

    #[test]
    fn count_optimal_examples() {
        let p8 = Graph::path(8);
        assert_eq!(count_optimal_partitions(&p8, PathPattern::P5, false).unwrap(), 1);
        let p9 = Graph::path(9);
        assert!(count_optimal_partitions(&p9, PathPattern::P5, false).unwrap() >= 2);
        let p10 = Graph::path(10);
        assert_eq!(count_optimal_partitions(&p10, PathPattern::P5, true).unwrap(), 1);

        assert_eq!(
            count_optimal_partitions(&Graph::complete(4), PathPattern::P4, true),
            Err(SolveError::UndefinedOptimum)
        );
    }

    #[test]
    fn enumeration_counts() {
        // P_4, k=4, exactly 3 classes: any repeated pair kills the rainbow.
        let p4 = Graph::path(4);
        let got: Vec<Coloring> =
            enumerate_valid_colorings(&p4, PathPattern::P4, false, 3)
                .unwrap()
                .collect();
        assert_eq!(got.len(), 6);

        // P_5, k=4, exactly 4: the repeated pair must sit inside positions
        // n-k+1 ..= k (1-indexed), i.e. among vertices {1, 2, 3}.
        let p5 = Graph::path(5);
        let got: Vec<Coloring> =
            enumerate_valid_colorings(&p5, PathPattern::P4, false, 4)
                .unwrap()
                .collect();
        assert_eq!(got.len(), 3);

        // exactly = n on a graph containing P_k: empty.
        assert_eq!(
            enumerate_valid_colorings(&p5, PathPattern::P4, false, 5)
                .unwrap()
                .count(),
            0
        );

        // P_8, k=5, exactly 7: the unique optimal partition.
        let p8 = Graph::path(8);
        assert_eq!(
            enumerate_valid_colorings(&p8, PathPattern::P5, false, 7)
                .unwrap()
                .count(),
            1
        );
    }

    #[test]
    fn enumeration_matches_stirling_on_edgeless_graphs() {
        // With no edges there is nothing to prune: counts are Stirling
        // numbers of the second kind.
        let g = Graph::new(6, []).unwrap();
        let stirling2 = [1u64, 31, 90, 65, 15, 1]; // S(6, 1..=6)
        for (i, &expect) in stirling2.iter().enumerate() {
            let got = enumerate_valid_colorings(&g, PathPattern::P2, false, i + 1)
                .unwrap()
                .count() as u64;
            assert_eq!(got, expect, "S(6, {})", i + 1);
        }
    }

    #[test]
    fn solver_agrees_with_enumeration_maximum() {
        for g in [Graph::path(7), Graph::cycle(5), Graph::star(4)] {
            for k in [4, 5] {
                let p = PathPattern::new(k).unwrap();
                let opt = exact_c_k(&g, p).unwrap().value;
                assert!(enumerate_valid_colorings(&g, p, false, opt).unwrap().next().is_some());
                assert!(enumerate_valid_colorings(&g, p, false, opt + 1)
                    .unwrap()
                    .next()
                    .is_none());
            }
        }
    }

    #[test]
    fn boring_vertex_examples() {
        // Leaves are boring (single neighbor).
        let t = Tree::path(4);
        let c = Coloring::from_labels(&[0, 1, 0, 2]);
        assert!(is_boring(&t, &c, 0));
        assert!(is_boring(&t, &c, 3));

        // Star center with rainbow leaves: no distance-2 vertices.
        let star = Tree::new(Graph::star(4)).unwrap();
        let c = Coloring::from_labels(&[0, 1, 2, 3, 4]);
        assert!(is_boring(&star, &c, 0));

        // Every vertex of the 4-color double-star coloring is boring.
        let d2 = Tree::new(zoo::build(&zoo::FamilySpec::DoubleStar { b: 2 }).unwrap()).unwrap();
        let c = Coloring::from_labels(&[0, 1, 2, 3, 0, 0]);
        assert!(is_proper(d2.graph(), &c));
        assert!(!has_rainbow_path(d2.graph(), &c, PathPattern::P4));
        assert_eq!(c.color_count(), 4);
        for v in 0..6 {
            assert!(is_boring(&d2, &c, v), "vertex {v}");
        }
    }

    #[test]
    fn make_boring_fixpoint_and_preservation() {
        // An all-boring coloring comes back unchanged.
        let d2 = Tree::new(zoo::build(&zoo::FamilySpec::DoubleStar { b: 2 }).unwrap()).unwrap();
        let c = Coloring::from_labels(&[0, 1, 2, 3, 0, 0]);
        let out = make_boring(&d2, &c).unwrap();
        assert_eq!(out.coloring, c);
        assert_eq!(out.swap_rounds, 0);

        // An optimal cp_4 coloring of P_7 becomes all-boring with 5 colors.
        let p7 = Tree::path(7);
        let s = match exact_cp_k(p7.graph(), PathPattern::P4).unwrap() {
            SolveResult::Solved(s) => s,
            SolveResult::Undefined => unreachable!("trees always admit proper valid colorings"),
        };
        assert_eq!(s.value, 5);
        let out = make_boring(&p7, &s.witness).unwrap();
        assert_eq!(out.coloring.color_count(), 5);
        assert!(out.swap_rounds <= 7);
        for v in 0..7 {
            assert!(is_boring(&p7, &out.coloring, v));
        }
    }

    #[test]
    fn make_boring_handles_non_optimal_colorings() {
        // The recoloring machinery only needs validity, not optimality:
        // merge two classes of an optimal witness (when properness
        // survives) and re-run.
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x0b50);
        let mut exercised = 0;
        for _ in 0..60 {
            let n = rng.random_range(4..=9usize);
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            let t = crate::enumerate::tree_from_prufer(&seq).unwrap();
            let opt = match exact_cp_k(t.graph(), PathPattern::P4).unwrap() {
                SolveResult::Solved(s) => s,
                SolveResult::Undefined => unreachable!("trees are bipartite"),
            };
            let cc = opt.witness.color_count() as u32;
            let merged = opt.witness.merged(0, cc - 1);
            if merged.color_count() == opt.value || !is_proper(t.graph(), &merged) {
                continue;
            }
            // Merging classes cannot create a rainbow path.
            let out = make_boring(&t, &merged).unwrap();
            assert_eq!(out.coloring.color_count(), merged.color_count());
            assert!(is_proper(t.graph(), &out.coloring));
            assert!(!has_rainbow_path(t.graph(), &out.coloring, PathPattern::P4));
            for v in 0..n {
                assert!(is_boring(&t, &out.coloring, v));
            }
            exercised += 1;
        }
        assert!(exercised > 10, "too few mergeable cases: {exercised}");
    }

    #[test]
    fn make_boring_rejects_invalid_input() {
        let t = Tree::path(4);
        // Not proper.
        assert!(make_boring(&t, &Coloring::from_labels(&[0, 0, 1, 2])).is_err());
        // Rainbow P_4.
        assert!(make_boring(&t, &Coloring::rainbow(4)).is_err());
    }

    #[test]
    fn certificate_shapes() {
        let t = Graph::path(6);
        let cert = certificate(&t, PathPattern::P4, false, &SolveOptions::default()).unwrap();
        assert_eq!(cert.value, CertificateValue::Defined(5));
        assert!(matches!(cert.upper_bound, Some(UpperBound::Thwarting { .. })));
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);

        let cert = certificate(
            &Graph::complete(4),
            PathPattern::P4,
            true,
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(cert.value, CertificateValue::Undefined);
        assert!(cert.witness.is_none());
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("\"undefined\""));
    }

    #[test]
    fn size_guard_enforced() {
        let g = Graph::path(15);
        assert!(matches!(
            exact_c_k(&g, PathPattern::P4),
            Err(SolveError::TooLarge { .. })
        ));
        let opts = SolveOptions { max_n: Some(15) };
        assert!(exact_c_k_with(&g, PathPattern::P4, &opts).is_ok());
        // Proper solves on trees get the larger default guard.
        assert!(exact_cp_k(&g, PathPattern::P4).is_ok());
    }
}
