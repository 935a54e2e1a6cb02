//! Constructors and recognizers for the named extremal families: coronas,
//! multi-coronas, double stars, octopuses, paths and stars.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{low_mask, Graph, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertex {0} is not a degree-1 vertex of the smaller class")]
    BadBoostLeaf(usize),
    #[error("tree contains no P_4")]
    NoP4,
}

/// A member of one of the named families.
///
/// Canonical numbering: core vertices keep their ids, feet and arms follow
/// in core-vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// One new foot adjacent to every core vertex.
    Corona { core: Graph },
    /// `feet[v]` new feet adjacent to core vertex `v`; all counts >= 1.
    MultiCorona { core: Graph, feet: Vec<usize> },
    /// Two stars with `b` leaves each, centers joined by an edge.
    DoubleStar { b: usize },
    /// The star with `b` edges, every edge subdivided once.
    Octopus { b: usize },
    Path { n: usize },
    /// `K_{1,b}` with center 0.
    Star { b: usize },
}

/// Builds the family member with its canonical vertex numbering.
pub fn build(spec: &FamilySpec) -> Result<Graph, ZooError> {
    let bad = |msg: &str| ZooError::InvalidSpec(msg.into());
    match spec {
        FamilySpec::Corona { core } => {
            let nc = core.vertex_count();
            if nc == 0 {
                return Err(bad("corona core must be nonempty"));
            }
            let feet = vec![1; nc];
            build(&FamilySpec::MultiCorona {
                core: core.clone(),
                feet,
            })
        }
        FamilySpec::MultiCorona { core, feet } => {
            let nc = core.vertex_count();
            if nc == 0 {
                return Err(bad("multi-corona core must be nonempty"));
            }
            if feet.len() != nc {
                return Err(bad("one feet count per core vertex is required"));
            }
            if feet.contains(&0) {
                return Err(bad("every core vertex needs at least one foot"));
            }
            let mut edges: Vec<(usize, usize)> = core.edges().to_vec();
            let mut next = nc;
            for (v, &count) in feet.iter().enumerate() {
                for _ in 0..count {
                    edges.push((v, next));
                    next += 1;
                }
            }
            Graph::new(next, edges).map_err(|e| bad(&e.to_string()))
        }
        FamilySpec::DoubleStar { b } => {
            if *b == 0 {
                return Err(bad("double star needs b >= 1"));
            }
            let mut edges = vec![(0, 1)];
            edges.extend((0..*b).map(|i| (0, 2 + i)));
            edges.extend((0..*b).map(|i| (1, 2 + b + i)));
            Graph::new(2 * b + 2, edges).map_err(|e| bad(&e.to_string()))
        }
        FamilySpec::Octopus { b } => {
            if *b == 0 {
                return Err(bad("octopus needs b >= 1"));
            }
            // Center 0, middles 1..=b, leaf b+i attached to middle i.
            let edges = (1..=*b)
                .map(|i| (0, i))
                .chain((1..=*b).map(|i| (i, b + i)));
            Graph::new(2 * b + 1, edges).map_err(|e| bad(&e.to_string()))
        }
        FamilySpec::Path { n } => {
            if *n == 0 {
                return Err(bad("path needs n >= 1"));
            }
            Ok(Graph::path(*n))
        }
        FamilySpec::Star { b } => {
            if *b == 0 {
                return Err(bad("star needs b >= 1"));
            }
            Ok(Graph::star(*b))
        }
    }
}

/// A corona decomposition: the core vertex set and the core-to-foot matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaDecomposition {
    pub core: Vec<usize>,
    /// `(core vertex, its foot)` pairs.
    pub feet: Vec<(usize, usize)>,
}

/// Decomposes a tree as a corona if possible.
///
/// Feet have degree 1, so for order >= 3 the core must be exactly the
/// internal vertices, making the decomposition unique: the tree is a corona
/// iff every internal vertex has exactly one leaf neighbor. `K_2` is the
/// corona of `K_1`; there the lower vertex is taken as the core.
pub fn corona_decomposition(t: &Tree) -> Option<CoronaDecomposition> {
    let g = t.graph();
    let n = g.vertex_count();
    if n == 2 {
        return Some(CoronaDecomposition {
            core: vec![0],
            feet: vec![(0, 1)],
        });
    }
    if n < 2 || !n.is_multiple_of(2) {
        return None;
    }
    let mut core = Vec::with_capacity(n / 2);
    let mut feet = Vec::with_capacity(n / 2);
    for v in 0..n {
        if g.degree(v) == 1 {
            continue;
        }
        let leaf_neighbors: Vec<usize> =
            g.neighbors(v).filter(|&u| g.degree(u) == 1).collect();
        if leaf_neighbors.len() != 1 {
            return None;
        }
        core.push(v);
        feet.push((v, leaf_neighbors[0]));
    }
    if core.len() * 2 != n {
        return None;
    }
    Some(CoronaDecomposition { core, feet })
}

pub fn is_corona(t: &Tree) -> bool {
    corona_decomposition(t).is_some()
}

/// Returns `Some(b)` iff the tree is the octopus `O_b` (`P_3 = O_1`,
/// `P_5 = O_2`).
pub fn octopus_arms(t: &Tree) -> Option<usize> {
    let g = t.graph();
    let n = g.vertex_count();
    if n < 3 || n.is_multiple_of(2) {
        return None;
    }
    let b = (n - 1) / 2;
    'candidate: for c in 0..n {
        if g.degree(c) != b {
            continue;
        }
        for m in g.neighbors(c) {
            if g.degree(m) != 2 {
                continue 'candidate;
            }
            let tip = g.neighbors(m).find(|&u| u != c).expect("degree 2");
            if g.degree(tip) != 1 {
                continue 'candidate;
            }
        }
        return Some(b);
    }
    None
}

/// Which multi-corona core the subgraph test is run against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulticoronaCore {
    /// Trees whose `P_4` copies all share one common edge.
    P4,
    /// Trees whose `P_4` copies all contain both ends of a common
    /// non-adjacent vertex pair (core `P_3` with the middle kept bare).
    P3MiddleDegree2,
}

/// Structural test behind the value-`n-1` characterizations, for trees
/// containing a `P_4`.
///
/// - `P4`: some edge lies on every `P_4`, i.e. both sides of that edge are
///   `P_4`-free stars. Equivalent to `theta_{P_4} = 1`, hence to
///   `c_4 = n - 1`.
/// - `P3MiddleDegree2`: some non-adjacent vertex pair meets every `P_4`,
///   i.e. deleting either vertex leaves no `P_4`. Giving exactly that pair
///   one shared color is the only shape of a proper `(n-1)`-coloring, hence
///   this is equivalent to `cp_4 = n - 1`.
pub fn is_multicorona_subgraph(t: &Tree, core: MulticoronaCore) -> Result<bool, ZooError> {
    let g = t.graph();
    let n = g.vertex_count();
    if !g.has_simple_path(4) {
        return Err(ZooError::NoP4);
    }
    let full = low_mask(n);
    match core {
        MulticoronaCore::P4 => {
            for &(a, b) in g.edges() {
                let cut = g.without_edges(&[(a, b)]);
                let side_a = cut.component_of(a, full);
                let side_b = full & !side_a;
                if !cut.has_path_within(4, side_a) && !cut.has_path_within(4, side_b) {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        MulticoronaCore::P3MiddleDegree2 => {
            let deletable: Vec<usize> = (0..n)
                .filter(|&v| !g.has_path_within(4, full & !(1u64 << v)))
                .collect();
            for (i, &u) in deletable.iter().enumerate() {
                for &v in &deletable[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
    }
}

/// `cp_4(D_b) = b + 2`.
pub fn double_star_cp4(b: usize) -> usize {
    assert!(b >= 1);
    b + 2
}

/// `c_5(O_b) = cp_5(O_b) = b + 2` for `b >= 2`.
pub fn octopus_values(b: usize) -> usize {
    assert!(b >= 2);
    b + 2
}

/// The bipartite lower-bound coloring: every vertex of the larger class `X`
/// gets its own color, the other class `Y` shares one color, and an optional
/// degree-1 vertex of `Y` gets a fresh color on top.
///
/// Without the boost the result is proper and rainbow-`P_4`-free (every
/// `P_4` has two `Y` vertices); with it, rainbow-`P_5`-free.
pub fn bipartite_lower_bound_coloring(
    g: &Graph,
    boost_leaf: Option<usize>,
) -> Result<Coloring, ZooError> {
    if !g.is_connected() {
        return Err(ZooError::NotConnected);
    }
    let (x, y) = g.bipartition().ok_or(ZooError::NotBipartite)?;
    let n = g.vertex_count();
    let mut labels = vec![0u32; n];
    for (i, &v) in x.iter().enumerate() {
        labels[v] = i as u32;
    }
    let shared = x.len() as u32;
    for &v in &y {
        labels[v] = shared;
    }
    if let Some(leaf) = boost_leaf {
        if !y.contains(&leaf) || g.degree(leaf) != 1 {
            return Err(ZooError::BadBoostLeaf(leaf));
        }
        labels[leaf] = shared + 1;
    }
    Ok(Coloring::from_labels(&labels))
}
