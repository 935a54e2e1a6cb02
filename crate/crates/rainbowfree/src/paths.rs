//! Closed-form values and constructive optimal colorings for paths, the
//! uniqueness criteria, and the path-attachment operation.
//!
//! For the path `P_n` and forbidden pattern `P_k`:
//!
//! - unrestricted maximum: `c_k(P_n) = floor((k-2)n / (k-1)) + 1`,
//! - proper maximum: `cp_k(P_n) = floor(((k-3)n + 1) / (k-2)) + 1`,
//!
//! with the optimal partition unique exactly when `(k-1) | n`
//! (unrestricted) resp. `n ≡ 1 (mod k-2)` (proper), for `n >= k-1`.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("invalid path query: {0}")]
    InvalidQuery(String),
    #[error("uniqueness is undefined for n = {n} < k - 1 = {km1}")]
    UniquenessUndefined { n: usize, km1: usize },
}

/// A validated query about colorings of `P_n` avoiding a rainbow `P_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathQuery {
    pub n: usize,
    pub k: usize,
    pub proper: bool,
}

impl PathQuery {
    pub fn new(n: usize, k: usize, proper: bool) -> Result<Self, FormulaError> {
        if n < 1 {
            return Err(FormulaError::InvalidQuery("n must be at least 1".into()));
        }
        if k < 2 {
            return Err(FormulaError::InvalidQuery("k must be at least 2".into()));
        }
        if proper && k < 3 {
            return Err(FormulaError::InvalidQuery(
                "proper colorings need k >= 3".into(),
            ));
        }
        if proper && n < 2 {
            return Err(FormulaError::InvalidQuery(
                "proper path colorings need n >= 2".into(),
            ));
        }
        Ok(PathQuery { n, k, proper })
    }
}

/// `c_k(P_n) = floor((k-2)n/(k-1)) + 1`.
pub fn c_k_path(n: usize, k: usize) -> usize {
    assert!(n >= 1 && k >= 2);
    (k - 2) * n / (k - 1) + 1
}

/// `cp_k(P_n) = floor(((k-3)n + 1)/(k-2)) + 1`.
pub fn cp_k_path(n: usize, k: usize) -> usize {
    assert!(n >= 2 && k >= 3);
    ((k - 3) * n + 1) / (k - 2) + 1
}

/// Builds an optimal coloring of `P_n` avoiding a rainbow `P_k`.
///
/// The first `min(n, k-1)` vertices form a rainbow prefix. Unrestricted
/// colorings then append blocks of up to `k-1` vertices whose first vertex
/// repeats the color of the previous vertex and whose rest get fresh colors.
/// Proper colorings append blocks of up to `k-2` vertices whose first vertex
/// repeats the color two positions back instead.
pub fn construct_path_coloring(q: &PathQuery) -> Coloring {
    let (n, k) = (q.n, q.k);
    let mut labels: Vec<u32> = Vec::with_capacity(n);
    let mut fresh = 0u32;
    let prefix = n.min(k - 1);
    for _ in 0..prefix {
        labels.push(fresh);
        fresh += 1;
    }
    let block = if q.proper { k - 2 } else { k - 1 };
    while labels.len() < n {
        let p = labels.len();
        let repeated = if q.proper {
            labels[p - 2]
        } else {
            labels[p - 1]
        };
        labels.push(repeated);
        for _ in 1..block.min(n - p) {
            labels.push(fresh);
            fresh += 1;
        }
    }
    Coloring::from_labels(&labels)
}

/// Whether the optimal coloring of `P_n` (as a partition) is unique.
///
/// Defined only for `n >= k-1`; smaller `n` is refused rather than guessed.
pub fn path_coloring_unique(q: &PathQuery) -> Result<bool, FormulaError> {
    let (n, k) = (q.n, q.k);
    if n < k - 1 {
        return Err(FormulaError::UniquenessUndefined { n, km1: k - 1 });
    }
    Ok(if q.proper {
        n % (k - 2) == 1 % (k - 2)
    } else {
        n % (k - 1) == 0
    })
}

/// Returns `g` with a fresh path on `m` vertices attached: new vertices get
/// ids `n..n+m`, forming a path whose first vertex `n` is joined to `w`.
pub fn attach_path(g: &Graph, w: usize, m: usize) -> Result<Graph, GraphError> {
    let n = g.vertex_count();
    if w >= n {
        return Err(GraphError::VertexOutOfRange { vertex: w, n });
    }
    assert!(m >= 1, "attached path must have at least one vertex");
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.push((w, n));
    for i in 1..m {
        edges.push((n + i - 1, n + i));
    }
    Graph::new(n + m, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{has_rainbow_path, is_proper};
    use crate::graph::PathPattern;

    fn digits(s: &str) -> Coloring {
        let v: Vec<u8> = s.bytes().collect();
        Coloring::from_labels(&v)
    }

    #[test]
    fn formula_values() {
        assert_eq!(c_k_path(11, 5), 9);
        assert_eq!(cp_k_path(11, 5), 8);
        assert_eq!(c_k_path(12, 4), 9);
        assert_eq!(cp_k_path(9, 4), 6);
        // n <= k-1 gives n (rainbow allowed).
        for k in 2..=7 {
            for n in 1..k {
                assert_eq!(c_k_path(n, k), n);
                if k >= 3 && n >= 2 {
                    assert_eq!(cp_k_path(n, k), n);
                }
            }
        }
    }

    #[test]
    fn recurrences_hold() {
        // c_k(P_n) = c_k(P_{n-k+1}) + k - 2 for n >= k.
        for k in 2..=6 {
            for n in k..=14 {
                assert_eq!(c_k_path(n, k), c_k_path(n - k + 1, k) + k - 2);
            }
        }
        // cp_k(P_n) = cp_k(P_{n-k+2}) + k - 3 for n >= k.
        for k in 3..=6 {
            for n in k..=14 {
                assert_eq!(cp_k_path(n, k), cp_k_path(n - k + 2, k) + k - 3);
            }
        }
    }

    #[test]
    fn c_dominates_cp() {
        for k in 3..=6 {
            for n in 2..=20 {
                assert!(c_k_path(n, k) >= cp_k_path(n, k));
            }
        }
    }

    #[test]
    fn displayed_colorings_reproduced() {
        let q = PathQuery::new(11, 5, false).unwrap();
        assert_eq!(construct_path_coloring(&q), digits("12344567789"));
        let q = PathQuery::new(11, 5, true).unwrap();
        assert_eq!(construct_path_coloring(&q), digits("12343565787"));
        let q = PathQuery::new(3, 4, false).unwrap();
        assert_eq!(construct_path_coloring(&q), Coloring::rainbow(3));
    }

    #[test]
    fn constructions_validate_and_hit_the_formula() {
        for k in 2..=6 {
            for n in 1..=16 {
                let q = PathQuery::new(n, k, false).unwrap();
                let c = construct_path_coloring(&q);
                let g = Graph::path(n);
                let p = PathPattern::new(k).unwrap();
                assert!(!has_rainbow_path(&g, &c, p), "n={n} k={k}");
                assert_eq!(c.color_count(), c_k_path(n, k), "n={n} k={k}");
            }
        }
        for k in 3..=6 {
            for n in 2..=16 {
                let q = PathQuery::new(n, k, true).unwrap();
                let c = construct_path_coloring(&q);
                let g = Graph::path(n);
                let p = PathPattern::new(k).unwrap();
                assert!(!has_rainbow_path(&g, &c, p), "proper n={n} k={k}");
                assert!(is_proper(&g, &c), "proper n={n} k={k}");
                assert_eq!(c.color_count(), cp_k_path(n, k), "proper n={n} k={k}");
            }
        }
    }

    #[test]
    fn uniqueness_criteria() {
        let unique = |n, k, proper| {
            path_coloring_unique(&PathQuery::new(n, k, proper).unwrap()).unwrap()
        };
        assert!(unique(8, 5, false)); // multiple of k-1 = 4
        assert!(!unique(11, 5, false));
        assert!(unique(10, 5, true)); // 10 = 1 + 3*3
        assert!(!unique(9, 5, true));
        // Proper, k = 4: unique exactly at odd n.
        assert!(unique(7, 4, true));
        assert!(!unique(6, 4, true));

        let q = PathQuery::new(3, 5, false).unwrap();
        assert_eq!(
            path_coloring_unique(&q),
            Err(FormulaError::UniquenessUndefined { n: 3, km1: 4 })
        );
    }

    #[test]
    fn attach_path_shapes() {
        let g = Graph::path(3);
        let g1 = attach_path(&g, 1, 1).unwrap(); // pendant vertex
        assert_eq!(g1.vertex_count(), 4);
        assert!(g1.has_edge(1, 3));

        let g2 = attach_path(&g, 2, 3).unwrap();
        assert_eq!(g2.vertex_count(), 6);
        assert!(g2.has_edge(2, 3));
        assert!(g2.has_edge(3, 4));
        assert!(g2.has_edge(4, 5));

        assert!(attach_path(&g, 7, 1).is_err());
    }

    #[test]
    fn query_validation() {
        assert!(PathQuery::new(0, 4, false).is_err());
        assert!(PathQuery::new(5, 1, false).is_err());
        assert!(PathQuery::new(5, 2, true).is_err());
        assert!(PathQuery::new(1, 4, true).is_err());
    }
}
