//! Pendant constructions and the graph families used as test corpora.
//!
//! The simple families panic on sizes outside their range (a cycle needs at
//! least three vertices, nothing may exceed [`MAX_VERTICES`]); callers taking
//! sizes from users validate first.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{g01, G01Strategy};
use crate::cover::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Largest vertex count accepted by [`all_graphs`].
pub const ALL_GRAPHS_LIMIT: usize = 6;

/// Attaches a pendant to every vertex; the pendant of `v` is `n + v`.
/// Returns the graph and the pairs `(v, n + v)`.
pub fn pendant_all(g: &Graph) -> Result<(Graph, Vec<(usize, usize)>)> {
    let n = g.n();
    let pairs: Vec<_> = g.vertices().map(|v| (v, n + v)).collect();
    let plus = Graph::new(2 * n, g.edges().into_iter().chain(pairs.iter().copied()))?;
    Ok((plus, pairs))
}

/// Attaches pendants exactly at the vertices left isolated in the derived
/// 0-1 graph, numbered `n + 1, n + 2, ...` in increasing order of the vertex
/// they hang from.
pub fn pendant_g01_isolated(g: &Graph) -> Result<Graph> {
    let lonely = g01(g, G01Strategy::ByLocal, Budget::default())?.isolated();
    let n = g.n();
    let pendants = lonely.iter().zip(n + 1..);
    Graph::new(n + lonely.len(), g.edges().into_iter().chain(pendants))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::new(n, (1..=n).map(|i| (i, i % n + 1))).expect("valid cycle")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
        .expect("valid complete graph")
}

/// `K_{a,b}` with sides `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(
        a + b,
        (1..=a).flat_map(|i| (a + 1..=a + b).map(move |j| (i, j))),
    )
    .expect("valid complete bipartite graph")
}

/// Erdős–Rényi graph; each pair is an edge independently with probability
/// `edge_probability`. Deterministic in `seed`.
pub fn random_graph(n: usize, edge_probability: f64, seed: u64) -> Graph {
    assert!(n <= MAX_VERTICES);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.random_bool(edge_probability) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("valid random graph")
}

/// Random subgraph of `K_{a,b}` with sides `1..=a` and `a+1..=a+b`.
pub fn random_bipartite(a: usize, b: usize, edge_probability: f64, seed: u64) -> Graph {
    assert!(a + b <= MAX_VERTICES);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 1..=a {
        for j in a + 1..=a + b {
            if rng.random_bool(edge_probability) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(a + b, edges).expect("valid random bipartite graph")
}

/// Every labeled simple graph on `n` vertices. Graph number `m` contains
/// the `i`-th pair of `(1,2), (1,3), ..., (n-1,n)` iff bit `i` of `m` is set.
pub fn all_graphs(n: usize) -> Result<AllGraphs> {
    if n > ALL_GRAPHS_LIMIT {
        return Err(Error::Size {
            operation: "exhaustive graph enumeration",
            n,
            limit: ALL_GRAPHS_LIMIT,
        });
    }
    let pairs: Vec<_> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    Ok(AllGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

#[derive(Debug, Clone)]
pub struct AllGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for AllGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::new(self.n, edges).expect("distinct pairs"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AllGraphs {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{check_msc, check_wsc};
    use crate::graph::{connected_components, is_complete_bipartite};

    #[test]
    fn families() {
        assert_eq!(cycle(4).edges(), vec![(1, 2), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(path(3).edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(complete(4).edge_count(), 6);
        let k22 = complete_bipartite(2, 2);
        assert_eq!(
            is_complete_bipartite(&k22, k22.all_vertices()),
            Some((2, 2))
        );
        // K_{2,2} is C4 relabeled: 1-3-2-4-1
        assert_eq!(k22.edges(), vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
        assert_eq!(path(1).edge_count(), 0);
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_graphs(3).unwrap().count(), 8);
        assert_eq!(all_graphs(4).unwrap().len(), 64);
        assert_eq!(all_graphs(0).unwrap().count(), 1);
        let first_two: Vec<_> = all_graphs(3).unwrap().take(2).map(|g| g.edges()).collect();
        assert_eq!(first_two, vec![vec![], vec![(1, 2)]]);
        assert!(matches!(all_graphs(7), Err(Error::Size { .. })));
    }

    #[test]
    fn random_is_seeded() {
        assert_eq!(random_graph(10, 0.4, 7), random_graph(10, 0.4, 7));
        assert_ne!(random_graph(10, 0.4, 7), random_graph(10, 0.4, 8));
        let b = random_bipartite(3, 4, 1.0, 0);
        assert_eq!(b, complete_bipartite(3, 4));
    }

    #[test]
    fn pendants_everywhere() {
        let (plus, pairs) = pendant_all(&complete(3)).unwrap();
        assert_eq!(plus.n(), 6);
        assert_eq!(pairs, vec![(1, 4), (2, 5), (3, 6)]);
        assert!(check_msc(&plus).unwrap().is_some());

        let (p4, _) = pendant_all(&path(2)).unwrap();
        assert_eq!(p4.edges(), vec![(1, 2), (1, 3), (2, 4)]);
        assert_eq!(connected_components(&p4).len(), 1);

        let (k2, _) = pendant_all(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k2, path(2));
    }

    #[test]
    fn pendants_at_derived_isolated_vertices() {
        let c4 = cycle(4);
        assert_eq!(pendant_g01_isolated(&c4).unwrap(), c4);

        let c5 = cycle(5);
        let prime = pendant_g01_isolated(&c5).unwrap();
        assert_eq!(prime, pendant_all(&c5).unwrap().0);
        assert!(check_wsc(&prime));

        let k4 = complete(4);
        let prime = pendant_g01_isolated(&k4).unwrap();
        assert_eq!(prime.n(), 8);
        assert!(check_wsc(&prime));

        assert!(pendant_g01_isolated(&Graph::empty(2).unwrap()).is_err());
    }
}
