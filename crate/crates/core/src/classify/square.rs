//! The square conditions SC, WSC and MSC, all built on one local test per
//! edge.

use crate::error::{Error, Result};
use crate::graph::{perfect_matching, Graph, Matching};

use super::derived::{g01, G01Strategy};

/// For the edge `{i, j}`: every neighbour `i'` of `i` and every neighbour
/// `j'` of `j` are distinct and adjacent.
pub fn edge_square_condition(g: &Graph, i: usize, j: usize) -> Result<bool> {
    if !g.has_edge(i, j) {
        return Err(Error::Argument(format!("{{{i},{j}}} is not an edge")));
    }
    Ok(squares_off(g, i, j))
}

// N(j) ⊆ N(i') for every i' in N(i). Since no vertex is its own neighbour
// this also forces i' ∉ N(j), i.e. i' != j'.
pub(crate) fn squares_off(g: &Graph, i: usize, j: usize) -> bool {
    let nj = g.neighbors(j);
    g.neighbors(i)
        .iter()
        .all(|ip| nj.difference(g.neighbors(ip)).is_empty())
}

/// Every path of three edges closes into a 4-cycle. Vacuous on graphs
/// without such paths.
pub fn check_sc(g: &Graph) -> bool {
    g.edges().into_iter().all(|(i, j)| squares_off(g, i, j))
}

/// At least one edge, and every non-isolated vertex has a neighbour with
/// which it passes [`edge_square_condition`].
pub fn check_wsc(g: &Graph) -> bool {
    g.has_edges()
        && g.non_isolated()
            .iter()
            .all(|i| g.neighbors(i).iter().any(|j| squares_off(g, i, j)))
}

/// A perfect matching of the reduced graph made of edges passing the square
/// condition, found as a perfect matching of the derived 0-1 graph. Labels
/// are those of `g`.
pub fn check_msc(g: &Graph) -> Result<Option<Matching>> {
    if !g.has_edges() {
        return Err(Error::Argument("MSC needs a graph with an edge".into()));
    }
    let derived = g01(g, G01Strategy::ByLocal, Default::default())?;
    let map = &derived.relabeling;
    Ok(perfect_matching(&derived.graph)?.map(|m| {
        Matching::new(
            m.pairs
                .into_iter()
                .map(|(u, v)| (map.to_original(u), map.to_original(v))),
        )
    }))
}

/// `m` is a perfect matching of the reduced graph of `g` and each of its
/// pairs passes the square condition in `g`.
pub fn verify_msc_witness(g: &Graph, m: &Matching) -> bool {
    let Some(touched) = m.touched() else {
        return false;
    };
    !m.is_empty()
        && touched == g.non_isolated()
        && m.pairs
            .iter()
            .all(|&(u, v)| g.has_edge(u, v) && squares_off(g, u, v))
}
