//! The derived 0-1 graph: the reduced graph keeping only the edges on which
//! every basic 1-cover costs exactly 1.
//!
//! Two constructions are available. One enumerates basic 1-covers and
//! filters edges by price; the other keeps the edges passing the local
//! square condition. They must agree edge for edge.

use crate::cover::{enumerate_basic_covers, Budget, CoverSet};
use crate::error::{Error, Result};
use crate::graph::{connected_components, reduced, Graph, Relabeling, VertexSet};

use super::square::squares_off;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum G01Strategy {
    ByCovers,
    #[default]
    ByLocal,
    CrossCheck,
}

/// The derived graph on the reduced vertex set, together with the map back
/// to the original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedGraph {
    pub graph: Graph,
    pub relabeling: Relabeling,
}

impl DerivedGraph {
    /// Components in original labels.
    pub fn components(&self) -> Vec<VertexSet> {
        connected_components(&self.graph)
            .into_iter()
            .map(|c| self.relabeling.set_to_original(c))
            .collect()
    }

    /// Vertices of the reduced graph left isolated, in original labels.
    pub fn isolated(&self) -> VertexSet {
        let red_isolated = self
            .graph
            .all_vertices()
            .difference(self.graph.non_isolated());
        self.relabeling.set_to_original(red_isolated)
    }

    /// Edges in original labels.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let map = &self.relabeling;
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| (map.to_original(u), map.to_original(v)))
            .collect()
    }

    /// The derived edges laid over the full original vertex set `1..=n`.
    pub fn on_original(&self, n: usize) -> Graph {
        Graph::new(n, self.edges()).expect("derived edges are edges of the original graph")
    }
}

pub fn g01(g: &Graph, strategy: G01Strategy, budget: Budget) -> Result<DerivedGraph> {
    if !g.has_edges() {
        return Err(Error::Argument(
            "the derived 0-1 graph needs a graph with an edge".into(),
        ));
    }
    match strategy {
        G01Strategy::ByLocal => Ok(by_local(g)),
        G01Strategy::ByCovers => {
            let covers = enumerate_basic_covers(g, 1, budget)?;
            Ok(g01_from_covers(g, &covers))
        }
        G01Strategy::CrossCheck => {
            let local = by_local(g);
            let covers = enumerate_basic_covers(g, 1, budget)?;
            let by_covers = g01_from_covers(g, &covers);
            if local != by_covers {
                return Err(Error::Consistency(format!(
                    "derived graph of {g:?}: local edges {:?}, cover edges {:?}",
                    local.edges(),
                    by_covers.edges()
                )));
            }
            Ok(local)
        }
    }
}

fn by_local(g: &Graph) -> DerivedGraph {
    restrict(g, |i, j| squares_off(g, i, j))
}

/// Derived graph from an already enumerated set of basic 1-covers of `g`.
pub(crate) fn g01_from_covers(g: &Graph, basic_1covers: &CoverSet) -> DerivedGraph {
    restrict(g, |i, j| {
        basic_1covers.iter().all(|c| c.edge_price(i, j) == 1)
    })
}

fn restrict(g: &Graph, keep: impl FnMut(usize, usize) -> bool) -> DerivedGraph {
    let (graph, relabeling) = reduced(g);
    let kept = g.filter_edges(keep);
    let graph = Graph::new(
        graph.n(),
        kept.edges().into_iter().map(|(u, v)| {
            (
                relabeling.to_new(u).expect("endpoint is not isolated"),
                relabeling.to_new(v).expect("endpoint is not isolated"),
            )
        }),
    )
    .expect("subgraph of the reduced graph");
    DerivedGraph { graph, relabeling }
}
