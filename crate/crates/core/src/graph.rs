//! Simple undirected graphs on vertices `1..=n` and the structural queries
//! the classifier needs: components, bipartitions, complete bipartite
//! detection, the reduced graph and exact perfect matching search.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, bit `v` standing for
//! vertex `v`. This caps graphs at [`MAX_VERTICES`] vertices, far above the
//! sizes the exhaustive cover searches can handle anyway.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 63;

/// Largest vertex count accepted by [`perfect_matching`].
pub const MATCHING_LIMIT: usize = 24;

/// A set of vertex labels, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::empty();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Two sides of a bipartite graph (or of a component of one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`,
/// sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut pairs: Vec<_> = pairs
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        Matching { pairs }
    }

    /// Vertices touched by the matching, or `None` if two pairs share one.
    pub fn touched(&self) -> Option<VertexSet> {
        let mut seen = VertexSet::empty();
        for &(u, v) in &self.pairs {
            if u == v || seen.contains(u) || seen.contains(v) {
                return None;
            }
            seen.insert(u);
            seen.insert(v);
        }
        Some(seen)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// An immutable simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // adj[v] has bit u set iff {u, v} is an edge; adj[0] is unused
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range labels and
    /// duplicate edges (in either orientation).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Size {
                operation: "graph construction",
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n + 1],
        })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::VertexRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet((u64::MAX >> (63 - self.n)) & !1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v] == 0
    }

    /// Vertices with at least one neighbour.
    pub fn non_isolated(&self) -> VertexSet {
        self.vertices().filter(|&v| !self.is_isolated(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|&a| a != 0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Subgraph of `self` keeping the vertex count and the edges accepted by
    /// `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(self.n).expect("vertex count already validated");
        for (u, v) in self.edges() {
            if keep(u, v) {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges())
    }
}

/// Graph text formats accepted by [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Json,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" => Ok(GraphFormat::EdgeList),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::Argument(format!(
                "unknown graph format {other:?} (expected edge-list or json)"
            ))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Json => parse_json(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(format!("expected a non-negative integer, got {s:?}")))
        };
        match (fields[0], graph.as_mut()) {
            ("n", None) if fields.len() == 2 => {
                graph = Some(Graph::empty(number(fields[1])?)?);
            }
            ("n", Some(_)) => return Err(parse_err("repeated header line".into())),
            ("e", Some(g)) if fields.len() == 3 => {
                g.add_edge(number(fields[1])?, number(fields[2])?)?;
            }
            ("e", None) => return Err(parse_err("edge before the `n <count>` header".into())),
            _ => return Err(parse_err(format!("malformed line {line:?}"))),
        }
    }
    graph.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `n <count>` header".into(),
    })
}

fn parse_json(text: &str) -> Result<Graph> {
    let raw: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
}

/// Canonical serialization; `parse_graph(serialize_graph(g, f), f) == g`.
pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => {
            let mut out = format!("n {}\n", g.n());
            for (u, v) in g.edges() {
                out.push_str(&format!("e {u} {v}\n"));
            }
            out
        }
        GraphFormat::Json => {
            let raw = JsonGraph {
                n: g.n(),
                edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            };
            let mut s = serde_json::to_string(&raw).expect("plain struct serializes");
            s.push('\n');
            s
        }
    }
}

/// Relabeling produced by [`reduced`]: `original[new - 1]` is the original
/// label of reduced vertex `new`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Relabeling {
    pub original: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Relabeling {
            original: (1..=n).collect(),
        }
    }

    pub fn to_original(&self, new: usize) -> usize {
        self.original[new - 1]
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.original.iter().position(|&o| o == old).map(|i| i + 1)
    }

    pub fn set_to_original(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.to_original(v)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.original.iter().enumerate().all(|(i, &o)| o == i + 1)
    }
}

/// The graph with isolated vertices deleted and the rest relabeled
/// `1..=m` in increasing order of original label.
pub fn reduced(g: &Graph) -> (Graph, Relabeling) {
    let keep = g.non_isolated().to_vec();
    let map = Relabeling { original: keep };
    let mut new_label = vec![0; g.n() + 1];
    for (i, &old) in map.original.iter().enumerate() {
        new_label[old] = i + 1;
    }
    let edges = g
        .edges()
        .into_iter()
        .map(|(u, v)| (new_label[u], new_label[v]));
    let red = Graph::new(map.original.len(), edges).expect("relabeling keeps a simple graph");
    (red, map)
}

/// Connected components, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = VertexSet::empty();
    let mut out = Vec::new();
    for start in g.vertices() {
        if seen.contains(start) {
            continue;
        }
        let comp = component_of(g, start);
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

fn component_of(g: &Graph, start: usize) -> VertexSet {
    let mut comp = VertexSet::singleton(start);
    let mut frontier = comp;
    while !frontier.is_empty() {
        let mut next = VertexSet::empty();
        for v in frontier.iter() {
            next = next.union(g.neighbors(v));
        }
        frontier = next.difference(comp);
        comp = comp.union(frontier);
    }
    comp
}

/// Two-colours `vertices` (assumed closed under adjacency restricted to
/// itself), putting the smallest vertex of each connected piece on side A.
fn two_colour(g: &Graph, vertices: VertexSet) -> Option<Bipartition> {
    let mut side_a = VertexSet::empty();
    let mut side_b = VertexSet::empty();
    let mut remaining = vertices;
    while let Some(start) = remaining.min() {
        let mut frontier = VertexSet::singleton(start);
        let mut on_a = true;
        while !frontier.is_empty() {
            if on_a {
                side_a = side_a.union(frontier);
            } else {
                side_b = side_b.union(frontier);
            }
            remaining = remaining.difference(frontier);
            let mut next = VertexSet::empty();
            for v in frontier.iter() {
                next = next.union(g.neighbors(v).intersection(vertices));
            }
            let (same, other) = if on_a {
                (side_a, side_b)
            } else {
                (side_b, side_a)
            };
            if !next.is_disjoint(same) {
                return None;
            }
            frontier = next.difference(other);
            on_a = !on_a;
        }
    }
    Some(Bipartition { side_a, side_b })
}

/// A bipartition of the non-isolated vertices, or `None` if `g` has an odd
/// cycle. In each component the side holding the smallest label is side A.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    two_colour(g, g.non_isolated())
}

/// `Some((a, b))` with `a <= b` iff the subgraph induced on `component` is
/// `K_{a,b}`. A single point is not reported as complete bipartite.
pub fn is_complete_bipartite(g: &Graph, component: VertexSet) -> Option<(usize, usize)> {
    if component.len() < 2 {
        return None;
    }
    let sides = two_colour(g, component)?;
    for u in sides.side_a.iter() {
        if g.neighbors(u).intersection(component) != sides.side_b {
            return None;
        }
    }
    let (a, b) = (sides.side_a.len(), sides.side_b.len());
    Some((a.min(b), a.max(b)))
}

/// Exact perfect matching search, memoised over the set of still unmatched
/// vertices. The smallest unmatched vertex is always paired with its
/// smallest feasible neighbour first, so the result is deterministic.
pub fn perfect_matching(g: &Graph) -> Result<Option<Matching>> {
    if g.n() > MATCHING_LIMIT {
        return Err(Error::Size {
            operation: "perfect matching",
            n: g.n(),
            limit: MATCHING_LIMIT,
        });
    }
    if g.n() % 2 == 1 {
        return Ok(None);
    }
    let mut dead = HashSet::new();
    let mut pairs = Vec::with_capacity(g.n() / 2);
    let found = match_rest(g, g.all_vertices(), &mut dead, &mut pairs);
    Ok(found.then(|| Matching::new(pairs)))
}

fn match_rest(
    g: &Graph,
    unmatched: VertexSet,
    dead: &mut HashSet<u64>,
    pairs: &mut Vec<(usize, usize)>,
) -> bool {
    let Some(v) = unmatched.min() else {
        return true;
    };
    if dead.contains(&unmatched.bits()) {
        return false;
    }
    let rest = unmatched.difference(VertexSet::singleton(v));
    for u in g.neighbors(v).intersection(rest).iter() {
        pairs.push((v, u));
        if match_rest(g, rest.difference(VertexSet::singleton(u)), dead, pairs) {
            return true;
        }
        pairs.pop();
    }
    dead.insert(unmatched.bits());
    false
}
