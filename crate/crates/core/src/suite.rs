//! Batch run of the quantified invariants over an exhaustive small-graph
//! corpus plus seeded random graphs. Backs the `suite` CLI command.

use serde::Serialize;

use crate::classify::{
    check_msc, check_sc, check_wsc, classify_full, component_flip_covers,
    domain_counterexample_search, g01, is_domain, structural_domain_audit, verify_msc_witness,
    DomainStrategy, G01Strategy, Settings,
};
use crate::constructions::{all_graphs, pendant_all, pendant_g01_isolated, random_graph};
use crate::cover::{
    enumerate_basic_covers, indecomposable_2covers, is_basic, is_cover, loppable_vertices, norm,
    reduce_to_basic, Cover,
};
use crate::error::Result;
use crate::graph::{
    bipartition, connected_components, is_complete_bipartite, parse_graph, perfect_matching,
    reduced, serialize_graph, Graph, GraphFormat, VertexSet,
};

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub seed: u64,
    /// Random graphs on 7 to 10 vertices added to the exhaustive corpus.
    pub samples: usize,
    pub settings: Settings,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 6,
            seed: 0,
            samples: 50,
            settings: Settings::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub passed: bool,
    /// Edge-list serialization of the first offending graph.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub graphs: usize,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }
}

type Property = (&'static str, fn(&Graph, &Settings) -> Result<bool>);

const PROPERTIES: &[Property] = &[
    ("serialization round-trip", round_trip),
    ("reduced graph idempotent", reduced_idempotent),
    ("bipartition certificate", bipartition_certificate),
    ("perfect matching certificate", matching_certificate),
    ("lop soundness", lop_soundness),
    ("basic reduction", basic_reduction),
    ("basic cover entry bound", entry_bound),
    ("edge square condition vs covers", square_vs_covers),
    ("derived graph routes agree", derived_routes_agree),
    ("derived graph satisfies SC", derived_is_sc),
    ("connected SC graphs are complete bipartite", sc_structure),
    ("WSC, domain and derived isolation agree", wsc_equivalence),
    ("MSC report conditions agree", msc_report_consistent),
    ("domain counterexamples sound and found", counterexamples),
    ("domain audit and flip covers", domain_structure),
    ("pendant constructions", pendant_constructions),
    (
        "bipartite graphs have no indecomposable 2-covers",
        bipartite_indecomposables,
    ),
];

/// The corpus: every labeled graph on up to `max_n` vertices, then
/// `samples` seeded random graphs on 7 to 10 vertices.
pub fn corpus(config: &SuiteConfig) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for n in 1..=config.max_n {
        graphs.extend(all_graphs(n)?);
    }
    for i in 0..config.samples {
        let seed = config.seed.wrapping_add(i as u64);
        let n = 7 + (seed % 4) as usize;
        graphs.push(random_graph(n, 0.35, seed));
    }
    Ok(graphs)
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let graphs = corpus(config)?;
    let mut properties = Vec::with_capacity(PROPERTIES.len());
    for &(name, check) in PROPERTIES {
        let mut result = PropertyResult {
            name,
            checked: 0,
            passed: true,
            counterexample: None,
        };
        for g in &graphs {
            result.checked += 1;
            if !check(g, &config.settings)? {
                result.passed = false;
                result.counterexample = Some(serialize_graph(g, GraphFormat::EdgeList));
                break;
            }
        }
        properties.push(result);
    }
    Ok(SuiteReport {
        graphs: graphs.len(),
        properties,
    })
}

fn round_trip(g: &Graph, _: &Settings) -> Result<bool> {
    for format in [GraphFormat::EdgeList, GraphFormat::Json] {
        let text = serialize_graph(g, format);
        let back = parse_graph(&text, format)?;
        if back != *g || serialize_graph(&back, format) != text {
            return Ok(false);
        }
    }
    Ok(true)
}

fn reduced_idempotent(g: &Graph, _: &Settings) -> Result<bool> {
    let (once, _) = reduced(g);
    let (twice, map) = reduced(&once);
    Ok(once == twice && map.is_identity())
}

fn bipartition_certificate(g: &Graph, _: &Settings) -> Result<bool> {
    Ok(match bipartition(g) {
        Some(b) => {
            b.side_a.is_disjoint(b.side_b)
                && b.side_a.union(b.side_b) == g.non_isolated()
                && g.edges()
                    .into_iter()
                    .all(|(u, v)| b.side_a.contains(u) != b.side_a.contains(v))
        }
        None => g.vertices().any(|v| on_odd_closed_walk(g, v)),
    })
}

// walks from v split by parity, grown to a fixpoint
fn on_odd_closed_walk(g: &Graph, v: usize) -> bool {
    let mut even = VertexSet::singleton(v);
    let mut odd = VertexSet::empty();
    loop {
        let step = |set: VertexSet| {
            set.iter()
                .fold(VertexSet::empty(), |acc, u| acc.union(g.neighbors(u)))
        };
        let (next_even, next_odd) = (even.union(step(odd)), odd.union(step(even)));
        if (next_even, next_odd) == (even, odd) {
            return odd.contains(v);
        }
        (even, odd) = (next_even, next_odd);
    }
}

fn matching_certificate(g: &Graph, _: &Settings) -> Result<bool> {
    Ok(match perfect_matching(g)? {
        Some(m) => {
            m.touched() == Some(g.all_vertices()) && m.pairs.iter().all(|&(u, v)| g.has_edge(u, v))
        }
        None => true,
    })
}

fn lop_soundness(g: &Graph, s: &Settings) -> Result<bool> {
    if !g.has_edges() {
        return Ok(true);
    }
    for k in 1..=2 {
        for c in &enumerate_basic_covers(g, k, s.budget)? {
            for (scale, bump) in [(1, 0), (2, 0), (1, 1)] {
                let mut cand = c.scaled(scale);
                cand.level = k;
                cand.prices[0] += bump;
                let lop = loppable_vertices(g, &cand);
                for v in g.vertices().filter(|&v| cand.price(v) >= 1) {
                    let mut down = cand.prices.clone();
                    down[v - 1] -= 1;
                    if lop.contains(v) != is_cover(g, &down, k) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn basic_reduction(g: &Graph, _: &Settings) -> Result<bool> {
    if !g.has_edges() {
        return Ok(true);
    }
    for k in 1..=3 {
        let c = Cover {
            level: k,
            prices: (0..g.n()).map(|i| k + (i as u32 % 2)).collect(),
        };
        let (basic, residue) = reduce_to_basic(g, &c);
        let sums = basic.prices.iter().zip(&residue).map(|(b, r)| b + r);
        if !is_cover(g, &basic.prices, k)
            || !is_basic(g, &basic)
            || !sums.eq(c.prices.iter().copied())
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn entry_bound(g: &Graph, s: &Settings) -> Result<bool> {
    if !g.has_edges() {
        return Ok(true);
    }
    for k in 1..=s.k_max {
        for c in &enumerate_basic_covers(g, k, s.budget)? {
            let in_range = c.prices.iter().all(|&p| p <= k);
            let isolated_zero = g
                .vertices()
                .filter(|&v| g.is_isolated(v))
                .all(|v| c.price(v) == 0);
            if !in_range || !isolated_zero || !is_basic(g, c) || !is_cover(g, &c.prices, k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn square_vs_covers(g: &Graph, s: &Settings) -> Result<bool> {
    if !g.has_edges() {
        return Ok(true);
    }
    let levels: Vec<_> = (1..=s.k_max)
        .map(|k| enumerate_basic_covers(g, k, s.budget))
        .collect::<Result<_>>()?;
    for (i, j) in g.edges() {
        let local = crate::classify::edge_square_condition(g, i, j)?;
        let ones = levels[0].iter().all(|c| c.edge_price(i, j) == 1);
        let all = levels
            .iter()
            .zip(1..)
            .all(|(set, k)| set.iter().all(|c| c.edge_price(i, j) == k));
        if local != ones || ones != all {
            return Ok(false);
        }
    }
    Ok(true)
}

fn derived_routes_agree(g: &Graph, s: &Settings) -> Result<bool> {
    if !g.has_edges() {
        return Ok(true);
    }
    Ok(g01(g, G01Strategy::ByCovers, s.budget)? == g01(g, G01Strategy::ByLocal, s.budget)?)
}

fn derived_is_sc(g: &Graph, _: &Settings) -> Result<bool> {
    if !g.has_edges() {
        return Ok(true);
    }
    Ok(check_sc(
        &g01(g, G01Strategy::ByLocal, Default::default())?.graph,
    ))
}

fn sc_structure(g: &Graph, _: &Settings) -> Result<bool> {
    let components = connected_components(g);
    if components.len() != 1 || !check_sc(g) {
        return Ok(true);
    }
    Ok(g.n() == 1 || is_complete_bipartite(g, components[0]).is_some())
}

fn wsc_equivalence(g: &Graph, s: &Settings) -> Result<bool> {
    if !g.has_edges() {
        return Ok(true);
    }
    let wsc = check_wsc(g);
    let domain = is_domain(g, DomainStrategy::ByCovers, s.budget)?;
    let no_isolated = g01(g, G01Strategy::ByLocal, s.budget)?
        .isolated()
        .is_empty();
    Ok(wsc == domain && domain == no_isolated)
}

fn msc_report_consistent(g: &Graph, s: &Settings) -> Result<bool> {
    if !g.has_edges() {
        return Ok(true);
    }
    let report = classify_full(g, s)?;
    let witness_ok = report
        .witnesses
        .matching
        .as_ref()
        .is_none_or(|m| verify_msc_witness(g, m));
    Ok(report.consistent && witness_ok)
}

fn counterexamples(g: &Graph, s: &Settings) -> Result<bool> {
    if !g.has_edges() {
        return Ok(true);
    }
    let found = domain_counterexample_search(g, 4, s.budget)?;
    Ok(match found {
        Some(w) => w.verify(g) && !check_wsc(g),
        None => check_wsc(g),
    })
}

fn domain_structure(g: &Graph, _: &Settings) -> Result<bool> {
    if !check_wsc(g) {
        return Ok(true);
    }
    if !structural_domain_audit(g)?.is_empty() {
        return Ok(false);
    }
    for h in g01(g, G01Strategy::ByLocal, Default::default())?.components() {
        let (a, b) = component_flip_covers(g, h)?;
        let (on_a, on_b) = (a.support().intersection(h), b.support().intersection(h));
        let balanced = on_a.len() == on_b.len();
        if (norm(&a) == norm(&b)) != balanced {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pendant_constructions(g: &Graph, _: &Settings) -> Result<bool> {
    let (plus, _) = pendant_all(g)?;
    if plus.n() > 0 && check_msc(&plus)?.is_none() {
        return Ok(false);
    }
    if bipartition(&plus).is_some() != bipartition(g).is_some() {
        return Ok(false);
    }
    if g.has_edges() {
        let prime = pendant_g01_isolated(g)?;
        if !check_wsc(&prime) {
            return Ok(false);
        }
        let overlay = g01(g, G01Strategy::ByLocal, Default::default())?.on_original(g.n());
        let balanced = g01(g, G01Strategy::ByLocal, Default::default())?
            .components()
            .into_iter()
            .all(|c| {
                c.len() == 1 || matches!(is_complete_bipartite(&overlay, c), Some((a, b)) if a == b)
            });
        if check_msc(&prime)?.is_some() != balanced {
            return Ok(false);
        }
    }
    Ok(true)
}

fn bipartite_indecomposables(g: &Graph, s: &Settings) -> Result<bool> {
    if bipartition(g).is_none() || !g.has_edges() {
        return Ok(true);
    }
    Ok(indecomposable_2covers(g, s.budget)?.is_empty())
}
