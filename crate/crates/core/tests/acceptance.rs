//! Acceptance criteria. Every check is exact; each test prints one
//! `criterion N: PASS|FAIL` line (run with `--nocapture` to see them).

use std::sync::OnceLock;

use cover_classify::classify::{
    check_msc, check_sc, check_wsc, classify_full, component_flip_covers, g01, is_domain,
    is_unmixed, structural_domain_audit, verify_msc_witness, ClassificationReport, DomainStrategy,
    G01Strategy, Settings,
};
use cover_classify::constructions::{
    all_graphs, complete, cycle, pendant_all, pendant_g01_isolated, random_bipartite, random_graph,
};
use cover_classify::cover::{
    enumerate_basic_covers, indecomposable_2covers, is_basic, is_cover, norm, Budget,
};
use cover_classify::graph::{
    bipartition, connected_components, is_complete_bipartite, perfect_matching, Graph, VertexSet,
};

fn report(id: u32, description: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id}: {status}  {description}");
    for f in failures.iter().take(5) {
        println!("    {f}");
    }
    assert!(
        failures.is_empty(),
        "criterion {id} failed: {:?}",
        &failures[..failures.len().min(5)]
    );
}

fn example() -> Graph {
    Graph::new(6, [(1, 2), (2, 3), (3, 4), (1, 4), (2, 5), (4, 5), (5, 6)]).unwrap()
}

fn budget() -> Budget {
    Budget::default()
}

/// Every labeled graph on at most six vertices with at least one edge.
fn small_corpus() -> &'static Vec<Graph> {
    static CORPUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (1..=6)
            .flat_map(|n| all_graphs(n).unwrap())
            .filter(Graph::has_edges)
            .collect()
    })
}

fn without_isolated() -> impl Iterator<Item = &'static Graph> {
    small_corpus()
        .iter()
        .filter(|g| g.non_isolated() == g.all_vertices())
}

/// 500 seeded random graphs on 2 to 12 vertices with at least one edge.
fn random_corpus() -> &'static Vec<Graph> {
    static CORPUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut out = Vec::new();
        let mut seed = 0u64;
        while out.len() < 500 {
            let n = 2 + (seed % 11) as usize;
            let p = [0.2, 0.35, 0.5, 0.7][(seed / 11 % 4) as usize];
            let g = random_graph(n, p, seed);
            seed += 1;
            if g.has_edges() {
                out.push(g);
            }
        }
        out
    })
}

fn small_reports() -> &'static Vec<(Graph, ClassificationReport)> {
    static REPORTS: OnceLock<Vec<(Graph, ClassificationReport)>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        without_isolated()
            .map(|g| (g.clone(), classify_full(g, &Settings::default()).unwrap()))
            .collect()
    })
}

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

#[test]
fn criterion_01_worked_example() {
    let g = example();
    let mut failures = Vec::new();
    let covers = enumerate_basic_covers(&g, 1, budget()).unwrap();
    if covers.len() != 3 {
        failures.push(format!("{} basic 1-covers", covers.len()));
    }
    for strategy in [G01Strategy::ByCovers, G01Strategy::ByLocal] {
        let d = g01(&g, strategy, budget()).unwrap();
        let comps = d.components();
        let overlay = d.on_original(6);
        let shape: Vec<_> = comps
            .iter()
            .map(|&c| is_complete_bipartite(&overlay, c))
            .collect();
        if comps != vec![set(&[1, 2, 3, 4]), set(&[5, 6])]
            || shape != vec![Some((2, 2)), Some((1, 1))]
        {
            failures.push(format!(
                "{strategy:?}: components {comps:?}, shapes {shape:?}"
            ));
        }
    }
    let r = classify_full(&g, &Settings::default()).unwrap();
    if !(r.unmixed && r.domain && r.msc && r.consistent) {
        failures.push(format!("report {r:?}"));
    }
    report(
        1,
        "worked example: 3 basic 1-covers, derived K22+K11, unmixed domain with MSC",
        &failures,
    );
}

#[test]
fn criterion_02_calibration_trio() {
    let mut failures = Vec::new();
    for (n, unmixed, domain) in [(4, true, true), (5, true, false), (6, false, false)] {
        let g = cycle(n);
        let got_u = is_unmixed(&g, budget()).unwrap().holds();
        let got_d = is_domain(&g, DomainStrategy::CrossCheck, budget()).unwrap();
        if (got_u, got_d) != (unmixed, domain) {
            failures.push(format!("C{n}: unmixed {got_u}, domain {got_d}"));
        }
    }
    report(
        2,
        "C4 unmixed domain, C5 unmixed non-domain, C6 mixed non-domain",
        &failures,
    );
}

#[test]
fn criterion_03_k4() {
    let g = complete(4);
    let mut failures = Vec::new();
    if !is_unmixed(&g, budget()).unwrap().holds() {
        failures.push("K4 not unmixed".into());
    }
    if perfect_matching(&g).unwrap().is_none() {
        failures.push("K4 has no perfect matching".into());
    }
    if check_msc(&g).unwrap().is_some() {
        failures.push("K4 satisfies MSC".into());
    }
    if is_domain(&g, DomainStrategy::CrossCheck, budget()).unwrap() {
        failures.push("K4 is a domain".into());
    }
    let norms = enumerate_basic_covers(&g, 1, budget()).unwrap().norms();
    if norms != vec![3; 4] {
        failures.push(format!("norms {norms:?}"));
    }
    report(
        3,
        "K4 unmixed with a perfect matching, not MSC, not a domain, norms 3",
        &failures,
    );
}

#[test]
fn criterion_04_pendants_on_square() {
    let base = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 1), (2, 5)]).unwrap();
    let extended = Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 1), (2, 5), (3, 6)]).unwrap();
    let mut failures = Vec::new();
    if !is_domain(&base, DomainStrategy::CrossCheck, budget()).unwrap() {
        failures.push("square with pendant at 2 is not a domain".into());
    }
    if is_domain(&extended, DomainStrategy::CrossCheck, budget()).unwrap() {
        failures.push("adding a pendant at vertex 3 still gives a domain".into());
    }
    report(
        4,
        "square+pendant at 2 is a domain; adding a pendant at 3 is not",
        &failures,
    );
}

#[test]
fn criterion_05_msc_equivalence() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (g, r) in small_reports() {
        checked += 1;
        let values: Vec<bool> = [1u8, 2, 3, 4, 6, 7, 8]
            .iter()
            .map(|&id| r.condition(id).holds)
            .collect();
        if values.iter().any(|&v| v != values[0]) {
            failures.push(format!("{g:?}: {values:?}"));
        }
    }
    assert!(checked > 20_000, "corpus too small: {checked}");
    report(
        5,
        &format!("conditions (1),(2),(3),(4),(6),(7),(8) agree on {checked} graphs"),
        &failures,
    );
}

#[test]
fn criterion_06_wsc_theorem() {
    let mut failures = Vec::new();
    let corpus = small_corpus().iter().chain(random_corpus());
    let mut checked = 0;
    for g in corpus {
        checked += 1;
        let wsc = check_wsc(g);
        let domain = is_domain(g, DomainStrategy::ByCovers, budget()).unwrap();
        let isolated = g01(g, G01Strategy::ByCovers, budget()).unwrap().isolated();
        if wsc != domain || domain != isolated.is_empty() {
            failures.push(format!(
                "{g:?}: wsc {wsc}, domain {domain}, isolated {isolated:?}"
            ));
        }
    }
    report(
        6,
        &format!("WSC <=> domain <=> no isolated derived vertex on {checked} graphs"),
        &failures,
    );
}

#[test]
fn criterion_07_derived_graph_routes() {
    let mut failures = Vec::new();
    for g in small_corpus().iter().chain(random_corpus()) {
        let by_covers = g01(g, G01Strategy::ByCovers, budget()).unwrap();
        let by_local = g01(g, G01Strategy::ByLocal, budget()).unwrap();
        if by_covers != by_local {
            failures.push(format!("{g:?}: routes disagree"));
        }
        if !check_sc(&by_local.graph) {
            failures.push(format!("{g:?}: derived graph fails SC"));
        }
    }
    report(
        7,
        "derived graph by covers equals by local test; it always satisfies SC",
        &failures,
    );
}

#[test]
fn criterion_08_sc_structure() {
    let mut failures = Vec::new();
    let points_and_corpus = std::iter::once(Graph::empty(1).unwrap())
        .chain(small_corpus().iter().cloned())
        .chain(random_corpus().iter().cloned());
    for g in points_and_corpus {
        let comps = connected_components(&g);
        if comps.len() != 1 || !check_sc(&g) {
            continue;
        }
        if g.n() != 1 && is_complete_bipartite(&g, comps[0]).is_none() {
            failures.push(format!("{g:?}"));
        }
    }
    report(
        8,
        "connected SC graphs are a point or complete bipartite",
        &failures,
    );
}

#[test]
fn criterion_09_villarreal() {
    let mut failures = Vec::new();
    let mut accepted = 0;
    let mut seed = 0u64;
    while accepted < 500 {
        let a = 1 + (seed % 6) as usize;
        let b = 1 + (seed / 6 % 6) as usize;
        let p = [0.4, 0.6, 0.8][(seed / 36 % 3) as usize];
        let g = random_bipartite(a, b, p, seed);
        seed += 1;
        if g.non_isolated() != g.all_vertices() {
            continue;
        }
        accepted += 1;
        let unmixed = is_unmixed(&g, budget()).unwrap().holds();
        let msc = check_msc(&g).unwrap().is_some();
        if unmixed != msc {
            failures.push(format!("{g:?}: unmixed {unmixed}, msc {msc}"));
        }
    }
    report(
        9,
        "bipartite without isolated vertices: unmixed <=> MSC (500 graphs)",
        &failures,
    );
}

#[test]
fn criterion_10_pendant_constructions() {
    let mut failures = Vec::new();
    for seed in 0..200u64 {
        let n = 1 + (seed % 10) as usize;
        let g = random_graph(n, 0.4, 1000 + seed);
        let (plus, _) = pendant_all(&g).unwrap();
        if check_msc(&plus).unwrap().is_none() {
            failures.push(format!("{g:?}: G+ fails MSC"));
        }
        if bipartition(&plus).is_some() != bipartition(&g).is_some() {
            failures.push(format!("{g:?}: bipartiteness not preserved"));
        }
        if g.has_edges() && !check_wsc(&pendant_g01_isolated(&g).unwrap()) {
            failures.push(format!("{g:?}: G' fails WSC"));
        }
    }
    report(
        10,
        "G+ satisfies MSC and keeps bipartiteness; G' satisfies WSC (200 graphs)",
        &failures,
    );
}

fn pentagon_with_tail() -> Graph {
    Graph::new(7, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 6), (6, 7)]).unwrap()
}

#[test]
fn criterion_11_indecomposables() {
    let mut failures = Vec::new();
    for g in small_corpus().iter().filter(|g| bipartition(g).is_some()) {
        if !indecomposable_2covers(g, budget()).unwrap().is_empty() {
            failures.push(format!("bipartite {g:?} has an indecomposable 2-cover"));
        }
    }
    let tail = pentagon_with_tail();
    if indecomposable_2covers(&tail, budget()).unwrap().is_empty() {
        failures.push("C5 with a 2-path has no indecomposable 2-cover".into());
    }
    let (plus, _) = pendant_all(&tail).unwrap();
    if indecomposable_2covers(&plus, budget()).unwrap().is_empty() {
        failures.push("G+ of C5 with a 2-path has no indecomposable 2-cover".into());
    }
    let unmixed_domain = is_unmixed(&plus, budget()).unwrap().holds() && check_wsc(&plus);
    if !unmixed_domain || bipartition(&plus).is_some() {
        failures.push("G+ of C5 with a 2-path is not a non-bipartite unmixed domain".into());
    }
    report(
        11,
        "bipartite graphs have no indecomposable 2-covers; odd cycle with a distant vertex does",
        &failures,
    );
}

#[test]
fn criterion_12_norm_law() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (g, _) in small_reports()
        .iter()
        .filter(|(_, r)| r.unmixed && r.domain)
    {
        checked += 1;
        let n = g.n() as u32;
        for k in 1..=3 {
            for c in &enumerate_basic_covers(g, k, budget()).unwrap() {
                if 2 * norm(c) != k * n {
                    failures.push(format!("{g:?}: basic {k}-cover {:?}", c.prices));
                }
            }
        }
    }
    assert!(checked > 0);
    report(
        12,
        &format!("unmixed domains: basic k-covers have norm kn/2, k<=3 ({checked} graphs)"),
        &failures,
    );
}

#[test]
fn criterion_13_witness_soundness() {
    let mut failures = Vec::new();
    for (g, r) in small_reports() {
        if let Some(w) = &r.witnesses.domain_counterexample {
            if !w.verify(g) {
                failures.push(format!("{g:?}: counterexample does not verify"));
            }
        }
        if let Some(m) = &r.witnesses.matching {
            if !verify_msc_witness(g, m) {
                failures.push(format!("{g:?}: matching does not verify"));
            }
        }
    }
    for g in small_corpus().iter().filter(|g| check_wsc(g)) {
        let violations = structural_domain_audit(g).unwrap();
        if !violations.is_empty() {
            failures.push(format!("{g:?}: audit {violations:?}"));
        }
        let derived = g01(g, G01Strategy::ByLocal, budget()).unwrap();
        let overlay = derived.on_original(g.n());
        let halves = bipartition(&overlay).unwrap();
        for h in derived.components() {
            let (side_a, side_b) = (halves.side_a.intersection(h), halves.side_b.intersection(h));
            let (a, b) = component_flip_covers(g, h).unwrap();
            for (c, ones, zeros) in [(&a, side_a, side_b), (&b, side_b, side_a)] {
                let pattern =
                    ones.iter().all(|v| c.price(v) == 1) && zeros.iter().all(|v| c.price(v) == 0);
                if !is_cover(g, &c.prices, 1) || !is_basic(g, c) || !pattern {
                    failures.push(format!("{g:?}: flip cover {:?} on {h:?}", c.prices));
                }
            }
        }
    }
    report(
        13,
        "counterexamples, MSC matchings, domain audits and flip covers all verify",
        &failures,
    );
}
