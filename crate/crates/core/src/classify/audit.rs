//! Structure forced on a domain by its derived 0-1 graph, and the pair of
//! basic 1-covers obtained by flipping one derived component.

use std::fmt;

use serde::Serialize;

use crate::cover::{is_basic, is_cover, reduce_to_basic_keeping, Budget, Cover};
use crate::error::{Error, Result};
use crate::graph::{bipartition, Graph, VertexSet};

use super::derived::{g01, DerivedGraph, G01Strategy};
use super::square::check_wsc;

/// One failed structural assertion. `item` numbers the assertions 1 to 5 in
/// the order documented on [`structural_domain_audit`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub item: u8,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "item {}: {}", self.item, self.detail)
    }
}

struct Sides {
    derived: DerivedGraph,
    // per derived component: [side containing the smallest label, other side]
    parts: Vec<[VertexSet; 2]>,
}

fn derived_sides(g: &Graph) -> Result<Sides> {
    let derived = g01(g, G01Strategy::ByLocal, Budget::default())?;
    let overlay = derived.on_original(g.n());
    let halves = bipartition(&overlay)
        .ok_or_else(|| Error::Consistency(format!("derived graph of {g:?} has an odd cycle")))?;
    let parts = derived
        .components()
        .into_iter()
        .map(|h| [halves.side_a.intersection(h), halves.side_b.intersection(h)])
        .collect();
    Ok(Sides { derived, parts })
}

fn joined(g: &Graph, s: VertexSet, t: VertexSet) -> bool {
    s.iter().any(|u| !g.neighbors(u).is_disjoint(t))
}

fn complete_between(g: &Graph, s: VertexSet, t: VertexSet) -> bool {
    s.iter().all(|u| t.difference(g.neighbors(u)).is_empty())
}

/// Checks, for a domain `g` whose derived components are `H_i = A_i ∪ B_i`:
///
/// 1. no triangle of `g` has an edge in the derived graph, and no two
///    vertices on the same side of one component are adjacent;
/// 2. an edge between `A_i` and `A_j` makes every `A_i`-`A_j` pair an edge;
/// 3. an edge between `A_i` and `A_j` rules out edges between `B_i` and `B_j`;
/// 4. edges `A_i`-`A_j` and `B_i`-`B_k` force an edge `A_j`-`B_k`;
/// 5. edges `A_h`-`A_i` and `A_h`-`A_j` rule out edges `B_i`-`B_j`.
///
/// The naming of sides within a component is arbitrary, so every statement
/// is checked under every choice of which side is called `A`.
pub fn structural_domain_audit(g: &Graph) -> Result<Vec<Violation>> {
    if !check_wsc(g) {
        return Err(Error::Argument(format!("{g:?} is not a domain")));
    }
    let Sides { derived, parts } = derived_sides(g)?;
    let overlay = derived.on_original(g.n());
    let mut out = Vec::new();
    let mut flag = |item: u8, detail: String| out.push(Violation { item, detail });

    for (u, v) in g.edges() {
        for w in g
            .neighbors(u)
            .intersection(g.neighbors(v))
            .iter()
            .filter(|&w| w > v)
        {
            for (x, y) in [(u, v), (u, w), (v, w)] {
                if overlay.has_edge(x, y) {
                    flag(
                        1,
                        format!("triangle {{{u},{v},{w}}} has derived edge {{{x},{y}}}"),
                    );
                }
            }
        }
    }
    for side in parts.iter().flatten() {
        if joined(g, *side, *side) {
            flag(1, format!("side {side:?} contains an edge"));
        }
    }

    let count = parts.len();
    for i in 0..count {
        for j in (0..count).filter(|&j| j != i) {
            for si in 0..2 {
                for sj in 0..2 {
                    let (ai, bi) = (parts[i][si], parts[i][1 - si]);
                    let (aj, bj) = (parts[j][sj], parts[j][1 - sj]);
                    if !joined(g, ai, aj) {
                        continue;
                    }
                    if !complete_between(g, ai, aj) {
                        flag(2, format!("{ai:?} and {aj:?} joined but not completely"));
                    }
                    if joined(g, bi, bj) {
                        flag(
                            3,
                            format!("{ai:?}-{aj:?} edge alongside {bi:?}-{bj:?} edge"),
                        );
                    }
                    for k in (0..count).filter(|&k| k != i) {
                        for bk in parts[k] {
                            if joined(g, bi, bk) && !joined(g, aj, bk) {
                                flag(4, format!("{ai:?}-{aj:?} and {bi:?}-{bk:?} edges without {aj:?}-{bk:?}"));
                            }
                        }
                    }
                }
            }
        }
    }
    for h in 0..count {
        for i in (0..count).filter(|&i| i != h) {
            for j in (i + 1..count).filter(|&j| j != h) {
                for ah in parts[h] {
                    for si in 0..2 {
                        for sj in 0..2 {
                            let (ai, bi) = (parts[i][si], parts[i][1 - si]);
                            let (aj, bj) = (parts[j][sj], parts[j][1 - sj]);
                            if joined(g, ah, ai) && joined(g, ah, aj) && joined(g, bi, bj) {
                                flag(5, format!("{ah:?} joins {ai:?} and {aj:?} but {bi:?}-{bj:?} edge exists"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// For a domain `g` and a component `H = A ∪ B` of its derived graph
/// (`A` holding the smallest label), returns a basic 1-cover that is 1 on
/// `A` and 0 on `B`, and the basic 1-cover obtained from it by swapping the
/// prices inside `H`.
pub fn component_flip_covers(g: &Graph, component: VertexSet) -> Result<(Cover, Cover)> {
    if !check_wsc(g) {
        return Err(Error::Argument(format!("{g:?} is not a domain")));
    }
    let Sides { parts, .. } = derived_sides(g)?;
    let here = parts
        .iter()
        .position(|[x, y]| x.union(*y) == component)
        .ok_or_else(|| {
            Error::Argument(format!(
                "{component:?} is not a component of the derived graph"
            ))
        })?;
    let [side_a, side_b] = parts[here];

    // 0 on B, 0 on the far side of every component whose near side touches A
    let mut zero = side_b;
    for (idx, &[x, y]) in parts.iter().enumerate().filter(|&(idx, _)| idx != here) {
        match (joined(g, side_a, x), joined(g, side_a, y)) {
            (true, true) => {
                return Err(Error::Consistency(format!(
                    "{side_a:?} touches both sides of derived component {idx}"
                )))
            }
            (true, false) => zero = zero.union(y),
            (false, true) => zero = zero.union(x),
            (false, false) => {}
        }
    }
    let start = Cover {
        level: 1,
        prices: g.vertices().map(|v| u32::from(!zero.contains(v))).collect(),
    };
    if !is_cover(g, &start.prices, 1) {
        return Err(Error::Consistency(format!(
            "starting assignment {:?} is not a 1-cover",
            start.prices
        )));
    }
    let (a, _) = reduce_to_basic_keeping(g, &start, side_a);
    let mut b = a.clone();
    for v in component.iter() {
        b.prices[v - 1] = 1 - a.prices[v - 1];
    }
    let pattern = |c: &Cover, ones: VertexSet, zeros: VertexSet| {
        ones.iter().all(|v| c.price(v) == 1) && zeros.iter().all(|v| c.price(v) == 0)
    };
    for (name, c, ones, zeros) in [("a", &a, side_a, side_b), ("b", &b, side_b, side_a)] {
        if !is_cover(g, &c.prices, 1) || !is_basic(g, c) || !pattern(c, ones, zeros) {
            return Err(Error::Consistency(format!(
                "flip cover {name} = {:?} is not a basic 1-cover with the required pattern",
                c.prices
            )));
        }
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, path};

    fn example() -> Graph {
        Graph::new(6, [(1, 2), (2, 3), (3, 4), (1, 4), (2, 5), (4, 5), (5, 6)]).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn audits_pass_on_domains() {
        assert!(structural_domain_audit(&example()).unwrap().is_empty());
        assert!(structural_domain_audit(&cycle(4)).unwrap().is_empty());
        assert!(matches!(
            structural_domain_audit(&cycle(5)),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn flips_on_square() {
        let (a, b) = component_flip_covers(&cycle(4), set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(a.prices, vec![1, 0, 1, 0]);
        assert_eq!(b.prices, vec![0, 1, 0, 1]);
    }

    #[test]
    fn flips_on_worked_example() {
        let (a, b) = component_flip_covers(&example(), set(&[5, 6])).unwrap();
        assert_eq!(a.support().to_vec(), vec![2, 4, 5]);
        assert_eq!(b.support().to_vec(), vec![2, 4, 6]);
    }

    #[test]
    fn flips_on_path() {
        let (a, b) = component_flip_covers(&path(3), set(&[1, 2, 3])).unwrap();
        assert_eq!(a.prices, vec![1, 0, 1]);
        assert_eq!(b.prices, vec![0, 1, 0]);
    }

    #[test]
    fn flip_rejects_bad_input() {
        assert!(matches!(
            component_flip_covers(&cycle(5), set(&[1, 2])),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            component_flip_covers(&example(), set(&[1, 2])),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn flip_with_isolated_vertex() {
        let g = Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let (a, b) = component_flip_covers(&g, set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(a.prices, vec![1, 0, 1, 0, 0]);
        assert_eq!(b.prices, vec![0, 1, 0, 1, 0]);
    }
}
