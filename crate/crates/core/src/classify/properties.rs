//! Unmixedness, the domain property and norm spectra.

use serde::Serialize;

use crate::cover::{
    cover_sum, enumerate_basic_covers, loppable_vertices, norm, Budget, Cover, CoverSet,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::square::check_wsc;

/// Outcome of [`is_unmixed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unmixedness {
    /// Every basic 1-cover has this norm.
    Unmixed { norm: u32 },
    /// Basic 1-covers of smallest and largest norm.
    Mixed { smaller: Cover, larger: Cover },
}

impl Unmixedness {
    pub fn holds(&self) -> bool {
        matches!(self, Unmixedness::Unmixed { .. })
    }
}

pub fn is_unmixed(g: &Graph, budget: Budget) -> Result<Unmixedness> {
    if !g.has_edges() {
        return Err(Error::Argument(
            "unmixedness is defined for graphs with an edge".into(),
        ));
    }
    Ok(unmixedness_of(&enumerate_basic_covers(g, 1, budget)?))
}

pub(crate) fn unmixedness_of(basic_1covers: &CoverSet) -> Unmixedness {
    let smaller = basic_1covers
        .iter()
        .min_by_key(|c| norm(c))
        .expect("a graph with an edge has a basic 1-cover");
    let larger = basic_1covers
        .iter()
        .max_by_key(|c| norm(c))
        .expect("nonempty");
    if norm(smaller) == norm(larger) {
        Unmixedness::Unmixed {
            norm: norm(smaller),
        }
    } else {
        Unmixedness::Mixed {
            smaller: smaller.clone(),
            larger: larger.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DomainStrategy {
    #[default]
    ByWsc,
    ByCovers,
    CrossCheck,
}

pub fn is_domain(g: &Graph, strategy: DomainStrategy, budget: Budget) -> Result<bool> {
    match strategy {
        DomainStrategy::ByWsc => Ok(check_wsc(g)),
        DomainStrategy::ByCovers => domain_by_covers(g, budget),
        DomainStrategy::CrossCheck => {
            let wsc = check_wsc(g);
            let covers = domain_by_covers(g, budget)?;
            if wsc != covers {
                return Err(Error::Consistency(format!(
                    "domain test on {g:?}: WSC says {wsc}, cover sums say {covers}"
                )));
            }
            Ok(wsc)
        }
    }
}

fn domain_by_covers(g: &Graph, budget: Budget) -> Result<bool> {
    if !g.has_edges() {
        return Ok(false);
    }
    let ones = enumerate_basic_covers(g, 1, budget)?;
    let twos = enumerate_basic_covers(g, 2, budget)?;
    Ok(domain_from_covers(g, &ones, &twos))
}

/// Every non-isolated vertex has a neighbour on whose edge all basic
/// 1-covers cost 1 and all basic 2-covers cost 2.
pub(crate) fn domain_from_covers(g: &Graph, ones: &CoverSet, twos: &CoverSet) -> bool {
    g.has_edges()
        && g.non_isolated().iter().all(|i| {
            g.neighbors(i).iter().any(|j| {
                ones.iter().all(|a| a.edge_price(i, j) == 1)
                    && twos.iter().all(|b| b.edge_price(i, j) == 2)
            })
        })
}

/// A sum of basic 1- and 2-covers that fails to be basic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DomainCounterexample {
    pub summands: Vec<Cover>,
    pub total: Cover,
    pub lop_vertex: usize,
}

impl DomainCounterexample {
    /// Recomputes the sum and re-checks the lop.
    pub fn verify(&self, g: &Graph) -> bool {
        let levels_ok = self.summands.iter().all(|c| c.level == 1 || c.level == 2);
        let sum_ok = cover_sum(&self.summands).is_ok_and(|s| s == self.total);
        levels_ok && sum_ok && loppable_vertices(g, &self.total).contains(self.lop_vertex)
    }
}

/// Searches multisets of `s` basic 1-covers and `t` basic 2-covers with
/// `s + t >= 1` and `s + 2t <= max_level` for a sum that can be lopped.
///
/// Candidates are visited by `(s, t)` in lexicographic order, then by the
/// lexicographic order of the summand indices into the canonical cover sets.
/// The smallest loppable vertex of the first failing sum is reported.
pub fn domain_counterexample_search(
    g: &Graph,
    max_level: u32,
    budget: Budget,
) -> Result<Option<DomainCounterexample>> {
    if !g.has_edges() || max_level == 0 {
        return Ok(None);
    }
    let ones = enumerate_basic_covers(g, 1, budget)?;
    let twos = enumerate_basic_covers(g, 2, budget)?;
    let mut visited = 0u64;
    for s in 0..=max_level {
        for t in 0..=(max_level - s) / 2 {
            if s + t == 0 {
                continue;
            }
            let mut pick_one = vec![0; s as usize];
            loop {
                let mut pick_two = vec![0; t as usize];
                loop {
                    visited += 1;
                    if visited > budget.0 {
                        return Err(Error::BudgetExceeded {
                            operation: "domain counterexample search",
                            budget: budget.0,
                        });
                    }
                    let summands: Vec<Cover> = pick_one
                        .iter()
                        .map(|&i| ones.covers[i].clone())
                        .chain(pick_two.iter().map(|&i| twos.covers[i].clone()))
                        .collect();
                    let total = cover_sum(&summands)?;
                    if let Some(lop_vertex) = loppable_vertices(g, &total).min() {
                        return Ok(Some(DomainCounterexample {
                            summands,
                            total,
                            lop_vertex,
                        }));
                    }
                    if !next_multiset(&mut pick_two, twos.len()) {
                        break;
                    }
                }
                if !next_multiset(&mut pick_one, ones.len()) {
                    break;
                }
            }
        }
    }
    Ok(None)
}

/// Advances a nondecreasing index sequence over `0..m` to its lexicographic
/// successor. Returns false once exhausted.
fn next_multiset(idx: &mut [usize], m: usize) -> bool {
    let Some(pos) = idx.iter().rposition(|&i| i + 1 < m) else {
        return false;
    };
    let value = idx[pos] + 1;
    for slot in &mut idx[pos..] {
        *slot = value;
    }
    true
}

/// Sorted norms of all basic k-covers.
pub fn norm_spectrum(g: &Graph, k: u32, budget: Budget) -> Result<Vec<u32>> {
    Ok(enumerate_basic_covers(g, k, budget)?.norms())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, path};

    #[test]
    fn unmixed_examples() {
        let b = Budget::default();
        assert_eq!(
            is_unmixed(&cycle(5), b).unwrap(),
            Unmixedness::Unmixed { norm: 3 }
        );
        match is_unmixed(&cycle(6), b).unwrap() {
            Unmixedness::Mixed { smaller, larger } => {
                assert_eq!((norm(&smaller), norm(&larger)), (3, 4));
            }
            other => panic!("hexagon reported {other:?}"),
        }
        assert!(is_unmixed(&complete(4), b).unwrap().holds());
        assert!(is_unmixed(&Graph::empty(2).unwrap(), b).is_err());
    }

    #[test]
    fn domain_examples() {
        let b = Budget::default();
        for strategy in [
            DomainStrategy::ByWsc,
            DomainStrategy::ByCovers,
            DomainStrategy::CrossCheck,
        ] {
            assert!(is_domain(&cycle(4), strategy, b).unwrap());
            assert!(!is_domain(&cycle(5), strategy, b).unwrap());
            assert!(is_domain(&path(3), strategy, b).unwrap());
            assert!(!is_domain(&Graph::empty(3).unwrap(), strategy, b).unwrap());
        }
    }

    #[test]
    fn multiset_order() {
        let mut idx = vec![0, 0];
        let mut seen = vec![idx.clone()];
        while next_multiset(&mut idx, 3) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
        assert!(!next_multiset(&mut [], 3));
    }

    #[test]
    fn pentagon_counterexample() {
        let c5 = cycle(5);
        let found = domain_counterexample_search(&c5, 2, Budget::default())
            .unwrap()
            .unwrap();
        assert!(found.verify(&c5));
        // first pair in canonical order: {2,4,5} + {1,3,5}
        assert_eq!(found.total.prices, vec![1, 1, 1, 1, 2]);
        assert_eq!(found.lop_vertex, 5);

        // {1,2,4} + {2,3,5} lops at vertex 2 as well
        let other = DomainCounterexample {
            summands: vec![
                Cover {
                    level: 1,
                    prices: vec![1, 1, 0, 1, 0],
                },
                Cover {
                    level: 1,
                    prices: vec![0, 1, 1, 0, 1],
                },
            ],
            total: Cover {
                level: 2,
                prices: vec![1, 2, 1, 1, 1],
            },
            lop_vertex: 2,
        };
        assert!(other.verify(&c5));
    }

    #[test]
    fn counterexamples_only_for_non_domains() {
        assert_eq!(
            domain_counterexample_search(&cycle(4), 4, Budget::default()).unwrap(),
            None
        );
        let k4 = complete(4);
        let found = domain_counterexample_search(&k4, 2, Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(found.summands.len(), 2);
        assert!(found.summands.iter().all(|c| c.level == 1));
        assert!(found.verify(&k4));
    }

    #[test]
    fn spectra() {
        let b = Budget::default();
        assert_eq!(norm_spectrum(&cycle(6), 1, b).unwrap(), vec![3, 3, 4, 4, 4]);
        let c4_two = norm_spectrum(&cycle(4), 2, b).unwrap();
        assert!(!c4_two.is_empty() && c4_two.iter().all(|&x| x == 4));
        assert_eq!(norm_spectrum(&cycle(5), 1, b).unwrap(), vec![3; 5]);
    }
}
