//! k-cover arithmetic.
//!
//! A k-cover prices every vertex with a nonnegative integer so that each edge
//! costs at least `k`; the zero assignment is never a cover. A cover is
//! *basic* when no vertex can be lopped, i.e. have its price decreased by one
//! while staying a k-cover at the same level.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Node limit for the exhaustive searches in this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(50_000_000)
    }
}

struct Meter {
    used: u64,
    limit: u64,
    operation: &'static str,
}

impl Meter {
    fn new(budget: Budget, operation: &'static str) -> Self {
        Meter {
            used: 0,
            limit: budget.0,
            operation,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded {
                operation: self.operation,
                budget: self.limit,
            });
        }
        Ok(())
    }
}

/// A price assignment at a given level. `prices[i]` is the price of vertex
/// `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cover {
    #[serde(rename = "k")]
    pub level: u32,
    pub prices: Vec<u32>,
}

impl Cover {
    /// Validated constructor.
    pub fn new(g: &Graph, level: u32, prices: Vec<u32>) -> Result<Self> {
        if prices.len() != g.n() {
            return Err(Error::Shape(format!(
                "{} prices for a graph on {} vertices",
                prices.len(),
                g.n()
            )));
        }
        if !is_cover(g, &prices, level) {
            return Err(Error::Argument(format!(
                "{prices:?} is not a {level}-cover"
            )));
        }
        Ok(Cover { level, prices })
    }

    /// Indicator of `set` on `n` vertices, as a 1-cover candidate.
    pub fn indicator(n: usize, set: VertexSet) -> Self {
        Cover {
            level: 1,
            prices: (1..=n).map(|v| u32::from(set.contains(v))).collect(),
        }
    }

    pub fn price(&self, v: usize) -> u32 {
        self.prices[v - 1]
    }

    /// Vertices with positive price.
    pub fn support(&self) -> VertexSet {
        self.prices
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn scaled(&self, factor: u32) -> Cover {
        Cover {
            level: self.level * factor,
            prices: self.prices.iter().map(|p| p * factor).collect(),
        }
    }

    pub fn edge_price(&self, u: usize, v: usize) -> u32 {
        self.price(u) + self.price(v)
    }
}

/// Sum of all prices.
pub fn norm(c: &Cover) -> u32 {
    c.prices.iter().sum()
}

/// Canonically ordered, duplicate-free covers of one level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CoverSet {
    #[serde(skip)]
    pub level: u32,
    pub covers: Vec<Cover>,
}

impl CoverSet {
    pub fn new(level: u32, mut covers: Vec<Cover>) -> Self {
        debug_assert!(covers.iter().all(|c| c.level == level));
        covers.sort_unstable_by(|a, b| a.prices.cmp(&b.prices));
        covers.dedup();
        CoverSet { level, covers }
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cover> {
        self.covers.iter()
    }

    /// Sorted multiset of norms.
    pub fn norms(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.covers.iter().map(norm).collect();
        out.sort_unstable();
        out
    }
}

impl<'a> IntoIterator for &'a CoverSet {
    type Item = &'a Cover;
    type IntoIter = std::slice::Iter<'a, Cover>;

    fn into_iter(self) -> Self::IntoIter {
        self.covers.iter()
    }
}

/// Nonzero, and every edge costs at least `k`.
pub fn is_cover(g: &Graph, prices: &[u32], k: u32) -> bool {
    prices.len() == g.n()
        && prices.iter().any(|&p| p > 0)
        && g.edges()
            .into_iter()
            .all(|(u, v)| prices[u - 1] + prices[v - 1] >= k)
}

fn can_lop(g: &Graph, prices: &[u32], level: u32, v: usize, total: u32) -> bool {
    let p = prices[v - 1];
    p >= 1
        && total >= 2
        && g.neighbors(v)
            .iter()
            .all(|w| p - 1 + prices[w - 1] >= level)
}

/// Vertices whose price can drop by one while leaving a cover at the same
/// level.
pub fn loppable_vertices(g: &Graph, c: &Cover) -> VertexSet {
    let total = norm(c);
    g.vertices()
        .filter(|&v| can_lop(g, &c.prices, c.level, v, total))
        .collect()
}

pub fn is_basic(g: &Graph, c: &Cover) -> bool {
    loppable_vertices(g, c).is_empty()
}

/// Splits `c` into a basic cover at the same level plus a nonnegative
/// residue, lopping the smallest loppable vertex first.
pub fn reduce_to_basic(g: &Graph, c: &Cover) -> (Cover, Vec<u32>) {
    reduce_to_basic_keeping(g, c, VertexSet::empty())
}

/// Like [`reduce_to_basic`] but never lops a vertex in `frozen`. The result
/// is basic only if no frozen vertex is loppable at the end; callers check.
pub(crate) fn reduce_to_basic_keeping(
    g: &Graph,
    c: &Cover,
    frozen: VertexSet,
) -> (Cover, Vec<u32>) {
    let mut prices = c.prices.clone();
    let mut residue = vec![0; prices.len()];
    let mut total = norm(c);
    // lopping never makes another vertex loppable, so one pass in label
    // order reaches the smallest-label-first fixpoint
    for v in g.vertices().filter(|&v| !frozen.contains(v)) {
        while can_lop(g, &prices, c.level, v, total) {
            prices[v - 1] -= 1;
            residue[v - 1] += 1;
            total -= 1;
        }
    }
    (
        Cover {
            level: c.level,
            prices,
        },
        residue,
    )
}

/// Pointwise sum; the level is the sum of levels.
pub fn cover_sum(covers: &[Cover]) -> Result<Cover> {
    let (first, rest) = covers
        .split_first()
        .ok_or_else(|| Error::Shape("cannot sum an empty list of covers".into()))?;
    let mut total = first.clone();
    for c in rest {
        if c.prices.len() != total.prices.len() {
            return Err(Error::Shape(format!(
                "cover of length {} added to cover of length {}",
                c.prices.len(),
                total.prices.len()
            )));
        }
        total.level += c.level;
        for (t, p) in total.prices.iter_mut().zip(&c.prices) {
            *t += p;
        }
    }
    Ok(total)
}

/// All basic k-covers of `g`, in canonical order.
///
/// Depth-first over vertices in label order, each price in `[0, k]`
/// ascending (a price above `k` is always loppable, as is any positive price
/// on an isolated vertex of a graph with edges). A branch dies as soon as a
/// decided edge costs less than `k`, or a vertex whose whole neighbourhood is
/// decided turns out loppable. Leaves come out in lexicographic order.
pub fn enumerate_basic_covers(g: &Graph, k: u32, budget: Budget) -> Result<CoverSet> {
    if k == 0 {
        return Err(Error::Argument(
            "basic covers are enumerated for levels k >= 1".into(),
        ));
    }
    if !g.has_edges() {
        // only the unit vectors survive lopping
        let covers = g
            .vertices()
            .map(|v| {
                let mut prices = vec![0; g.n()];
                prices[v - 1] = 1;
                Cover { level: k, prices }
            })
            .collect();
        return Ok(CoverSet::new(k, covers));
    }
    let mut search = BoxSearch::new(g, k, true, Meter::new(budget, "basic cover enumeration"));
    search.run(1)?;
    Ok(CoverSet::new(k, search.found))
}

/// Every k-cover with all prices in `[0, k]`, basic or not, in canonical
/// order.
pub fn enumerate_bounded_covers(g: &Graph, k: u32, budget: Budget) -> Result<CoverSet> {
    let mut search = BoxSearch::new(g, k, false, Meter::new(budget, "bounded cover enumeration"));
    search.run(1)?;
    // the all-zero assignment passes the edge checks only on edgeless graphs
    // or at level 0
    search.found.retain(|c| c.prices.iter().any(|&p| p > 0));
    Ok(CoverSet::new(k, search.found))
}

struct BoxSearch<'g> {
    g: &'g Graph,
    k: u32,
    basic_only: bool,
    prices: Vec<u32>,
    // closes_at[v] lists vertices whose neighbourhood is fully decided once
    // v has been priced
    closes_at: Vec<Vec<usize>>,
    meter: Meter,
    found: Vec<Cover>,
}

impl<'g> BoxSearch<'g> {
    fn new(g: &'g Graph, k: u32, basic_only: bool, meter: Meter) -> Self {
        let mut closes_at = vec![Vec::new(); g.n() + 1];
        for u in g.vertices() {
            let last = g.neighbors(u).iter().last().unwrap_or(u).max(u);
            closes_at[last].push(u);
        }
        BoxSearch {
            g,
            k,
            basic_only,
            prices: vec![0; g.n()],
            closes_at,
            meter,
            found: Vec::new(),
        }
    }

    fn run(&mut self, v: usize) -> Result<()> {
        let g = self.g;
        if v > g.n() {
            self.found.push(Cover {
                level: self.k,
                prices: self.prices.clone(),
            });
            return Ok(());
        }
        let earlier = g.neighbors(v).iter().take_while(|&u| u < v);
        let lower = earlier
            .map(|u| self.k.saturating_sub(self.prices[u - 1]))
            .max()
            .unwrap_or(0);
        let upper = if self.basic_only && g.is_isolated(v) {
            0
        } else {
            self.k
        };
        for p in lower..=upper {
            self.meter.tick()?;
            self.prices[v - 1] = p;
            if self.basic_only && self.closes_at[v].iter().any(|&u| self.lop_possible(u)) {
                continue;
            }
            self.run(v + 1)?;
        }
        self.prices[v - 1] = 0;
        Ok(())
    }

    // assumes the graph has an edge, so every complete assignment reaching a
    // leaf is nonzero and the norm condition for lopping is implied
    fn lop_possible(&self, u: usize) -> bool {
        let p = self.prices[u - 1];
        p >= 1
            && self
                .g
                .neighbors(u)
                .iter()
                .all(|w| p - 1 + self.prices[w - 1] >= self.k)
    }
}

/// Splits a 2-cover into two 1-covers, returning the split whose first part
/// is lexicographically smallest, or `None` if `c` is indecomposable.
pub fn decompose_2cover(g: &Graph, c: &Cover) -> Result<Option<(Cover, Cover)>> {
    if c.level != 2 || !is_cover(g, &c.prices, 2) {
        return Err(Error::Argument(format!(
            "{:?} at level {} is not a 2-cover",
            c.prices, c.level
        )));
    }
    let mut first = vec![0; g.n()];
    if split_search(g, &c.prices, &mut first, 1) {
        let second = c.prices.iter().zip(&first).map(|(t, a)| t - a).collect();
        Ok(Some((
            Cover {
                level: 1,
                prices: first,
            },
            Cover {
                level: 1,
                prices: second,
            },
        )))
    } else {
        Ok(None)
    }
}

fn split_search(g: &Graph, total: &[u32], first: &mut Vec<u32>, v: usize) -> bool {
    if v > g.n() {
        let nonzero = first.iter().any(|&p| p > 0);
        let rest_nonzero = total.iter().zip(first.iter()).any(|(t, a)| t > a);
        return nonzero && rest_nonzero;
    }
    for p in 0..=total[v - 1] {
        first[v - 1] = p;
        let ok = g.neighbors(v).iter().take_while(|&u| u < v).all(|u| {
            let (a_u, t_u) = (first[u - 1], total[u - 1]);
            a_u + p >= 1 && (t_u - a_u) + (total[v - 1] - p) >= 1
        });
        if ok && split_search(g, total, first, v + 1) {
            return true;
        }
    }
    first[v - 1] = 0;
    false
}

/// Basic 2-covers that are not a sum of two 1-covers.
pub fn indecomposable_2covers(g: &Graph, budget: Budget) -> Result<CoverSet> {
    let basic = enumerate_basic_covers(g, 2, budget)?;
    let mut out = Vec::new();
    for c in basic.covers {
        if decompose_2cover(g, &c)?.is_none() {
            out.push(c);
        }
    }
    Ok(CoverSet::new(2, out))
}
