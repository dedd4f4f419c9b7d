//! Graph reductions: `t`-disintegration, degree-sum closure, and edge-maximal
//! saturation with respect to circumference or matching number.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};
use crate::invariants::{circumference, has_cycle_longer_than, matching_number};

/// How ties are broken when several vertices or pairs qualify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Order {
    /// Lowest index (or lexicographically first pair) first.
    #[default]
    Lexicographic,
    /// Uniformly random among the qualifying candidates, reproducible from
    /// the seed.
    Seeded(u64),
}

impl Order {
    fn rng(self) -> Option<StdRng> {
        match self {
            Order::Lexicographic => None,
            Order::Seeded(seed) => Some(StdRng::seed_from_u64(seed)),
        }
    }
}

/// Result of `t`-disintegration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisintegrationResult {
    /// The `(t+1)`-core, relabeled; possibly the null graph.
    pub core: Graph,
    /// Original ids of the deleted vertices, in deletion order.
    pub elimination_order: Vec<usize>,
    /// `survivor_map[v]` is the core id of original vertex `v`, if it survived.
    pub survivor_map: Vec<Option<usize>>,
}

impl DisintegrationResult {
    /// The surviving original vertices.
    pub fn core_vertices(&self) -> VertexSet {
        self.survivor_map
            .iter()
            .enumerate()
            .filter(|(_, m)| m.is_some())
            .fold(0, |acc, (v, _)| acc | bit(v))
    }
}

/// Repeatedly deletes a vertex of current degree at most `t` until none is
/// left; the survivors induce the `(t+1)`-core.
pub fn disintegrate(g: &Graph, t: usize) -> DisintegrationResult {
    disintegrate_with(g, t, Order::Lexicographic)
}

pub fn disintegrate_with(g: &Graph, t: usize, order: Order) -> DisintegrationResult {
    let mut rng = order.rng();
    let mut alive = g.vertex_set();
    let mut elimination_order = Vec::new();
    loop {
        let low: Vec<usize> = members(alive)
            .filter(|&v| (g.neighbors(v) & alive).count_ones() as usize <= t)
            .collect();
        let Some(&first) = low.first() else { break };
        let v = match rng.as_mut() {
            Some(rng) => *low.choose(rng).expect("nonempty"),
            None => first,
        };
        alive &= !bit(v);
        elimination_order.push(v);
    }
    let (core, kept) = g.induced(alive);
    let mut survivor_map = vec![None; g.order()];
    for (new, &old) in kept.iter().enumerate() {
        survivor_map[old] = Some(new);
    }
    DisintegrationResult { core, elimination_order, survivor_map }
}

/// Checks that `elimination_order` is a legal deletion sequence for `g` at
/// threshold `t` and that what remains has minimum degree above `t`.
pub fn replay_disintegration(g: &Graph, t: usize, result: &DisintegrationResult) -> bool {
    let mut alive = g.vertex_set();
    for &v in &result.elimination_order {
        if alive & bit(v) == 0 || (g.neighbors(v) & alive).count_ones() as usize > t {
            return false;
        }
        alive &= !bit(v);
    }
    alive == result.core_vertices() && members(alive).all(|v| (g.neighbors(v) & alive).count_ones() as usize > t)
}

/// The `threshold`-closure: joins non-adjacent pairs whose degree sum is at
/// least `threshold` until no such pair remains. Scans pairs in
/// lexicographic order, repeating full passes until a pass adds nothing.
pub fn closure(g: &Graph, threshold: usize) -> Graph {
    closure_with(g, threshold, Order::Lexicographic)
}

pub fn closure_with(g: &Graph, threshold: usize, order: Order) -> Graph {
    let mut rng = order.rng();
    let mut h = g.clone();
    loop {
        let mut pairs = h.non_edges();
        if let Some(rng) = rng.as_mut() {
            pairs.shuffle(rng);
        }
        let mut changed = false;
        for (u, v) in pairs {
            if !h.has_edge(u, v) && h.degree(u) + h.degree(v) >= threshold {
                h.add_edge(u, v).expect("pair is in range");
                changed = true;
            }
        }
        if !changed {
            return h;
        }
    }
}

/// Adds non-edges in lexicographic order whenever `keeps` still holds for the
/// enlarged graph. Both parameters are monotone under edge addition, so a
/// pair rejected once stays rejected and a single pass reaches a fixed point.
fn saturate(g: &Graph, keeps: impl Fn(&Graph) -> bool) -> Graph {
    let mut h = g.clone();
    for (u, v) in g.non_edges() {
        h.add_edge(u, v).expect("pair is in range");
        if !keeps(&h) {
            h.remove_edge(u, v).expect("pair is in range");
        }
    }
    h
}

/// An edge-maximal supergraph of `g` with circumference exactly `c`.
pub fn saturate_circumference(g: &Graph, c: usize) -> Result<Graph> {
    let actual = circumference(g);
    if actual != c {
        return Err(Error::Precondition(format!("circumference is {actual}, not {c}")));
    }
    Ok(saturate(g, |h| !has_cycle_longer_than(h, c)))
}

/// An edge-maximal supergraph of `g` with matching number exactly `a`.
pub fn saturate_matching(g: &Graph, a: usize) -> Result<Graph> {
    let actual = matching_number(g);
    if actual != a {
        return Err(Error::Precondition(format!("matching number is {actual}, not {a}")));
    }
    Ok(saturate(g, |h| matching_number(h) <= a))
}

/// Whether every missing edge would create a cycle longer than the current
/// circumference.
pub fn is_circumference_saturated(g: &Graph) -> bool {
    let c = circumference(g);
    g.non_edges()
        .into_iter()
        .all(|(u, v)| has_cycle_longer_than(&g.with_edge(u, v).expect("pair is in range"), c))
}

/// Whether adding any single missing edge strictly increases `param`.
pub fn is_edge_maximal(g: &Graph, param: impl Fn(&Graph) -> usize) -> bool {
    let base = param(g);
    g.non_edges()
        .into_iter()
        .all(|(u, v)| param(&g.with_edge(u, v).expect("pair is in range")) > base)
}
