//! Exact graph parameters: minimum degree, connectivity, circumference,
//! detour order and matching number.
//!
//! The longest-cycle and longest-path searches are exact backtracking with a
//! reachability bound, meant for the small orders the certification harness
//! works with.

use std::collections::HashMap;

use crate::graph::{bit, full_set, members, Graph, VertexSet};

/// All parameters the extremal families are defined by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantProfile {
    pub order: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub biconnected: bool,
    /// Length of a longest cycle, 0 when acyclic.
    pub circumference: usize,
    /// Vertices on a longest path.
    pub detour_order: usize,
    pub matching_number: usize,
    pub hamiltonian: bool,
    pub traceable: bool,
}

impl InvariantProfile {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let circumference = circumference(g);
        let detour_order = detour_order(g);
        InvariantProfile {
            order: n,
            edges: g.edge_count(),
            min_degree: min_degree(g),
            connected: is_connected(g),
            biconnected: is_biconnected(g),
            circumference,
            detour_order,
            matching_number: matching_number(g),
            hamiltonian: n >= 3 && circumference == n,
            traceable: n >= 1 && detour_order == n,
        }
    }

    /// `key=value` pairs in a fixed order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("order", self.order.to_string()),
            ("edges", self.edges.to_string()),
            ("min_degree", self.min_degree.to_string()),
            ("connected", self.connected.to_string()),
            ("biconnected", self.biconnected.to_string()),
            ("circumference", self.circumference.to_string()),
            ("detour_order", self.detour_order.to_string()),
            ("matching_number", self.matching_number.to_string()),
            ("hamiltonian", self.hamiltonian.to_string()),
            ("traceable", self.traceable.to_string()),
        ]
    }
}

/// Minimum degree; 0 for the null graph.
pub fn min_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Vertices reachable from `start` using only vertices of `within`.
/// `start` itself is always included.
pub fn reach(g: &Graph, start: usize, within: VertexSet) -> VertexSet {
    let within = within | bit(start);
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in members(frontier) {
            next |= g.neighbors(v);
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Connected components as vertex sets, ordered by their lowest vertex.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut left = g.vertex_set();
    let mut out = Vec::new();
    while left != 0 {
        let v = left.trailing_zeros() as usize;
        let comp = reach(g, v, left);
        out.push(comp);
        left &= !comp;
    }
    out
}

/// The null graph is treated as disconnected.
pub fn is_connected(g: &Graph) -> bool {
    g.order() > 0 && reach(g, 0, g.vertex_set()) == g.vertex_set()
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 || !is_connected(g) || min_degree(g) < 2 {
        return false;
    }
    let all = g.vertex_set();
    (0..n).all(|v| {
        let rest = all & !bit(v);
        let start = rest.trailing_zeros() as usize;
        reach(g, start, rest) == rest
    })
}

struct CycleSearch<'a> {
    g: &'a Graph,
    root: usize,
    best: usize,
    cap: usize,
}

impl CycleSearch<'_> {
    fn dfs(&mut self, cur: usize, avail: VertexSet, len: usize) {
        if len >= 3 && self.g.neighbors(cur) & bit(self.root) != 0 && len > self.best {
            self.best = len;
        }
        if self.best >= self.cap {
            return;
        }
        let next = self.g.neighbors(cur) & avail;
        if next == 0 {
            return;
        }
        // Any extension must stay in the part of `avail` reachable from `cur`.
        let reachable = reach(self.g, cur, avail) & !bit(cur);
        if len + reachable.count_ones() as usize <= self.best {
            return;
        }
        for w in members(next) {
            self.dfs(w, avail & !bit(w), len + 1);
            if self.best >= self.cap {
                return;
            }
        }
    }
}

/// Length of a longest cycle; 0 if the graph is acyclic.
pub fn circumference(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    // Each cycle is found from its lowest vertex.
    for root in 0..n {
        let avail = g.vertex_set() & !full_set(root + 1);
        let comp = reach(g, root, avail);
        if (comp.count_ones() as usize) <= best.max(2) {
            continue;
        }
        let mut search = CycleSearch { g, root, best, cap: n };
        search.dfs(root, comp & !bit(root), 1);
        best = search.best;
        if best == n {
            break;
        }
    }
    best
}

/// `true` when some cycle has length greater than `c`.
pub fn has_cycle_longer_than(g: &Graph, c: usize) -> bool {
    let n = g.order();
    if c >= n {
        return false;
    }
    // Cycles have length at least 3.
    let floor = c.max(2);
    for root in 0..n {
        let avail = g.vertex_set() & !full_set(root + 1);
        let comp = reach(g, root, avail);
        if (comp.count_ones() as usize) <= floor {
            continue;
        }
        let mut search = CycleSearch { g, root, best: floor, cap: floor + 1 };
        search.dfs(root, comp & !bit(root), 1);
        if search.best > floor {
            return true;
        }
    }
    false
}

struct PathSearch<'a> {
    g: &'a Graph,
    best: usize,
    cap: usize,
}

impl PathSearch<'_> {
    fn dfs(&mut self, cur: usize, avail: VertexSet, len: usize) {
        if len > self.best {
            self.best = len;
        }
        if self.best >= self.cap {
            return;
        }
        let next = self.g.neighbors(cur) & avail;
        if next == 0 {
            return;
        }
        let reachable = reach(self.g, cur, avail) & !bit(cur);
        if len + reachable.count_ones() as usize <= self.best {
            return;
        }
        for w in members(next) {
            self.dfs(w, avail & !bit(w), len + 1);
            if self.best >= self.cap {
                return;
            }
        }
    }
}

/// Number of vertices on a longest path; 0 for the null graph.
pub fn detour_order(g: &Graph) -> usize {
    let mut best = 0;
    for comp in components(g) {
        let size = comp.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut search = PathSearch { g, best, cap: size };
        for start in members(comp) {
            search.dfs(start, comp & !bit(start), 1);
            if search.best >= size {
                break;
            }
        }
        best = search.best;
    }
    best
}

/// Size of a maximum matching.
///
/// Branches on the neighbors of a minimum-degree vertex `v`: some maximum
/// matching always covers a non-isolated `v`, so leaving `v` unmatched never
/// needs exploring.
pub fn matching_number(g: &Graph) -> usize {
    let mut memo = HashMap::new();
    matching_within(g, g.vertex_set(), &mut memo)
}

fn matching_within(g: &Graph, alive: VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
    let mut alive = alive;
    // Drop isolated vertices and pick a minimum-degree vertex among the rest.
    let mut pick = None;
    let mut pick_deg = usize::MAX;
    for v in members(alive) {
        let d = (g.neighbors(v) & alive).count_ones() as usize;
        if d == 0 {
            alive &= !bit(v);
        } else if d < pick_deg {
            pick_deg = d;
            pick = Some(v);
        }
    }
    let Some(v) = pick else { return 0 };
    if let Some(&m) = memo.get(&alive) {
        return m;
    }
    let ceiling = alive.count_ones() as usize / 2;
    let mut best = 0;
    for u in members(g.neighbors(v) & alive) {
        let m = 1 + matching_within(g, alive & !bit(u) & !bit(v), memo);
        best = best.max(m);
        if best == ceiling {
            break;
        }
    }
    memo.insert(alive, best);
    best
}
