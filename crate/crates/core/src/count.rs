//! Counting copies of complete multipartite graphs `K_{r_1,...,r_s}`.
//!
//! Copies are subgraphs, not induced subgraphs: pairs inside one part may or
//! may not be adjacent in the host.
//!
//! The kernel chooses the parts one at a time in part-major order, each part
//! as an increasing vertex subset, and narrows the candidate set to the common
//! neighborhood of everything already placed. That enumerates part-labeled
//! copies; multiplying by `∏ r_i!` gives embeddings and dividing embeddings by
//! the automorphism order `∏ r_i! · ∏ m_l!` gives copies.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::formulas::{binomial, factorial, multinomial};
use crate::graph::{bit, members, Graph, VertexSet};

/// Exact nonnegative count.
pub type Count = BigUint;

/// The multiset of part sizes, kept sorted in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartSpec {
    parts: Vec<usize>,
}

impl PartSpec {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::PartSpec("at least one part is required".into()));
        }
        if parts.contains(&0) {
            return Err(Error::PartSpec("part sizes must be positive".into()));
        }
        if parts.iter().sum::<usize>() > crate::graph::MAX_ORDER {
            return Err(Error::PartSpec("total size exceeds the vertex cap".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartSpec { parts })
    }

    /// `K_s`: `s` parts of size one.
    pub fn clique(s: usize) -> Result<Self> {
        PartSpec::new(vec![1; s])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `s`.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Total vertex count `r`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Distinct sizes with multiplicities, largest size first.
    pub fn distinct(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((size, mult)) if *size == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Whether the template is a complete graph (all parts have size one).
    pub fn is_complete(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// The spec with one part of size `size` removed, if any.
    pub fn without_part(&self, size: usize) -> Option<Vec<usize>> {
        let pos = self.parts.iter().position(|&p| p == size)?;
        let mut rest = self.parts.clone();
        rest.remove(pos);
        Some(rest)
    }

    /// `∏ m_l!` over the distinct sizes.
    pub fn multiplicity_factor(&self) -> Count {
        self.distinct().iter().map(|&(_, m)| factorial(m)).product()
    }

    /// `∏ r_i!`.
    pub fn part_factor(&self) -> Count {
        self.parts.iter().map(|&p| factorial(p)).product()
    }
}

impl FromStr for PartSpec {
    type Err = Error;

    /// Parses `"r1,r2,...,rs"`; order does not matter.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::PartSpec(format!("`{}` is not a positive integer", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        PartSpec::new(parts)
    }
}

impl fmt::Display for PartSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

/// Order of the automorphism group of `K_R`: `∏ r_i! · ∏ m_l!`.
pub fn aut_order(spec: &PartSpec) -> Count {
    spec.part_factor() * spec.multiplicity_factor()
}

/// Sums leaf counts in `u128` and spills into a big integer on overflow.
#[derive(Default)]
struct Tally {
    small: u128,
    big: BigUint,
}

impl Tally {
    #[inline]
    fn add(&mut self, x: u128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = x;
            }
        }
    }

    fn finish(self) -> BigUint {
        self.big + self.small
    }
}

/// Binomial coefficient for the leaf fast path; the kernel only needs
/// `C(a, b)` with `a <= 62`, which fits in `u128`.
fn small_binomial(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

struct Kernel<'a> {
    g: &'a Graph,
    parts: &'a [usize],
    /// `suffix[i]` is the number of template vertices in parts `i..`.
    suffix: Vec<usize>,
    /// Vertices every counted copy must use.
    required: VertexSet,
    tally: Tally,
}

impl Kernel<'_> {
    /// Places part `part`, which still needs `need` vertices larger than
    /// `floor`. `chosen` holds the vertices of this part picked so far,
    /// `used` everything placed, and `cand` the vertices adjacent to every
    /// vertex of earlier parts (minus `used`).
    fn place(&mut self, part: usize, need: usize, floor: usize, cand: VertexSet, chosen: VertexSet, used: VertexSet) {
        if need == 0 {
            self.finish_part(part, chosen, cand, used);
            return;
        }
        let pool = cand & !crate::graph::full_set(floor);
        if (pool.count_ones() as usize) < need {
            return;
        }
        if part + 1 == self.parts.len() {
            // Only this part is left and nothing constrains its members beyond
            // the required vertices, which must all come from `pool`.
            let missing = self.required & !used;
            let k = missing.count_ones() as usize;
            if missing & !pool == 0 && k <= need {
                let free = (pool & !missing).count_ones() as usize;
                self.tally.add(small_binomial(free, need - k));
            }
            return;
        }
        for v in members(pool) {
            self.place(part, need - 1, v + 1, cand, chosen | bit(v), used | bit(v));
        }
    }

    fn finish_part(&mut self, part: usize, chosen: VertexSet, cand: VertexSet, used: VertexSet) {
        let next = part + 1;
        if next == self.parts.len() {
            if self.required & !used == 0 {
                self.tally.add(1);
            }
            return;
        }
        let mut cand = cand & !chosen;
        for v in members(chosen) {
            cand &= self.g.neighbors(v);
        }
        if (cand.count_ones() as usize) < self.suffix[next] {
            return;
        }
        // A required vertex that dropped out of the candidates can never be used.
        if self.required & !used & !cand != 0 {
            return;
        }
        self.place(next, self.parts[next], 0, cand, 0, used);
    }
}

/// Copies of `K_R` with parts labeled `1..s` (so equal-size parts are
/// distinguished) that contain every vertex of `required`.
fn labeled_copies(g: &Graph, spec: &PartSpec, required: VertexSet) -> Count {
    // Smallest parts first, so the largest one is settled by the binomial
    // shortcut at the leaves.
    let ascending: Vec<usize> = spec.parts().iter().rev().copied().collect();
    let parts = &ascending[..];
    let mut suffix = vec![0; parts.len() + 1];
    for i in (0..parts.len()).rev() {
        suffix[i] = suffix[i + 1] + parts[i];
    }
    if suffix[0] > g.order() || (required.count_ones() as usize) > suffix[0] {
        return Count::zero();
    }
    let mut kernel = Kernel { g, parts, suffix, required, tally: Tally::default() };
    kernel.place(0, parts[0], 0, g.vertex_set(), 0, 0);
    kernel.tally.finish()
}

/// Number of injective maps `V(K_R) → V(g)` sending every edge of `K_R` to an
/// edge of `g`.
pub fn count_embeddings(g: &Graph, spec: &PartSpec) -> Count {
    labeled_copies(g, spec, 0) * spec.part_factor()
}

/// `N(K_R, g)`: the number of subgraphs of `g` isomorphic to `K_R`.
pub fn count_copies(g: &Graph, spec: &PartSpec) -> Count {
    let embeddings = count_embeddings(g, spec);
    let (q, rem) = embeddings.div_rem(&aut_order(spec));
    assert!(rem.is_zero(), "embedding count {embeddings} not divisible by |Aut(K_R)| for {spec}");
    q
}

/// Copies of `K_R` whose vertex set contains `v`.
pub fn count_copies_through(g: &Graph, spec: &PartSpec, v: usize) -> Result<Count> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let labeled = labeled_copies(g, spec, bit(v));
    let (q, rem) = labeled.div_rem(&spec.multiplicity_factor());
    assert!(rem.is_zero(), "labeled count not divisible by multiplicity factor for {spec}");
    Ok(q)
}

/// `N(K_R, K_m) = P(r; R) / ∏ m_l! · C(m, r)`.
pub fn count_copies_complete(m: usize, spec: &PartSpec) -> Count {
    let per_set = multinomial(spec.parts()) / spec.multiplicity_factor();
    per_set * binomial(m as i64, spec.total() as i64)
}

/// Lifts a `u64` into a [`Count`].
pub fn count_from(x: u64) -> Count {
    Count::from(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> PartSpec {
        s.parse().unwrap()
    }

    #[test]
    fn part_spec_canonical_form() {
        let p = spec("1,2,2,3");
        assert_eq!(p.parts(), &[3, 2, 2, 1]);
        assert_eq!(p.total(), 8);
        assert_eq!(p.num_parts(), 4);
        assert_eq!(p.distinct(), vec![(3, 1), (2, 2), (1, 1)]);
        assert_eq!(p.to_string(), "3,2,2,1");
        assert_eq!(spec(" 2 , 1"), spec("1,2"));
        assert!("".parse::<PartSpec>().is_err());
        assert!("1,0".parse::<PartSpec>().is_err());
        assert!("1,x".parse::<PartSpec>().is_err());
        assert!(spec("1,1,1").is_complete());
        assert!(!spec("2,1").is_complete());
    }

    #[test]
    fn aut_order_examples() {
        assert_eq!(aut_order(&spec("2,2")), count_from(8));
        assert_eq!(aut_order(&spec("1,1,1")), count_from(6));
        assert_eq!(aut_order(&spec("1")), count_from(1));
        assert_eq!(aut_order(&spec("3,2")), count_from(12));
    }

    #[test]
    fn embedding_examples() {
        let k3 = Graph::complete(3).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_embeddings(&k3, &spec("2,1")), count_from(6));
        assert_eq!(count_embeddings(&k4, &spec("2,2")), count_from(24));
        assert_eq!(count_embeddings(&Graph::empty_graph(3).unwrap(), &spec("1,1")), count_from(0));
    }

    #[test]
    fn copy_examples() {
        let k3 = Graph::complete(3).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_copies(&k3, &spec("2,1")), count_from(3));
        assert_eq!(count_copies(&k4, &spec("2,2")), count_from(3));
        assert_eq!(count_copies(&k4, &spec("1,1,1")), count_from(4));
        // an edgeless template is any vertex subset
        assert_eq!(count_copies(&Graph::empty_graph(5).unwrap(), &spec("3")), count_from(10));
        assert_eq!(count_copies(&k3, &spec("2,2")), count_from(0));
        assert_eq!(count_copies(&Graph::null(), &spec("1")), count_from(0));
    }

    #[test]
    fn complete_closed_form_examples() {
        assert_eq!(count_copies_complete(5, &spec("2,1")), count_from(30));
        assert_eq!(count_copies_complete(4, &spec("2,2")), count_from(3));
        let s = spec("2,2,1");
        assert_eq!(count_copies_complete(s.total() - 1, &s), count_from(0));
    }

    #[test]
    fn through_examples() {
        let k3 = Graph::complete(3).unwrap();
        for v in 0..3 {
            assert_eq!(count_copies_through(&k3, &spec("1,1"), v).unwrap(), count_from(2));
        }
        let star = crate::construct::construct_krs_star(1, 3).unwrap();
        assert_eq!(count_copies_through(&star, &spec("2,1"), 0).unwrap(), count_from(3));
        assert_eq!(count_copies_through(&star, &spec("2,1"), 1).unwrap(), count_from(2));
        let e2 = Graph::empty_graph(2).unwrap();
        assert_eq!(count_copies_through(&e2, &spec("1,1"), 0).unwrap(), count_from(0));
        assert!(count_copies_through(&e2, &spec("1,1"), 2).is_err());
    }

    #[test]
    fn large_counts_do_not_overflow() {
        let k62 = Graph::complete(62).unwrap();
        let s = spec("1,1");
        assert_eq!(count_copies(&k62, &s), count_from(62 * 61 / 2));
        // C(62,31) ≈ 4.65e17 leaves through the binomial fast path
        let half = spec("31,1");
        assert_eq!(count_copies(&k62, &half), count_copies_complete(62, &half));
    }
}
