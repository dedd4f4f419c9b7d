//! The extremal families.
//!
//! Vertex layout of [`construct_g`] is a contract relied upon by callers:
//! hubs `0..k`, then the clique block `k..c+1-k`, then the independent block
//! `c+1-k..n`.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters naming one member of an extremal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionParams {
    /// `G(n,c,k) = K_k ∨ (K_{c+1-2k} + K̄_{n-c-1+k})`.
    G { n: usize, c: usize, k: usize },
    /// `F(n,c) = K_1 ∨ (α K_{c-1} + K_β)` with `n-1 = α(c-1) + β`.
    F { n: usize, c: usize },
    /// `H(n,p) = α K_p + K_β` with `n = αp + β`.
    H { n: usize, p: usize },
    /// `K*_{r,s} = K_r ∨ K̄_s`.
    KrsStar { r: usize, s: usize },
}

impl ConstructionParams {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ConstructionParams::G { n, c, k } => validate_g(n, c, k),
            ConstructionParams::F { n, c } => {
                if n == 0 || c < 2 {
                    return Err(Error::InvalidParams(format!("F(n,c) needs n >= 1 and c >= 2, got n={n}, c={c}")));
                }
                Ok(())
            }
            ConstructionParams::H { p, .. } => {
                if p == 0 {
                    return Err(Error::InvalidParams("H(n,p) needs p >= 1".into()));
                }
                Ok(())
            }
            ConstructionParams::KrsStar { r, s } => {
                if r == 0 || s == 0 {
                    return Err(Error::InvalidParams(format!("K*_(r,s) needs r, s >= 1, got r={r}, s={s}")));
                }
                Ok(())
            }
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            ConstructionParams::G { n, c, k } => construct_g(n, c, k),
            ConstructionParams::F { n, c } => construct_f(n, c),
            ConstructionParams::H { n, p } => construct_h(n, p),
            ConstructionParams::KrsStar { r, s } => construct_krs_star(r, s),
        }
    }
}

impl fmt::Display for ConstructionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionParams::G { n, c, k } => write!(f, "G({n},{c},{k})"),
            ConstructionParams::F { n, c } => write!(f, "F({n},{c})"),
            ConstructionParams::H { n, p } => write!(f, "H({n},{p})"),
            ConstructionParams::KrsStar { r, s } => write!(f, "K*({r},{s})"),
        }
    }
}

pub(crate) fn validate_g(n: usize, c: usize, k: usize) -> Result<()> {
    if n == 0 || n - 1 < c || c < 2 * k {
        return Err(Error::InvalidParams(format!(
            "G(n,c,k) needs n-1 >= c >= 2k, got n={n}, c={c}, k={k}"
        )));
    }
    Ok(())
}

/// Index ranges of the three blocks of `G(n,c,k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBlocks {
    pub hubs: Range<usize>,
    pub clique: Range<usize>,
    pub independent: Range<usize>,
}

pub fn g_blocks(n: usize, c: usize, k: usize) -> Result<GBlocks> {
    validate_g(n, c, k)?;
    Ok(GBlocks { hubs: 0..k, clique: k..c + 1 - k, independent: c + 1 - k..n })
}

pub fn construct_g(n: usize, c: usize, k: usize) -> Result<Graph> {
    validate_g(n, c, k)?;
    let rest = Graph::complete(c + 1 - 2 * k)?.disjoint_union(&Graph::empty_graph(n - c - 1 + k)?)?;
    Graph::complete(k)?.join(&rest)
}

/// Euclidean split `total = α·block + β`, `0 <= β < block`.
fn split(total: usize, block: usize) -> (usize, usize) {
    (total / block, total % block)
}

/// `F(n,c)`: vertex 0 is the shared hub; blocks of `c-1` vertices follow,
/// then the `β` remnant.
pub fn construct_f(n: usize, c: usize) -> Result<Graph> {
    ConstructionParams::F { n, c }.validate()?;
    let (alpha, beta) = split(n - 1, c - 1);
    let mut rest = Graph::null();
    for _ in 0..alpha {
        rest = rest.disjoint_union(&Graph::complete(c - 1)?)?;
    }
    rest = rest.disjoint_union(&Graph::complete(beta)?)?;
    Graph::complete(1)?.join(&rest)
}

/// `F(n,c)` block sizes (not counting the hub): `α` blocks of `c-1`, plus the
/// remnant when `β > 0`.
pub fn f_block_sizes(n: usize, c: usize) -> Result<Vec<usize>> {
    ConstructionParams::F { n, c }.validate()?;
    let (alpha, beta) = split(n - 1, c - 1);
    let mut sizes = vec![c - 1; alpha];
    if beta > 0 {
        sizes.push(beta);
    }
    Ok(sizes)
}

pub fn construct_h(n: usize, p: usize) -> Result<Graph> {
    ConstructionParams::H { n, p }.validate()?;
    let (alpha, beta) = split(n, p);
    let mut g = Graph::null();
    for _ in 0..alpha {
        g = g.disjoint_union(&Graph::complete(p)?)?;
    }
    g.disjoint_union(&Graph::complete(beta)?)
}

pub fn construct_krs_star(r: usize, s: usize) -> Result<Graph> {
    ConstructionParams::KrsStar { r, s }.validate()?;
    Graph::complete(r)?.join(&Graph::empty_graph(s)?)
}
