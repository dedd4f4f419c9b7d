//! Exact evaluation of the counting functions `g_R`, `f_R`, `h_R` and of the
//! extremal bounds built from them.
//!
//! `g_R(n,c,k)` is available in two independent forms: the vertex-by-vertex
//! double sum ([`g_formula_sum`]) and the telescoped closed form
//! ([`g_formula_closed`]). They are evaluated by separate code paths so that
//! their agreement checks the combinatorial identity behind them.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::construct::{f_block_sizes, validate_g};
use crate::count::{count_copies_complete, Count, PartSpec};
use crate::error::{Error, Result};

/// `C(n, k)`, taken to be 0 whenever `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= (n - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

/// `C(n, k)` for small arguments as a machine integer.
pub fn binomial_u(n: usize, k: usize) -> usize {
    binomial(n as i64, k as i64).to_usize().expect("binomial fits in usize")
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// Multinomial coefficient `(Σ r_i)! / ∏ r_i!`. The empty list gives 1.
pub fn multinomial(sizes: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut running = 0usize;
    for &r in sizes {
        running += r;
        acc *= binomial(running as i64, r as i64);
    }
    acc
}

fn signed(x: BigUint) -> BigInt {
    BigInt::from(x)
}

fn to_count(x: BigInt, what: &str) -> Count {
    assert!(!x.is_negative(), "{what} evaluated to a negative number: {x}");
    x.to_biguint().expect("nonnegative")
}

/// `P(r - r_j; R \ {r_j})` for one part index `j`. The division by
/// `∏ m_l!` is only exact after summing over `j`, so callers divide last.
fn reduced_multinomial(spec: &PartSpec, j: usize) -> BigUint {
    let mut rest = spec.parts().to_vec();
    rest.remove(j);
    multinomial(&rest)
}

fn divide_exact(x: BigUint, d: &BigUint, what: &str) -> Count {
    let (q, rem) = x.div_rem(d);
    assert!(rem.is_zero(), "{what} is not divisible by {d}");
    q
}

/// Copies of `K_R` inside `K_k ∨ K_{c+1-2k}`, the first term of `g_R`.
fn clique_part(c: usize, k: usize, spec: &PartSpec) -> BigUint {
    multinomial(spec.parts()) / spec.multiplicity_factor() * binomial((c + 1 - k) as i64, spec.total() as i64)
}

/// `g_R(n,c,k)` as the double sum over the independent vertices
/// `x_1, ..., x_{n-c-1+k}` and the part `j` that `x_i` occupies.
pub fn g_formula_sum(n: usize, c: usize, k: usize, spec: &PartSpec) -> Result<Count> {
    validate_g(n, c, k)?;
    let (n, c, k) = (n as i64, c as i64, k as i64);
    let r = spec.total() as i64;
    let independent = n - c - 1 + k;
    let mut outside = BigUint::zero();
    for (j, &rj) in spec.parts().iter().enumerate() {
        let rj = rj as i64;
        let coeff = reduced_multinomial(spec, j) * binomial(k, r - rj);
        if coeff.is_zero() {
            continue;
        }
        let mut inner = BigUint::zero();
        for i in 1..=independent {
            inner += binomial(n - r + rj - i, rj - 1);
        }
        outside += coeff * inner;
    }
    Ok(clique_part(c as usize, k as usize, spec) + divide_exact(outside, &spec.multiplicity_factor(), "g_R outside term"))
}

/// `g_R(n,c,k)` in closed form: the clique term plus, for every part `j`,
/// the copies placing a vertex outside `K_k ∨ K_{c+1-2k}` in part `j`.
pub fn g_formula_closed(n: usize, c: usize, k: usize, spec: &PartSpec) -> Result<Count> {
    validate_g(n, c, k)?;
    let (n, c, k) = (n as i64, c as i64, k as i64);
    let r = spec.total() as i64;
    let mut total = signed(multinomial(spec.parts())) * signed(binomial(c + 1 - k, r));
    for (j, &rj) in spec.parts().iter().enumerate() {
        let rj = rj as i64;
        let coeff = signed(reduced_multinomial(spec, j)) * signed(binomial(k, r - rj));
        let outer = signed(binomial(n - r + rj, rj)) - signed(binomial(c + 1 - k - r + rj, rj));
        total += coeff * outer;
    }
    Ok(divide_exact(to_count(total, "g_R closed form"), &spec.multiplicity_factor(), "g_R closed form"))
}

/// `f_R(n,c) = N(K_R, F(n,c))`.
///
/// Every copy that avoids the hub, or that contains the hub together with
/// another vertex of its own part, or that has at least three parts, lies in
/// a single block `K_1 ∨ B`. The only copies spanning several blocks are the
/// edgeless template (`s = 1`) and stars `K_{r-1,1}` centered at the hub.
pub fn f_formula(n: usize, c: usize, spec: &PartSpec) -> Result<Count> {
    let blocks = f_block_sizes(n, c)?;
    let r = spec.total() as i64;
    if spec.num_parts() == 1 {
        return Ok(binomial(n as i64, r));
    }
    let mut total: Count = blocks.iter().map(|&b| count_copies_complete(b + 1, spec)).sum();
    if spec.num_parts() == 2 && spec.parts()[1] == 1 && spec.parts()[0] > 1 {
        // Stars centered at the hub whose leaves use two or more blocks.
        let within: BigUint = blocks.iter().map(|&b| binomial(b as i64, r - 1)).sum();
        total += binomial(n as i64 - 1, r - 1) - within;
    }
    Ok(total)
}

/// `h_R(n,p) = N(K_R, α K_p + K_β)` with `n = αp + β`.
pub fn h_formula(n: usize, p: usize, spec: &PartSpec) -> Result<Count> {
    if p == 0 {
        return Err(Error::InvalidParams("h(n,p) needs p >= 1".into()));
    }
    if spec.num_parts() == 1 {
        // The edgeless template can spread over several components.
        return Ok(binomial(n as i64, spec.total() as i64));
    }
    let (alpha, beta) = (n / p, n % p);
    Ok(count_copies_complete(p, spec) * alpha + count_copies_complete(beta, spec))
}

/// The bounds that can be evaluated and certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// 2-connected, circumference `c < n`, minimum degree at least `k`.
    T1,
    /// Connected, detour order `p < n`, minimum degree at least `k`.
    T2,
    /// Matching number `α'`, `n >= 2α' + 2`, minimum degree at least `k`.
    T3,
    /// `T1` with `k = 2`.
    C8,
    /// `T2` with `k = 1`.
    C9,
    /// `T3` with `k = 0`.
    C10,
    /// Circumference `c < n`, no connectivity assumption.
    C14,
    /// Detour order `p < n`, no connectivity assumption.
    C17,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::C8,
        TheoremId::C9,
        TheoremId::C10,
        TheoremId::C14,
        TheoremId::C17,
    ];

    /// Whether the statement carries a minimum-degree parameter `k`.
    pub fn takes_k(self) -> bool {
        matches!(self, TheoremId::T1 | TheoremId::T2 | TheoremId::T3)
    }

    /// The fixed `k` of a statement, if any.
    pub fn fixed_k(self) -> Option<usize> {
        match self {
            TheoremId::C8 => Some(2),
            TheoremId::C9 => Some(1),
            TheoremId::C10 => Some(0),
            _ => None,
        }
    }

    /// Name of the structural parameter.
    pub fn param_name(self) -> &'static str {
        match self {
            TheoremId::T1 | TheoremId::C8 | TheoremId::C14 => "c",
            TheoremId::T2 | TheoremId::C9 | TheoremId::C17 => "p",
            TheoremId::T3 | TheoremId::C10 => "alpha_prime",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::C8 => "C8",
            TheoremId::C9 => "C9",
            TheoremId::C10 => "C10",
            TheoremId::C14 => "C14",
            TheoremId::C17 => "C17",
        };
        f.write_str(s)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown theorem id `{s}`")))
    }
}

/// Arguments of a bound evaluation. `param` is `c`, `p` or `α'` depending on
/// the theorem; `k` is ignored by statements that fix it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaInputs {
    pub n: usize,
    pub param: usize,
    pub k: usize,
    pub spec: PartSpec,
}

impl FormulaInputs {
    pub fn new(n: usize, param: usize, k: usize, spec: PartSpec) -> Self {
        FormulaInputs { n, param, k, spec }
    }

    /// `⌊c/2⌋` for the circumference statements, `⌊(p-1)/2⌋` for detour,
    /// `α'` for matching.
    pub fn t(&self, theorem: TheoremId) -> usize {
        match theorem.param_name() {
            "c" => self.param / 2,
            "p" => self.param.saturating_sub(1) / 2,
            _ => self.param,
        }
    }
}

fn domain(theorem: TheoremId, msg: String) -> Error {
    Error::InvalidParams(format!("{theorem}: {msg}"))
}

/// Checks the hypotheses on `(n, param, k)` required by `theorem`.
pub fn check_domain(theorem: TheoremId, inputs: &FormulaInputs) -> Result<()> {
    let FormulaInputs { n, param, .. } = *inputs;
    let k = theorem.fixed_k().unwrap_or(inputs.k);
    match theorem {
        TheoremId::T1 | TheoremId::C8 => {
            if n == 0 || param > n - 1 || 2 * k > param {
                return Err(domain(theorem, format!("needs n-1 >= c >= 2k, got n={n}, c={param}, k={k}")));
            }
        }
        TheoremId::T2 | TheoremId::C9 => {
            if n == 0 || param > n - 1 || param < 2 * k + 1 {
                return Err(domain(theorem, format!("needs n-1 >= p >= 2k+1, got n={n}, p={param}, k={k}")));
            }
        }
        TheoremId::T3 | TheoremId::C10 => {
            if n < 2 * param + 2 || k > param {
                return Err(domain(theorem, format!("needs n >= 2a'+2 and k <= a', got n={n}, a'={param}, k={k}")));
            }
        }
        TheoremId::C14 | TheoremId::C17 => {
            if n == 0 || param > n - 1 || param < 3 {
                return Err(domain(theorem, format!("needs n-1 >= {} >= 3, got n={n}, {}={param}", theorem.param_name(), theorem.param_name())));
            }
        }
    }
    Ok(())
}

/// The two quantities whose maximum is the bound, in statement order.
pub fn bound_terms(theorem: TheoremId, inputs: &FormulaInputs) -> Result<(Count, Count)> {
    check_domain(theorem, inputs)?;
    let FormulaInputs { n, param, ref spec, .. } = *inputs;
    let k = theorem.fixed_k().unwrap_or(inputs.k);
    let t = inputs.t(theorem);
    Ok(match theorem {
        TheoremId::T1 | TheoremId::C8 => (g_formula_sum(n, param, k, spec)?, g_formula_sum(n, param, t, spec)?),
        TheoremId::T2 | TheoremId::C9 => (g_formula_sum(n, param - 1, k, spec)?, g_formula_sum(n, param - 1, t, spec)?),
        TheoremId::T3 | TheoremId::C10 => (g_formula_sum(n, 2 * param, k, spec)?, g_formula_sum(n, 2 * param, t, spec)?),
        TheoremId::C14 => (f_formula(n, param, spec)?, g_formula_sum(n, param, t, spec)?),
        TheoremId::C17 => (h_formula(n, param, spec)?, g_formula_sum(n, param - 1, t, spec)?),
    })
}

/// The upper bound on `N(K_R, G)` asserted by `theorem`.
pub fn bound(theorem: TheoremId, inputs: &FormulaInputs) -> Result<Count> {
    let (a, b) = bound_terms(theorem, inputs)?;
    Ok(a.max(b))
}

/// Second differences of `k ↦ g_R(n,c,k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityReport {
    pub n: usize,
    pub c: usize,
    pub spec: PartSpec,
    /// `(k, g(k+1) + g(k-1) - 2 g(k))` for every `k` whose neighbors are in
    /// the domain.
    pub second_differences: Vec<(usize, BigInt)>,
}

impl ConvexityReport {
    pub fn is_convex(&self) -> bool {
        self.second_differences.iter().all(|(_, d)| !d.is_negative())
    }
}

/// Evaluates the second differences over the points of `k_range` for which
/// `k - 1 >= 0` and `2(k + 1) <= c`. Points without both neighbors are
/// skipped.
pub fn convexity_report(n: usize, c: usize, spec: &PartSpec, k_range: RangeInclusive<usize>) -> Result<ConvexityReport> {
    validate_g(n, c, 0)?;
    let mut second_differences = Vec::new();
    for k in k_range {
        if k == 0 || 2 * (k + 1) > c {
            continue;
        }
        let lo = signed(g_formula_sum(n, c, k - 1, spec)?);
        let mid = signed(g_formula_sum(n, c, k, spec)?);
        let hi = signed(g_formula_sum(n, c, k + 1, spec)?);
        second_differences.push((k, hi + lo - mid * 2));
    }
    Ok(ConvexityReport { n, c, spec: spec.clone(), second_differences })
}
