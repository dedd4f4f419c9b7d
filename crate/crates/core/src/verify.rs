//! Exhaustive certification of the bounds on small graphs.
//!
//! A scan walks a family of graphs (every labeled graph of a given order, or
//! a graph6 stream), keeps the members that satisfy a [`FamilyFilter`],
//! counts copies of each requested template in them, and compares the
//! observed maxima with the bound.
//!
//! Labeled enumeration visits isomorphic graphs many times over. The bounds
//! are isomorphism invariant, so this only costs time.

use std::fmt;
use std::io::BufRead;

use rayon::prelude::*;

use crate::count::{count_copies, Count, PartSpec};
use crate::error::{Error, Result};
use crate::formulas::{bound, FormulaInputs, TheoremId};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6, HEADER};
use crate::invariants::{circumference, detour_order, is_biconnected, is_connected, matching_number, min_degree};

/// Largest order the built-in labeled enumeration accepts.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Default number of witness graphs kept per report.
pub const DEFAULT_WITNESS_CAP: usize = 16;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_ORDER {
        Err(Error::EnumerationTooLarge(n))
    } else {
        Ok(())
    }
}

/// Visits every labeled graph on `n` vertices once, in increasing edge-mask
/// order (bit `i` is the `i`-th pair in graph6 order).
pub fn enumerate_labeled(n: usize, mut sink: impl FnMut(&Graph)) -> Result<()> {
    check_enumerable(n)?;
    for mask in 0..1u64 << pair_count(n) {
        sink(&Graph::from_edge_mask(n, mask));
    }
    Ok(())
}

/// Visits the labeled graphs whose top `chunk_bits` edge-mask bits equal
/// `chunk`. The `2^chunk_bits` chunks partition the full enumeration.
pub fn enumerate_labeled_chunk(n: usize, chunk: u64, chunk_bits: u32, mut sink: impl FnMut(u64, &Graph)) -> Result<()> {
    check_enumerable(n)?;
    let total = pair_count(n) as u32;
    if chunk_bits > total || chunk >= 1u64 << chunk_bits {
        return Err(Error::InvalidParams(format!("chunk {chunk} of {chunk_bits} bits is out of range for order {n}")));
    }
    let low = total - chunk_bits;
    let base = chunk << low;
    for rest in 0..1u64 << low {
        let mask = base | rest;
        sink(mask, &Graph::from_edge_mask(n, mask));
    }
    Ok(())
}

/// What to do with a graph6 line that does not parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    Skip,
    Abort,
}

#[derive(Debug, Default)]
pub struct StreamSummary {
    pub delivered: usize,
    /// Skipped lines with their errors (skip mode only).
    pub warnings: Vec<Error>,
}

/// Feeds every graph of a graph6 stream to `sink`, in order. Blank lines and
/// a bare `>>graph6<<` header line are ignored.
pub fn stream_graph6(source: impl BufRead, mode: ParseMode, mut sink: impl FnMut(Graph)) -> Result<StreamSummary> {
    let mut summary = StreamSummary::default();
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Stream { line: line_no, message: e.to_string() })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed == HEADER {
            continue;
        }
        match from_graph6(trimmed) {
            Ok(g) => {
                summary.delivered += 1;
                sink(g);
            }
            Err(e) => {
                let err = Error::Stream { line: line_no, message: e.to_string() };
                match mode {
                    ParseMode::Abort => return Err(err),
                    ParseMode::Skip => summary.warnings.push(err),
                }
            }
        }
    }
    Ok(summary)
}

/// Structural constraints selecting a family of graphs of one order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyFilter {
    pub order: usize,
    pub require_connected: bool,
    pub require_biconnected: bool,
    pub require_nonhamiltonian: bool,
    pub require_nontraceable: bool,
    pub circumference_eq: Option<usize>,
    pub detour_eq: Option<usize>,
    pub matching_eq: Option<usize>,
    pub min_degree_ge: Option<usize>,
}

impl FamilyFilter {
    pub fn new(order: usize) -> Self {
        FamilyFilter { order, ..Default::default() }
    }

    /// The family a theorem quantifies over, with `param` its structural
    /// parameter and `k` the minimum-degree bound (ignored when fixed or
    /// absent).
    pub fn for_theorem(theorem: TheoremId, n: usize, param: usize, k: usize) -> Self {
        let mut f = FamilyFilter::new(n);
        let k = theorem.fixed_k().unwrap_or(k);
        match theorem {
            TheoremId::T1 | TheoremId::C8 => {
                f.require_biconnected = true;
                f.circumference_eq = Some(param);
            }
            TheoremId::T2 | TheoremId::C9 => {
                f.require_connected = true;
                f.detour_eq = Some(param);
            }
            TheoremId::T3 | TheoremId::C10 => f.matching_eq = Some(param),
            TheoremId::C14 => f.circumference_eq = Some(param),
            TheoremId::C17 => f.detour_eq = Some(param),
        }
        if k > 0 && matches!(theorem, TheoremId::T1 | TheoremId::T2 | TheoremId::T3 | TheoremId::C8 | TheoremId::C9) {
            f.min_degree_ge = Some(k);
        }
        f
    }

    fn has_structural_constraint(&self) -> bool {
        self.require_nonhamiltonian
            || self.require_nontraceable
            || self.circumference_eq.is_some()
            || self.detour_eq.is_some()
            || self.matching_eq.is_some()
    }

    /// Membership test, cheapest checks first.
    pub fn accepts(&self, g: &Graph) -> bool {
        let n = g.order();
        if n != self.order {
            return false;
        }
        if let Some(k) = self.min_degree_ge {
            if min_degree(g) < k {
                return false;
            }
        }
        if self.require_connected && !is_connected(g) {
            return false;
        }
        if self.require_biconnected && !is_biconnected(g) {
            return false;
        }
        if let Some(a) = self.matching_eq {
            if matching_number(g) != a {
                return false;
            }
        }
        if self.detour_eq.is_some() || self.require_nontraceable {
            let p = detour_order(g);
            if self.detour_eq.is_some_and(|want| p != want) || (self.require_nontraceable && p == n) {
                return false;
            }
        }
        if self.circumference_eq.is_some() || self.require_nonhamiltonian {
            let c = circumference(g);
            if self.circumference_eq.is_some_and(|want| c != want) || (self.require_nonhamiltonian && n >= 3 && c == n) {
                return false;
            }
        }
        true
    }

    /// Derives the bound arguments for `theorem`, checking that every graph
    /// this filter admits satisfies the theorem's hypotheses.
    pub fn theorem_inputs(&self, theorem: TheoremId, spec: &PartSpec) -> Result<FormulaInputs> {
        let mismatch = |reason: &str| Error::HypothesisMismatch { theorem: theorem.to_string(), reason: reason.into() };
        let n = self.order;
        let param = match theorem {
            TheoremId::T1 | TheoremId::C8 | TheoremId::C14 => {
                self.circumference_eq.ok_or_else(|| mismatch("a circumference constraint is required"))?
            }
            TheoremId::T2 | TheoremId::C9 | TheoremId::C17 => {
                self.detour_eq.ok_or_else(|| mismatch("a detour-order constraint is required"))?
            }
            TheoremId::T3 | TheoremId::C10 => self.matching_eq.ok_or_else(|| mismatch("a matching-number constraint is required"))?,
        };
        match theorem {
            TheoremId::T1 | TheoremId::C8 if !self.require_biconnected => return Err(mismatch("the family must be 2-connected")),
            TheoremId::T2 | TheoremId::C9 if !(self.require_connected || self.require_biconnected) => {
                return Err(mismatch("the family must be connected"))
            }
            _ => {}
        }
        if matches!(theorem, TheoremId::T1 | TheoremId::C8 | TheoremId::C14 | TheoremId::T2 | TheoremId::C9 | TheoremId::C17) && param >= n {
            return Err(mismatch("the parameter must be below the order (nonhamiltonian / nontraceable)"));
        }
        // A family with minimum degree >= k also has minimum degree >= any
        // smaller k, so the requested k is capped at the largest admissible one.
        let k = match theorem.fixed_k() {
            Some(fixed) => fixed,
            None => {
                let cap = match theorem {
                    TheoremId::T1 => param / 2,
                    TheoremId::T2 => param.saturating_sub(1) / 2,
                    _ => param,
                };
                self.min_degree_ge.unwrap_or(0).min(cap)
            }
        };
        let inputs = FormulaInputs::new(n, param, k, spec.clone());
        crate::formulas::check_domain(theorem, &inputs).map_err(|e| mismatch(&e.to_string()))?;
        Ok(inputs)
    }
}

impl fmt::Display for FamilyFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.order)?;
        if self.require_connected {
            f.write_str(" connected")?;
        }
        if self.require_biconnected {
            f.write_str(" biconnected")?;
        }
        if self.require_nonhamiltonian {
            f.write_str(" nonhamiltonian")?;
        }
        if self.require_nontraceable {
            f.write_str(" nontraceable")?;
        }
        if let Some(c) = self.circumference_eq {
            write!(f, " circumference={c}")?;
        }
        if let Some(p) = self.detour_eq {
            write!(f, " detour={p}")?;
        }
        if let Some(a) = self.matching_eq {
            write!(f, " matching={a}")?;
        }
        if let Some(k) = self.min_degree_ge {
            write!(f, " min_degree>={k}")?;
        }
        Ok(())
    }
}

/// Where the bound being certified comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundSource {
    Theorem(TheoremId),
    /// A fixed value with a label for the report.
    Explicit { label: String, value: Count },
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundSource::Theorem(t) => write!(f, "{t}"),
            BoundSource::Explicit { label, .. } => f.write_str(label),
        }
    }
}

/// The graphs a scan walks.
#[derive(Debug, Clone, Copy)]
pub enum GraphSource<'a> {
    /// Every labeled graph of the filter's order.
    Labeled,
    /// An explicit list, typically read from a graph6 stream.
    Graphs(&'a [Graph]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub jobs: usize,
    pub witness_cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { jobs: 1, witness_cap: DEFAULT_WITNESS_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub filter: FamilyFilter,
    pub spec: PartSpec,
    pub bound_source: String,
    pub bound: Count,
    /// 0 when the family is empty.
    pub observed_max: Count,
    /// How many family members attain `observed_max`.
    pub maximizers: u64,
    /// graph6 strings of the first maximizers in scan order.
    pub witness_graphs: Vec<String>,
    /// Graphs examined, members or not.
    pub graphs_scanned: u64,
    /// Graphs that passed the filter.
    pub family_size: u64,
    pub empty: bool,
    pub pass: bool,
    pub tight: bool,
}

impl VerificationReport {
    /// Machine-readable `key=value` lines.
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        let mut put = |k: &str, v: String| {
            out.push_str(k);
            out.push('=');
            out.push_str(&v);
            out.push('\n');
        };
        put("filter", self.filter.to_string());
        put("spec", self.spec.to_string());
        put("bound_source", self.bound_source.clone());
        put("bound", self.bound.to_string());
        put("observed_max", self.observed_max.to_string());
        put("maximizers", self.maximizers.to_string());
        put("witness_graphs", self.witness_graphs.join(","));
        put("graphs_scanned", self.graphs_scanned.to_string());
        put("family_size", self.family_size.to_string());
        put("empty", self.empty.to_string());
        put("pass", self.pass.to_string());
        put("tight", self.tight.to_string());
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        writeln!(f, "{verdict} {} spec={} family: {}", self.bound_source, self.spec, self.filter)?;
        writeln!(f, "  bound        {}", self.bound)?;
        if self.empty {
            writeln!(f, "  observed max (empty family)")?;
        } else {
            writeln!(f, "  observed max {} ({} maximizers{})", self.observed_max, self.maximizers, if self.tight { ", tight" } else { "" })?;
        }
        writeln!(f, "  scanned      {} graphs, {} in family", self.graphs_scanned, self.family_size)?;
        if !self.witness_graphs.is_empty() {
            writeln!(f, "  witnesses    {}", self.witness_graphs.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
struct SpecTally {
    max: Option<Count>,
    maximizers: u64,
    witnesses: Vec<String>,
}

#[derive(Debug, Clone, Default)]
struct ScanTally {
    scanned: u64,
    family: u64,
    per_spec: Vec<SpecTally>,
}

impl ScanTally {
    fn new(specs: usize) -> Self {
        ScanTally { per_spec: vec![SpecTally::default(); specs], ..Default::default() }
    }

    fn visit(&mut self, g: &Graph, filter: &FamilyFilter, specs: &[PartSpec], cap: usize) {
        self.scanned += 1;
        if !filter.accepts(g) {
            return;
        }
        self.family += 1;
        for (tally, spec) in self.per_spec.iter_mut().zip(specs) {
            let count = count_copies(g, spec);
            match tally.max.as_ref().map(|m| count.cmp(m)) {
                Some(std::cmp::Ordering::Less) => {}
                Some(std::cmp::Ordering::Equal) => {
                    tally.maximizers += 1;
                    if tally.witnesses.len() < cap {
                        tally.witnesses.push(to_graph6(g));
                    }
                }
                _ => {
                    tally.max = Some(count);
                    tally.maximizers = 1;
                    tally.witnesses = vec![to_graph6(g)];
                }
            }
        }
    }

    /// Combines tallies of two consecutive stretches of the scan; `self`
    /// covers the earlier one.
    fn merge(mut self, later: ScanTally, cap: usize) -> ScanTally {
        self.scanned += later.scanned;
        self.family += later.family;
        for (a, b) in self.per_spec.iter_mut().zip(later.per_spec) {
            match (a.max.as_ref(), b.max.as_ref()) {
                (_, None) => {}
                (None, Some(_)) => *a = b,
                (Some(x), Some(y)) if y > x => *a = b,
                (Some(x), Some(y)) if y == x => {
                    a.maximizers += b.maximizers;
                    let room = cap.saturating_sub(a.witnesses.len());
                    a.witnesses.extend(b.witnesses.into_iter().take(room));
                }
                _ => {}
            }
        }
        self
    }
}

/// Bits of the edge mask fixed per chunk when splitting the labeled scan.
fn chunk_bits_for(n: usize) -> u32 {
    (pair_count(n) as u32).min(6)
}

fn scan(filter: &FamilyFilter, specs: &[PartSpec], source: GraphSource<'_>, opts: ScanOptions) -> Result<ScanTally> {
    let cap = opts.witness_cap;
    let run = || -> Result<ScanTally> {
        match source {
            GraphSource::Labeled => {
                let n = filter.order;
                check_enumerable(n)?;
                let bits = chunk_bits_for(n);
                let parts: Vec<Result<ScanTally>> = (0..1u64 << bits)
                    .into_par_iter()
                    .map(|chunk| {
                        let mut t = ScanTally::new(specs.len());
                        enumerate_labeled_chunk(n, chunk, bits, |_, g| t.visit(g, filter, specs, cap))?;
                        Ok(t)
                    })
                    .collect();
                let mut acc = ScanTally::new(specs.len());
                for p in parts {
                    acc = acc.merge(p?, cap);
                }
                Ok(acc)
            }
            GraphSource::Graphs(graphs) => {
                let parts: Vec<ScanTally> = graphs
                    .par_chunks(256)
                    .map(|chunk| {
                        let mut t = ScanTally::new(specs.len());
                        for g in chunk {
                            t.visit(g, filter, specs, cap);
                        }
                        t
                    })
                    .collect();
                Ok(parts.into_iter().fold(ScanTally::new(specs.len()), |a, b| a.merge(b, cap)))
            }
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParams(format!("cannot start worker pool: {e}")))?;
    pool.install(run)
}

/// Scans one family for several templates at once and compares each
/// observed maximum with its bound.
pub fn verify_bounds(
    filter: &FamilyFilter,
    specs: &[PartSpec],
    source: &BoundSource,
    graphs: GraphSource<'_>,
    opts: ScanOptions,
) -> Result<Vec<VerificationReport>> {
    if !filter.has_structural_constraint() {
        return Err(Error::InvalidParams("the family filter needs at least one structural constraint".into()));
    }
    let bounds = specs
        .iter()
        .map(|spec| match source {
            BoundSource::Theorem(t) => bound(*t, &filter.theorem_inputs(*t, spec)?),
            BoundSource::Explicit { value, .. } => Ok(value.clone()),
        })
        .collect::<Result<Vec<_>>>()?;
    let tally = scan(filter, specs, graphs, opts)?;
    Ok(specs
        .iter()
        .zip(bounds)
        .zip(tally.per_spec)
        .map(|((spec, bound), t)| {
            let empty = t.max.is_none();
            let observed_max = t.max.unwrap_or_default();
            VerificationReport {
                filter: filter.clone(),
                spec: spec.clone(),
                bound_source: source.to_string(),
                pass: observed_max <= bound,
                tight: !empty && observed_max == bound,
                bound,
                observed_max,
                maximizers: t.maximizers,
                witness_graphs: t.witnesses,
                graphs_scanned: tally.scanned,
                family_size: tally.family,
                empty,
            }
        })
        .collect())
}

/// Certifies `theorem` for one template over every labeled graph admitted
/// by `filter`.
pub fn verify_bound(filter: &FamilyFilter, spec: &PartSpec, theorem: TheoremId) -> Result<VerificationReport> {
    let mut reports = verify_bounds(filter, std::slice::from_ref(spec), &BoundSource::Theorem(theorem), GraphSource::Labeled, ScanOptions::default())?;
    Ok(reports.remove(0))
}
