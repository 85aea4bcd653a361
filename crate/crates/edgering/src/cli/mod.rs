//! Command-line front end: graph ingestion, analysis reports, corpus
//! sweeps and the lemma verifiers.
//!
//! # Edge-list file format
//!
//! The first non-comment line is `"N M"`; the following M lines are
//! `"u v"` with 1-based vertex labels. Lines starting with `#` and blank
//! lines are ignored; LF and CRLF both work. The inline literal form is
//! `"N;u-v,u-v,…"`.
//!
//! # Exit codes
//!
//! 0 ok · 1 counterexample found · 2 parse error · 3 disconnected graph ·
//! 4 resource guard violation.

pub mod verify;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    classify_structure, enumerate_connected_graphs, find_special_subgraphs, GraphError,
    SimpleGraph, SubgraphKind,
};
use crate::polytope::{edge_polytope, PolytopeError};
use crate::toric::{ideal_summary, linearity_verdict, truncated_betti, ToricError};

pub use verify::{cmd_verify, Counterexample, LemmaId, VerificationResult, VerifyParams};

/// Default truncation bound for minimal generator search.
pub const DEFAULT_QMAX: usize = 6;
/// Default truncation bound for first syzygies.
pub const DEFAULT_JMAX: usize = 8;
/// Default corpus bound.
pub const DEFAULT_MAX_N: usize = 6;
/// Hard corpus guard for the sweep and verifier commands.
pub const CORPUS_GUARD: usize = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is not connected; components: {components:?}")]
    Disconnected { components: Vec<Vec<usize>> },
    #[error("resource guard: {0}")]
    Guard(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Disconnected { .. } => 3,
            CliError::Guard(_) => 4,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<PolytopeError> for CliError {
    fn from(e: PolytopeError) -> Self {
        match e {
            PolytopeError::Disconnected(components) => CliError::Disconnected { components },
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<ToricError> for CliError {
    fn from(e: ToricError) -> Self {
        match e {
            ToricError::Polytope(PolytopeError::Disconnected(components)) => {
                CliError::Disconnected { components }
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Internal(e.to_string())
    }
}

/// Parses the edge-list text format, reporting 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, CliError> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, line)
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let a: usize =
            parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| CliError::Parse {
                    line: line_no,
                    message: format!("expected two integers, got {line:?}"),
                })?;
        let b: usize =
            parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| CliError::Parse {
                    line: line_no,
                    message: format!("expected two integers, got {line:?}"),
                })?;
        if parts.next().is_some() {
            return Err(CliError::Parse {
                line: line_no,
                message: format!("trailing tokens after two integers in {line:?}"),
            });
        }
        if header.is_none() {
            header = Some((a, b, line_no));
        } else {
            edges.push((a, b));
            edge_lines.push(line_no);
        }
    }
    let (n, m, header_line) = header.ok_or(CliError::Parse {
        line: 1,
        message: "missing \"N M\" header".into(),
    })?;
    if edges.len() != m {
        return Err(CliError::Parse {
            line: header_line,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    SimpleGraph::new(n, &edges).map_err(|e| graph_error_with_line(e, header_line, &edge_lines))
}

fn graph_error_with_line(e: GraphError, header_line: usize, edge_lines: &[usize]) -> CliError {
    let at = |pos: usize| edge_lines.get(pos).copied().unwrap_or(header_line);
    match e {
        GraphError::Loop(u, v, pos) => CliError::Parse {
            line: at(pos),
            message: format!("loop {{{u},{v}}} at line {}", at(pos)),
        },
        GraphError::DuplicateEdge(u, v, pos) => CliError::Parse {
            line: at(pos),
            message: format!("duplicate edge {{{u},{v}}} at line {}", at(pos)),
        },
        GraphError::VertexOutOfRange(u, v, pos, n) => CliError::Parse {
            line: at(pos),
            message: format!("edge {{{u},{v}}} out of range 1..={n} at line {}", at(pos)),
        },
        GraphError::EmptyEdgeList => CliError::Parse {
            line: header_line,
            message: "edge list is empty".into(),
        },
        other => CliError::Parse {
            line: header_line,
            message: other.to_string(),
        },
    }
}

/// Parses the inline literal `"N;u-v,u-v,…"`.
pub fn parse_inline(lit: &str) -> Result<SimpleGraph, CliError> {
    let bad = |message: String| CliError::Parse { line: 1, message };
    let (n_str, edges_str) = lit
        .split_once(';')
        .ok_or_else(|| bad("expected \"N;u-v,...\"".into()))?;
    let n: usize = n_str
        .trim()
        .parse()
        .map_err(|_| bad(format!("bad vertex count {n_str:?}")))?;
    let mut edges = Vec::new();
    for part in edges_str.split(',') {
        let part = part.trim();
        let (u, v) = part
            .split_once('-')
            .ok_or_else(|| bad(format!("bad edge literal {part:?}")))?;
        let u: usize = u.parse().map_err(|_| bad(format!("bad vertex {u:?}")))?;
        let v: usize = v.parse().map_err(|_| bad(format!("bad vertex {v:?}")))?;
        edges.push((u, v));
    }
    SimpleGraph::new(n, &edges).map_err(|e| graph_error_with_line(e, 1, &vec![1; edges.len()]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaBlock {
    pub version: String,
    pub qmax: usize,
    pub jmax: usize,
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphBlock {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    pub bipartite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeBlock {
    pub ambient_dim: usize,
    pub dim: usize,
    pub delta: Vec<u64>,
    pub polynomial: String,
    pub degree: usize,
    pub codegree: usize,
    pub ehrhart: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealBlock {
    pub ring_dim: usize,
    pub codim: usize,
    pub mu: BTreeMap<usize, u64>,
    pub betti2: BTreeMap<usize, u64>,
    pub generator_degrees: Vec<usize>,
    pub hypersurface: bool,
    pub linearity: BTreeMap<usize, bool>,
    pub eg_checks: Vec<EgCheckBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgCheckBlock {
    pub q: usize,
    pub expected: u64,
    pub observed: u64,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsBlock {
    pub has_four_cycle: bool,
    pub triangle_count: usize,
    pub disjoint_odd_cycles: bool,
    pub odd_cycles_pairwise_intersect: bool,
    pub bowtie_occurrences: usize,
    pub friendship_occurrences: usize,
    /// Chorded even cycle occurrences as (k, ℓ, count), sorted.
    pub chorded_even_cycles: Vec<(usize, usize, usize)>,
}

/// Full analysis record of one connected graph; serializes to the stable
/// JSON schema (v1) and round-trips losslessly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: GraphBlock,
    pub polytope: PolytopeBlock,
    pub ideal: IdealBlock,
    pub flags: FlagsBlock,
    pub meta: MetaBlock,
}

/// Analyzes a connected graph: polytope data, truncated ideal data,
/// structure flags.
pub fn analyze(g: &SimpleGraph, qmax: usize, jmax: usize) -> Result<AnalysisReport, CliError> {
    if !g.is_connected() {
        return Err(CliError::Disconnected {
            components: g.components(),
        });
    }
    let p = edge_polytope(g)?;
    let delta = p.delta_polynomial()?;
    let summary = ideal_summary(g, qmax, jmax)?;
    let betti = truncated_betti(g, qmax, jmax)?;
    let mut linearity = BTreeMap::new();
    for q in 2..=qmax.min(jmax.saturating_sub(2)) {
        linearity.insert(q, linearity_verdict(&betti, q)?);
    }
    let report = classify_structure(g);
    let special = find_special_subgraphs(g);
    let mut chorded: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut bowties = 0;
    let mut friendships = 0;
    for s in &special {
        match s.kind {
            SubgraphKind::Bowtie => bowties += 1,
            SubgraphKind::Friendship3 => friendships += 1,
            SubgraphKind::ChordedEvenCycle { k, ell } => *chorded.entry((k, ell)).or_insert(0) += 1,
        }
    }
    Ok(AnalysisReport {
        graph: GraphBlock {
            n: g.n(),
            m: g.edge_count(),
            edges: g.edges().to_vec(),
            connected: true,
            bipartite: g.is_bipartite(),
        },
        polytope: PolytopeBlock {
            ambient_dim: p.ambient_dim(),
            dim: p.dim(),
            delta: delta.coefficients().to_vec(),
            polynomial: delta.to_string(),
            degree: delta.degree(),
            codegree: delta.codegree(),
            ehrhart: delta.ehrhart_counts().to_vec(),
        },
        ideal: IdealBlock {
            ring_dim: summary.ring_dim,
            codim: summary.codim,
            mu: betti.mu().clone(),
            betti2: betti.beta2().clone(),
            generator_degrees: summary.generator_degrees.clone(),
            hypersurface: summary.hypersurface,
            linearity,
            eg_checks: summary
                .eg_checks
                .iter()
                .map(|c| EgCheckBlock {
                    q: c.q,
                    expected: c.expected,
                    observed: c.observed,
                    matches: c.matches,
                })
                .collect(),
        },
        flags: FlagsBlock {
            has_four_cycle: report.has_four_cycle,
            triangle_count: report.triangle_count,
            disjoint_odd_cycles: crate::graph::disjoint_odd_cycle_pair(g).is_some(),
            odd_cycles_pairwise_intersect: crate::graph::odd_cycles_pairwise_intersect(g),
            bowtie_occurrences: bowties,
            friendship_occurrences: friendships,
            chorded_even_cycles: chorded.into_iter().map(|((k, l), c)| (k, l, c)).collect(),
        },
        meta: MetaBlock {
            version: "1".into(),
            qmax,
            jmax,
            truncated: true,
        },
    })
}

/// One line of the corpus sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub index: usize,
    pub n: usize,
    pub m: usize,
    pub has_four_cycle: bool,
    pub degree: Option<usize>,
    pub codegree: Option<usize>,
    pub delta: Option<Vec<u64>>,
    pub mu: Option<BTreeMap<usize, u64>>,
    pub codim: Option<usize>,
    pub hypersurface: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub max_n: usize,
    pub which: String,
    pub graphs: usize,
    pub rows: Vec<CorpusRow>,
    pub four_cycle_count: usize,
    pub hypersurface_count: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusScope {
    All,
    Polytope,
    Ideal,
}

impl std::str::FromStr for CorpusScope {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(CorpusScope::All),
            "polytope" => Ok(CorpusScope::Polytope),
            "ideal" => Ok(CorpusScope::Ideal),
            other => Err(format!("unknown scope {other:?}")),
        }
    }
}

/// Sweeps the connected corpus up to `max_n` (hard guard at 7). Rows come
/// out in deterministic corpus order regardless of parallel evaluation.
pub fn cmd_corpus(
    max_n: usize,
    which: CorpusScope,
    qmax: usize,
) -> Result<CorpusSummary, CliError> {
    if max_n > CORPUS_GUARD {
        return Err(CliError::Guard(format!(
            "corpus sweeps are limited to max_n ≤ {CORPUS_GUARD}, got {max_n}"
        )));
    }
    let corpus = enumerate_connected_graphs(max_n)?;
    use rayon::prelude::*;
    let rows: Vec<CorpusRow> = corpus
        .graphs()
        .par_iter()
        .enumerate()
        .map(|(index, g)| -> Result<CorpusRow, CliError> {
            let structure = classify_structure(g);
            let mut row = CorpusRow {
                index,
                n: g.n(),
                m: g.edge_count(),
                has_four_cycle: structure.has_four_cycle,
                degree: None,
                codegree: None,
                delta: None,
                mu: None,
                codim: None,
                hypersurface: None,
            };
            if g.edge_count() == 0 {
                return Ok(row);
            }
            if matches!(which, CorpusScope::All | CorpusScope::Polytope) {
                let delta = edge_polytope(g)?.delta_polynomial()?;
                row.degree = Some(delta.degree());
                row.codegree = Some(delta.codegree());
                row.delta = Some(delta.coefficients().to_vec());
            }
            if matches!(which, CorpusScope::All | CorpusScope::Ideal) {
                let summary = ideal_summary(g, qmax, qmax + 2)?;
                row.mu = Some(
                    crate::toric::minimal_generators(g, qmax)?
                        .mu()
                        .into_iter()
                        .filter(|&(_, v)| v > 0)
                        .collect(),
                );
                row.codim = Some(summary.codim);
                row.hypersurface = Some(summary.hypersurface);
            }
            Ok(row)
        })
        .collect::<Result<_, _>>()?;

    let four_cycle_count = rows.iter().filter(|r| r.has_four_cycle).count();
    let hypersurface_count = rows.iter().filter(|r| r.hypersurface == Some(true)).count();
    let mut degree_histogram = BTreeMap::new();
    for r in &rows {
        if let Some(d) = r.degree {
            *degree_histogram.entry(d).or_insert(0) += 1;
        }
    }
    Ok(CorpusSummary {
        max_n,
        which: match which {
            CorpusScope::All => "all",
            CorpusScope::Polytope => "polytope",
            CorpusScope::Ideal => "ideal",
        }
        .into(),
        graphs: rows.len(),
        rows,
        four_cycle_count,
        hypersurface_count,
        degree_histogram,
    })
}

/// Aligned ASCII rendering of an analysis report.
pub fn report_table(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!(
        "graph      n={} m={} bipartite={}",
        r.graph.n, r.graph.m, r.graph.bipartite
    ));
    line(format!(
        "polytope   dim={} delta={:?} degree={} codegree={}",
        r.polytope.dim, r.polytope.delta, r.polytope.degree, r.polytope.codegree
    ));
    line(format!("           δ(P,λ) = {}", r.polytope.polynomial));
    line(format!(
        "           ehrhart L(0..d) = {:?}",
        r.polytope.ehrhart
    ));
    let mu: Vec<String> = r
        .ideal
        .mu
        .iter()
        .filter(|(_, &v)| v > 0)
        .map(|(q, v)| format!("μ_{q}={v}"))
        .collect();
    line(format!(
        "ideal      codim={} hypersurface={} {}",
        r.ideal.codim,
        r.ideal.hypersurface,
        if mu.is_empty() {
            "μ=0".into()
        } else {
            mu.join(" ")
        }
    ));
    let beta: Vec<String> = r
        .ideal
        .betti2
        .iter()
        .filter(|(_, &v)| v > 0)
        .map(|(j, v)| format!("β_2,{j}={v}"))
        .collect();
    line(format!(
        "           {}",
        if beta.is_empty() {
            "β_2 = 0 (within bounds)".into()
        } else {
            beta.join(" ")
        }
    ));
    let lin: Vec<String> = r
        .ideal
        .linearity
        .iter()
        .map(|(q, v)| format!("{q}-linear:{v}"))
        .collect();
    line(format!("           {}", lin.join(" ")));
    line(format!(
        "flags      4cycle={} triangles={} disjoint_odd={} pairwise_odd_intersect={}",
        r.flags.has_four_cycle,
        r.flags.triangle_count,
        r.flags.disjoint_odd_cycles,
        r.flags.odd_cycles_pairwise_intersect
    ));
    line(format!(
        "           bowties={} friendships={} chorded_even={:?}",
        r.flags.bowtie_occurrences, r.flags.friendship_occurrences, r.flags.chorded_even_cycles
    ));
    out
}

/// Aligned ASCII rendering of a corpus summary.
pub fn corpus_table(s: &CorpusSummary) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>5} {:>2} {:>2} {:>6} {:>4} {:>6} {:>12} {:>6} {:>5}\n",
        "idx", "n", "m", "4cyc", "deg", "codeg", "mu", "codim", "hyp"
    ));
    for r in &s.rows {
        let mu =
            r.mu.as_ref()
                .map(|m| {
                    if m.is_empty() {
                        "0".to_string()
                    } else {
                        m.iter()
                            .map(|(q, v)| format!("{q}:{v}"))
                            .collect::<Vec<_>>()
                            .join(",")
                    }
                })
                .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{:>5} {:>2} {:>2} {:>6} {:>4} {:>6} {:>12} {:>6} {:>5}\n",
            r.index,
            r.n,
            r.m,
            r.has_four_cycle,
            r.degree.map_or("-".into(), |v| v.to_string()),
            r.codegree.map_or("-".into(), |v| v.to_string()),
            mu,
            r.codim.map_or("-".into(), |v| v.to_string()),
            r.hypersurface.map_or("-".into(), |v| v.to_string()),
        ));
    }
    out.push_str(&format!(
        "graphs={} with_4cycle={} hypersurfaces={} degree_histogram={:?}\n",
        s.graphs, s.four_cycle_count, s.hypersurface_count, s.degree_histogram
    ));
    out
}

#[cfg(test)]
mod tests;
