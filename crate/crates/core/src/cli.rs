//! Command implementations behind the `picard0n` binary.
//!
//! Every command renders to a complete output string so the binary stays
//! a thin argument-parsing shell and the behavior is testable in-process.
//! JSON objects keep their keys in alphabetical order; re-serializing
//! parsed output therefore reproduces the exact bytes.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::basis::{dimension, nonadjacent_basis};
use crate::cyclic::CyclicOrder;
use crate::decompose::decompose;
use crate::divisor::{enumerate_divisors, num_divisors, BoundaryDivisor};
use crate::error::{Error, Result};
use crate::expansion::expand;
use crate::relations::relation_matrix;
use crate::subset::MarkedSubset;
use crate::verify::{oracle_sweep, rank_check, relations_sweep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Per-invocation configuration shared by the commands.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub format: Format,
    /// Explicit cyclic order; defaults to the standard one.
    pub order: Option<Vec<usize>>,
    /// Seed for randomized sweeps; echoed in every verify report.
    pub seed: u64,
}

impl RunConfig {
    fn order_for(&self, n: usize) -> Result<CyclicOrder> {
        match &self.order {
            Some(labels) => CyclicOrder::new(labels),
            None => CyclicOrder::standard(n),
        }
    }
}

/// Parses a comma-separated label list such as `1,4,6`.
pub fn parse_labels(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|piece| piece.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<usize>, _>>()
        .map_err(|_| Error::BadLabelList {
            text: text.to_string(),
        })
}

#[derive(Serialize, Deserialize)]
struct DimOutput {
    dimension: usize,
    n: usize,
    num_divisors: usize,
}

pub fn cmd_dim(n: usize, cfg: &RunConfig) -> Result<String> {
    // formulas only, but keep the same bounds as the enumeration
    crate::subset::check_points(n)?;
    let out = DimOutput {
        dimension: dimension(n)?,
        n,
        num_divisors: num_divisors(n),
    };
    Ok(match cfg.format {
        Format::Text => format!(
            "n={} num_divisors={} dimension={}",
            out.n, out.num_divisors, out.dimension
        ),
        Format::Json => to_json(&out),
    })
}

#[derive(Serialize, Deserialize)]
struct EnumerateOutput {
    count: usize,
    divisors: Vec<Vec<usize>>,
    n: usize,
}

pub fn cmd_enumerate(n: usize, cfg: &RunConfig) -> Result<String> {
    let divisors = enumerate_divisors(n)?;
    match cfg.format {
        Format::Text => {
            let mut out = String::new();
            for d in &divisors {
                writeln!(out, "{d}").unwrap();
            }
            out.pop();
            Ok(out)
        }
        Format::Json => Ok(to_json(&EnumerateOutput {
            count: divisors.len(),
            divisors: divisors.iter().map(|d| d.rep().labels()).collect(),
            n,
        })),
    }
}

#[derive(Serialize, Deserialize)]
struct DecomposeOutput {
    blocks: Vec<Vec<usize>>,
    gaps: Vec<Vec<usize>>,
    k: usize,
    n: usize,
    order: Vec<usize>,
    signature: String,
    subset: Vec<usize>,
}

pub fn cmd_decompose(n: usize, subset: &[usize], cfg: &RunConfig) -> Result<String> {
    let order = cfg.order_for(n)?;
    let d = BoundaryDivisor::from_labels(n, subset)?;
    let dec = decompose(&d, &order)?;
    let out = DecomposeOutput {
        blocks: dec.blocks().to_vec(),
        gaps: dec.gaps().to_vec(),
        k: dec.k(),
        n,
        order: order.arrangement().to_vec(),
        signature: dec.signature(),
        subset: d.rep().labels(),
    };
    Ok(match cfg.format {
        Format::Text => format!("{} k={} {}", d, out.k, out.signature),
        Format::Json => to_json(&out),
    })
}

#[derive(Serialize, Deserialize)]
struct BasisOutput {
    dimension: usize,
    elements: Vec<Vec<usize>>,
    n: usize,
    order: Vec<usize>,
}

pub fn cmd_basis(n: usize, cfg: &RunConfig) -> Result<String> {
    let order = cfg.order_for(n)?;
    let basis = nonadjacent_basis(&order)?;
    match cfg.format {
        Format::Text => {
            let mut out = String::new();
            for d in basis.elements() {
                writeln!(out, "{d}").unwrap();
            }
            out.pop();
            Ok(out)
        }
        Format::Json => Ok(to_json(&BasisOutput {
            dimension: basis.len(),
            elements: basis.elements().iter().map(|d| d.rep().labels()).collect(),
            n,
            order: order.arrangement().to_vec(),
        })),
    }
}

#[derive(Serialize, Deserialize)]
struct ExpandTerm {
    coeff: i64,
    subset: Vec<usize>,
}

pub fn cmd_expand(n: usize, subset: &[usize], cfg: &RunConfig) -> Result<String> {
    let order = cfg.order_for(n)?;
    let d = BoundaryDivisor::from_labels(n, subset)?;
    let basis = nonadjacent_basis(&order)?;
    let v = expand(&d, &basis)?;
    match cfg.format {
        Format::Text => Ok(v.to_string()),
        Format::Json => {
            let terms: Vec<ExpandTerm> = v
                .terms()
                .map(|(j, c)| ExpandTerm {
                    coeff: c,
                    subset: j.rep().labels(),
                })
                .collect();
            Ok(to_json(&terms))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Oracle,
    Relations,
    Rank,
    All,
}

/// Per-mode caps on `n` for the verify command.
pub const VERIFY_ORACLE_MAX_POINTS: usize = 12;
pub const VERIFY_RELATIONS_MAX_POINTS: usize = 8;
pub const VERIFY_RANK_MAX_POINTS: usize = 8;

const VERIFY_ORACLE_RANDOM_ORDERS: usize = 10;
const VERIFY_RELATIONS_RANDOM_ORDERS: usize = 5;

#[derive(Serialize, Deserialize)]
struct VerifyOutput {
    n: usize,
    oracle: Option<crate::verify::OracleReport>,
    pass: bool,
    rank: Option<crate::verify::RankReport>,
    relations: Option<crate::verify::RelationsReport>,
    seed: u64,
}

/// Runs the requested sweeps. The boolean is the overall PASS/FAIL.
pub fn cmd_verify(n: usize, mode: VerifyMode, cfg: &RunConfig) -> Result<(String, bool)> {
    let want = |m: VerifyMode| mode == m || mode == VerifyMode::All;
    let cap = |what: &'static str, cap: usize| -> Result<()> {
        if n > cap {
            Err(Error::CapExceeded { what, n, cap })
        } else {
            Ok(())
        }
    };
    if n < 4 {
        return Err(Error::TooFewPoints { n, min: 4 });
    }
    if want(VerifyMode::Oracle) {
        cap("verify --mode oracle", VERIFY_ORACLE_MAX_POINTS)?;
    }
    if want(VerifyMode::Relations) {
        cap("verify --mode relations", VERIFY_RELATIONS_MAX_POINTS)?;
    }
    if want(VerifyMode::Rank) {
        cap("verify --mode rank", VERIFY_RANK_MAX_POINTS)?;
    }

    let oracle = want(VerifyMode::Oracle)
        .then(|| oracle_sweep(n, cfg.seed, VERIFY_ORACLE_RANDOM_ORDERS))
        .transpose()?;
    let relations = want(VerifyMode::Relations)
        .then(|| relations_sweep(n, cfg.seed, VERIFY_RELATIONS_RANDOM_ORDERS))
        .transpose()?;
    let rank = want(VerifyMode::Rank).then(|| rank_check(n)).transpose()?;

    let pass = oracle.as_ref().map_or(true, |r| r.passed())
        && relations.as_ref().map_or(true, |r| r.passed())
        && rank.as_ref().map_or(true, |r| r.passed());

    let out = VerifyOutput {
        n,
        oracle,
        pass,
        rank,
        relations,
        seed: cfg.seed,
    };
    let rendered = match cfg.format {
        Format::Json => to_json(&out),
        Format::Text => {
            let mut text = format!("seed={}\n", out.seed);
            if let Some(r) = &out.oracle {
                writeln!(
                    text,
                    "oracle n={}: orders={} checks={} failures={}",
                    r.n,
                    r.orders,
                    r.checks,
                    r.failures.len()
                )
                .unwrap();
                for f in &r.failures {
                    writeln!(
                        text,
                        "  FAIL oracle divisor={:?} order={:?}",
                        f.divisor, f.order
                    )
                    .unwrap();
                }
            }
            if let Some(r) = &out.relations {
                writeln!(
                    text,
                    "relations n={}: orders={} quadruples={} checks={} failures={}",
                    r.n,
                    r.orders,
                    r.quadruples,
                    r.checks,
                    r.failures.len()
                )
                .unwrap();
                for f in &r.failures {
                    writeln!(
                        text,
                        "  FAIL relations quadruple={:?} order={:?}",
                        f.quadruple, f.order
                    )
                    .unwrap();
                }
            }
            if let Some(r) = &out.rank {
                writeln!(
                    text,
                    "rank n={}: rows={} cols={} rank={} expected_rank={} num_divisors={} dimension={} {}",
                    r.n,
                    r.rows,
                    r.cols,
                    r.rank,
                    r.expected_rank,
                    r.num_divisors,
                    r.dimension,
                    if r.ok { "ok" } else { "MISMATCH" }
                )
                .unwrap();
            }
            text.push_str(if out.pass { "PASS" } else { "FAIL" });
            text
        }
    };
    Ok((rendered, pass))
}

#[derive(Serialize, Deserialize)]
struct ExportOutput {
    cols: usize,
    nnz: usize,
    path: String,
    rows: usize,
}

pub fn cmd_export_matrix(n: usize, path: &Path, cfg: &RunConfig) -> Result<String> {
    let m = relation_matrix(n)?;
    let mut buf = Vec::new();
    m.write_coordinate(&mut buf).expect("in-memory write");
    std::fs::write(path, &buf).map_err(|e| Error::Io {
        message: format!("{}: {e}", path.display()),
    })?;
    let out = ExportOutput {
        cols: m.num_cols(),
        nnz: m.nnz(),
        path: path.display().to_string(),
        rows: m.num_rows(),
    };
    Ok(match cfg.format {
        Format::Text => format!(
            "wrote {}: {} rows {} cols {} nonzeros",
            out.path, out.rows, out.cols, out.nnz
        ),
        Format::Json => to_json(&out),
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

/// Validates a subset argument early so usage errors stay crisp.
pub fn parse_subset(n: usize, text: &str) -> Result<MarkedSubset> {
    let labels = parse_labels(text)?;
    MarkedSubset::from_labels(n, &labels)
}
