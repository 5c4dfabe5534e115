//! The full reproduction run: every property suite at configurable caps,
//! summarized per suite.
//!
//! Instances are generated sequentially from the seed and checked in
//! parallel with order-preserving collection, so the summary is identical
//! for any worker count.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::connectivity::edge_connectivity;
use crate::constructions::{bridge_graph, random_connected_graph, BridgeFamilyParams};
use crate::enumerate::{enumerate_connected, MAX_BUILTIN_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::sig12_opt;
use crate::search::extremal_search_all;
use crate::spectra::perron_of;
use crate::verify::{
    check_cut_order_bound, check_degree_r_reduction, check_edge_monotonicity, check_hub_equation,
    check_quadratic_difference, check_transformation, perron_order_with, CutOrderVerdict,
    NeighborhoodRelation,
};

const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];
const MAX_PERRON_ORDER_N: usize = 7;
const MAX_REPORTED_FAILURES: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest order for the exhaustive suites (at most 8).
    pub max_n: usize,
    pub random_graphs: usize,
    pub max_random_order: usize,
    pub max_bridge_r: usize,
    /// Random cross-edge placements per mixed bridge instance.
    pub placements: usize,
    /// Marks one instance as failed, to exercise the failure path.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            max_n: MAX_BUILTIN_ORDER,
            random_graphs: 200,
            max_random_order: 20,
            max_bridge_r: 4,
            placements: 5,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub instances: usize,
    pub inapplicable: usize,
    pub failures: usize,
    /// Smallest margin seen on a strict claim (suite-specific units).
    #[serde(with = "sig12_opt")]
    pub min_margin: Option<f64>,
    /// Largest identity residual seen.
    #[serde(with = "sig12_opt")]
    pub max_residual: Option<f64>,
    pub first_failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult {
            name: name.into(),
            instances: 0,
            inapplicable: 0,
            failures: 0,
            min_margin: None,
            max_residual: None,
            first_failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.first_failures.len() < MAX_REPORTED_FAILURES {
                self.first_failures.push(describe());
            }
        }
    }

    fn margin(&mut self, m: f64) {
        self.min_margin = Some(self.min_margin.map_or(m, |x| x.min(m)));
    }

    fn residual(&mut self, r: f64) {
        self.max_residual = Some(self.max_residual.map_or(r, |x| x.max(r)));
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyAllReport {
    pub config: VerifyConfig,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

impl VerifyAllReport {
    /// Fixed-width table, one line per suite.
    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "{:<28} {:>9} {:>9} {:>8}  {}\n",
            "suite", "instances", "skipped", "failed", "status"
        );
        for s in &self.suites {
            out.push_str(&format!(
                "{:<28} {:>9} {:>9} {:>8}  {}\n",
                s.name,
                s.instances,
                s.inapplicable,
                s.failures,
                if s.passed() { "PASS" } else { "FAIL" }
            ));
        }
        out
    }
}

/// Random connected graphs for the edge-toggle suite.
pub fn random_graph_sample(cfg: &VerifyConfig) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.random_graphs)
        .map(|_| {
            let n = rng.random_range(3..=cfg.max_random_order.max(3));
            let p = *EDGE_PROBABILITIES.choose(&mut rng).expect("non-empty");
            random_connected_graph(n, p, &mut rng)
        })
        .collect()
}

/// Two-clique instances: `r` in `1..=max_bridge_r`, `t` in `1..=r`,
/// `n1, n2` in `r+2..=r+6`; one instance when `t = r`, otherwise
/// `placements` random cross-edge placements.
pub fn bridge_grid(cfg: &VerifyConfig) -> Result<Vec<BridgeFamilyParams>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let mut out = Vec::new();
    for r in 1..=cfg.max_bridge_r {
        for t in 1..=r {
            for n1 in r + 2..=r + 6 {
                for n2 in r + 2..=r + 6 {
                    if t == r {
                        out.push(BridgeFamilyParams::hub_only(n1, n2, r)?);
                    } else {
                        for _ in 0..cfg.placements {
                            out.push(BridgeFamilyParams::with_random_cross_edges(
                                n1, n2, r, t, &mut rng,
                            )?);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn theorem_suite(corpora: &[Vec<Graph>], max_n: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("extremal_theorem");
    for n in 3..=max_n {
        for rep in extremal_search_all(n, Some(&corpora[n - 1]))? {
            if let Some(gap) = rep.uniqueness_gap {
                s.margin(gap);
            }
            s.record(rep.confirms_kpq(), || format!("{rep:?}"));
        }
    }
    Ok(s)
}

fn monotonicity_suite(graphs: &[Graph]) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("edge_monotonicity");
    let per_graph: Vec<Result<Vec<Option<_>>>> = graphs
        .par_iter()
        .map(|g| {
            let n = g.order();
            let mut out = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    match check_edge_monotonicity(g, u, v) {
                        Ok(verdict) => out.push(Some(verdict)),
                        Err(Error::Inapplicable(_)) => out.push(None),
                        Err(e) => return Err(e),
                    }
                }
            }
            Ok(out)
        })
        .collect();
    for verdicts in per_graph {
        for verdict in verdicts? {
            match verdict {
                None => s.inapplicable += 1,
                Some(v) => {
                    s.margin(v.relative_margin());
                    s.record(v.holds, || format!("{v:?}"));
                }
            }
        }
    }
    Ok(s)
}

fn perron_order_suite(corpora: &[Vec<Graph>], max_n: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("perron_order");
    for corpus in corpora.iter().take(max_n.min(MAX_PERRON_ORDER_N)) {
        let per_graph: Vec<Result<Vec<_>>> = corpus
            .par_iter()
            .map(|g| {
                let pp = perron_of(g)?;
                let n = g.order();
                Ok((0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .map(|(u, v)| perron_order_with(g, &pp, u, v))
                    .collect())
            })
            .collect();
        for verdicts in per_graph {
            for v in verdicts? {
                match v.relation {
                    NeighborhoodRelation::Incomparable => s.inapplicable += 1,
                    NeighborhoodRelation::Equal => s.record(v.holds, || format!("{v:?}")),
                    _ => {
                        s.margin((v.x_u - v.x_v).abs());
                        s.record(v.holds, || format!("{v:?}"));
                    }
                }
            }
        }
    }
    Ok(s)
}

fn degree_reduction_suite(corpora: &[Vec<Graph>], max_n: usize) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("degree_reduction");
    for corpus in corpora.iter().take(max_n.min(MAX_PERRON_ORDER_N)).skip(2) {
        let per_graph: Vec<Result<Vec<_>>> = corpus
            .par_iter()
            .map(|g| {
                let n = g.order();
                let r = edge_connectivity(g)?.size;
                if r + 2 > n {
                    return Ok(Vec::new());
                }
                (0..n)
                    .filter(|&v| g.degree(v) == r)
                    .map(|v| check_degree_r_reduction(g, v))
                    .collect()
            })
            .collect();
        for verdicts in per_graph {
            for v in verdicts? {
                if v.verdict.margin > 0.0 {
                    s.margin(v.verdict.relative_margin());
                }
                s.record(v.holds(), || format!("{v:?}"));
            }
        }
    }
    Ok(s)
}

fn transformation_suite(grid: &[BridgeFamilyParams]) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("clique_bridge_transform");
    let verdicts: Vec<_> = grid
        .par_iter()
        .map(check_transformation)
        .collect::<Result<_>>()?;
    for v in verdicts {
        s.margin(v.verdict.relative_margin());
        s.record(v.holds(), || format!("{v:?}"));
    }
    Ok(s)
}

fn quadratic_difference_suite(grid: &[BridgeFamilyParams]) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("quadratic_difference");
    let hub_only: Vec<_> = grid.iter().filter(|p| p.t == p.r).collect();
    let checks: Vec<_> = hub_only
        .par_iter()
        .map(|p| check_quadratic_difference(p))
        .collect::<Result<_>>()?;
    for c in checks {
        s.residual(c.residual);
        s.record(c.holds(), || format!("{c:?}"));
    }
    Ok(s)
}

fn hub_equation_suite(grid: &[BridgeFamilyParams]) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("hub_equation");
    let checks: Vec<_> = grid
        .par_iter()
        .map(check_hub_equation)
        .collect::<Result<_>>()?;
    for c in checks {
        s.residual(c.residual);
        s.margin(c.hub_bound - c.levels.hub);
        s.record(c.holds(), || format!("{c:?}"));
    }
    Ok(s)
}

fn cut_order_suite(
    corpora: &[Vec<Graph>],
    grid: &[BridgeFamilyParams],
    max_n: usize,
) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("cut_order_bound");
    let mut graphs: Vec<Graph> = corpora
        .iter()
        .take(max_n)
        .skip(1)
        .flatten()
        .cloned()
        .collect();
    for p in grid {
        graphs.push(bridge_graph(p)?);
    }
    let verdicts: Vec<_> = graphs
        .par_iter()
        .map(check_cut_order_bound)
        .collect::<Result<_>>()?;
    for v in verdicts {
        match v {
            CutOrderVerdict::Inapplicable { .. } => s.inapplicable += 1,
            CutOrderVerdict::Checked { .. } => s.record(v.holds(), || format!("{v:?}")),
        }
    }
    Ok(s)
}

/// Runs every suite. Errors are internal failures such as non-convergence;
/// failed claims are reported in the summary instead.
pub fn verify_all(cfg: &VerifyConfig) -> Result<VerifyAllReport> {
    if cfg.max_n < 3 || cfg.max_n > MAX_BUILTIN_ORDER {
        return Err(Error::InvalidParams(format!(
            "max_n must lie in 3..={MAX_BUILTIN_ORDER}, got {}",
            cfg.max_n
        )));
    }
    if cfg.max_random_order > crate::graph::MAX_ORDER {
        return Err(Error::OrderOutOfRange(cfg.max_random_order));
    }
    let corpora: Vec<Vec<Graph>> = (1..=cfg.max_n)
        .map(enumerate_connected)
        .collect::<Result<_>>()?;
    let randoms = random_graph_sample(cfg)?;
    let grid = bridge_grid(cfg)?;
    log::info!(
        "verifying with {} enumerated classes, {} random graphs, {} bridge instances",
        corpora.iter().map(Vec::len).sum::<usize>(),
        randoms.len(),
        grid.len()
    );

    let mut suites = vec![
        theorem_suite(&corpora, cfg.max_n)?,
        monotonicity_suite(&randoms)?,
        perron_order_suite(&corpora, cfg.max_n)?,
        degree_reduction_suite(&corpora, cfg.max_n)?,
        transformation_suite(&grid)?,
        quadratic_difference_suite(&grid)?,
        hub_equation_suite(&grid)?,
        cut_order_suite(&corpora, &grid, cfg.max_n)?,
    ];
    if cfg.inject_fault {
        suites[0].record(false, || "injected fault".into());
    }
    let passed = suites.iter().all(SuiteResult::passed);
    Ok(VerifyAllReport {
        config: cfg.clone(),
        suites,
        passed,
    })
}
