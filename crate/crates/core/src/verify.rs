//! Numerical checks of the supporting statements: edge monotonicity of the
//! radius, Perron-entry ordering under neighbourhood inclusion, the
//! degree-`r` reduction, the two-clique transformation with its Perron
//! block pattern and eigen-identities, and the clique-order bound for
//! two-clique minimum cuts.

use serde::Serialize;

use crate::connectivity::{edge_connectivity, min_degree, MAX_BRUTE_FORCE_ORDER};
use crate::constructions::{bridge_graph, bridge_graph_tilde, kpq, BridgeFamilyParams};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_bits, Graph};
use crate::iso::isomorphic;
use crate::report::sig12;
use crate::spectra::{
    perron, perron_group_pattern, perron_of, quadratic_form, GroupStat, PerronPair,
};

/// A strict radius comparison holds when its margin exceeds this fraction
/// of the larger radius.
pub const STRICT_RELATIVE: f64 = 1e-9;
/// Absolute tolerance on Perron-entry comparisons.
pub const PERRON_ENTRY_TOLERANCE: f64 = 1e-10;
/// Maximum spread inside a Perron block.
pub const GROUP_DEVIATION_TOLERANCE: f64 = 1e-9;
/// Absolute tolerance on the eigen-identities.
pub const IDENTITY_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    EdgeMonotonicity,
    DegreeReduction,
    CliqueBridgeTransform,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// `lhs > rhs`
    Strict,
    /// `lhs == rhs`
    Equal,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaVerdict {
    pub lemma: LemmaId,
    pub instance: String,
    pub claim: Claim,
    #[serde(with = "sig12")]
    pub lhs_rho: f64,
    #[serde(with = "sig12")]
    pub rhs_rho: f64,
    #[serde(with = "sig12")]
    pub margin: f64,
    pub holds: bool,
}

impl LemmaVerdict {
    fn new(lemma: LemmaId, instance: String, claim: Claim, lhs_rho: f64, rhs_rho: f64) -> Self {
        let margin = lhs_rho - rhs_rho;
        let threshold = STRICT_RELATIVE * lhs_rho.max(rhs_rho);
        let holds = match claim {
            Claim::Strict => margin > threshold,
            Claim::Equal => margin.abs() <= threshold,
        };
        if claim == Claim::Strict && !holds && margin > 0.0 {
            log::warn!("{lemma:?} {instance}: margin {margin:e} is below the strictness threshold");
        }
        LemmaVerdict {
            lemma,
            instance,
            claim,
            lhs_rho,
            rhs_rho,
            margin,
            holds,
        }
    }

    /// Margin divided by the larger radius.
    pub fn relative_margin(&self) -> f64 {
        self.margin / self.lhs_rho.max(self.rhs_rho)
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    let reach = g.reach(0);
    if reach != low_bits(g.order()) {
        let unreachable = (!reach & low_bits(g.order())).trailing_zeros() as usize;
        return Err(Error::Disconnected { unreachable });
    }
    Ok(())
}

fn require_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(())
}

/// Adding a non-edge lowers the radius; deleting a non-bridge edge raises
/// it. Deleting a bridge is reported as [`Error::Inapplicable`].
pub fn check_edge_monotonicity(g: &Graph, u: usize, v: usize) -> Result<LemmaVerdict> {
    require_vertex(g, u)?;
    require_vertex(g, v)?;
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    require_connected(g)?;
    let base = perron_of(g)?.rho;
    let n = g.order();
    if g.has_edge(u, v) {
        let h = g.without_edge(u, v)?;
        if !h.is_connected() {
            return Err(Error::Inapplicable(format!("edge ({u},{v}) is a bridge")));
        }
        let deleted = perron_of(&h)?.rho;
        Ok(LemmaVerdict::new(
            LemmaId::EdgeMonotonicity,
            format!("n={n} delete ({u},{v})"),
            Claim::Strict,
            deleted,
            base,
        ))
    } else {
        let added = perron_of(&g.with_edge(u, v)?)?.rho;
        Ok(LemmaVerdict::new(
            LemmaId::EdgeMonotonicity,
            format!("n={n} add ({u},{v})"),
            Claim::Strict,
            base,
            added,
        ))
    }
}

/// How `N(u) \ {v}` relates to `N(v) \ {u}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NeighborhoodRelation {
    Equal,
    /// `N(u) \ {v}` is a proper subset: `x_u > x_v` expected.
    ProperSubset,
    /// `N(v) \ {u}` is a proper subset: `x_v > x_u` expected.
    ProperSuperset,
    Incomparable,
}

pub fn neighborhood_relation(g: &Graph, u: usize, v: usize) -> NeighborhoodRelation {
    let nu = g.neighbors(u) & !bit(v);
    let nv = g.neighbors(v) & !bit(u);
    if nu == nv {
        NeighborhoodRelation::Equal
    } else if nu & !nv == 0 {
        NeighborhoodRelation::ProperSubset
    } else if nv & !nu == 0 {
        NeighborhoodRelation::ProperSuperset
    } else {
        NeighborhoodRelation::Incomparable
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerronOrderVerdict {
    pub u: usize,
    pub v: usize,
    pub relation: NeighborhoodRelation,
    #[serde(with = "sig12")]
    pub x_u: f64,
    #[serde(with = "sig12")]
    pub x_v: f64,
    pub holds: bool,
}

pub fn check_perron_order(g: &Graph, u: usize, v: usize) -> Result<PerronOrderVerdict> {
    require_vertex(g, u)?;
    require_vertex(g, v)?;
    require_connected(g)?;
    let pp = perron_of(g)?;
    Ok(perron_order_with(g, &pp, u, v))
}

/// As [`check_perron_order`] with a precomputed Perron pair of `g`.
pub fn perron_order_with(g: &Graph, pp: &PerronPair, u: usize, v: usize) -> PerronOrderVerdict {
    let relation = neighborhood_relation(g, u, v);
    let (x_u, x_v) = (pp.x[u], pp.x[v]);
    let holds = match relation {
        NeighborhoodRelation::Equal => (x_u - x_v).abs() <= PERRON_ENTRY_TOLERANCE,
        NeighborhoodRelation::ProperSubset => x_u - x_v > PERRON_ENTRY_TOLERANCE,
        NeighborhoodRelation::ProperSuperset => x_v - x_u > PERRON_ENTRY_TOLERANCE,
        NeighborhoodRelation::Incomparable => true,
    };
    PerronOrderVerdict {
        u,
        v,
        relation,
        x_u,
        x_v,
        holds,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeReductionVerdict {
    #[serde(flatten)]
    pub verdict: LemmaVerdict,
    pub completed_matches_kpq: bool,
}

impl DegreeReductionVerdict {
    pub fn holds(&self) -> bool {
        self.verdict.holds && self.completed_matches_kpq
    }
}

/// For `g` of edge connectivity `r` and a vertex `v` of degree `r`,
/// completing `V \ {v}` gives `K(n-1, r)` and can only lower the radius.
pub fn check_degree_r_reduction(g: &Graph, v: usize) -> Result<DegreeReductionVerdict> {
    require_vertex(g, v)?;
    let r = edge_connectivity(g)?.size;
    if g.degree(v) != r {
        return Err(Error::InvalidParams(format!(
            "vertex {v} has degree {} but the edge connectivity is {r}",
            g.degree(v)
        )));
    }
    let n = g.order();
    let completed = g.complete_on(low_bits(n) & !bit(v));
    let completed_matches_kpq = isomorphic(&completed, &kpq(n - 1, r)?);
    let claim = if completed == *g {
        Claim::Equal
    } else {
        Claim::Strict
    };
    let verdict = LemmaVerdict::new(
        LemmaId::DegreeReduction,
        format!("n={n} r={r} v={v}"),
        claim,
        perron_of(g)?.rho,
        perron_of(&completed)?.rho,
    );
    Ok(DegreeReductionVerdict {
        verdict,
        completed_matches_kpq,
    })
}

/// Perron blocks of the transformed graph: the hub `u1`, the vertices at
/// distance 2 from it, and its `r` neighbours.
pub fn tilde_groups(params: &BridgeFamilyParams) -> [Vec<usize>; 3] {
    let near = params.tilde_hub_neighbors();
    let far = (1..params.order()).filter(|v| !near.contains(v)).collect();
    [vec![0], far, near]
}

/// Means `(x1, x2, x3)` of the three Perron blocks of the transformed graph.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BlockLevels {
    #[serde(with = "sig12")]
    pub hub: f64,
    #[serde(with = "sig12")]
    pub far: f64,
    #[serde(with = "sig12")]
    pub near: f64,
    #[serde(with = "sig12")]
    pub max_deviation: f64,
}

impl BlockLevels {
    fn from_stats(stats: &[GroupStat]) -> Self {
        BlockLevels {
            hub: stats[0].mean,
            far: stats[1].mean,
            near: stats[2].mean,
            max_deviation: stats.iter().map(|s| s.max_deviation).fold(0.0, f64::max),
        }
    }

    /// Constant blocks with `near < far < hub`.
    pub fn holds(&self) -> bool {
        self.max_deviation < GROUP_DEVIATION_TOLERANCE
            && self.near < self.far
            && self.far < self.hub
    }
}

fn block_levels(params: &BridgeFamilyParams, pp: &PerronPair) -> Result<BlockLevels> {
    Ok(BlockLevels::from_stats(&perron_group_pattern(
        pp,
        &tilde_groups(params),
    )?))
}

fn describe(params: &BridgeFamilyParams) -> String {
    let cross: Vec<String> = params
        .cross_edges
        .iter()
        .map(|(i, j)| format!("u{i}v{j}"))
        .collect();
    format!(
        "n1={} n2={} r={} t={} cross=[{}]",
        params.n1,
        params.n2,
        params.r,
        params.t,
        cross.join(" ")
    )
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransformationVerdict {
    #[serde(flatten)]
    pub verdict: LemmaVerdict,
    pub tilde_matches_kpq: bool,
    pub levels: BlockLevels,
}

impl TransformationVerdict {
    pub fn holds(&self) -> bool {
        self.verdict.holds && self.tilde_matches_kpq && self.levels.holds()
    }
}

/// `rho(G) > rho(G~)` for a two-clique bridge graph and its transform,
/// together with `G~ ≅ K(n-1, r)` and the three-level Perron pattern of `G~`.
pub fn check_transformation(params: &BridgeFamilyParams) -> Result<TransformationVerdict> {
    let g = bridge_graph(params)?;
    let gt = bridge_graph_tilde(params)?;
    let pt = perron_of(&gt)?;
    let verdict = LemmaVerdict::new(
        LemmaId::CliqueBridgeTransform,
        describe(params),
        Claim::Strict,
        perron_of(&g)?.rho,
        pt.rho,
    );
    Ok(TransformationVerdict {
        verdict,
        tilde_matches_kpq: isomorphic(&gt, &kpq(params.order() - 1, params.r)?),
        levels: block_levels(params, &pt)?,
    })
}

/// `x^T D(G) x - x^T D(G~) x` evaluated directly and from the block levels.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadraticDifferenceCheck {
    pub instance: String,
    #[serde(with = "sig12")]
    pub direct: f64,
    #[serde(with = "sig12")]
    pub closed_form: f64,
    #[serde(with = "sig12")]
    pub residual: f64,
}

impl QuadraticDifferenceCheck {
    pub fn holds(&self) -> bool {
        self.residual < IDENTITY_TOLERANCE
    }
}

/// With `x` the unit Perron vector of `G~` and all bridges at the hub,
/// `x^T (D(G) - D(G~)) x = 2(n1-1) x2 (r x3 + 2(n2-r) x2 - x1)`.
pub fn check_quadratic_difference(params: &BridgeFamilyParams) -> Result<QuadraticDifferenceCheck> {
    params.validate()?;
    if params.t != params.r {
        return Err(Error::InvalidParams(format!(
            "needs every bridge at the hub (t = r), got t={} r={}",
            params.t, params.r
        )));
    }
    let dg = bridge_graph(params)?.distance_matrix()?;
    let dt = bridge_graph_tilde(params)?.distance_matrix()?;
    let pt = perron(&dt)?;
    let direct = quadratic_form(&dg, &pt.x)? - quadratic_form(&dt, &pt.x)?;
    let lv = block_levels(params, &pt)?;
    let (n1, n2, r) = (params.n1 as f64, params.n2 as f64, params.r as f64);
    let closed_form = 2.0 * (n1 - 1.0) * lv.far * (-lv.hub + r * lv.near + 2.0 * (n2 - r) * lv.far);
    Ok(QuadraticDifferenceCheck {
        instance: describe(params),
        direct,
        closed_form,
        residual: (direct - closed_form).abs(),
    })
}

/// The eigen-equation at the hub of `G~` and the bounds drawn from it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HubEquationCheck {
    pub instance: String,
    #[serde(with = "sig12")]
    pub rho_tilde: f64,
    pub levels: BlockLevels,
    /// `rho(G~) x1`
    #[serde(with = "sig12")]
    pub lhs: f64,
    /// `r x3 + 2(n1+n2-r-1) x2`
    #[serde(with = "sig12")]
    pub rhs: f64,
    #[serde(with = "sig12")]
    pub residual: f64,
    /// `r x3 + 2(n2-r) x2`, a strict upper bound for `x1`.
    #[serde(with = "sig12")]
    pub hub_bound: f64,
    pub hub_bound_holds: bool,
    /// `rho(G~) > n1 + n2 - 1`
    pub radius_exceeds_complete: bool,
}

impl HubEquationCheck {
    pub fn holds(&self) -> bool {
        self.residual < IDENTITY_TOLERANCE && self.hub_bound_holds && self.radius_exceeds_complete
    }
}

pub fn check_hub_equation(params: &BridgeFamilyParams) -> Result<HubEquationCheck> {
    let gt = bridge_graph_tilde(params)?;
    let pt = perron_of(&gt)?;
    let levels = block_levels(params, &pt)?;
    let (n, n2, r) = (params.order() as f64, params.n2 as f64, params.r as f64);
    let lhs = pt.rho * levels.hub;
    let rhs = r * levels.near + 2.0 * (n - r - 1.0) * levels.far;
    let hub_bound = r * levels.near + 2.0 * (n2 - r) * levels.far;
    let complete = n - 1.0;
    Ok(HubEquationCheck {
        instance: describe(params),
        rho_tilde: pt.rho,
        levels,
        lhs,
        rhs,
        residual: (lhs - rhs).abs(),
        hub_bound,
        hub_bound_holds: levels.hub < hub_bound,
        radius_exceeds_complete: pt.rho - complete > STRICT_RELATIVE * pt.rho,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CutOrderVerdict {
    Inapplicable {
        reason: String,
    },
    Checked {
        r: usize,
        /// Side orders of every minimum cut that leaves two cliques.
        sides: Vec<(usize, usize)>,
        holds: bool,
    },
}

impl CutOrderVerdict {
    /// Inapplicable instances make no claim.
    pub fn holds(&self) -> bool {
        match self {
            CutOrderVerdict::Inapplicable { .. } => true,
            CutOrderVerdict::Checked { holds, .. } => *holds,
        }
    }
}

/// When every degree exceeds the edge connectivity `r` and a minimum cut
/// leaves two cliques, both cliques have at least `r + 2` vertices.
///
/// Up to order 12 every bipartition is scanned for two-clique minimum cuts;
/// above that only the certified cut is examined.
pub fn check_cut_order_bound(g: &Graph) -> Result<CutOrderVerdict> {
    let cert = edge_connectivity(g)?;
    let r = cert.size;
    if min_degree(g) <= r {
        return Ok(CutOrderVerdict::Inapplicable {
            reason: format!("a vertex has degree {r}, equal to the edge connectivity"),
        });
    }
    let n = g.order();
    let all = low_bits(n);
    let two_cliques = |side: u64| g.is_clique(side) && g.is_clique(all & !side);
    let mut sides = Vec::new();
    if n <= MAX_BRUTE_FORCE_ORDER {
        for side in 1..bit(n - 1) {
            let outside = all & !side;
            let cut: usize = bits(side)
                .map(|v| (g.neighbors(v) & outside).count_ones() as usize)
                .sum();
            if cut == r && two_cliques(side) {
                sides.push((side.count_ones() as usize, outside.count_ones() as usize));
            }
        }
    } else if two_cliques(cert.side_a_mask()) {
        sides.push((cert.side_a.len(), cert.side_b.len()));
    }
    if sides.is_empty() {
        return Ok(CutOrderVerdict::Inapplicable {
            reason: "no minimum cut leaves two cliques".into(),
        });
    }
    let holds = sides.iter().all(|&(a, b)| a >= r + 2 && b >= r + 2);
    Ok(CutOrderVerdict::Checked { r, sides, holds })
}
