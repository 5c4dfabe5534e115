//! Global edge connectivity with an explicit minimum cut.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_bits, Graph};

pub const MAX_BRUTE_FORCE_ORDER: usize = 12;

/// A minimum edge cut and the bipartition it induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub size: usize,
    pub cut_edges: Vec<(usize, usize)>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl CutCertificate {
    fn from_side(g: &Graph, side: u64) -> Self {
        let all = low_bits(g.order());
        let other = all & !side;
        let cut_edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| (side & bit(u) != 0) != (side & bit(v) != 0))
            .collect();
        CutCertificate {
            size: cut_edges.len(),
            cut_edges,
            side_a: bits(side).collect(),
            side_b: bits(other).collect(),
        }
    }

    pub fn side_a_mask(&self) -> u64 {
        self.side_a.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn side_b_mask(&self) -> u64 {
        self.side_b.iter().fold(0, |m, &v| m | bit(v))
    }
}

fn require_cuttable(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::InvalidParams(
            "edge connectivity needs at least 2 vertices".into(),
        ));
    }
    let reach = g.reach(0);
    if reach != low_bits(g.order()) {
        let unreachable = (!reach & low_bits(g.order())).trailing_zeros() as usize;
        return Err(Error::Disconnected { unreachable });
    }
    Ok(())
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Minimum-cut-phase contraction on unit weights. The certificate is the
/// first phase cut of minimum value; phases start from the lowest active
/// vertex and break ties toward lower indices.
pub fn edge_connectivity(g: &Graph) -> Result<CutCertificate> {
    require_cuttable(g)?;
    let n = g.order();
    let mut w = vec![vec![0u32; n]; n];
    for (u, v) in g.edges() {
        w[u][v] = 1;
        w[v][u] = 1;
    }
    let mut groups: Vec<u64> = (0..n).map(bit).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<(u32, u64)> = None;

    let mut key = vec![0u32; n];
    let mut added = vec![false; n];
    while active.len() > 1 {
        for &v in &active {
            key[v] = 0;
            added[v] = false;
        }
        let (mut prev, mut last) = (active[0], active[0]);
        for _ in 0..active.len() {
            let mut next = None;
            for &v in &active {
                if !added[v] && next.is_none_or(|u: usize| key[v] > key[u]) {
                    next = Some(v);
                }
            }
            let v = next.expect("an unadded vertex remains");
            added[v] = true;
            prev = last;
            last = v;
            for &u in &active {
                if !added[u] {
                    key[u] += w[v][u];
                }
            }
        }
        let phase_cut = key[last];
        if best.is_none_or(|(c, _)| phase_cut < c) {
            best = Some((phase_cut, groups[last]));
        }
        groups[prev] |= groups[last];
        for &u in &active {
            let add = w[last][u];
            w[prev][u] += add;
            w[u][prev] += add;
        }
        w[prev][prev] = 0;
        active.retain(|&u| u != last);
    }

    let (size, side) = best.expect("at least one phase ran");
    let cert = CutCertificate::from_side(g, side);
    debug_assert_eq!(cert.size, size as usize);
    Ok(cert)
}

/// Exhaustive scan of all `2^(n-1) - 1` bipartitions (test oracle).
pub fn brute_force_min_cut(g: &Graph) -> Result<CutCertificate> {
    let n = g.order();
    if n > MAX_BRUTE_FORCE_ORDER {
        return Err(Error::UnsupportedOrder {
            n,
            max: MAX_BRUTE_FORCE_ORDER,
        });
    }
    require_cuttable(g)?;
    let all = low_bits(n);
    let mut best: Option<(u32, u64)> = None;
    for side in 1..bit(n - 1) {
        let outside = all & !side;
        let cut: u32 = bits(side)
            .map(|v| (g.neighbors(v) & outside).count_ones())
            .sum();
        if best.is_none_or(|(c, _)| cut < c) {
            best = Some((cut, side));
        }
    }
    let (_, side) = best.expect("n >= 2 gives at least one bipartition");
    Ok(CutCertificate::from_side(g, side))
}
