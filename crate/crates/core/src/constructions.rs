//! Named graph families.
//!
//! Two-clique bridge graphs use a fixed numbering: the first clique occupies
//! vertices `0..n1` with the hub `u1 = 0`, and the second clique occupies
//! `n1..n1+n2`. Labels in [`BridgeFamilyParams::cross_edges`] are 1-based
//! clique positions, so `(i, j)` joins `u_i` (vertex `i - 1`) to `v_j`
//! (vertex `n1 + j - 1`).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{low_bits, Graph, MAX_ORDER};

pub fn complete_graph(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n)?.complete_on(low_bits(n)))
}

pub fn path_graph(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_p` on vertices `0..p` plus vertex `p` joined to `0..q`.
pub fn kpq(p: usize, q: usize) -> Result<Graph> {
    if q < 1 || q > p {
        return Err(Error::InvalidParams(format!(
            "K(p,q) needs p >= q >= 1, got p={p}, q={q}"
        )));
    }
    if p + 1 > MAX_ORDER {
        return Err(Error::OrderOutOfRange(p + 1));
    }
    let mut g = Graph::empty(p + 1)?.complete_on(low_bits(p));
    for v in 0..q {
        g.add_edge(p, v)?;
    }
    Ok(g)
}

/// Two cliques `K_n1`, `K_n2` joined by `r` bridge edges, `t` of which
/// leave the hub `u1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeFamilyParams {
    pub n1: usize,
    pub n2: usize,
    pub r: usize,
    pub t: usize,
    /// The `r - t` non-hub bridge edges as 1-based `(i, j)` with `i >= 2`.
    pub cross_edges: Vec<(usize, usize)>,
}

impl BridgeFamilyParams {
    pub fn new(
        n1: usize,
        n2: usize,
        r: usize,
        t: usize,
        cross_edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let p = BridgeFamilyParams {
            n1,
            n2,
            r,
            t,
            cross_edges,
        };
        p.validate()?;
        Ok(p)
    }

    /// All `r` bridge edges leave the hub.
    pub fn hub_only(n1: usize, n2: usize, r: usize) -> Result<Self> {
        Self::new(n1, n2, r, r, Vec::new())
    }

    /// `r - t` cross edges drawn uniformly without replacement.
    pub fn with_random_cross_edges<R: Rng + ?Sized>(
        n1: usize,
        n2: usize,
        r: usize,
        t: usize,
        rng: &mut R,
    ) -> Result<Self> {
        if n1 < 2 || t > r {
            return Self::new(n1, n2, r, t, Vec::new());
        }
        let cross = random_cross_edges(n1, n2, r - t, rng)?;
        Self::new(n1, n2, r, t, cross)
    }

    /// [`Self::with_random_cross_edges`] driven by a ChaCha8 stream from `seed`.
    pub fn with_seeded_cross_edges(
        n1: usize,
        n2: usize,
        r: usize,
        t: usize,
        seed: u64,
    ) -> Result<Self> {
        Self::with_random_cross_edges(n1, n2, r, t, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn order(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn validate(&self) -> Result<()> {
        let &BridgeFamilyParams { n1, n2, r, t, .. } = self;
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if r < 1 {
            return bad(format!("r must be at least 1, got {r}"));
        }
        if n1.min(n2) < r + 2 {
            return bad(format!(
                "min(n1, n2) = {} is below r + 2 = {}",
                n1.min(n2),
                r + 2
            ));
        }
        if n1 + n2 > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n1 + n2));
        }
        if t < 1 || t > r {
            return bad(format!("t must lie in 1..={r}, got {t}"));
        }
        if self.cross_edges.len() != r - t {
            return bad(format!(
                "expected {} cross edges, got {}",
                r - t,
                self.cross_edges.len()
            ));
        }
        for (k, &(i, j)) in self.cross_edges.iter().enumerate() {
            if i == 1 {
                return bad(format!("cross edge ({i},{j}) duplicates a hub edge at u1"));
            }
            if !(2..=n1).contains(&i) || !(1..=n2).contains(&j) {
                return bad(format!(
                    "cross edge ({i},{j}) is outside u2..u{n1} x v1..v{n2}"
                ));
            }
            if self.cross_edges[..k].contains(&(i, j)) {
                return bad(format!("cross edge ({i},{j}) listed twice"));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn u(&self, i: usize) -> usize {
        i - 1
    }

    #[inline]
    pub fn v(&self, j: usize) -> usize {
        self.n1 + j - 1
    }

    /// The `r` bridge edges as vertex pairs.
    pub fn bridge_edges(&self) -> Vec<(usize, usize)> {
        (1..=self.t)
            .map(|j| (self.u(1), self.v(j)))
            .chain(
                self.cross_edges
                    .iter()
                    .map(|&(i, j)| (self.u(i), self.v(j))),
            )
            .collect()
    }

    /// Vertices adjacent to `u1` in the transformed graph.
    pub fn tilde_hub_neighbors(&self) -> Vec<usize> {
        let keep_from = self.n1 - (self.r - self.t) + 1;
        (keep_from..=self.n1)
            .map(|i| self.u(i))
            .chain((1..=self.t).map(|j| self.v(j)))
            .collect()
    }
}

/// Draws `count` distinct cross-edge labels `(i, j)`, `i` in `2..=n1`,
/// `j` in `1..=n2`, sorted.
pub fn random_cross_edges<R: Rng + ?Sized>(
    n1: usize,
    n2: usize,
    count: usize,
    rng: &mut R,
) -> Result<Vec<(usize, usize)>> {
    let slots = n1.saturating_sub(1) * n2;
    if count > slots {
        return Err(Error::InvalidParams(format!(
            "cannot place {count} cross edges in {slots} slots"
        )));
    }
    let mut picked: Vec<(usize, usize)> = rand::seq::index::sample(rng, slots, count)
        .into_iter()
        .map(|k| (2 + k / n2, 1 + k % n2))
        .collect();
    picked.sort_unstable();
    Ok(picked)
}

/// Erdős–Rényi `G(n, p)` resampled until connected.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParams(format!(
            "edge probability must lie in (0, 1], got {p}"
        )));
    }
    loop {
        let mut g = Graph::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                if rng.random_bool(p) {
                    g.add_edge(i, j)?;
                }
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// `K_n1 ∪ K_n2` plus the hub edges `u1 v_1 .. u1 v_t` and the cross edges.
pub fn bridge_graph(params: &BridgeFamilyParams) -> Result<Graph> {
    params.validate()?;
    let n = params.order();
    let first = low_bits(params.n1);
    let second = low_bits(n) & !first;
    let mut g = Graph::empty(n)?.complete_on(first).complete_on(second);
    for (a, b) in params.bridge_edges() {
        g.add_edge(a, b)?;
    }
    Ok(g)
}

/// Drops the clique edges `u1 u_i` for `i = 2..=n1-(r-t)` and joins every
/// `u_2..u_n1` to the whole second clique. The result is isomorphic to
/// `K(n1+n2-1, r)` with `u1` as the added vertex.
pub fn bridge_graph_tilde(params: &BridgeFamilyParams) -> Result<Graph> {
    let mut g = bridge_graph(params)?;
    let hub = params.u(1);
    for i in 2..=params.n1 - (params.r - params.t) {
        g.remove_edge(hub, params.u(i))?;
    }
    for i in 2..=params.n1 {
        for j in 1..=params.n2 {
            g.add_edge(params.u(i), params.v(j))?;
        }
    }
    Ok(g)
}
