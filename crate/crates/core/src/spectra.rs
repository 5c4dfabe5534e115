//! Distance spectral radius and Perron vector.
//!
//! The distance matrix of a connected graph is nonnegative and irreducible,
//! so its largest eigenvalue is simple with an entrywise-positive
//! eigenvector. Power iteration from the all-ones vector stays in the
//! positive cone and converges to that pair; each step estimates the
//! eigenvalue with the Rayleigh quotient and stops once the eigen-equation
//! residual `max_v |(D x)_v - rho x_v|` is at most `1e-12 * n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

const RESIDUAL_PER_VERTEX: f64 = 1e-12;
const UNIT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerronPair {
    pub rho: f64,
    /// Unit Perron vector, entries indexed by vertex.
    pub x: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

pub fn residual_tolerance(n: usize) -> f64 {
    RESIDUAL_PER_VERTEX * n as f64
}

/// `100 n ln(1/tol)` iterations.
pub fn iteration_cap(n: usize) -> usize {
    let tol = residual_tolerance(n.max(1));
    (100.0 * n as f64 * (1.0 / tol).ln()).ceil() as usize
}

fn mat_vec(dm: &DistanceMatrix, x: &[f64], y: &mut [f64]) {
    for (u, out) in y.iter_mut().enumerate() {
        *out = dm.row(u).iter().zip(x).map(|(&d, &xv)| d as f64 * xv).sum();
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn perron(dm: &DistanceMatrix) -> Result<PerronPair> {
    let n = dm.order();
    let tol = residual_tolerance(n);
    let cap = iteration_cap(n);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 1..=cap {
        mat_vec(dm, &x, &mut y);
        let rho = dot(&x, &y);
        residual = y
            .iter()
            .zip(&x)
            .map(|(yv, xv)| (yv - rho * xv).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            debug_assert!(n == 1 || x.iter().all(|&v| v > 0.0));
            return Ok(PerronPair {
                rho,
                x,
                residual,
                iterations: it,
            });
        }
        let scale = norm(&y);
        for (xv, yv) in x.iter_mut().zip(&y) {
            *xv = yv / scale;
        }
    }
    Err(Error::NotConvergent {
        iterations: cap,
        residual,
    })
}

/// Distance matrix and Perron pair of a connected graph.
pub fn perron_of(g: &Graph) -> Result<PerronPair> {
    perron(&g.distance_matrix()?)
}

pub fn spectral_radius(g: &Graph) -> Result<f64> {
    Ok(perron_of(g)?.rho)
}

/// `sum_{u,v} d_uv x_u x_v`.
pub fn quadratic_form(dm: &DistanceMatrix, x: &[f64]) -> Result<f64> {
    let n = dm.order();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let mut total = 0.0;
    for u in 0..n {
        for v in 0..n {
            total += dm.get(u, v) as f64 * x[u] * x[v];
        }
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RayleighBound {
    pub value: f64,
    pub rho: f64,
    /// `rho - value`; nonnegative up to rounding.
    pub slack: f64,
}

/// Evaluates `x^T D x` for a unit `x` against the spectral radius.
pub fn rayleigh_bound_check(dm: &DistanceMatrix, x: &[f64]) -> Result<RayleighBound> {
    let value = quadratic_form(dm, x)?;
    let len = norm(x);
    if (len - 1.0).abs() > UNIT_TOLERANCE {
        return Err(Error::NotUnit(len));
    }
    let rho = perron(dm)?.rho;
    Ok(RayleighBound {
        value,
        rho,
        slack: rho - value,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GroupStat {
    pub mean: f64,
    pub max_deviation: f64,
}

/// Mean and spread of the Perron entries over each index group. The groups
/// must partition `0..n`.
pub fn perron_group_pattern(pp: &PerronPair, groups: &[Vec<usize>]) -> Result<Vec<GroupStat>> {
    let n = pp.x.len();
    let mut seen = vec![false; n];
    for (k, group) in groups.iter().enumerate() {
        if group.is_empty() {
            return Err(Error::NotPartition(format!("group {k} is empty")));
        }
        for &v in group {
            if v >= n {
                return Err(Error::NotPartition(format!(
                    "index {v} is out of range for order {n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotPartition(format!("index {v} appears twice")));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::NotPartition(format!("index {v} is not covered")));
    }
    Ok(groups
        .iter()
        .map(|group| {
            let mean = group.iter().map(|&v| pp.x[v]).sum::<f64>() / group.len() as f64;
            let max_deviation = group
                .iter()
                .map(|&v| (pp.x[v] - mean).abs())
                .fold(0.0, f64::max);
            GroupStat {
                mean,
                max_deviation,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, kpq, path_graph};

    /// Largest real root by bisection on `[lo, hi]`, where the polynomial
    /// (highest degree first) changes sign exactly once.
    fn bisect_root(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
        let eval = |x: f64| coeffs.iter().fold(0.0, |acc, c| acc * x + c);
        let lo_sign = eval(lo).signum();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if eval(mid).signum() == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn complete_graph_radius() {
        for n in 2..=12 {
            let pp = perron_of(&complete_graph(n).unwrap()).unwrap();
            assert!((pp.rho - (n as f64 - 1.0)).abs() < 1e-10);
            let uniform = 1.0 / (n as f64).sqrt();
            assert!(pp.x.iter().all(|&v| (v - uniform).abs() < 1e-12));
        }
    }

    #[test]
    fn single_vertex() {
        let pp = perron_of(&complete_graph(1).unwrap()).unwrap();
        assert_eq!(pp.rho, 0.0);
        assert_eq!(pp.x, vec![1.0]);
    }

    #[test]
    fn closed_forms() {
        // lambda^2 - 2 lambda - 2 and lambda^2 - 4 lambda - 6
        let p3 = bisect_root(&[1.0, -2.0, -2.0], 2.0, 4.0);
        let p4 = bisect_root(&[1.0, -4.0, -6.0], 4.0, 8.0);
        assert!((p3 - (1.0 + 3f64.sqrt())).abs() < 1e-12);
        assert!((p4 - (2.0 + 10f64.sqrt())).abs() < 1e-12);
        assert!((spectral_radius(&path_graph(3).unwrap()).unwrap() - p3).abs() < 1e-9);
        assert!((spectral_radius(&path_graph(4).unwrap()).unwrap() - p4).abs() < 1e-9);

        let k31 = bisect_root(&[1.0, -1.0, -11.0, -7.0], 3.0, 6.0);
        assert!((k31 - 4.0997).abs() < 1e-4);
        assert!((spectral_radius(&kpq(3, 1).unwrap()).unwrap() - k31).abs() < 1e-9);
    }

    #[test]
    fn residual_and_unit_norm() {
        let g = kpq(6, 2).unwrap();
        let dm = g.distance_matrix().unwrap();
        let pp = perron(&dm).unwrap();
        assert!((norm(&pp.x) - 1.0).abs() < 1e-12);
        assert!(pp.residual <= 1e-10 * pp.rho);
        assert!(pp.x.iter().all(|&v| v > 0.0));
    }

    #[test]
    fn quadratic_form_examples() {
        let k3 = complete_graph(3).unwrap().distance_matrix().unwrap();
        let u = vec![1.0 / 3f64.sqrt(); 3];
        assert!((quadratic_form(&k3, &u).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(quadratic_form(&k3, &[0.0; 3]).unwrap(), 0.0);
        assert_eq!(
            quadratic_form(&k3, &[1.0]),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 1
            })
        );

        let p3 = path_graph(3).unwrap().distance_matrix().unwrap();
        let pp = perron(&p3).unwrap();
        assert!((quadratic_form(&p3, &pp.x).unwrap() - (1.0 + 3f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn rayleigh_bound_examples() {
        let p4 = path_graph(4).unwrap().distance_matrix().unwrap();
        let pp = perron(&p4).unwrap();
        assert!(rayleigh_bound_check(&p4, &pp.x).unwrap().slack.abs() < 1e-10);

        let k4 = complete_graph(4).unwrap().distance_matrix().unwrap();
        let b = rayleigh_bound_check(&k4, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(b.value, 0.0);
        assert!((b.slack - 3.0).abs() < 1e-10);

        let other = perron_of(&kpq(3, 1).unwrap()).unwrap();
        assert!(rayleigh_bound_check(&p4, &other.x).unwrap().slack > 1e-6);

        assert!(matches!(
            rayleigh_bound_check(&k4, &[1.0, 1.0, 0.0, 0.0]),
            Err(Error::NotUnit(_))
        ));
    }

    #[test]
    fn group_pattern_validation() {
        let pp = perron_of(&complete_graph(4).unwrap()).unwrap();
        let stats = perron_group_pattern(&pp, &[vec![0, 1, 2, 3]]).unwrap();
        assert!(stats[0].max_deviation < 1e-15);
        assert!((stats[0].mean - 0.5).abs() < 1e-12);

        assert!(perron_group_pattern(&pp, &[vec![0, 1], vec![2]]).is_err());
        assert!(perron_group_pattern(&pp, &[vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(perron_group_pattern(&pp, &[vec![0, 1, 2, 3], vec![]]).is_err());
        assert!(perron_group_pattern(&pp, &[vec![0, 1, 2, 3, 4]]).is_err());
    }
}
