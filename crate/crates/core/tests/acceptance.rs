//! Acceptance criteria. Each test prints one PASS/FAIL line and then
//! asserts; run with `--nocapture` to see the lines.

use std::time::{Duration, Instant};

use distspec::constructions::{kpq, path_graph};
use distspec::suites::{bridge_grid, random_graph_sample};
use distspec::verify::{
    check_cut_order_bound, check_edge_monotonicity, check_hub_equation, check_quadratic_difference,
    check_transformation, perron_order_with, CutOrderVerdict, STRICT_RELATIVE,
};
use distspec::{
    bridge_graph, brute_force_min_cut, complete_graph, edge_connectivity, enumerate_connected,
    extremal_search_all, perron_of, report, verify_all, with_threads, Error, Graph, VerifyConfig,
};
use nalgebra::{DMatrix, SymmetricEigen};

const CONNECTED_CLASS_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

fn verdict(criterion: u32, ok: bool, detail: String) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {criterion}: {detail}");
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn dense_radius(g: &Graph) -> f64 {
    let dm = g.distance_matrix().unwrap();
    let n = dm.order();
    let m = DMatrix::from_fn(n, n, |i, j| dm.get(i, j) as f64);
    SymmetricEigen::new(m).eigenvalues.max()
}

/// Largest root of a monic-leading polynomial with a single sign change on `[lo, hi]`.
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
fn criterion_1_radius_and_connectivity_oracles() {
    let start = Instant::now();
    let mut classes = 0;
    let mut worst_rel: f64 = 0.0;
    let mut cut_mismatches = 0;
    for n in 1..=7 {
        let graphs = enumerate_connected(n).unwrap();
        assert_eq!(graphs.len(), CONNECTED_CLASS_COUNTS[n - 1]);
        for g in &graphs {
            classes += 1;
            let rho = perron_of(g).unwrap().rho;
            let oracle = dense_radius(g);
            let rel = if oracle == 0.0 {
                rho.abs()
            } else {
                (rho - oracle).abs() / oracle
            };
            worst_rel = worst_rel.max(rel);
            if n >= 2 && edge_connectivity(g).unwrap().size != brute_force_min_cut(g).unwrap().size
            {
                cut_mismatches += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        1,
        classes == 996 && worst_rel < 1e-8 && cut_mismatches == 0 && elapsed < Duration::from_secs(60),
        format!(
            "{classes} classes, worst relative radius error {worst_rel:.2e}, {cut_mismatches} cut mismatches, {elapsed:.2?}"
        ),
    );
}

#[test]
fn criterion_2_extremal_theorem() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut smallest_gap = f64::INFINITY;
    let mut reports = 0;
    for n in 4..=8 {
        let corpus = enumerate_connected(n).unwrap();
        assert_eq!(corpus.len(), CONNECTED_CLASS_COUNTS[n - 1]);
        for rep in extremal_search_all(n, Some(&corpus)).unwrap() {
            reports += 1;
            let gap = rep.uniqueness_gap.unwrap_or(f64::INFINITY);
            smallest_gap = smallest_gap.min(gap);
            if !(rep.matches_kpq && gap > 1e-6) {
                failures.push(format!("n={} r={}", rep.n, rep.r));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        2,
        failures.is_empty() && reports == 2 + 3 + 4 + 5 + 6 && elapsed < Duration::from_secs(600),
        format!("{reports} (n, r) pairs, smallest gap {smallest_gap:.4}, failures {failures:?}, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_3_closed_form_values() {
    let mut worst_kn: f64 = 0.0;
    for n in 2..=12 {
        let rho = perron_of(&complete_graph(n).unwrap()).unwrap().rho;
        worst_kn = worst_kn.max((rho - (n as f64 - 1.0)).abs());
    }
    let p3 = (perron_of(&path_graph(3).unwrap()).unwrap().rho - (1.0 + 3f64.sqrt())).abs();
    let p4 = (perron_of(&path_graph(4).unwrap()).unwrap().rho - (2.0 + 10f64.sqrt())).abs();
    let cubic = bisect_root(&[1.0, -1.0, -11.0, -7.0], 3.0, 6.0);
    let k31 = (perron_of(&kpq(3, 1).unwrap()).unwrap().rho - cubic).abs();
    verdict(
        3,
        worst_kn < 1e-10 && p3 < 1e-9 && p4 < 1e-9 && k31 < 1e-9,
        format!("K_n err {worst_kn:.1e}, P3 err {p3:.1e}, P4 err {p4:.1e}, K(3,1) err {k31:.1e} (root {cubic:.7})"),
    );
}

#[test]
fn criterion_4_edge_monotonicity() {
    let start = Instant::now();
    let graphs = random_graph_sample(&VerifyConfig::default()).unwrap();
    assert_eq!(graphs.len(), 200);
    assert!(graphs.iter().all(|g| g.order() <= 20 && g.is_connected()));
    let (mut checked, mut bridges, mut violations) = (0, 0, 0);
    let mut min_rel = f64::INFINITY;
    for g in &graphs {
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                match check_edge_monotonicity(g, u, v) {
                    Ok(vd) => {
                        checked += 1;
                        min_rel = min_rel.min(vd.relative_margin());
                        if !(vd.holds && vd.margin > STRICT_RELATIVE * vd.lhs_rho.max(vd.rhs_rho)) {
                            violations += 1;
                        }
                    }
                    Err(Error::Inapplicable(_)) => bridges += 1,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        4,
        violations == 0 && elapsed < Duration::from_secs(30),
        format!("{checked} toggles ({bridges} bridges skipped), {violations} violations, min relative margin {min_rel:.2e}, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_5_perron_ordering() {
    let (mut claims, mut violations) = (0, 0);
    for n in 2..=7 {
        for g in enumerate_connected(n).unwrap() {
            let pp = perron_of(&g).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    let vd = perron_order_with(&g, &pp, u, v);
                    claims += 1;
                    if !vd.holds {
                        violations += 1;
                    }
                }
            }
        }
    }
    verdict(
        5,
        violations == 0,
        format!("{claims} vertex pairs, {violations} violations"),
    );
}

#[test]
fn criterion_6_transformation_grid() {
    let start = Instant::now();
    let grid = bridge_grid(&VerifyConfig::default()).unwrap();
    let (mut radius, mut iso, mut pattern) = (0, 0, 0);
    for p in &grid {
        let v = check_transformation(p).unwrap();
        radius += usize::from(!v.verdict.holds);
        iso += usize::from(!v.tilde_matches_kpq);
        pattern += usize::from(!v.levels.holds());
    }
    let elapsed = start.elapsed();
    verdict(
        6,
        radius + iso + pattern == 0 && elapsed < Duration::from_secs(120),
        format!(
            "{} instances: {radius} radius, {iso} isomorphism, {pattern} pattern failures, {elapsed:.2?}",
            grid.len()
        ),
    );
}

#[test]
fn criterion_7_identity_residuals() {
    let grid = bridge_grid(&VerifyConfig::default()).unwrap();
    let (mut worst_quad, mut worst_hub, mut failures) = (0f64, 0f64, 0);
    for p in &grid {
        if p.t == p.r {
            let q = check_quadratic_difference(p).unwrap();
            worst_quad = worst_quad.max(q.residual);
            failures += usize::from(q.residual >= 1e-8);
        }
        let h = check_hub_equation(p).unwrap();
        worst_hub = worst_hub.max(h.residual);
        failures +=
            usize::from(!(h.residual < 1e-8 && h.hub_bound_holds && h.radius_exceeds_complete));
    }
    verdict(
        7,
        failures == 0,
        format!(
            "{} instances, worst residuals {worst_quad:.1e} / {worst_hub:.1e}, {failures} failures",
            grid.len()
        ),
    );
}

#[test]
fn criterion_8_cut_order_bound() {
    let (mut applicable, mut violations) = (0, 0);
    for n in 2..=8 {
        for g in enumerate_connected(n).unwrap() {
            let v = check_cut_order_bound(&g).unwrap();
            if matches!(v, CutOrderVerdict::Checked { .. }) {
                applicable += 1;
                violations += usize::from(!v.holds());
            }
        }
    }
    let grid = bridge_grid(&VerifyConfig::default()).unwrap();
    let mut grid_checked = 0;
    for p in &grid {
        let g = bridge_graph(p).unwrap();
        match check_cut_order_bound(&g).unwrap() {
            CutOrderVerdict::Checked { sides, holds, .. } => {
                grid_checked += 1;
                let expected = (p.n1.min(p.n2), p.n1.max(p.n2));
                let found: Vec<_> = sides.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
                violations += usize::from(!holds || found != vec![expected]);
            }
            CutOrderVerdict::Inapplicable { reason } => {
                panic!("grid instance {p:?} inapplicable: {reason}")
            }
        }
    }
    verdict(
        8,
        violations == 0 && grid_checked == grid.len(),
        format!("{applicable} enumerated graphs meet the hypothesis, {grid_checked} grid instances, {violations} violations"),
    );
}

#[test]
fn criterion_9_determinism_across_threads() {
    let search_json = |threads: usize| {
        with_threads(threads, || {
            (4..=8)
                .flat_map(|n| extremal_search_all(n, None).unwrap())
                .map(|rep| report::to_json_line(&rep))
                .collect::<Vec<_>>()
                .join("\n")
        })
        .unwrap()
    };
    let verify_json = |threads: usize| {
        with_threads(threads, || {
            report::to_json_pretty(&verify_all(&VerifyConfig::default()).unwrap())
        })
        .unwrap()
    };
    let s1 = search_json(1);
    let v1 = verify_json(1);
    let same = [4, 8]
        .iter()
        .all(|&t| search_json(t) == s1 && verify_json(t) == v1);
    verdict(
        9,
        same,
        format!(
            "search and verify-all JSON identical across 1/4/8 threads ({} + {} bytes)",
            s1.len(),
            v1.len()
        ),
    );
}
