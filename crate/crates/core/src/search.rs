//! Exhaustive search for the minimum distance spectral radius among the
//! connected graphs of order `n` and edge connectivity exactly `r`.

use rayon::prelude::*;
use serde::Serialize;

use crate::connectivity::edge_connectivity;
use crate::constructions::kpq;
use crate::enumerate::enumerate_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::iso::isomorphic;
use crate::report::{sig12, sig12_opt};
use crate::spectra::perron_of;

/// A minimizer is unique only if the next class sits at least this far above it.
pub const UNIQUENESS_GAP: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub r: usize,
    pub class_size: usize,
    #[serde(with = "sig12")]
    pub min_rho: f64,
    /// `None` when the class has a single member.
    #[serde(with = "sig12_opt")]
    pub runner_up_rho: Option<f64>,
    #[serde(with = "sig12_opt")]
    pub uniqueness_gap: Option<f64>,
    pub minimizer_graph6: String,
    pub matches_kpq: bool,
}

impl ExtremalReport {
    pub fn is_unique(&self) -> bool {
        self.uniqueness_gap.is_none_or(|gap| gap > UNIQUENESS_GAP)
    }

    /// The minimizer is `K(n-1, r)` and nothing else comes close.
    pub fn confirms_kpq(&self) -> bool {
        self.matches_kpq && self.is_unique() && self.min_rho >= (self.n - 1) as f64
    }
}

/// Edge connectivity and radius of one corpus graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassData {
    pub connectivity: usize,
    pub rho: f64,
}

/// Computes [`ClassData`] for every graph, in corpus order. All graphs must
/// be connected and of order `n`.
pub fn scan_corpus(n: usize, corpus: &[Graph]) -> Result<Vec<ClassData>> {
    corpus
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let corpus_err = |message: String| Error::Corpus {
                line: idx + 1,
                message,
            };
            if g.order() != n {
                return Err(corpus_err(format!(
                    "expected order {n}, found {}",
                    g.order()
                )));
            }
            if n == 1 {
                return Ok(ClassData {
                    connectivity: 0,
                    rho: 0.0,
                });
            }
            let connectivity = edge_connectivity(g)
                .map_err(|e| corpus_err(e.to_string()))?
                .size;
            let rho = perron_of(g)?.rho;
            Ok(ClassData { connectivity, rho })
        })
        .collect()
}

fn check_range(n: usize, r: usize) -> Result<()> {
    if r < 1 || r + 2 > n {
        return Err(Error::InvalidParams(format!(
            "edge connectivity r must satisfy 1 <= r <= n - 2, got n={n}, r={r}"
        )));
    }
    Ok(())
}

/// Builds the report for one `r` from a scanned corpus. Members are ordered
/// by `(rho, graph6)`, so the result does not depend on scheduling.
pub fn report_for(
    n: usize,
    r: usize,
    corpus: &[Graph],
    data: &[ClassData],
) -> Result<ExtremalReport> {
    check_range(n, r)?;
    let mut members: Vec<(f64, String, &Graph)> = corpus
        .iter()
        .zip(data)
        .filter(|(_, d)| d.connectivity == r)
        .map(|(g, d)| (d.rho, graph6::encode(g), g))
        .collect();
    if members.is_empty() {
        return Err(Error::InvalidParams(format!(
            "the corpus has no graph of order {n} with edge connectivity {r}"
        )));
    }
    members.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let (min_rho, minimizer_graph6, minimizer) = members[0].clone();
    let runner_up_rho = members.get(1).map(|m| m.0);
    Ok(ExtremalReport {
        n,
        r,
        class_size: members.len(),
        min_rho,
        runner_up_rho,
        uniqueness_gap: runner_up_rho.map(|x| x - min_rho),
        minimizer_graph6,
        matches_kpq: isomorphic(minimizer, &kpq(n - 1, r)?),
    })
}

/// Scans `corpus` (or the built-in enumeration when `None`) for one `r`.
pub fn extremal_search(n: usize, r: usize, corpus: Option<&[Graph]>) -> Result<ExtremalReport> {
    check_range(n, r)?;
    let owned;
    let graphs = match corpus {
        Some(c) => c,
        None => {
            owned = enumerate_connected(n)?;
            &owned[..]
        }
    };
    let data = scan_corpus(n, graphs)?;
    report_for(n, r, graphs, &data)
}

/// One report for every `r` in `1..=n-2`, sharing a single scan.
pub fn extremal_search_all(n: usize, corpus: Option<&[Graph]>) -> Result<Vec<ExtremalReport>> {
    check_range(n, 1)?;
    let owned;
    let graphs = match corpus {
        Some(c) => c,
        None => {
            owned = enumerate_connected(n)?;
            &owned[..]
        }
    };
    let data = scan_corpus(n, graphs)?;
    (1..=n - 2)
        .map(|r| report_for(n, r, graphs, &data))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_four_bridge_class() {
        let rep = extremal_search(4, 1, None).unwrap();
        assert!(rep.matches_kpq);
        assert!(rep.is_unique());
        assert!((rep.min_rho - 4.0997).abs() < 1e-4);
        // P4, star, paw (K(3,1))
        assert_eq!(rep.class_size, 3);
    }

    #[test]
    fn order_five_two_connected() {
        let rep = extremal_search(5, 2, None).unwrap();
        assert!(rep.confirms_kpq(), "{rep:?}");
    }

    #[test]
    fn rejects_r_out_of_range() {
        for n in 3..=6 {
            assert!(matches!(
                extremal_search(n, n - 1, None),
                Err(Error::InvalidParams(_))
            ));
        }
        assert!(extremal_search(5, 0, None).is_err());
    }

    #[test]
    fn singleton_class() {
        let rep = extremal_search(3, 1, None).unwrap();
        assert_eq!(rep.class_size, 1);
        assert_eq!(rep.runner_up_rho, None);
        assert!(rep.confirms_kpq());
    }

    #[test]
    fn corpus_must_match_order() {
        let corpus = vec![kpq(3, 1).unwrap(), kpq(4, 1).unwrap()];
        match extremal_search(4, 1, Some(&corpus)) {
            Err(Error::Corpus { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            extremal_search(4, 1, Some(&[split])),
            Err(Error::Corpus { line: 1, .. })
        ));
    }
}
