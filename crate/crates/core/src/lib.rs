//! Distance spectra of small graphs.
//!
//! Computes distance matrices, the distance spectral radius with its Perron
//! vector, and edge connectivity with a cut certificate, then uses them to
//! check that `K(n-1, r)` is the unique connected graph of order `n` and
//! edge connectivity `r` with the smallest distance spectral radius.

pub mod connectivity;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod report;
pub mod search;
pub mod spectra;
pub mod suites;
pub mod verify;

pub use connectivity::{brute_force_min_cut, edge_connectivity, min_degree, CutCertificate};
pub use constructions::{
    bridge_graph, bridge_graph_tilde, complete_graph, kpq, BridgeFamilyParams,
};
pub use enumerate::enumerate_connected;
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
pub use iso::{canonical_form, isomorphic};
pub use report::{graph_report, GraphReport};
pub use search::{extremal_search, extremal_search_all, ExtremalReport};
pub use spectra::{perron, perron_of, quadratic_form, PerronPair};
pub use suites::{verify_all, VerifyAllReport, VerifyConfig};

/// Runs `f` on a dedicated pool of `threads` workers (0 means one).
pub fn with_threads<T, F>(threads: usize, f: F) -> Result<T>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidParams(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}
