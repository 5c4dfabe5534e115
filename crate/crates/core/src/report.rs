//! Serialization helpers. Floats are written with 12 significant digits so
//! that repeated runs produce byte-identical records.

use serde::Serialize;

use crate::connectivity::edge_connectivity;
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;
use crate::spectra::perron_of;

/// Rounds to 12 significant decimal digits.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// `#[serde(with = "sig12")]` for `f64` fields.
pub mod sig12 {
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(super::round_sig12(*x))
    }
}

/// `#[serde(with = "sig12_opt")]` for `Option<f64>` fields.
pub mod sig12_opt {
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_some(&super::round_sig12(*v)),
            None => s.serialize_none(),
        }
    }
}

/// `#[serde(with = "sig12_vec")]` for `Vec<f64>` fields.
pub mod sig12_vec {
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for &x in xs {
            seq.serialize_element(&super::round_sig12(x))?;
        }
        seq.end()
    }
}

/// Compact single-line JSON.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize infallibly")
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize infallibly")
}

/// Formats a float for CSV/text output with the same rounding as JSON.
pub fn fmt_float(x: f64) -> String {
    serde_json::to_string(&round_sig12(x)).unwrap_or_else(|_| "null".into())
}

/// Radius, Perron vector and edge connectivity of one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphReport {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    #[serde(with = "sig12")]
    pub rho: f64,
    #[serde(with = "sig12")]
    pub residual: f64,
    pub iterations: usize,
    pub edge_connectivity: usize,
    #[serde(with = "sig12_vec")]
    pub perron_vector: Vec<f64>,
}

/// Fails on disconnected input. A single vertex has connectivity 0.
pub fn graph_report(g: &Graph) -> Result<GraphReport> {
    let pp = perron_of(g)?;
    let edge_connectivity = if g.order() < 2 {
        0
    } else {
        edge_connectivity(g)?.size
    };
    Ok(GraphReport {
        graph6: graph6::encode(g),
        n: g.order(),
        edges: g.edge_count(),
        rho: pp.rho,
        residual: pp.residual,
        iterations: pp.iterations,
        edge_connectivity,
        perron_vector: pp.x,
    })
}
