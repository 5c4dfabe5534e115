//! One representative per isomorphism class of connected graphs.
//!
//! Orders up to 6 scan every labelled upper-triangle bitmask. Orders 7 and 8
//! extend each connected graph of order `n - 1` by a new vertex with every
//! non-empty neighbourhood; every connected graph has a vertex whose removal
//! leaves it connected, so this reaches every class.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bit, low_bits, Graph};
use crate::iso::canonical_form;

pub const MAX_BUILTIN_ORDER: usize = 8;
const MAX_BITMASK_ORDER: usize = 6;

/// Canonical representatives sorted by edge count, then by rows.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(Error::UnsupportedOrder {
            n,
            max: MAX_BUILTIN_ORDER,
        });
    }
    let classes = if n <= MAX_BITMASK_ORDER {
        by_bitmask(n)
    } else {
        by_augmentation(&enumerate_connected(n - 1)?)
    };
    let mut out: Vec<Graph> = classes.into_iter().collect();
    out.sort_by(|a, b| a.edge_count().cmp(&b.edge_count()).then_with(|| a.cmp(b)));
    log::debug!("enumerated {} connected classes of order {n}", out.len());
    Ok(out)
}

fn by_bitmask(n: usize) -> HashSet<Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let mut rows = vec![0u64; n];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
            }
            let g = Graph::from_rows(rows).expect("symmetric by construction");
            g.is_connected().then(|| canonical_form(&g))
        })
        .collect()
}

fn by_augmentation(parents: &[Graph]) -> HashSet<Graph> {
    let m = parents[0].order();
    parents
        .par_iter()
        .flat_map_iter(|p| {
            (1..=low_bits(m)).map(move |nbhd| {
                let mut rows: Vec<u64> = p.rows().to_vec();
                for (v, row) in rows.iter_mut().enumerate() {
                    if nbhd & bit(v) != 0 {
                        *row |= bit(m);
                    }
                }
                rows.push(nbhd);
                canonical_form(&Graph::from_rows(rows).expect("symmetric by construction"))
            })
        })
        .collect()
}
