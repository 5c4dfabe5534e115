//! Isomorphism testing and canonical labelling for small graphs.
//!
//! Both searches work on ordered partitions of the vertex set, each cell a
//! bitmask. Refinement splits cells by neighbour counts into other cells
//! until the partition is equitable; the procedure depends only on the cell
//! structure, so it commutes with relabelling. Backtracking individualizes
//! one vertex of the first non-singleton cell and refines again.

use crate::graph::{bit, bits, low_bits, Graph};

type Cells = Vec<u64>;

/// Refines `cells` to an equitable partition, appending a label-invariant
/// record of every split and the final quotient matrix to `trace`.
fn refine(g: &Graph, cells: &mut Cells, trace: &mut Vec<u32>) {
    let rows = g.rows();
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() == 1 {
                    continue;
                }
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for v in bits(cell) {
                    let k = (rows[v] & splitter).count_ones();
                    match groups.iter_mut().find(|(count, _)| *count == k) {
                        Some((_, mask)) => *mask |= bit(v),
                        None => groups.push((k, bit(v))),
                    }
                }
                if groups.len() == 1 {
                    continue;
                }
                groups.sort_unstable_by_key(|&(count, _)| count);
                trace.extend([s as u32, c as u32, groups.len() as u32]);
                for &(count, mask) in &groups {
                    trace.extend([count, mask.count_ones()]);
                }
                cells.splice(c..=c, groups.into_iter().map(|(_, mask)| mask));
                continue 'outer;
            }
        }
        break;
    }
    for &a in cells.iter() {
        let v = a.trailing_zeros() as usize;
        for &b in cells.iter() {
            trace.push((rows[v] & b).count_ones());
        }
    }
}

fn individualize(cells: &Cells, k: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..k]);
    out.push(bit(v));
    out.push(cells[k] & !bit(v));
    out.extend_from_slice(&cells[k + 1..]);
    out
}

fn first_open_cell(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.count_ones() > 1)
}

fn leaf_permutation(cells: &Cells) -> Vec<usize> {
    cells.iter().map(|c| c.trailing_zeros() as usize).collect()
}

/// True iff `g` and `h` are isomorphic.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An edge-preserving bijection `map` with `map[v]` in `h` for `v` in `g`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let all = low_bits(g.order());
    let (mut cg, mut ch) = (vec![all], vec![all]);
    let (mut tg, mut th) = (Vec::new(), Vec::new());
    refine(g, &mut cg, &mut tg);
    refine(h, &mut ch, &mut th);
    if tg != th {
        return None;
    }
    match_search(g, h, &cg, &ch)
}

fn match_search(g: &Graph, h: &Graph, cg: &Cells, ch: &Cells) -> Option<Vec<usize>> {
    let Some(k) = first_open_cell(cg) else {
        let pg = leaf_permutation(cg);
        let ph = leaf_permutation(ch);
        let mut map = vec![0; g.order()];
        for (&a, &b) in pg.iter().zip(&ph) {
            map[a] = b;
        }
        let preserved = (0..g.order()).all(|v| {
            bits(g.neighbors(v)).fold(0u64, |acc, w| acc | bit(map[w])) == h.neighbors(map[v])
        });
        return preserved.then_some(map);
    };
    let v = cg[k].trailing_zeros() as usize;
    let mut ng = individualize(cg, k, v);
    let mut tg = Vec::new();
    refine(g, &mut ng, &mut tg);
    for w in bits(ch[k]) {
        let mut nh = individualize(ch, k, w);
        let mut th = Vec::new();
        refine(h, &mut nh, &mut th);
        if th == tg {
            if let Some(map) = match_search(g, h, &ng, &nh) {
                return Some(map);
            }
        }
    }
    None
}

/// Canonical representative of the isomorphism class of `g`: the relabelled
/// copy with the lexicographically least row sequence among all leaves of
/// the refinement search tree.
pub fn canonical_form(g: &Graph) -> Graph {
    let mut cells = vec![low_bits(g.order())];
    let mut scratch = Vec::new();
    refine(g, &mut cells, &mut scratch);
    let mut best: Option<Graph> = None;
    canon_search(g, &cells, &mut best);
    best.expect("search tree has at least one leaf")
}

fn canon_search(g: &Graph, cells: &Cells, best: &mut Option<Graph>) {
    let Some(k) = first_open_cell(cells) else {
        let candidate = g.permuted(&leaf_permutation(cells));
        if best.as_ref().is_none_or(|b| candidate < *b) {
            *best = Some(candidate);
        }
        return;
    };
    let mut scratch = Vec::new();
    for v in bits(cells[k]) {
        let mut next = individualize(cells, k, v);
        scratch.clear();
        refine(g, &mut next, &mut scratch);
        canon_search(g, &next, best);
    }
}
