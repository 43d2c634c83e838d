//! Graph isomorphism for small graphs by color refinement and
//! individualization.

use crate::bits::Bits256;
use crate::error::{Error, Result};
use crate::graph::NCGraph;

/// Largest vertex count accepted by [`graph_isomorphic`].
pub const ISOMORPHISM_VERTEX_CAP: usize = 64;

type Colors = Vec<u32>;

/// Refines both colorings jointly until stable. Returns `false` as soon as
/// the color class multisets differ.
fn refine(a: &[Bits256], ca: &mut Colors, b: &[Bits256], cb: &mut Colors) -> bool {
    let n = a.len();
    let mut classes = distinct(ca, cb);
    loop {
        let signature = |rows: &[Bits256], c: &Colors, v: usize| {
            let mut nb: Vec<u32> = rows[v].iter().map(|w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..n).map(|v| signature(a, ca, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| signature(b, cb, v)).collect();
        let mut sorted_a = sa.clone();
        let mut sorted_b = sb.clone();
        sorted_a.sort();
        sorted_b.sort();
        if sorted_a != sorted_b {
            return false;
        }
        sorted_a.dedup();
        let id = |s: &(u32, Vec<u32>)| sorted_a.binary_search(s).expect("shared signature") as u32;
        *ca = sa.iter().map(id).collect();
        *cb = sb.iter().map(id).collect();
        let next = sorted_a.len();
        if next == classes {
            return true;
        }
        classes = next;
    }
}

fn distinct(ca: &Colors, cb: &Colors) -> usize {
    let mut all: Vec<u32> = ca.iter().chain(cb).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn search(a: &[Bits256], ca: Colors, b: &[Bits256], cb: Colors) -> Option<Vec<usize>> {
    let n = a.len();
    let mut sizes = std::collections::BTreeMap::<u32, usize>::new();
    for &c in &ca {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes
        .iter()
        .filter(|(_, &size)| size > 1)
        .min_by_key(|(&c, &size)| (size, c))
        .map(|(&c, _)| c);
    let Some(color) = target else {
        let mut map = vec![0usize; n];
        for v in 0..n {
            map[v] = cb.iter().position(|&c| c == ca[v])?;
        }
        let preserves = (0..n).all(|v| a[v].iter().all(|w| b[map[v]].contains(map[w])))
            && a.iter().map(Bits256::len).sum::<usize>() == b.iter().map(Bits256::len).sum::<usize>();
        return preserves.then_some(map);
    };
    let fresh = ca.iter().copied().max().unwrap_or(0) + 1;
    let v = ca.iter().position(|&c| c == color)?;
    for w in (0..n).filter(|&w| cb[w] == color) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[v] = fresh;
        nb[w] = fresh;
        if refine(a, &mut na, b, &mut nb) {
            if let Some(map) = search(a, na, b, nb) {
                return Some(map);
            }
        }
    }
    None
}

/// An isomorphism between graphs given by adjacency rows, as a map from
/// positions of the first graph to positions of the second.
pub fn isomorphism_of_rows(a: &[Bits256], b: &[Bits256]) -> Result<Option<Vec<usize>>> {
    for rows in [a, b] {
        if rows.len() > ISOMORPHISM_VERTEX_CAP {
            return Err(Error::SizeCapExceeded {
                size: rows.len(),
                cap: ISOMORPHISM_VERTEX_CAP,
            });
        }
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    let degrees = |rows: &[Bits256]| {
        let mut d: Vec<usize> = rows.iter().map(Bits256::len).collect();
        d.sort_unstable();
        d
    };
    if degrees(a) != degrees(b) {
        return Ok(None);
    }
    let mut ca = vec![0; a.len()];
    let mut cb = vec![0; b.len()];
    if !refine(a, &mut ca, b, &mut cb) {
        return Ok(None);
    }
    Ok(search(a, ca, b, cb))
}

/// A vertex bijection `(v1, v2)` between two non-commuting graphs, as
/// element indices of their respective rings, or `None`.
pub fn graph_isomorphic(g1: &NCGraph, g2: &NCGraph) -> Result<Option<Vec<(usize, usize)>>> {
    Ok(isomorphism_of_rows(g1.rows(), g2.rows())?.map(|map| {
        map.iter()
            .enumerate()
            .map(|(p, &q)| (g1.vertices()[p], g2.vertices()[q]))
            .collect()
    }))
}
