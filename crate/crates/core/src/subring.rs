//! Closures, subring enumeration and commutator modules.

use std::collections::HashSet;

use crate::bits::Bits256;
use crate::elemset::{ElementSet, SetRole};
use crate::error::{Error, Result};
use crate::ring::{Element, RingPresentation};

/// Largest order for which [`enumerate_subrings`] is complete.
pub const COMPLETE_SUBRING_CAP: usize = 64;

fn close(ring: &RingPresentation, seed: impl IntoIterator<Item = usize>, multiplicative: bool) -> Bits256 {
    let mut members = Bits256::singleton(0);
    let mut list = vec![0usize];
    for s in seed {
        if members.insert(s) {
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        let push = |y: usize, members: &mut Bits256, list: &mut Vec<usize>| {
            if members.insert(y) {
                list.push(y);
            }
        };
        push(ring.neg_idx(x), &mut members, &mut list);
        for j in 0..=i {
            let y = list[j];
            push(ring.add_idx(x, y), &mut members, &mut list);
            if multiplicative {
                push(ring.mul_idx(x, y), &mut members, &mut list);
                push(ring.mul_idx(y, x), &mut members, &mut list);
            }
        }
        i += 1;
    }
    members
}

pub(crate) fn subring_closure_bits(ring: &RingPresentation, seed: impl IntoIterator<Item = usize>) -> Bits256 {
    close(ring, seed, true)
}

pub(crate) fn additive_closure_bits(ring: &RingPresentation, seed: impl IntoIterator<Item = usize>) -> Bits256 {
    close(ring, seed, false)
}

/// Smallest subring containing the seed elements.
pub fn subring_closure(ring: &RingPresentation, seed: &[Element]) -> Result<ElementSet> {
    let idx = seed
        .iter()
        .map(|e| ring.element_at(e.index()).and_then(|x| if x == *e { Ok(e.index()) } else { Err(Error::ElementRingMismatch) }))
        .collect::<Result<Vec<_>>>()?;
    Ok(ring.set_from_bits(subring_closure_bits(ring, idx), SetRole::Subring))
}

/// Smallest additive subgroup containing the seed elements.
pub fn additive_closure(ring: &RingPresentation, seed: &[usize]) -> ElementSet {
    ring.set_from_bits(additive_closure_bits(ring, seed.iter().copied()), SetRole::AdditiveSubgroup)
}

/// `<H, g>` for an additive subgroup `H`: the union of the cosets `H + kg`.
fn extend_subgroup(ring: &RingPresentation, h: &Bits256, g: usize) -> Bits256 {
    let mut out = *h;
    let mut shift = g;
    while !h.contains(shift) {
        for x in h.iter() {
            out.insert(ring.add_idx(x, shift));
        }
        shift = ring.add_idx(shift, g);
    }
    out
}

/// All additive subgroups, found by repeatedly extending known subgroups by
/// one element. Unsorted.
pub fn additive_subgroups(ring: &RingPresentation) -> Vec<Bits256> {
    let mut seen: HashSet<Bits256> = HashSet::new();
    let start = Bits256::singleton(0);
    seen.insert(start);
    let mut queue = vec![start];
    let mut head = 0;
    while head < queue.len() {
        let h = queue[head];
        head += 1;
        for g in 0..ring.order() {
            if h.contains(g) {
                continue;
            }
            let next = extend_subgroup(ring, &h, g);
            if seen.insert(next) {
                queue.push(next);
            }
        }
    }
    queue
}

/// Sort key: size first, then the increasing member list lexicographically.
fn sort_sets(sets: &mut [ElementSet]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
}

/// Every subring of a ring of order at most [`COMPLETE_SUBRING_CAP`]:
/// additive subgroups filtered by multiplicative closure, sorted by size and
/// then lexicographically by members.
pub fn enumerate_subrings(ring: &RingPresentation) -> Result<Vec<ElementSet>> {
    if ring.order() > COMPLETE_SUBRING_CAP {
        return Err(Error::OrderCapExceeded {
            order: ring.order(),
            cap: COMPLETE_SUBRING_CAP,
        });
    }
    let mut out: Vec<ElementSet> = additive_subgroups(ring)
        .into_iter()
        .filter(|h| {
            h.iter()
                .all(|a| h.iter().all(|b| h.contains(ring.mul_idx(a, b))))
        })
        .map(|h| ring.set_from_bits(h, SetRole::Subring))
        .collect();
    sort_sets(&mut out);
    Ok(out)
}

/// Incomplete subring search for rings past the complete cap: closures of
/// every seed set with at most `max_seeds` elements.
pub fn sweep_subrings_by_generators(ring: &RingPresentation, max_seeds: usize) -> Vec<ElementSet> {
    fn rec(
        ring: &RingPresentation,
        start: usize,
        seeds: &mut Vec<usize>,
        max: usize,
        found: &mut HashSet<Bits256>,
    ) {
        found.insert(subring_closure_bits(ring, seeds.iter().copied()));
        if seeds.len() == max {
            return;
        }
        for x in start..ring.order() {
            seeds.push(x);
            rec(ring, x + 1, seeds, max, found);
            seeds.pop();
        }
    }
    let mut found = HashSet::new();
    rec(ring, 1, &mut Vec::new(), max_seeds, &mut found);
    let mut out: Vec<ElementSet> = found
        .into_iter()
        .map(|b| ring.set_from_bits(b, SetRole::Subring))
        .collect();
    sort_sets(&mut out);
    out
}

/// `[S, K]`: the additive subgroup generated by all `sk - ks`.
pub fn commutator_module(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> Result<ElementSet> {
    ring.owns(s)?;
    ring.owns(k)?;
    let mut gens = Bits256::empty();
    for a in s.iter() {
        for b in k.iter() {
            gens.insert(ring.commutator_idx(a, b));
        }
    }
    Ok(ring.set_from_bits(additive_closure_bits(ring, gens.iter()), SetRole::AdditiveSubgroup))
}
