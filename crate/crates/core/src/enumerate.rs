//! Exhaustive enumeration of ring structures on a small additive group, and
//! canonical forms for isomorphism tests.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::ring::{RingPresentation, DEFAULT_ORDER_CAP};

/// Largest additive group order accepted by [`enumerate_rings_on_group`].
pub const ENUMERATION_ORDER_CAP: usize = 16;
/// Largest number of candidate tensors swept.
pub const TENSOR_SPACE_CAP: u64 = 1 << 24;
/// Largest order for which canonical forms enumerate all automorphisms.
pub const CANONICAL_ORDER_CAP: usize = 27;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RingFilter {
    pub noncommutative_only: bool,
    pub unital_only: bool,
    /// Keep one representative (the lexicographically least tensor) per
    /// isomorphism class.
    pub up_to_isomorphism: bool,
}

/// Every associative structure tensor on the given additive group, in
/// lexicographic order of the tensor entries (entry `(1,1)` most significant).
pub fn enumerate_rings_on_group(factors: &[u32], filter: RingFilter) -> Result<Vec<RingPresentation>> {
    let group = AbelianGroup::new(factors)?;
    let n = group.order();
    if n > ENUMERATION_ORDER_CAP {
        return Err(Error::OrderCapExceeded {
            order: n,
            cap: ENUMERATION_ORDER_CAP,
        });
    }
    let m = factors.len();
    let entries = (m * m) as u32;
    let space = (n as u64).checked_pow(entries).filter(|&s| s <= TENSOR_SPACE_CAP).ok_or(
        Error::SizeCapExceeded {
            size: usize::MAX,
            cap: TENSOR_SPACE_CAP as usize,
        },
    )?;
    let decoded: Vec<Vec<u32>> = (0..n).map(|i| group.decode(i)).collect();
    let label: Vec<String> = factors.iter().map(u32::to_string).collect();
    let label = label.join("x");

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    let mut digits = vec![0usize; m * m];
    for _ in 0..space {
        let mut flat = Vec::with_capacity(m * m * m);
        for &d in &digits {
            flat.extend_from_slice(&decoded[d]);
        }
        if let Ok(ring) = RingPresentation::from_flat(factors, flat, "", DEFAULT_ORDER_CAP) {
            let keep = (!filter.noncommutative_only || !ring.is_commutative())
                && (!filter.unital_only || ring.predicates().has_unity);
            let fresh = keep && (!filter.up_to_isomorphism || seen.insert(canonical_tensor(&ring)?));
            if fresh {
                let name = format!("E{label}.{}", out.len());
                out.push(ring.renamed(&name));
            }
        }
        // odometer, last entry least significant
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

/// Lexicographically least tensor (as element indices of `e_i e_j`) over all
/// additive automorphisms transporting the multiplication.
pub fn canonical_tensor(ring: &RingPresentation) -> Result<Vec<usize>> {
    if ring.order() > CANONICAL_ORDER_CAP {
        return Err(Error::SizeCapExceeded {
            size: ring.order(),
            cap: CANONICAL_ORDER_CAP,
        });
    }
    let m = ring.rank();
    let gens: Vec<usize> = (0..m).map(|i| ring.group().generator(i)).collect();
    let table = ring.group().table();
    let mut best: Option<Vec<usize>> = None;
    for f in table.isomorphisms(&table) {
        let mut inv = vec![0usize; f.len()];
        for (x, &y) in f.iter().enumerate() {
            inv[y] = x;
        }
        let candidate: Vec<usize> = (0..m * m)
            .map(|ij| f[ring.mul_idx(inv[gens[ij / m]], inv[gens[ij % m]])])
            .collect();
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    Ok(best.expect("the identity is an automorphism"))
}

/// Ring isomorphism for rings on the same additive presentation within the
/// canonical-form cap.
pub fn rings_isomorphic(a: &RingPresentation, b: &RingPresentation) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.group().table().invariant_factors() != b.group().table().invariant_factors() {
        return Ok(false);
    }
    if a.invariant_factors() != b.invariant_factors() {
        return Err(Error::Shape("canonical forms need identical additive presentations".into()));
    }
    Ok(canonical_tensor(a)? == canonical_tensor(b)?)
}

/// The ring whose tensor is the canonical form of `ring`.
pub fn canonical_ring(ring: &RingPresentation) -> Result<RingPresentation> {
    let canon = canonical_tensor(ring)?;
    let flat: Vec<u32> = canon.iter().flat_map(|&e| ring.coeffs(e)).collect();
    RingPresentation::from_flat(ring.invariant_factors(), flat, ring.name(), DEFAULT_ORDER_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn cyclic_groups_of_prime_order() {
        let r2 = enumerate_rings_on_group(&[2], RingFilter::default()).unwrap();
        assert_eq!(r2.len(), 2);
        assert!(r2[0].flat_tensor() == [0] && r2[1].flat_tensor() == [1]);
        assert_eq!(enumerate_rings_on_group(&[3], RingFilter::default()).unwrap().len(), 3);
    }

    #[test]
    fn klein_sweep_contains_nc4a_and_nc4b() {
        let all = enumerate_rings_on_group(
            &[2, 2],
            RingFilter {
                noncommutative_only: true,
                ..Default::default()
            },
        )
        .unwrap();
        let a = families::nc4a();
        let b = families::nc4b();
        assert!(all.iter().any(|r| r.flat_tensor() == a.flat_tensor()));
        assert!(all.iter().any(|r| r.flat_tensor() == b.flat_tensor()));
        assert!(all.iter().all(|r| !r.is_commutative()));
    }

    #[test]
    fn isomorphism_classes_of_order_four() {
        let dedup = RingFilter {
            up_to_isomorphism: true,
            ..Default::default()
        };
        let klein = enumerate_rings_on_group(&[2, 2], dedup).unwrap();
        let cyclic = enumerate_rings_on_group(&[4], dedup).unwrap();
        // 11 rings of order 4 up to isomorphism: 8 on Z2+Z2, 3 on Z4
        assert_eq!(klein.len() + cyclic.len(), 11);
        assert_eq!(cyclic.len(), 3);
        let nc: Vec<_> = klein.iter().filter(|r| !r.is_commutative()).collect();
        assert_eq!(nc.len(), 2);
        assert!(!rings_isomorphic(nc[0], nc[1]).unwrap());
        assert!(rings_isomorphic(&families::nc4a(), &canonical_ring(&families::nc4a()).unwrap()).unwrap());
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate_rings_on_group(&[2, 2, 2, 2, 2], RingFilter::default()),
            Err(Error::OrderCapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_rings_on_group(&[2, 2, 2], RingFilter::default()),
            Err(Error::SizeCapExceeded { .. })
        ));
    }
}
