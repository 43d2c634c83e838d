use std::collections::HashSet;

use serde::Serialize;

use crate::enumerate::{canonical_tensor, enumerate_rings_on_group, RingFilter, CANONICAL_ORDER_CAP};
use crate::error::{Error, Result};
use crate::families;
use crate::ring::RingPresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    BuiltinFamily,
    File,
    Enumerated,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub ring: RingPresentation,
    pub provenance: Provenance,
    /// Family and parameters, e.g. `Zn n=6` or `product nc4a Z2`.
    pub family: String,
}

/// What [`build_catalog`] includes.
#[derive(Debug, Clone)]
pub struct CatalogSpec {
    pub max_order: usize,
    /// `Z_n` for `2 ≤ n ≤ zn_max`.
    pub zn_max: u32,
    /// T2(Z2), T2(Z3), T3(Z2), N3(Z2), N3(Z3), M2(Z2).
    pub matrix_families: bool,
    /// Rings on (2), (3), (4), (2,2) up to isomorphism.
    pub enumerated: bool,
    pub opposites: bool,
    pub products: bool,
    /// Additional rings, e.g. read from files.
    pub extra: Vec<CatalogEntry>,
}

impl Default for CatalogSpec {
    fn default() -> Self {
        CatalogSpec {
            max_order: 64,
            zn_max: 16,
            matrix_families: true,
            enumerated: true,
            opposites: true,
            products: true,
            extra: Vec::new(),
        }
    }
}

impl CatalogSpec {
    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    /// Only the cyclic rings `Z_n`.
    pub fn cyclic_only(zn_max: u32) -> Self {
        CatalogSpec {
            zn_max,
            matrix_families: false,
            enumerated: false,
            opposites: false,
            products: false,
            ..CatalogSpec::default()
        }
    }
}

struct Builder {
    entries: Vec<CatalogEntry>,
    names: HashSet<String>,
    canonical: HashSet<(Vec<u32>, Vec<usize>)>,
    max_order: usize,
}

impl Builder {
    fn canonical_key(ring: &RingPresentation) -> Option<(Vec<u32>, Vec<usize>)> {
        (ring.order() <= CANONICAL_ORDER_CAP)
            .then(|| canonical_tensor(ring).ok().map(|t| (ring.invariant_factors().to_vec(), t)))
            .flatten()
    }

    fn is_known(&self, ring: &RingPresentation) -> bool {
        Self::canonical_key(ring).is_some_and(|k| self.canonical.contains(&k))
    }

    /// Adds an entry; isomorphic duplicates of earlier entries are skipped
    /// when they can be recognized.
    fn push(&mut self, ring: RingPresentation, provenance: Provenance, family: String) -> Result<()> {
        if ring.order() > self.max_order {
            return Ok(());
        }
        if self.is_known(&ring) {
            return Ok(());
        }
        if !self.names.insert(ring.name().to_string()) {
            return Err(Error::DuplicateName(ring.name().to_string()));
        }
        if let Some(k) = Self::canonical_key(&ring) {
            self.canonical.insert(k);
        }
        self.entries.push(CatalogEntry {
            ring,
            provenance,
            family,
        });
        Ok(())
    }
}

/// Deterministic catalog: built-in families, enumerated small rings,
/// opposites and a fixed set of direct products, all within `max_order`.
pub fn build_catalog(spec: &CatalogSpec) -> Result<Vec<CatalogEntry>> {
    let mut b = Builder {
        entries: Vec::new(),
        names: HashSet::new(),
        canonical: HashSet::new(),
        max_order: spec.max_order,
    };
    for entry in &spec.extra {
        if entry.ring.order() > spec.max_order {
            return Err(Error::OrderCapExceeded {
                order: entry.ring.order(),
                cap: spec.max_order,
            });
        }
        if !b.names.insert(entry.ring.name().to_string()) {
            return Err(Error::DuplicateName(entry.ring.name().to_string()));
        }
        if let Some(k) = Builder::canonical_key(&entry.ring) {
            b.canonical.insert(k);
        }
        b.entries.push(entry.clone());
    }
    for n in 2..=spec.zn_max {
        b.push(families::zn(n), Provenance::BuiltinFamily, format!("Zn n={n}"))?;
    }
    let nc4a = families::nc4a();
    let nc4b = families::nc4b();
    if spec.matrix_families {
        for (ring, family) in [
            (families::t2(2), "T2 p=2"),
            (families::t2(3), "T2 p=3"),
            (families::t3(2), "T3 p=2"),
            (families::n3(2), "N3 p=2"),
            (families::n3(3), "N3 p=3"),
            (families::m2(2), "M2 p=2"),
        ] {
            b.push(ring, Provenance::BuiltinFamily, family.to_string())?;
        }
    }
    if spec.enumerated {
        let dedup = RingFilter {
            up_to_isomorphism: true,
            ..RingFilter::default()
        };
        let named = [Builder::canonical_key(&nc4a), Builder::canonical_key(&nc4b)];
        for factors in [&[2u32][..], &[3], &[4], &[2, 2]] {
            for ring in enumerate_rings_on_group(factors, dedup)? {
                let key = Builder::canonical_key(&ring);
                let family = format!("enumerated {factors:?}");
                let ring = if key == named[0] {
                    nc4a.clone()
                } else if key == named[1] {
                    nc4b.clone()
                } else {
                    ring
                };
                b.push(ring, Provenance::Enumerated, family)?;
            }
        }
    }
    if spec.opposites {
        let noncommutative: Vec<RingPresentation> = b
            .entries
            .iter()
            .filter(|e| !e.ring.is_commutative() && e.ring.order() <= CANONICAL_ORDER_CAP)
            .map(|e| e.ring.clone())
            .collect();
        for ring in noncommutative {
            let family = format!("opposite {}", ring.name());
            b.push(ring.opposite(), Provenance::BuiltinFamily, family)?;
        }
    }
    if spec.products {
        let zero2 = families::zero_ring(&[2], "N2");
        let small = [families::zn(2), families::zn(3), families::zn(4), zero2];
        let left = [nc4a.clone(), nc4b.clone(), families::t2(2), families::n3(2)];
        let mut pairs: Vec<(&RingPresentation, &RingPresentation)> = Vec::new();
        for l in &left {
            for r in &small {
                pairs.push((l, r));
            }
        }
        pairs.push((&nc4a, &nc4a));
        pairs.push((&nc4a, &nc4b));
        for (l, r) in pairs {
            if l.order() * r.order() > spec.max_order {
                continue;
            }
            let ring = l.direct_product(r, spec.max_order)?;
            let family = format!("product {} {}", l.name(), r.name());
            b.push(ring, Provenance::BuiltinFamily, family)?;
        }
    }
    Ok(b.entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_has_named_order_four_rings() {
        let cat = build_catalog(&CatalogSpec::default().with_max_order(16)).unwrap();
        let names: Vec<&str> = cat.iter().map(|e| e.ring.name()).collect();
        assert!(names.contains(&"nc4a") && names.contains(&"nc4b"), "{names:?}");
        let unique: HashSet<&str> = names.iter().copied().collect();
        assert_eq!(unique.len(), names.len());
        let t2 = cat.iter().find(|e| e.ring.name() == "T2(Z2)").unwrap();
        assert_eq!(t2.ring.order(), 8);
        assert!(t2.ring.predicates().has_unity);
        // 11 rings of order 4, each once
        assert_eq!(cat.iter().filter(|e| e.ring.order() == 4).count(), 11);
        assert!(cat.iter().all(|e| e.ring.order() <= 16));
    }

    #[test]
    fn cyclic_only_is_commutative() {
        let cat = build_catalog(&CatalogSpec::cyclic_only(16)).unwrap();
        assert_eq!(cat.len(), 15);
        assert!(cat.iter().all(|e| e.ring.is_commutative()));
    }

    #[test]
    fn duplicate_extra_names_are_rejected() {
        let extra = CatalogEntry {
            ring: families::zn(5),
            provenance: Provenance::File,
            family: "file".into(),
        };
        let spec = CatalogSpec {
            extra: vec![extra.clone(), extra],
            ..CatalogSpec::cyclic_only(4)
        };
        assert!(matches!(build_catalog(&spec), Err(Error::DuplicateName(_))));
    }
}
