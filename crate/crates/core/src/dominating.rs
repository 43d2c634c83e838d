//! Dominating sets of `Γ(S,K)`: verification, the centralizer
//! characterization, and the three constructions.

use serde::Serialize;

use crate::bits::Bits256;
use crate::elemset::{ElementSet, SetRole};
use crate::error::{Error, Result};
use crate::graph::NCGraph;
use crate::ring::{Element, RingPresentation};
use crate::subring::{subring_closure_bits, COMPLETE_SUBRING_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Domination {
    pub dominating: bool,
    /// Smallest vertex outside `X` with no neighbor in `X`.
    pub undominated: Option<usize>,
}

fn check_vertices(g: &NCGraph, x: &ElementSet) -> Result<()> {
    if x.ring() != g.ring() {
        return Err(Error::ElementRingMismatch);
    }
    match x.iter().find(|&v| !g.is_vertex(v)) {
        Some(v) => Err(Error::XNotSubsetOfVertices(v)),
        None => Ok(()),
    }
}

pub(crate) fn domination_bits(g: &NCGraph, x: &Bits256) -> Domination {
    let undominated = g
        .vertices()
        .iter()
        .copied()
        .find(|&v| !x.contains(v) && !g.neighbors(v).iter().any(|&w| x.contains(w)));
    Domination {
        dominating: undominated.is_none(),
        undominated,
    }
}

pub fn is_dominating(g: &NCGraph, x: &ElementSet) -> Result<Domination> {
    check_vertices(g, x)?;
    Ok(domination_bits(g, x.members()))
}

/// Both sides of the centralizer characterization of dominating sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Characterization {
    /// `X` dominates by the definition.
    pub by_definition: bool,
    /// `C_S(X) ∪ C_K(X) ⊆ X ∪ C_S(K) ∪ C_K(S)`.
    pub by_centralizers: bool,
}

impl Characterization {
    pub fn agree(&self) -> bool {
        self.by_definition == self.by_centralizers
    }
}

pub(crate) fn characterization_bits(ring: &RingPresentation, g: &NCGraph, x: &Bits256) -> Characterization {
    let lhs = ring
        .centralizer_bits(g.s(), x)
        .members()
        .union(ring.centralizer_bits(g.k(), x).members());
    let rhs = x.union(g.c_s_k().members()).union(g.c_k_s().members());
    Characterization {
        by_definition: domination_bits(g, x).dominating,
        by_centralizers: lhs.is_subset(&rhs),
    }
}

pub fn dominating_characterization(ring: &RingPresentation, g: &NCGraph, x: &ElementSet) -> Result<Characterization> {
    ring.owns(x)?;
    check_vertices(g, x)?;
    Ok(characterization_bits(ring, g, x.members()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConstructionMode {
    /// `(S + C_K(S)) \ C_K(S)` for nested noncommutative `S ⊆ K`.
    Coset,
    /// Generators of `S` and `K` outside `C_S(K) ∪ C_K(S)`.
    GeneratorsGeneral,
    /// Generators of `S` outside `C_K(S)`, plus `s_1` shifted by the others.
    GeneratorsNested,
}

impl ConstructionMode {
    pub const ALL: [ConstructionMode; 3] = [
        ConstructionMode::Coset,
        ConstructionMode::GeneratorsGeneral,
        ConstructionMode::GeneratorsNested,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionMode::Coset => "coset",
            ConstructionMode::GeneratorsGeneral => "generators_general",
            ConstructionMode::GeneratorsNested => "generators_nested",
        }
    }
}

fn unmet(detail: &str) -> Error {
    Error::HypothesisNotMet(detail.to_string())
}

/// Builds the candidate dominating set prescribed by `mode`. The result is
/// not checked; pass it to [`is_dominating`].
pub fn dominating_construct(
    ring: &RingPresentation,
    g: &NCGraph,
    mode: ConstructionMode,
) -> Result<ElementSet> {
    let (s, k) = (g.s(), g.k());
    let nested = s.is_subset(k);
    let members = match mode {
        ConstructionMode::Coset => {
            if !nested {
                return Err(unmet("S is not contained in K"));
            }
            if ring.is_commutative_set(s) || ring.is_commutative_set(k) {
                return Err(unmet("S and K must both be noncommutative"));
            }
            let c = g.c_k_s();
            let mut out = Bits256::empty();
            for a in s.iter() {
                for z in c.iter() {
                    out.insert(ring.add_idx(a, z));
                }
            }
            out.difference(c.members())
        }
        ConstructionMode::GeneratorsGeneral => {
            require_unital_noncommutative(ring)?;
            let excluded = g.c_s_k().members().union(g.c_k_s().members());
            minimal_generating_bits(ring, s)?
                .into_iter()
                .chain(minimal_generating_bits(ring, k)?)
                .filter(|&v| !excluded.contains(v))
                .collect()
        }
        ConstructionMode::GeneratorsNested => {
            require_unital_noncommutative(ring)?;
            if !nested {
                return Err(unmet("S is not contained in K"));
            }
            let c = g.c_k_s();
            let (outside, inside): (Vec<usize>, Vec<usize>) =
                minimal_generating_bits(ring, s)?.into_iter().partition(|&v| !c.contains(v));
            let Some(&s1) = outside.first() else {
                return Err(unmet("every generator of S centralizes K"));
            };
            outside
                .iter()
                .copied()
                .chain(inside.iter().map(|&t| ring.add_idx(s1, t)))
                .collect()
        }
    };
    Ok(ring.set_from_bits(members, SetRole::Plain))
}

fn require_unital_noncommutative(ring: &RingPresentation) -> Result<()> {
    let p = ring.predicates();
    if !p.has_unity {
        return Err(unmet("the ring has no unity"));
    }
    if p.is_commutative {
        return Err(unmet("the ring is commutative"));
    }
    Ok(())
}

pub(crate) fn minimal_generating_bits(ring: &RingPresentation, s: &ElementSet) -> Result<Vec<usize>> {
    if s.len() > COMPLETE_SUBRING_CAP {
        return Err(Error::OrderCapExceeded {
            order: s.len(),
            cap: COMPLETE_SUBRING_CAP,
        });
    }
    let target = *s.members();
    let pool: Vec<usize> = s.iter().filter(|&v| v != 0).collect();

    // Depth-first over increasing index sequences; an element already in the
    // closure of the prefix can never belong to a minimum generating set.
    fn search(
        ring: &RingPresentation,
        pool: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        size: usize,
        target: &Bits256,
    ) -> bool {
        let closure = subring_closure_bits(ring, chosen.iter().copied());
        if chosen.len() == size {
            return closure == *target;
        }
        for i in start..pool.len() {
            if closure.contains(pool[i]) {
                continue;
            }
            chosen.push(pool[i]);
            if search(ring, pool, i + 1, chosen, size, target) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    for size in 0..=pool.len() {
        let mut chosen = Vec::with_capacity(size);
        if search(ring, &pool, 0, &mut chosen, size, &target) {
            return Ok(chosen);
        }
    }
    Err(Error::HypothesisNotMet("S is not a subring".into()))
}

/// A smallest subset of `S` whose subring closure is `S`, lexicographically
/// least among those of that size.
pub fn minimal_generating_set(ring: &RingPresentation, s: &ElementSet) -> Result<Vec<Element>> {
    ring.owns(s)?;
    Ok(minimal_generating_bits(ring, s)?
        .into_iter()
        .map(|v| ring.elem(v))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::build_gamma;
    use crate::subring::enumerate_subrings;

    fn whole(r: &RingPresentation) -> NCGraph {
        build_gamma(r, &r.full_set(), &r.full_set()).unwrap()
    }

    #[test]
    fn nc4a_domination() {
        let r = families::nc4a();
        let g = whole(&r);
        let a = r.subset(&[1]).unwrap();
        assert!(is_dominating(&g, &a).unwrap().dominating);
        let none = is_dominating(&g, &r.subset(&[]).unwrap()).unwrap();
        assert_eq!(none.undominated, Some(1));
        assert!(matches!(
            is_dominating(&g, &r.subset(&[0]).unwrap()),
            Err(Error::XNotSubsetOfVertices(0))
        ));
        let c = dominating_characterization(&r, &g, &a).unwrap();
        assert!(c.by_definition && c.by_centralizers);
        let e = dominating_characterization(&r, &g, &r.subset(&[]).unwrap()).unwrap();
        assert!(!e.by_definition && !e.by_centralizers);
    }

    #[test]
    fn isolated_pair_is_not_dominated() {
        let r = families::nc4a();
        let s = r.subset(&[0, 1]).unwrap().with_role(SetRole::Subring);
        let g = build_gamma(&r, &s, &r.full_set()).unwrap();
        let d = is_dominating(&g, &r.subset(&[2]).unwrap()).unwrap();
        assert_eq!(d.undominated, Some(3));
    }

    #[test]
    fn minimal_generators() {
        let r = families::nc4a();
        let a = r.subset(&[0, 1]).unwrap();
        assert_eq!(minimal_generating_bits(&r, &a).unwrap(), vec![1]);
        assert!(minimal_generating_bits(&r, &r.zero_set()).unwrap().is_empty());
        let t = families::t2(2);
        let gens = minimal_generating_bits(&t, &t.full_set()).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(subring_closure_bits(&t, gens.iter().copied()), *t.full_set().members());
        // no single element generates T2(Z2)
        assert!((1..8).all(|x| subring_closure_bits(&t, [x]).len() < 8));
    }

    #[test]
    fn constructions_dominate_on_t2() {
        let t = families::t2(2);
        let g = whole(&t);
        let coset = dominating_construct(&t, &g, ConstructionMode::Coset).unwrap();
        assert_eq!(coset.len(), 6);
        for mode in ConstructionMode::ALL {
            let x = dominating_construct(&t, &g, mode).unwrap();
            assert!(is_dominating(&g, &x).unwrap().dominating, "{}", mode.name());
        }
        let r = families::nc4a();
        let g = whole(&r);
        assert_eq!(dominating_construct(&r, &g, ConstructionMode::Coset).unwrap().indices(), vec![1, 2, 3]);
        assert!(matches!(
            dominating_construct(&r, &g, ConstructionMode::GeneratorsNested),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn nested_characterization_sweep_on_t2() {
        let t = families::t2(2);
        for s in enumerate_subrings(&t).unwrap() {
            let g = build_gamma(&t, &s, &t.full_set()).unwrap();
            let v = g.vertices().to_vec();
            for mask in 0u32..1 << v.len() {
                let x: Bits256 = (0..v.len()).filter(|i| mask >> i & 1 == 1).map(|i| v[i]).collect();
                let c = characterization_bits(&t, &g, &x);
                if s.len() == 8 {
                    assert!(c.agree());
                }
            }
        }
    }
}
