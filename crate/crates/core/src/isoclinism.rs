//! Generalized Z-isoclinism of nested subring pairs and the graph
//! isomorphism theorems attached to it.
//!
//! A pair `(S, K)` with `S ⊆ K` is Z-isoclinic to `(S', K')` when an additive
//! isomorphism `φ: K/N → K'/N'` (with `N = Z(K) ∩ S`) carries `S/N` onto
//! `S'/N'` and the induced map `[u, v] ↦ [u', v']` on commutators is a well
//! defined additive bijection `ψ: [S, K] → [S', K']`.

use serde::Serialize;

use crate::elemset::ElementSet;
use crate::error::{Error, Result};
use crate::graph::build_gamma;
use crate::graph_iso::graph_isomorphic;
use crate::group::FiniteAbelian;
use crate::ring::{RingId, RingPresentation};
use crate::subring::commutator_module;
use crate::verdict::Status;

/// Largest `|K|` accepted by the exhaustive witness search.
pub const ISOCLINISM_ORDER_CAP: usize = 16;

const OUTSIDE: u16 = u16::MAX;

#[derive(Debug, Clone)]
pub struct QuotientGroup {
    ring: RingId,
    reps: Vec<usize>,
    coset_of: Vec<u16>,
    group: FiniteAbelian,
    factors: Vec<u32>,
}

impl QuotientGroup {
    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Least element index of each coset, increasing; coset `i` has
    /// representative `representatives()[i]`.
    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    /// Coset id of an element of `K`.
    pub fn coset_of(&self, element: usize) -> Option<usize> {
        self.coset_of
            .get(element)
            .filter(|&&c| c != OUTSIDE)
            .map(|&c| c as usize)
    }

    pub fn invariant_factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn group(&self) -> &FiniteAbelian {
        &self.group
    }
}

/// `K/N` with cosets numbered by their least element.
pub fn quotient_group(ring: &RingPresentation, k: &ElementSet, n: &ElementSet) -> Result<QuotientGroup> {
    ring.owns(k)?;
    ring.owns(n)?;
    if !n.is_subset(k) || !ring.is_additive_subgroup(n) || !ring.is_additive_subgroup(k) {
        return Err(Error::NNotSubgroupOfK);
    }
    let mut coset_of = vec![OUTSIDE; ring.order()];
    let mut reps = Vec::new();
    for x in k.iter() {
        if coset_of[x] == OUTSIDE {
            let c = reps.len() as u16;
            reps.push(x);
            for m in n.iter() {
                coset_of[ring.add_idx(x, m)] = c;
            }
        }
    }
    let q = reps.len();
    let mut add = vec![0u16; q * q];
    for a in 0..q {
        for b in 0..q {
            add[a * q + b] = coset_of[ring.add_idx(reps[a], reps[b])];
        }
    }
    let group = FiniteAbelian::from_table(q, add);
    let factors = group.invariant_factors();
    Ok(QuotientGroup {
        ring: ring.id(),
        reps,
        coset_of,
        group,
        factors,
    })
}

/// Every additive isomorphism `Q1 → Q2` as a map of coset ids, in a fixed
/// order; empty when the invariant factors differ.
pub fn abelian_isomorphisms<'a>(q1: &'a QuotientGroup, q2: &'a QuotientGroup) -> impl Iterator<Item = Vec<usize>> + 'a {
    q1.group.isomorphisms(&q2.group)
}

/// One side of an isoclinism problem: a nested pair with its derived data.
#[derive(Debug, Clone)]
pub struct PairData<'r> {
    pub ring: &'r RingPresentation,
    pub s: ElementSet,
    pub k: ElementSet,
    /// `Z(K) ∩ S`.
    pub n: ElementSet,
    pub center_k: ElementSet,
    pub quotient: QuotientGroup,
    /// Coset ids of `S/N` inside `K/N`.
    pub s_cosets: Vec<usize>,
    /// `[S, K]`.
    pub commutators: ElementSet,
}

impl<'r> PairData<'r> {
    pub fn new(ring: &'r RingPresentation, s: &ElementSet, k: &ElementSet) -> Result<Self> {
        ring.owns(s)?;
        ring.owns(k)?;
        if !s.is_subset(k) {
            return Err(Error::HypothesisNotMet("S is not contained in K".into()));
        }
        if k.len() > ISOCLINISM_ORDER_CAP {
            return Err(Error::SizeCapExceeded {
                size: k.len(),
                cap: ISOCLINISM_ORDER_CAP,
            });
        }
        let center_k = ring.center_of(k);
        let n = center_k.intersection(s);
        let quotient = quotient_group(ring, k, &n)?;
        let mut s_cosets: Vec<usize> = s.iter().filter_map(|x| quotient.coset_of(x)).collect();
        s_cosets.sort_unstable();
        s_cosets.dedup();
        let commutators = commutator_module(ring, s, k)?;
        Ok(PairData {
            ring,
            s: *s,
            k: *k,
            n,
            center_k,
            quotient,
            s_cosets,
            commutators,
        })
    }

    /// Cheap invariants that isoclinic pairs share.
    pub fn invariants(&self) -> IsoclinismInvariants {
        let s_quotient = self.s.len() / self.n.len();
        IsoclinismInvariants {
            k_quotient: self.quotient.invariant_factors().to_vec(),
            s_quotient,
            commutator_order: self.commutators.len(),
        }
    }

    /// `(|Z(K) ∩ S|, |Z(K)|)`: the side conditions of the graph theorem.
    pub fn side_condition_key(&self) -> (usize, usize) {
        (self.n.len(), self.center_k.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IsoclinismInvariants {
    pub k_quotient: Vec<u32>,
    pub s_quotient: usize,
    pub commutator_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoclinismWitness {
    /// Coset representative pairs `(x, y)`: `φ(x + N1) = y + N2`.
    pub phi: Vec<(usize, usize)>,
    /// `ψ` on `[S1, K1]`.
    pub psi: Vec<(usize, usize)>,
    /// Bijection `Z(K1) → Z(K2)` carrying `Z(K1) ∩ S1` onto `Z(K2) ∩ S2`.
    pub theta: Option<Vec<(usize, usize)>>,
    /// Vertex bijection `Γ(S1,K1) → Γ(S2,K2)` built from transversals and
    /// `θ`, kept only when it preserves adjacency.
    pub alpha: Option<Vec<(usize, usize)>>,
}

impl IsoclinismWitness {
    pub fn phi_is_identity(&self) -> bool {
        self.phi.iter().all(|(x, y)| x == y)
    }
}

/// Builds `ψ` for a candidate `φ` (as coset ids) by sweeping all `(u, v)` in
/// `S1 × K1`, then checks that it extends to an additive bijection.
fn build_psi(a: &PairData, b: &PairData, phi: &[usize]) -> Option<Vec<(usize, usize)>> {
    let (r1, r2) = (a.ring, b.ring);
    let mut psi: Vec<u16> = vec![OUTSIDE; r1.order()];
    let mut seeds = Vec::new();
    for u in a.s.iter() {
        let u2 = b.quotient.reps[phi[a.quotient.coset_of(u)?]];
        for v in a.k.iter() {
            let v2 = b.quotient.reps[phi[a.quotient.coset_of(v)?]];
            let c1 = r1.commutator_idx(u, v);
            let c2 = r2.commutator_idx(u2, v2) as u16;
            match psi[c1] {
                OUTSIDE => {
                    psi[c1] = c2;
                    seeds.push((c1, c2 as usize));
                }
                prev if prev != c2 => return None,
                _ => {}
            }
        }
    }
    extend_additively(r1, r2, seeds, a.commutators.len(), b.commutators.len())
}

/// Closes a partial map under addition; `None` on any conflict or if the
/// result is not a bijection between groups of the given orders.
fn extend_additively(
    r1: &RingPresentation,
    r2: &RingPresentation,
    seeds: Vec<(usize, usize)>,
    domain_order: usize,
    codomain_order: usize,
) -> Option<Vec<(usize, usize)>> {
    let mut map: Vec<u16> = vec![OUTSIDE; r1.order()];
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let push = |x: usize, y: usize, map: &mut Vec<u16>, pairs: &mut Vec<(usize, usize)>| -> bool {
        match map[x] {
            OUTSIDE => {
                map[x] = y as u16;
                pairs.push((x, y));
                true
            }
            prev => prev as usize == y,
        }
    };
    if !push(0, 0, &mut map, &mut pairs) {
        return None;
    }
    for (x, y) in seeds {
        if !push(x, y, &mut map, &mut pairs) {
            return None;
        }
    }
    let mut i = 0;
    while i < pairs.len() {
        if pairs.len() > domain_order {
            return None;
        }
        let (x, y) = pairs[i];
        for j in 0..=i {
            let (x2, y2) = pairs[j];
            if !push(r1.add_idx(x, x2), r2.add_idx(y, y2), &mut map, &mut pairs) {
                return None;
            }
        }
        i += 1;
    }
    let mut images: Vec<usize> = pairs.iter().map(|&(_, y)| y).collect();
    images.sort_unstable();
    images.dedup();
    if pairs.len() != domain_order || images.len() != pairs.len() || codomain_order != domain_order {
        return None;
    }
    pairs.sort_unstable();
    Some(pairs)
}

fn phi_preserves_s(a: &PairData, b: &PairData, phi: &[usize]) -> bool {
    a.s_cosets.len() == b.s_cosets.len() && a.s_cosets.iter().all(|&c| b.s_cosets.binary_search(&phi[c]).is_ok())
}

fn witness_from(a: &PairData, b: &PairData, phi: &[usize], psi: Vec<(usize, usize)>) -> IsoclinismWitness {
    let phi_pairs = phi
        .iter()
        .enumerate()
        .map(|(c, &d)| (a.quotient.reps[c], b.quotient.reps[d]))
        .collect();
    let mut w = IsoclinismWitness {
        phi: phi_pairs,
        psi,
        theta: None,
        alpha: None,
    };
    if a.side_condition_key() == b.side_condition_key() {
        let theta = build_theta(a, b);
        w.alpha = build_alpha(a, b, phi, &theta);
        w.theta = Some(theta);
    }
    w
}

/// Order-preserving matching of `Z(K1) ∩ S1` with `Z(K2) ∩ S2` and of the
/// remaining central elements.
fn build_theta(a: &PairData, b: &PairData) -> Vec<(usize, usize)> {
    let split = |p: &PairData| -> (Vec<usize>, Vec<usize>) { p.center_k.iter().partition(|&z| p.s.contains(z)) };
    let (a_in, a_out) = split(a);
    let (b_in, b_out) = split(b);
    let mut theta: Vec<(usize, usize)> = a_in.into_iter().zip(b_in).chain(a_out.into_iter().zip(b_out)).collect();
    theta.sort_unstable();
    theta
}

/// `α(t + z) = t' + θ(z)` over a transversal `t` of `K1/Z(K1)` that starts
/// with elements of `S1`, where `t'` represents `φ(t + N1)`.
fn build_alpha(a: &PairData, b: &PairData, phi: &[usize], theta: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let (r1, r2) = (a.ring, b.ring);
    let center = a.center_k.members();
    let mut covered = crate::bits::Bits256::empty();
    let mut transversal = Vec::new();
    for t in a.s.iter().chain(a.k.iter().filter(|&x| !a.s.contains(x))) {
        if covered.contains(t) {
            continue;
        }
        transversal.push(t);
        for z in center.iter() {
            covered.insert(r1.add_idx(t, z));
        }
    }
    let mut alpha = vec![OUTSIDE; r1.order()];
    let mut hit = crate::bits::Bits256::empty();
    for &t in &transversal {
        let t2 = b.quotient.reps[phi[a.quotient.coset_of(t)?]];
        for &(z, z2) in theta {
            let y = r2.add_idx(t2, z2);
            if !hit.insert(y) {
                return None;
            }
            alpha[r1.add_idx(t, z)] = y as u16;
        }
    }
    let g1 = build_gamma(r1, &a.s, &a.k).ok()?;
    let g2 = build_gamma(r2, &b.s, &b.k).ok()?;
    let map: Vec<(usize, usize)> = g1.vertices().iter().map(|&v| (v, alpha[v] as usize)).collect();
    let onto = map.len() == g2.vertex_count() && map.iter().all(|&(_, y)| g2.is_vertex(y));
    let preserves = map
        .iter()
        .all(|&(v, y)| map.iter().all(|&(w, y2)| g1.adjacent(v, w) == g2.adjacent(y, y2)));
    (onto && preserves).then_some(map)
}

/// Searches for a generalized Z-isoclinism from `(S1, K1)` to `(S2, K2)`.
/// When both sides are the same pair of the same ring the identity is tried
/// first.
pub fn z_isoclinic_pair(
    ring1: &RingPresentation,
    s1: &ElementSet,
    k1: &ElementSet,
    ring2: &RingPresentation,
    s2: &ElementSet,
    k2: &ElementSet,
) -> Result<Option<IsoclinismWitness>> {
    let a = PairData::new(ring1, s1, k1)?;
    let b = PairData::new(ring2, s2, k2)?;
    Ok(isoclinism_between(&a, &b))
}

pub fn isoclinism_between(a: &PairData, b: &PairData) -> Option<IsoclinismWitness> {
    if a.invariants() != b.invariants() {
        return None;
    }
    if a.ring.id() == b.ring.id() && a.s == b.s && a.k == b.k {
        let identity: Vec<usize> = (0..a.quotient.order()).collect();
        if let Some(psi) = build_psi(a, b, &identity) {
            return Some(witness_from(a, b, &identity, psi));
        }
    }
    for phi in abelian_isomorphisms(&a.quotient, &b.quotient) {
        if !phi_preserves_s(a, b, &phi) {
            continue;
        }
        if let Some(psi) = build_psi(a, b, &phi) {
            return Some(witness_from(a, b, &phi, psi));
        }
    }
    None
}

/// Checks the defining property literally: for every `u ∈ S1`, `v ∈ K1` and
/// every choice of `u' ∈ φ(u + N1) ∩ S2`, `v' ∈ φ(v + N1)`, `ψ([u,v]) = [u',v']`.
pub fn verify_witness(a: &PairData, b: &PairData, w: &IsoclinismWitness) -> bool {
    let (r1, r2) = (a.ring, b.ring);
    let coset_image = |x: usize| -> Option<usize> {
        let rep = a.quotient.reps[a.quotient.coset_of(x)?];
        let (_, y) = w.phi.iter().find(|(p, _)| *p == rep)?;
        b.quotient.coset_of(*y)
    };
    let psi = |c: usize| w.psi.iter().find(|(p, _)| *p == c).map(|&(_, y)| y);
    for u in a.s.iter() {
        let Some(cu) = coset_image(u) else { return false };
        if b.s_cosets.binary_search(&cu).is_err() {
            return false;
        }
        for v in a.k.iter() {
            let Some(cv) = coset_image(v) else { return false };
            let Some(target) = psi(r1.commutator_idx(u, v)) else { return false };
            for u2 in b.s.iter().filter(|&x| b.quotient.coset_of(x) == Some(cu)) {
                for v2 in b.k.iter().filter(|&x| b.quotient.coset_of(x) == Some(cv)) {
                    if r2.commutator_idx(u2, v2) != target {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// --- graph audits ---

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AuditMode {
    PairTheorem,
    SubringTheorem,
    Corollary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoclinismVerdict {
    pub claim_id: &'static str,
    pub status: Status,
    /// Whether the hypothesis (isoclinism or graph isomorphism) held.
    pub premise: bool,
    pub side_conditions: bool,
    pub graphs_isomorphic: Option<bool>,
    /// Whether the transversal construction of `α` produced an isomorphism.
    pub alpha_constructed: Option<bool>,
}

impl IsoclinismVerdict {
    fn not_applicable(claim_id: &'static str, premise: bool, side_conditions: bool) -> Self {
        IsoclinismVerdict {
            claim_id,
            status: Status::NotApplicable,
            premise,
            side_conditions,
            graphs_isomorphic: None,
            alpha_constructed: None,
        }
    }
}

/// Isoclinic pairs with equal `|Z(K) ∩ S|` and `|Z(K)|` have isomorphic graphs.
pub fn pair_theorem_check(a: &PairData, b: &PairData) -> Result<IsoclinismVerdict> {
    const ID: &str = "S5.pair-theorem";
    let side = a.side_condition_key() == b.side_condition_key();
    let Some(w) = isoclinism_between(a, b) else {
        return Ok(IsoclinismVerdict::not_applicable(ID, false, side));
    };
    if !side {
        return Ok(IsoclinismVerdict::not_applicable(ID, true, false));
    }
    let g1 = build_gamma(a.ring, &a.s, &a.k)?;
    let g2 = build_gamma(b.ring, &b.s, &b.k)?;
    let iso = graph_isomorphic(&g1, &g2)?.is_some();
    Ok(IsoclinismVerdict {
        claim_id: ID,
        status: Status::from_bool(iso),
        premise: true,
        side_conditions: true,
        graphs_isomorphic: Some(iso),
        alpha_constructed: Some(w.alpha.is_some()),
    })
}

fn gamma_iso(ring: &RingPresentation, s1: &ElementSet, k1: &ElementSet, s2: &ElementSet, k2: &ElementSet) -> Result<bool> {
    let g1 = build_gamma(ring, s1, k1)?;
    let g2 = build_gamma(ring, s2, k2)?;
    Ok(graph_isomorphic(&g1, &g2)?.is_some())
}

/// `Γ(S1,R) ≅ Γ(S2,R)` implies `Γ(S1) ≅ Γ(S2)` in a noncommutative `R`.
pub fn subring_theorem_check(ring: &RingPresentation, s1: &ElementSet, s2: &ElementSet) -> Result<IsoclinismVerdict> {
    const ID: &str = "S5.subring-theorem";
    if ring.is_commutative() {
        return Ok(IsoclinismVerdict::not_applicable(ID, false, true));
    }
    let r = ring.full_set();
    if !gamma_iso(ring, s1, &r, s2, &r)? {
        return Ok(IsoclinismVerdict::not_applicable(ID, false, true));
    }
    let iso = gamma_iso(ring, s1, s1, s2, s2)?;
    Ok(IsoclinismVerdict {
        claim_id: ID,
        status: Status::from_bool(iso),
        premise: true,
        side_conditions: true,
        graphs_isomorphic: Some(iso),
        alpha_constructed: None,
    })
}

/// `(S1,R)` isoclinic to `(S2,R)` with `|Z(R) ∩ S1| = |Z(R) ∩ S2|` implies
/// `Γ(S1) ≅ Γ(S2)`.
pub fn corollary_check(ring: &RingPresentation, s1: &ElementSet, s2: &ElementSet) -> Result<IsoclinismVerdict> {
    const ID: &str = "S5.corollary";
    if ring.is_commutative() {
        return Ok(IsoclinismVerdict::not_applicable(ID, false, false));
    }
    let r = ring.full_set();
    let a = PairData::new(ring, s1, &r)?;
    let b = PairData::new(ring, s2, &r)?;
    let side = a.n.len() == b.n.len();
    if isoclinism_between(&a, &b).is_none() {
        return Ok(IsoclinismVerdict::not_applicable(ID, false, side));
    }
    if !side {
        return Ok(IsoclinismVerdict::not_applicable(ID, true, false));
    }
    let iso = gamma_iso(ring, s1, s1, s2, s2)?;
    Ok(IsoclinismVerdict {
        claim_id: ID,
        status: Status::from_bool(iso),
        premise: true,
        side_conditions: true,
        graphs_isomorphic: Some(iso),
        alpha_constructed: None,
    })
}

/// An instance for [`isoclinism_graph_audit`]: a ring with two subrings.
pub struct AuditInstance<'r> {
    pub ring: &'r RingPresentation,
    pub s: ElementSet,
    pub k: ElementSet,
}

/// Runs `mode` on consecutive pairs of instances. For the pair theorem the
/// two instances are the pairs `(S, K)`; for the other modes both instances
/// share the ring and `S1 = first.s`, `S2 = second.s`.
pub fn isoclinism_graph_audit(pairs: &[(AuditInstance, AuditInstance)], mode: AuditMode) -> Result<Vec<IsoclinismVerdict>> {
    pairs
        .iter()
        .map(|(x, y)| match mode {
            AuditMode::PairTheorem => {
                let a = PairData::new(x.ring, &x.s, &x.k)?;
                let b = PairData::new(y.ring, &y.s, &y.k)?;
                pair_theorem_check(&a, &b)
            }
            AuditMode::SubringTheorem | AuditMode::Corollary => {
                if x.ring.id() != y.ring.id() {
                    return Err(Error::ElementRingMismatch);
                }
                if mode == AuditMode::SubringTheorem {
                    subring_theorem_check(x.ring, &x.s, &y.s)
                } else {
                    corollary_check(x.ring, &x.s, &y.s)
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elemset::SetRole;
    use crate::families;
    use crate::subring::enumerate_subrings;

    #[test]
    fn quotients() {
        let r = families::nc4a();
        assert_eq!(quotient_group(&r, &r.full_set(), &r.zero_set()).unwrap().invariant_factors(), &[2, 2]);
        let z4 = families::zn(4);
        let two = z4.subset(&[0, 2]).unwrap();
        let q = quotient_group(&z4, &z4.full_set(), &two).unwrap();
        assert_eq!((q.invariant_factors(), q.representatives()), (&[2][..], &[0, 1][..]));
        let t = families::t2(2);
        let q = quotient_group(&t, &t.full_set(), &t.center()).unwrap();
        assert_eq!(q.invariant_factors(), &[2, 2]);
        let not_sub = z4.subset(&[0, 1]).unwrap();
        assert!(matches!(quotient_group(&z4, &z4.full_set(), &not_sub), Err(Error::NNotSubgroupOfK)));
    }

    #[test]
    fn isomorphism_counts() {
        let r = families::nc4a();
        let q = quotient_group(&r, &r.full_set(), &r.zero_set()).unwrap();
        assert_eq!(abelian_isomorphisms(&q, &q).count(), 6);
        let z4 = families::zn(4);
        let q4 = quotient_group(&z4, &z4.full_set(), &z4.zero_set()).unwrap();
        assert_eq!(abelian_isomorphisms(&q, &q4).count(), 0);
        let z2 = families::zn(2);
        let q2 = quotient_group(&z2, &z2.full_set(), &z2.zero_set()).unwrap();
        assert_eq!(abelian_isomorphisms(&q2, &q2).count(), 1);
    }

    #[test]
    fn witnesses() {
        let a = families::nc4a();
        let b = families::nc4b();
        let (fa, fb) = (a.full_set(), b.full_set());
        let w = z_isoclinic_pair(&a, &fa, &fa, &a, &fa, &fa).unwrap().unwrap();
        assert!(w.phi_is_identity());
        assert!(w.alpha.is_some());
        let w = z_isoclinic_pair(&a, &fa, &fa, &b, &fb, &fb).unwrap().unwrap();
        let (pa, pb) = (PairData::new(&a, &fa, &fa).unwrap(), PairData::new(&b, &fb, &fb).unwrap());
        assert!(verify_witness(&pa, &pb, &w));
        assert_eq!(w.theta.as_deref(), Some(&[(0, 0)][..]));
        let z = families::zn(6);
        assert!(z_isoclinic_pair(&z, &z.full_set(), &z.full_set(), &a, &fa, &fa).unwrap().is_none());
        let v = pair_theorem_check(&pa, &pb).unwrap();
        assert_eq!((v.status, v.graphs_isomorphic), (Status::Holds, Some(true)));
    }

    #[test]
    fn hypotheses_and_caps() {
        let r = families::nc4a();
        let s = r.subset(&[0, 1]).unwrap().with_role(SetRole::Subring);
        let k = r.subset(&[0, 2]).unwrap().with_role(SetRole::Subring);
        assert!(matches!(PairData::new(&r, &s, &k), Err(Error::HypothesisNotMet(_))));
        let big = families::t3(2);
        assert!(matches!(
            PairData::new(&big, &big.full_set(), &big.full_set()),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn subring_theorem_on_nc4a_and_t2() {
        for r in [families::nc4a(), families::t2(2)] {
            let subs = enumerate_subrings(&r).unwrap();
            for s1 in &subs {
                for s2 in &subs {
                    let v = subring_theorem_check(&r, s1, s2).unwrap();
                    assert_ne!(v.status, Status::Fails);
                    let v = corollary_check(&r, s1, s2).unwrap();
                    assert_ne!(v.status, Status::Fails);
                }
            }
        }
    }

    #[test]
    fn symmetric_on_t2_subrings() {
        let t = families::t2(2);
        let subs = enumerate_subrings(&t).unwrap();
        let full = t.full_set();
        let data: Vec<PairData> = subs.iter().map(|s| PairData::new(&t, s, &full).unwrap()).collect();
        for a in &data {
            for b in &data {
                let ab = isoclinism_between(a, b);
                assert_eq!(ab.is_some(), isoclinism_between(b, a).is_some());
                if let Some(w) = ab {
                    assert!(verify_witness(a, b, &w));
                }
            }
        }
    }
}
