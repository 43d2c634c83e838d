use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bits::Bits256;
use crate::dominating::{
    characterization_bits, domination_bits, dominating_construct, minimal_generating_bits, ConstructionMode,
};
use crate::elemset::ElementSet;
use crate::error::{Error, Result};
use crate::graph::{build_gamma, classify_shape, degree_audit_with, metrics, DegreeAudit, DegreeFormulas, NCGraph};
use crate::graph_iso::graph_isomorphic;
use crate::isoclinism::{isoclinism_between, PairData};
use crate::probability::{
    bound_checks_for, consistency_predicate, edge_identity_for, format_rational, nonexistence_predicates, pr_chain,
    pr_ring, Consistency, IdentityVerdict,
};
use crate::ring::RingPresentation;
use crate::subring::enumerate_subrings;
use crate::verdict::Status;

use super::catalog::CatalogEntry;

/// A claim audited by the suite.
#[derive(Debug, Clone, Copy)]
pub struct ClaimInfo {
    pub id: &'static str,
    /// Fails of an informative claim are reported but do not fail a run.
    pub informative: bool,
    pub statement: &'static str,
}

const fn claim(id: &'static str, informative: bool, statement: &'static str) -> ClaimInfo {
    ClaimInfo {
        id,
        informative,
        statement,
    }
}

/// Every claim id, in report order.
pub const CLAIMS: &[ClaimInfo] = &[
    claim("S2.complete-bipartite-impossible", false, "no nested Γ(S,K) is complete bipartite"),
    claim("S2.complete-impossible", false, "no nested Γ(S,K) with K unital is complete"),
    claim("S2.degree-cor", false, "nested degree formulas |K|-|C_K(r)| and |S|-|C_S(r)|"),
    claim("S2.degree-prop", false, "general three-case degree formulas"),
    claim("S2.empty-iff-commutative", false, "nested Γ(S,K) has no edges iff S is commutative"),
    claim("S2.no-isolated", true, "nested Γ(S,K) with S noncommutative has no isolated vertex"),
    claim("S2.sqfree-odd-regular-impossible", false, "no nested Γ(S,K) is n-regular with n square-free odd"),
    claim("S2.star-impossible", false, "no nested Γ(S,K) is a star"),
    claim("S3.connected", false, "S ⊆ K, Z(S) = 0: Γ(S,K) is connected"),
    claim("S3.diam-exact-b", true, "S ⊆ K, Z(S) = 0: diameter exactly 2"),
    claim("S3.diam-girth-a", false, "Z(S) = Z(K) = 0: diameter ≤ 3 and girth ≤ 4"),
    claim("S3.diam-girth-b", false, "S ⊆ K, Z(S) = 0: diameter ≤ 2 and girth 3"),
    claim("S3.dominating-characterization", false, "X dominates iff C_S(X) ∪ C_K(X) ⊆ X ∪ C_S(K) ∪ C_K(S)"),
    claim("S3.dominating-coset", false, "(S + C_K(S)) \\ C_K(S) dominates"),
    claim("S3.dominating-generators", false, "generators outside C_S(K) ∪ C_K(S) dominate"),
    claim("S3.dominating-nested", false, "generators outside C_K(S) plus shifted ones dominate"),
    claim("S3.remark-vs-dominates", false, "V(Γ_S) dominates Γ(S,K); V(Γ(S,K)) dominates Γ_K when |C_K(S)| = 1"),
    claim("S4.bound-b1", false, "non-nested lower bound on |E|"),
    claim("S4.bound-b2", false, "lower bound on Pr from |Z|"),
    claim("S4.bound-b3", false, "nested lower bound on |E|"),
    claim("S4.bound-b4", false, "Pr ≤ 1/2 + |Z|/(2|R|)"),
    claim("S4.bound-b5", false, "nested upper bound on |E| with the smallest prime"),
    claim("S4.bound-b6", false, "nested lower bound 3|S||K|/8 - 3|S|²/16"),
    claim("S4.cor-edge-identity", false, "|E(Γ_S)| = |S|²(1 - Pr(S))/2"),
    claim("S4.edge-identity-nested", false, "nested edge count from Pr(S,K) and Pr(S)"),
    claim("S4.edge-identity-nonnested", false, "non-nested edge count from Pr(S,K), Pr(S), Pr(S ∩ K)"),
    claim("S4.n1-nonexistence", false, "the N1 equation has no solution with |C_K(S)| = 1"),
    claim("S4.n2-nonexistence", false, "Pr = 1/2 + |Z|/|R| - |Z|²/(2|R|²) is unattainable"),
    claim("S4.pr-chain", false, "Pr(S,K) ≤ Pr(S) ≤ 5/8"),
    claim("S4.remark-iso-pr", false, "isomorphic Γ_R with equal |Z| give equal Pr"),
    claim("S5.corollary", false, "(S1,R) isoclinic to (S2,R), equal |Z(R) ∩ S|: Γ_S1 ≅ Γ_S2"),
    claim("S5.pair-theorem", false, "isoclinic pairs with equal side conditions have isomorphic graphs"),
    claim("S5.reflexive", false, "every pair is isoclinic to itself via the identity"),
    claim("S5.subring-theorem", false, "Γ(S1,R) ≅ Γ(S2,R) implies Γ_S1 ≅ Γ_S2"),
];

pub fn claim_info(id: &str) -> Option<&'static ClaimInfo> {
    CLAIMS.iter().find(|c| c.id == id)
}

/// Which claims to evaluate: `all`, a section such as `S3`, or exact ids,
/// comma separated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimFilter {
    patterns: Vec<String>,
}

impl ClaimFilter {
    pub fn all() -> Self {
        ClaimFilter {
            patterns: vec!["all".into()],
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut patterns = Vec::new();
        for raw in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let p = raw.to_string();
            let known = p.eq_ignore_ascii_case("all")
                || CLAIMS.iter().any(|c| c.id == p || c.id.split('.').next().is_some_and(|s| s.eq_ignore_ascii_case(&p)));
            if !known {
                return Err(Error::Selector(p));
            }
            patterns.push(p);
        }
        if patterns.is_empty() {
            return Err(Error::Selector(text.to_string()));
        }
        Ok(ClaimFilter { patterns })
    }

    pub fn wants(&self, id: &str) -> bool {
        self.patterns.iter().any(|p| {
            p.eq_ignore_ascii_case("all")
                || p == id
                || id.split('.').next().is_some_and(|section| section.eq_ignore_ascii_case(p))
        })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub claims: ClaimFilter,
    /// Largest `|K|` for isoclinism searches.
    pub isoclinism_cap: usize,
    /// Largest ring order for the exhaustive dominating-set characterization.
    pub sweep_order_cap: usize,
    /// Largest ring order for which non-nested pairs are formed.
    pub general_pair_order_cap: usize,
    /// Record per-report wall time (makes output nondeterministic).
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            claims: ClaimFilter::all(),
            isoclinism_cap: 16,
            sweep_order_cap: 8,
            general_pair_order_cap: 32,
            timings: false,
        }
    }
}

/// A ring and subring indices into its enumerated subring list; pair claims
/// carry the second instance in `with`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Instance {
    pub ring: String,
    pub s: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub with: Option<Box<Instance>>,
}

impl Instance {
    pub fn new(ring: &str, s: usize, k: usize) -> Self {
        Instance {
            ring: ring.to_string(),
            s,
            k,
            with: None,
        }
    }

    fn paired(mut self, other: Instance) -> Self {
        self.with = Some(Box::new(other));
        self
    }
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[#{},#{}]", self.ring, self.s, self.k)?;
        if let Some(w) = &self.with {
            write!(f, " ~ {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim_id: &'static str,
    pub instance: Instance,
    pub status: Status,
    pub informative: bool,
    pub witness: Value,
    pub elapsed_ms: Option<f64>,
}

struct Outcome {
    status: Status,
    witness: Value,
    informative: bool,
}

impl Outcome {
    fn gate(reason: &str) -> Self {
        Outcome {
            status: Status::NotApplicable,
            witness: json!({ "gate": reason }),
            informative: false,
        }
    }

    fn check(ok: bool, witness: impl FnOnce() -> Value) -> Self {
        Outcome {
            status: Status::from_bool(ok),
            witness: if ok { Value::Null } else { witness() },
            informative: false,
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            status: Status::EvaluationError,
            witness: json!({ "error": e.to_string() }),
            informative: false,
        }
    }

    fn informative_if(mut self, flag: bool) -> Self {
        self.informative |= flag;
        self
    }
}

struct Emitter<'c> {
    cfg: &'c SuiteConfig,
    out: Vec<ClaimReport>,
}

impl Emitter<'_> {
    fn emit(&mut self, id: &'static str, instance: &Instance, f: impl FnOnce() -> Outcome) {
        if !self.cfg.claims.wants(id) {
            return;
        }
        let start = Instant::now();
        let outcome = f();
        let elapsed = self.cfg.timings.then(|| start.elapsed().as_secs_f64() * 1000.0);
        let base = claim_info(id).is_some_and(|c| c.informative);
        self.out.push(ClaimReport {
            claim_id: id,
            instance: instance.clone(),
            status: outcome.status,
            informative: base || outcome.informative,
            witness: outcome.witness,
            elapsed_ms: elapsed,
        });
    }
}

struct RingContext<'a> {
    entry: &'a CatalogEntry,
    subrings: Vec<ElementSet>,
    generators: Vec<OnceLock<Result<Vec<usize>>>>,
}

impl<'a> RingContext<'a> {
    fn ring(&self) -> &'a RingPresentation {
        &self.entry.ring
    }

    fn name(&self) -> &'a str {
        self.entry.ring.name()
    }

    fn generators(&self, i: usize) -> &Result<Vec<usize>> {
        self.generators[i].get_or_init(|| minimal_generating_bits(self.ring(), &self.subrings[i]))
    }

    fn full_index(&self) -> usize {
        self.subrings.len() - 1
    }
}

fn list(bits: &Bits256) -> Vec<usize> {
    bits.to_vec()
}

fn identity_outcome(v: &IdentityVerdict, consistency: &Consistency) -> Outcome {
    match v.status {
        Status::Holds => Outcome::check(true, || Value::Null),
        Status::NotApplicable => Outcome::gate("hypothesis not met"),
        _ => Outcome {
            status: v.status,
            witness: json!({
                "formula": format_rational(&v.formula),
                "measured": format_rational(&v.measured),
                "relation": v.relation,
                "consistency": consistency.consistent,
                "pair": v.witness,
            }),
            informative: false,
        },
    }
}

fn audit_witness(audit: &DegreeAudit, consistency: &Consistency) -> Value {
    let m = audit.first_mismatch();
    json!({
        "vertex": m.map(|c| c.vertex),
        "actual": m.map(|c| c.actual),
        "predicted": m.map(|c| c.predicted),
        "case": m.map(|c| c.case),
        "element": m.and_then(|c| c.witness),
        "consistency": consistency.consistent,
        "excluded_pair": consistency.witnesses.first(),
    })
}

fn shape_witness(g: &NCGraph) -> Value {
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "degrees": g.degrees().iter().map(|&(_, d)| d).collect::<Vec<_>>(),
    })
}

fn bound_gate(id: &str) -> &'static str {
    match id {
        "S4.bound-b1" => "requires S not contained in K, both noncommutative",
        "S4.bound-b2" | "S4.bound-b4" => "requires S = K noncommutative",
        "S4.bound-b3" => "requires S contained in K in a noncommutative ring",
        _ => "requires S contained in K, both noncommutative",
    }
}

fn construction_outcome(ring: &RingPresentation, g: &NCGraph, mode: ConstructionMode) -> Outcome {
    match dominating_construct(ring, g, mode) {
        Ok(x) => {
            if let Some(v) = x.iter().find(|&v| !g.is_vertex(v)) {
                return Outcome::check(false, || json!({ "mode": mode.name(), "x": x.indices(), "not_a_vertex": v }));
            }
            let d = domination_bits(g, x.members());
            Outcome::check(d.dominating, || {
                json!({ "mode": mode.name(), "x": x.indices(), "undominated": d.undominated, "edges": g.edge_count() })
            })
        }
        Err(Error::HypothesisNotMet(reason)) => Outcome::gate(&reason),
        Err(e) => Outcome::error(&e),
    }
}

fn evaluate_instance(ctx: &RingContext, i: usize, j: usize, cfg: &SuiteConfig) -> Vec<ClaimReport> {
    let ring = ctx.ring();
    let (s, k) = (&ctx.subrings[i], &ctx.subrings[j]);
    let inst = Instance::new(ctx.name(), i, j);
    let mut em = Emitter { cfg, out: Vec::new() };
    let g = match build_gamma(ring, s, k) {
        Ok(g) => g,
        Err(e) => {
            em.emit("S2.degree-prop", &inst, || Outcome::error(&e));
            return em.out;
        }
    };
    let nested = s.is_subset(k);
    let ring_nc = !ring.is_commutative();
    let s_nc = !ring.is_commutative_set(s);
    let k_nc = !ring.is_commutative_set(k);
    let z_s_trivial = ring.center_of(s).len() == 1;
    let z_k_trivial = ring.center_of(k).len() == 1;
    let consistency = consistency_predicate(ring, s, k).expect("subrings of this ring");
    let has_edge = g.edge_count() > 0;
    const COMMUTATIVE: &str = "R is commutative";

    // --- degrees and shapes ---
    em.emit("S2.degree-prop", &inst, || {
        if !ring_nc {
            return Outcome::gate(COMMUTATIVE);
        }
        let audit = degree_audit_with(ring, &g, DegreeFormulas::General);
        Outcome::check(audit.all_match(), || audit_witness(&audit, &consistency))
    });
    if nested {
        em.emit("S2.degree-cor", &inst, || {
            if !ring_nc {
                return Outcome::gate(COMMUTATIVE);
            }
            let audit = degree_audit_with(ring, &g, DegreeFormulas::Nested);
            Outcome::check(audit.all_match(), || audit_witness(&audit, &consistency))
                .informative_if(!consistency.consistent)
        });
        em.emit("S2.no-isolated", &inst, || {
            if !ring_nc {
                return Outcome::gate(COMMUTATIVE);
            }
            if !s_nc {
                return Outcome::gate("S is commutative");
            }
            let isolated = g.degrees().into_iter().find(|&(_, d)| d == 0).map(|(v, _)| v);
            Outcome::check(isolated.is_none(), || json!({ "isolated": isolated }))
        });
        em.emit("S2.empty-iff-commutative", &inst, || {
            if !ring_nc {
                return Outcome::gate(COMMUTATIVE);
            }
            Outcome::check(has_edge == s_nc, || json!({ "edges": g.edge_count(), "s_commutative": !s_nc }))
        });
        let shape = classify_shape(&g);
        em.emit("S2.star-impossible", &inst, || {
            if !ring_nc {
                return Outcome::gate(COMMUTATIVE);
            }
            Outcome::check(!shape.is_star, || shape_witness(&g))
        });
        em.emit("S2.complete-bipartite-impossible", &inst, || {
            if !ring_nc {
                return Outcome::gate(COMMUTATIVE);
            }
            Outcome::check(!shape.is_complete_bipartite, || shape_witness(&g))
        });
        em.emit("S2.sqfree-odd-regular-impossible", &inst, || {
            if !ring_nc {
                return Outcome::gate(COMMUTATIVE);
            }
            Outcome::check(!shape.regular_square_free_odd, || shape_witness(&g))
        });
        em.emit("S2.complete-impossible", &inst, || {
            if !ring_nc {
                return Outcome::gate(COMMUTATIVE);
            }
            if ring.unity_of(k).is_none() {
                return Outcome::gate("K has no unity");
            }
            Outcome::check(!shape.is_complete, || shape_witness(&g))
        });
    }

    // --- metrics ---
    let m = metrics(&g);
    let metric_witness = || json!({ "diameter": m.diameter, "girth": m.girth, "components": m.component_count });
    em.emit("S3.diam-girth-a", &inst, || {
        if !ring_nc {
            return Outcome::gate(COMMUTATIVE);
        }
        if !(z_s_trivial && z_k_trivial) {
            return Outcome::gate("Z(S) or Z(K) is nonzero");
        }
        if !has_edge {
            return Outcome::gate("graph has no edges");
        }
        let ok = m.diameter.is_some_and(|d| d <= 3) && m.girth.is_some_and(|c| c <= 4);
        Outcome::check(ok, metric_witness)
    });
    if nested {
        let gate_b = || -> Option<&'static str> {
            if !ring_nc {
                Some(COMMUTATIVE)
            } else if !s_nc {
                Some("S is commutative")
            } else if !z_s_trivial {
                Some("Z(S) is nonzero")
            } else {
                None
            }
        };
        em.emit("S3.diam-girth-b", &inst, || {
            if let Some(reason) = gate_b() {
                return Outcome::gate(reason);
            }
            let ok = m.diameter.is_some_and(|d| d <= 2) && m.girth == Some(3);
            Outcome::check(ok, metric_witness)
        });
        em.emit("S3.diam-exact-b", &inst, || {
            if let Some(reason) = gate_b() {
                return Outcome::gate(reason);
            }
            Outcome::check(m.diameter == Some(2), metric_witness)
        });
        em.emit("S3.connected", &inst, || {
            if let Some(reason) = gate_b() {
                return Outcome::gate(reason);
            }
            Outcome::check(m.connected, metric_witness)
        });
    }

    // --- dominating sets ---
    if ring.order() <= cfg.sweep_order_cap {
        em.emit("S3.dominating-characterization", &inst, || {
            if !ring_nc {
                return Outcome::gate(COMMUTATIVE);
            }
            let v = g.vertices();
            for mask in 0u64..1 << v.len() {
                let x: Bits256 = (0..v.len()).filter(|b| mask >> b & 1 == 1).map(|b| v[b]).collect();
                let c = characterization_bits(ring, &g, &x);
                if !c.agree() {
                    return Outcome::check(false, || {
                        json!({
                            "x": list(&x),
                            "by_definition": c.by_definition,
                            "by_centralizers": c.by_centralizers,
                            "undominated": domination_bits(&g, &x).undominated,
                            "consistency": consistency.consistent,
                        })
                    });
                }
            }
            Outcome::check(true, || Value::Null)
        });
    }
    let unital = ring.predicates().has_unity;
    em.emit("S3.dominating-generators", &inst, || {
        if !ring_nc {
            return Outcome::gate(COMMUTATIVE);
        }
        if !unital {
            return Outcome::gate("R has no unity");
        }
        if let (Err(e), _) | (_, Err(e)) = (ctx.generators(i), ctx.generators(j)) {
            return Outcome::error(e);
        }
        construction_outcome(ring, &g, ConstructionMode::GeneratorsGeneral)
    });
    if nested {
        em.emit("S3.dominating-nested", &inst, || {
            if !ring_nc {
                return Outcome::gate(COMMUTATIVE);
            }
            if !unital {
                return Outcome::gate("R has no unity");
            }
            if let Err(e) = ctx.generators(i) {
                return Outcome::error(e);
            }
            construction_outcome(ring, &g, ConstructionMode::GeneratorsNested)
        });
        em.emit("S3.dominating-coset", &inst, || {
            if !(s_nc && k_nc) {
                return Outcome::gate("S or K is commutative");
            }
            construction_outcome(ring, &g, ConstructionMode::Coset)
        });
        em.emit("S3.remark-vs-dominates", &inst, || {
            if !(s_nc && k_nc) {
                return Outcome::gate("S or K is commutative");
            }
            let gamma_s = s.members().difference(ring.center_of(s).members());
            if let Some(v) = gamma_s.iter().find(|&v| !g.is_vertex(v)) {
                return Outcome::check(false, || json!({ "part": "V(Γ_S)", "not_a_vertex": v }));
            }
            let first = domination_bits(&g, &gamma_s);
            if !first.dominating {
                return Outcome::check(false, || json!({ "part": "V(Γ_S)", "undominated": first.undominated }));
            }
            if g.c_k_s().len() == 1 {
                let gamma_k = match build_gamma(ring, k, k) {
                    Ok(x) => x,
                    Err(e) => return Outcome::error(&e),
                };
                let x = g.vertex_bits();
                if let Some(v) = x.iter().find(|&v| !gamma_k.is_vertex(v)) {
                    return Outcome::check(false, || json!({ "part": "V(Γ(S,K))", "not_a_vertex": v }));
                }
                let second = domination_bits(&gamma_k, &x);
                return Outcome::check(second.dominating, || {
                    json!({ "part": "V(Γ(S,K))", "undominated": second.undominated })
                });
            }
            Outcome::check(true, || Value::Null)
        });
    }

    // --- probability ---
    match edge_identity_for(ring, &g) {
        Ok(v) => em.emit(v.claim_id, &inst, || {
            identity_outcome(&v, &consistency).informative_if(!consistency.consistent)
        }),
        Err(e) => em.emit("S4.edge-identity-nested", &inst, || Outcome::error(&e)),
    }
    for v in bound_checks_for(ring, &g) {
        if v.claim_id == "S4.bound-b1" && nested {
            continue;
        }
        if v.claim_id != "S4.bound-b1" && !nested {
            continue;
        }
        em.emit(v.claim_id, &inst, || match v.status {
            Status::NotApplicable => Outcome::gate(bound_gate(v.claim_id)),
            _ => identity_outcome(&v, &consistency),
        });
    }
    if nested {
        em.emit("S4.pr-chain", &inst, || match pr_chain(ring, s, k) {
            Ok(v) if v.status == Status::NotApplicable => Outcome::gate("requires S contained in K, S noncommutative"),
            Ok(v) => identity_outcome(&v, &consistency),
            Err(e) => Outcome::error(&e),
        });
        match nonexistence_predicates(ring, s, k) {
            Ok(vs) => {
                for v in vs {
                    em.emit(v.claim_id, &inst, || match v.status {
                        Status::NotApplicable if v.claim_id == "S4.n1-nonexistence" => {
                            Outcome::gate("requires S contained in K, both noncommutative, |C_K(S)| = 1")
                        }
                        Status::NotApplicable => Outcome::gate("requires S = K noncommutative"),
                        _ => identity_outcome(&v, &consistency),
                    });
                }
            }
            Err(e) => em.emit("S4.n1-nonexistence", &inst, || Outcome::error(&e)),
        }
        if k.len() <= cfg.isoclinism_cap {
            em.emit("S5.reflexive", &inst, || match PairData::new(ring, s, k) {
                Ok(p) => {
                    let w = isoclinism_between(&p, &p);
                    let ok = w.as_ref().is_some_and(|w| w.phi_is_identity());
                    Outcome::check(ok, || json!({ "found": w.is_some() }))
                }
                Err(e) => Outcome::error(&e),
            });
        }
    }
    em.out
}

/// Subring theorem and corollary over all ordered pairs of subrings.
fn evaluate_subring_pairs(ctx: &RingContext, cfg: &SuiteConfig) -> Vec<ClaimReport> {
    let mut em = Emitter { cfg, out: Vec::new() };
    let ring = ctx.ring();
    if ring.order() > cfg.isoclinism_cap
        || !(cfg.claims.wants("S5.subring-theorem") || cfg.claims.wants("S5.corollary"))
    {
        return em.out;
    }
    let full = ring.full_set();
    let r = ctx.full_index();
    let n = ctx.subrings.len();
    let built = |s: &ElementSet, k: &ElementSet| build_gamma(ring, s, k);
    let against_r: Vec<Result<NCGraph>> = ctx.subrings.iter().map(|s| built(s, &full)).collect();
    let own: Vec<Result<NCGraph>> = ctx.subrings.iter().map(|s| built(s, s)).collect();
    let pairs: Vec<Result<PairData>> = ctx.subrings.iter().map(|s| PairData::new(ring, s, &full)).collect();
    let ring_nc = !ring.is_commutative();
    let iso = |a: &Result<NCGraph>, b: &Result<NCGraph>| -> Result<bool> {
        match (a, b) {
            (Ok(a), Ok(b)) => Ok(graph_isomorphic(a, b)?.is_some()),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        }
    };
    for i in 0..n {
        for j in 0..n {
            let inst = Instance::new(ctx.name(), i, r).paired(Instance::new(ctx.name(), j, r));
            em.emit("S5.subring-theorem", &inst, || {
                if !ring_nc {
                    return Outcome::gate("R is commutative");
                }
                match iso(&against_r[i], &against_r[j]) {
                    Ok(false) => Outcome::gate("Γ(S1,R) and Γ(S2,R) are not isomorphic"),
                    Ok(true) => match iso(&own[i], &own[j]) {
                        Ok(b) => Outcome::check(b, || json!({ "graphs_isomorphic": false })),
                        Err(e) => Outcome::error(&e),
                    },
                    Err(e) => Outcome::error(&e),
                }
            });
            em.emit("S5.corollary", &inst, || {
                if !ring_nc {
                    return Outcome::gate("R is commutative");
                }
                let (a, b) = match (&pairs[i], &pairs[j]) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => return Outcome::error(e),
                };
                if a.n.len() != b.n.len() {
                    return Outcome::gate("|Z(R) ∩ S1| differs from |Z(R) ∩ S2|");
                }
                if isoclinism_between(a, b).is_none() {
                    return Outcome::gate("(S1,R) and (S2,R) are not isoclinic");
                }
                match iso(&own[i], &own[j]) {
                    Ok(ok) => Outcome::check(ok, || json!({ "graphs_isomorphic": false })),
                    Err(e) => Outcome::error(&e),
                }
            });
        }
    }
    em.out
}

/// Pair theorem over all nested pairs with `|K|` within the cap, across the
/// whole catalog. Pairs are bucketed by isoclinism invariants and side
/// conditions; each member is compared with the class representatives of
/// its bucket, which covers every isoclinic pair by transitivity.
fn evaluate_pair_theorem(contexts: &[RingContext], cfg: &SuiteConfig) -> Vec<ClaimReport> {
    const ID: &str = "S5.pair-theorem";
    if !cfg.claims.wants(ID) {
        return Vec::new();
    }
    struct Member<'a> {
        inst: Instance,
        data: PairData<'a>,
        graph: NCGraph,
    }
    let mut errors = Vec::new();
    let mut buckets: BTreeMap<_, Vec<Member>> = BTreeMap::new();
    for ctx in contexts {
        let ring = ctx.ring();
        for (i, s) in ctx.subrings.iter().enumerate() {
            for (j, k) in ctx.subrings.iter().enumerate() {
                if !s.is_subset(k) || k.len() > cfg.isoclinism_cap {
                    continue;
                }
                let inst = Instance::new(ctx.name(), i, j);
                let built = PairData::new(ring, s, k).and_then(|d| Ok((build_gamma(ring, s, k)?, d)));
                match built {
                    Ok((graph, data)) => {
                        let key = (data.invariants(), data.side_condition_key());
                        buckets.entry(key).or_default().push(Member { inst, data, graph });
                    }
                    Err(e) => errors.push(ClaimReport {
                        claim_id: ID,
                        instance: inst,
                        status: Status::EvaluationError,
                        informative: false,
                        witness: json!({ "error": e.to_string() }),
                        elapsed_ms: None,
                    }),
                }
            }
        }
    }
    let buckets: Vec<Vec<Member>> = buckets.into_values().collect();
    let mut out: Vec<ClaimReport> = buckets
        .par_iter()
        .flat_map_iter(|members| {
            let mut em = Emitter { cfg, out: Vec::new() };
            let mut reps: Vec<usize> = Vec::new();
            for (idx, m) in members.iter().enumerate() {
                let mut matched = None;
                for &r in &reps {
                    if isoclinism_between(&members[r].data, &m.data).is_some() {
                        matched = Some(r);
                        break;
                    }
                }
                match matched {
                    None => {
                        reps.push(idx);
                        em.emit(ID, &m.inst, || Outcome::gate("no earlier isoclinic pair"));
                    }
                    Some(r) => {
                        let rep = &members[r];
                        let inst = m.inst.clone().paired(rep.inst.clone());
                        em.emit(ID, &inst, || match graph_isomorphic(&rep.graph, &m.graph) {
                            Ok(found) => Outcome::check(found.is_some(), || {
                                json!({
                                    "graphs_isomorphic": false,
                                    "vertices": [rep.graph.vertex_count(), m.graph.vertex_count()],
                                    "edges": [rep.graph.edge_count(), m.graph.edge_count()],
                                })
                            }),
                            Err(e) => Outcome::error(&e),
                        });
                    }
                }
            }
            em.out
        })
        .collect();
    out.extend(errors);
    out
}

/// Rings with isomorphic Γ_R and equal center order have equal Pr(R).
fn evaluate_remark_iso_pr(contexts: &[RingContext], cfg: &SuiteConfig) -> Vec<ClaimReport> {
    const ID: &str = "S4.remark-iso-pr";
    if !cfg.claims.wants(ID) {
        return Vec::new();
    }
    let graphs: Vec<Option<NCGraph>> = contexts
        .iter()
        .map(|c| {
            let r = c.ring();
            (!r.is_commutative()).then(|| build_gamma(r, &r.full_set(), &r.full_set()).ok()).flatten()
        })
        .collect();
    let mut pairs = Vec::new();
    for a in 0..contexts.len() {
        for b in a + 1..contexts.len() {
            if let (Some(ga), Some(gb)) = (&graphs[a], &graphs[b]) {
                let (ra, rb) = (contexts[a].ring(), contexts[b].ring());
                if ra.order() == rb.order() && ra.center().len() == rb.center().len() && ga.vertex_count() <= 64 {
                    pairs.push((a, b, ga, gb));
                }
            }
        }
    }
    pairs
        .par_iter()
        .flat_map_iter(|&(a, b, ga, gb)| {
            let mut em = Emitter { cfg, out: Vec::new() };
            let (ca, cb) = (&contexts[a], &contexts[b]);
            let inst = Instance::new(ca.name(), ca.full_index(), ca.full_index())
                .paired(Instance::new(cb.name(), cb.full_index(), cb.full_index()));
            em.emit(ID, &inst, || match graph_isomorphic(ga, gb) {
                Ok(None) => Outcome::gate("Γ_R1 and Γ_R2 are not isomorphic"),
                Ok(Some(_)) => {
                    let (pa, pb) = (pr_ring(ca.ring()), pr_ring(cb.ring()));
                    Outcome::check(pa == pb, || json!({ "pr": [format_rational(&pa), format_rational(&pb)] }))
                }
                Err(e) => Outcome::error(&e),
            });
            em.out
        })
        .collect()
}

/// Evaluates every selected claim over the catalog. Reports are sorted by
/// claim id and instance, so the output does not depend on scheduling.
pub fn run_suite(catalog: &[CatalogEntry], cfg: &SuiteConfig) -> Vec<ClaimReport> {
    let mut setup_errors = Vec::new();
    let contexts: Vec<RingContext> = catalog
        .iter()
        .filter_map(|entry| match enumerate_subrings(&entry.ring) {
            Ok(subrings) => Some(RingContext {
                entry,
                generators: (0..subrings.len()).map(|_| OnceLock::new()).collect(),
                subrings,
            }),
            Err(e) => {
                setup_errors.push(ClaimReport {
                    claim_id: "S2.degree-prop",
                    instance: Instance::new(entry.ring.name(), 0, 0),
                    status: Status::EvaluationError,
                    informative: false,
                    witness: json!({ "error": e.to_string() }),
                    elapsed_ms: None,
                });
                None
            }
        })
        .collect();

    let units: Vec<(usize, usize, usize)> = contexts
        .iter()
        .enumerate()
        .flat_map(|(c, ctx)| {
            let general = ctx.ring().order() <= cfg.general_pair_order_cap;
            let subs = &ctx.subrings;
            (0..subs.len()).flat_map(move |i| {
                (0..subs.len())
                    .filter(move |&j| general || subs[i].is_subset(&subs[j]))
                    .map(move |j| (c, i, j))
            })
        })
        .collect();

    let mut out: Vec<ClaimReport> = units
        .par_iter()
        .flat_map_iter(|&(c, i, j)| evaluate_instance(&contexts[c], i, j, cfg))
        .collect();
    out.par_extend(contexts.par_iter().flat_map_iter(|ctx| evaluate_subring_pairs(ctx, cfg)));
    out.extend(evaluate_pair_theorem(&contexts, cfg));
    out.extend(evaluate_remark_iso_pr(&contexts, cfg));
    out.extend(setup_errors);
    out.par_sort_by(|a, b| (a.claim_id, &a.instance).cmp(&(b.claim_id, &b.instance)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::harness::catalog::{build_catalog, CatalogSpec, Provenance};

    fn single(ring: RingPresentation) -> Vec<CatalogEntry> {
        vec![CatalogEntry {
            ring,
            provenance: Provenance::BuiltinFamily,
            family: "test".into(),
        }]
    }

    #[test]
    fn filter_parsing() {
        let f = ClaimFilter::parse("S2,S4.pr-chain").unwrap();
        assert!(f.wants("S2.star-impossible") && f.wants("S4.pr-chain") && !f.wants("S4.bound-b1"));
        assert!(ClaimFilter::parse("s5").unwrap().wants("S5.corollary"));
        assert!(ClaimFilter::parse("S9").is_err());
        assert!(ClaimFilter::parse("").is_err());
    }

    #[test]
    fn claims_are_sorted_and_unique() {
        let ids: Vec<&str> = CLAIMS.iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn nc4a_suite() {
        let reports = run_suite(&single(families::nc4a()), &SuiteConfig::default());
        // (nc4a, {0,a}, R): subring #1 inside #4
        let id = reports
            .iter()
            .find(|r| r.claim_id == "S4.edge-identity-nested" && r.instance == Instance::new("nc4a", 1, 4))
            .unwrap();
        assert_eq!(id.status, Status::Fails);
        assert!(id.informative);
        assert_eq!(id.witness["pair"], json!([1, 2]));
        let cor = reports.iter().find(|r| r.claim_id == "S4.cor-edge-identity" && r.instance.s == 4 && r.instance.k == 4).unwrap();
        assert_eq!(cor.status, Status::Holds);
        for r in &reports {
            if r.status == Status::Fails {
                assert!(!r.witness.is_null(), "{} {}", r.claim_id, r.instance);
            }
        }
        assert!(reports.windows(2).all(|w| (w[0].claim_id, &w[0].instance) <= (w[1].claim_id, &w[1].instance)));
    }

    #[test]
    fn commutative_catalog_is_not_applicable() {
        let cat = build_catalog(&CatalogSpec::cyclic_only(6)).unwrap();
        let reports = run_suite(&cat, &SuiteConfig::default());
        for r in reports.iter().filter(|r| r.claim_id.starts_with("S2") || r.claim_id.starts_with("S3")) {
            assert_eq!(r.status, Status::NotApplicable, "{} {}", r.claim_id, r.instance);
        }
    }
}
