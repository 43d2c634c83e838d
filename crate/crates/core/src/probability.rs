//! Exact commuting probabilities, edge-count identities, bounds and
//! nonexistence predicates.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::elemset::ElementSet;
use crate::error::Result;
use crate::graph::{build_gamma, NCGraph};
use crate::ring::RingPresentation;
use crate::verdict::Status;

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = Ratio<i64>;

pub fn rational(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

fn int(n: usize) -> Rational {
    Ratio::from_integer(n as i64)
}

/// Writes a rational as `n` or `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn commuting_pairs(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> usize {
    s.iter()
        .map(|a| k.iter().filter(|&b| ring.commutes(a, b)).count())
        .sum()
}

/// `Pr(S,K)`: the fraction of `(s,k) ∈ S × K` with `sk = ks`.
pub fn pr_pair(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> Result<Rational> {
    ring.owns(s)?;
    ring.owns(k)?;
    Ok(pr_unchecked(ring, s, k))
}

fn pr_unchecked(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> Rational {
    rational(commuting_pairs(ring, s, k) as i64, (s.len() * k.len()) as i64)
}

/// `Pr(R) = Pr(R,R)`.
pub fn pr_ring(ring: &RingPresentation) -> Rational {
    let r = ring.full_set();
    pr_unchecked(ring, &r, &r)
}

/// Whether every participant of a noncommuting pair in `S × (S ∪ K)` is a
/// vertex. These are the pairs the edge-count formulas count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Consistency {
    pub consistent: bool,
    /// `(x, y)` with `x ∈ C_K(S) ∪ C_S(K)` and `xy ≠ yx`, one per excluded
    /// participant `x`.
    pub witnesses: Vec<(usize, usize)>,
}

pub fn consistency_predicate(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> Result<Consistency> {
    ring.owns(s)?;
    ring.owns(k)?;
    let excluded = ring
        .centralizer_bits(k, s.members())
        .members()
        .union(ring.centralizer_bits(s, k.members()).members());
    // The non-nested formula also counts pairs inside S through Pr(S).
    let partners = k.members().union(s.members());
    let mut partner: Vec<Option<usize>> = vec![None; ring.order()];
    for a in s.iter() {
        for b in partners.iter() {
            if !ring.commutes(a, b) {
                for (x, y) in [(a, b), (b, a)] {
                    if excluded.contains(x) && partner[x].is_none() {
                        partner[x] = Some(y);
                    }
                }
            }
        }
    }
    let witnesses: Vec<(usize, usize)> = partner
        .iter()
        .enumerate()
        .filter_map(|(x, p)| p.map(|y| (x, y)))
        .collect();
    Ok(Consistency {
        consistent: witnesses.is_empty(),
        witnesses,
    })
}

/// Direction of comparison between the measured value and the formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// measured = formula
    Equal,
    /// measured ≥ formula
    AtLeast,
    /// measured ≤ formula
    AtMost,
    /// measured ≠ formula
    Unequal,
}

impl Relation {
    pub fn test(self, measured: Rational, formula: Rational) -> bool {
        match self {
            Relation::Equal => measured == formula,
            Relation::AtLeast => measured >= formula,
            Relation::AtMost => measured <= formula,
            Relation::Unequal => measured != formula,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityVerdict {
    pub claim_id: &'static str,
    #[serde(serialize_with = "serialize_rational")]
    pub formula: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub measured: Rational,
    pub relation: Relation,
    pub consistency: bool,
    pub status: Status,
    pub witness: Option<(usize, usize)>,
}

impl IdentityVerdict {
    fn evaluate(claim_id: &'static str, relation: Relation, measured: Rational, formula: Rational) -> Self {
        IdentityVerdict {
            claim_id,
            formula,
            measured,
            relation,
            consistency: true,
            status: Status::from_bool(relation.test(measured, formula)),
            witness: None,
        }
    }

    fn not_applicable(claim_id: &'static str, relation: Relation) -> Self {
        IdentityVerdict {
            claim_id,
            formula: int(0),
            measured: int(0),
            relation,
            consistency: true,
            status: Status::NotApplicable,
            witness: None,
        }
    }
}

/// Quantities shared by the identities and bounds.
struct PairData {
    s: usize,
    k: usize,
    pr_sk: Rational,
    pr_s: Rational,
    nested: bool,
    edges: usize,
}

fn pair_data(ring: &RingPresentation, g: &NCGraph) -> PairData {
    let (s, k) = (g.s(), g.k());
    PairData {
        s: s.len(),
        k: k.len(),
        pr_sk: pr_unchecked(ring, s, k),
        pr_s: pr_unchecked(ring, s, s),
        nested: s.is_subset(k),
        edges: g.edge_count(),
    }
}

/// Compares `|E(Γ(S,K))|` of the built graph with the edge-count formula:
/// nested (`S ⊆ K`), the `S = K` specialization, or the non-nested one.
pub fn edge_identity_for(ring: &RingPresentation, g: &NCGraph) -> Result<IdentityVerdict> {
    let d = pair_data(ring, g);
    let one = int(1);
    let sk = int(d.s * d.k) * (one - d.pr_sk);
    let half_ss = int(d.s * d.s) * (one - d.pr_s) / 2;
    let (claim_id, formula) = if d.nested {
        let id = if g.s() == g.k() {
            "S4.cor-edge-identity"
        } else {
            "S4.edge-identity-nested"
        };
        (id, sk - half_ss)
    } else {
        let meet = g.s().intersection(g.k());
        let pr_meet = pr_unchecked(ring, &meet, &meet);
        let half_meet = int(meet.len() * meet.len()) * (one - pr_meet) / 2;
        ("S4.edge-identity-nonnested", sk + half_ss - half_meet)
    };
    let consistency = consistency_predicate(ring, g.s(), g.k())?;
    let mut v = IdentityVerdict::evaluate(claim_id, Relation::Equal, int(d.edges), formula);
    v.consistency = consistency.consistent;
    if v.status == Status::Fails {
        v.witness = consistency.witnesses.first().copied().or_else(|| double_counted_pair(ring, g));
    }
    Ok(v)
}

/// A noncommuting pair `(x, y)` with `x ∈ S ∩ K`, `y ∈ S`: the non-nested
/// formula counts such an edge in both its `S × K` and `S × S` terms.
fn double_counted_pair(ring: &RingPresentation, g: &NCGraph) -> Option<(usize, usize)> {
    let meet = g.s().intersection(g.k());
    let found = meet
        .iter()
        .find_map(|x| g.s().iter().find(|&y| !ring.commutes(x, y)).map(|y| (x, y)));
    found
}

pub fn edge_identity(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> Result<IdentityVerdict> {
    edge_identity_for(ring, &build_gamma(ring, s, k)?)
}

/// The six bounds B1 to B6, each gated on its own hypothesis. The bounds on
/// `Pr(R)` (B2, B4) are evaluated on `S = K` viewed as a ring in its own
/// right.
pub fn bound_checks_for(ring: &RingPresentation, g: &NCGraph) -> Vec<IdentityVerdict> {
    let d = pair_data(ring, g);
    let (s, k) = (g.s(), g.k());
    let s_nc = !ring.is_commutative_set(s);
    let k_nc = !ring.is_commutative_set(k);
    let ring_nc = !ring.is_commutative();
    let same = s == k;
    let e = int(d.edges);
    let (ns, nk) = (int(d.s), int(d.k));
    let meet = s.intersection(k).len();
    let z_s = ring.center_of(s).len();
    let z_k_s = ring.center_of(k).intersection(s).len();
    let c_k_s = ring.centralizer_bits(k, s.members()).len();
    let p = ring.predicates().smallest_prime_divisor as usize;

    let mut out = Vec::with_capacity(6);
    out.push(if !d.nested && s_nc && k_nc {
        let f = int(3) * ns * (nk + ns / 2) / 8 - int(meet * meet) / 2;
        IdentityVerdict::evaluate("S4.bound-b1", Relation::AtLeast, e, f)
    } else {
        IdentityVerdict::not_applicable("S4.bound-b1", Relation::AtLeast)
    });
    out.push(if same && s_nc {
        let (n, z) = (ns, int(z_s));
        let f = int(2) * z / n + int(1) / n - z * z / (n * n) - z / (n * n);
        IdentityVerdict::evaluate("S4.bound-b2", Relation::AtLeast, d.pr_s, f)
    } else {
        IdentityVerdict::not_applicable("S4.bound-b2", Relation::AtLeast)
    });
    out.push(if d.nested && ring_nc {
        let f = ns * nk / 2 - ns * ns / 4 - int(z_s) * nk / 4 - ns * int(c_k_s) / 4 + int(z_s) * ns / 4;
        IdentityVerdict::evaluate("S4.bound-b3", Relation::AtLeast, e, f)
    } else {
        IdentityVerdict::not_applicable("S4.bound-b3", Relation::AtLeast)
    });
    out.push(if same && s_nc {
        let f = rational(1, 2) + int(z_s) / (int(2) * ns);
        IdentityVerdict::evaluate("S4.bound-b4", Relation::AtMost, d.pr_s, f)
    } else {
        IdentityVerdict::not_applicable("S4.bound-b4", Relation::AtMost)
    });
    out.push(if d.nested && s_nc && k_nc {
        let f = ns * (nk - int(3) * ns / 16 - int(p)) - int(z_k_s) * (nk - int(p));
        IdentityVerdict::evaluate("S4.bound-b5", Relation::AtMost, e, f)
    } else {
        IdentityVerdict::not_applicable("S4.bound-b5", Relation::AtMost)
    });
    out.push(if d.nested && s_nc && k_nc {
        let f = -int(3) * ns * ns / 16 + int(3) * ns * nk / 8;
        IdentityVerdict::evaluate("S4.bound-b6", Relation::AtLeast, e, f)
    } else {
        IdentityVerdict::not_applicable("S4.bound-b6", Relation::AtLeast)
    });
    out
}

pub fn bound_checks(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> Result<Vec<IdentityVerdict>> {
    Ok(bound_checks_for(ring, &build_gamma(ring, s, k)?))
}

/// `Pr(S,K) ≤ Pr(S) ≤ 5/8` for nested noncommutative `S ⊆ K`. The verdict
/// records the first violated link of the chain.
pub fn pr_chain(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> Result<IdentityVerdict> {
    ring.owns(s)?;
    ring.owns(k)?;
    if !s.is_subset(k) || ring.is_commutative_set(s) {
        return Ok(IdentityVerdict::not_applicable("S4.pr-chain", Relation::AtMost));
    }
    let pr_sk = pr_unchecked(ring, s, k);
    let pr_s = pr_unchecked(ring, s, s);
    Ok(if pr_sk > pr_s {
        IdentityVerdict::evaluate("S4.pr-chain", Relation::AtMost, pr_sk, pr_s)
    } else {
        IdentityVerdict::evaluate("S4.pr-chain", Relation::AtMost, pr_s, rational(5, 8))
    })
}

/// N1 and N2. A verdict holds when the equation is NOT satisfied.
pub fn nonexistence_predicates(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> Result<Vec<IdentityVerdict>> {
    ring.owns(s)?;
    ring.owns(k)?;
    let s_nc = !ring.is_commutative_set(s);
    let k_nc = !ring.is_commutative_set(k);
    let (ns, nk) = (int(s.len()), int(k.len()));
    let pr_s = pr_unchecked(ring, s, s);
    let n1 = if s.is_subset(k) && s_nc && k_nc && ring.centralizer_bits(k, s.members()).len() == 1 {
        let lhs = int(2) * nk * pr_unchecked(ring, s, k) - ns * pr_s;
        let rhs = -int(2) * nk / ns + int(4) / ns + int(2) * nk - ns;
        IdentityVerdict::evaluate("S4.n1-nonexistence", Relation::Unequal, lhs, rhs)
    } else {
        IdentityVerdict::not_applicable("S4.n1-nonexistence", Relation::Unequal)
    };
    let n2 = if s == k && s_nc {
        let z = int(ring.center_of(s).len());
        let rhs = rational(1, 2) + z / ns - z * z / (int(2) * ns * ns);
        IdentityVerdict::evaluate("S4.n2-nonexistence", Relation::Unequal, pr_s, rhs)
    } else {
        IdentityVerdict::not_applicable("S4.n2-nonexistence", Relation::Unequal)
    };
    Ok(vec![n1, n2])
}
