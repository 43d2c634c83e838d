//! Exact commuting probabilities, the edge-count identities and the
//! bounds, evaluated on a few rings.

use ncring::families;
use ncring::graph::build_gamma;
use ncring::probability::{bound_checks_for, consistency_predicate, edge_identity_for, format_rational, pr_pair, pr_ring};
use ncring::subring::enumerate_subrings;
use ncring::Result;

fn main() -> Result<()> {
    for r in [families::nc4a(), families::t2(2), families::m2(2), families::n3(3), families::zn(6)] {
        println!("Pr({}) = {}", r.name(), format_rational(&pr_ring(&r)));
    }

    let r = families::nc4a();
    let full = r.full_set();
    let s = r.subset(&[0, 1])?;
    println!("Pr({{0,a}}, nc4a) = {}", format_rational(&pr_pair(&r, &s, &full)?));
    let c = consistency_predicate(&r, &s, &full)?;
    let g = build_gamma(&r, &s, &full)?;
    let v = edge_identity_for(&r, &g)?;
    println!(
        "{}: formula {} vs |E| = {}, consistency {} (excluded participant {:?})",
        v.claim_id,
        format_rational(&v.formula),
        format_rational(&v.measured),
        c.consistent,
        c.witnesses.first()
    );

    let t = families::t2(2);
    let subs = enumerate_subrings(&t)?;
    let full = t.full_set();
    for s in subs.iter().filter(|s| !t.is_commutative_set(s)) {
        let g = build_gamma(&t, s, &full)?;
        for b in bound_checks_for(&t, &g).into_iter().filter(|b| b.status != ncring::verdict::Status::NotApplicable) {
            println!(
                "T2(Z2) |S| = {}: {} measured {} {:?} {} -> {}",
                s.len(),
                b.claim_id,
                format_rational(&b.measured),
                b.relation,
                format_rational(&b.formula),
                b.status
            );
        }
    }
    Ok(())
}
