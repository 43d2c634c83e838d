//! Dominating sets: the three constructions, and two instances where the
//! published statements do not hold for the graph as defined.

use ncring::dominating::{dominating_characterization, dominating_construct, is_dominating, ConstructionMode};
use ncring::families;
use ncring::graph::build_gamma;
use ncring::subring::enumerate_subrings;
use ncring::Result;

fn main() -> Result<()> {
    let r = families::t2(2);
    let full = r.full_set();
    let g = build_gamma(&r, &full, &full)?;
    for mode in ConstructionMode::ALL {
        match dominating_construct(&r, &g, mode) {
            Ok(x) => {
                let d = is_dominating(&g, &x)?;
                println!("T2(Z2) {:<20} X = {:?} dominating: {}", mode.name(), x.indices(), d.dominating);
            }
            Err(e) => println!("T2(Z2) {:<20} {e}", mode.name()),
        }
    }

    // nc4a with S = {0, a}, K = R: the vertices are b and a + b, both outside
    // S, so the graph has no edges and only V itself dominates. For X = {b}
    // every element commuting with X is already in X or excluded, so the
    // centralizer test accepts a set that does not dominate a + b.
    let n = families::nc4a();
    let s = n.subset(&[0, 1])?;
    let g = build_gamma(&n, &s, &n.full_set())?;
    println!("nc4a Γ({{0,a}}, R) vertices: {:?}", g.vertices());
    for x in [vec![], vec![2]] {
        let set = n.subset(&x)?;
        let c = dominating_characterization(&n, &g, &set)?;
        println!("  X = {x:?}: dominating {}, centralizer test {}", c.by_definition, c.by_centralizers);
    }

    // M2(Z2): S = {0, e11}, K = span{e11, e12}. Both K-only vertices are
    // isolated, so no proper subset dominates, while the generator
    // construction keeps only e12.
    let m = families::m2(2);
    let subs = enumerate_subrings(&m)?;
    let g = build_gamma(&m, &subs[1], &subs[11])?;
    let x = dominating_construct(&m, &g, ConstructionMode::GeneratorsGeneral)?;
    println!(
        "M2(Z2) #1,#11: vertices {:?}, edges {}, generator set {:?}, dominating {}",
        g.vertices(),
        g.edge_count(),
        x.indices(),
        is_dominating(&g, &x)?.dominating
    );
    Ok(())
}
