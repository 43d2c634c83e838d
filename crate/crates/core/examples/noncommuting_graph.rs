//! Build generalized non-commuting graphs, audit vertex degrees, and export
//! DOT.

use ncring::families;
use ncring::graph::{build_gamma, classify_shape, degree_audit, metrics};
use ncring::subring::enumerate_subrings;
use ncring::Result;

fn main() -> Result<()> {
    let r = families::nc4a();
    let full = r.full_set();
    let g = build_gamma(&r, &full, &full)?;
    println!("Γ(nc4a): {} vertices, {} edges", g.vertex_count(), g.edge_count());
    print!("{}", g.to_dot(&r));

    // S = {0, a} inside K = R: a commutes with S, so a is not a vertex even
    // though ab ≠ ba. The nested degree formula then miscounts b.
    let s = r.subset(&[0, 1])?;
    let g = build_gamma(&r, &s, &full)?;
    let audit = degree_audit(&r, &g);
    println!("Γ({{0,a}}, R): vertices {:?}, edges {}", g.vertices(), g.edge_count());
    if let Some(m) = audit.first_mismatch() {
        println!(
            "  degree of {} is {}, nested formula predicts {} (witness {:?})",
            r.format_element(m.vertex),
            m.actual,
            m.predicted,
            m.witness
        );
    }

    let t = families::t2(2);
    let subs = enumerate_subrings(&t)?;
    for (i, s) in subs.iter().enumerate().filter(|(_, s)| !t.is_commutative_set(s)) {
        let g = build_gamma(&t, s, &t.full_set())?;
        let m = metrics(&g);
        let shape = classify_shape(&g);
        println!(
            "T2(Z2) #{i}: |V| = {}, |E| = {}, diameter {:?}, girth {:?}, regular {:?}",
            g.vertex_count(),
            g.edge_count(),
            m.diameter,
            m.girth,
            shape.regular_degree
        );
    }
    Ok(())
}
