//! Decide isomorphism between non-commuting graphs.

use ncring::families;
use ncring::graph::build_gamma;
use ncring::graph_iso::graph_isomorphic;
use ncring::subring::enumerate_subrings;
use ncring::Result;

fn main() -> Result<()> {
    let (a, b) = (families::nc4a(), families::nc4b());
    let ga = build_gamma(&a, &a.full_set(), &a.full_set())?;
    let gb = build_gamma(&b, &b.full_set(), &b.full_set())?;
    println!("Γ(nc4a) ≅ Γ(nc4b): {:?}", graph_isomorphic(&ga, &gb)?);

    // Group the graphs Γ(S, R) of T2(Z2) into isomorphism classes.
    let t = families::t2(2);
    let full = t.full_set();
    let graphs = enumerate_subrings(&t)?
        .iter()
        .map(|s| build_gamma(&t, s, &full))
        .collect::<Result<Vec<_>>>()?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            if graph_isomorphic(&graphs[class[0]], g)?.is_some() {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    for class in &classes {
        let g = &graphs[class[0]];
        println!("subrings {class:?}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    }
    Ok(())
}
