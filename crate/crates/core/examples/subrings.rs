//! Enumerate the subrings of the upper triangular 2x2 matrices over Z2 and
//! look at centralizers, commutator modules and generating sets.

use ncring::dominating::minimal_generating_set;
use ncring::families;
use ncring::subring::{commutator_module, enumerate_subrings};
use ncring::Result;

fn main() -> Result<()> {
    let r = families::t2(2);
    let subs = enumerate_subrings(&r)?;
    let full = r.full_set();
    println!("{} has {} subrings", r.name(), subs.len());
    for (i, s) in subs.iter().enumerate() {
        let members: Vec<String> = s.iter().map(|x| r.format_element(x)).collect();
        let gens: Vec<String> = minimal_generating_set(&r, s)?
            .iter()
            .map(|g| r.format_element(g.index()))
            .collect();
        println!(
            "#{i:<2} |S| = {}  commutative: {:<5}  |C_R(S)| = {}  generators {{{}}}  members {{{}}}",
            s.len(),
            r.is_commutative_set(s),
            r.centralizer(&full, s)?.len(),
            gens.join(", "),
            members.join(", ")
        );
    }
    let commutators = commutator_module(&r, &full, &full)?;
    println!("[R,R] has {} elements", commutators.len());
    Ok(())
}
