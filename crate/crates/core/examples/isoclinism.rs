//! Z-isoclinism of subring pairs: the quotient data, a witness between nc4a
//! and nc4b, and a pair that is not isoclinic.

use ncring::families;
use ncring::isoclinism::{isoclinism_between, pair_theorem_check, verify_witness, PairData};
use ncring::subring::enumerate_subrings;
use ncring::Result;

fn main() -> Result<()> {
    let (a, b) = (families::nc4a(), families::nc4b());
    let (fa, fb) = (a.full_set(), b.full_set());
    let pa = PairData::new(&a, &fa, &fa)?;
    let pb = PairData::new(&b, &fb, &fb)?;
    println!("nc4a invariants {:?}", pa.invariants());
    println!("nc4b invariants {:?}", pb.invariants());
    if let Some(w) = isoclinism_between(&pa, &pb) {
        println!("phi {:?}", w.phi);
        println!("psi {:?}", w.psi);
        println!("alpha {:?}", w.alpha);
        println!("witness verified: {}", verify_witness(&pa, &pb, &w));
    }
    println!("{:?}", pair_theorem_check(&pa, &pb)?);

    let t = families::t2(2);
    let subs = enumerate_subrings(&t)?;
    let full = t.full_set();
    let pairs: Vec<PairData> = subs.iter().map(|s| PairData::new(&t, s, &full)).collect::<Result<_>>()?;
    for (i, p) in pairs.iter().enumerate() {
        let partners: Vec<usize> = pairs
            .iter()
            .enumerate()
            .filter(|(j, q)| *j != i && isoclinism_between(p, q).is_some())
            .map(|(j, _)| j)
            .collect();
        println!("T2(Z2) (#{i}, R) is isoclinic to {partners:?}");
    }
    Ok(())
}
