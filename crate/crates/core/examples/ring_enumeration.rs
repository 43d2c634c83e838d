//! Sweep every structure tensor on Z2 + Z2 and sort the associative ones into
//! isomorphism classes.

use std::time::Instant;

use ncring::enumerate::{canonical_tensor, enumerate_rings_on_group, rings_isomorphic, RingFilter};
use ncring::families;
use ncring::probability::{format_rational, pr_ring};
use ncring::Result;

fn main() -> Result<()> {
    let start = Instant::now();
    let all = enumerate_rings_on_group(&[2, 2], RingFilter::default())?;
    println!("{} associative tensors out of 256 ({:.1?})", all.len(), start.elapsed());

    let classes = enumerate_rings_on_group(
        &[2, 2],
        RingFilter {
            up_to_isomorphism: true,
            ..RingFilter::default()
        },
    )?;
    println!("{} isomorphism classes:", classes.len());
    let named = [families::nc4a(), families::nc4b()];
    for r in &classes {
        let alias = named
            .iter()
            .find(|n| rings_isomorphic(n, r).unwrap_or(false))
            .map_or(String::new(), |n| format!(" ≅ {}", n.name()));
        println!(
            "  {}{alias}: commutative {}, unity {}, Pr = {}, canonical {:?}",
            r.name(),
            r.is_commutative(),
            r.predicates().has_unity,
            format_rational(&pr_ring(r)),
            canonical_tensor(r)?
        );
    }
    for order in [2u32, 3, 4] {
        let n = enumerate_rings_on_group(&[order], RingFilter { up_to_isomorphism: true, ..RingFilter::default() })?.len();
        println!("rings on Z{order}: {n}");
    }
    Ok(())
}
