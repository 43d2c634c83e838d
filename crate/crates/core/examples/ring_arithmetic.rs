//! Build a ring from its structure tensor, do arithmetic, and inspect its
//! center and predicates.
//!
//! Run with `cargo run --example ring_arithmetic`.

use ncring::ringfile::{parse_ring, write_ring};
use ncring::{make_ring, Result};

fn main() -> Result<()> {
    // Additive group Z2 + Z2 with generators a, b and
    // a·a = a, a·b = a, b·a = b, b·b = b.
    let tensor = vec![
        vec![vec![1, 0], vec![1, 0]],
        vec![vec![0, 1], vec![0, 1]],
    ];
    let r = make_ring(&[2, 2], &tensor, "nc4a")?;
    let a = r.element(&[1, 0])?;
    let b = r.element(&[0, 1])?;

    println!("{} has order {}", r.name(), r.order());
    println!("ab = {}", r.format_element(r.mul(a, b)?.index()));
    println!("ba = {}", r.format_element(r.mul(b, a)?.index()));
    println!("[a,b] = {}", r.format_element(r.commutator(a, b)?.index()));
    println!("a + b = {}", r.format_element(r.add(a, b)?.index()));

    println!("multiplication table:");
    for x in 0..r.order() {
        let row: Vec<String> = (0..r.order()).map(|y| r.format_element(r.mul_idx(x, y))).collect();
        println!("  {:>6} | {}", r.format_element(x), row.join(" "));
    }

    let p = r.predicates();
    println!(
        "commutative: {}, unity: {}, |Z(R)| = {}, smallest prime: {}",
        p.is_commutative,
        p.has_unity,
        r.center().len(),
        p.smallest_prime_divisor
    );

    // A non-associative tensor is rejected with the offending generators.
    let bad = vec![vec![vec![0, 1], vec![0, 0]], vec![vec![0, 0], vec![1, 0]]];
    match make_ring(&[2, 2], &bad, "bad") {
        Ok(_) => println!("unexpectedly associative"),
        Err(e) => println!("rejected: {e}"),
    }

    let text = write_ring(&r);
    println!("ring file:\n{text}");
    let back = parse_ring(&text)?;
    assert_eq!(back.flat_tensor(), r.flat_tensor());

    let op = r.opposite();
    println!("{} is commutative: {}", op.name(), op.is_commutative());
    Ok(())
}
