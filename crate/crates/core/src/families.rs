//! Built-in ring families: `Z_n`, zero rings, and matrix-unit rings over `Z_p`.

use crate::ring::{make_ring, RingPresentation, DEFAULT_ORDER_CAP};

/// `Z_n` with its usual multiplication.
pub fn zn(n: u32) -> RingPresentation {
    make_ring(&[n], &[vec![vec![1]]], &format!("Z{n}")).expect("Z_n is a ring")
}

/// The ring on the given additive group with all products zero.
pub fn zero_ring(factors: &[u32], name: &str) -> RingPresentation {
    let m = factors.len();
    RingPresentation::from_flat(factors, vec![0; m * m * m], name, DEFAULT_ORDER_CAP)
        .expect("zero products are associative")
}

/// Order-4 noncommutative ring on `Z_2 + Z_2` with `aa = ab = a`, `ba = bb = b`.
pub fn nc4a() -> RingPresentation {
    make_ring(
        &[2, 2],
        &[
            vec![vec![1, 0], vec![1, 0]],
            vec![vec![0, 1], vec![0, 1]],
        ],
        "nc4a",
    )
    .expect("nc4a is associative")
}

/// Opposite of [`nc4a`]: `ab = b`, `ba = a`.
pub fn nc4b() -> RingPresentation {
    nc4a().opposite().renamed("nc4b")
}

/// Span over `Z_p` of the matrix units `E_{rc}` for the listed positions.
/// The span must be closed under multiplication.
pub fn matrix_unit_ring(p: u32, units: &[(usize, usize)], name: &str) -> RingPresentation {
    let m = units.len();
    let tensor: Vec<Vec<Vec<u32>>> = units
        .iter()
        .map(|&(r1, c1)| {
            units
                .iter()
                .map(|&(r2, c2)| {
                    let mut v = vec![0u32; m];
                    if c1 == r2 {
                        let pos = units
                            .iter()
                            .position(|&u| u == (r1, c2))
                            .expect("matrix units must span a subring");
                        v[pos] = 1;
                    }
                    v
                })
                .collect()
        })
        .collect();
    make_ring(&vec![p; m], &tensor, name).expect("matrix unit spans are associative")
}

/// Upper-triangular 2x2 matrices over `Z_p`, basis `e11, e12, e22`.
pub fn t2(p: u32) -> RingPresentation {
    matrix_unit_ring(p, &[(0, 0), (0, 1), (1, 1)], &format!("T2(Z{p})"))
}

/// Upper-triangular 3x3 matrices over `Z_p`.
pub fn t3(p: u32) -> RingPresentation {
    matrix_unit_ring(
        p,
        &[(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)],
        &format!("T3(Z{p})"),
    )
}

/// Strictly upper-triangular 3x3 matrices over `Z_p`, basis `e12, e13, e23`.
pub fn n3(p: u32) -> RingPresentation {
    matrix_unit_ring(p, &[(0, 1), (0, 2), (1, 2)], &format!("N3(Z{p})"))
}

/// Full 2x2 matrix ring over `Z_p`, basis `e11, e12, e21, e22`.
pub fn m2(p: u32) -> RingPresentation {
    matrix_unit_ring(p, &[(0, 0), (0, 1), (1, 0), (1, 1)], &format!("M2(Z{p})"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_commutativity() {
        let cases = [
            (t2(2), 8, false, true),
            (t2(3), 27, false, true),
            (t3(2), 64, false, true),
            (n3(2), 8, false, false),
            (n3(3), 27, false, false),
            (m2(2), 16, false, true),
            (zn(12), 12, true, true),
            (zero_ring(&[2, 2], "zero"), 4, true, false),
        ];
        for (r, order, comm, unity) in cases {
            let p = r.predicates();
            assert_eq!(r.order(), order, "{}", r.name());
            assert_eq!(p.is_commutative, comm, "{}", r.name());
            assert_eq!(p.has_unity, unity, "{}", r.name());
        }
    }

    #[test]
    fn t2_commutator_matches_matrix_arithmetic() {
        // [e12, e22] = e12 e22 - e22 e12 = e12 - 0
        let r = t2(2);
        let e12 = r.element(&[0, 1, 0]).unwrap();
        let e22 = r.element(&[0, 0, 1]).unwrap();
        assert_eq!(r.commutator(e12, e22).unwrap(), e12);
    }

    #[test]
    fn nc4b_products() {
        let r = nc4b();
        assert_eq!(r.tensor()[0][1], vec![0, 1]);
        assert_eq!(r.tensor()[1][0], vec![1, 0]);
    }
}
