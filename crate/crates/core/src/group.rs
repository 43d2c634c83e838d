//! Finite abelian groups: the additive groups of ring presentations and of
//! quotients, with invariant factors, bases and isomorphism enumeration.

use crate::bits::Bits256;
use crate::error::{Error, Result};

/// `Z_{d_1} + ... + Z_{d_m}` in coordinates. Element indices are the
/// mixed-radix encoding with the first coordinate least significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u32>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(factors: &[u32]) -> Result<Self> {
        if let Some(d) = factors.iter().find(|&&d| d < 2) {
            return Err(Error::Shape(format!("invariant factor {d} is below 2")));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize))
            .ok_or(Error::OrderCapExceeded {
                order: usize::MAX,
                cap: crate::ring::DEFAULT_ORDER_CAP,
            })?;
        Ok(AbelianGroup {
            factors: factors.to_vec(),
            order,
        })
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn decode(&self, mut index: usize) -> Vec<u32> {
        self.factors
            .iter()
            .map(|&d| {
                let c = (index % d as usize) as u32;
                index /= d as usize;
                c
            })
            .collect()
    }

    /// Encodes a coefficient vector, reducing each entry modulo its factor.
    pub fn encode(&self, coeffs: &[u32]) -> usize {
        let mut index = 0usize;
        for (&c, &d) in coeffs.iter().zip(&self.factors).rev() {
            index = index * d as usize + (c % d) as usize;
        }
        index
    }

    /// Index of the `i`-th standard generator.
    pub fn generator(&self, i: usize) -> usize {
        self.factors[..i].iter().map(|&d| d as usize).product()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let sum: Vec<u32> = x
            .iter()
            .zip(&y)
            .zip(&self.factors)
            .map(|((p, q), d)| (p + q) % d)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let x = self.decode(a);
        let n: Vec<u32> = x
            .iter()
            .zip(&self.factors)
            .map(|(p, d)| (d - p) % d)
            .collect();
        self.encode(&n)
    }

    /// Cayley-table form of this group.
    pub fn table(&self) -> FiniteAbelian {
        let n = self.order;
        let mut add = vec![0u16; n * n];
        for a in 0..n {
            let x = self.decode(a);
            for b in 0..n {
                let y = self.decode(b);
                let s: Vec<u32> = x
                    .iter()
                    .zip(&y)
                    .zip(&self.factors)
                    .map(|((p, q), d)| (p + q) % d)
                    .collect();
                add[a * n + b] = self.encode(&s) as u16;
            }
        }
        FiniteAbelian::from_table(n, add)
    }
}

/// A finite abelian group given by its addition table; element 0 is zero.
#[derive(Debug, Clone)]
pub struct FiniteAbelian {
    n: usize,
    add: Vec<u16>,
    orders: Vec<u32>,
}

impl FiniteAbelian {
    pub fn from_table(n: usize, add: Vec<u16>) -> Self {
        assert_eq!(add.len(), n * n);
        let mut g = FiniteAbelian {
            n,
            add,
            orders: Vec::new(),
        };
        g.orders = (0..n).map(|x| g.compute_order(x)).collect();
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    pub fn multiple(&self, a: usize, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..(k % self.orders[a] as u64) {
            acc = self.add(acc, a);
        }
        acc
    }

    fn compute_order(&self, a: usize) -> u32 {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    /// Invariant factors `d_1 | d_2 | ... | d_t` in increasing order, from the
    /// census of elements killed by each prime power.
    pub fn invariant_factors(&self) -> Vec<u32> {
        let mut columns: Vec<Vec<u32>> = Vec::new();
        for p in prime_divisors(self.n as u32) {
            let mut p_part = 1usize;
            let mut m = self.n;
            while m.is_multiple_of(p as usize) {
                m /= p as usize;
                p_part *= p as usize;
            }
            // ranks[k] = log_p |{x : p^k x = 0}|
            let mut ranks = vec![0u32];
            let mut pk = 1u64;
            loop {
                pk *= p as u64;
                let killed = (0..self.n)
                    .filter(|&x| pk.is_multiple_of(self.orders[x] as u64))
                    .count();
                ranks.push(log_exact(killed, p));
                if killed == p_part {
                    break;
                }
            }
            // at_least[k] = number of cyclic factors of order >= p^k
            let at_least: Vec<u32> = (1..ranks.len()).map(|k| ranks[k] - ranks[k - 1]).collect();
            let mut powers = Vec::new();
            for (k, &count) in at_least.iter().enumerate() {
                let next = at_least.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(count - next) {
                    powers.push(p.pow(k as u32 + 1));
                }
            }
            powers.sort_unstable_by(|a, b| b.cmp(a));
            columns.push(powers);
        }
        let len = columns.iter().map(Vec::len).max().unwrap_or(0);
        let mut factors: Vec<u32> = (0..len)
            .map(|i| columns.iter().map(|c| c.get(i).copied().unwrap_or(1)).product())
            .collect();
        factors.reverse();
        factors
    }

    fn span_with(&self, span: &Bits256, x: usize) -> Bits256 {
        let mut out = *span;
        let mut shift = x;
        while !span.contains(shift) {
            for h in span.iter() {
                out.insert(self.add(h, shift));
            }
            shift = self.add(shift, x);
        }
        out
    }

    /// A basis matching [`invariant_factors`](Self::invariant_factors): element
    /// `i` has order `d_i` and every group element is a unique combination.
    pub fn basis(&self) -> Basis {
        let factors = self.invariant_factors();
        let mut desc = factors.clone();
        desc.reverse();
        let mut chosen = Vec::new();
        let found = self.basis_search(&desc, Bits256::singleton(0), &mut chosen);
        assert!(found, "every finite abelian group has a basis");
        chosen.reverse();

        let mut coords = vec![Vec::new(); self.n];
        let total: usize = factors.iter().map(|&d| d as usize).product();
        for code in 0..total {
            let mut rest = code;
            let mut c = Vec::with_capacity(factors.len());
            let mut x = 0;
            for (g, &d) in chosen.iter().zip(&factors) {
                let k = (rest % d as usize) as u64;
                rest /= d as usize;
                c.push(k as u32);
                x = self.add(x, self.multiple(*g, k));
            }
            coords[x] = c;
        }
        Basis {
            factors,
            generators: chosen,
            coords,
        }
    }

    fn basis_search(&self, desc: &[u32], span: Bits256, chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == desc.len() {
            return span.len() == self.n;
        }
        let d = desc[depth];
        for x in 0..self.n {
            if self.orders[x] != d {
                continue;
            }
            let next = self.span_with(&span, x);
            if next.len() != span.len() * d as usize {
                continue;
            }
            chosen.push(x);
            if self.basis_search(desc, next, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// All additive isomorphisms `self -> other`, as element maps, in a fixed
    /// order. Empty when the invariant factors differ.
    pub fn isomorphisms<'a>(&'a self, other: &'a FiniteAbelian) -> Isomorphisms<'a> {
        Isomorphisms::new(self, other)
    }
}

#[derive(Debug, Clone)]
pub struct Basis {
    pub factors: Vec<u32>,
    pub generators: Vec<usize>,
    /// `coords[x][i]` is the coefficient of generator `i` in `x`.
    pub coords: Vec<Vec<u32>>,
}

/// Generator-image odometer over candidate images of a source basis.
pub struct Isomorphisms<'a> {
    target: &'a FiniteAbelian,
    basis: Option<Basis>,
    /// candidates[i][c] lists the multiples 0, y, 2y, ... of the c-th candidate
    /// image of generator i.
    candidates: Vec<Vec<Vec<usize>>>,
    cursor: Vec<usize>,
    done: bool,
}

impl<'a> Isomorphisms<'a> {
    fn new(source: &'a FiniteAbelian, target: &'a FiniteAbelian) -> Self {
        let mut it = Isomorphisms {
            target,
            basis: None,
            candidates: Vec::new(),
            cursor: Vec::new(),
            done: true,
        };
        if source.order() != target.order()
            || source.invariant_factors() != target.invariant_factors()
        {
            return it;
        }
        let basis = source.basis();
        it.candidates = basis
            .factors
            .iter()
            .map(|&d| {
                (0..target.order())
                    .filter(|&y| d % target.element_order(y) == 0)
                    .map(|y| (0..d as u64).map(|k| target.multiple(y, k)).collect())
                    .collect()
            })
            .collect();
        it.cursor = vec![0; basis.factors.len()];
        it.basis = Some(basis);
        it.done = false;
        it
    }

    fn advance(&mut self) {
        for i in (0..self.cursor.len()).rev() {
            self.cursor[i] += 1;
            if self.cursor[i] < self.candidates[i].len() {
                return;
            }
            self.cursor[i] = 0;
        }
        self.done = true;
    }
}

impl Iterator for Isomorphisms<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while !self.done {
            let basis = self.basis.as_ref().expect("basis present while not done");
            let n = self.target.order();
            let mut image = vec![0usize; n];
            let mut seen = Bits256::empty();
            let mut injective = true;
            for (x, c) in basis.coords.iter().enumerate() {
                let mut y = 0;
                for (i, &k) in c.iter().enumerate() {
                    y = self.target.add(y, self.candidates[i][self.cursor[i]][k as usize]);
                }
                if !seen.insert(y) {
                    injective = false;
                    break;
                }
                image[x] = y;
            }
            self.advance();
            if injective {
                return Some(image);
            }
        }
        None
    }
}

fn log_exact(mut n: usize, p: u32) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p as usize, 0);
        n /= p as usize;
        k += 1;
    }
    k
}

pub fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Odd and a product of distinct primes (1 included).
pub fn is_square_free_odd(n: usize) -> bool {
    if n == 0 || n.is_multiple_of(2) {
        return false;
    }
    let mut m = n;
    let mut p = 3;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: &[u32]) -> FiniteAbelian {
        AbelianGroup::new(f).unwrap().table()
    }

    #[test]
    fn encode_round_trip() {
        let g = AbelianGroup::new(&[2, 3, 4]).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.encode(&g.decode(i)), i);
        }
        assert_eq!(g.generator(0), 1);
        assert_eq!(g.generator(2), 6);
        assert_eq!(g.add(g.generator(1), g.neg(g.generator(1))), 0);
    }

    #[test]
    fn invariant_factors_normalize() {
        assert_eq!(group(&[2, 3]).invariant_factors(), vec![6]);
        assert_eq!(group(&[4, 2]).invariant_factors(), vec![2, 4]);
        assert_eq!(group(&[2, 2, 3, 9]).invariant_factors(), vec![6, 18]);
        assert_eq!(group(&[2]).invariant_factors(), vec![2]);
        let trivial = FiniteAbelian::from_table(1, vec![0]);
        assert!(trivial.invariant_factors().is_empty());
    }

    #[test]
    fn basis_coords_are_complete() {
        let g = group(&[2, 4, 3]);
        let b = g.basis();
        assert_eq!(b.factors, vec![2, 12]);
        for (x, c) in b.coords.iter().enumerate() {
            let mut y = 0;
            for (gen, &k) in b.generators.iter().zip(c) {
                y = g.add(y, g.multiple(*gen, k as u64));
            }
            assert_eq!(x, y);
        }
    }

    #[test]
    fn automorphism_counts() {
        // |GL_2(F_2)| = 6, |Aut(Z_4)| = 2, |Aut(Z_2 + Z_4)| = 8, |GL_3(F_2)| = 168
        let cases: [(&[u32], usize); 4] = [(&[2, 2], 6), (&[4], 2), (&[2, 4], 8), (&[2, 2, 2], 168)];
        for (f, expect) in cases {
            let g = group(f);
            assert_eq!(g.isomorphisms(&g).count(), expect, "{f:?}");
        }
        assert_eq!(group(&[2, 2]).isomorphisms(&group(&[4])).count(), 0);
    }

    #[test]
    fn square_free_odd() {
        let yes: Vec<usize> = (1..40).filter(|&n| is_square_free_odd(n)).collect();
        assert_eq!(
            yes,
            vec![1, 3, 5, 7, 11, 13, 15, 17, 19, 21, 23, 29, 31, 33, 35, 37, 39]
        );
    }
}
