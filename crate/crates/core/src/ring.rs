//! Finite rings presented by additive invariant factors and a structure tensor.
//!
//! A ring on `Z_{d_1} + ... + Z_{d_m}` is fixed by the products `e_i e_j` of
//! the standard generators; everything else follows by bilinearity. The
//! addition, negation and multiplication tables over all element indices are
//! built once when the presentation is validated.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::bits::Bits256;
use crate::elemset::{ElementSet, SetRole};
use crate::error::{Error, Result};
use crate::group::{prime_divisors, AbelianGroup};

pub const DEFAULT_ORDER_CAP: usize = 256;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a validated presentation; sets and elements remember it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

impl RingId {
    fn fresh() -> Self {
        RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    ring: RingId,
    index: u16,
}

impl Element {
    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Neg,
    Mul,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingPredicates {
    pub is_commutative: bool,
    pub has_unity: bool,
    pub smallest_prime_divisor: u32,
}

#[derive(Debug)]
struct Tables {
    add: Vec<u16>,
    neg: Vec<u16>,
    mul: Vec<u16>,
}

#[derive(Clone)]
pub struct RingPresentation {
    id: RingId,
    name: String,
    group: AbelianGroup,
    /// Flat `m x m x m`: coefficient `t` of `e_i e_j` lives at `(i*m + j)*m + t`.
    tensor: Vec<u32>,
    tables: Arc<Tables>,
}

impl fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingPresentation")
            .field("name", &self.name)
            .field("invariant_factors", &self.group.factors())
            .field("tensor", &self.tensor)
            .finish()
    }
}

/// Validates and builds a ring. `tensor[i][j]` is the coefficient vector of
/// `e_i e_j`.
pub fn make_ring(factors: &[u32], tensor: &[Vec<Vec<u32>>], name: &str) -> Result<RingPresentation> {
    let m = factors.len();
    if tensor.len() != m || tensor.iter().any(|row| row.len() != m) {
        return Err(Error::Shape(format!("structure tensor must be {m} x {m}")));
    }
    let mut flat = Vec::with_capacity(m * m * m);
    for (i, row) in tensor.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if entry.len() != m {
                return Err(Error::Shape(format!(
                    "entry ({}, {}) has {} coefficients, expected {m}",
                    i + 1,
                    j + 1,
                    entry.len()
                )));
            }
            flat.extend_from_slice(entry);
        }
    }
    RingPresentation::from_flat(factors, flat, name, DEFAULT_ORDER_CAP)
}

impl RingPresentation {
    /// Builds from a flat tensor (see the field layout) under an order cap.
    pub fn from_flat(factors: &[u32], tensor: Vec<u32>, name: &str, cap: usize) -> Result<Self> {
        let m = factors.len();
        if m == 0 {
            return Err(Error::Shape("at least one invariant factor is required".into()));
        }
        let group = AbelianGroup::new(factors)?;
        if tensor.len() != m * m * m {
            return Err(Error::Shape(format!("structure tensor must hold {} coefficients", m * m * m)));
        }
        for i in 0..m {
            for j in 0..m {
                for t in 0..m {
                    let value = tensor[(i * m + j) * m + t];
                    if value >= factors[t] {
                        return Err(Error::Range {
                            i: i + 1,
                            j: j + 1,
                            t: t + 1,
                            value,
                            modulus: factors[t],
                        });
                    }
                }
            }
        }
        let cap = cap.min(DEFAULT_ORDER_CAP);
        if group.order() > cap {
            return Err(Error::OrderCapExceeded {
                order: group.order(),
                cap,
            });
        }
        check_well_defined(factors, &tensor)?;
        check_associative(factors, &tensor)?;
        let tables = Arc::new(build_tables(&group, &tensor));
        Ok(RingPresentation {
            id: RingId::fresh(),
            name: name.to_string(),
            group,
            tensor,
            tables,
        })
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same ring under another name.
    pub fn renamed(&self, name: &str) -> Self {
        RingPresentation {
            name: name.to_string(),
            ..self.clone()
        }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn invariant_factors(&self) -> &[u32] {
        self.group.factors()
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn flat_tensor(&self) -> &[u32] {
        &self.tensor
    }

    /// Coefficients of `e_i e_j` (0-based generator indices).
    pub fn generator_product(&self, i: usize, j: usize) -> &[u32] {
        let m = self.rank();
        &self.tensor[(i * m + j) * m..(i * m + j + 1) * m]
    }

    pub fn tensor(&self) -> Vec<Vec<Vec<u32>>> {
        let m = self.rank();
        (0..m)
            .map(|i| (0..m).map(|j| self.generator_product(i, j).to_vec()).collect())
            .collect()
    }

    // --- elements ---

    pub fn element(&self, coeffs: &[u32]) -> Result<Element> {
        if coeffs.len() != self.rank() {
            return Err(Error::Shape(format!(
                "element needs {} coefficients, got {}",
                self.rank(),
                coeffs.len()
            )));
        }
        Ok(self.elem(self.group.encode(coeffs)))
    }

    pub fn element_at(&self, index: usize) -> Result<Element> {
        if index >= self.order() {
            return Err(Error::ElementRingMismatch);
        }
        Ok(self.elem(index))
    }

    pub(crate) fn elem(&self, index: usize) -> Element {
        Element {
            ring: self.id,
            index: index as u16,
        }
    }

    pub fn zero(&self) -> Element {
        self.elem(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(|i| self.elem(i))
    }

    pub fn coeffs(&self, index: usize) -> Vec<u32> {
        self.group.decode(index)
    }

    /// Renders an element as its coefficient vector, e.g. `(1,0)`.
    pub fn format_element(&self, index: usize) -> String {
        let c: Vec<String> = self.coeffs(index).iter().map(u32::to_string).collect();
        format!("({})", c.join(","))
    }

    fn check(&self, x: &Element) -> Result<usize> {
        if x.ring != self.id || x.index() >= self.order() {
            return Err(Error::ElementRingMismatch);
        }
        Ok(x.index())
    }

    pub fn arith(&self, op: ArithOp, x: Element, y: Option<Element>) -> Result<Element> {
        let a = self.check(&x)?;
        let b = match (op, y) {
            (ArithOp::Neg, _) => 0,
            (_, Some(y)) => self.check(&y)?,
            (_, None) => return Err(Error::Shape("binary operation needs two operands".into())),
        };
        let r = match op {
            ArithOp::Add => self.add_idx(a, b),
            ArithOp::Neg => self.neg_idx(a),
            ArithOp::Mul => self.mul_idx(a, b),
        };
        Ok(self.elem(r))
    }

    pub fn add(&self, x: Element, y: Element) -> Result<Element> {
        self.arith(ArithOp::Add, x, Some(y))
    }

    pub fn neg(&self, x: Element) -> Result<Element> {
        self.arith(ArithOp::Neg, x, None)
    }

    pub fn mul(&self, x: Element, y: Element) -> Result<Element> {
        self.arith(ArithOp::Mul, x, Some(y))
    }

    /// `[u, v] = uv - vu`.
    pub fn commutator(&self, u: Element, v: Element) -> Result<Element> {
        let (a, b) = (self.check(&u)?, self.check(&v)?);
        Ok(self.elem(self.commutator_idx(a, b)))
    }

    #[inline]
    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        self.tables.add[a * self.order() + b] as usize
    }

    #[inline]
    pub fn neg_idx(&self, a: usize) -> usize {
        self.tables.neg[a] as usize
    }

    #[inline]
    pub fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, self.neg_idx(b))
    }

    #[inline]
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.tables.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn commutator_idx(&self, a: usize, b: usize) -> usize {
        self.sub_idx(self.mul_idx(a, b), self.mul_idx(b, a))
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul_idx(a, b) == self.mul_idx(b, a)
    }

    // --- sets ---

    pub fn full_set(&self) -> ElementSet {
        ElementSet::from_parts(self.id, self.order(), Bits256::full(self.order()), SetRole::Subring)
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::from_parts(self.id, self.order(), Bits256::singleton(0), SetRole::Subring)
    }

    /// A plain subset from element indices.
    pub fn subset(&self, indices: &[usize]) -> Result<ElementSet> {
        if indices.iter().any(|&i| i >= self.order()) {
            return Err(Error::ElementRingMismatch);
        }
        Ok(self.set_from_bits(indices.iter().copied().collect(), SetRole::Plain))
    }

    pub fn subset_of(&self, elements: &[Element]) -> Result<ElementSet> {
        let idx = elements
            .iter()
            .map(|e| self.check(e))
            .collect::<Result<Vec<_>>>()?;
        self.subset(&idx)
    }

    pub(crate) fn set_from_bits(&self, members: Bits256, role: SetRole) -> ElementSet {
        ElementSet::from_parts(self.id, self.order(), members, role)
    }

    pub(crate) fn owns(&self, set: &ElementSet) -> Result<()> {
        if set.ring() != self.id {
            return Err(Error::ElementRingMismatch);
        }
        Ok(())
    }

    /// Whether the set is closed under `+`, `-` and `*` and contains 0.
    pub fn is_subring(&self, set: &ElementSet) -> bool {
        self.is_additive_subgroup(set)
            && set
                .iter()
                .all(|a| set.iter().all(|b| set.contains(self.mul_idx(a, b))))
    }

    pub fn is_additive_subgroup(&self, set: &ElementSet) -> bool {
        set.contains(0)
            && set.iter().all(|a| {
                set.contains(self.neg_idx(a)) && set.iter().all(|b| set.contains(self.add_idx(a, b)))
            })
    }

    /// Promotes a set to the subring role after checking closure.
    pub fn as_subring(&self, set: &ElementSet) -> Option<ElementSet> {
        (set.ring() == self.id && self.is_subring(set)).then(|| set.with_role(SetRole::Subring))
    }

    /// `{t in within : ts = st for all s in of}`.
    pub fn centralizer(&self, within: &ElementSet, of: &ElementSet) -> Result<ElementSet> {
        self.owns(within)?;
        self.owns(of)?;
        Ok(self.centralizer_bits(within, of.members()))
    }

    pub(crate) fn centralizer_bits(&self, within: &ElementSet, of: &Bits256) -> ElementSet {
        let members = within
            .iter()
            .filter(|&t| of.iter().all(|s| self.commutes(t, s)))
            .collect();
        let role = if within.role() == SetRole::Subring {
            SetRole::Subring
        } else {
            SetRole::Plain
        };
        self.set_from_bits(members, role)
    }

    /// Centralizer of a single element inside `within`.
    pub fn centralizer_of_element(&self, within: &ElementSet, x: usize) -> ElementSet {
        self.centralizer_bits(within, &Bits256::singleton(x))
    }

    pub fn center(&self) -> ElementSet {
        let all = self.full_set();
        self.centralizer_bits(&all, all.members())
    }

    /// `Z(S) = C_S(S)`.
    pub fn center_of(&self, set: &ElementSet) -> ElementSet {
        self.centralizer_bits(set, set.members())
    }

    pub fn is_commutative_set(&self, set: &ElementSet) -> bool {
        set.iter().all(|a| set.iter().all(|b| b <= a || self.commutes(a, b)))
    }

    /// Two-sided identity of the set, if any.
    pub fn unity_of(&self, set: &ElementSet) -> Option<usize> {
        set.iter().find(|&e| {
            set.iter()
                .all(|x| self.mul_idx(e, x) == x && self.mul_idx(x, e) == x)
        })
    }

    pub fn predicates(&self) -> RingPredicates {
        let all = self.full_set();
        RingPredicates {
            is_commutative: self.is_commutative_set(&all),
            has_unity: self.unity_of(&all).is_some(),
            smallest_prime_divisor: prime_divisors(self.order() as u32)[0],
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.is_commutative_set(&self.full_set())
    }

    // --- derived rings ---

    /// Same additive group, transposed tensor: `e_i * e_j := e_j e_i`.
    pub fn opposite(&self) -> RingPresentation {
        let m = self.rank();
        let mut t = vec![0u32; m * m * m];
        for i in 0..m {
            for j in 0..m {
                t[(i * m + j) * m..(i * m + j + 1) * m].copy_from_slice(self.generator_product(j, i));
            }
        }
        RingPresentation::from_flat(self.invariant_factors(), t, &format!("op({})", self.name), DEFAULT_ORDER_CAP)
            .expect("the opposite of a valid ring is valid")
    }

    pub fn direct_product(&self, other: &RingPresentation, cap: usize) -> Result<RingPresentation> {
        let (ma, mb) = (self.rank(), other.rank());
        let m = ma + mb;
        let order = self.order() * other.order();
        if order > cap.min(DEFAULT_ORDER_CAP) {
            return Err(Error::OrderCapExceeded {
                order,
                cap: cap.min(DEFAULT_ORDER_CAP),
            });
        }
        let mut factors = self.invariant_factors().to_vec();
        factors.extend_from_slice(other.invariant_factors());
        let mut t = vec![0u32; m * m * m];
        for i in 0..ma {
            for j in 0..ma {
                let dst = (i * m + j) * m;
                t[dst..dst + ma].copy_from_slice(self.generator_product(i, j));
            }
        }
        for i in 0..mb {
            for j in 0..mb {
                let dst = ((ma + i) * m + (ma + j)) * m + ma;
                t[dst..dst + mb].copy_from_slice(other.generator_product(i, j));
            }
        }
        RingPresentation::from_flat(&factors, t, &format!("{}*{}", self.name, other.name), cap)
    }
}

/// Which derived construction [`derived_ring`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivedKind {
    DirectProduct,
    Opposite,
}

/// Direct product of two rings, or the opposite of the first.
pub fn derived_ring(
    first: &RingPresentation,
    second: Option<&RingPresentation>,
    kind: DerivedKind,
) -> Result<RingPresentation> {
    match (kind, second) {
        (DerivedKind::Opposite, _) => Ok(first.opposite()),
        (DerivedKind::DirectProduct, Some(b)) => first.direct_product(b, DEFAULT_ORDER_CAP),
        (DerivedKind::DirectProduct, None) => {
            Err(Error::Shape("direct product needs two operands".into()))
        }
    }
}

/// `d_i * (e_i e_j) = 0` and `d_j * (e_i e_j) = 0`, otherwise the bilinear
/// extension depends on the chosen coefficient representatives.
fn check_well_defined(factors: &[u32], tensor: &[u32]) -> Result<()> {
    let m = factors.len();
    for i in 0..m {
        for j in 0..m {
            for t in 0..m {
                let c = tensor[(i * m + j) * m + t] as u64;
                let dt = factors[t] as u64;
                if !(factors[i] as u64 * c).is_multiple_of(dt) || !(factors[j] as u64 * c).is_multiple_of(dt) {
                    return Err(Error::IllDefinedProduct { i: i + 1, j: j + 1 });
                }
            }
        }
    }
    Ok(())
}

/// Bilinear product of two coefficient vectors.
pub(crate) fn mul_coeffs(factors: &[u32], tensor: &[u32], x: &[u32], y: &[u32]) -> Vec<u32> {
    let m = factors.len();
    let mut acc = vec![0u64; m];
    for i in 0..m {
        if x[i] == 0 {
            continue;
        }
        for j in 0..m {
            if y[j] == 0 {
                continue;
            }
            let w = x[i] as u64 * y[j] as u64;
            let base = (i * m + j) * m;
            for t in 0..m {
                acc[t] += w * tensor[base + t] as u64;
            }
        }
    }
    acc.iter()
        .zip(factors)
        .map(|(&a, &d)| (a % d as u64) as u32)
        .collect()
}

fn check_associative(factors: &[u32], tensor: &[u32]) -> Result<()> {
    let m = factors.len();
    let unit = |i: usize| {
        let mut v = vec![0u32; m];
        v[i] = 1 % factors[i];
        v
    };
    for i in 0..m {
        for j in 0..m {
            let ij = &tensor[(i * m + j) * m..(i * m + j + 1) * m];
            for k in 0..m {
                let jk = &tensor[(j * m + k) * m..(j * m + k + 1) * m];
                let left = mul_coeffs(factors, tensor, ij, &unit(k));
                let right = mul_coeffs(factors, tensor, &unit(i), jk);
                if left != right {
                    return Err(Error::AssociativityViolation {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        left,
                        right,
                    });
                }
            }
        }
    }
    Ok(())
}

fn build_tables(group: &AbelianGroup, tensor: &[u32]) -> Tables {
    let n = group.order();
    let factors = group.factors();
    let decoded: Vec<Vec<u32>> = (0..n).map(|i| group.decode(i)).collect();
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let s: Vec<u32> = decoded[a]
                .iter()
                .zip(&decoded[b])
                .zip(factors)
                .map(|((p, q), d)| (p + q) % d)
                .collect();
            add[a * n + b] = group.encode(&s) as u16;
            mul[a * n + b] = group.encode(&mul_coeffs(factors, tensor, &decoded[a], &decoded[b])) as u16;
        }
    }
    let neg = (0..n).map(|a| group.neg(a) as u16).collect();
    Tables { add, neg, mul }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn nc4a_arithmetic() {
        let r = families::nc4a();
        let (a, b, c) = (r.element(&[1, 0]).unwrap(), r.element(&[0, 1]).unwrap(), r.element(&[1, 1]).unwrap());
        assert_eq!(r.mul(a, b).unwrap(), a);
        assert_eq!(r.add(a, b).unwrap(), c);
        assert_eq!(r.mul(c, a).unwrap(), c);
        assert_eq!(r.commutator(a, b).unwrap(), c);
        for x in r.elements() {
            assert_eq!(r.commutator(x, x).unwrap(), r.zero());
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let r = families::nc4a();
        let s = families::zn(4);
        let x = s.element(&[1]).unwrap();
        assert_eq!(r.mul(x, r.zero()), Err(Error::ElementRingMismatch));
        assert_eq!(r.centralizer(&s.full_set(), &r.full_set()), Err(Error::ElementRingMismatch));
    }

    #[test]
    fn validation_errors() {
        let bad_shape = make_ring(&[2, 2], &[vec![vec![1, 0]]], "x");
        assert!(matches!(bad_shape, Err(Error::Shape(_))));
        let bad_range = make_ring(&[2], &[vec![vec![2]]], "x");
        assert!(matches!(bad_range, Err(Error::Range { .. })));
        // e1 of order 2, e1e1 = e2 of order 4 breaks 2*(e1e1) = 0
        let ill = make_ring(
            &[2, 4],
            &[vec![vec![0, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]],
            "x",
        );
        assert!(matches!(ill, Err(Error::IllDefinedProduct { i: 1, j: 1 })));
        let big = RingPresentation::from_flat(&[16, 16], vec![0; 8], "big", 64);
        assert!(matches!(big, Err(Error::OrderCapExceeded { order: 256, cap: 64 })));
    }

    #[test]
    fn third_example_tensor_is_rejected_by_brute_force_verdict() {
        // e1e1=(1,0), e1e2=(0,1), e2e1=(1,0), e2e2=(0,1): the validator's verdict
        // must match a brute-force triple check over all 64 element triples.
        let tensor = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![1, 0], vec![0, 1]],
        ];
        let flat: Vec<u32> = tensor.iter().flatten().flatten().copied().collect();
        let brute_ok = (0..4).all(|x| {
            (0..4).all(|y| {
                (0..4).all(|z| {
                    let g = AbelianGroup::new(&[2, 2]).unwrap();
                    let f = [2, 2];
                    let m = |p: usize, q: usize| g.encode(&mul_coeffs(&f, &flat, &g.decode(p), &g.decode(q)));
                    m(m(x, y), z) == m(x, m(y, z))
                })
            })
        });
        let verdict = make_ring(&[2, 2], &tensor, "t");
        assert_eq!(verdict.is_ok(), brute_ok);
    }

    #[test]
    fn predicates() {
        let p = families::nc4a().predicates();
        assert_eq!((p.is_commutative, p.has_unity, p.smallest_prime_divisor), (false, false, 2));
        let p = families::zn(6).predicates();
        assert_eq!((p.is_commutative, p.has_unity, p.smallest_prime_divisor), (true, true, 2));
        let p = families::t2(2).predicates();
        assert_eq!((p.is_commutative, p.has_unity, p.smallest_prime_divisor), (false, true, 2));
        assert_eq!(families::zn(15).predicates().smallest_prime_divisor, 3);
    }

    #[test]
    fn centralizers_and_centers() {
        let r = families::nc4a();
        let a = r.subset(&[1]).unwrap();
        assert_eq!(r.centralizer(&r.full_set(), &a).unwrap().indices(), vec![0, 1]);
        assert_eq!(r.center().indices(), vec![0]);
        let z6 = families::zn(6);
        assert_eq!(z6.center().len(), 6);
        let t2 = families::t2(2);
        let z = t2.center();
        assert_eq!(z.len(), 2);
        let identity = t2.unity_of(&t2.full_set()).unwrap();
        assert_eq!(z.indices(), vec![0, identity]);
    }

    #[test]
    fn derived_rings() {
        let a = families::nc4a();
        let b = a.opposite();
        let (x, y) = (b.element(&[1, 0]).unwrap(), b.element(&[0, 1]).unwrap());
        assert_eq!(b.mul(x, y).unwrap(), y);
        assert_eq!(b.mul(y, x).unwrap(), x);
        assert_eq!(b.opposite().flat_tensor(), a.flat_tensor());
        let z6 = families::zn(6);
        assert_eq!(z6.opposite().flat_tensor(), z6.flat_tensor());
        let p = derived_ring(&a, Some(&families::zn(2)), DerivedKind::DirectProduct).unwrap();
        assert_eq!(p.order(), 8);
        let z = p.center();
        assert_eq!(z.len(), 2);
        // {0} x Z2: zero in the nc4a coordinates
        assert!(z.iter().all(|i| p.coeffs(i)[..2] == [0, 0]));
    }
}
