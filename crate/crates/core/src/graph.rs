//! The generalized non-commuting graph `Γ(S,K)`, its degree audit, metrics,
//! shape classification and DOT export.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bits::Bits256;
use crate::elemset::{ElementSet, SetRole};
use crate::error::{Error, Result};
use crate::group::is_square_free_odd;
use crate::ring::{RingId, RingPresentation};

const NOT_A_VERTEX: u16 = u16::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexClass {
    /// In `S` but not in `K`.
    SOnly,
    /// In `S ∩ K`.
    Both,
    /// In `K` but not in `S`.
    KOnly,
}

impl VertexClass {
    pub fn dot_label(self) -> &'static str {
        match self {
            VertexClass::SOnly => "S",
            VertexClass::Both => "SK",
            VertexClass::KOnly => "K",
        }
    }
}

#[derive(Debug, Clone)]
pub struct NCGraph {
    ring: RingId,
    s: ElementSet,
    k: ElementSet,
    c_k_s: ElementSet,
    c_s_k: ElementSet,
    vertices: Vec<usize>,
    position: Vec<u16>,
    adj: Vec<Bits256>,
    classes: Vec<VertexClass>,
    edges: usize,
}

fn require_subring(ring: &RingPresentation, set: &ElementSet, label: &str) -> Result<()> {
    ring.owns(set)?;
    if set.role() != SetRole::Subring && !ring.is_subring(set) {
        return Err(Error::HypothesisNotMet(format!("{label} is not a subring")));
    }
    Ok(())
}

/// Builds `Γ(S,K)`: vertices `(S ∪ K) \ (C_K(S) ∪ C_S(K))`, edges between
/// distinct vertices `a`, `b` with `a ∈ S` or `b ∈ S` and `ab ≠ ba`.
/// `Γ(R,R)` is the ordinary non-commuting graph of `R`.
pub fn build_gamma(ring: &RingPresentation, s: &ElementSet, k: &ElementSet) -> Result<NCGraph> {
    require_subring(ring, s, "S")?;
    require_subring(ring, k, "K")?;
    let c_k_s = ring.centralizer_bits(k, s.members());
    let c_s_k = ring.centralizer_bits(s, k.members());
    let excluded = c_k_s.members().union(c_s_k.members());
    let vertex_bits = s.members().union(k.members()).difference(&excluded);
    let vertices = vertex_bits.to_vec();
    let mut position = vec![NOT_A_VERTEX; ring.order()];
    for (p, &v) in vertices.iter().enumerate() {
        position[v] = p as u16;
    }
    let classes: Vec<VertexClass> = vertices
        .iter()
        .map(|&v| match (s.contains(v), k.contains(v)) {
            (true, true) => VertexClass::Both,
            (true, false) => VertexClass::SOnly,
            _ => VertexClass::KOnly,
        })
        .collect();
    let n = vertices.len();
    let mut adj = vec![Bits256::empty(); n];
    let mut edges = 0;
    for p in 0..n {
        for q in p + 1..n {
            let (a, b) = (vertices[p], vertices[q]);
            if (s.contains(a) || s.contains(b)) && !ring.commutes(a, b) {
                adj[p].insert(q);
                adj[q].insert(p);
                edges += 1;
            }
        }
    }
    Ok(NCGraph {
        ring: ring.id(),
        s: *s,
        k: *k,
        c_k_s,
        c_s_k,
        vertices,
        position,
        adj,
        classes,
        edges,
    })
}

impl NCGraph {
    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn s(&self) -> &ElementSet {
        &self.s
    }

    pub fn k(&self) -> &ElementSet {
        &self.k
    }

    /// `C_K(S)`.
    pub fn c_k_s(&self) -> &ElementSet {
        &self.c_k_s
    }

    /// `C_S(K)`.
    pub fn c_s_k(&self) -> &ElementSet {
        &self.c_s_k
    }

    /// Vertex element indices, increasing.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_vertex(&self, element: usize) -> bool {
        self.position.get(element).is_some_and(|&p| p != NOT_A_VERTEX)
    }

    /// Position of a vertex in [`vertices`](Self::vertices).
    pub fn position(&self, element: usize) -> Option<usize> {
        self.position
            .get(element)
            .filter(|&&p| p != NOT_A_VERTEX)
            .map(|&p| p as usize)
    }

    pub fn class_of(&self, element: usize) -> Option<VertexClass> {
        self.position(element).map(|p| self.classes[p])
    }

    pub fn classes(&self) -> &[VertexClass] {
        &self.classes
    }

    /// Adjacency rows indexed by vertex position.
    pub fn rows(&self) -> &[Bits256] {
        &self.adj
    }

    pub fn vertex_bits(&self) -> Bits256 {
        self.vertices.iter().copied().collect()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(p), Some(q)) => self.adj[p].contains(q),
            _ => false,
        }
    }

    /// Neighbors of a vertex as element indices.
    pub fn neighbors(&self, element: usize) -> Vec<usize> {
        self.position(element)
            .map(|p| self.adj[p].iter().map(|q| self.vertices[q]).collect())
            .unwrap_or_default()
    }

    pub fn neighbor_bits(&self, element: usize) -> Bits256 {
        self.neighbors(element).into_iter().collect()
    }

    pub fn degree(&self, element: usize) -> Option<usize> {
        self.position(element).map(|p| self.adj[p].len())
    }

    /// `(vertex, degree)` for every vertex.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        self.vertices
            .iter()
            .zip(&self.adj)
            .map(|(&v, row)| (v, row.len()))
            .collect()
    }

    /// Graphviz export; byte-stable for a given graph.
    pub fn to_dot(&self, ring: &RingPresentation) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", ring.name());
        for (&v, class) in self.vertices.iter().zip(&self.classes) {
            let _ = writeln!(
                out,
                "  v{v} [label=\"{}\", class=\"{}\"];",
                ring.format_element(v),
                class.dot_label()
            );
        }
        for p in 0..self.vertices.len() {
            for q in self.adj[p].iter().filter(|&q| q > p) {
                let _ = writeln!(out, "  v{} -- v{};", self.vertices[p], self.vertices[q]);
            }
        }
        out.push_str("}\n");
        out
    }
}

// --- degree audit ---

/// Which closed-form degree expression applies to a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DegreeCase {
    /// Nested `S ⊆ K`, vertex in `S`: `|K| - |C_K(r)|`.
    NestedInS,
    /// Nested `S ⊆ K`, vertex in `K \ S`: `|S| - |C_S(r)|`.
    NestedInKOnly,
    /// Vertex in `S \ K`: `|S ∪ K| - |C_S(r) ∪ C_K(r) ∪ C_S(K)|`.
    GeneralSOnly,
    /// Vertex in `S ∩ K`: `|S ∪ K| - |C_S(r) ∪ C_K(r)|`.
    GeneralBoth,
    /// Vertex in `K \ S`: `|S| - |C_S(r) ∪ C_{S∩K}(S)|`.
    GeneralKOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub vertex: usize,
    pub actual: usize,
    pub predicted: usize,
    pub case: DegreeCase,
    /// An element on which the formula's neighbor set and the graph disagree.
    pub witness: Option<usize>,
}

impl DegreeCheck {
    pub fn matches(&self) -> bool {
        self.actual == self.predicted
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeAudit {
    pub nested: bool,
    pub checks: Vec<DegreeCheck>,
}

impl DegreeAudit {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(DegreeCheck::matches)
    }

    pub fn first_mismatch(&self) -> Option<&DegreeCheck> {
        self.checks.iter().find(|c| !c.matches())
    }
}

/// Formula family used by [`degree_audit_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeFormulas {
    /// Two-case formulas valid for nested pairs.
    Nested,
    /// Three-case formulas for arbitrary pairs.
    General,
}

/// Compares every vertex degree with the closed form: nested formulas when
/// `S ⊆ K`, general formulas otherwise.
pub fn degree_audit(ring: &RingPresentation, g: &NCGraph) -> DegreeAudit {
    let nested = g.s.is_subset(&g.k);
    degree_audit_with(
        ring,
        g,
        if nested {
            DegreeFormulas::Nested
        } else {
            DegreeFormulas::General
        },
    )
}

pub fn degree_audit_with(ring: &RingPresentation, g: &NCGraph, formulas: DegreeFormulas) -> DegreeAudit {
    let (s, k) = (&g.s, &g.k);
    let s_or_k = s.members().union(k.members());
    let s_and_k = s.intersection(k);
    let c_sk_s = ring.centralizer_bits(&s_and_k, s.members());
    let checks = g
        .vertices
        .iter()
        .map(|&r| {
            let cs = *ring.centralizer_of_element(s, r).members();
            let ck = *ring.centralizer_of_element(k, r).members();
            let (case, predicted_set) = match formulas {
                DegreeFormulas::Nested => {
                    if s.contains(r) {
                        (DegreeCase::NestedInS, k.members().difference(&ck))
                    } else {
                        (DegreeCase::NestedInKOnly, s.members().difference(&cs))
                    }
                }
                DegreeFormulas::General => match (s.contains(r), k.contains(r)) {
                    (true, false) => (
                        DegreeCase::GeneralSOnly,
                        s_or_k.difference(&cs.union(&ck).union(g.c_s_k.members())),
                    ),
                    (true, true) => (DegreeCase::GeneralBoth, s_or_k.difference(&cs.union(&ck))),
                    _ => (
                        DegreeCase::GeneralKOnly,
                        s.members().difference(&cs.union(c_sk_s.members())),
                    ),
                },
            };
            let actual_set = g.neighbor_bits(r);
            let diff = actual_set
                .difference(&predicted_set)
                .union(&predicted_set.difference(&actual_set));
            DegreeCheck {
                vertex: r,
                actual: actual_set.len(),
                predicted: predicted_set.len(),
                case,
                witness: diff.first(),
            }
        })
        .collect();
    DegreeAudit {
        nested: formulas == DegreeFormulas::Nested,
        checks,
    }
}

// --- metrics ---

/// Graph metrics; `None` stands for an infinite diameter or girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub connected: bool,
    pub component_count: usize,
}

fn bfs(rows: &[Bits256], root: usize, dist: &mut [usize], parent: &mut [usize]) -> Option<usize> {
    dist.fill(usize::MAX);
    parent.fill(usize::MAX);
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut shortest_cycle: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        for w in rows[u].iter() {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let len = dist[u] + dist[w] + 1;
                shortest_cycle = Some(shortest_cycle.map_or(len, |c| c.min(len)));
            }
        }
    }
    shortest_cycle
}

/// Metrics of a graph given by adjacency rows.
pub fn metrics_of_rows(rows: &[Bits256]) -> Metrics {
    let n = rows.len();
    let mut dist = vec![0usize; n];
    let mut parent = vec![0usize; n];
    let mut girth: Option<usize> = None;
    let mut eccentricity_max = 0usize;
    let mut disconnected = false;
    let mut component = vec![usize::MAX; n];
    let mut components = 0;
    for root in 0..n {
        if let Some(c) = bfs(rows, root, &mut dist, &mut parent) {
            girth = Some(girth.map_or(c, |g| g.min(c)));
        }
        if component[root] == usize::MAX {
            for v in 0..n {
                if dist[v] != usize::MAX {
                    component[v] = components;
                }
            }
            components += 1;
        }
        for &d in &dist {
            if d == usize::MAX {
                disconnected = true;
            } else {
                eccentricity_max = eccentricity_max.max(d);
            }
        }
    }
    let diameter = if n == 0 || disconnected {
        None
    } else {
        Some(eccentricity_max)
    };
    Metrics {
        diameter,
        girth,
        connected: components == 1,
        component_count: components,
    }
}

pub fn metrics(g: &NCGraph) -> Metrics {
    metrics_of_rows(&g.adj)
}

// --- shapes ---

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub is_star: bool,
    pub is_complete: bool,
    pub is_complete_bipartite: bool,
    pub regular_degree: Option<usize>,
    /// The regular degree is an odd product of distinct primes (1 included).
    pub regular_square_free_odd: bool,
    pub has_isolated_vertex: bool,
}

pub fn classify_rows(rows: &[Bits256]) -> ShapeReport {
    let n = rows.len();
    let degrees: Vec<usize> = rows.iter().map(Bits256::len).collect();
    let edges = degrees.iter().sum::<usize>() / 2;
    let regular_degree = match degrees.first() {
        Some(&d) if degrees.iter().all(|&x| x == d) => Some(d),
        _ => None,
    };
    let nondegenerate = n >= 2;
    let is_complete = nondegenerate && edges == n * (n - 1) / 2;
    let is_star = nondegenerate
        && edges == n - 1
        && degrees.iter().filter(|&&d| d == n - 1).count() >= 1
        && degrees.iter().filter(|&&d| d == 1).count() >= n - 1;
    let is_complete_bipartite = nondegenerate && complete_bipartite(rows, edges);
    ShapeReport {
        is_star,
        is_complete,
        is_complete_bipartite,
        regular_degree,
        regular_square_free_odd: regular_degree.is_some_and(is_square_free_odd),
        has_isolated_vertex: degrees.contains(&0),
    }
}

fn complete_bipartite(rows: &[Bits256], edges: usize) -> bool {
    let n = rows.len();
    let mut color = vec![u8::MAX; n];
    color[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for w in rows[u].iter() {
            if color[w] == u8::MAX {
                color[w] = 1 - color[u];
                reached += 1;
                queue.push_back(w);
            } else if color[w] == color[u] {
                return false;
            }
        }
    }
    if reached != n {
        return false;
    }
    let left = color.iter().filter(|&&c| c == 0).count();
    left > 0 && left < n && edges == left * (n - left)
}

pub fn classify_shape(g: &NCGraph) -> ShapeReport {
    classify_rows(&g.adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn whole(r: &RingPresentation) -> NCGraph {
        build_gamma(r, &r.full_set(), &r.full_set()).unwrap()
    }

    #[test]
    fn nc4a_is_a_triangle() {
        let r = families::nc4a();
        let g = whole(&r);
        assert_eq!(g.vertices(), &[1, 2, 3]);
        assert_eq!(g.edge_count(), 3);
        let m = metrics(&g);
        assert_eq!((m.diameter, m.girth, m.connected), (Some(1), Some(3), true));
        let shape = classify_shape(&g);
        assert!(shape.is_complete && !shape.is_star && !shape.is_complete_bipartite);
        assert_eq!(shape.regular_degree, Some(2));
        assert!(degree_audit(&r, &g).all_match());
    }

    #[test]
    fn commutative_ring_has_empty_graph() {
        let r = families::zn(6);
        let g = whole(&r);
        assert_eq!(g.vertex_count(), 0);
        let shape = classify_shape(&g);
        assert_eq!(shape.regular_degree, None);
        assert!(!shape.is_star && !shape.is_complete && !shape.is_complete_bipartite);
        let m = metrics(&g);
        assert_eq!((m.diameter, m.girth, m.connected, m.component_count), (None, None, false, 0));
    }

    #[test]
    fn small_subring_against_whole_ring() {
        let r = families::nc4a();
        let s = r.subset(&[0, 1]).unwrap().with_role(SetRole::Subring);
        let g = build_gamma(&r, &s, &r.full_set()).unwrap();
        assert_eq!(g.c_k_s().indices(), vec![0, 1]);
        assert_eq!(g.vertices(), &[2, 3]);
        assert_eq!(g.edge_count(), 0);
        let m = metrics(&g);
        assert_eq!((m.diameter, m.girth, m.connected, m.component_count), (None, None, false, 2));
        let audit = degree_audit(&r, &g);
        let b = audit.checks.iter().find(|c| c.vertex == 2).unwrap();
        assert_eq!((b.actual, b.predicted, b.case), (0, 1, DegreeCase::NestedInKOnly));
        // a lies in C_K(S) yet does not commute with b
        assert_eq!(b.witness, Some(1));
    }

    #[test]
    fn t2z2_is_four_regular() {
        let r = families::t2(2);
        let g = whole(&r);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert!(g.degrees().iter().all(|&(_, d)| d == 4));
        let m = metrics(&g);
        assert_eq!((m.diameter, m.girth, m.connected), (Some(2), Some(3), true));
        let shape = classify_shape(&g);
        assert_eq!(shape.regular_degree, Some(4));
        assert!(!shape.regular_square_free_odd);
        assert!(degree_audit(&r, &g).all_match());
    }

    #[test]
    fn shape_classifier_on_plain_graphs() {
        let rows = |edges: &[(usize, usize)], n: usize| {
            let mut r = vec![Bits256::empty(); n];
            for &(a, b) in edges {
                r[a].insert(b);
                r[b].insert(a);
            }
            r
        };
        let star = classify_rows(&rows(&[(0, 1), (0, 2), (0, 3)], 4));
        assert!(star.is_star && star.is_complete_bipartite && !star.is_complete);
        let k23 = classify_rows(&rows(&[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], 5));
        assert!(k23.is_complete_bipartite && !k23.is_star);
        let c6 = classify_rows(&rows(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)], 6));
        assert!(!c6.is_complete_bipartite);
        assert_eq!(c6.regular_degree, Some(2));
        let c4 = rows(&[(0, 1), (1, 2), (2, 3), (3, 0)], 4);
        assert!(classify_rows(&c4).is_complete_bipartite);
        assert_eq!(metrics_of_rows(&c4).girth, Some(4));
        let path = rows(&[(0, 1), (1, 2)], 3);
        let m = metrics_of_rows(&path);
        assert_eq!((m.diameter, m.girth), (Some(2), None));
        let single = rows(&[], 1);
        let m = metrics_of_rows(&single);
        assert_eq!((m.diameter, m.connected), (Some(0), true));
        assert!(!classify_rows(&single).is_complete);
    }

    #[test]
    fn dot_is_stable() {
        let r = families::nc4a();
        let dot = whole(&r).to_dot(&r);
        assert_eq!(
            dot,
            "graph \"nc4a\" {\n  v1 [label=\"(1,0)\", class=\"SK\"];\n  v2 [label=\"(0,1)\", class=\"SK\"];\n  v3 [label=\"(1,1)\", class=\"SK\"];\n  v1 -- v2;\n  v1 -- v3;\n  v2 -- v3;\n}\n"
        );
    }
}
