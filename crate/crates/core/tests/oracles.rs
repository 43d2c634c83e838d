//! Independent brute-force oracles checked against the library on every
//! small catalog ring.

use std::collections::{BTreeSet, VecDeque};

use ncring::bits::Bits256;
use ncring::dominating::{dominating_characterization, is_dominating};
use ncring::graph::{build_gamma, degree_audit, metrics, NCGraph};
use ncring::harness::{build_catalog, CatalogSpec};
use ncring::isoclinism::{isoclinism_between, verify_witness, PairData};
use ncring::probability::{pr_pair, rational};
use ncring::subring::enumerate_subrings;
use ncring::{ElementSet, RingPresentation};

fn catalog(max_order: usize) -> Vec<RingPresentation> {
    build_catalog(&CatalogSpec::default().with_max_order(max_order))
        .unwrap()
        .into_iter()
        .map(|e| e.ring)
        .collect()
}

fn commute(r: &RingPresentation, a: usize, b: usize) -> bool {
    r.mul_idx(a, b) == r.mul_idx(b, a)
}

/// Vertices and edges of Γ(S,K) straight from the definition.
fn naive_gamma(r: &RingPresentation, s: &ElementSet, k: &ElementSet) -> (Vec<usize>, BTreeSet<(usize, usize)>) {
    let c_k_s: Vec<usize> = k.iter().filter(|&x| s.iter().all(|y| commute(r, x, y))).collect();
    let c_s_k: Vec<usize> = s.iter().filter(|&x| k.iter().all(|y| commute(r, x, y))).collect();
    let vertices: Vec<usize> = (0..r.order())
        .filter(|&x| (s.contains(x) || k.contains(x)) && !c_k_s.contains(&x) && !c_s_k.contains(&x))
        .collect();
    let mut edges = BTreeSet::new();
    for &a in &vertices {
        for &b in &vertices {
            if a < b && (s.contains(a) || s.contains(b)) && !commute(r, a, b) {
                edges.insert((a, b));
            }
        }
    }
    (vertices, edges)
}

fn bfs(adj: &[Vec<bool>], from: usize, skip: Option<(usize, usize)>) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut dist = vec![None; n];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            let skipped = skip.is_some_and(|(a, b)| (a, b) == (u, v) || (b, a) == (u, v));
            if adj[u][v] && !skipped && dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Diameter (None when disconnected or empty) and girth (None when acyclic).
fn naive_metrics(n: usize, edges: &[(usize, usize)]) -> (Option<usize>, Option<usize>) {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut diameter = if n == 0 { None } else { Some(0) };
    for u in 0..n {
        for d in bfs(&adj, u, None) {
            diameter = match (diameter, d) {
                (Some(x), Some(y)) => Some(x.max(y)),
                _ => None,
            };
        }
    }
    let girth = edges
        .iter()
        .filter_map(|&(a, b)| bfs(&adj, a, Some((a, b)))[b].map(|d| d + 1))
        .min();
    (diameter, girth)
}

fn positions(g: &NCGraph, edges: &BTreeSet<(usize, usize)>) -> Vec<(usize, usize)> {
    edges
        .iter()
        .map(|&(a, b)| (g.position(a).unwrap(), g.position(b).unwrap()))
        .collect()
}

#[test]
fn gamma_matches_the_definition() {
    for r in catalog(16) {
        let subs = enumerate_subrings(&r).unwrap();
        for s in &subs {
            for k in &subs {
                let g = build_gamma(&r, s, k).unwrap();
                let (vertices, edges) = naive_gamma(&r, s, k);
                assert_eq!(g.vertices(), &vertices[..], "{} {:?} {:?}", r.name(), s.indices(), k.indices());
                assert_eq!(g.edge_count(), edges.len());
                for &a in &vertices {
                    for &b in &vertices {
                        let e = edges.contains(&(a.min(b), a.max(b)));
                        assert_eq!(g.adjacent(a, b), e);
                    }
                }
            }
        }
    }
}

#[test]
fn commuting_probability_counts_pairs() {
    for r in catalog(16) {
        let subs = enumerate_subrings(&r).unwrap();
        for s in &subs {
            for k in &subs {
                let commuting = s.iter().flat_map(|a| k.iter().map(move |b| (a, b)))
                    .filter(|&(a, b)| commute(&r, a, b))
                    .count();
                let expected = rational(commuting as i64, (s.len() * k.len()) as i64);
                assert_eq!(pr_pair(&r, s, k).unwrap(), expected);
            }
        }
    }
}

#[test]
fn subrings_match_exhaustive_subset_search() {
    for r in catalog(8) {
        let n = r.order();
        let mut expected: Vec<Vec<usize>> = Vec::new();
        for mask in 0u32..1 << n {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = members.iter().all(|&a| {
                members.iter().all(|&b| {
                    mask >> r.sub_idx(a, b) & 1 == 1 && mask >> r.mul_idx(a, b) & 1 == 1
                })
            });
            if closed {
                expected.push(members);
            }
        }
        expected.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let got: Vec<Vec<usize>> = enumerate_subrings(&r).unwrap().iter().map(|s| s.indices()).collect();
        assert_eq!(got, expected, "{}", r.name());
    }
}

#[test]
fn metrics_match_bfs_oracle() {
    for r in catalog(16) {
        let subs = enumerate_subrings(&r).unwrap();
        for s in &subs {
            for k in &subs {
                let g = build_gamma(&r, s, k).unwrap();
                let (_, edges) = naive_gamma(&r, s, k);
                let m = metrics(&g);
                let (diameter, girth) = naive_metrics(g.vertex_count(), &positions(&g, &edges));
                assert_eq!((m.diameter, m.girth), (diameter, girth), "{} {:?} {:?}", r.name(), s.indices(), k.indices());
            }
        }
    }
}

#[test]
fn degree_formulas_are_exact_in_general_form() {
    for r in catalog(16).iter().filter(|r| !r.is_commutative()) {
        let subs = enumerate_subrings(r).unwrap();
        for s in &subs {
            for k in &subs {
                let g = build_gamma(r, s, k).unwrap();
                if !s.is_subset(k) {
                    assert!(degree_audit(r, &g).all_match());
                }
                for &v in g.vertices() {
                    let naive = g.vertices().iter().filter(|&&w| g.adjacent(v, w)).count();
                    assert_eq!(g.degree(v), Some(naive));
                }
            }
        }
    }
}

#[test]
fn domination_and_characterization_on_small_rings() {
    for r in catalog(8).iter().filter(|r| !r.is_commutative()) {
        let subs = enumerate_subrings(r).unwrap();
        for s in &subs {
            for k in &subs {
                let g = build_gamma(r, s, k).unwrap();
                let v = g.vertices().to_vec();
                for mask in 0u32..1 << v.len() {
                    let x: Vec<usize> = (0..v.len()).filter(|&b| mask >> b & 1 == 1).map(|b| v[b]).collect();
                    let set = r.subset(&x).unwrap();
                    let naive = v.iter().all(|&u| x.contains(&u) || x.iter().any(|&w| g.adjacent(u, w)));
                    assert_eq!(is_dominating(&g, &set).unwrap().dominating, naive);
                    // the centralizer side, computed independently
                    let cent = |within: &ElementSet| -> Vec<usize> {
                        within.iter().filter(|&y| x.iter().all(|&w| commute(r, y, w))).collect()
                    };
                    let excluded = |y: usize| {
                        (k.contains(y) && s.iter().all(|t| commute(r, y, t)))
                            || (s.contains(y) && k.iter().all(|t| commute(r, y, t)))
                    };
                    let side = cent(s).into_iter().chain(cent(k)).all(|y| x.contains(&y) || excluded(y));
                    let c = dominating_characterization(r, &g, &set).unwrap();
                    assert_eq!((c.by_definition, c.by_centralizers), (naive, side));
                }
            }
        }
    }
}

#[test]
fn isoclinism_witnesses_verify_literally_and_symmetrically() {
    let rings = catalog(8);
    let mut pairs = Vec::new();
    for r in &rings {
        let subs = enumerate_subrings(r).unwrap();
        for s in &subs {
            for k in &subs {
                if s.is_subset(k) {
                    pairs.push((r, *s, *k));
                }
            }
        }
    }
    let data: Vec<PairData> = pairs.iter().map(|(r, s, k)| PairData::new(r, s, k).unwrap()).collect();
    let mut found = 0;
    for (i, a) in data.iter().enumerate() {
        for b in data.iter().skip(i) {
            if a.invariants() != b.invariants() {
                continue;
            }
            let forward = isoclinism_between(a, b);
            let backward = isoclinism_between(b, a);
            assert_eq!(forward.is_some(), backward.is_some());
            if let Some(w) = forward {
                assert!(verify_witness(a, b, &w));
                found += 1;
            }
        }
    }
    assert!(found > data.len());
}

#[test]
fn bits_agree_with_btreeset() {
    let mut bits = Bits256::empty();
    let mut set = BTreeSet::new();
    for i in [0usize, 63, 64, 200, 255, 17, 64] {
        assert_eq!(bits.insert(i), set.insert(i));
    }
    assert_eq!(bits.to_vec(), set.into_iter().collect::<Vec<_>>());
}
