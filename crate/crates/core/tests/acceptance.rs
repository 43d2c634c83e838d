//! Acceptance criteria 1 to 8. Prints one PASS/FAIL line per criterion and
//! exits nonzero when any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ncring::enumerate::{enumerate_rings_on_group, rings_isomorphic, RingFilter};
use ncring::families;
use ncring::graph::{build_gamma, classify_shape, metrics};
use ncring::graph_iso::graph_isomorphic;
use ncring::harness::{build_catalog, run_suite, CatalogSpec, ClaimFilter, ClaimReport, SuiteConfig};
use ncring::isoclinism::{isoclinism_between, PairData};
use ncring::probability::{edge_identity, format_rational, pr_ring, rational};
use ncring::verdict::Status;

struct Outcome {
    problems: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { problems: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.problems.push(what.into());
        }
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.expect(elapsed < limit, format!("runtime {elapsed:.2?} exceeds {limit:?}"));
    }
}

fn suite(max_order: usize, claims: &str) -> Vec<ClaimReport> {
    let catalog = build_catalog(&CatalogSpec::default().with_max_order(max_order)).expect("catalog");
    let cfg = SuiteConfig {
        claims: ClaimFilter::parse(claims).expect("claim filter"),
        ..SuiteConfig::default()
    };
    run_suite(&catalog, &cfg)
}

/// Records every non-informative fail or evaluation error, with the first
/// few instances spelled out.
fn no_failures(out: &mut Outcome, reports: &[ClaimReport], label: &str) {
    let bad: Vec<&ClaimReport> = reports
        .iter()
        .filter(|r| (r.status == Status::Fails && !r.informative) || r.status == Status::EvaluationError)
        .collect();
    if bad.is_empty() {
        return;
    }
    let mut ids: Vec<&str> = bad.iter().map(|r| r.claim_id).collect();
    ids.dedup();
    let mut counts = Vec::new();
    for id in ids {
        counts.push(format!("{id} x{}", bad.iter().filter(|r| r.claim_id == id).count()));
    }
    let first = bad[0];
    out.problems.push(format!(
        "{label}: {} failing reports ({}); first {} on {} witness {}",
        bad.len(),
        counts.join(", "),
        first.claim_id,
        first.instance,
        first.witness
    ));
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let r = families::nc4a();
    let full = r.full_set();
    let g = build_gamma(&r, &full, &full).unwrap();
    out.expect(g.vertex_count() == 3, format!("vertices {}", g.vertex_count()));
    out.expect(g.edge_count() == 3, format!("edges {}", g.edge_count()));
    out.expect(classify_shape(&g).is_complete, "not a triangle");
    let pr = pr_ring(&r);
    out.expect(pr == rational(5, 8), format!("Pr(R) = {}", format_rational(&pr)));
    let v = edge_identity(&r, &full, &full).unwrap();
    out.expect(
        v.formula == rational(3, 1) && v.status == Status::Holds,
        format!("identity formula {} status {}", format_rational(&v.formula), v.status),
    );
    out.within(start.elapsed(), Duration::from_secs(1));
    out
}

fn criterion_2() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let r = families::t2(2);
    let full = r.full_set();
    let g = build_gamma(&r, &full, &full).unwrap();
    let m = metrics(&g);
    let shape = classify_shape(&g);
    out.expect(r.center().len() == 2, format!("|Z| = {}", r.center().len()));
    out.expect(g.vertex_count() == 6, format!("vertices {}", g.vertex_count()));
    out.expect(shape.regular_degree == Some(4), format!("regular degree {:?}", shape.regular_degree));
    out.expect(g.edge_count() == 12, format!("edges {}", g.edge_count()));
    out.expect(m.diameter == Some(2), format!("diameter {:?}", m.diameter));
    out.expect(m.girth == Some(3), format!("girth {:?}", m.girth));
    out.expect(pr_ring(&r) == rational(5, 8), "Pr(R) is not 5/8");
    out.expect(!shape.regular_square_free_odd, "classified square-free-odd regular");
    out.within(start.elapsed(), Duration::from_secs(1));
    out
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let rings = enumerate_rings_on_group(&[2, 2], RingFilter::default()).unwrap();
    out.within(start.elapsed(), Duration::from_secs(1));
    let nc: Vec<_> = rings.iter().filter(|r| !r.is_commutative()).collect();
    let nc4a = families::nc4a();
    let op = nc4a.opposite();
    let contains = |target: &ncring::RingPresentation| nc.iter().any(|r| rings_isomorphic(r, target).unwrap());
    out.expect(contains(&nc4a), "nc4a missing from the sweep");
    out.expect(contains(&op), "op(nc4a) missing from the sweep");
    for r in &nc {
        let pr = pr_ring(r);
        let z = r.center().len() as i64;
        let n = r.order() as i64;
        out.expect(pr <= rational(5, 8), format!("{}: Pr = {} > 5/8", r.name(), format_rational(&pr)));
        out.expect(
            pr <= rational(1, 2) + rational(z, 2 * n),
            format!("{}: Pr = {} above 1/2 + |Z|/(2|R|)", r.name(), format_rational(&pr)),
        );
    }
    out.expect(!nc.is_empty(), "no noncommutative rings");
    out
}

fn criterion_4() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let reports = suite(
        64,
        "S2.star-impossible,S2.complete-bipartite-impossible,S2.sqfree-odd-regular-impossible,\
         S2.complete-impossible,S4.n1-nonexistence,S4.n2-nonexistence",
    );
    out.within(start.elapsed(), Duration::from_secs(300));
    no_failures(&mut out, &reports, "impossibility");
    out.expect(reports.iter().any(|r| r.status == Status::Holds), "no instance evaluated");
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new();
    let reports = suite(
        64,
        "S3.connected,S3.diam-girth-a,S3.diam-girth-b,S3.dominating-coset,S3.dominating-generators,\
         S3.dominating-nested,S3.dominating-characterization",
    );
    no_failures(&mut out, &reports, "diameter, girth and dominating sets");
    out
}

fn criterion_6() -> Outcome {
    let mut out = Outcome::new();
    let reports = suite(64, "S4");
    let identities = ["S4.cor-edge-identity", "S4.edge-identity-nested", "S4.edge-identity-nonnested"];
    let mut consistent_fails = Vec::new();
    for r in reports.iter().filter(|r| identities.contains(&r.claim_id)) {
        if r.status != Status::Fails {
            continue;
        }
        out.expect(!r.witness.is_null(), format!("{} on {} has no witness", r.claim_id, r.instance));
        if r.claim_id == "S4.cor-edge-identity" || r.witness["consistency"] == true {
            consistent_fails.push(r);
        }
    }
    if let Some(first) = consistent_fails.first() {
        out.problems.push(format!(
            "edge identity fails on {} instances with consistency true; first {} on {} witness {}",
            consistent_fails.len(),
            first.claim_id,
            first.instance,
            first.witness
        ));
    }
    let bounds: Vec<ClaimReport> = reports
        .iter()
        .filter(|r| r.claim_id.starts_with("S4.bound-"))
        .cloned()
        .collect();
    no_failures(&mut out, &bounds, "bounds B1-B6");
    out
}

fn criterion_7() -> Outcome {
    let mut out = Outcome::new();
    let start = Instant::now();
    let reports = suite(16, "S5");
    let catalog = build_catalog(&CatalogSpec::default().with_max_order(16)).unwrap();
    for entry in &catalog {
        let full = entry.ring.full_set();
        let p = PairData::new(&entry.ring, &full, &full).unwrap();
        let w = isoclinism_between(&p, &p);
        out.expect(
            w.is_some_and(|w| w.phi_is_identity()),
            format!("{}: no identity witness on (R,R)", entry.ring.name()),
        );
    }
    let (a, b) = (families::nc4a(), families::nc4b());
    let (fa, fb) = (a.full_set(), b.full_set());
    let pa = PairData::new(&a, &fa, &fa).unwrap();
    let pb = PairData::new(&b, &fb, &fb).unwrap();
    out.expect(isoclinism_between(&pa, &pb).is_some(), "nc4a and nc4b are not isoclinic");
    out.expect(pa.side_condition_key() == pb.side_condition_key(), "side conditions differ");
    let ga = build_gamma(&a, &fa, &fa).unwrap();
    let gb = build_gamma(&b, &fb, &fb).unwrap();
    out.expect(graph_isomorphic(&ga, &gb).unwrap().is_some(), "graphs are not isomorphic");
    let audited: Vec<ClaimReport> = reports
        .iter()
        .filter(|r| matches!(r.claim_id, "S5.pair-theorem" | "S5.subring-theorem" | "S5.reflexive"))
        .cloned()
        .collect();
    no_failures(&mut out, &audited, "isoclinism");
    out.within(start.elapsed(), Duration::from_secs(120));
    out
}

fn criterion_8() -> Outcome {
    let mut out = Outcome::new();
    let dir = tempfile::tempdir().unwrap();
    let mut runs = Vec::new();
    for (i, threads) in ["1", "3"].iter().enumerate() {
        let path = dir.path().join(format!("run{i}.jsonl"));
        let status = Command::new(env!("CARGO_BIN_EXE_ncring"))
            .args(["verify", "--suite", "all", "--report"])
            .arg(&path)
            .env("NCRING_THREADS", threads)
            .output()
            .expect("spawn ncring");
        let code = status.status.code();
        out.expect(matches!(code, Some(0) | Some(3)), format!("verify exited with {code:?}"));
        runs.push(std::fs::read(&path).unwrap_or_default());
    }
    out.expect(!runs[0].is_empty(), "empty report");
    out.expect(runs[0] == runs[1], "reports differ between runs");
    out
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("nc4a golden instance", criterion_1),
        ("T2(Z2) golden instance", criterion_2),
        ("(2,2) tensor sweep and probability bounds", criterion_3),
        ("impossibility suite over the default catalog", criterion_4),
        ("diameter, girth and dominating-set suite", criterion_5),
        ("edge identities and bounds B1-B6", criterion_6),
        ("isoclinism suite over rings of order <= 16", criterion_7),
        ("byte-identical verify reports", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        if outcome.problems.is_empty() {
            println!("criterion {}: PASS ({secs:.2} s) {name}", i + 1);
        } else {
            failed += 1;
            println!("criterion {}: FAIL ({secs:.2} s) {name}", i + 1);
            for p in &outcome.problems {
                println!("    {p}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
