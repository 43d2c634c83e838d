//! The `ncring` command line. [`dispatch`] parses arguments, runs exactly one
//! subcommand and returns the process exit code:
//! 0 on success, 1 on a domain error, 2 on a usage error, and 3 from
//! `verify` when a non-informative claim fails.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::elemset::ElementSet;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{build_gamma, classify_shape, metrics};
use crate::harness::{build_catalog, emit_report, run_suite, summarize, CatalogEntry, CatalogSpec, ClaimFilter, Provenance, ReportFormat, SuiteConfig};
use crate::graph_iso::graph_isomorphic;
use crate::isoclinism::{isoclinism_between, PairData, ISOCLINISM_ORDER_CAP};
use crate::probability::{consistency_predicate, edge_identity, format_rational, pr_pair, pr_ring};
use crate::ring::RingPresentation;
use crate::ringfile::read_ring_file;
use crate::subring::{enumerate_subrings, subring_closure_bits};

pub const THREADS_ENV: &str = "NCRING_THREADS";

#[derive(Debug, Parser)]
#[command(name = "ncring", version, about = "Generalized non-commuting graphs of finite rings")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ring inspection.
    Ring {
        #[command(subcommand)]
        action: RingAction,
    },
    /// List the subrings of a ring with their selector indices.
    Subrings {
        /// Ring file, or `builtin:NAME` (nc4a, nc4b, Z6, T2(Z2), ...).
        ring: String,
    },
    /// Build Γ(S,K) and optionally export it as DOT.
    Graph(GraphArgs),
    /// Exact commuting probabilities.
    Pr(PrArgs),
    /// Run the claim audit over the ring catalog.
    Verify(VerifyArgs),
    /// Decide Z-isoclinism between two subring pairs.
    Isoclinic(IsoclinicArgs),
}

#[derive(Debug, Subcommand)]
pub enum RingAction {
    /// Order, predicates and center of a ring.
    Info { ring: String },
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub ring: String,
    /// Selector for S: `all`, `#k` or `gen:v1;v2;...`.
    #[arg(long, default_value = "all")]
    pub s: String,
    #[arg(long, default_value = "all")]
    pub k: String,
    /// Write the graph in DOT format to this path (`-` for stdout).
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Print diameter, girth, connectivity and shape flags.
    #[arg(long)]
    pub metrics: bool,
}

#[derive(Debug, Args)]
pub struct PrArgs {
    #[arg(long)]
    pub ring: String,
    #[arg(long, requires = "k")]
    pub s: Option<String>,
    #[arg(long, requires = "s")]
    pub k: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `all`, a section (`S2` to `S5`) or claim ids, comma separated.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub max_order: u64,
    /// Largest |K| for isoclinism searches.
    #[arg(long, default_value_t = ISOCLINISM_ORDER_CAP as u64, value_parser = clap::value_parser!(u64).range(1..=ISOCLINISM_ORDER_CAP as u64))]
    pub isoclinism_cap: u64,
    /// Write JSON lines to this path.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Format of the report written to stdout when no `--report` is given.
    #[arg(long, default_value = "summary-table")]
    pub format: ReportFormat,
    /// Count fails of informative claims toward the exit status.
    #[arg(long)]
    pub include_informative: bool,
    /// Add rings from files to the catalog.
    #[arg(long = "ring")]
    pub rings: Vec<String>,
    /// Record per-report wall time (output is then not reproducible).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct IsoclinicArgs {
    /// `file:S:K`, e.g. `nc4a.ring:all:all` or `builtin:T2(Z2):#3:all`.
    #[arg(long)]
    pub pair1: String,
    #[arg(long)]
    pub pair2: String,
}

/// Loads a ring from a file path or `builtin:NAME`.
pub fn load_ring(source: &str) -> Result<RingPresentation> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin_ring(name).ok_or_else(|| Error::Selector(format!("unknown builtin ring {name:?}")));
    }
    let path = Path::new(source);
    if !path.is_file() {
        return Err(Error::Io(format!("{source}: no such file")));
    }
    read_ring_file(path)
}

fn builtin_ring(name: &str) -> Option<RingPresentation> {
    let prime = |inner: &str| inner.strip_prefix('Z')?.parse::<u32>().ok().filter(|p| [2, 3, 5, 7].contains(p));
    let family = |prefix: &str| name.strip_prefix(prefix)?.strip_suffix(')').and_then(prime);
    match name {
        "nc4a" => return Some(families::nc4a()),
        "nc4b" => return Some(families::nc4b()),
        _ => {}
    }
    if let Some(p) = family("T2(") {
        return Some(families::t2(p));
    }
    if let Some(p) = family("T3(") {
        return Some(families::t3(p));
    }
    if let Some(p) = family("N3(") {
        return Some(families::n3(p));
    }
    if let Some(p) = family("M2(") {
        return Some(families::m2(p));
    }
    let n = name.strip_prefix('Z')?.parse::<u32>().ok()?;
    (2..=256).contains(&n).then(|| families::zn(n))
}

/// Resolves a subring selector against a ring.
pub fn select(ring: &RingPresentation, selector: &str) -> Result<ElementSet> {
    if selector == "all" {
        return Ok(ring.full_set());
    }
    if let Some(k) = selector.strip_prefix('#') {
        let idx: usize = k.parse().map_err(|_| Error::Selector(selector.to_string()))?;
        let subs = enumerate_subrings(ring)?;
        return subs.get(idx).cloned().ok_or_else(|| {
            Error::Selector(format!("{selector}: the ring has {} subrings (#0..#{})", subs.len(), subs.len() - 1))
        });
    }
    if let Some(list) = selector.strip_prefix("gen:") {
        let mut seeds = Vec::new();
        for v in list.split(';').map(str::trim).filter(|v| !v.is_empty()) {
            let coeffs = v
                .split(',')
                .map(|c| c.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<u32>, _>>()
                .map_err(|_| Error::Selector(format!("{selector}: bad coefficient vector {v:?}")))?;
            seeds.push(ring.element(&coeffs)?.index());
        }
        let bits = subring_closure_bits(ring, seeds);
        let members: Vec<usize> = bits.to_vec();
        return ring.as_subring(&ring.subset(&members)?).ok_or_else(|| Error::Selector(selector.to_string()));
    }
    Err(Error::Selector(selector.to_string()))
}

/// Splits `file:S:K` from the right; a `gen:` selector keeps its colon.
pub fn split_pair_spec(spec: &str) -> Result<(String, String, String)> {
    let mut parts: Vec<&str> = spec.split(':').collect();
    let pop_selector = |parts: &mut Vec<&str>| -> Option<String> {
        let last = parts.pop()?;
        if parts.last() == Some(&"gen") {
            parts.pop();
            Some(format!("gen:{last}"))
        } else {
            Some(last.to_string())
        }
    };
    let k = pop_selector(&mut parts);
    let s = pop_selector(&mut parts);
    match (s, k) {
        (Some(s), Some(k)) if !parts.is_empty() => Ok((parts.join(":"), s, k)),
        _ => Err(Error::Selector(format!("{spec}: expected file:S:K"))),
    }
}

fn describe_set(ring: &RingPresentation, set: &ElementSet) -> String {
    let items: Vec<String> = set.iter().map(|i| ring.format_element(i)).collect();
    format!("{{{}}}", items.join(", "))
}

fn ring_info(out: &mut dyn Write, source: &str) -> Result<i32> {
    let ring = load_ring(source)?;
    let p = ring.predicates();
    let center = ring.center();
    writeln!(out, "name: {}", ring.name())?;
    writeln!(out, "order: {}", ring.order())?;
    writeln!(out, "invariant factors: {:?}", ring.invariant_factors())?;
    writeln!(out, "commutative: {}", if p.is_commutative { "yes" } else { "no (noncommutative)" })?;
    match ring.unity_of(&ring.full_set()) {
        Some(u) => writeln!(out, "unity: {}", ring.format_element(u))?,
        None => writeln!(out, "unity: none")?,
    }
    writeln!(out, "center size: {}", center.len())?;
    writeln!(out, "center: {}", describe_set(&ring, &center))?;
    writeln!(out, "smallest prime divisor: {}", p.smallest_prime_divisor)?;
    writeln!(out, "Pr(R): {}", format_rational(&pr_ring(&ring)))?;
    Ok(0)
}

fn subrings(out: &mut dyn Write, source: &str) -> Result<i32> {
    let ring = load_ring(source)?;
    let subs = enumerate_subrings(&ring)?;
    writeln!(out, "{} subrings of {}", subs.len(), ring.name())?;
    for (i, s) in subs.iter().enumerate() {
        let tag = if ring.is_commutative_set(s) { "commutative" } else { "noncommutative" };
        writeln!(out, "#{i}\t{}\t{tag}\t{}", s.len(), describe_set(&ring, s))?;
    }
    Ok(0)
}

fn graph(out: &mut dyn Write, args: &GraphArgs) -> Result<i32> {
    let ring = load_ring(&args.ring)?;
    let s = select(&ring, &args.s)?;
    let k = select(&ring, &args.k)?;
    let g = build_gamma(&ring, &s, &k)?;
    if let Some(path) = &args.dot {
        if path.as_os_str() == "-" {
            out.write_all(g.to_dot(&ring).as_bytes())?;
            return Ok(0);
        }
        std::fs::write(path, g.to_dot(&ring)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    writeln!(out, "vertices: {}", g.vertex_count())?;
    writeln!(out, "edges: {}", g.edge_count())?;
    if args.metrics {
        let m = metrics(&g);
        let shape = classify_shape(&g);
        let show = |x: Option<usize>| x.map_or("infinite".to_string(), |v| v.to_string());
        writeln!(out, "diameter: {}", show(m.diameter))?;
        writeln!(out, "girth: {}", show(m.girth))?;
        writeln!(out, "connected: {}", m.connected)?;
        writeln!(out, "components: {}", m.component_count)?;
        writeln!(
            out,
            "regular: {}",
            shape.regular_degree.map_or("no".to_string(), |d| d.to_string())
        )?;
        writeln!(out, "star: {}", shape.is_star)?;
        writeln!(out, "complete: {}", shape.is_complete)?;
        writeln!(out, "complete bipartite: {}", shape.is_complete_bipartite)?;
    }
    Ok(0)
}

fn pr(out: &mut dyn Write, args: &PrArgs) -> Result<i32> {
    let ring = load_ring(&args.ring)?;
    if let (Some(s), Some(k)) = (&args.s, &args.k) {
        let s = select(&ring, s)?;
        let k = select(&ring, k)?;
        writeln!(out, "Pr(S,K): {}", format_rational(&pr_pair(&ring, &s, &k)?))?;
        writeln!(out, "Pr(S): {}", format_rational(&pr_pair(&ring, &s, &s)?))?;
        let c = consistency_predicate(&ring, &s, &k)?;
        writeln!(out, "consistency: {}", c.consistent)?;
        let v = edge_identity(&ring, &s, &k)?;
        writeln!(
            out,
            "{}: formula {} measured {} ({})",
            v.claim_id,
            format_rational(&v.formula),
            format_rational(&v.measured),
            v.status
        )?;
        return Ok(0);
    }
    let subs = enumerate_subrings(&ring)?;
    writeln!(out, "Pr(R): {}", format_rational(&pr_ring(&ring)))?;
    writeln!(out, "subring\tsize\tPr(S)\tPr(S,R)")?;
    let full = ring.full_set();
    for (i, s) in subs.iter().enumerate() {
        writeln!(
            out,
            "#{i}\t{}\t{}\t{}",
            s.len(),
            format_rational(&pr_pair(&ring, s, s)?),
            format_rational(&pr_pair(&ring, s, &full)?)
        )?;
    }
    Ok(0)
}

fn create_report_file(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn verify(out: &mut dyn Write, args: &VerifyArgs) -> Result<i32> {
    let claims = ClaimFilter::parse(&args.suite)?;
    let mut extra = Vec::new();
    for source in &args.rings {
        extra.push(CatalogEntry {
            ring: load_ring(source)?,
            provenance: Provenance::File,
            family: format!("file {source}"),
        });
    }
    let mut report_file = args.report.as_deref().map(create_report_file).transpose()?;
    let spec = CatalogSpec {
        extra,
        ..CatalogSpec::default().with_max_order(args.max_order as usize)
    };
    let catalog = build_catalog(&spec)?;
    let cfg = SuiteConfig {
        claims,
        isoclinism_cap: args.isoclinism_cap as usize,
        timings: args.timings,
        ..SuiteConfig::default()
    };
    let reports = run_suite(&catalog, &cfg);
    match report_file.as_mut() {
        Some(file) => {
            emit_report(&reports, ReportFormat::Jsonl, file)?;
            file.flush()?;
            emit_report(&reports, ReportFormat::SummaryTable, out)?;
        }
        None => emit_report(&reports, args.format, out)?,
    }
    let failing = summarize(&reports).values().any(|c| {
        let fails = if args.include_informative { c.fails } else { c.blocking_fails() };
        fails + c.evaluation_errors > 0
    });
    Ok(if failing { 3 } else { 0 })
}

fn isoclinic(out: &mut dyn Write, args: &IsoclinicArgs) -> Result<i32> {
    let (f1, s1, k1) = split_pair_spec(&args.pair1)?;
    let (f2, s2, k2) = split_pair_spec(&args.pair2)?;
    let r1 = load_ring(&f1)?;
    let r2 = load_ring(&f2)?;
    let (s1, k1) = (select(&r1, &s1)?, select(&r1, &k1)?);
    let (s2, k2) = (select(&r2, &s2)?, select(&r2, &k2)?);
    let a = PairData::new(&r1, &s1, &k1)?;
    let b = PairData::new(&r2, &s2, &k2)?;
    let witness = isoclinism_between(&a, &b);
    let side = a.side_condition_key() == b.side_condition_key();
    writeln!(out, "isoclinic: {}", if witness.is_some() { "yes" } else { "no" })?;
    writeln!(
        out,
        "side conditions: |Z(K1) ∩ S1| = {}, |Z(K2) ∩ S2| = {}, |Z(K1)| = {}, |Z(K2)| = {} ({})",
        a.side_condition_key().0,
        b.side_condition_key().0,
        a.side_condition_key().1,
        b.side_condition_key().1,
        if side { "equal" } else { "different" }
    )?;
    let g1 = build_gamma(&r1, &s1, &k1)?;
    let g2 = build_gamma(&r2, &s2, &k2)?;
    writeln!(
        out,
        "graphs isomorphic: {}",
        if graph_isomorphic(&g1, &g2)?.is_some() { "yes" } else { "no" }
    )?;
    if let Some(w) = witness {
        let show = |pairs: &[(usize, usize)], from: &RingPresentation, to: &RingPresentation| {
            pairs
                .iter()
                .map(|&(x, y)| format!("{} -> {}", from.format_element(x), to.format_element(y)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(out, "phi: {}", show(&w.phi, &r1, &r2))?;
        writeln!(out, "psi: {}", show(&w.psi, &r1, &r2))?;
        if let Some(alpha) = &w.alpha {
            writeln!(out, "alpha: {}", show(alpha, &r1, &r2))?;
        }
    }
    Ok(0)
}

fn run(command: &Command, out: &mut (dyn Write + Send)) -> Result<i32> {
    match command {
        Command::Ring {
            action: RingAction::Info { ring },
        } => ring_info(out, ring),
        Command::Subrings { ring } => subrings(out, ring),
        Command::Graph(args) => graph(out, args),
        Command::Pr(args) => pr(out, args),
        Command::Verify(args) => verify(out, args),
        Command::Isoclinic(args) => isoclinic(out, args),
    }
}

fn thread_count() -> std::result::Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("{THREADS_ENV} must be a positive integer, found {v:?}")),
        },
    }
}

/// Runs one invocation, writing normal output to `out` and diagnostics to `err`.
pub fn dispatch_with<I, T>(argv: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let threads = match thread_count() {
        Ok(t) => t,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return 2;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    match pool.install(|| run(&config.command, out)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs one invocation against the process's standard streams.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = BufWriter::new(ClosedPipeOk(io::stdout()));
    let code = dispatch_with(argv, &mut out, &mut io::stderr());
    let _ = out.flush();
    code
}

/// Stdout that treats a closed reader (`ncring ... | head`) as end of output.
struct ClosedPipeOk<W>(W);

impl<W: Write> Write for ClosedPipeOk<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        match self.0.write(buf) {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(buf.len()),
            other => other,
        }
    }

    fn flush(&mut self) -> io::Result<()> {
        match self.0.flush() {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            other => other,
        }
    }
}
