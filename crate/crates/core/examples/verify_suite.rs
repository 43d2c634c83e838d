//! Run part of the claim audit from library code and print the summary
//! table, then the first few failing reports as JSON lines.

use ncring::harness::{build_catalog, emit_report, run_suite, CatalogSpec, ClaimFilter, ReportFormat, SuiteConfig};
use ncring::verdict::Status;

fn main() -> ncring::Result<()> {
    let catalog = build_catalog(&CatalogSpec::default().with_max_order(16))?;
    println!("catalog: {} rings", catalog.len());
    let cfg = SuiteConfig {
        claims: ClaimFilter::parse("S2,S3")?,
        ..SuiteConfig::default()
    };
    let reports = run_suite(&catalog, &cfg);
    let mut out = std::io::stdout();
    emit_report(&reports, ReportFormat::SummaryTable, &mut out)?;
    let failing: Vec<_> = reports
        .iter()
        .filter(|r| r.status == Status::Fails && !r.informative)
        .take(3)
        .cloned()
        .collect();
    emit_report(&failing, ReportFormat::Jsonl, &mut out)?;
    Ok(())
}
