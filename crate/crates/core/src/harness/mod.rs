//! Claim audit over a catalog of small rings.
//!
//! [`catalog::build_catalog`] assembles the rings, [`claims::run_suite`]
//! evaluates every selected claim on every instance, and [`report`] renders
//! the results as JSON lines or a summary table.

pub mod catalog;
pub mod claims;
pub mod report;

pub use catalog::{build_catalog, CatalogEntry, CatalogSpec, Provenance};
pub use claims::{claim_info, run_suite, ClaimFilter, ClaimInfo, ClaimReport, Instance, SuiteConfig, CLAIMS};
pub use report::{emit_report, summarize, ClaimSummary, ReportFormat};
