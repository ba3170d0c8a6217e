//! Command-line front end for the finite-group analyzer: group constructor
//! expressions, JSON catalog ingestion, and the batch scan pipeline.

pub mod catalog;
pub mod scan;
pub mod spec;

pub use catalog::{load_catalog, load_single, CatalogError, RecordKind};
pub use scan::{
    analyze_group, builtin_groups, format_class_sizes, parse_statement_set, render_json,
    render_text, run_checker, scan, CounterexampleEntry, GroupRecord, ScanConfig, ScanReport,
    WitnessSearchEntry, SCHEMA_VERSION,
};
pub use spec::{BuildSpecError, GroupSpec, SpecError};
