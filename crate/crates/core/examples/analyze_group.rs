//! Load a group file, build the coset action on the stabilizer of a point,
//! and print the text report.

use std::sync::Arc;

use hgx::gp::CosetAction;
use hgx::group::DEFAULT_CLOSURE_CAP;
use hgx::groupfile::GroupFile;
use hgx::report::{analyze_report, render_text, ReportOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/s3xs3.group").to_string());
    let file = GroupFile::parse(&std::fs::read_to_string(&path)?)?;
    let g = file.group(DEFAULT_CLOSURE_CAP)?;
    let action = Arc::new(CosetAction::from_transitive(&g, 0)?);
    let report = analyze_report(&action, None, ReportOptions::default())?;
    print!("{}", render_text(&report));
    Ok(())
}
