//! Serialize a reduction certificate to JSON, read it back and re-check it
//! independently; then show a tampered copy being rejected.
//!
//! ```text
//! cargo run --example verify_certificate
//! ```

use cxkit::reduction::{reduce_word, verify_trace, ReductionReport, ReductionResult};
use cxkit::twist::registry_twist;
use cxkit::Word;

fn check(tw: &cxkit::Twist, report: &ReductionReport) -> String {
    match ReductionResult::from_report(tw, report) {
        Err(v) => format!("rejected while decoding: {v}"),
        Ok(r) => match verify_trace(tw, &report.input, &r) {
            Ok(()) => "accepted".to_string(),
            Err(v) => format!("rejected: {v}"),
        },
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tw = registry_twist("B2")?;
    let w: Word = "1 2 1 2 1 2 1".parse()?;
    let result = reduce_word(&tw, &w)?;
    let json = serde_json::to_string_pretty(&result.to_report(&tw))?;
    println!("{json}");

    let report: ReductionReport = serde_json::from_str(&json)?;
    println!("round trip: {}", check(&tw, &report));

    let mut forged = report.clone();
    forged.final_word = "1 2 1 2 1".parse()?;
    println!("forged final word: {}", check(&tw, &forged));

    let mut truncated = report;
    truncated.trace.pop();
    println!("truncated trace: {}", check(&tw, &truncated));
    Ok(())
}
