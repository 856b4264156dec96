//! Drive the scenario runner programmatically: run a bundled scenario,
//! inspect the report, and render it as JSON.
//!
//! Run with: cargo run -p gwa --example run_scenario

use gwa::scenario::{bundled_scenarios, run_str, CheckStatus, Overrides};

fn main() -> gwa::Result<()> {
    let (name, content) = bundled_scenarios()
        .into_iter()
        .find(|(n, _)| *n == "weyl_g222.scenario")
        .expect("bundled scenario exists");

    let overrides = Overrides {
        seed: Some(2024),
        ..Default::default()
    };
    let report = run_str(name, content, &overrides)?;
    print!("{}", report.render_text());

    let passed = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Pass)
        .count();
    println!("\n{passed}/{} checks passed", report.checks.len());
    println!("exit code (no escalation): {}", report.exit_code(false));

    println!("\nJSON rendering:\n{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
