//! The bundled verification suite as a test target: one pass/fail line
//! per criterion, failing the test if any criterion fails.

use gwweyl::acceptance;

#[test]
fn acceptance_criteria() {
    let results = acceptance::run_all(0);
    let mut failures = Vec::new();
    for c in &results {
        let status = if c.pass { "PASS" } else { "FAIL" };
        println!("[{status}] {} ({} ms) {}", c.name, c.millis, c.detail);
        if !c.pass {
            failures.push(format!("{}: {}", c.name, c.detail));
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
