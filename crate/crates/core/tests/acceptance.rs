//! Runs every acceptance criterion and prints one line per criterion.
//! Set `HURWITZ_SLOW=1` to include the M23 census.

use hurwitz_core::verify::{run_all, VerifyOptions};

#[test]
fn acceptance() {
    let slow = std::env::var("HURWITZ_SLOW").is_ok_and(|v| v != "0" && !v.is_empty());
    let outcomes = run_all(&VerifyOptions {
        slow,
        ..VerifyOptions::default()
    });
    for o in &outcomes {
        println!("{o}");
    }
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
