//! Run the built-in worked examples.
//!
//! ```text
//! cargo run --example self_test
//! ```

use matroid_kclass::selftest::run_all;

fn main() {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{} {}: {}", if o.passed { "ok  " } else { "FAIL" }, o.name, o.detail);
    }
    if outcomes.iter().any(|o| !o.passed) {
        std::process::exit(1);
    }
}
