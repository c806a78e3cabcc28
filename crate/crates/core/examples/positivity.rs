//! The four positivity checks on a small family of matroids.
//!
//! ```text
//! cargo run --example positivity
//! ```

use std::error::Error;

use matroid_kclass::matroid::Matroid;
use matroid_kclass::schubert::{check_chow2, check_pos1, check_pos2, check_sqfree};
use matroid_kclass::selftest::para34;

fn main() -> Result<(), Box<dyn Error>> {
    for m in [Matroid::uniform(2, 4)?, para34(), Matroid::uniform(2, 5)?] {
        println!("{m}");
        for report in [check_pos1(&m)?, check_pos2(&m)?, check_sqfree(&m)?, check_chow2(&m)?] {
            let status = if report.all_positive() { "holds" } else { "fails" };
            println!("  {}: {status}", report.statement);
        }
    }
    println!();
    println!("{}", check_pos1(&para34())?);
    Ok(())
}
