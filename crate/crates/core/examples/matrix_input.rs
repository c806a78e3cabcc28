//! A matroid from a rational matrix, and the same computation through the
//! command-line front end.
//!
//! ```text
//! cargo run --example matrix_input
//! ```

use std::error::Error;

use matroid_kclass::cli;
use matroid_kclass::exactpoly::ratio;
use matroid_kclass::matroid::Matroid;
use matroid_kclass::orbitclass::kclass;

fn main() -> Result<(), Box<dyn Error>> {
    let rows = vec![
        vec![ratio(1, 1), ratio(0, 1), ratio(1, 1), ratio(2, 1)],
        vec![ratio(0, 1), ratio(1, 1), ratio(1, 2), ratio(1, 1)],
    ];
    let m = Matroid::from_matrix(&rows, None)?;
    println!("{m}");
    println!("K = {}", kclass(&m)?);

    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/u24.json");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        ["matroid-kclass", "--format", "json", "kclass", fixture],
        &mut out,
        &mut err,
    );
    println!("exit {code}");
    print!("{}", String::from_utf8(out)?);
    Ok(())
}
