//! Characters of the multidegree (1,..,1) part of the coordinate ring.
//!
//! ```text
//! cargo run --example characters
//! ```

use std::error::Error;

use matroid_kclass::matroid::Matroid;
use matroid_kclass::orbitclass::{gv_character, sn_character};

fn main() -> Result<(), Box<dyn Error>> {
    for (r, n) in [(2, 2), (2, 3), (2, 4)] {
        let m = Matroid::uniform(r, n)?;
        let gl = gv_character(&m)?;
        let sn = sn_character(&m)?;
        println!("U{r}{n}");
        for (lambda, c) in &gl.multiplicities {
            println!("  GL: {lambda} x {c}");
        }
        for (lambda, c) in &sn.multiplicities {
            println!("  S_n: {lambda} x {c}");
        }
        if let Some(w) = gl.warning.or(sn.warning) {
            println!("  note: {w}");
        }
    }
    Ok(())
}
