//! Expanding a K-class in the Grothendieck basis and reading off the Chow
//! coefficients from it.
//!
//! ```text
//! cargo run --example grothendieck_expansion
//! ```

use std::error::Error;

use matroid_kclass::orbitclass::kclass;
use matroid_kclass::schubert::{chow_coefficients_from_k, expand_grothendieck};
use matroid_kclass::selftest::para34;

fn main() -> Result<(), Box<dyn Error>> {
    let m = para34();
    let k = kclass(&m)?;
    let exp = expand_grothendieck(&k)?;
    println!("{exp}");
    assert!(exp.residual.is_zero());
    for (label, c) in chow_coefficients_from_k(&exp, k.codim()) {
        println!("chow {}: {c}", label.render(exp.r));
    }
    Ok(())
}
