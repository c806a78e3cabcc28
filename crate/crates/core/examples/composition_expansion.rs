//! Expanding a K-class over compositions by peeling leading t-multidegrees.
//!
//! ```text
//! cargo run --example composition_expansion
//! ```

use std::error::Error;

use matroid_kclass::matroid::Matroid;
use matroid_kclass::orbitclass::kclass;
use matroid_kclass::schubert::{expand_composition, SchubertError};
use matroid_kclass::selftest::u23_plus_loop;

fn main() -> Result<(), Box<dyn Error>> {
    let k = kclass(&Matroid::uniform(2, 4)?)?;
    let exp = expand_composition(&k)?;
    println!("{} coefficients", exp.coefficients.len());
    println!("{exp}");

    match expand_composition(&kclass(&u23_plus_loop())?) {
        Err(SchubertError::HasLoops(loops)) => println!("refused, loops at {loops:?}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
