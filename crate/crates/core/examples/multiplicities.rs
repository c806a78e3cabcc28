//! Equivariant multiplicities at the torus-fixed points of an orbit closure.
//!
//! ```text
//! cargo run --example multiplicities
//! ```

use std::error::Error;

use matroid_kclass::matroid::Matroid;
use matroid_kclass::orbitclass::{equiv_multiplicities, equiv_multiplicity_by_permutations};

fn main() -> Result<(), Box<dyn Error>> {
    let m = Matroid::schubert(2, 4, &[2, 4])?;
    println!("{m}");
    for (b, mult) in equiv_multiplicities(&m)? {
        let slow = equiv_multiplicity_by_permutations(&m, b)?;
        assert!(mult.cross_equal(&slow));
        println!("  {b}: {mult}");
    }
    Ok(())
}
