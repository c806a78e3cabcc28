//! K-class of a matroid's torus orbit closure, computed two ways.
//!
//! ```text
//! cargo run --example kclass
//! ```

use std::error::Error;

use matroid_kclass::matroid::Matroid;
use matroid_kclass::orbitclass::{kclass, kclass_by_permutations, specialize, Specialization};

fn main() -> Result<(), Box<dyn Error>> {
    let u24 = Matroid::uniform(2, 4)?;
    let k = kclass(&u24)?;
    println!("{u24}");
    println!("K(U24) = {k}");
    println!("codim {}", k.codim());

    // the literal sum over all 4! permutations agrees with the fast kernel
    let slow = kclass_by_permutations(&u24)?;
    assert_eq!(slow.poly(), k.poly());

    println!("u = 1: {}", specialize(&k, Specialization::AllUOne));
    println!("t = 1: {}", specialize(&k, Specialization::AllTOne));
    Ok(())
}
