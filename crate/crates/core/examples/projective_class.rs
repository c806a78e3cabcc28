//! Class in a product of projective spaces from lattice points, checked
//! against the K-class.
//!
//! ```text
//! cargo run --example projective_class
//! ```

use std::error::Error;

use matroid_kclass::matroid::Matroid;
use matroid_kclass::projclass::{cross_check, s_of_m, ProjError};
use matroid_kclass::selftest::u23_plus_loop;

fn main() -> Result<(), Box<dyn Error>> {
    let u24 = Matroid::uniform(2, 4)?;
    println!("S(U24) = {}", s_of_m(&u24)?);
    let check = cross_check(&u24)?;
    println!("lattice points: {}", check.li);
    println!("via K-class:    {}", check.via_k);
    assert!(check.equal);

    let u12 = Matroid::uniform(1, 2)?;
    for m in [u23_plus_loop(), Matroid::direct_sum(&u12, &u12)?] {
        match cross_check(&m) {
            Err(ProjError::Loops(l)) => println!("{m}: loops at {l:?}, skipped"),
            Err(ProjError::Disconnected(e)) => println!("{m}: {e} components, skipped"),
            other => println!("unexpected: {other:?}"),
        }
    }
    Ok(())
}
