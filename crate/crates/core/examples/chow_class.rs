//! Chow class of an orbit closure, and why the direct permutation sum is
//! only trusted for connected matroids.
//!
//! ```text
//! cargo run --example chow_class
//! ```

use std::error::Error;

use matroid_kclass::matroid::Matroid;
use matroid_kclass::orbitclass::{chow_class, chow_sum, kclass, k_to_chow};
use matroid_kclass::selftest::{para34, u23_plus_loop};

fn main() -> Result<(), Box<dyn Error>> {
    for (name, m) in [
        ("U24", Matroid::uniform(2, 4)?),
        ("para34", para34()),
        ("U23 + loop", u23_plus_loop()),
    ] {
        let c = chow_class(&m)?;
        let from_k = k_to_chow(&kclass(&m)?)?;
        assert_eq!(c, from_k);
        println!("{name}: [{}] in degree {}", c.poly(), c.degree());
        println!("  direct sum: {}", chow_sum(&m)?);
    }
    Ok(())
}
