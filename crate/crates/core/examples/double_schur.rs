//! Double Schur polynomials and the Chow class expanded in them.
//!
//! ```text
//! cargo run --example double_schur
//! ```

use std::error::Error;

use matroid_kclass::exactpoly::Partition;
use matroid_kclass::matroid::Matroid;
use matroid_kclass::orbitclass::chow_class;
use matroid_kclass::schubert::{double_schur, expand_double_schur};

fn main() -> Result<(), Box<dyn Error>> {
    let lambda = Partition::new(&[1])?;
    println!("s_(1)(u|t) = {}", double_schur(&lambda, 2, 4)?);

    let c = chow_class(&Matroid::uniform(2, 4)?)?;
    println!("{}", expand_double_schur(&c)?);
    Ok(())
}
