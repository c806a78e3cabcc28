//! Building the Grothendieck basis with Demazure operators.
//!
//! ```text
//! cargo run --example demazure
//! ```

use std::error::Error;

use matroid_kclass::exactpoly::{demazure_t, Ambient, LaurentPoly};
use matroid_kclass::schubert::grothendieck_basis;

fn main() -> Result<(), Box<dyn Error>> {
    let a = Ambient::new(0, 3);
    let f = LaurentPoly::parse(a, "t1^2")?;
    let once = demazure_t(&f, 1)?;
    println!("pi_1(t1^2) = {once}");
    // the operator is idempotent
    assert_eq!(demazure_t(&once, 1)?, once);

    let basis = grothendieck_basis(2, 4)?;
    for (lambda, g) in basis.polys() {
        println!("G_{} = {g}", lambda.label(2));
    }
    Ok(())
}
