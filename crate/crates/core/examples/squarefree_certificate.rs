//! Exact square-free certificates, and a Farkas witness when none exists.
//!
//! ```text
//! cargo run --example squarefree_certificate
//! ```

use std::error::Error;

use matroid_kclass::exactpoly::{Ambient, LaurentPoly};
use matroid_kclass::schubert::{squarefree_certificate, SquarefreeOutcome};

fn main() -> Result<(), Box<dyn Error>> {
    let a = Ambient::new(0, 4);
    for s in ["t1^-1*t2^-1*t3*t4 - 1", "-1"] {
        let c = LaurentPoly::parse(a, s)?;
        match squarefree_certificate(&c)? {
            SquarefreeOutcome::Found(cert) => {
                assert_eq!(cert.expand(&c), c);
                println!("{s} = {cert}");
            }
            SquarefreeOutcome::Infeasible(farkas) => println!("{s}: infeasible, {farkas}"),
            SquarefreeOutcome::NotFound { candidates } => {
                println!("{s}: nothing among {candidates} candidates")
            }
        }
    }
    Ok(())
}
