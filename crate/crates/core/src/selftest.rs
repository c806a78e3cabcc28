//! The worked examples as a runnable checklist.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::exactpoly::{demazure_t, Ambient, LaurentPoly, Partition, RatFunc};
use crate::matroid::{Matroid, Subset};
use crate::orbitclass::{chow_class, equiv_multiplicity, gv_character, kclass};
use crate::projclass::{cross_check, li_class, s_of_m};
use crate::schubert::{
    chow2_coefficients, check_pos1, check_pos2, expand_double_schur, expand_grothendieck,
    squarefree_certificate, Label, SquarefreeOutcome,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// The rank-2 matroid on 4 elements in which 3 and 4 are parallel.
pub fn para34() -> Matroid {
    Matroid::from_bases(4, 2, &[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]])
        .expect("valid bases")
}

/// `U_{2,3}` plus a loop.
pub fn u23_plus_loop() -> Matroid {
    Matroid::direct_sum(
        &Matroid::uniform(2, 3).expect("uniform"),
        &Matroid::uniform(0, 1).expect("uniform"),
    )
    .expect("direct sum")
}

fn poly(a: Ambient, s: &str) -> LaurentPoly {
    LaurentPoly::parse(a, s).expect("fixture parses")
}

fn part(parts: &[u32]) -> Label {
    Label::Partition(Partition::new(parts).expect("partition"))
}

fn one_line(s: &str) -> String {
    s.trim_end().replace('\n', "; ")
}

fn schur_list(m: &BTreeMap<Partition, BigInt>) -> String {
    let parts: Vec<String> = m.iter().rev().map(|(l, c)| format!("{}: {}", l, c)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn check<F>(name: &'static str, f: F) -> Outcome
where
    F: FnOnce() -> Result<(bool, String), String>,
{
    match f() {
        Ok((passed, detail)) => Outcome { name, passed, detail },
        Err(e) => Outcome {
            name,
            passed: false,
            detail: format!("error: {}", e),
        },
    }
}

fn kclass_is(m: &Matroid, want: &str) -> Result<(bool, String), String> {
    let k = kclass(m).map_err(|e| e.to_string())?;
    let want = poly(k.ambient(), want);
    Ok((k.poly() == &want, k.to_string()))
}

/// Run every worked example.
pub fn run_all() -> Vec<Outcome> {
    let a = Ambient::new(2, 4);
    let u24 = Matroid::uniform(2, 4).expect("uniform");
    vec![
        check("kclass of para34", || kclass_is(&para34(), "1 - u1*u2*t3*t4")),
        check("kclass of U(2,4)", || kclass_is(&u24, "1 - u1^2*u2^2*t1*t2*t3*t4")),
        check("kclass of U(2,3)+U(0,1)", || {
            kclass_is(&u23_plus_loop(), "(1 - u1*t4)*(1 - u2*t4)")
        }),
        check("multiplicity at {1,3}", || {
            let got = equiv_multiplicity(&para34(), Subset::from_elements(&[1, 3]))
                .map_err(|e| e.to_string())?;
            let want = RatFunc::geometric(a, 2, 3)
                .mul(&RatFunc::geometric(a, 4, 3))
                .mul(&RatFunc::geometric(a, 2, 1));
            Ok((got == want, got.to_string()))
        }),
        check("multiplicity at {1,2}", || {
            let got = equiv_multiplicity(&para34(), Subset::from_elements(&[1, 2]))
                .map_err(|e| e.to_string())?;
            let want = RatFunc::from_poly(poly(a, "1 - t1^-1*t2^-1*t3*t4"))
                .mul(&RatFunc::geometric(a, 3, 2))
                .mul(&RatFunc::geometric(a, 4, 2))
                .mul(&RatFunc::geometric(a, 3, 1))
                .mul(&RatFunc::geometric(a, 4, 1));
            Ok((got == want, got.to_string()))
        }),
        check("Demazure delta_3", || {
            let got = demazure_t(&poly(a, "(1 - u1*t4)*(1 - u2*t4)"), 3)
                .map_err(|e| e.to_string())?;
            Ok((got == poly(a, "1 - u1*u2*t3*t4"), got.to_string()))
        }),
        check("Grothendieck expansion of U(2,4)", || {
            let k = kclass(&u24).map_err(|e| e.to_string())?;
            let e = expand_grothendieck(&k).map_err(|e| e.to_string())?;
            let want: BTreeMap<Label, LaurentPoly> = [
                (part(&[2, 1]), poly(a, "t1^-1*t4")),
                (part(&[2]), poly(a, "-t1^-1*t4")),
                (part(&[1, 1]), poly(a, "-t1^-1*t4")),
                (part(&[1]), poly(a, "t1^-1*t4 + t1^-1*t2^-1*t3*t4")),
                (part(&[]), poly(a, "1 - t1^-1*t2^-1*t3*t4")),
            ]
            .into_iter()
            .collect();
            Ok((e.coefficients == want && e.residual.is_zero(), one_line(&e.to_string())))
        }),
        check("Chow class of U(2,4) and its double Schur expansion", || {
            let c = chow_class(&u24).map_err(|e| e.to_string())?;
            let e = expand_double_schur(&c).map_err(|e| e.to_string())?;
            let want: BTreeMap<Label, LaurentPoly> = [
                (part(&[1]), poly(a, "2")),
                (part(&[]), poly(a, "-(t1 + t2 - t3 - t4)")),
            ]
            .into_iter()
            .collect();
            let ok = c.poly() == &poly(a, "2*u1 + 2*u2 + t1 + t2 + t3 + t4") && e.coefficients == want;
            Ok((ok, format!("{} = {}", c, one_line(&e.to_string()))))
        }),
        check("S(M), Li class and cross-check for para34", || {
            let s = s_of_m(&para34()).map_err(|e| e.to_string())?;
            let want: BTreeSet<Vec<u32>> =
                [vec![1, 1, 0, 1], vec![1, 1, 1, 0]].into_iter().collect();
            let li = li_class(&para34()).map_err(|e| e.to_string())?;
            let cc = cross_check(&para34()).map_err(|e| e.to_string())?;
            let ok = s.points() == &want
                && li.poly() == &poly(Ambient::new(0, 4), "t3 + t4")
                && cc.equal;
            Ok((ok, format!("S(M) = {}, class {}", s, li)))
        }),
        check("pos1 and pos2 for U(2,4)", || {
            let p1 = check_pos1(&u24).map_err(|e| e.to_string())?;
            let p2 = check_pos2(&u24).map_err(|e| e.to_string())?;
            Ok((
                p1.all_positive() && p2.all_positive(),
                format!("{} + {} coefficients", p1.entries.len(), p2.entries.len()),
            ))
        }),
        check("square-free certificate for t3*t4/(t1*t2)", || {
            let c = poly(a, "t1^-1*t2^-1*t3*t4");
            match squarefree_certificate(&c).map_err(|e| e.to_string())? {
                SquarefreeOutcome::Found(cert) => Ok((cert.expand(&c) == c, cert.to_string())),
                other => Ok((false, format!("{:?}", other))),
            }
        }),
        check("Schur coefficients of C(U(2,4)) at t = 0", || {
            let got = chow2_coefficients(&u24).map_err(|e| e.to_string())?;
            let want: BTreeMap<Partition, BigInt> =
                [(Partition::new(&[1]).expect("partition"), BigInt::from(2))]
                    .into_iter()
                    .collect();
            Ok((got == want, schur_list(&got)))
        }),
        check("character of U(2,4)", || {
            let got = gv_character(&u24).map_err(|e| e.to_string())?;
            let want: BTreeMap<Partition, BigInt> = [(&[4u32][..], 1), (&[3, 1], 3), (&[2, 2], 1)]
                .into_iter()
                .map(|(p, c)| (Partition::new(p).expect("partition"), BigInt::from(c)))
                .collect();
            Ok((got.multiplicities == want, schur_list(&got.multiplicities)))
        }),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn every_worked_example_passes() {
        for o in super::run_all() {
            assert!(o.passed, "{}: {}", o.name, o.detail);
        }
    }
}
