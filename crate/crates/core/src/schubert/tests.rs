use super::*;
use num_traits::Signed;
use crate::matroid::Matroid;
use crate::orbitclass::{chow_class, kclass};

fn p(a: Ambient, s: &str) -> LaurentPoly {
    LaurentPoly::parse(a, s).unwrap()
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts).unwrap()
}

fn lp(parts: &[u32]) -> Label {
    Label::Partition(part(parts))
}

const P1: &str = "(1 - u1*t1)*(1 - u2*t1)";

#[test]
fn basis_r2_n4() {
    let a = Ambient::new(2, 4);
    let b = grothendieck_basis(2, 4).unwrap();
    assert_eq!(b.polys().len(), 6);
    assert_eq!(b.get(&part(&[2, 2])).unwrap(), &p(a, &format!("{P1}*(1 - u1*t2)*(1 - u2*t2)")));
    assert_eq!(b.get(&part(&[2, 1])).unwrap(), &p(a, &format!("{P1}*(1 - u1*u2*t2*t3)")));
    assert_eq!(b.get(&part(&[1, 1])).unwrap(), &p(a, P1));
    assert_eq!(b.get(&part(&[1])).unwrap(), &p(a, "1 - u1*u2*t1*t2"));
    assert_eq!(b.get(&part(&[])).unwrap(), &LaurentPoly::one(a));
}

#[test]
fn basis_matches_schubert_matroid_classes() {
    let b = grothendieck_basis(2, 4).unwrap();
    let m20 = Matroid::from_bases(4, 2, &[vec![1, 4], vec![2, 4], vec![3, 4]]).unwrap();
    let m21 = Matroid::from_bases(4, 2, &[vec![2, 4], vec![3, 4]]).unwrap();
    assert_eq!(b.get(&part(&[2])).unwrap(), kclass(&m20).unwrap().poly());
    assert_eq!(b.get(&part(&[2, 1])).unwrap(), kclass(&m21).unwrap().poly());
}

#[test]
fn basis_dimension_guards() {
    assert!(grothendieck_basis(0, 3).is_err());
    assert!(grothendieck_basis(4, 3).is_err());
    let b = grothendieck_basis(3, 3).unwrap();
    assert_eq!(b.polys().len(), 1);
    for (r, n) in [(1, 5), (2, 5), (3, 6)] {
        grothendieck_basis(r, n).unwrap();
    }
}

#[test]
fn u24_grothendieck_expansion() {
    let a = Ambient::new(2, 4);
    let k = kclass(&Matroid::uniform(2, 4).unwrap()).unwrap();
    let e = expand_grothendieck(&k).unwrap();
    assert!(e.residual.is_zero());
    assert_eq!(e.coefficients.len(), 5);
    assert_eq!(e.coefficient(&lp(&[2, 1])), p(a, "t1^-1*t4"));
    assert_eq!(e.coefficient(&lp(&[2])), p(a, "-t1^-1*t4"));
    assert_eq!(e.coefficient(&lp(&[1, 1])), p(a, "-t1^-1*t4"));
    assert_eq!(e.coefficient(&lp(&[1])), p(a, "t1^-1*t4 + t1^-1*t2^-1*t3*t4"));
    assert_eq!(e.coefficient(&lp(&[])), p(a, "1 - t1^-1*t2^-1*t3*t4"));
    assert_eq!(e.rows()[0].0, "(2,1)");
}

#[test]
fn basis_element_expands_to_itself() {
    let b = grothendieck_basis(2, 4).unwrap();
    let e = expand_in_grothendieck(b.get(&part(&[2, 1])).unwrap()).unwrap();
    assert_eq!(e.coefficients.len(), 1);
    assert!(e.coefficient(&lp(&[2, 1])).is_one());
}

#[test]
fn double_schur_values() {
    let a = Ambient::new(2, 4);
    assert_eq!(double_schur(&part(&[1]), 2, 4).unwrap(), p(a, "u1 + u2 + t1 + t2"));
    assert!(double_schur(&part(&[]), 2, 4).unwrap().is_one());
    for (lambda, s) in double_schur_basis(2, 4).unwrap() {
        let at0 = s.specialize_block(VarKind::T, &BigRational::zero()).unwrap();
        assert_eq!(at0, schur_u(a, &lambda));
    }
}

#[test]
fn u24_double_schur_expansion() {
    let a = Ambient::new(2, 4);
    let c = chow_class(&Matroid::uniform(2, 4).unwrap()).unwrap();
    let e = expand_double_schur(&c).unwrap();
    assert_eq!(e.coefficients.len(), 2);
    assert_eq!(e.coefficient(&lp(&[1])), p(a, "2"));
    assert_eq!(e.coefficient(&lp(&[])), p(a, "-(t1 + t2 - t3 - t4)"));
    let k = kclass(&Matroid::uniform(2, 4).unwrap()).unwrap();
    let pushed = chow_coefficients_from_k(&expand_grothendieck(&k).unwrap(), k.codim());
    assert_eq!(pushed, e.coefficients);
}

#[test]
fn loop_example_expansions() {
    let m = Matroid::direct_sum(
        &Matroid::uniform(2, 3).unwrap(),
        &Matroid::uniform(0, 1).unwrap(),
    )
    .unwrap();
    let e = expand_grothendieck(&kclass(&m).unwrap()).unwrap();
    assert!(e.residual.is_zero());
    let c = chow_class(&m).unwrap();
    let e = expand_double_schur(&c).unwrap();
    assert_eq!(e.coefficient(&lp(&[1, 1])).as_constant(), Some(BigRational::one()));
}

#[test]
fn u24_composition_expansion() {
    let a = Ambient::new(2, 4);
    let k = kclass(&Matroid::uniform(2, 4).unwrap()).unwrap();
    let e = expand_composition(&k).unwrap();
    assert_eq!(e.coefficients.len(), 16);
    for (label, d) in &e.coefficients {
        let size = label.size();
        let want = if size == 0 {
            p(a, "1 - u1^-2*u2^2")
        } else if size % 2 == 1 {
            p(a, "u1^-2*u2^2")
        } else {
            p(a, "-u1^-2*u2^2")
        };
        assert_eq!(d, &want, "{}", label.render(2));
    }
}

#[test]
fn composition_guards() {
    let a = Ambient::new(2, 2);
    assert!(matches!(
        expand_in_compositions(&p(a, "u1^2*t1^2")),
        Err(SchubertError::DegreeBoundViolation { j: 1, degree: 2, r: 2 })
    ));
    let m = Matroid::direct_sum(
        &Matroid::uniform(1, 1).unwrap(),
        &Matroid::uniform(0, 1).unwrap(),
    )
    .unwrap();
    assert!(matches!(
        expand_composition(&kclass(&m).unwrap()),
        Err(SchubertError::HasLoops(_))
    ));
    let e = expand_composition(&kclass(&Matroid::uniform(1, 3).unwrap()).unwrap()).unwrap();
    assert_eq!(e.coefficients.len(), 1);
}

#[test]
fn series_part() {
    let a = Ambient::new(0, 2);
    // 1/(1-t1) = 1 + t1 + t1^2 + ...
    assert_eq!(one_minus_series_part(&p(a, "t1^-1"), 2), p(a, "t1^2"));
    // (1-t1)(1-t2) in degree 1
    assert_eq!(one_minus_series_part(&p(a, "t1*t2"), 1), p(a, "-t1 - t2"));
    assert!(one_minus_series_part(&p(a, "t1"), -1).is_zero());
}

#[test]
fn pos1_and_pos2_fixtures() {
    let u24 = Matroid::uniform(2, 4).unwrap();
    let r = check_pos1(&u24).unwrap();
    assert_eq!(r.entries.len(), 5);
    assert!(r.all_positive(), "{}", r);
    let r = check_pos2(&u24).unwrap();
    assert!(r.all_positive(), "{}", r);
    let zero = r.entries.iter().find(|e| e.label == "(0,0,0,0)").unwrap();
    assert_eq!(zero.witness, "2*g1 + g1^2");
    let para = Matroid::from_bases(4, 2, &[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]])
        .unwrap();
    assert!(check_pos1(&para).unwrap().all_positive());
    let r = check_pos1(&Matroid::uniform(1, 3).unwrap()).unwrap();
    assert_eq!(r.entries.len(), 1);
    assert!(r.all_positive());
}

#[test]
fn squarefree_fixtures() {
    let a = Ambient::new(2, 4);
    let c = p(a, "t1^-1*t2^-1*t3*t4");
    match squarefree_certificate(&c).unwrap() {
        SquarefreeOutcome::Found(cert) => {
            assert_eq!(cert.expand(&c), c);
            assert!(cert.terms.iter().all(|(_, x)| x.is_positive()));
        }
        other => panic!("{:?}", other),
    }
    match squarefree_certificate(&LaurentPoly::one(a)).unwrap() {
        SquarefreeOutcome::Found(cert) => {
            assert_eq!(cert.terms, vec![(vec![], BigRational::one())]);
            assert_eq!(cert.to_string(), "1");
        }
        other => panic!("{:?}", other),
    }
    let c = p(a, "t1^-1*t4");
    assert!(matches!(squarefree_certificate(&c).unwrap(), SquarefreeOutcome::Found(_)));
    assert!(matches!(
        squarefree_certificate(&-LaurentPoly::one(a)).unwrap(),
        SquarefreeOutcome::Infeasible(_)
    ));
    assert!(squarefree_certificate(&p(a, "t1")).is_err());
    let r = check_sqfree(&Matroid::uniform(2, 4).unwrap()).unwrap();
    assert!(r.all_positive(), "{}", r);
}

#[test]
fn squarefree_beyond_four_is_partial() {
    let a = Ambient::new(0, 5);
    match squarefree_certificate(&p(a, "t1^-1*t5")).unwrap() {
        SquarefreeOutcome::Found(cert) => assert_eq!(cert.to_string(), "1 + (t5/t1 - 1)"),
        other => panic!("{:?}", other),
    }
    assert!(matches!(
        squarefree_certificate(&-p(a, "t1^-1*t5")).unwrap(),
        SquarefreeOutcome::NotFound { .. }
    ));
}

#[test]
fn chow2_fixtures() {
    let c = chow2_coefficients(&Matroid::uniform(2, 4).unwrap()).unwrap();
    assert_eq!(c, [(part(&[1]), 2.into())].into_iter().collect());
    let m = Matroid::direct_sum(
        &Matroid::uniform(2, 3).unwrap(),
        &Matroid::uniform(0, 1).unwrap(),
    )
    .unwrap();
    assert_eq!(
        chow2_coefficients(&m).unwrap(),
        [(part(&[1, 1]), 1.into())].into_iter().collect()
    );
    let r = check_chow2(&Matroid::uniform(2, 2).unwrap()).unwrap();
    assert_eq!(r.entries.len(), 1);
    assert_eq!(r.entries[0].label, "()");
    assert!(r.all_positive());
    assert!(check_chow2(&Matroid::uniform(2, 4).unwrap()).unwrap().all_positive());
}
