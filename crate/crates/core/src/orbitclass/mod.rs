//! Equivariant K-class and Chow class of the matrix orbit closure of a
//! matroid, computed from the permutation-sum localization formulas, plus
//! the equivariant multiplicities at the torus fixed points and the
//! character specializations.
//!
//! The permutation sum is evaluated by a dynamic program over prefixes
//! (see `kernel`), grouped by the lexicographically first basis `B(w)`, and
//! the final division by `prod_{a<b}(t_a - t_b)` must be exact.

mod kernel;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::exactpoly::{
    complete_homogeneous_u, rat_sum, schur_expand_u, Ambient, LaurentPoly, Monomial, Partition,
    PolyError, RatFunc, VarKind,
};
use crate::matroid::{Matroid, Permutation, Subset};

use kernel::{basis_numerators, chow_column, combine, k_column, Weight};

/// Largest ground set the class computations accept. Beyond this the
/// permutation sums are refused up front instead of running for hours.
pub const MAX_N: usize = 7;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum OrbitError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(
        "resource guard: ground set of size {n} exceeds the supported maximum {max} \
         for permutation sums"
    )]
    ResourceLimit { n: usize, max: usize },
    #[error("polynomiality violated: {0}")]
    PolynomialityViolation(String),
    #[error("direct Chow class {direct} differs from the K-class route {via_k}")]
    CrossCheckMismatch { direct: String, via_k: String },
    #[error("expected degree {expected}, found {actual}")]
    DegreeMismatch { expected: i64, actual: i64 },
    #[error("{0} is not a basis of the matroid")]
    NotABasis(Subset),
    #[error("Schur expansion failed: {0}")]
    SchurExpansionFailure(String),
    #[error("integer kernel overflow (coefficients or exponents out of range)")]
    Overflow,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<kernel::Overflow> for OrbitError {
    fn from(_: kernel::Overflow) -> Self {
        OrbitError::Overflow
    }
}

/// `K(M)` together with the matroid it came from and the codimension
/// `r(n-r) - (n-e)` of the orbit closure.
#[derive(Clone, Debug, PartialEq)]
pub struct KClass {
    poly: LaurentPoly,
    matroid: Matroid,
    codim: i64,
}

impl KClass {
    pub fn new(poly: LaurentPoly, matroid: Matroid) -> KClass {
        let codim = matroid.codim();
        KClass {
            poly,
            matroid,
            codim,
        }
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn codim(&self) -> i64 {
        self.codim
    }

    pub fn ambient(&self) -> Ambient {
        self.poly.ambient()
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// `C(M)`, homogeneous of degree `r(n-r) - (n-e)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChowClass {
    poly: LaurentPoly,
    degree: i64,
}

impl ChowClass {
    pub fn new(poly: LaurentPoly, degree: i64) -> ChowClass {
        ChowClass { poly, degree }
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

fn check_input(m: &Matroid) -> Result<Ambient, OrbitError> {
    if m.rank_total() == 0 {
        return Err(OrbitError::InvalidInput(
            "the class formulas need rank r >= 1".into(),
        ));
    }
    if m.n() > MAX_N {
        return Err(OrbitError::ResourceLimit {
            n: m.n(),
            max: MAX_N,
        });
    }
    Ok(Ambient::new(m.rank_total(), m.n()))
}

/// Replace `u_k` (standing for `e_k(u)`) by the elementary symmetric
/// polynomial in `u_1..u_r`.
fn from_elementary(p: &LaurentPoly) -> LaurentPoly {
    let a = p.ambient();
    let r = a.r;
    let e: Vec<LaurentPoly> = (1..=r)
        .map(|k| {
            let mut out = LaurentPoly::zero(a);
            for s in Subset::all_of_size(r, k) {
                let mut exps = vec![0i32; a.nvars()];
                for i in s.elements() {
                    exps[i - 1] = 1;
                }
                out.add_term(Monomial::from_exponents(&exps), BigRational::one());
            }
            out
        })
        .collect();
    let mut powers: BTreeMap<(usize, i32), LaurentPoly> = BTreeMap::new();
    let mut out = LaurentPoly::zero(a);
    for (m, c) in p.terms() {
        let exps = m.exponents();
        let mut tpart = exps.to_vec();
        for x in tpart.iter_mut().take(r) {
            *x = 0;
        }
        let mut term = LaurentPoly::monomial(a, Monomial::from_exponents(&tpart), c.clone());
        for k in 0..r {
            let ek = exps[k];
            if ek > 0 {
                let pw = powers
                    .entry((k, ek))
                    .or_insert_with(|| e[k].pow(ek as u32));
                term = &term * pw;
            }
        }
        out = out + term;
    }
    out
}

/// `K(M)` from the permutation-sum formula.
pub fn kclass(m: &Matroid) -> Result<KClass, OrbitError> {
    let a = check_input(m)?;
    let nums = basis_numerators(m, a, Weight::K)?;
    let quotient = combine(m, a, &nums, k_column)?.map_err(|(i, j, rem)| {
        OrbitError::PolynomialityViolation(format!(
            "t{} - t{} does not divide the numerator {}",
            i,
            j,
            rem.to_laurent(a)
        ))
    })?;
    let poly = from_elementary(&quotient.to_laurent(a));
    Ok(KClass::new(poly, m.clone()))
}

fn fixed_point_factor(a: Ambient, b: Subset, chow: bool) -> LaurentPoly {
    let mut f = LaurentPoly::one(a);
    for j in 1..=a.n {
        if b.contains(j) {
            continue;
        }
        for i in 1..=a.r {
            let ut = &LaurentPoly::u(a, i) * &LaurentPoly::t(a, j);
            let factor = if chow {
                &LaurentPoly::u(a, i) + &LaurentPoly::t(a, j)
            } else {
                &LaurentPoly::one(a) - &ut
            };
            f = &f * &factor;
        }
    }
    f
}

/// `K(M)` by summing every permutation separately as a rational function.
/// Slow; kept as an independent cross-check of [`kclass`].
pub fn kclass_by_permutations(m: &Matroid) -> Result<KClass, OrbitError> {
    let a = check_input(m)?;
    let mut terms = Vec::new();
    for w in Permutation::all(m.n()) {
        let b = m.lex_first_basis(&w);
        let mut term = RatFunc::from_poly(fixed_point_factor(a, b, false));
        for pair in w.word().windows(2) {
            term = term.mul(&RatFunc::geometric(a, pair[1], pair[0]));
        }
        terms.push(term);
    }
    let sum = rat_sum(&terms);
    let poly = sum.into_poly().map_err(|rest| {
        OrbitError::PolynomialityViolation(format!("permutation sum left {}", rest))
    })?;
    Ok(KClass::new(poly, m.clone()))
}

/// Equivariant multiplicity at the fixed point `B`: the sum of
/// `prod_i 1/(1 - t_{w_{i+1}}/t_{w_i})` over all `w` with `B(w) = B`.
pub fn equiv_multiplicity(m: &Matroid, b: Subset) -> Result<RatFunc, OrbitError> {
    if !m.is_basis(b) {
        return Err(OrbitError::NotABasis(b));
    }
    let mut all = equiv_multiplicities(m)?;
    Ok(all.remove(&b).expect("every basis is some B(w)"))
}

/// [`equiv_multiplicity`] for every basis at once.
pub fn equiv_multiplicities(m: &Matroid) -> Result<BTreeMap<Subset, RatFunc>, OrbitError> {
    let a = check_input(m)?;
    let nums = basis_numerators(m, a, Weight::K)?;
    let pairs: Vec<(usize, usize)> = (1..=a.n)
        .flat_map(|i| (i + 1..=a.n).map(move |j| (i, j)))
        .collect();
    Ok(nums
        .into_iter()
        .map(|(b, nb)| (b, RatFunc::over_differences(nb.to_laurent(a), &pairs)))
        .collect())
}

/// Literal per-permutation version of [`equiv_multiplicity`].
pub fn equiv_multiplicity_by_permutations(
    m: &Matroid,
    b: Subset,
) -> Result<RatFunc, OrbitError> {
    let a = check_input(m)?;
    if !m.is_basis(b) {
        return Err(OrbitError::NotABasis(b));
    }
    let mut terms = Vec::new();
    for w in Permutation::all(m.n()) {
        if m.lex_first_basis(&w) != b {
            continue;
        }
        let mut term = RatFunc::from_poly(LaurentPoly::one(a));
        for pair in w.word().windows(2) {
            term = term.mul(&RatFunc::geometric(a, pair[1], pair[0]));
        }
        terms.push(term);
    }
    Ok(rat_sum(&terms))
}

/// The literal permutation sum
/// `sum_w prod_{j not in B(w)} prod_i (u_i + t_j) prod_i 1/(t_{w_{i+1}} - t_{w_i})`.
///
/// Every summand is homogeneous of degree `r(n-r) - (n-1)`, so for a
/// disconnected matroid (codimension larger than that) the sum vanishes
/// identically and the class has to come from `K(M)` instead.
pub fn chow_sum(m: &Matroid) -> Result<LaurentPoly, OrbitError> {
    let a = check_input(m)?;
    let nums = basis_numerators(m, a, Weight::Chow)?;
    let quotient = combine(m, a, &nums, chow_column)?.map_err(|(i, j, rem)| {
        OrbitError::PolynomialityViolation(format!(
            "t{} - t{} does not divide the Chow numerator {}",
            i,
            j,
            rem.to_laurent(a)
        ))
    })?;
    Ok(from_elementary(&quotient.to_laurent(a)))
}

/// `C(M)`, the lowest-degree part of `K(1-u, 1-t)`, cross-checked against
/// [`chow_sum`]: equal for connected matroids, zero otherwise.
pub fn chow_class(m: &Matroid) -> Result<ChowClass, OrbitError> {
    let direct = chow_sum(m)?;
    let via_k = k_to_chow(&kclass(m)?)?;
    let connected = m.connected_components().len() == 1;
    let agrees = if connected {
        &direct == via_k.poly()
    } else {
        direct.is_zero()
    };
    if !agrees {
        return Err(OrbitError::CrossCheckMismatch {
            direct: direct.to_string(),
            via_k: via_k.to_string(),
        });
    }
    Ok(via_k)
}

/// Lowest-degree part of `K(1-u, 1-t)`; its degree must be the codimension.
pub fn k_to_chow(k: &KClass) -> Result<ChowClass, OrbitError> {
    let (poly, degree) = k.poly.lowest_part_at_one_minus()?;
    if degree != k.codim {
        return Err(OrbitError::DegreeMismatch {
            expected: k.codim,
            actual: degree,
        });
    }
    Ok(ChowClass::new(poly, degree))
}

/// Which block [`specialize`] sets to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    AllUOne,
    AllTOne,
}

pub fn specialize(k: &KClass, which: Specialization) -> LaurentPoly {
    let kind = match which {
        Specialization::AllUOne => VarKind::U,
        Specialization::AllTOne => VarKind::T,
    };
    k.poly
        .specialize_block(kind, &BigRational::one())
        .expect("substituting 1 never divides by zero")
}

/// Schur multiplicities of a character, with a note when the result is
/// trivially empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub multiplicities: BTreeMap<Partition, BigInt>,
    pub warning: Option<String>,
}

/// Character of the `GL_r`-representation on the multidegree `(1,..,1)`
/// part of the coordinate ring: the coefficient of `t_1...t_n` in
/// `K(M) prod_{i,j} 1/(1 - u_i t_j)`, expanded in Schur polynomials.
///
/// Only numerator monomials `u^a t^b` with every `b_j <= 1` contribute,
/// each as `u^a prod_j h_{1-b_j}(u)`.
pub fn gv_character(m: &Matroid) -> Result<Character, OrbitError> {
    let loops = m.loops();
    if !loops.is_empty() {
        return Ok(Character {
            multiplicities: BTreeMap::new(),
            warning: Some(format!(
                "element(s) {:?} are loops, so the coefficient of t1*...*tn vanishes",
                loops
            )),
        });
    }
    let k = kclass(m)?;
    let a = k.ambient();
    let h0 = LaurentPoly::one(a);
    let h1 = complete_homogeneous_u(a, 1);
    let mut total = LaurentPoly::zero(a);
    let trange = a.block(VarKind::T);
    for (mono, c) in k.poly.terms() {
        let texp = &mono.exponents()[trange.clone()];
        if texp.iter().any(|&b| !(0..=1).contains(&b)) {
            continue;
        }
        let mut uexp = mono.exponents().to_vec();
        for x in &mut uexp[trange.clone()] {
            *x = 0;
        }
        let mut term = LaurentPoly::monomial(a, Monomial::from_exponents(&uexp), c.clone());
        for &b in texp {
            term = &term * if b == 0 { &h1 } else { &h0 };
        }
        total = total + term;
    }
    let multiplicities =
        schur_expand_u(&total).map_err(|e| OrbitError::SchurExpansionFailure(e.to_string()))?;
    Ok(Character {
        multiplicities,
        warning: None,
    })
}

/// Multiplicities of Specht modules `S^lambda` (lambda a partition of `n`
/// with at most `r` parts) in the `S_n`-representation obtained by
/// Schur-Weyl duality. They coincide with [`gv_character`].
pub fn sn_character(m: &Matroid) -> Result<Character, OrbitError> {
    let ch = gv_character(m)?;
    debug_assert!(ch
        .multiplicities
        .keys()
        .all(|l| l.size() as usize == m.n() && l.len() <= m.rank_total()));
    Ok(ch)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn para34() -> Matroid {
        Matroid::from_bases(4, 2, &[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]])
            .unwrap()
    }

    fn p(a: Ambient, s: &str) -> LaurentPoly {
        LaurentPoly::parse(a, s).unwrap()
    }

    fn u23_plus_loop() -> Matroid {
        Matroid::direct_sum(
            &Matroid::uniform(2, 3).unwrap(),
            &Matroid::uniform(0, 1).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn k_class_fixtures() {
        let a = Ambient::new(2, 4);
        assert_eq!(kclass(&para34()).unwrap().poly(), &p(a, "1 - u1*u2*t3*t4"));
        assert_eq!(
            kclass(&Matroid::uniform(2, 4).unwrap()).unwrap().poly(),
            &p(a, "1 - u1^2*u2^2*t1*t2*t3*t4")
        );
        assert_eq!(
            kclass(&u23_plus_loop()).unwrap().poly(),
            &p(a, "(1 - u1*t4)*(1 - u2*t4)")
        );
        let u12 = kclass(&Matroid::uniform(1, 2).unwrap()).unwrap();
        assert!(u12.poly().is_one());
        assert!(kclass(&Matroid::uniform(1, 1).unwrap()).unwrap().poly().is_one());
    }

    #[test]
    fn per_permutation_path_agrees() {
        for m in [para34(), Matroid::uniform(2, 4).unwrap(), u23_plus_loop()] {
            assert_eq!(kclass(&m).unwrap(), kclass_by_permutations(&m).unwrap());
        }
    }

    #[test]
    fn rank_zero_and_large_ground_sets_are_rejected() {
        assert!(matches!(
            kclass(&Matroid::uniform(0, 1).unwrap()),
            Err(OrbitError::InvalidInput(_))
        ));
        assert_eq!(
            kclass(&Matroid::uniform(2, 8).unwrap()).unwrap_err(),
            OrbitError::ResourceLimit { n: 8, max: 7 }
        );
    }

    #[test]
    fn multiplicity_at_13() {
        let a = Ambient::new(2, 4);
        let got = equiv_multiplicity(&para34(), Subset::from_elements(&[1, 3])).unwrap();
        let want = RatFunc::geometric(a, 2, 3)
            .mul(&RatFunc::geometric(a, 4, 3))
            .mul(&RatFunc::geometric(a, 2, 1));
        assert_eq!(got, want);
        assert!(matches!(
            equiv_multiplicity(&para34(), Subset::from_elements(&[3, 4])),
            Err(OrbitError::NotABasis(_))
        ));
    }

    #[test]
    fn chow_fixtures() {
        let a = Ambient::new(2, 4);
        let c = chow_class(&Matroid::uniform(2, 4).unwrap()).unwrap();
        assert_eq!(c.poly(), &p(a, "2*u1 + 2*u2 + t1 + t2 + t3 + t4"));
        assert_eq!(c.degree(), 1);
        let c = chow_class(&u23_plus_loop()).unwrap();
        assert_eq!(c.poly(), &p(a, "(u1 + t4)*(u2 + t4)"));
        assert!(chow_sum(&u23_plus_loop()).unwrap().is_zero());
        let c = chow_class(&para34()).unwrap();
        assert_eq!(c.poly(), &p(a, "u1 + u2 + t3 + t4"));
    }

    #[test]
    fn specializations() {
        let a = Ambient::new(2, 4);
        let k = kclass(&para34()).unwrap();
        assert_eq!(specialize(&k, Specialization::AllUOne), p(a, "1 - t3*t4"));
        let k = kclass(&Matroid::uniform(2, 4).unwrap()).unwrap();
        assert_eq!(specialize(&k, Specialization::AllTOne), p(a, "1 - u1^2*u2^2"));
    }

    #[test]
    fn characters() {
        let ch = gv_character(&Matroid::uniform(2, 4).unwrap()).unwrap();
        let want: BTreeMap<Partition, BigInt> = [
            (Partition::new(&[4]).unwrap(), BigInt::from(1)),
            (Partition::new(&[3, 1]).unwrap(), BigInt::from(3)),
            (Partition::new(&[2, 2]).unwrap(), BigInt::from(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(ch.multiplicities, want);
        let ch = gv_character(&Matroid::uniform(1, 1).unwrap()).unwrap();
        assert_eq!(
            ch.multiplicities,
            [(Partition::new(&[1]).unwrap(), BigInt::from(1))].into_iter().collect()
        );
        let ch = gv_character(&u23_plus_loop()).unwrap();
        assert!(ch.multiplicities.is_empty() && ch.warning.is_some());
    }
}
