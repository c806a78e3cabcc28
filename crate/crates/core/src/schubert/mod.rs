//! Matrix Schubert bases and expansions of K-classes and Chow classes in
//! them, plus the positivity checkers built on those expansions.
//!
//! The double Grothendieck polynomials are generated by Demazure operators
//! from the class of the coordinate subspace where the first `n-r` columns
//! vanish. Expansion coefficients are found by restricting to the torus
//! fixed points `u_i = t_{b_i}^{-1}` (Chow side: `u_i = -t_{b_i}`), where the
//! basis is triangular, and every expansion is checked by reassembly.

mod positivity;
mod simplex;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactpoly::{
    demazure_t_reversed, partitions_in_box, schur_u, Ambient, Composition, LaurentPoly, Monomial,
    NotExpressible, Partition, PolyError, VarKind,
};
use crate::matroid::Subset;
use crate::orbitclass::{ChowClass, KClass, OrbitError, MAX_N};

pub use positivity::{
    check_chow2, chow2_coefficients, check_pos1, check_pos2, check_sqfree, squarefree_certificate, FarkasCertificate,
    PositivityEntry, PositivityReport, SquarefreeCertificate, SquarefreeOutcome, Statement, Verdict,
};
pub use simplex::{solve_feasibility, verify_farkas, verify_solution, Feasibility};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SchubertError {
    #[error("invalid dimensions r={r}, n={n}")]
    InvalidDimensions { r: usize, n: usize },
    #[error("two Demazure derivations of {lambda} disagree")]
    PathDependence { lambda: String },
    #[error("no fixed point isolates the remaining basis elements {remaining:?}")]
    SingularBasisMatrix { remaining: Vec<String> },
    #[error("coefficient of {label} is not a Laurent polynomial: {detail}")]
    NonLaurentCoefficient { label: String, detail: String },
    #[error("input is not in the span of the basis (residual {residual})")]
    NonzeroResidual { residual: String },
    #[error("t{j} appears to degree {degree}, but compositions need degrees below r = {r}")]
    DegreeBoundViolation { j: usize, degree: i32, r: usize },
    #[error("matroid has loops {0:?}; the composition expansion needs a loopless matroid")]
    HasLoops(Vec<usize>),
    #[error(transparent)]
    NotExpressible(#[from] NotExpressible),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The double Grothendieck polynomials `G_lambda(u, t)` for all partitions
/// in the `r x (n-r)` box.
#[derive(Clone, Debug)]
pub struct GrothendieckBasis {
    r: usize,
    n: usize,
    polys: BTreeMap<Partition, LaurentPoly>,
}

impl GrothendieckBasis {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::new(self.r, self.n)
    }

    pub fn get(&self, lambda: &Partition) -> Option<&LaurentPoly> {
        self.polys.get(lambda)
    }

    pub fn polys(&self) -> &BTreeMap<Partition, LaurentPoly> {
        &self.polys
    }
}

fn check_dims(r: usize, n: usize) -> Result<Ambient, SchubertError> {
    if r == 0 || r > n {
        return Err(SchubertError::InvalidDimensions { r, n });
    }
    if n > MAX_N {
        return Err(OrbitError::ResourceLimit { n, max: MAX_N }.into());
    }
    Ok(Ambient::new(r, n))
}

/// Class of the coordinate subspace where columns `1..=n-r` vanish.
fn top_class(a: Ambient) -> LaurentPoly {
    let mut f = LaurentPoly::one(a);
    for j in 1..=a.n - a.r {
        for i in 1..=a.r {
            f = &f * &(&LaurentPoly::one(a) - &(&LaurentPoly::u(a, i) * &LaurentPoly::t(a, j)));
        }
    }
    f
}

/// Build every `G_lambda` by removing boxes from the full box. Removing the
/// last box of row `i` from `mu` applies the mirrored Demazure operator at
/// `k = r - i + mu_i`. Each `G_lambda` is derived from every partition that
/// covers it and all derivations must agree, which makes the result
/// independent of the removal order.
pub fn grothendieck_basis(r: usize, n: usize) -> Result<GrothendieckBasis, SchubertError> {
    let a = check_dims(r, n)?;
    let width = (n - r) as u32;
    let mut order = partitions_in_box(r, width);
    order.reverse();
    let mut polys: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
    polys.insert(order[0].clone(), top_class(a));
    for mu in &order {
        let g = polys[mu].clone();
        let parts = mu.padded(r);
        for i in 1..=r {
            let below = if i < r { parts[i] } else { 0 };
            if parts[i - 1] == 0 || parts[i - 1] == below {
                continue;
            }
            let mut smaller = parts.clone();
            smaller[i - 1] -= 1;
            let lambda = Partition::new(&smaller).expect("still a partition");
            let k = r - i + parts[i - 1] as usize;
            let derived = demazure_t_reversed(&g, k)?;
            match polys.get(&lambda) {
                Some(existing) if existing != &derived => {
                    return Err(SchubertError::PathDependence {
                        lambda: lambda.label(r),
                    })
                }
                Some(_) => {}
                None => {
                    polys.insert(lambda, derived);
                }
            }
        }
    }
    Ok(GrothendieckBasis { r, n, polys })
}

/// Double Schur polynomial `s_lambda(u, t)`: the lowest-degree part of
/// `G_lambda(1-u, 1-t)`.
pub fn double_schur(lambda: &Partition, r: usize, n: usize) -> Result<LaurentPoly, SchubertError> {
    let basis = grothendieck_basis(r, n)?;
    let g = basis.get(lambda).ok_or(SchubertError::InvalidDimensions { r, n })?;
    schur_from_grothendieck(lambda, g)
}

fn schur_from_grothendieck(lambda: &Partition, g: &LaurentPoly) -> Result<LaurentPoly, SchubertError> {
    let (s, degree) = g.lowest_part_at_one_minus()?;
    debug_assert_eq!(degree, lambda.size() as i64);
    debug_assert_eq!(
        s.specialize_block(VarKind::T, &BigRational::zero()).ok(),
        Some(schur_u(g.ambient(), lambda))
    );
    Ok(s)
}

/// All double Schur polynomials for the `r x (n-r)` box.
pub fn double_schur_basis(r: usize, n: usize) -> Result<BTreeMap<Partition, LaurentPoly>, SchubertError> {
    let basis = grothendieck_basis(r, n)?;
    basis
        .polys
        .iter()
        .map(|(l, g)| Ok((l.clone(), schur_from_grothendieck(l, g)?)))
        .collect()
}

/// Which basis an expansion is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisTag {
    Grothendieck,
    DoubleSchur,
    Composition,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisTag::Grothendieck => "grothendieck",
            BasisTag::DoubleSchur => "double-schur",
            BasisTag::Composition => "composition",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Partition(Partition),
    Composition(Composition),
}

impl Label {
    /// Size of the partition or composition.
    pub fn size(&self) -> u32 {
        match self {
            Label::Partition(p) => p.size(),
            Label::Composition(c) => c.size(),
        }
    }

    /// Partitions are padded with zeros to `rows` parts.
    pub fn render(&self, rows: usize) -> String {
        match self {
            Label::Partition(p) => p.label(rows),
            Label::Composition(c) => c.to_string(),
        }
    }
}

/// Coefficients of an expansion (zero coefficients omitted) together with
/// the reassembly residual, which is always zero for a returned result.
#[derive(Clone, Debug)]
pub struct ExpansionResult {
    pub basis: BasisTag,
    pub r: usize,
    pub coefficients: BTreeMap<Label, LaurentPoly>,
    pub residual: LaurentPoly,
}

impl ExpansionResult {
    pub fn coefficient(&self, label: &Label) -> LaurentPoly {
        self.coefficients
            .get(label)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.residual.ambient()))
    }

    /// Coefficients in display order: largest label first.
    pub fn rows(&self) -> Vec<(String, &LaurentPoly)> {
        self.coefficients
            .iter()
            .rev()
            .map(|(l, c)| (l.render(self.r), c))
            .collect()
    }
}

impl fmt::Display for ExpansionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, c) in self.rows() {
            writeln!(f, "{}: {}", label, c)?;
        }
        Ok(())
    }
}

/// Restrict to the fixed point `B`: `u_i -> t_{b_i}^{-1}`, or `u_i -> -t_{b_i}`
/// on the Chow side.
fn localize(p: &LaurentPoly, b: Subset, chow: bool) -> LaurentPoly {
    let a = p.ambient();
    let cols = b.elements();
    let mut out = LaurentPoly::zero(a);
    for (m, c) in p.terms() {
        let mut exps = m.exponents().to_vec();
        let mut coeff = c.clone();
        for (i, &col) in cols.iter().enumerate() {
            let e = exps[i];
            exps[i] = 0;
            if chow {
                exps[a.r + col - 1] += e;
                if e % 2 != 0 {
                    coeff = -coeff;
                }
            } else {
                exps[a.r + col - 1] -= e;
            }
        }
        out = out + LaurentPoly::monomial(a, Monomial::from_exponents(&exps), coeff);
    }
    out
}

/// Solve `target = sum_lambda c_lambda(t) basis_lambda` by restricting to the
/// fixed points and peeling off one coefficient at a time from a fixed
/// point where exactly one unsolved basis element survives.
fn expand_by_localization(
    target: &LaurentPoly,
    basis: &BTreeMap<Partition, LaurentPoly>,
    tag: BasisTag,
) -> Result<ExpansionResult, SchubertError> {
    let a = target.ambient();
    let chow = tag == BasisTag::DoubleSchur;
    let points = Subset::all_of_size(a.n, a.r);
    let table: Vec<Vec<LaurentPoly>> = points
        .iter()
        .map(|&b| basis.values().map(|g| localize(g, b, chow)).collect())
        .collect();
    let labels: Vec<&Partition> = basis.keys().collect();
    let mut residual: Vec<LaurentPoly> = points.iter().map(|&b| localize(target, b, chow)).collect();
    let mut unsolved: Vec<usize> = (0..labels.len()).collect();
    let mut coefficients = BTreeMap::new();
    while !unsolved.is_empty() {
        let pick = table.iter().enumerate().find_map(|(row, vals)| {
            let mut alive = unsolved.iter().filter(|&&l| !vals[l].is_zero());
            match (alive.next(), alive.next()) {
                (Some(&l), None) => Some((row, l)),
                _ => None,
            }
        });
        let Some((row, l)) = pick else {
            return Err(SchubertError::SingularBasisMatrix {
                remaining: unsolved.iter().map(|&l| labels[l].label(a.r)).collect(),
            });
        };
        let c = residual[row].exact_divide(&table[row][l]).map_err(|e| {
            SchubertError::NonLaurentCoefficient {
                label: labels[l].label(a.r),
                detail: e.to_string(),
            }
        })?;
        if !c.is_zero() {
            for (res, vals) in residual.iter_mut().zip(&table) {
                if !vals[l].is_zero() {
                    *res = &*res - &(&c * &vals[l]);
                }
            }
            coefficients.insert(Label::Partition(labels[l].clone()), c);
        }
        unsolved.retain(|&x| x != l);
    }
    let mut rebuilt = LaurentPoly::zero(a);
    for (label, c) in &coefficients {
        let Label::Partition(p) = label else { unreachable!() };
        rebuilt = rebuilt + c * &basis[p];
    }
    finish(tag, a.r, coefficients, target - &rebuilt)
}

fn finish(
    basis: BasisTag,
    r: usize,
    coefficients: BTreeMap<Label, LaurentPoly>,
    residual: LaurentPoly,
) -> Result<ExpansionResult, SchubertError> {
    if !residual.is_zero() {
        return Err(SchubertError::NonzeroResidual {
            residual: residual.to_string(),
        });
    }
    Ok(ExpansionResult {
        basis,
        r,
        coefficients,
        residual,
    })
}

/// Expand a polynomial in the double Grothendieck basis of its ambient.
pub fn expand_in_grothendieck(p: &LaurentPoly) -> Result<ExpansionResult, SchubertError> {
    let a = p.ambient();
    let basis = grothendieck_basis(a.r, a.n)?;
    expand_by_localization(p, &basis.polys, BasisTag::Grothendieck)
}

/// `K(M) = sum_lambda c_lambda(t) G_lambda(u, t)` with `c_lambda` Laurent in `t`.
pub fn expand_grothendieck(k: &KClass) -> Result<ExpansionResult, SchubertError> {
    expand_in_grothendieck(k.poly())
}

/// Expand a polynomial in the double Schur basis of its ambient.
pub fn expand_in_double_schur(p: &LaurentPoly) -> Result<ExpansionResult, SchubertError> {
    let a = p.ambient();
    let basis = double_schur_basis(a.r, a.n)?;
    expand_by_localization(p, &basis, BasisTag::DoubleSchur)
}

/// `C(M) = sum_lambda d_lambda(t) s_lambda(u, t)` with `d_lambda` polynomial in `t`.
pub fn expand_double_schur(c: &ChowClass) -> Result<ExpansionResult, SchubertError> {
    let out = expand_in_double_schur(c.poly())?;
    for (label, d) in &out.coefficients {
        if d.has_negative_exponents() {
            return Err(SchubertError::NonLaurentCoefficient {
                label: label.render(out.r),
                detail: format!("expected a polynomial, found {}", d),
            });
        }
    }
    Ok(out)
}

/// `prod_j prod_{i <= alpha_j} (1 - u_i t_j)`.
pub fn composition_class(a: Ambient, alpha: &Composition) -> LaurentPoly {
    let mut f = LaurentPoly::one(a);
    for (j, &aj) in alpha.parts().iter().enumerate() {
        for i in 1..=aj as usize {
            f = &f * &(&LaurentPoly::one(a) - &(&LaurentPoly::u(a, i) * &LaurentPoly::t(a, j + 1)));
        }
    }
    f
}

/// Expand a polynomial in the classes of [`composition_class`] with
/// coefficients Laurent in `u`. The basis element for `alpha` has top
/// `t`-multidegree `alpha` with coefficient `(-1)^|alpha| prod_j u_1...u_{alpha_j}`,
/// so peeling maximal `t`-multidegrees only ever divides by a monomial.
pub fn expand_in_compositions(p: &LaurentPoly) -> Result<ExpansionResult, SchubertError> {
    let a = p.ambient();
    let mut residual = p.clone();
    let mut coefficients = BTreeMap::new();
    while !residual.is_zero() {
        let groups = residual.collect_by_block(VarKind::T);
        let (alpha, coeff) = groups
            .into_iter()
            .max_by_key(|(e, _)| (e.iter().map(|&x| x as i64).sum::<i64>(), e.clone()))
            .expect("nonzero residual");
        for (j, &d) in alpha.iter().enumerate() {
            if d < 0 || d as usize >= a.r {
                return Err(SchubertError::DegreeBoundViolation {
                    j: j + 1,
                    degree: d,
                    r: a.r,
                });
            }
        }
        let mut lead = vec![0i32; a.nvars()];
        for &d in &alpha {
            for e in lead.iter_mut().take(d as usize) {
                *e += 1;
            }
        }
        let size: i32 = alpha.iter().sum();
        let sign = if size % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        let d_alpha = coeff.mul_term(&Monomial::from_exponents(&lead).inverse(), &sign);
        let comp = Composition(alpha.iter().map(|&x| x as u32).collect());
        residual = &residual - &(&d_alpha * &composition_class(a, &comp));
        coefficients.insert(Label::Composition(comp), d_alpha);
    }
    let mut rebuilt = LaurentPoly::zero(a);
    for (label, d) in &coefficients {
        let Label::Composition(c) = label else { unreachable!() };
        rebuilt = rebuilt + d * &composition_class(a, c);
    }
    finish(BasisTag::Composition, a.r, coefficients, p - &rebuilt)
}

/// `K(M) = sum_alpha d_alpha(u) prod_j prod_{i <= alpha_j} (1 - u_i t_j)` for a
/// loopless matroid.
pub fn expand_composition(k: &KClass) -> Result<ExpansionResult, SchubertError> {
    let loops = k.matroid().loops();
    if !loops.is_empty() {
        return Err(SchubertError::HasLoops(loops));
    }
    expand_in_compositions(k.poly())
}

/// Degree-`degree` part of the power series `c(1-t)` for a Laurent
/// polynomial `c` in `t`, expanding `(1-t_j)^{-k}` geometrically.
pub fn one_minus_series_part(c: &LaurentPoly, degree: i64) -> LaurentPoly {
    let a = c.ambient();
    let mut out = LaurentPoly::zero(a);
    if degree < 0 {
        return out;
    }
    let trange = a.block(VarKind::T);
    for (m, coeff) in c.terms() {
        let exps = &m.exponents()[trange.clone()];
        let mut base = m.exponents().to_vec();
        for e in &mut base[trange.clone()] {
            *e = 0;
        }
        let mut acc: Vec<(Vec<i32>, BigRational)> = vec![(base, coeff.clone())];
        let mut remaining = vec![degree];
        for (j, &e) in exps.iter().enumerate() {
            let mut next = Vec::new();
            let mut next_rem = Vec::new();
            for ((mono, cf), &rem) in acc.iter().zip(&remaining) {
                let top = if e >= 0 { rem.min(e as i64) } else { rem };
                for kk in 0..=top {
                    let coef = series_coefficient(e, kk);
                    if coef.is_zero() {
                        continue;
                    }
                    let mut mm = mono.clone();
                    mm[a.r + j] += kk as i32;
                    next.push((mm, cf * coef));
                    next_rem.push(rem - kk);
                }
            }
            acc = next;
            remaining = next_rem;
        }
        for ((mono, cf), rem) in acc.into_iter().zip(remaining) {
            if rem == 0 {
                out = out + LaurentPoly::monomial(a, Monomial::from_exponents(&mono), cf);
            }
        }
    }
    out
}

/// Coefficient of `x^k` in `(1-x)^e`, i.e. `(-1)^k binom(e, k)`.
fn series_coefficient(e: i32, k: i64) -> BigRational {
    let mut c = BigRational::one();
    for i in 0..k {
        c = c * BigRational::from_integer((e as i64 - i).into())
            / BigRational::from_integer((i + 1).into());
    }
    if k % 2 == 1 {
        -c
    } else {
        c
    }
}

/// Push Grothendieck coefficients to the Chow side: `c_lambda(1-t)` in
/// degree `codim - |lambda|`. In lowest order this reproduces the double
/// Schur coefficients of the corresponding Chow class.
pub fn chow_coefficients_from_k(exp: &ExpansionResult, codim: i64) -> BTreeMap<Label, LaurentPoly> {
    exp.coefficients
        .iter()
        .map(|(l, c)| (l.clone(), one_minus_series_part(c, codim - l.size() as i64)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

#[cfg(test)]
mod tests;
