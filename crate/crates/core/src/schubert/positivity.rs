//! Positivity checkers for the expansion coefficients and the square-free
//! certificate search.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::simplex::{solve_feasibility, verify_farkas, Feasibility};
use super::{
    expand_composition, expand_grothendieck, ExpansionResult, SchubertError,
};
use crate::exactpoly::{
    ratio_rewrite, schur_expand_u, LaurentPoly, Monomial, NotExpressible, Partition,
    VarKind,
};
use crate::matroid::Matroid;
use crate::orbitclass::{chow_class, kclass};

/// Above this many candidate products the search keeps only the smallest
/// ones.
const MAX_CANDIDATES: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Pos1,
    Pos2,
    Sqfree,
    Chow2,
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statement::Pos1 => "pos1",
            Statement::Pos2 => "pos2",
            Statement::Sqfree => "sqfree",
            Statement::Chow2 => "chow2",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Positive,
    Negative,
    CertificateFound(SquarefreeCertificate),
    /// The search over an incomplete candidate set failed. Says nothing
    /// about the statement itself.
    NoCertificateFound,
    /// The complete candidate set admits no non-negative combination.
    Infeasible(FarkasCertificate),
    NotExpressible(String),
}

impl Verdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, Verdict::Positive | Verdict::CertificateFound(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Positive => "Positive",
            Verdict::Negative => "Negative",
            Verdict::CertificateFound(_) => "CertificateFound",
            Verdict::NoCertificateFound => "NoCertificateFound",
            Verdict::Infeasible(_) => "Infeasible",
            Verdict::NotExpressible(_) => "NotExpressible",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PositivityEntry {
    pub label: String,
    /// Exponent `e` of the sign `(-1)^e` applied before checking.
    pub sign_exponent: i64,
    pub verdict: Verdict,
    /// The rewritten coefficient, certificate or value backing the verdict.
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PositivityReport {
    pub statement: Statement,
    pub codim: i64,
    pub entries: Vec<PositivityEntry>,
}

impl PositivityReport {
    pub fn all_positive(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.is_positive())
    }

    /// True when some verdict comes from a complete check and goes against
    /// the statement. An unsuccessful incomplete search does not count.
    pub fn counterexample_candidate(&self) -> bool {
        self.entries.iter().any(|e| {
            matches!(
                e.verdict,
                Verdict::Negative | Verdict::Infeasible(_) | Verdict::NotExpressible(_)
            )
        })
    }
}

impl fmt::Display for PositivityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (codim {})", self.statement, self.codim)?;
        for e in &self.entries {
            writeln!(
                f,
                "  {} [sign exponent {}]: {}  {}",
                e.label,
                e.sign_exponent,
                e.verdict.name(),
                e.witness
            )?;
        }
        Ok(())
    }
}

fn signed(c: &LaurentPoly, exponent: i64) -> LaurentPoly {
    if exponent.rem_euclid(2) == 1 {
        -c
    } else {
        c.clone()
    }
}

fn ratio_verdicts(
    exp: &ExpansionResult,
    codim: i64,
    block: VarKind,
) -> Vec<PositivityEntry> {
    let items: Vec<_> = exp.coefficients.iter().rev().collect();
    items
        .par_iter()
        .map(|(label, c)| {
            let sign_exponent = codim - label.size() as i64;
            let (verdict, witness) = match ratio_rewrite(&signed(c, sign_exponent), block) {
                Ok(rp) if rp.is_positive() => (Verdict::Positive, rp.to_string()),
                Ok(rp) => (Verdict::Negative, rp.to_string()),
                Err(e) => (Verdict::NotExpressible(e.to_string()), c.to_string()),
            };
            PositivityEntry {
                label: label.render(exp.r),
                sign_exponent,
                verdict,
                witness,
            }
        })
        .collect()
}

/// Sign-corrected Grothendieck coefficients `(-1)^{codim - |lambda|} c_lambda`
/// rewritten in `beta_i = t_{i+1}/t_i - 1`; positive when every coefficient
/// is a non-negative integer.
pub fn check_pos1(m: &Matroid) -> Result<PositivityReport, SchubertError> {
    let k = kclass(m)?;
    let exp = expand_grothendieck(&k)?;
    Ok(PositivityReport {
        statement: Statement::Pos1,
        codim: k.codim(),
        entries: ratio_verdicts(&exp, k.codim(), VarKind::T),
    })
}

/// The composition-basis analogue of [`check_pos1`], in the ratios
/// `u_{i+1}/u_i - 1`. Needs a loopless matroid.
pub fn check_pos2(m: &Matroid) -> Result<PositivityReport, SchubertError> {
    let k = kclass(m)?;
    let exp = expand_composition(&k)?;
    Ok(PositivityReport {
        statement: Statement::Pos2,
        codim: k.codim(),
        entries: ratio_verdicts(&exp, k.codim(), VarKind::U),
    })
}

/// Search a square-free certificate for every sign-corrected Grothendieck
/// coefficient.
pub fn check_sqfree(m: &Matroid) -> Result<PositivityReport, SchubertError> {
    let k = kclass(m)?;
    let exp = expand_grothendieck(&k)?;
    let codim = k.codim();
    let items: Vec<_> = exp.coefficients.iter().rev().collect();
    let entries = items
        .par_iter()
        .map(|(label, c)| {
            let sign_exponent = codim - label.size() as i64;
            let (verdict, witness) = match squarefree_certificate(&signed(c, sign_exponent)) {
                Ok(SquarefreeOutcome::Found(cert)) => {
                    let w = cert.to_string();
                    (Verdict::CertificateFound(cert), w)
                }
                Ok(SquarefreeOutcome::NotFound { candidates }) => (
                    Verdict::NoCertificateFound,
                    format!("searched {} products", candidates),
                ),
                Ok(SquarefreeOutcome::Infeasible(f)) => {
                    let w = f.to_string();
                    (Verdict::Infeasible(f), w)
                }
                Err(e) => (Verdict::NotExpressible(e.to_string()), c.to_string()),
            };
            PositivityEntry {
                label: label.render(exp.r),
                sign_exponent,
                verdict,
                witness,
            }
        })
        .collect();
    Ok(PositivityReport {
        statement: Statement::Sqfree,
        codim,
        entries,
    })
}

/// `C(M)` at `t = 0` in Schur polynomials.
pub fn chow2_coefficients(m: &Matroid) -> Result<BTreeMap<Partition, BigInt>, SchubertError> {
    let c = chow_class(m)?;
    let at_zero = c.poly().specialize_block(VarKind::T, &BigRational::zero())?;
    Ok(schur_expand_u(&at_zero)?)
}

/// Every Schur coefficient of `C(M)|_{t=0}` must be a non-negative integer
/// and sit in degree `codim`.
pub fn check_chow2(m: &Matroid) -> Result<PositivityReport, SchubertError> {
    let codim = m.codim();
    let entries = chow2_coefficients(m)?
        .into_iter()
        .rev()
        .map(|(lambda, d)| {
            let ok = !d.is_negative() && lambda.size() as i64 == codim;
            PositivityEntry {
                label: lambda.to_string(),
                sign_exponent: 0,
                verdict: if ok { Verdict::Positive } else { Verdict::Negative },
                witness: d.to_string(),
            }
        })
        .collect();
    Ok(PositivityReport {
        statement: Statement::Chow2,
        codim,
        entries,
    })
}

/// A non-negative combination of square-free products of `t_j/t_i - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeCertificate {
    pub n: usize,
    /// Pairs `(i, j)` with `i < j`, and the coefficient of their product.
    pub terms: Vec<(Vec<(usize, usize)>, BigRational)>,
    pub integral: bool,
}

impl SquarefreeCertificate {
    /// Multiply the certificate back out in the ambient of `like`.
    pub fn expand(&self, like: &LaurentPoly) -> LaurentPoly {
        let a = like.ambient();
        let mut out = LaurentPoly::zero(a);
        for (pairs, c) in &self.terms {
            out = out + product(like, pairs).scale(c);
        }
        out
    }
}

impl fmt::Display for SquarefreeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(pairs, c)| {
                let factors: Vec<String> = pairs
                    .iter()
                    .map(|(i, j)| format!("(t{}/t{} - 1)", j, i))
                    .collect();
                match (c.is_one(), factors.is_empty()) {
                    (_, true) => c.to_string(),
                    (true, false) => factors.join("*"),
                    (false, false) => format!("{}*{}", c, factors.join("*")),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Dual vector proving that no non-negative combination exists: one weight
/// per monomial, pairing to `<= 0` with every product and to `> 0` with the
/// target.
#[derive(Clone, Debug, PartialEq)]
pub struct FarkasCertificate {
    pub weights: Vec<(String, BigRational)>,
}

impl fmt::Display for FarkasCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .weights
            .iter()
            .filter(|(_, w)| !w.is_zero())
            .map(|(m, w)| format!("{}: {}", m, w))
            .collect();
        write!(f, "farkas {{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SquarefreeOutcome {
    Found(SquarefreeCertificate),
    NotFound { candidates: usize },
    Infeasible(FarkasCertificate),
}

fn product(like: &LaurentPoly, pairs: &[(usize, usize)]) -> LaurentPoly {
    let a = like.ambient();
    let mut f = LaurentPoly::one(a);
    for &(i, j) in pairs {
        let mut exps = vec![0i32; a.nvars()];
        exps[a.r + j - 1] = 1;
        exps[a.r + i - 1] = -1;
        let ratio = LaurentPoly::monomial(a, Monomial::from_exponents(&exps), BigRational::one());
        f = &f * &(&ratio - &LaurentPoly::one(a));
    }
    f
}

fn subsets_up_to(pairs: &[(usize, usize)], cap: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out: Vec<Vec<(usize, usize)>> = (0u64..(1u64 << pairs.len()))
        .filter(|bits| bits.count_ones() as usize <= cap)
        .map(|bits| {
            (0..pairs.len())
                .filter(|&p| bits >> p & 1 == 1)
                .map(|p| pairs[p])
                .collect()
        })
        .collect();
    out.sort_by_key(|s| s.len());
    out
}

/// Look for non-negative rational `x_S` with `sum_S x_S prod_{(i,j) in S}
/// (t_j/t_i - 1) = c`, solving the exact LP.
///
/// For `n <= 4` every square-free product is a candidate, so failure comes
/// with a Farkas certificate. For larger `n` only products of pairs inside
/// the `t`-support of `c`, at most as many factors as that support has
/// variables, are tried.
pub fn squarefree_certificate(c: &LaurentPoly) -> Result<SquarefreeOutcome, SchubertError> {
    if c.uses_block(VarKind::U) {
        return Err(NotExpressible::ForeignVariables(VarKind::U).into());
    }
    if let Some(d) = c.block_degrees(VarKind::T).into_iter().find(|&d| d != 0) {
        return Err(NotExpressible::Inhomogeneous { degree: d }.into());
    }
    let a = c.ambient();
    let n = a.n;
    let complete = n <= 4;
    let candidates = if complete {
        let pairs: Vec<_> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        subsets_up_to(&pairs, pairs.len())
    } else {
        let trange = a.block(VarKind::T);
        let support: Vec<usize> = (1..=n)
            .filter(|&j| c.terms().any(|(m, _)| m.exponents()[trange.start + j - 1] != 0))
            .collect();
        let pairs: Vec<_> = support
            .iter()
            .flat_map(|&i| support.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect();
        let mut all = subsets_up_to(&pairs, support.len());
        all.truncate(MAX_CANDIDATES);
        all
    };
    let products: Vec<LaurentPoly> = candidates.iter().map(|s| product(c, s)).collect();
    let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in products.iter().chain(std::iter::once(c)) {
        for (m, _) in p.terms() {
            let next = rows.len();
            rows.entry(m.clone()).or_insert(next);
        }
    }
    let mut matrix = vec![vec![BigRational::zero(); products.len()]; rows.len()];
    for (col, p) in products.iter().enumerate() {
        for (m, v) in p.terms() {
            matrix[rows[m]][col] = v.clone();
        }
    }
    let mut rhs = vec![BigRational::zero(); rows.len()];
    for (m, v) in c.terms() {
        rhs[rows[m]] = v.clone();
    }
    match solve_feasibility(&matrix, &rhs) {
        Feasibility::Feasible(x) => {
            let terms: Vec<_> = candidates
                .into_iter()
                .zip(x)
                .filter(|(_, v)| !v.is_zero())
                .collect();
            let integral = terms.iter().all(|(_, v)| v.is_integer());
            let cert = SquarefreeCertificate { n, terms, integral };
            assert_eq!(&cert.expand(c), c, "certificate failed to re-expand");
            Ok(SquarefreeOutcome::Found(cert))
        }
        Feasibility::Infeasible(y) if complete => {
            assert!(verify_farkas(&matrix, &rhs, &y), "invalid Farkas vector");
            let mut weights = vec![(String::new(), BigRational::zero()); rows.len()];
            for (m, &i) in &rows {
                let name = LaurentPoly::monomial(a, m.clone(), BigRational::one()).to_string();
                weights[i] = (name, y[i].clone());
            }
            Ok(SquarefreeOutcome::Infeasible(FarkasCertificate { weights }))
        }
        Feasibility::Infeasible(_) => Ok(SquarefreeOutcome::NotFound {
            candidates: products.len(),
        }),
    }
}
