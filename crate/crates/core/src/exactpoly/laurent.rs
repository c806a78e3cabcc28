use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::{Ambient, PolyError, VarId, VarKind};

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, and terms iterate in the canonical
/// graded order of [`Monomial`], which is also the rendering order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ambient: Ambient,
    terms: BTreeMap<Monomial, BigRational>,
}

/// Structured, serializable form of a single term. Exponent vectors are
/// split by block; the coefficient is an exact `p/q` (or integer) string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: String,
    pub u: Vec<i32>,
    pub t: Vec<i32>,
}

impl LaurentPoly {
    pub fn zero(ambient: Ambient) -> Self {
        LaurentPoly {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::constant(ambient, BigRational::one())
    }

    pub fn constant(ambient: Ambient, c: BigRational) -> Self {
        Self::monomial(ambient, Monomial::one(ambient.nvars()), c)
    }

    pub fn integer(ambient: Ambient, c: i64) -> Self {
        Self::constant(ambient, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(ambient: Ambient, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.len(), ambient.nvars(), "monomial length vs ambient");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { ambient, terms }
    }

    pub fn var(ambient: Ambient, v: VarId) -> Result<Self, PolyError> {
        Self::var_pow(ambient, v, 1)
    }

    pub fn var_pow(ambient: Ambient, v: VarId, e: i32) -> Result<Self, PolyError> {
        let pos = ambient.position(v)?;
        let mut m = Monomial::one(ambient.nvars());
        m.0[pos] = e;
        Ok(Self::monomial(ambient, m, BigRational::one()))
    }

    /// `u_i`; panics if out of range. Handy in fixtures.
    pub fn u(ambient: Ambient, i: usize) -> Self {
        Self::var(ambient, VarId::u(i)).expect("u index in range")
    }

    /// `t_j`; panics if out of range. Handy in fixtures.
    pub fn t(ambient: Ambient, j: usize) -> Self {
        Self::var(ambient, VarId::t(j)).expect("t index in range")
    }

    pub fn from_terms<I>(ambient: Ambient, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = LaurentPoly::zero(ambient);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigRational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::one(self.ambient.nvars()))
    }

    /// The single constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The largest term in the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.len(), self.ambient.nvars());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ambient(&self, other: &LaurentPoly) -> Result<(), PolyError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(PolyError::AmbientMismatch(self.ambient, other.ambient))
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.ambient));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = small.terms.iter().next().unwrap();
            return Ok(large.mul_term(m, c));
        }
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(small.len() * large.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly {
            ambient: self.ambient,
            terms,
        })
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.ambient);
        }
        LaurentPoly {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        self.mul_term(m, &BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        let one = Monomial::one(self.ambient.nvars());
        self.mul_term(&one, c)
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.ambient);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn product<'a, I>(ambient: Ambient, factors: I) -> LaurentPoly
    where
        I: IntoIterator<Item = &'a LaurentPoly>,
    {
        factors
            .into_iter()
            .fold(LaurentPoly::one(ambient), |acc, f| &acc * f)
    }

    /// Exact quotient `self / den` in the Laurent polynomial ring.
    ///
    /// Both operands are shifted by monomials to ordinary polynomials with no
    /// monomial content, then divided with the leading term of the canonical
    /// order. For a single divisor the remainder is zero iff `den` divides
    /// `self`.
    pub fn exact_divide(&self, den: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        self.check_ambient(den)?;
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.ambient));
        }
        if den.len() == 1 {
            let (m, c) = den.terms.iter().next().unwrap();
            return Ok(self.mul_term(&m.inverse(), &c.recip()));
        }
        let shift_num = self.min_exponents();
        let shift_den = den.min_exponents();
        let num = self.mul_monomial(&shift_num.inverse());
        let den_p = den.mul_monomial(&shift_den.inverse());
        let (q, rem) = num.div_rem_poly(&den_p);
        if !rem.is_zero() {
            return Err(PolyError::NotDivisible {
                remainder: rem.mul_monomial(&shift_num),
            });
        }
        Ok(q.mul_monomial(&shift_num.div(&shift_den)))
    }

    /// Division with remainder for ordinary polynomials (no negative
    /// exponents), using the canonical order's leading term.
    fn div_rem_poly(&self, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        let (lm, lc) = {
            let (m, c) = den.leading_term().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        let lc_inv = lc.recip();
        let mut rem = self.terms.clone();
        let mut quotient = LaurentPoly::zero(self.ambient);
        let mut remainder = LaurentPoly::zero(self.ambient);
        while let Some((m, c)) = rem.pop_last() {
            if m.divisible_by(&lm) {
                let qm = m.div(&lm);
                let qc = &c * &lc_inv;
                for (dm, dc) in den.terms.iter().rev().skip(1) {
                    let mm = dm.mul(&qm);
                    let delta = -(dc * &qc);
                    match rem.entry(mm) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += delta;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
                quotient.add_term(qm, qc);
            } else {
                remainder.add_term(m, c);
            }
        }
        (quotient, remainder)
    }

    /// Componentwise minimum exponent over all terms (zero vector for the
    /// zero polynomial).
    pub fn min_exponents(&self) -> Monomial {
        let mut out = Monomial::one(self.ambient.nvars());
        let mut first = true;
        for m in self.terms.keys() {
            if first {
                out = m.clone();
                first = false;
            } else {
                for (o, e) in out.0.iter_mut().zip(m.0.iter()) {
                    *o = (*o).min(*e);
                }
            }
        }
        out
    }

    pub fn max_exponents(&self) -> Monomial {
        let mut out = Monomial::one(self.ambient.nvars());
        let mut first = true;
        for m in self.terms.keys() {
            if first {
                out = m.clone();
                first = false;
            } else {
                for (o, e) in out.0.iter_mut().zip(m.0.iter()) {
                    *o = (*o).max(*e);
                }
            }
        }
        out
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|m| m.has_negative())
    }

    /// True when some term involves a variable of the given block.
    pub fn uses_block(&self, kind: VarKind) -> bool {
        let range = self.ambient.block(kind);
        self.terms
            .keys()
            .any(|m| m.0[range.clone()].iter().any(|&e| e != 0))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Set of total degrees of the terms, restricted to a block.
    pub fn block_degrees(&self, kind: VarKind) -> std::collections::BTreeSet<i64> {
        let range = self.ambient.block(kind);
        self.terms
            .keys()
            .map(|m| m.degree_in(range.clone()))
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, degree: i64) -> LaurentPoly {
        LaurentPoly {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of all terms of minimal total degree, with that degree.
    pub fn lowest_degree_part(&self) -> Result<(LaurentPoly, i64), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if let Some(m) = self.terms.keys().find(|m| m.has_negative()) {
            return Err(PolyError::NegativeExponent(self.render_monomial(m)));
        }
        // canonical order is graded, so the first term has minimal degree
        let d = self.terms.keys().next().unwrap().degree();
        Ok((self.homogeneous_part(d), d))
    }

    /// Lowest-degree part of `p(1 - x)` (every variable replaced by one minus
    /// itself), with its degree.
    ///
    /// Works degree by degree, so the full expansion is never formed: the
    /// coefficient of `x^b` is `(-1)^|b| sum_m c_m prod_i binom(m_i, b_i)`.
    pub fn lowest_part_at_one_minus(&self) -> Result<(LaurentPoly, i64), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if let Some(m) = self.terms.keys().find(|m| m.has_negative()) {
            return Err(PolyError::NegativeExponent(self.render_monomial(m)));
        }
        let max_deg = self.terms.keys().map(|m| m.degree()).max().unwrap_or(0);
        for d in 0..=max_deg {
            let mut part = LaurentPoly::zero(self.ambient);
            let sign = if d % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            for (m, c) in &self.terms {
                if m.degree() < d {
                    continue;
                }
                let base = c * &sign;
                let mut b = vec![0i32; m.len()];
                sub_exponents(&m.0, d as i32, 0, &mut b, &mut |b| {
                    let mut coeff = BigInt::one();
                    for (mi, bi) in m.0.iter().zip(b.iter()) {
                        coeff *= binomial(*mi as u32, *bi as u32);
                    }
                    part.add_term(
                        Monomial::from_exponents(b),
                        &base * BigRational::from_integer(coeff),
                    );
                });
            }
            if !part.is_zero() {
                return Ok((part, d));
            }
        }
        unreachable!("p(1 - x) is nonzero when p is")
    }

    /// Exchange two variables (of any blocks).
    pub fn swap_vars(&self, a: VarId, b: VarId) -> Result<LaurentPoly, PolyError> {
        let pa = self.ambient.position(a)?;
        let pb = self.ambient.position(b)?;
        Ok(LaurentPoly {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.0.swap(pa, pb);
                    (m, c.clone())
                })
                .collect(),
        })
    }

    /// The simple transposition `s_i` on a block: swaps index `i` and `i+1`.
    pub fn swap_adjacent(&self, kind: VarKind, i: usize) -> Result<LaurentPoly, PolyError> {
        let (a, b) = match kind {
            VarKind::U => (VarId::u(i), VarId::u(i + 1)),
            VarKind::T => (VarId::t(i), VarId::t(i + 1)),
        };
        self.swap_vars(a, b)
    }

    /// Rename the variables of one block: index `j` becomes `sigma[j-1]`.
    /// `sigma` must be a permutation of `1..=len`.
    pub fn permute_block(&self, kind: VarKind, sigma: &[usize]) -> Result<LaurentPoly, PolyError> {
        let range = self.ambient.block(kind);
        if sigma.len() != range.len() {
            return Err(PolyError::Evaluation(format!(
                "permutation of length {} on a block of size {}",
                sigma.len(),
                range.len()
            )));
        }
        let start = range.start;
        Ok(LaurentPoly {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut out = m.clone();
                    for (j, &s) in sigma.iter().enumerate() {
                        out.0[start + s - 1] = m.0[start + j];
                    }
                    (out, c.clone())
                })
                .collect(),
        })
    }

    /// Substitute the same constant for every variable of a block.
    pub fn specialize_block(
        &self,
        kind: VarKind,
        value: &BigRational,
    ) -> Result<LaurentPoly, PolyError> {
        let range = self.ambient.block(kind);
        let mut out = LaurentPoly::zero(self.ambient);
        for (m, c) in &self.terms {
            let mut factor = BigRational::one();
            for &e in &m.0[range.clone()] {
                factor *= rat_pow(value, e)?;
            }
            let mut mm = m.clone();
            for e in &mut mm.0[range.clone()] {
                *e = 0;
            }
            out.add_term(mm, c * factor);
        }
        Ok(out)
    }

    /// Exact evaluation at a point (one value per variable, u-block first).
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        if point.len() != self.ambient.nvars() {
            return Err(PolyError::Evaluation(format!(
                "point has {} coordinates, ambient needs {}",
                point.len(),
                self.ambient.nvars()
            )));
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e != 0 {
                    v *= rat_pow(x, e)?;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Re-express in another ambient, mapping variables by name.
    pub fn reembed(&self, target: Ambient) -> Result<LaurentPoly, PolyError> {
        let mut out = LaurentPoly::zero(target);
        for (m, c) in &self.terms {
            let mut mm = Monomial::one(target.nvars());
            for (pos, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    let v = self.ambient.var_at(pos);
                    mm.0[target.position(v)?] = e;
                }
            }
            out.add_term(mm, c.clone());
        }
        Ok(out)
    }

    /// Keep only terms whose monomial satisfies a predicate.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> LaurentPoly {
        LaurentPoly {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Group terms by the exponent vector of one block; each group is
    /// returned with that block's exponents zeroed.
    pub fn collect_by_block(&self, kind: VarKind) -> BTreeMap<Vec<i32>, LaurentPoly> {
        let range = self.ambient.block(kind);
        let mut out: BTreeMap<Vec<i32>, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.0[range.clone()].to_vec();
            let mut rest = m.clone();
            for e in &mut rest.0[range.clone()] {
                *e = 0;
            }
            out.entry(key)
                .or_insert_with(|| LaurentPoly::zero(self.ambient))
                .add_term(rest, c.clone());
        }
        out
    }

    pub fn to_term_list(&self) -> Vec<Term> {
        let r = self.ambient.r;
        self.terms
            .iter()
            .map(|(m, c)| Term {
                coeff: c.to_string(),
                u: m.0[..r].to_vec(),
                t: m.0[r..].to_vec(),
            })
            .collect()
    }

    pub fn from_term_list(ambient: Ambient, terms: &[Term]) -> Result<LaurentPoly, PolyError> {
        let mut p = LaurentPoly::zero(ambient);
        for (i, term) in terms.iter().enumerate() {
            if term.u.len() != ambient.r || term.t.len() != ambient.n {
                return Err(PolyError::Parse {
                    pos: i,
                    msg: format!(
                        "term {} has {}+{} exponents, ambient {}",
                        i,
                        term.u.len(),
                        term.t.len(),
                        ambient
                    ),
                });
            }
            let c = parse_rational(&term.coeff).ok_or_else(|| PolyError::Parse {
                pos: i,
                msg: format!("bad coefficient {:?}", term.coeff),
            })?;
            let exps: Vec<i32> = term.u.iter().chain(term.t.iter()).copied().collect();
            p.add_term(Monomial::from_exponents(&exps), c);
        }
        Ok(p)
    }

    /// Parse the canonical text form (also accepts parentheses and powers).
    pub fn parse(ambient: Ambient, s: &str) -> Result<LaurentPoly, PolyError> {
        super::parse::parse_poly(ambient, s)
    }

    pub(crate) fn render_monomial(&self, m: &Monomial) -> String {
        self.monomial_with(m, &|v: VarId| v.to_string())
    }
}

/// Visit every `b <= bound` (componentwise, from position `pos`) with
/// `|b| = left`.
fn sub_exponents<F: FnMut(&[i32])>(bound: &[i32], left: i32, pos: usize, b: &mut Vec<i32>, f: &mut F) {
    if pos == bound.len() {
        if left == 0 {
            f(b);
        }
        return;
    }
    let rest: i32 = bound[pos + 1..].iter().sum();
    let lo = (left - rest).max(0);
    let hi = left.min(bound[pos]);
    for e in lo..=hi {
        b[pos] = e;
        sub_exponents(bound, left - e, pos + 1, b, f);
    }
    b[pos] = 0;
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

pub(crate) fn rat_pow(x: &BigRational, e: i32) -> Result<BigRational, PolyError> {
    if e < 0 && x.is_zero() {
        return Err(PolyError::Evaluation(
            "zero raised to a negative power".into(),
        ));
    }
    Ok(num_traits::pow::Pow::pow(x, e))
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

impl LaurentPoly {
    /// Render in canonical order with custom variable names.
    pub fn render_with<F: Fn(VarId) -> String>(&self, name: F) -> String {
        let mut s = String::new();
        self.write_with(&mut s, &name).expect("writing to a String");
        s
    }

    fn write_with<W: fmt::Write, F: Fn(VarId) -> String>(&self, f: &mut W, name: &F) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", self.monomial_with(m, name))?;
            } else {
                write!(f, "{}*{}", a, self.monomial_with(m, name))?;
            }
        }
        Ok(())
    }

    fn monomial_with<F: Fn(VarId) -> String>(&self, m: &Monomial, name: &F) -> String {
        let mut parts = Vec::new();
        for (pos, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let v = name(self.ambient.var_at(pos));
            if e == 1 {
                parts.push(v);
            } else {
                parts.push(format!("{}^{}", v, e));
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &|v: VarId| v.to_string())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly{}[{}]", self.ambient, self)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("ambient mismatch in +")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("ambient mismatch in -")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("ambient mismatch in *")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch in +");
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch in -");
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn amb(r: usize, n: usize) -> Ambient {
        Ambient::new(r, n)
    }

    fn p(a: Ambient, s: &str) -> LaurentPoly {
        LaurentPoly::parse(a, s).unwrap()
    }

    #[test]
    fn cancellation_to_one() {
        let a = amb(1, 1);
        let sum = &p(a, "1 - u1*t1") + &p(a, "u1*t1");
        assert!(sum.is_one());
    }

    #[test]
    fn multiply_by_one() {
        let a = amb(1, 1);
        let f = p(a, "1 - u1*t1");
        assert_eq!(&f * &LaurentPoly::one(a), f);
    }

    #[test]
    fn swap_t3_t4() {
        let a = amb(2, 4);
        let f = p(a, "(1 - u1*t4)*(1 - u2*t4)");
        let g = f.swap_adjacent(VarKind::T, 3).unwrap();
        assert_eq!(g, p(a, "(1 - u1*t3)*(1 - u2*t3)"));
    }

    #[test]
    fn canonical_rendering() {
        let a = amb(2, 4);
        let f = p(a, "u1*u2*t3*t4*(-1) + 1");
        assert_eq!(f.to_string(), "1 - u1*u2*t3*t4");
        let g = p(a, "t4 + t3 + t2 + t1 + 2*u2 + 2*u1");
        assert_eq!(g.to_string(), "2*u1 + 2*u2 + t1 + t2 + t3 + t4");
        let h = p(a, "u1^2*u2^2*t1*t2*t3*t4");
        assert_eq!(h.to_string(), "u1^2*u2^2*t1*t2*t3*t4");
        assert_eq!(p(a, "t1^-1*t4").to_string(), "t1^-1*t4");
        assert_eq!(LaurentPoly::zero(a).to_string(), "0");
        assert_eq!(p(a, "3/2*u1 - 1/3").to_string(), "-1/3 + 3/2*u1");
    }

    #[test]
    fn divide_difference_of_squares() {
        let a = amb(0, 2);
        let q = p(a, "t1^2 - t2^2").exact_divide(&p(a, "t1 - t2")).unwrap();
        assert_eq!(q, p(a, "t1 + t2"));
    }

    #[test]
    fn divide_by_laurent_binomial() {
        let a = amb(1, 2);
        let den = p(a, "1 - t1^-1*t2");
        let f = p(a, "u1*t1 + 3*t2^2 - 7");
        let q = (&f * &den).exact_divide(&den).unwrap();
        assert_eq!(q, f);
    }

    #[test]
    fn non_divisible_reports_remainder() {
        let a = amb(0, 2);
        let err = p(a, "t1^2 + t2").exact_divide(&p(a, "t1 - t2")).unwrap_err();
        assert!(matches!(err, PolyError::NotDivisible { .. }));
        assert_eq!(
            p(a, "t1").exact_divide(&LaurentPoly::zero(a)).unwrap_err(),
            PolyError::DivisionByZero
        );
    }

    #[test]
    fn lowest_degree_part_examples() {
        let a = amb(2, 4);
        let (part, d) = p(a, "t3 + t4 - t3*t4").lowest_degree_part().unwrap();
        assert_eq!((part, d), (p(a, "t3 + t4"), 1));
        let (part, d) = p(a, "1 - u1*t1").lowest_degree_part().unwrap();
        assert_eq!((part, d), (LaurentPoly::one(a), 0));
        assert_eq!(
            LaurentPoly::zero(a).lowest_degree_part().unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn one_minus_lowest_part_matches_full_substitution() {
        let a = amb(2, 4);
        let k = p(a, "1 - u1^2*u2^2*t1*t2*t3*t4");
        let (part, d) = k.lowest_part_at_one_minus().unwrap();
        assert_eq!(d, 1);
        assert_eq!(part, p(a, "2*u1 + 2*u2 + t1 + t2 + t3 + t4"));
        let k = p(a, "(1 - u1*t4)*(1 - u2*t4)");
        let (part, d) = k.lowest_part_at_one_minus().unwrap();
        assert_eq!((part, d), (p(a, "(u1 + t4)*(u2 + t4)"), 2));
    }

    #[test]
    fn evaluation_and_specialization() {
        let a = amb(2, 4);
        let k = p(a, "1 - u1*u2*t3*t4");
        let at_u1 = k.specialize_block(VarKind::U, &rat(1)).unwrap();
        assert_eq!(at_u1, p(a, "1 - t3*t4"));
        let point: Vec<BigRational> = (1..=6).map(rat).collect();
        assert_eq!(k.eval(&point).unwrap(), rat(1 - 2 * 5 * 6));
    }

    #[test]
    fn term_list_round_trip() {
        let a = amb(2, 3);
        let f = p(a, "1/2*u1*t2^-1 - 3*u2^2 + 7");
        let back = LaurentPoly::from_term_list(a, &f.to_term_list()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = LaurentPoly::one(amb(1, 2));
        let g = LaurentPoly::one(amb(2, 2));
        assert!(matches!(
            f.checked_add(&g),
            Err(PolyError::AmbientMismatch(..))
        ));
    }

    #[test]
    fn permute_block_moves_indices() {
        let a = amb(0, 3);
        let f = p(a, "t1^2*t2");
        // 1 -> 3, 2 -> 1, 3 -> 2
        let g = f.permute_block(VarKind::T, &[3, 1, 2]).unwrap();
        assert_eq!(g, p(a, "t3^2*t1"));
    }
}
