use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::{Ambient, PolyError, VarId, VarKind};

/// The linear form `t_a - t_b` with `a < b`.
///
/// Monomial denominators never appear here: they are units of the Laurent
/// ring and are absorbed into the numerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DenomFactor {
    a: usize,
    b: usize,
}

impl DenomFactor {
    /// Normalize `t_i - t_j` to `sign * (t_a - t_b)` with `a < b`.
    pub fn normalized(i: usize, j: usize) -> (DenomFactor, i32) {
        assert_ne!(i, j, "t_i - t_i is zero");
        if i < j {
            (DenomFactor { a: i, b: j }, 1)
        } else {
            (DenomFactor { a: j, b: i }, -1)
        }
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn poly(&self, ambient: Ambient) -> LaurentPoly {
        &LaurentPoly::t(ambient, self.a) - &LaurentPoly::t(ambient, self.b)
    }

    fn eval(&self, ambient: Ambient, point: &[BigRational]) -> BigRational {
        &point[ambient.r + self.a - 1] - &point[ambient.r + self.b - 1]
    }
}

impl fmt::Display for DenomFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t{} - t{})", self.a, self.b)
    }
}

/// A Laurent polynomial over a product of factors `t_a - t_b`.
///
/// The numerator is kept free of every denominator factor, which makes the
/// representation canonical: two values are equal iff they are structurally
/// equal.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: BTreeMap<DenomFactor, u32>,
}

impl RatFunc {
    pub fn from_poly(p: LaurentPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: BTreeMap::new(),
        }
    }

    /// `num / prod (t_i - t_j)` over the listed pairs, in any orientation.
    pub fn over_differences(num: LaurentPoly, pairs: &[(usize, usize)]) -> RatFunc {
        let mut den = BTreeMap::new();
        let mut sign = 1;
        for &(i, j) in pairs {
            let (f, s) = DenomFactor::normalized(i, j);
            sign *= s;
            *den.entry(f).or_insert(0) += 1;
        }
        let num = if sign < 0 { -num } else { num };
        let mut out = RatFunc { num, den };
        out.cancel();
        out
    }

    /// `1 / (1 - t_top / t_bottom)`, which equals `t_bottom / (t_bottom - t_top)`.
    pub fn geometric(ambient: Ambient, top: usize, bottom: usize) -> RatFunc {
        RatFunc::over_differences(LaurentPoly::t(ambient, bottom), &[(bottom, top)])
    }

    pub fn ambient(&self) -> Ambient {
        self.num.ambient()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> impl Iterator<Item = (DenomFactor, u32)> + '_ {
        self.den.iter().map(|(f, k)| (*f, *k))
    }

    pub fn denominator_poly(&self) -> LaurentPoly {
        let a = self.ambient();
        let mut out = LaurentPoly::one(a);
        for (f, k) in &self.den {
            out = &out * &f.poly(a).pow(*k);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The Laurent polynomial value, or `self` back when a denominator remains.
    pub fn into_poly(self) -> Result<LaurentPoly, RatFunc> {
        if self.den.is_empty() {
            Ok(self.num)
        } else {
            Err(self)
        }
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let a = self.ambient();
        let factors: Vec<DenomFactor> = self.den.keys().copied().collect();
        for f in factors {
            let mut k = self.den[&f];
            while k > 0 && divisible_by_difference(&self.num, a, f) {
                self.num = self
                    .num
                    .exact_divide(&f.poly(a))
                    .expect("vanishing on t_a = t_b implies divisibility");
                k -= 1;
            }
            if k == 0 {
                self.den.remove(&f);
            } else {
                self.den.insert(f, k);
            }
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        let mut den = self.den.clone();
        for (f, k) in &other.den {
            *den.entry(*f).or_insert(0) += k;
        }
        let mut out = RatFunc {
            num: &self.num * &other.num,
            den,
        };
        out.cancel();
        out
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> RatFunc {
        let mut out = RatFunc {
            num: &self.num * p,
            den: self.den.clone(),
        };
        out.cancel();
        out
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        rat_sum(&[self.clone(), other.clone()])
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Multiplicative inverse, defined when the numerator is a monomial
    /// times a product of differences `t_a - t_b`.
    pub fn inverse(&self) -> Result<RatFunc, PolyError> {
        if self.num.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let a = self.ambient();
        let mut rest = self.num.clone();
        let mut new_den: BTreeMap<DenomFactor, u32> = BTreeMap::new();
        for i in 1..=a.n {
            for j in i + 1..=a.n {
                let f = DenomFactor { a: i, b: j };
                while rest.len() > 1 && divisible_by_difference(&rest, a, f) {
                    rest = rest.exact_divide(&f.poly(a))?;
                    *new_den.entry(f).or_insert(0) += 1;
                }
            }
        }
        if rest.len() != 1 {
            return Err(PolyError::NotAUnit);
        }
        let (m, c) = rest.terms().next().unwrap();
        let unit_inv = LaurentPoly::monomial(a, m.inverse(), c.recip());
        let mut num = unit_inv;
        for (f, k) in &self.den {
            num = &num * &f.poly(a).pow(*k);
        }
        Ok(RatFunc { num, den: new_den })
    }

    /// Apply the transposition `t_i <-> t_j` to numerator and denominator.
    pub fn swap_t(&self, i: usize, j: usize) -> Result<RatFunc, PolyError> {
        let num = self.num.swap_vars(VarId::t(i), VarId::t(j))?;
        let swap = |x: usize| {
            if x == i {
                j
            } else if x == j {
                i
            } else {
                x
            }
        };
        let pairs: Vec<(usize, usize)> = self
            .den
            .iter()
            .flat_map(|(f, k)| std::iter::repeat((swap(f.a), swap(f.b))).take(*k as usize))
            .collect();
        Ok(RatFunc::over_differences(num, &pairs))
    }

    /// Rename `t_j` to `t_{sigma[j-1]}` everywhere.
    pub fn permute_t(&self, sigma: &[usize]) -> Result<RatFunc, PolyError> {
        let num = self.num.permute_block(VarKind::T, sigma)?;
        let pairs: Vec<(usize, usize)> = self
            .den
            .iter()
            .flat_map(|(f, k)| {
                std::iter::repeat((sigma[f.a - 1], sigma[f.b - 1])).take(*k as usize)
            })
            .collect();
        Ok(RatFunc::over_differences(num, &pairs))
    }

    /// Equality by cross-multiplication, independent of representation.
    pub fn cross_equal(&self, other: &RatFunc) -> bool {
        &self.num * &other.denominator_poly() == &other.num * &self.denominator_poly()
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        let a = self.ambient();
        let mut d = BigRational::one();
        for (f, k) in &self.den {
            let v = f.eval(a, point);
            if v.is_zero() {
                return Err(PolyError::Evaluation(format!("{} vanishes", f)));
            }
            d *= num_traits::pow::Pow::pow(&v, *k);
        }
        Ok(self.num.eval(point)? / d)
    }
}

/// `t_a - t_b` divides `p` iff `p` vanishes on `t_a = t_b`.
fn divisible_by_difference(p: &LaurentPoly, ambient: Ambient, f: DenomFactor) -> bool {
    let pa = ambient.r + f.a - 1;
    let pb = ambient.r + f.b - 1;
    let mut merged: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut mm = m.clone();
        mm.0[pa] += mm.0[pb];
        mm.0[pb] = 0;
        *merged.entry(mm).or_insert_with(BigRational::zero) += c;
    }
    merged.values().all(|c| c.is_zero())
}

/// Sum of rational functions over the common denominator built from the
/// largest multiplicity of each factor, followed by cancellation.
///
/// The output is canonical, so it does not depend on input order or on how
/// the list was chunked.
pub fn rat_sum(terms: &[RatFunc]) -> RatFunc {
    let Some(first) = terms.first() else {
        panic!("rat_sum needs at least one term to know the ambient");
    };
    let a = first.ambient();
    let mut common: BTreeMap<DenomFactor, u32> = BTreeMap::new();
    for t in terms {
        assert_eq!(t.ambient(), a, "ambient mismatch in rat_sum");
        for (f, k) in &t.den {
            let e = common.entry(*f).or_insert(0);
            *e = (*e).max(*k);
        }
    }
    let mut num = LaurentPoly::zero(a);
    for t in terms {
        let mut scaled = t.num.clone();
        for (f, k) in &common {
            let own = t.den.get(f).copied().unwrap_or(0);
            if *k > own {
                scaled = &scaled * &f.poly(a).pow(k - own);
            }
        }
        num = num + scaled;
    }
    let mut out = RatFunc { num, den: common };
    out.cancel();
    out
}

/// Image of a variable under [`substitute`].
#[derive(Clone, Debug)]
pub enum Image {
    Poly(LaurentPoly),
    Rat(RatFunc),
}

impl From<LaurentPoly> for Image {
    fn from(p: LaurentPoly) -> Self {
        Image::Poly(p)
    }
}

impl From<RatFunc> for Image {
    fn from(r: RatFunc) -> Self {
        Image::Rat(r)
    }
}

/// Substitute images for variables of `p`; unmapped variables are kept.
///
/// All images must live in a common target ambient. A variable occurring
/// with a negative exponent needs an invertible image.
pub fn substitute(
    p: &LaurentPoly,
    map: &BTreeMap<VarId, Image>,
    target: Ambient,
) -> Result<RatFunc, PolyError> {
    let src = p.ambient();
    let mut images: Vec<Option<RatFunc>> = Vec::with_capacity(src.nvars());
    for pos in 0..src.nvars() {
        let v = src.var_at(pos);
        let img = match map.get(&v) {
            Some(Image::Poly(q)) => RatFunc::from_poly(q.clone()),
            Some(Image::Rat(q)) => q.clone(),
            None => RatFunc::from_poly(LaurentPoly::var(target, v)?),
        };
        if img.ambient() != target {
            return Err(PolyError::AmbientMismatch(img.ambient(), target));
        }
        images.push(Some(img));
    }
    let mut inverses: Vec<Option<RatFunc>> = vec![None; src.nvars()];
    let mut power_cache: BTreeMap<(usize, i32), RatFunc> = BTreeMap::new();
    let mut parts = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let mut term = RatFunc::from_poly(LaurentPoly::constant(target, c.clone()));
        for (pos, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if let Some(cached) = power_cache.get(&(pos, e)) {
                term = term.mul(cached);
                continue;
            }
            let img = images[pos].as_ref().unwrap();
            let base = if e > 0 {
                img.clone()
            } else {
                if img.is_zero() {
                    return Err(PolyError::ZeroSubstitutionIntoNegativePower(
                        src.var_at(pos),
                    ));
                }
                if inverses[pos].is_none() {
                    let inv = img
                        .inverse()
                        .map_err(|_| PolyError::NotInvertible(src.var_at(pos)))?;
                    inverses[pos] = Some(inv);
                }
                inverses[pos].clone().unwrap()
            };
            let mut pw = RatFunc::from_poly(LaurentPoly::one(target));
            for _ in 0..e.unsigned_abs() {
                pw = pw.mul(&base);
            }
            term = term.mul(&pw);
            power_cache.insert((pos, e), pw);
        }
        parts.push(term);
    }
    if parts.is_empty() {
        return Ok(RatFunc::from_poly(LaurentPoly::zero(target)));
    }
    Ok(rat_sum(&parts))
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        for (i, (d, k)) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *k == 1 {
                write!(f, "{}", d)?;
            } else {
                write!(f, "{}^{}", d, k)?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{}]", self)
    }
}
