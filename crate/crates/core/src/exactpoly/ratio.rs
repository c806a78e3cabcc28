use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use super::laurent::LaurentPoly;
use super::{Ambient, VarId, VarKind};

/// Why a Laurent polynomial could not be written as a polynomial in the
/// adjacent-ratio quantities.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum NotExpressible {
    #[error("contains {0:?} variables")]
    ForeignVariables(VarKind),
    #[error("not homogeneous of degree 0 (found a term of degree {degree})")]
    Inhomogeneous { degree: i64 },
    #[error("not a polynomial in the ratio quantities (remainder {remainder})")]
    NotPolynomial { remainder: String },
}

/// A polynomial in `beta_1..beta_k`, where `beta_i = x_{i+1}/x_i - 1` for the
/// variables `x` of one block. Stored as a polynomial in the `t` block of a
/// `(0, k)` ambient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatioPoly {
    poly: LaurentPoly,
    block: VarKind,
}

impl RatioPoly {
    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn block(&self) -> VarKind {
        self.block
    }

    /// True when every coefficient is a non-negative integer (the zero
    /// polynomial included).
    pub fn is_positive(&self) -> bool {
        self.poly
            .terms()
            .all(|(_, c)| c.is_integer() && !c.is_negative())
    }

    /// Name of `beta_i`: `b<i>` for the `t` block, `g<i>` for the `u` block.
    pub fn symbol(&self) -> char {
        match self.block {
            VarKind::T => 'b',
            VarKind::U => 'g',
        }
    }

    /// Substitute `beta_i = x_{i+1}/x_i - 1` back into `ambient`.
    pub fn to_laurent(&self, ambient: Ambient) -> LaurentPoly {
        let betas: Vec<LaurentPoly> = (1..=self.poly.ambient().n)
            .map(|i| {
                let (lo, hi) = match self.block {
                    VarKind::T => (VarId::t(i), VarId::t(i + 1)),
                    VarKind::U => (VarId::u(i), VarId::u(i + 1)),
                };
                let ratio = &LaurentPoly::var(ambient, hi).unwrap()
                    * &LaurentPoly::var_pow(ambient, lo, -1).unwrap();
                &ratio - &LaurentPoly::one(ambient)
            })
            .collect();
        let mut out = LaurentPoly::zero(ambient);
        for (m, c) in self.poly.terms() {
            let mut term = LaurentPoly::constant(ambient, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                term = &term * &betas[i].pow(e as u32);
            }
            out = out + term;
        }
        out
    }
}

impl fmt::Display for RatioPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.symbol();
        write!(
            f,
            "{}",
            self.poly.render_with(|v| format!("{}{}", sym, v.index))
        )
    }
}

/// Rewrite a degree-0 Laurent polynomial in the `t` block as a polynomial in
/// `beta_i = t_{i+1}/t_i - 1`.
pub fn beta_rewrite(c: &LaurentPoly) -> Result<RatioPoly, NotExpressible> {
    ratio_rewrite(c, VarKind::T)
}

/// Rewrite a degree-0 Laurent polynomial in one block as a polynomial in
/// the adjacent ratios of that block, each shifted by `-1`.
///
/// A monomial with exponents `a` equals `prod_i rho_i^{b_i}` with
/// `rho_i = x_{i+1}/x_i` and `b_i = -(a_1 + ... + a_i)`. Negative powers of
/// `rho` are cleared, `rho = 1 + beta` substituted, and the cleared powers of
/// `1 + beta` divided back out exactly.
pub fn ratio_rewrite(c: &LaurentPoly, block: VarKind) -> Result<RatioPoly, NotExpressible> {
    let other = match block {
        VarKind::T => VarKind::U,
        VarKind::U => VarKind::T,
    };
    if c.uses_block(other) {
        return Err(NotExpressible::ForeignVariables(other));
    }
    let amb = c.ambient();
    let range = amb.block(block);
    let len = range.len();
    let k = len.saturating_sub(1);
    let target = Ambient::new(0, k);
    if let Some(d) = c.block_degrees(block).into_iter().find(|&d| d != 0) {
        return Err(NotExpressible::Inhomogeneous { degree: d });
    }
    // exponents in rho
    let rho_terms: Vec<(Vec<i32>, _)> = c
        .terms()
        .map(|(m, coeff)| {
            let a = &m.exponents()[range.clone()];
            let mut b = Vec::with_capacity(k);
            let mut acc = 0;
            for &ai in a.iter().take(k) {
                acc += ai;
                b.push(-acc);
            }
            (b, coeff.clone())
        })
        .collect();
    let mut shift = vec![0i32; k];
    for (b, _) in &rho_terms {
        for (s, &bi) in shift.iter_mut().zip(b) {
            *s = (*s).max(-bi);
        }
    }
    let one_plus: Vec<LaurentPoly> = (1..=k)
        .map(|i| &LaurentPoly::t(target, i) + &LaurentPoly::one(target))
        .collect();
    let mut numerator = LaurentPoly::zero(target);
    for (b, coeff) in rho_terms {
        let mut term = LaurentPoly::constant(target, coeff);
        for i in 0..k {
            term = &term * &one_plus[i].pow((b[i] + shift[i]) as u32);
        }
        numerator = numerator + term;
    }
    let mut divisor = LaurentPoly::one(target);
    for i in 0..k {
        divisor = &divisor * &one_plus[i].pow(shift[i] as u32);
    }
    let sym = match block {
        VarKind::T => 'b',
        VarKind::U => 'g',
    };
    let poly = if divisor.is_one() {
        numerator
    } else {
        numerator
            .exact_divide(&divisor)
            .map_err(|e| NotExpressible::NotPolynomial {
                remainder: match e {
                    super::PolyError::NotDivisible { remainder } => remainder
                        .render_with(|v| format!("{}{}", sym, v.index)),
                    other => other.to_string(),
                },
            })?
    };
    debug_assert!(!poly.has_negative_exponents());
    Ok(RatioPoly { poly, block })
}
