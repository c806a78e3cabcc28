//! Integer polynomial kernel for the permutation sums.
//!
//! Polynomials have non-negative exponents and `i128` coefficients. A
//! monomial is packed into a `u128`, eight bits per variable, at the
//! variable's position in the `(r, n)` ambient. Terms are kept sorted by key,
//! so multiplying by a monomial is a shift and sums are linear merges.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::exactpoly::{Ambient, LaurentPoly, Monomial};
use crate::matroid::{Matroid, Subset};

const BITS: u32 = 8;
const FIELD: u128 = (1 << BITS) - 1;
/// Largest exponent a packed field holds.
pub(crate) const MAX_EXP: u32 = FIELD as u32;
/// Largest number of variables a packed key holds.
pub(crate) const MAX_VARS: usize = (128 / BITS) as usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Overflow;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct IPoly(Vec<(u128, i128)>);

#[inline]
fn unit(pos: usize) -> u128 {
    1u128 << (BITS as usize * pos)
}

#[inline]
fn field(key: u128, pos: usize) -> u32 {
    ((key >> (BITS as usize * pos)) & FIELD) as u32
}

impl IPoly {
    pub fn one() -> IPoly {
        IPoly(vec![(0, 1)])
    }

    pub fn from_terms(mut terms: Vec<(u128, i128)>) -> Result<IPoly, Overflow> {
        terms.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(u128, i128)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == k => last.1 = last.1.checked_add(c).ok_or(Overflow)?,
                _ => out.push((k, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Ok(IPoly(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn negate(&mut self) {
        for t in &mut self.0 {
            t.1 = -t.1;
        }
    }

    /// Multiply by the variable at `pos` (shift; order preserved).
    pub fn mul_var(&self, pos: usize) -> Result<IPoly, Overflow> {
        if self.0.iter().any(|t| field(t.0, pos) == MAX_EXP) {
            return Err(Overflow);
        }
        let s = unit(pos);
        Ok(IPoly(self.0.iter().map(|&(k, c)| (k + s, c)).collect()))
    }

    /// Sorted merge `a + sign * b`.
    fn merge(a: &[(u128, i128)], b: &[(u128, i128)], sign: i128) -> Result<IPoly, Overflow> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (ka, ca) = a[i];
            let (kb, cb) = b[j];
            if ka < kb {
                out.push((ka, ca));
                i += 1;
            } else if kb < ka {
                out.push((kb, sign * cb));
                j += 1;
            } else {
                let c = ca.checked_add(sign * cb).ok_or(Overflow)?;
                if c != 0 {
                    out.push((ka, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(k, c)| (k, sign * c)));
        Ok(IPoly(out))
    }

    pub fn add(&self, other: &IPoly) -> Result<IPoly, Overflow> {
        IPoly::merge(&self.0, &other.0, 1)
    }

    /// Multiply by `x_a - x_b`.
    pub fn mul_diff(&self, a: usize, b: usize) -> Result<IPoly, Overflow> {
        let pa = self.mul_var(a)?;
        let pb = self.mul_var(b)?;
        IPoly::merge(&pa.0, &pb.0, -1)
    }

    /// General product; the shorter factor is expanded term by term and the
    /// shifted copies are summed pairwise.
    pub fn mul(&self, other: &IPoly) -> Result<IPoly, Overflow> {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let (ms, ml) = (small.max_fields(), large.max_fields());
        if ms.iter().zip(&ml).any(|(x, y)| x + y > MAX_EXP) {
            return Err(Overflow);
        }
        let mut parts: Vec<IPoly> = Vec::with_capacity(small.len());
        for &(ks, cs) in &small.0 {
            let mut terms = Vec::with_capacity(large.len());
            for &(kl, cl) in &large.0 {
                terms.push((ks + kl, cs.checked_mul(cl).ok_or(Overflow)?));
            }
            parts.push(IPoly(terms));
        }
        sum_all(parts)
    }

    fn max_fields(&self) -> [u32; MAX_VARS] {
        let mut out = [0u32; MAX_VARS];
        for &(k, _) in &self.0 {
            for (p, o) in out.iter_mut().enumerate() {
                *o = (*o).max(field(k, p));
            }
        }
        out
    }

    /// Exact quotient by `x_a - x_b`, or `None` if it does not divide.
    ///
    /// Terms are grouped by the exponents of every other variable and by
    /// `e_a + e_b`; within a group `sum_i c_i x_a^i x_b^(s-i)` the quotient
    /// coefficient of `x_a^j x_b^(s-1-j)` is `sum_{k>j} c_k`, and divisibility
    /// means the whole group sums to zero.
    pub fn div_diff(&self, a: usize, b: usize) -> Option<IPoly> {
        let mask = !((FIELD << (BITS as usize * a)) | (FIELD << (BITS as usize * b)));
        let mut grouped: Vec<((u128, u32), u32, i128)> = self
            .0
            .iter()
            .map(|&(k, c)| {
                let ea = field(k, a);
                let eb = field(k, b);
                ((k & mask, ea + eb), ea, c)
            })
            .collect();
        grouped.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        let mut out = Vec::with_capacity(self.len());
        let mut idx = 0;
        while idx < grouped.len() {
            let g = grouped[idx].0;
            let (rest, s) = g;
            let mut acc: i128 = 0;
            // descending e_a within the group
            let mut next_i: i64 = s as i64;
            while idx < grouped.len() && grouped[idx].0 == g {
                let (_, ea, c) = grouped[idx];
                // emit quotient terms for exponents between next_i-1 and ea
                while next_i > ea as i64 {
                    if acc != 0 && next_i >= 1 {
                        let j = (next_i - 1) as u32;
                        out.push((rest | pack(a, j) | pack(b, s - 1 - j), acc));
                    }
                    next_i -= 1;
                }
                acc = acc.checked_add(c)?;
                idx += 1;
            }
            while next_i > 0 {
                if acc != 0 {
                    let j = (next_i - 1) as u32;
                    out.push((rest | pack(a, j) | pack(b, s - 1 - j), acc));
                }
                next_i -= 1;
            }
            if acc != 0 {
                return None;
            }
        }
        out.sort_unstable_by_key(|t| t.0);
        Some(IPoly(out))
    }

    pub fn to_laurent(&self, ambient: Ambient) -> LaurentPoly {
        let nv = ambient.nvars();
        LaurentPoly::from_terms(
            ambient,
            self.0.iter().map(|&(k, c)| {
                let exps: Vec<i32> = (0..nv).map(|p| field(k, p) as i32).collect();
                (
                    Monomial::from_exponents(&exps),
                    BigRational::from_integer(BigInt::from(c)),
                )
            }),
        )
    }
}

#[inline]
fn pack(pos: usize, e: u32) -> u128 {
    (e as u128) << (BITS as usize * pos)
}

/// Sum a list of polynomials by pairwise merging.
pub(crate) fn sum_all(mut parts: Vec<IPoly>) -> Result<IPoly, Overflow> {
    if parts.is_empty() {
        return Ok(IPoly::default());
    }
    while parts.len() > 1 {
        let mut next = Vec::with_capacity(parts.len().div_ceil(2));
        let mut it = parts.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.add(&b)?),
                None => next.push(a),
            }
        }
        parts = next;
    }
    Ok(parts.pop().unwrap())
}

/// Edge weight of the permutation sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Weight {
    /// `1 / (1 - t_y / t_x)` for consecutive `x, y`.
    K,
    /// `1 / (t_y - t_x)` for consecutive `x, y`.
    Chow,
}

type StateKey = (u32, u8, u32);

/// For every basis `B`, the numerator `N_B` of
/// `sum_{w : B(w) = B} prod_i weight(w_i, w_{i+1}) = N_B / prod_{a<b} (t_a - t_b)`.
///
/// Dynamic program over prefix states (set of visited elements, last
/// element, greedily kept independent set). A state's value is stored as a
/// numerator over `prod_{a<b in S} (t_a - t_b)`; appending `x` after `l`
/// multiplies it by `c(l) * sign(l, x) * prod_{a in S, a != l} (t_min - t_max)`
/// with `c(l) = t_l` for [`Weight::K`] and `-1` for [`Weight::Chow`].
pub(crate) fn basis_numerators(
    m: &Matroid,
    ambient: Ambient,
    weight: Weight,
) -> Result<BTreeMap<Subset, IPoly>, Overflow> {
    let n = m.n();
    let tpos = |j: usize| ambient.r + j - 1;
    let mut layer: BTreeMap<StateKey, IPoly> = BTreeMap::new();
    for x in 1..=n {
        let s = Subset::from_elements(&[x]);
        let kept = if m.is_independent(s) { s } else { Subset::empty() };
        layer.insert((s.bits(), x as u8, kept.bits()), IPoly::one());
    }
    for _ in 1..n {
        // target -> list of (source, multiplier data)
        let mut targets: BTreeMap<StateKey, Vec<StateKey>> = BTreeMap::new();
        for &(s_bits, l, kept_bits) in layer.keys() {
            let s = Subset::from_bits(s_bits);
            let kept = Subset::from_bits(kept_bits);
            for x in 1..=n {
                if s.contains(x) {
                    continue;
                }
                let with_x = kept.with(x);
                let kept2 = if m.is_independent(with_x) { with_x } else { kept };
                targets
                    .entry((s.with(x).bits(), x as u8, kept2.bits()))
                    .or_default()
                    .push((s_bits, l, kept_bits));
            }
        }
        let computed: Result<Vec<(StateKey, IPoly)>, Overflow> = targets
            .into_par_iter()
            .map(|(target, sources)| {
                let x = target.1 as usize;
                let mut parts = Vec::with_capacity(sources.len());
                for src in sources {
                    let (s_bits, l, _) = src;
                    let l = l as usize;
                    let mut p = layer[&src].clone();
                    for a in Subset::from_bits(s_bits).elements() {
                        if a != l {
                            p = p.mul_diff(tpos(a.min(x)), tpos(a.max(x)))?;
                        }
                    }
                    if weight == Weight::K {
                        p = p.mul_var(tpos(l))?;
                    }
                    let mut sign = if l < x { 1 } else { -1 };
                    if weight == Weight::Chow {
                        sign = -sign;
                    }
                    if sign < 0 {
                        p.negate();
                    }
                    parts.push(p);
                }
                Ok((target, sum_all(parts)?))
            })
            .collect();
        layer = computed?.into_iter().collect();
    }
    let mut by_basis: BTreeMap<Subset, Vec<IPoly>> = BTreeMap::new();
    for ((_, _, kept), p) in layer {
        by_basis.entry(Subset::from_bits(kept)).or_default().push(p);
    }
    by_basis
        .into_iter()
        .map(|(b, parts)| Ok((b, sum_all(parts)?)))
        .collect()
}

/// `prod_j sum_k coeffs_k * e_k * t_j^{deg_k}` over the given columns, with
/// `e_k` stored at u-position `k` (and `e_0 = 1`).
pub(crate) fn column_product(
    ambient: Ambient,
    columns: &[usize],
    factor: impl Fn(usize, usize) -> Vec<(Option<usize>, u32, i128)>,
) -> Result<IPoly, Overflow> {
    let mut acc = IPoly::one();
    for &j in columns {
        let tp = ambient.r + j - 1;
        let mut terms = Vec::new();
        for (e, tdeg, c) in factor(ambient.r, j) {
            let mut key = pack(tp, tdeg);
            if let Some(k) = e {
                key |= pack(k - 1, 1);
            }
            terms.push((key, c));
        }
        acc = acc.mul(&IPoly::from_terms(terms)?)?;
    }
    Ok(acc)
}

/// `P(t_j) = prod_i (1 - u_i t_j) = sum_k (-1)^k e_k t_j^k`.
pub(crate) fn k_column(r: usize, _j: usize) -> Vec<(Option<usize>, u32, i128)> {
    (0..=r)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            ((k > 0).then_some(k), k as u32, sign)
        })
        .collect()
}

/// `prod_i (u_i + t_j) = sum_k e_k t_j^{r-k}`.
pub(crate) fn chow_column(r: usize, _j: usize) -> Vec<(Option<usize>, u32, i128)> {
    (0..=r)
        .map(|k| ((k > 0).then_some(k), (r - k) as u32, 1))
        .collect()
}

/// `sum_B F_B N_B / prod_{a<b}(t_a - t_b)` in the `e`/`t` variables, or the
/// first failing factor `(a, b)` when the quotient is not a polynomial.
pub(crate) fn combine(
    m: &Matroid,
    ambient: Ambient,
    numerators: &BTreeMap<Subset, IPoly>,
    column: fn(usize, usize) -> Vec<(Option<usize>, u32, i128)>,
) -> Result<Result<IPoly, (usize, usize, IPoly)>, Overflow> {
    let n = m.n();
    let parts: Result<Vec<IPoly>, Overflow> = numerators
        .par_iter()
        .map(|(b, nb)| {
            let outside: Vec<usize> = (1..=n).filter(|&j| !b.contains(j)).collect();
            column_product(ambient, &outside, column)?.mul(nb)
        })
        .collect();
    let mut total = sum_all(parts?)?;
    for a in 1..=n {
        for b in a + 1..=n {
            match total.div_diff(ambient.r + a - 1, ambient.r + b - 1) {
                Some(q) => total = q,
                None => return Ok(Err((a, b, total))),
            }
        }
    }
    Ok(Ok(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Ambient {
        Ambient::new(0, 3)
    }

    fn lp(p: &IPoly) -> LaurentPoly {
        p.to_laurent(a())
    }

    #[test]
    fn diff_multiply_then_divide() {
        let x = IPoly::one().mul_var(0).unwrap().add(&IPoly::one().mul_var(2).unwrap()).unwrap();
        let y = x.mul_diff(0, 1).unwrap().mul_diff(1, 2).unwrap().mul_diff(0, 1).unwrap();
        assert_eq!(
            lp(&y),
            LaurentPoly::parse(a(), "(t1 + t3)*(t1 - t2)^2*(t2 - t3)").unwrap()
        );
        let back = y.div_diff(0, 1).unwrap().div_diff(1, 2).unwrap().div_diff(0, 1).unwrap();
        assert_eq!(back, x);
        assert!(x.div_diff(0, 1).is_none());
        assert!(back.div_diff(1, 2).is_none());
    }

    #[test]
    fn general_product_matches_laurent() {
        let p = IPoly::from_terms(vec![(0, 3), (unit(0), -2), (unit(1) * 2, 5)]).unwrap();
        let q = IPoly::from_terms(vec![(unit(2), 1), (unit(0), 7)]).unwrap();
        assert_eq!(lp(&p.mul(&q).unwrap()), &lp(&p) * &lp(&q));
    }

    #[test]
    fn two_element_sum_is_one() {
        let m = Matroid::uniform(1, 2).unwrap();
        let amb = Ambient::new(1, 2);
        let nums = basis_numerators(&m, amb, Weight::K).unwrap();
        let k = combine(&m, amb, &nums, k_column).unwrap().unwrap();
        assert_eq!(k, IPoly::one());
    }
}
