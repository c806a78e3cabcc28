use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::{Ambient, PolyError, VarKind};

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// dropped, so `(1,0)` and `(1)` are the same partition; use [`Partition::label`]
/// to print it padded to a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Partition, String> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("{:?} is not weakly decreasing", parts));
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition(v))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (1-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// Text label padded with zeros to `len` parts, e.g. `(1,0)`.
    pub fn label(&self, len: usize) -> String {
        let parts: Vec<String> = self.padded(len).iter().map(|p| p.to_string()).collect();
        format!("({})", parts.join(","))
    }

    pub fn fits_in_box(&self, rows: usize, width: u32) -> bool {
        self.0.len() <= rows && self.0.first().is_none_or(|&p| p <= width)
    }

    /// Parse `(2,1,0)` or `2,1`.
    pub fn parse(s: &str) -> Result<Partition, String> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = inner.split(',').map(|x| x.trim().parse()).collect();
        Partition::new(&parts.map_err(|e| format!("bad partition {:?}: {}", s, e))?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label(0))
    }
}

/// A length-`n` vector of non-negative integers indexing the products
/// `prod_j prod_{i <= alpha_j} (1 - u_i t_j)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions with at most `rows` parts, each at most `width`, ordered
/// by size and then lexicographically.
pub fn partitions_in_box(rows: usize, width: u32) -> Vec<Partition> {
    fn rec(rows: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if prefix.len() == rows {
            out.push(Partition::new(prefix).unwrap());
            return;
        }
        for p in 0..=max {
            prefix.push(p);
            rec(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, width, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

/// Complete homogeneous symmetric polynomial `h_k(u_1..u_r)`; zero for `k < 0`.
pub fn complete_homogeneous_u(ambient: Ambient, k: i64) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero(ambient);
    }
    let r = ambient.r;
    let mut out = LaurentPoly::zero(ambient);
    if r == 0 {
        return if k == 0 { LaurentPoly::one(ambient) } else { out };
    }
    let mut exps = vec![0i32; ambient.nvars()];
    fn rec(pos: usize, r: usize, left: i32, exps: &mut Vec<i32>, out: &mut LaurentPoly) {
        if pos + 1 == r {
            exps[pos] = left;
            out.add_term(Monomial::from_exponents(exps), BigRational::one());
            exps[pos] = 0;
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(pos + 1, r, left - e, exps, out);
        }
        exps[pos] = 0;
    }
    rec(0, r, k as i32, &mut exps, &mut out);
    out
}

/// Schur polynomial `s_lambda(u_1..u_r)` by the Jacobi-Trudi determinant
/// `det(h_{lambda_i - i + j})`.
pub fn schur_u(ambient: Ambient, lambda: &Partition) -> LaurentPoly {
    let l = lambda.len();
    if l == 0 {
        return LaurentPoly::one(ambient);
    }
    let mut h_cache: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    let mut entry = |i: usize, j: usize| -> LaurentPoly {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        h_cache
            .entry(k)
            .or_insert_with(|| complete_homogeneous_u(ambient, k))
            .clone()
    };
    let matrix: Vec<Vec<LaurentPoly>> = (1..=l)
        .map(|i| (1..=l).map(|j| entry(i, j)).collect())
        .collect();
    determinant(ambient, &matrix)
}

fn determinant(ambient: Ambient, m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let l = m.len();
    if l == 1 {
        return m[0][0].clone();
    }
    let mut out = LaurentPoly::zero(ambient);
    for col in 0..l {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &determinant(ambient, &minor);
        out = if col % 2 == 0 { out + term } else { out - term };
    }
    out
}

/// Coefficients `d` with `p = sum d_lambda s_lambda(u)`, found by repeatedly
/// peeling the lexicographically largest monomial.
pub fn schur_expand_u(p: &LaurentPoly) -> Result<BTreeMap<Partition, BigInt>, PolyError> {
    let ambient = p.ambient();
    if p.uses_block(VarKind::T) {
        return Err(PolyError::UnexpectedVariables(VarKind::T));
    }
    if let Some((m, _)) = p.terms().find(|(m, _)| m.has_negative()) {
        return Err(PolyError::NegativeExponent(p.render_monomial(m)));
    }
    for i in 1..ambient.r {
        if p.swap_adjacent(VarKind::U, i)? != *p {
            return Err(PolyError::NotSymmetric);
        }
    }
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let (lead, c) = rest
            .terms()
            .max_by(|a, b| a.0.exponents()[..ambient.r].cmp(&b.0.exponents()[..ambient.r]))
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        if !c.is_integer() {
            return Err(PolyError::NonIntegral(c));
        }
        let parts: Vec<u32> = lead.exponents()[..ambient.r]
            .iter()
            .map(|&e| e as u32)
            .collect();
        let lambda = Partition::new(&parts).map_err(|_| PolyError::NotSymmetric)?;
        rest = rest - schur_u(ambient, &lambda).scale(&c);
        if !c.is_zero() {
            out.insert(lambda, c.to_integer());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Ambient {
        Ambient::new(2, 0)
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p).unwrap()
    }

    /// Semistandard tableaux count per monomial, as an independent oracle.
    fn schur_by_tableaux(ambient: Ambient, lambda: &Partition) -> LaurentPoly {
        let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| (0..w).map(move |j| (i, j)))
            .collect();
        let r = ambient.r;
        let mut out = LaurentPoly::zero(ambient);
        let mut fill = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
        fn rec(
            k: usize,
            cells: &[(usize, usize)],
            fill: &mut Vec<Vec<usize>>,
            r: usize,
            ambient: Ambient,
            out: &mut LaurentPoly,
        ) {
            if k == cells.len() {
                let mut e = vec![0i32; ambient.nvars()];
                for &(i, j) in cells {
                    e[fill[i][j] - 1] += 1;
                }
                out.add_term(Monomial::from_exponents(&e), BigRational::one());
                return;
            }
            let (i, j) = cells[k];
            for v in 1..=r {
                if j > 0 && fill[i][j - 1] > v {
                    continue;
                }
                if i > 0 && fill[i - 1][j] >= v {
                    continue;
                }
                fill[i][j] = v;
                rec(k + 1, cells, fill, r, ambient, out);
            }
        }
        rec(0, &cells, &mut fill, r, ambient, &mut out);
        out
    }

    #[test]
    fn small_schur_polynomials() {
        let a = a2();
        assert_eq!(schur_u(a, &part(&[1])).to_string(), "u1 + u2");
        assert_eq!(schur_u(a, &part(&[2, 2])).to_string(), "u1^2*u2^2");
        assert_eq!(
            schur_u(a, &part(&[3, 1])),
            LaurentPoly::parse(a, "u1^3*u2 + u1^2*u2^2 + u1*u2^3").unwrap()
        );
        assert!(schur_u(a, &part(&[1, 1, 1])).is_zero());
    }

    #[test]
    fn jacobi_trudi_matches_tableaux() {
        let a = Ambient::new(3, 0);
        for lambda in partitions_in_box(3, 3) {
            assert_eq!(schur_u(a, &lambda), schur_by_tableaux(a, &lambda), "{}", lambda);
        }
    }

    #[test]
    fn expansion_examples() {
        let a = a2();
        let p = LaurentPoly::parse(a, "(u1 + u2)^4 - u1^2*u2^2").unwrap();
        let got = schur_expand_u(&p).unwrap();
        let want: BTreeMap<Partition, BigInt> = [
            (part(&[4]), BigInt::from(1)),
            (part(&[3, 1]), BigInt::from(3)),
            (part(&[2, 2]), BigInt::from(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        let two = schur_expand_u(&LaurentPoly::parse(a, "2*u1 + 2*u2").unwrap()).unwrap();
        assert_eq!(two, [(part(&[1]), BigInt::from(2))].into_iter().collect());
    }

    #[test]
    fn expansion_rejects_bad_input() {
        let a = Ambient::new(2, 1);
        let p = |s: &str| LaurentPoly::parse(a, s).unwrap();
        assert_eq!(schur_expand_u(&p("u1")).unwrap_err(), PolyError::NotSymmetric);
        assert!(matches!(
            schur_expand_u(&p("t1")),
            Err(PolyError::UnexpectedVariables(VarKind::T))
        ));
        assert!(matches!(
            schur_expand_u(&p("u1^-1*u2^-1")),
            Err(PolyError::NegativeExponent(_))
        ));
    }

    #[test]
    fn expand_inverts_schur_on_box() {
        let a = Ambient::new(3, 0);
        for lambda in partitions_in_box(3, 4) {
            let got = schur_expand_u(&schur_u(a, &lambda)).unwrap();
            assert_eq!(got, [(lambda.clone(), BigInt::from(1))].into_iter().collect());
        }
    }

    #[test]
    fn partition_labels() {
        assert_eq!(part(&[1, 0]).label(2), "(1,0)");
        assert_eq!(part(&[]).label(2), "(0,0)");
        assert_eq!(Partition::parse("(2,1,0)").unwrap(), part(&[2, 1]));
        assert!(Partition::new(&[1, 2]).is_err());
        assert_eq!(partitions_in_box(2, 2).len(), 6);
    }
}
