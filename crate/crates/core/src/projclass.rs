//! Class of the projectivized orbit closure `V` in the Chow ring
//! `Z[t_1..t_n]/(t_1^r, ..., t_n^r)` of `(P^{r-1})^n`, from the lattice
//! points `S(M)`, and its comparison with the class derived from `K(M)`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::exactpoly::{Ambient, LaurentPoly, Monomial, PolyError};
use crate::matroid::{Matroid, Subset};
use crate::orbitclass::{kclass, specialize, OrbitError, Specialization, MAX_N};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ProjError {
    #[error("the projective class needs rank r >= 1")]
    RankZero,
    #[error("element(s) {0:?} are loops, so the map to (P^(r-1))^n is undefined")]
    Loops(Vec<usize>),
    #[error("matroid has {0} connected components; the lattice-point formula needs a connected matroid")]
    Disconnected(usize),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `S(M)`: all `s in N^n` with `sum_{i in I} s_i < r rk(I)` for every
/// nonempty `I` and `sum_i s_i = r^2 - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPoints {
    r: usize,
    points: BTreeSet<Vec<u32>>,
}

impl SPoints {
    /// Validate every point against the defining inequalities.
    pub fn new(m: &Matroid, points: BTreeSet<Vec<u32>>) -> Result<SPoints, String> {
        let r = m.rank_total() as u32;
        for s in &points {
            if s.len() != m.n() {
                return Err(format!("{:?} has the wrong length", s));
            }
            if s.iter().sum::<u32>() != r * r - 1 {
                return Err(format!("{:?} does not sum to r^2 - 1", s));
            }
            for bits in 1u32..(1 << m.n()) {
                let set = Subset::from_bits(bits);
                let sum: u32 = set.elements().iter().map(|&i| s[i - 1]).sum();
                if sum >= r * m.rank(set) as u32 {
                    return Err(format!("{:?} violates the inequality for {}", s, set));
                }
            }
        }
        Ok(SPoints {
            r: r as usize,
            points,
        })
    }

    pub fn points(&self) -> &BTreeSet<Vec<u32>> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

impl fmt::Display for SPoints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .points
            .iter()
            .map(|s| {
                let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        write!(f, "{{{}}}", pts.join(", "))
    }
}

/// A class in `Z[t_1..t_n]/(t_j^r)`, stored reduced (every exponent below
/// `r`) in the `t`-only ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnClass {
    r: usize,
    poly: LaurentPoly,
}

impl PnClass {
    /// Reduce `p` (in any ambient, `t` variables only) modulo `t_j^r`.
    pub fn reduce(p: &LaurentPoly, r: usize) -> Result<PnClass, PolyError> {
        let target = Ambient::new(0, p.ambient().n);
        let poly = p
            .reembed(target)?
            .filter_terms(|m| m.exponents().iter().all(|&e| (e as usize) < r));
        Ok(PnClass { r, poly })
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

impl fmt::Display for PnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

fn check(m: &Matroid) -> Result<(), ProjError> {
    if m.rank_total() == 0 {
        return Err(ProjError::RankZero);
    }
    if m.n() > MAX_N {
        return Err(OrbitError::ResourceLimit { n: m.n(), max: MAX_N }.into());
    }
    Ok(())
}

/// Enumerate `S(M)` coordinate by coordinate; after fixing `s_k` every
/// inequality whose largest element is `k` is checked.
pub fn s_of_m(m: &Matroid) -> Result<SPoints, ProjError> {
    check(m)?;
    let n = m.n();
    let r = m.rank_total() as u32;
    let target = r * r - 1;
    let bound: Vec<u32> = (0..(1u32 << n))
        .map(|bits| r * m.rank(Subset::from_bits(bits)) as u32)
        .collect();

    fn rec(
        k: usize,
        n: usize,
        target: u32,
        bound: &[u32],
        s: &mut Vec<u32>,
        out: &mut BTreeSet<Vec<u32>>,
    ) {
        let sum: u32 = s.iter().sum();
        if k == n {
            if sum == target {
                out.insert(s.clone());
            }
            return;
        }
        let single = bound[1 << k];
        for v in 0..single.min(target - sum + 1) {
            s.push(v);
            let high = 1u32 << k;
            let ok = (0..high).all(|lower| {
                let bits = lower | high;
                let total: u32 = (0..=k).filter(|&i| bits >> i & 1 == 1).map(|i| s[i]).sum();
                total < bound[bits as usize]
            });
            if ok {
                rec(k + 1, n, target, bound, s, out);
            }
            s.pop();
        }
    }

    let mut out = BTreeSet::new();
    rec(0, n, target, &bound, &mut Vec::new(), &mut out);
    Ok(SPoints::new(m, out).expect("enumeration only keeps valid points"))
}

/// `sum_{s in S(M)} prod_i t_i^{r-1-s_i}`, reduced modulo `t_j^r`.
pub fn li_class(m: &Matroid) -> Result<PnClass, ProjError> {
    let s = s_of_m(m)?;
    let r = m.rank_total() as i32;
    let a = Ambient::new(0, m.n());
    let mut poly = LaurentPoly::zero(a);
    for point in s.points() {
        let exps: Vec<i32> = point.iter().map(|&x| r - 1 - x as i32).collect();
        poly = poly + LaurentPoly::monomial(a, Monomial::from_exponents(&exps), BigRational::one());
    }
    Ok(PnClass::reduce(&poly, r as usize)?)
}

/// Set every `u_i = 1` in `K(M)`, substitute `t -> 1 - t`, keep the
/// lowest-degree part and reduce modulo `t_j^r`.
pub fn class_via_k(m: &Matroid) -> Result<PnClass, ProjError> {
    check(m)?;
    let k = kclass(m)?;
    let plain = specialize(&k, Specialization::AllUOne);
    let (low, _) = plain.lowest_part_at_one_minus()?;
    Ok(PnClass::reduce(&low, m.rank_total())?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub li: PnClass,
    pub via_k: PnClass,
    pub equal: bool,
}

/// Compare [`li_class`] with [`class_via_k`]. The lattice-point formula is
/// zero for a disconnected matroid, where `V` has smaller dimension, so
/// only loopless connected matroids are accepted.
pub fn cross_check(m: &Matroid) -> Result<CrossCheck, ProjError> {
    check(m)?;
    let loops = m.loops();
    if !loops.is_empty() {
        return Err(ProjError::Loops(loops));
    }
    let e = m.connected_components().len();
    if e != 1 {
        return Err(ProjError::Disconnected(e));
    }
    let li = li_class(m)?;
    let via_k = class_via_k(m)?;
    let equal = li == via_k;
    Ok(CrossCheck { li, via_k, equal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn para34() -> Matroid {
        Matroid::from_bases(4, 2, &[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]])
            .unwrap()
    }

    fn t(n: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse(Ambient::new(0, n), s).unwrap()
    }

    #[test]
    fn s_of_m_fixtures() {
        let s = s_of_m(&para34()).unwrap();
        let want: BTreeSet<Vec<u32>> = [vec![1, 1, 0, 1], vec![1, 1, 1, 0]].into_iter().collect();
        assert_eq!(s.points(), &want);
        assert_eq!(s.to_string(), "{(1,1,0,1), (1,1,1,0)}");
        let s = s_of_m(&Matroid::uniform(1, 1).unwrap()).unwrap();
        assert_eq!(s.points().iter().next().unwrap(), &vec![0]);
        assert!(s_of_m(&Matroid::uniform(2, 2).unwrap()).unwrap().is_empty());
        assert_eq!(s_of_m(&Matroid::uniform(2, 4).unwrap()).unwrap().len(), 4);
    }

    #[test]
    fn li_class_fixtures() {
        assert_eq!(li_class(&para34()).unwrap().poly(), &t(4, "t3 + t4"));
        assert!(li_class(&Matroid::uniform(1, 3).unwrap()).unwrap().poly().is_one());
        assert_eq!(
            li_class(&Matroid::uniform(2, 4).unwrap()).unwrap().poly(),
            &t(4, "t1 + t2 + t3 + t4")
        );
    }

    #[test]
    fn cross_check_fixtures() {
        for m in [para34(), Matroid::uniform(2, 4).unwrap(), Matroid::uniform(1, 2).unwrap()] {
            let c = cross_check(&m).unwrap();
            assert!(c.equal, "{} vs {}", c.li, c.via_k);
        }
        assert_eq!(cross_check(&para34()).unwrap().via_k.poly(), &t(4, "t3 + t4"));
        let m = Matroid::direct_sum(&Matroid::uniform(1, 1).unwrap(), &Matroid::uniform(0, 1).unwrap())
            .unwrap();
        assert_eq!(cross_check(&m), Err(ProjError::Loops(vec![2])));
        assert_eq!(
            cross_check(&Matroid::uniform(2, 2).unwrap()),
            Err(ProjError::Disconnected(2))
        );
    }

    #[test]
    fn reduction_drops_high_powers() {
        let c = PnClass::reduce(&t(2, "t1^2 + t1*t2"), 2).unwrap();
        assert_eq!(c.poly(), &t(2, "t1*t2"));
    }
}
