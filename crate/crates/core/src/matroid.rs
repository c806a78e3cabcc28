//! Matroids given by an explicit list of bases, with the rank, greedy-basis
//! and connectivity queries the class formulas need.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

/// Largest ground set a [`Matroid`] may have.
pub const MAX_GROUND_SET: usize = 20;

/// Subset of `{1..n}` as a bitmask (bit `j-1` for element `j`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub fn empty() -> Subset {
        Subset(0)
    }

    pub fn from_bits(bits: u32) -> Subset {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Panics on element 0 or above [`MAX_GROUND_SET`].
    pub fn from_elements(elems: &[usize]) -> Subset {
        let mut bits = 0u32;
        for &e in elems {
            assert!((1..=MAX_GROUND_SET).contains(&e), "element {} out of range", e);
            bits |= 1 << (e - 1);
        }
        Subset(bits)
    }

    /// `{1..n}`.
    pub fn full(n: usize) -> Subset {
        Subset(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn elements(self) -> Vec<usize> {
        (1..=32).filter(|&j| self.contains(j)).collect()
    }

    pub fn contains(self, j: usize) -> bool {
        j >= 1 && j <= 32 && self.0 & (1 << (j - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, j: usize) -> Subset {
        Subset(self.0 | (1 << (j - 1)))
    }

    pub fn without(self, j: usize) -> Subset {
        Subset(self.0 & !(1 << (j - 1)))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// All subsets of `{1..n}` of size `k`, in increasing bitmask order.
    pub fn all_of_size(n: usize, k: usize) -> Vec<Subset> {
        (0..(1u32 << n))
            .filter(|b| b.count_ones() as usize == k)
            .map(Subset)
            .collect()
    }

    /// Parse `1,3` or `{1,3}`.
    pub fn parse(s: &str) -> Result<Subset, String> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        if inner.trim().is_empty() {
            return Ok(Subset::empty());
        }
        let mut elems = Vec::new();
        for part in inner.split(',') {
            let e: usize = part
                .trim()
                .parse()
                .map_err(|_| format!("bad element {:?} in {:?}", part.trim(), s))?;
            if !(1..=MAX_GROUND_SET).contains(&e) {
                return Err(format!("element {} out of range", e));
            }
            elems.push(e);
        }
        Ok(Subset::from_elements(&elems))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// An arrangement `(w_1, ..., w_n)` of `{1..n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Permutation, MatroidError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &w in &word {
            if w == 0 || w > n || seen[w] {
                return Err(MatroidError::Malformed(format!(
                    "{:?} is not a permutation of 1..{}",
                    word, n
                )));
            }
            seen[w] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The next arrangement in lexicographic order, if any.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut w = self.0.clone();
        let n = w.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && w[i - 1] >= w[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while w[j] <= w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
        Some(Permutation(w))
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(n)];
        while let Some(next) = out.last().unwrap().next_lex() {
            out.push(next);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("the basis collection is empty")]
    EmptyBases,
    #[error("basis {basis} has {found} elements, expected rank {rank}")]
    WrongCardinality {
        basis: Subset,
        found: usize,
        rank: usize,
    },
    #[error("element {element} is outside the ground set 1..{n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("basis {0} is listed twice")]
    DuplicateBasis(Subset),
    #[error(
        "basis exchange fails: removing {x} from {b1} admits no y in {b2} \\ {b1} with {b1} - {x} + y a basis"
    )]
    ExchangeAxiomViolation { b1: Subset, b2: Subset, x: usize },
    #[error("matrix has rank {actual}, expected {expected}")]
    RankDeficient { actual: usize, expected: usize },
    #[error("{0} is not a basis")]
    NotABasis(Subset),
    #[error("ground set of size {0} exceeds the supported maximum {MAX_GROUND_SET}")]
    GroundSetTooLarge(usize),
    #[error("{0}")]
    Malformed(String),
}

/// A matroid on `{1..n}` of rank `r`, stored as its sorted list of bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matroid {
    n: usize,
    r: usize,
    bases: Vec<Subset>,
}

impl Matroid {
    /// Validate cardinalities, duplicates and the basis-exchange axiom.
    pub fn from_bases(n: usize, r: usize, bases: &[Vec<usize>]) -> Result<Matroid, MatroidError> {
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        if bases.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        let mut set = BTreeSet::new();
        for b in bases {
            if let Some(&e) = b.iter().find(|&&e| e == 0 || e > n) {
                return Err(MatroidError::ElementOutOfRange { element: e, n });
            }
            let s = Subset::from_elements(b);
            if s.len() != r || b.len() != r {
                return Err(MatroidError::WrongCardinality {
                    basis: s,
                    found: b.len(),
                    rank: r,
                });
            }
            if !set.insert(s) {
                return Err(MatroidError::DuplicateBasis(s));
            }
        }
        Self::from_subsets(n, r, set)
    }

    fn from_subsets(n: usize, r: usize, set: BTreeSet<Subset>) -> Result<Matroid, MatroidError> {
        let bases: Vec<Subset> = set.into_iter().collect();
        for &b1 in &bases {
            for &b2 in &bases {
                for x in b1.difference(b2).elements() {
                    let ok = b2
                        .difference(b1)
                        .elements()
                        .into_iter()
                        .any(|y| bases.binary_search(&b1.without(x).with(y)).is_ok());
                    if !ok {
                        return Err(MatroidError::ExchangeAxiomViolation { b1, b2, x });
                    }
                }
            }
        }
        Ok(Matroid { n, r, bases })
    }

    /// The column matroid of a matrix with exact rational entries. The rank
    /// defaults to the number of rows and must equal the matrix rank.
    pub fn from_matrix(
        rows: &[Vec<BigRational>],
        rank: Option<usize>,
    ) -> Result<Matroid, MatroidError> {
        let r = rank.unwrap_or(rows.len());
        let n = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != n) {
            return Err(MatroidError::Malformed("matrix rows differ in length".into()));
        }
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        let all: Vec<usize> = (0..n).collect();
        let actual = column_rank(rows, &all);
        if actual != r {
            return Err(MatroidError::RankDeficient {
                actual,
                expected: r,
            });
        }
        let mut set = BTreeSet::new();
        for s in Subset::all_of_size(n, r) {
            let cols: Vec<usize> = s.elements().iter().map(|e| e - 1).collect();
            if column_rank(rows, &cols) == r {
                set.insert(s);
            }
        }
        if set.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        Ok(Matroid { n, r, bases: set.into_iter().collect() })
    }

    /// `U_{r,n}`: every `r`-subset is a basis.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid, MatroidError> {
        if r > n {
            return Err(MatroidError::Malformed(format!("U_{{{},{}}} needs r <= n", r, n)));
        }
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        Ok(Matroid {
            n,
            r,
            bases: Subset::all_of_size(n, r),
        })
    }

    /// Schubert matroid: the `r`-subsets that are componentwise at most the
    /// defining set once both are sorted (Gale order).
    pub fn schubert(r: usize, n: usize, defining: &[usize]) -> Result<Matroid, MatroidError> {
        if defining.len() != r || defining.iter().any(|&e| e == 0 || e > n) {
            return Err(MatroidError::Malformed(format!(
                "defining set {:?} is not an {}-subset of 1..{}",
                defining, r, n
            )));
        }
        let c = Subset::from_elements(defining);
        if c.len() != r {
            return Err(MatroidError::Malformed("defining set has repeats".into()));
        }
        let c_el = c.elements();
        let bases = Subset::all_of_size(n, r)
            .into_iter()
            .filter(|b| b.elements().iter().zip(&c_el).all(|(x, y)| x <= y))
            .collect();
        Ok(Matroid { n, r, bases })
    }

    /// `M1 + M2` with the ground set of `M2` placed after that of `M1`.
    pub fn direct_sum(m1: &Matroid, m2: &Matroid) -> Result<Matroid, MatroidError> {
        let n = m1.n + m2.n;
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        let mut bases = Vec::with_capacity(m1.bases.len() * m2.bases.len());
        for b1 in &m1.bases {
            for b2 in &m2.bases {
                bases.push(Subset(b1.0 | (b2.0 << m1.n)));
            }
        }
        bases.sort();
        Ok(Matroid {
            n,
            r: m1.r + m2.r,
            bases,
        })
    }

    /// Image under the relabeling `j -> sigma[j-1]`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Matroid, MatroidError> {
        if sigma.len() != self.n {
            return Err(MatroidError::Malformed(format!(
                "relabeling has length {}, ground set has {}",
                sigma.len(),
                self.n
            )));
        }
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .map(|b| {
                let els: Vec<usize> = b.elements().iter().map(|&e| sigma.word()[e - 1]).collect();
                Subset::from_elements(&els)
            })
            .collect();
        bases.sort();
        Ok(Matroid {
            n: self.n,
            r: self.r,
            bases,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank_total(&self) -> usize {
        self.r
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn rank(&self, s: Subset) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(s).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.bases.iter().any(|b| s.is_subset_of(*b))
    }

    /// Scan `w` left to right keeping each element that stays independent.
    pub fn lex_first_basis(&self, w: &Permutation) -> Subset {
        let mut kept = Subset::empty();
        for &x in w.word() {
            if kept.len() == self.r {
                break;
            }
            let next = kept.with(x);
            if self.is_independent(next) {
                kept = next;
            }
        }
        kept
    }

    pub fn loops(&self) -> Vec<usize> {
        let union = self.bases.iter().fold(Subset::empty(), |a, b| a.union(*b));
        (1..=self.n).filter(|&j| !union.contains(j)).collect()
    }

    pub fn coloops(&self) -> Vec<usize> {
        let inter = self
            .bases
            .iter()
            .fold(self.ground_set(), |a, b| a.intersection(*b));
        inter.elements()
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// Finest partition of the ground set into separators, i.e. sets `S` with
    /// `rk(S) + rk(S^c) = r`. Loops and coloops come out as singletons.
    pub fn connected_components(&self) -> Vec<Subset> {
        let n = self.n;
        let full = self.ground_set();
        let separators: Vec<Subset> = (1..(1u32 << n).saturating_sub(1))
            .map(Subset)
            .filter(|&s| self.rank(s) + self.rank(full.difference(s)) == self.r)
            .collect();
        let mut comp: Vec<usize> = (0..=n).collect();
        fn find(comp: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while comp[x] != x {
                comp[x] = comp[comp[x]];
                x = comp[x];
            }
            x
        }
        for a in 1..=n {
            for b in a + 1..=n {
                let split = separators.iter().any(|s| s.contains(a) != s.contains(b));
                if !split {
                    let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                    comp[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Subset> = Default::default();
        for j in 1..=n {
            let root = find(&mut comp, j);
            let g = groups.entry(root).or_default();
            *g = g.with(j);
        }
        groups.into_values().collect()
    }

    /// Codimension `r(n-r) - (n-e)` of the orbit closure, `e` the number of
    /// connected components.
    pub fn codim(&self) -> i64 {
        let e = self.connected_components().len() as i64;
        let (r, n) = (self.r as i64, self.n as i64);
        r * (n - r) - (n - e)
    }

    /// Basis list as 1-indexed element vectors.
    pub fn basis_lists(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|b| b.elements()).collect()
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bases.iter().map(|b| b.to_string()).collect();
        write!(f, "M(n={}, r={}; {})", self.n, self.r, parts.join(" "))
    }
}

/// Rank of the chosen columns by exact Gaussian elimination.
fn column_rank(rows: &[Vec<BigRational>], cols: &[usize]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    let (nr, nc) = (m.len(), cols.len());
    let mut rank = 0;
    for c in 0..nc {
        let Some(p) = (rank..nr).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in 0..nr {
            if i != rank && !m[i][c].is_zero() {
                let factor = &m[i][c] / &pivot;
                for k in c..nc {
                    let delta = &factor * &m[rank][k];
                    m[i][k] -= delta;
                }
            }
        }
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use proptest::prelude::*;

    pub(crate) fn para34() -> Matroid {
        Matroid::from_bases(4, 2, &[vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4]])
            .unwrap()
    }

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e)
    }

    fn perm(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn matrix(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn basis_validation() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().bases().len(), 6);
        assert_eq!(para34().bases().len(), 5);
        let err = Matroid::from_bases(4, 2, &[vec![1, 2], vec![3, 4]]).unwrap_err();
        assert!(matches!(err, MatroidError::ExchangeAxiomViolation { .. }));
        assert_eq!(
            Matroid::from_bases(4, 2, &[]).unwrap_err(),
            MatroidError::EmptyBases
        );
        assert!(matches!(
            Matroid::from_bases(4, 2, &[vec![1, 2], vec![2, 1]]),
            Err(MatroidError::DuplicateBasis(_))
        ));
        assert!(matches!(
            Matroid::from_bases(4, 2, &[vec![1, 5]]),
            Err(MatroidError::ElementOutOfRange { element: 5, n: 4 })
        ));
    }

    #[test]
    fn matrix_ingestion() {
        let m = Matroid::from_matrix(&matrix(&[&[1, 0, 1, 1], &[0, 1, 1, 1]]), None).unwrap();
        let expected: Vec<Subset> = Subset::all_of_size(4, 2)
            .into_iter()
            .filter(|&b| b != s(&[3, 4]))
            .collect();
        assert_eq!(m.bases(), expected.as_slice());
        let id = Matroid::from_matrix(&matrix(&[&[1, 0], &[0, 1]]), None).unwrap();
        assert_eq!(id, Matroid::uniform(2, 2).unwrap());
        assert_eq!(
            Matroid::from_matrix(&matrix(&[&[1, 2, 3, 4]]), Some(2)).unwrap_err(),
            MatroidError::RankDeficient {
                actual: 1,
                expected: 2
            }
        );
    }

    #[test]
    fn rank_examples() {
        let m = para34();
        assert_eq!(m.rank(s(&[3, 4])), 1);
        assert_eq!(m.rank(Subset::empty()), 0);
        assert_eq!(Matroid::uniform(2, 4).unwrap().rank(s(&[1, 2, 3])), 2);
    }

    #[test]
    fn greedy_bases_of_parallel_example() {
        let m = para34();
        assert_eq!(m.lex_first_basis(&perm(&[3, 4, 1, 2])), s(&[1, 3]));
        assert_eq!(m.lex_first_basis(&perm(&[4, 3, 2, 1])), s(&[2, 4]));
        assert_eq!(m.lex_first_basis(&perm(&[1, 4, 2, 3])), s(&[1, 4]));
        let all: BTreeSet<Subset> = Permutation::all(4)
            .iter()
            .map(|w| m.lex_first_basis(w))
            .collect();
        assert_eq!(all.len(), 5);
    }

    #[test]
    fn components() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().connected_components().len(), 1);
        let with_loop = Matroid::direct_sum(
            &Matroid::uniform(2, 3).unwrap(),
            &Matroid::uniform(0, 1).unwrap(),
        )
        .unwrap();
        assert_eq!(
            with_loop.connected_components(),
            vec![s(&[1, 2, 3]), s(&[4])]
        );
        assert_eq!(with_loop.loops(), vec![4]);
        let coloops = Matroid::direct_sum(
            &Matroid::uniform(1, 1).unwrap(),
            &Matroid::uniform(1, 1).unwrap(),
        )
        .unwrap();
        assert_eq!(coloops.connected_components().len(), 2);
        assert_eq!(coloops.coloops(), vec![1, 2]);
        assert_eq!(para34().connected_components().len(), 1);
        assert_eq!(Matroid::uniform(2, 4).unwrap().codim(), 1);
    }

    #[test]
    fn constructors() {
        let sum = Matroid::direct_sum(
            &Matroid::uniform(2, 3).unwrap(),
            &Matroid::uniform(0, 1).unwrap(),
        )
        .unwrap();
        assert_eq!(sum.basis_lists(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let m = para34();
        assert_eq!(m.relabel(&perm(&[1, 2, 4, 3])).unwrap(), m);
        let sch = Matroid::schubert(2, 4, &[1, 4]).unwrap();
        assert_eq!(sch.basis_lists(), vec![vec![1, 2], vec![1, 3], vec![1, 4]]);
        let sch = Matroid::schubert(2, 4, &[1, 3]).unwrap();
        assert_eq!(sch.basis_lists(), vec![vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn permutations_enumerate_symmetric_group() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(1).len(), 1);
        assert!(Permutation::new(vec![1, 1]).is_err());
    }

    /// Greedy basis versus the rank characterization: B = B(w) exactly when
    /// rk{w_1..w_i} counts the elements of B among w_1..w_i for every i.
    fn rank_condition_holds(m: &Matroid, w: &Permutation, b: Subset) -> bool {
        let mut prefix = Subset::empty();
        for &x in w.word() {
            prefix = prefix.with(x);
            if m.rank(prefix) != prefix.intersection(b).len() {
                return false;
            }
        }
        true
    }

    fn small_matroids() -> Vec<Matroid> {
        let mut out = Vec::new();
        for n in 1..=5 {
            for r in 0..=n {
                out.push(Matroid::uniform(r, n).unwrap());
                for c in Subset::all_of_size(n, r) {
                    out.push(Matroid::schubert(r, n, &c.elements()).unwrap());
                }
            }
        }
        out.push(para34());
        out
    }

    #[test]
    fn greedy_matches_rank_characterization() {
        for m in small_matroids() {
            for w in Permutation::all(m.n()) {
                let b = m.lex_first_basis(&w);
                assert!(m.is_basis(b), "{} {}", m, w);
                assert!(rank_condition_holds(&m, &w, b));
                let others = m.bases().iter().filter(|&&c| c != b);
                for &c in others {
                    assert!(!rank_condition_holds(&m, &w, c));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn rank_is_monotone_and_submodular(idx in 0usize..60, a in 0u32..32, b in 0u32..32) {
            let family = small_matroids();
            let m = &family[idx % family.len()];
            let mask = Subset::full(m.n()).bits();
            let (a, b) = (Subset::from_bits(a & mask), Subset::from_bits(b & mask));
            let union = a.union(b);
            prop_assert!(m.rank(a) <= m.rank(union));
            prop_assert!(m.rank(a) + m.rank(b) >= m.rank(union) + m.rank(a.intersection(b)));
        }

        #[test]
        fn matrix_rank_matches_elimination(
            entries in proptest::collection::vec(-3i64..4, 18),
            r in 1usize..4,
            n in 3usize..7,
            cols in 0u32..64,
        ) {
            let rows: Vec<Vec<BigRational>> = (0..r)
                .map(|i| (0..n).map(|j| rat(entries[(i * 6 + j) % 18])).collect())
                .collect();
            let all: Vec<usize> = (0..n).collect();
            let full_rank = column_rank(&rows, &all);
            prop_assume!(full_rank == r);
            let m = Matroid::from_matrix(&rows, None).unwrap();
            let chosen = Subset::from_bits(cols & Subset::full(n).bits());
            let idx: Vec<usize> = chosen.elements().iter().map(|e| e - 1).collect();
            prop_assert_eq!(m.rank(chosen), column_rank(&rows, &idx));
        }
    }
}
