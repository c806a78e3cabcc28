#![allow(dead_code, unused_imports)]

use std::collections::BTreeSet;

use matroid_kclass::exactpoly::{Ambient, BigRational, LaurentPoly, Partition};
use matroid_kclass::matroid::{Matroid, Permutation, Subset};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use matroid_kclass::selftest::{para34, u23_plus_loop};

pub fn poly(a: Ambient, s: &str) -> LaurentPoly {
    LaurentPoly::parse(a, s).unwrap()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn uniforms(rmax: usize, nmax: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        for r in 1..=rmax.min(n) {
            out.push(Matroid::uniform(r, n).unwrap());
        }
    }
    out
}

/// Every Schubert matroid, one per defining set.
pub fn schuberts(rmax: usize, nmax: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        for r in 1..=rmax.min(n) {
            for s in Subset::all_of_size(n, r) {
                out.push(Matroid::schubert(r, n, &s.elements()).unwrap());
            }
        }
    }
    out
}

/// Direct sums of two uniform matroids (loops and coloops included).
pub fn direct_sums(rmax: usize, nmax: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for n1 in 1..nmax {
        for n2 in 1..=(nmax - n1) {
            for r1 in 0..=n1 {
                for r2 in 0..=n2 {
                    let r = r1 + r2;
                    if r == 0 || r > rmax {
                        continue;
                    }
                    let m1 = Matroid::uniform(r1, n1).unwrap();
                    let m2 = Matroid::uniform(r2, n2).unwrap();
                    out.push(Matroid::direct_sum(&m1, &m2).unwrap());
                }
            }
        }
    }
    out
}

/// A random full-rank `r x n` rational matrix with small entries and a fair
/// number of zeros, and its column matroid.
pub fn random_realization(rng: &mut ChaCha8Rng, r: usize, n: usize) -> (Vec<Vec<BigRational>>, Matroid) {
    loop {
        let rows: Vec<Vec<BigRational>> = (0..r)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.3) {
                            q(0, 1)
                        } else {
                            q(rng.gen_range(-3..=3), rng.gen_range(1..=3))
                        }
                    })
                    .collect()
            })
            .collect();
        if let Ok(m) = Matroid::from_matrix(&rows, Some(r)) {
            return (rows, m);
        }
    }
}

pub fn random_realizations(rng: &mut ChaCha8Rng, count: usize, rmax: usize, nmax: usize) -> Vec<Matroid> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=nmax);
            let r = rng.gen_range(1..=rmax.min(n));
            random_realization(rng, r, n).1
        })
        .collect()
}

pub fn dedup(ms: Vec<Matroid>) -> Vec<Matroid> {
    let mut seen = BTreeSet::new();
    ms.into_iter()
        .filter(|m| seen.insert((m.n(), m.rank_total(), m.basis_lists())))
        .collect()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut w: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        w.swap(i, j);
    }
    Permutation::new(w).unwrap()
}

/// Random rational point with pairwise distinct, nonzero `t` values, `u`
/// block first.
pub fn random_point(rng: &mut ChaCha8Rng, a: Ambient) -> Vec<BigRational> {
    let mut point: Vec<BigRational> = (0..a.r)
        .map(|_| q(rng.gen_range(-9..=9), rng.gen_range(1..=7)))
        .collect();
    let mut ts: Vec<BigRational> = Vec::new();
    while ts.len() < a.n {
        let v = q(rng.gen_range(1..=40) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=7));
        if !ts.contains(&v) {
            ts.push(v);
        }
    }
    point.extend(ts);
    point
}

/// `K(M)` at a point, summed permutation by permutation in plain rational
/// arithmetic.
pub fn k_numeric(m: &Matroid, point: &[BigRational]) -> BigRational {
    let (r, n) = (m.rank_total(), m.n());
    let u = &point[..r];
    let t = &point[r..];
    let one = q(1, 1);
    let mut total = q(0, 1);
    for w in Permutation::all(n) {
        let b = m.lex_first_basis(&w);
        let mut term = one.clone();
        for j in 1..=n {
            if !b.contains(j) {
                for ui in u {
                    term *= &one - ui * &t[j - 1];
                }
            }
        }
        for pair in w.word().windows(2) {
            term /= &one - &t[pair[1] - 1] / &t[pair[0] - 1];
        }
        total += term;
    }
    total
}

/// The Chow permutation sum at a point.
pub fn chow_numeric(m: &Matroid, point: &[BigRational]) -> BigRational {
    let (r, n) = (m.rank_total(), m.n());
    let u = &point[..r];
    let t = &point[r..];
    let mut total = q(0, 1);
    for w in Permutation::all(n) {
        let b = m.lex_first_basis(&w);
        let mut term = q(1, 1);
        for j in 1..=n {
            if !b.contains(j) {
                for ui in u {
                    term *= ui + &t[j - 1];
                }
            }
        }
        for pair in w.word().windows(2) {
            term /= &t[pair[1] - 1] - &t[pair[0] - 1];
        }
        total += term;
    }
    total
}

/// Schur polynomial in `u_1..u_r` by summing over semistandard tableaux.
pub fn schur_by_tableaux(a: Ambient, lambda: &Partition) -> LaurentPoly {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut fill = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
    let mut out = LaurentPoly::zero(a);
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        fill: &mut Vec<Vec<usize>>,
        a: Ambient,
        out: &mut LaurentPoly,
    ) {
        if k == cells.len() {
            let mut m = LaurentPoly::one(a);
            for &(i, j) in cells {
                m = &m * &LaurentPoly::u(a, fill[i][j]);
            }
            *out = &*out + &m;
            return;
        }
        let (i, j) = cells[k];
        let lo = {
            let left = if j > 0 { fill[i][j - 1] } else { 1 };
            let up = if i > 0 { fill[i - 1][j] + 1 } else { 1 };
            left.max(up)
        };
        for v in lo..=a.r {
            fill[i][j] = v;
            rec(k + 1, cells, fill, a, out);
        }
    }
    rec(0, &cells, &mut fill, a, &mut out);
    out
}
