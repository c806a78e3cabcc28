//! Exact Phase-I simplex for `A x = b, x >= 0` over the rationals.
//!
//! Bland's rule keeps it from cycling. When the system is infeasible the
//! final tableau yields a Farkas vector `y` with `y^T A <= 0` and
//! `y^T b > 0`, which the caller can check independently.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A vertex solution.
    Feasible(Vec<BigRational>),
    /// A Farkas vector, one entry per row.
    Infeasible(Vec<BigRational>),
}

/// Decide feasibility of `A x = b, x >= 0`. `a` is row-major with every row
/// of the same length.
pub fn solve_feasibility(a: &[Vec<BigRational>], b: &[BigRational]) -> Feasibility {
    let m = a.len();
    assert_eq!(m, b.len(), "row count of A and b differ");
    let k = a.first().map_or(0, |row| row.len());
    let width = k + m + 1;
    let rhs = k + m;
    let mut sign = vec![BigRational::one(); m];
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![BigRational::zero(); width];
        let flip = b[i].is_negative();
        if flip {
            sign[i] = -BigRational::one();
        }
        for j in 0..k {
            row[j] = if flip { -&a[i][j] } else { a[i][j].clone() };
        }
        row[k + i] = BigRational::one();
        row[rhs] = b[i].abs();
        tab.push(row);
    }
    // reduced costs of the phase-one objective sum(artificials)
    let mut cost = vec![BigRational::zero(); width];
    for row in &tab {
        for j in 0..k {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }
    let mut basis: Vec<usize> = (k..k + m).collect();

    loop {
        let Some(enter) = (0..k + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (p, _) = leave.expect("phase-one objective is bounded below");
        pivot(&mut tab, &mut cost, p, enter);
        basis[p] = enter;
    }

    if cost[rhs].is_zero() {
        let mut x = vec![BigRational::zero(); k];
        for (i, &j) in basis.iter().enumerate() {
            if j < k {
                x[j] = tab[i][rhs].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // reduced cost of artificial i is 1 - y_i
        let y = (0..m)
            .map(|i| (BigRational::one() - &cost[k + i]) * &sign[i])
            .collect();
        Feasibility::Infeasible(y)
    }
}

fn pivot(tab: &mut [Vec<BigRational>], cost: &mut [BigRational], p: usize, q: usize) {
    let inv = tab[p][q].recip();
    for v in tab[p].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    let prow = tab[p].clone();
    let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
    let eliminate = |row: &mut Vec<BigRational>| {
        let f = row[q].clone();
        if f.is_zero() {
            return;
        }
        for &j in &nz {
            let d = &f * &prow[j];
            row[j] -= d;
        }
    };
    for (i, row) in tab.iter_mut().enumerate() {
        if i != p {
            eliminate(row);
        }
    }
    let mut c = cost.to_vec();
    eliminate(&mut c);
    cost.clone_from_slice(&c);
}

/// Check `x >= 0` and `A x = b`.
pub fn verify_solution(a: &[Vec<BigRational>], b: &[BigRational], x: &[BigRational]) -> bool {
    x.iter().all(|v| !v.is_negative())
        && a.iter().zip(b).all(|(row, bi)| {
            let s: BigRational = row.iter().zip(x).map(|(aij, xj)| aij * xj).sum();
            &s == bi
        })
}

/// Check `y^T A <= 0` and `y^T b > 0`.
pub fn verify_farkas(a: &[Vec<BigRational>], b: &[BigRational], y: &[BigRational]) -> bool {
    let k = a.first().map_or(0, |row| row.len());
    let yb: BigRational = y.iter().zip(b).map(|(yi, bi)| yi * bi).sum();
    yb.is_positive()
        && (0..k).all(|j| {
            let s: BigRational = a.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
            !s.is_positive()
        })
}
