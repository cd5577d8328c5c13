//! Exact rational feasibility LP (phase one of the simplex method).
//!
//! Finds `x >= 0` with `A x = b`. Pivoting follows Bland's rule, so the
//! method terminates without any anti-cycling perturbation.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::lattice::Rational;

/// Returns a nonnegative solution of `A x = b`, or `None` if there is none.
pub fn find_nonnegative_solution(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    assert_eq!(b.len(), m);
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }

    // Tableau columns: n structural, m artificial, then the rhs.
    let width = n + m + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), n);
        let flip = rhs.is_negative();
        let mut r = vec![Rational::zero(); width];
        for (j, x) in row.iter().enumerate() {
            r[j] = if flip { -x.clone() } else { x.clone() };
        }
        r[n + i] = Rational::from_integer(1.into());
        r[width - 1] = if flip { -rhs.clone() } else { rhs.clone() };
        tab.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of "minimize sum of artificials".
    let mut cost = vec![Rational::zero(); width];
    for r in &tab {
        for j in 0..n {
            cost[j] -= &r[j];
        }
        cost[width - 1] -= &r[width - 1];
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &tab[i][width - 1] / &tab[i][enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (row, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut cost, row, enter);
        basis[row] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = tab[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], row: usize, col: usize) {
    let inv = tab[row][col].recip();
    for x in tab[row].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = tab[row].clone();
    for (i, r) in tab.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (x, p) in r.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
    }
}
