#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use toric_orbifold::lattice::IntMatrix;
use toric_orbifold::{CrClass, Monomial, Polynomial, SectorId, ToricOrbifold};

/// Random monomial in `m` variables of total degree exactly `d`.
pub fn random_monomial<R: Rng>(rng: &mut R, m: usize, d: u32) -> Monomial {
    let mut e = vec![0u32; m];
    for _ in 0..d {
        e[rng.gen_range(0..m)] += 1;
    }
    Monomial::new(e)
}

/// Up to four terms of degree at most `max_deg`, coefficients in [-9, 9].
pub fn random_polynomial<R: Rng>(rng: &mut R, m: usize, max_deg: u32) -> Polynomial {
    let terms = rng.gen_range(1..=4);
    Polynomial::from_terms(
        m,
        (0..terms).map(|_| {
            let d = rng.gen_range(0..=max_deg);
            (
                random_monomial(rng, m, d),
                BigInt::from(rng.gen_range(-9..=9)),
            )
        }),
    )
}

pub fn random_homogeneous_polynomial<R: Rng>(rng: &mut R, m: usize, d: u32) -> Polynomial {
    let terms = rng.gen_range(1..=3);
    Polynomial::from_terms(
        m,
        (0..terms).map(|_| {
            (
                random_monomial(rng, m, d),
                BigInt::from(rng.gen_range(-9..=9)),
            )
        }),
    )
}

fn random_sector<R: Rng>(rng: &mut R, orb: &ToricOrbifold) -> SectorId {
    SectorId(rng.gen_range(0..orb.sectors().len()))
}

/// Half of the time a single-sector homogeneous class, otherwise a sum over
/// one to three random sectors of random polynomials of degree at most 3.
pub fn random_class<R: Rng>(rng: &mut R, orb: &ToricOrbifold) -> CrClass {
    let m = orb.num_vars();
    if rng.gen_bool(0.5) {
        let g = random_sector(rng, orb);
        let d = rng.gen_range(0..=3);
        return CrClass::single(orb, g, random_homogeneous_polynomial(rng, m, d)).unwrap();
    }
    let parts = rng.gen_range(1..=3);
    CrClass::from_components(
        orb,
        (0..parts).map(|_| (random_sector(rng, orb), random_polynomial(rng, m, 3))),
    )
    .unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::new(rows, cols, entries).unwrap()
}

/// All `k`-subsets of `0..n` as index vectors.
pub fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    for rest in index_subsets(n - 1, k) {
        out.push(rest);
    }
    for mut rest in index_subsets(n - 1, k - 1) {
        rest.push(n - 1);
        out.push(rest);
    }
    out
}

/// Elementary divisors from determinantal divisors: `d_1 ... d_k` is the
/// gcd of all `k x k` minors. Independent of the reduction algorithm.
pub fn elementary_divisors_by_minors(a: &IntMatrix) -> Vec<BigInt> {
    use num_integer::Integer;
    use num_traits::Zero;
    let r = a.rows().min(a.cols());
    let mut prefix = vec![BigInt::from(1)];
    for k in 1..=r {
        let mut g = BigInt::zero();
        for rows in index_subsets(a.rows(), k) {
            for cols in index_subsets(a.cols(), k) {
                let entries = rows
                    .iter()
                    .flat_map(|&i| cols.iter().map(move |&j| a[(i, j)].clone()))
                    .collect();
                let minor = IntMatrix::new(k, k, entries)
                    .unwrap()
                    .determinant()
                    .unwrap();
                g = g.gcd(&minor);
            }
        }
        prefix.push(g);
    }
    (1..=r)
        .map(|k| {
            if prefix[k].is_zero() {
                BigInt::zero()
            } else {
                &prefix[k] / &prefix[k - 1]
            }
        })
        .collect()
}
