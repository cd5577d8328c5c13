mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use toric_orbifold::chen_ruan::cr_multiply;
use toric_orbifold::lattice::{
    is_free_cokernel, kernel_basis, snf, solve_congruence_group, IntMatrix, Rational,
};
use toric_orbifold::nh_restriction::{check_homomorphism, nh_multiply, restrict};
use toric_orbifold::polytope::subsets_of_size;
use toric_orbifold::stanley_reisner::{
    face_pullback, face_pushforward, gkm_membership, reduce, sr_to_pw, SrPresentation,
};
use toric_orbifold::{catalog, CrClass, ToricOrbifold};

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-6i64..=6, rows * cols).prop_map(move |v| {
        IntMatrix::new(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

fn any_shape() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix_strategy(r, c))
}

proptest! {
    #[test]
    fn snf_recomposes_and_is_unimodular(a in any_shape()) {
        let s = snf(&a);
        prop_assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        prop_assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let diag = s.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && (&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(diag, elementary_divisors_by_minors(&a));
    }

    #[test]
    fn kernel_is_saturated(a in any_shape()) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.cols(), a.cols() - a.rank());
        if k.cols() > 0 {
            let prod = a.mul(&k).unwrap();
            prop_assert!(prod.entries().iter().all(Zero::is_zero));
            prop_assert!(snf(&k).diagonal().iter().all(One::is_one));
        }
    }

    #[test]
    fn free_cokernel_matches_minors(a in any_shape()) {
        let by_minors = elementary_divisors_by_minors(&a).iter().all(|x| x.is_zero() || x.is_one());
        prop_assert_eq!(is_free_cokernel(&a), by_minors);
    }

    #[test]
    fn congruence_group_is_a_group(a in (1usize..=3).prop_flat_map(|n| matrix_strategy(n, n))) {
        let det = a.determinant().unwrap();
        prop_assume!(!det.is_zero());
        let group = solve_congruence_group(&a).unwrap();
        prop_assert_eq!(BigInt::from(group.len()), det.abs());
        let set: std::collections::BTreeSet<_> = group.iter().cloned().collect();
        prop_assert_eq!(set.len(), group.len());
        let frac = |r: Rational| &r - r.floor();
        for x in &group {
            prop_assert!(a.apply_rational(x).iter().all(|y| y.is_integer()));
            let neg: Vec<Rational> = x.iter().map(|c| frac(-c.clone())).collect();
            prop_assert!(set.contains(&neg));
        }
        // closure is quadratic; sample against the first few elements
        for x in group.iter().take(4) {
            for y in &group {
                let s: Vec<Rational> = x.iter().zip(y).map(|(p, q)| frac(p + q)).collect();
                prop_assert!(set.contains(&s));
            }
        }
    }

    #[test]
    fn congruence_group_matches_brute_force(a in (1usize..=2).prop_flat_map(|n| matrix_strategy(n, n))) {
        let det = a.determinant().unwrap();
        prop_assume!(!det.is_zero());
        // every solution has denominators dividing |det|
        let d: i64 = det.abs().try_into().unwrap();
        let n = a.rows();
        let mut brute = Vec::new();
        let mut idx = vec![0i64; n];
        loop {
            let x: Vec<Rational> = idx.iter().map(|&j| Rational::new(j.into(), d.into())).collect();
            if a.apply_rational(&x).iter().all(|y| y.is_integer()) {
                brute.push(x);
            }
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < d { break; }
                idx[k] = 0;
                k += 1;
            }
            if k == n { break; }
        }
        brute.sort();
        prop_assert_eq!(solve_congruence_group(&a).unwrap(), brute);
    }
}

#[test]
fn sr_quotient_is_a_ring_morphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, p) in catalog::all() {
        let fc = p.face_complex().unwrap();
        let m = fc.num_facets();
        let sr = SrPresentation::untwisted(&fc);
        for _ in 0..40 {
            let a = random_polynomial(&mut rng, m, 3);
            let b = random_polynomial(&mut rng, m, 3);
            let ra = reduce(&a, &sr);
            assert_eq!(reduce(&ra, &sr), ra, "{name}");
            assert_eq!(
                reduce(&a.mul(&b), &sr),
                reduce(&ra.mul(&reduce(&b, &sr)), &sr),
                "{name}"
            );
            let pa = sr_to_pw(&ra, &fc);
            assert!(gkm_membership(&pa, &fc).unwrap(), "{name}");
            let prod = sr_to_pw(&reduce(&a.mul(&b), &sr), &fc);
            assert_eq!(prod, pa.mul(&sr_to_pw(&b, &fc)), "{name}");
        }
    }
}

#[test]
fn projection_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, p) in catalog::all() {
        let fc = p.face_complex().unwrap();
        let m = fc.num_facets();
        // all nested pairs of faces tau ⊆ tau'
        let faces: Vec<_> = (0..=fc.dim())
            .flat_map(|k| subsets_of_size(m, k))
            .filter(|s| fc.is_face(*s))
            .collect();
        for &big in &faces {
            for &small in &faces {
                if !big.is_subset(small) {
                    continue;
                }
                // G' = face of `small` ⊆ G = face of `big`
                let g = SrPresentation::new(&fc, big).unwrap();
                let g_prime = SrPresentation::new(&fc, small).unwrap();
                for _ in 0..5 {
                    let q = random_polynomial(&mut rng, m, 2);
                    let p = random_polynomial(&mut rng, m, 2);
                    let lhs = face_pushforward(
                        &face_pullback(&q, &g, &g_prime).unwrap().mul(&p),
                        &g_prime,
                        &g,
                    )
                    .unwrap();
                    let rhs = reduce(&q.mul(&face_pushforward(&p, &g_prime, &g).unwrap()), &g);
                    assert_eq!(lhs, rhs, "{name} {big} {small}");
                }
            }
        }
    }
}

#[test]
fn orbifold_ring_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, p) in catalog::all() {
        let orb = ToricOrbifold::new(p).unwrap();
        let one = CrClass::unit(&orb, orb.sectors().identity()).unwrap();
        for _ in 0..30 {
            let a = random_class(&mut rng, &orb);
            let b = random_class(&mut rng, &orb);
            let c = random_class(&mut rng, &orb);
            let ab = cr_multiply(&orb, &a, &b).unwrap();
            assert_eq!(ab, cr_multiply(&orb, &b, &a).unwrap(), "{name}");
            assert_eq!(
                cr_multiply(&orb, &ab, &c).unwrap(),
                cr_multiply(&orb, &a, &cr_multiply(&orb, &b, &c).unwrap()).unwrap(),
                "{name}"
            );
            assert_eq!(cr_multiply(&orb, &one, &a).unwrap(), a, "{name}");
            assert!(check_homomorphism(&orb, &a, &b).unwrap(), "{name}");

            let (ra, rb, rc) = (
                restrict(&orb, &a).unwrap(),
                restrict(&orb, &b).unwrap(),
                restrict(&orb, &c).unwrap(),
            );
            let left = nh_multiply(&orb, &nh_multiply(&orb, &ra, &rb).unwrap(), &rc).unwrap();
            let right = nh_multiply(&orb, &ra, &nh_multiply(&orb, &rb, &rc).unwrap()).unwrap();
            assert_eq!(left, right, "{name}");
        }
    }
}

#[test]
fn restriction_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let orb = ToricOrbifold::new(catalog::labeled_square()).unwrap();
    for _ in 0..50 {
        let a = random_class(&mut rng, &orb);
        let b = random_class(&mut rng, &orb);
        let lhs = restrict(&orb, &a.add(&b)).unwrap();
        let rhs = restrict(&orb, &a)
            .unwrap()
            .add(&restrict(&orb, &b).unwrap());
        assert_eq!(lhs, rhs);
    }
}
