//! Restriction of Chen-Ruan classes to the fixed orbifold points, and the
//! star product on the restricted side.
//!
//! An NH class has one polynomial per admissible pair `(g, v)`: a sector
//! `g` and a vertex `v` of its fixed face, the polynomial living in the
//! variables of the facets through `v`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::chen_ruan::{cr_multiply, structure_constant, CrClass};
use crate::error::AlgebraError;
use crate::lattice::{rational_kernel_vector, rational_rank, snf, IntMatrix, Rational};
use crate::sectors::{SectorId, ToricOrbifold};
use crate::stanley_reisner::{vertex_restrict, Monomial, Polynomial};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct NhClass {
    components: BTreeMap<(SectorId, usize), Polynomial>,
}

impl NhClass {
    pub fn zero() -> Self {
        NhClass::default()
    }

    /// Builds a class, rejecting inadmissible keys and polynomials that use
    /// variables off their vertex.
    pub fn from_components<I>(orb: &ToricOrbifold, it: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = ((SectorId, usize), Polynomial)>,
    {
        let mut c = NhClass::zero();
        for (key, p) in it {
            c.add_component(key, p);
        }
        c.check_shape(orb)?;
        Ok(c)
    }

    fn add_component(&mut self, key: (SectorId, usize), p: Polynomial) {
        let sum = match self.components.remove(&key) {
            Some(existing) => existing.add(&p),
            None => p,
        };
        if !sum.is_zero() {
            self.components.insert(key, sum);
        }
    }

    pub fn components(&self) -> impl Iterator<Item = ((SectorId, usize), &Polynomial)> {
        self.components.iter().map(|(k, p)| (*k, p))
    }

    pub fn component(&self, g: SectorId, vertex: usize) -> Option<&Polynomial> {
        self.components.get(&(g, vertex))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add(&self, other: &NhClass) -> NhClass {
        let mut out = self.clone();
        for (k, p) in &other.components {
            out.add_component(*k, p.clone());
        }
        out
    }

    pub fn check_shape(&self, orb: &ToricOrbifold) -> Result<(), AlgebraError> {
        let vertices = orb.complex().vertices();
        for (&(g, v), p) in &self.components {
            let s = orb.sectors().get(g)?;
            let vertex = vertices.get(v).ok_or(AlgebraError::ShapeMismatch)?;
            if !s.support.is_subset(vertex.facet_set)
                || p.nvars() != orb.num_vars()
                || !p.support().is_subset(vertex.facet_set)
            {
                return Err(AlgebraError::ShapeMismatch);
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NhClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.components.iter().map(|((g, v), p)| ((g.0, v), p)))
            .finish()
    }
}

/// Component at `(g, v)` is `p_g` restricted to the facets through `v`, for
/// each vertex `v` of the fixed face of `g`.
pub fn restrict(orb: &ToricOrbifold, a: &CrClass) -> Result<NhClass, AlgebraError> {
    let mut out = NhClass::zero();
    for (g, p) in a.components() {
        let s = orb.sectors().get(g)?;
        for v in orb.complex().vertices_of_face(s.support) {
            let r = vertex_restrict(p, &orb.complex().vertices()[v]);
            out.add_component((g, v), r);
        }
    }
    Ok(out)
}

/// Star product: the `u`-component of `(p) ⋆ (q)` on sectors `g`, `h` is
/// `p_u * q_u` times the structure-constant monomial of `(g, h)`, provided
/// `u` lies on the fixed faces of both; otherwise it is zero.
pub fn nh_multiply(orb: &ToricOrbifold, a: &NhClass, b: &NhClass) -> Result<NhClass, AlgebraError> {
    a.check_shape(orb)?;
    b.check_shape(orb)?;
    let vertices = orb.complex().vertices();
    let mut out = NhClass::zero();
    for (&(g, u), p) in &a.components {
        for (&(h, w), q) in &b.components {
            if u != w {
                continue;
            }
            let sc = structure_constant(orb, g, h)?;
            let Some(t) = sc.target else { continue };
            // (g, u) and (h, u) admissible means both supports lie in H_u
            let at_u = vertices[u].facet_set;
            let term = p.mul(q).mul_monomial(&sc.monomial()).restrict_to(at_u);
            out.add_component((t, u), term);
        }
    }
    Ok(out)
}

/// `restrict(a ⊙ b) == restrict(a) ⋆ restrict(b)`
pub fn check_homomorphism(
    orb: &ToricOrbifold,
    a: &CrClass,
    b: &CrClass,
) -> Result<bool, AlgebraError> {
    let lhs = restrict(orb, &cr_multiply(orb, a, b)?)?;
    let rhs = nh_multiply(orb, &restrict(orb, a)?, &restrict(orb, b)?)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorInjectivity {
    pub sector: SectorId,
    /// Number of standard monomials of degree at most the bound.
    pub basis_size: usize,
    pub rank: usize,
    /// A nonzero class in the kernel, when the map is not injective.
    pub kernel_witness: Option<Polynomial>,
    /// In strict mode: whether every elementary divisor of the integer
    /// restriction matrix equals 1.
    pub unit_divisors: Option<bool>,
}

impl SectorInjectivity {
    pub fn is_injective(&self) -> bool {
        self.rank == self.basis_size && self.unit_divisors != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityReport {
    pub degree_bound: u32,
    pub sectors: Vec<SectorInjectivity>,
}

impl InjectivityReport {
    pub fn is_injective(&self) -> bool {
        self.sectors.iter().all(SectorInjectivity::is_injective)
    }
}

/// Rank of the restriction map on each sector module, truncated to
/// polynomial degree `degree_bound`. With `strict_z`, also checks that the
/// integer matrix has all elementary divisors equal to 1.
pub fn injectivity_rank_check(
    orb: &ToricOrbifold,
    degree_bound: u32,
    strict_z: bool,
) -> InjectivityReport {
    let m = orb.num_vars();
    let mut sectors = Vec::new();
    for g in orb.sectors().ids() {
        let pres = orb.sector_module(g).expect("listed sector");
        let basis: Vec<Monomial> = (0..=degree_bound)
            .flat_map(|d| Monomial::all_of_degree(m, d))
            .filter(|mono| pres.is_standard(mono))
            .collect();
        let images: Vec<NhClass> = basis
            .iter()
            .map(|mono| {
                let c = CrClass::single(orb, g, Polynomial::term(BigInt::one(), mono.clone()))
                    .expect("listed sector");
                restrict(orb, &c).expect("listed sector")
            })
            .collect();
        let rows = restriction_matrix(&images);
        let ncols = basis.len();
        let rational_rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
            .collect();
        let rank = if rows.is_empty() {
            0
        } else {
            rational_rank(&rational_rows)
        };
        let kernel_witness = if rank < ncols {
            let v = if rows.is_empty() {
                let mut v = alloc::vec![Rational::zero(); ncols];
                v[0] = Rational::one();
                v
            } else {
                rational_kernel_vector(&rational_rows, ncols).expect("rank deficient")
            };
            Some(witness_polynomial(m, &basis, &v))
        } else {
            None
        };
        let unit_divisors = strict_z.then(|| {
            if rows.is_empty() {
                return ncols == 0;
            }
            let entries: Vec<BigInt> = rows.iter().flatten().cloned().collect();
            let mat = IntMatrix::new(rows.len(), ncols, entries).expect("rectangular");
            let d = snf(&mat).diagonal();
            d.len() == ncols && d.iter().all(One::is_one)
        });
        sectors.push(SectorInjectivity {
            sector: g,
            basis_size: ncols,
            rank,
            kernel_witness,
            unit_divisors,
        });
    }
    InjectivityReport {
        degree_bound,
        sectors,
    }
}

/// One row per (sector, vertex, monomial) output coordinate, one column per
/// basis element.
fn restriction_matrix(images: &[NhClass]) -> Vec<Vec<BigInt>> {
    let mut coords: BTreeMap<(SectorId, usize, Monomial), usize> = BTreeMap::new();
    for img in images {
        for (key, p) in img.components() {
            for (mono, _) in p.terms() {
                let next = coords.len();
                coords.entry((key.0, key.1, mono.clone())).or_insert(next);
            }
        }
    }
    let mut rows = alloc::vec![alloc::vec![BigInt::zero(); images.len()]; coords.len()];
    for (j, img) in images.iter().enumerate() {
        for (key, p) in img.components() {
            for (mono, c) in p.terms() {
                rows[coords[&(key.0, key.1, mono.clone())]][j] = c.clone();
            }
        }
    }
    rows
}

fn witness_polynomial(m: usize, basis: &[Monomial], v: &[Rational]) -> Polynomial {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    Polynomial::from_terms(
        m,
        basis.iter().zip(v).map(|(mono, x)| {
            (
                mono.clone(),
                (x * Rational::from_integer(lcm.clone())).to_integer(),
            )
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::polytope::FacetSet;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(3, i - 1)
    }

    fn vertex_with(orb: &ToricOrbifold, one_based: &[usize]) -> usize {
        let s = FacetSet::from_indices(one_based.iter().map(|i| i - 1));
        orb.complex()
            .vertices()
            .iter()
            .position(|v| v.facet_set == s)
            .unwrap()
    }

    #[test]
    fn restriction_of_units() {
        let orb = ToricOrbifold::new(catalog::weighted_p2_112()).unwrap();
        let sigma = CrClass::unit(&orb, SectorId(1)).unwrap();
        let r = restrict(&orb, &sigma).unwrap();
        let v12 = vertex_with(&orb, &[1, 2]);
        assert_eq!(r.components().count(), 1);
        assert_eq!(r.component(SectorId(1), v12), Some(&Polynomial::one(3)));

        let one = restrict(&orb, &CrClass::unit(&orb, SectorId(0)).unwrap()).unwrap();
        assert_eq!(one.components().count(), 3);
        assert!(one.components().all(|(_, p)| *p == Polynomial::one(3)));

        let r3 = restrict(&orb, &CrClass::single(&orb, SectorId(0), x(3)).unwrap()).unwrap();
        assert_eq!(
            r3.component(SectorId(0), vertex_with(&orb, &[1, 3])),
            Some(&x(3))
        );
        assert_eq!(
            r3.component(SectorId(0), vertex_with(&orb, &[2, 3])),
            Some(&x(3))
        );
        assert_eq!(r3.component(SectorId(0), v12), None);
    }

    #[test]
    fn star_products() {
        let orb = ToricOrbifold::new(catalog::weighted_p2_112()).unwrap();
        let rs = restrict(&orb, &CrClass::unit(&orb, SectorId(1)).unwrap()).unwrap();
        let prod = nh_multiply(&orb, &rs, &rs).unwrap();
        let expect = restrict(
            &orb,
            &CrClass::single(&orb, SectorId(0), x(1).mul(&x(2))).unwrap(),
        )
        .unwrap();
        assert_eq!(prod, expect);
        assert_eq!(prod.components().count(), 1);

        let one = restrict(&orb, &CrClass::unit(&orb, SectorId(0)).unwrap()).unwrap();
        assert_eq!(nh_multiply(&orb, &one, &rs).unwrap(), rs);

        let orb = ToricOrbifold::new(catalog::weighted_p2_124()).unwrap();
        let r = restrict(&orb, &CrClass::unit(&orb, SectorId(1)).unwrap()).unwrap();
        let prod = nh_multiply(&orb, &r, &r).unwrap();
        assert_eq!(
            prod.component(SectorId(0), vertex_with(&orb, &[1, 2])),
            Some(&x(1))
        );
        assert_eq!(
            prod.component(SectorId(0), vertex_with(&orb, &[1, 3])),
            Some(&x(1))
        );
        assert_eq!(
            prod.component(SectorId(0), vertex_with(&orb, &[2, 3])),
            None
        );
    }

    #[test]
    fn malformed_nh_class() {
        let orb = ToricOrbifold::new(catalog::weighted_p2_112()).unwrap();
        // sigma is not admissible at vertex {1,3}
        let bad = NhClass::from_components(
            &orb,
            [(
                (SectorId(1), vertex_with(&orb, &[1, 3])),
                Polynomial::one(3),
            )],
        );
        assert_eq!(bad, Err(AlgebraError::ShapeMismatch));
        let bad =
            NhClass::from_components(&orb, [((SectorId(0), vertex_with(&orb, &[1, 3])), x(2))]);
        assert_eq!(bad, Err(AlgebraError::ShapeMismatch));
    }

    #[test]
    fn homomorphism_on_sector_units() {
        for p in [catalog::weighted_p2_112(), catalog::weighted_p2_124()] {
            let orb = ToricOrbifold::new(p).unwrap();
            for g in orb.sectors().ids() {
                for h in orb.sectors().ids() {
                    let a = CrClass::unit(&orb, g).unwrap();
                    let b = CrClass::unit(&orb, h).unwrap();
                    assert!(check_homomorphism(&orb, &a, &b).unwrap());
                }
            }
        }
    }

    #[test]
    fn injectivity() {
        for (p, d) in [
            (catalog::weighted_p2_112(), 3),
            (catalog::projective_space(2), 4),
            (catalog::weighted_p2_124(), 3),
        ] {
            let orb = ToricOrbifold::new(p).unwrap();
            let report = injectivity_rank_check(&orb, d, true);
            assert!(report.is_injective());
            assert!(report.sectors.iter().all(|s| s.kernel_witness.is_none()));
        }
    }
}
