//! The equivariant Chen-Ruan ring: classes are sums `p_g * 1_g` over
//! sectors, and `1_g ⊙ 1_h` is a monomial multiple of `1_{gh}` made of the
//! virtual class and the Euler class of the normal bundle of the double
//! fixed locus inside the fixed locus of `gh`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::AlgebraError;
use crate::lattice::Rational;
use crate::polytope::FacetSet;
use crate::sectors::{SectorId, ToricOrbifold};
use crate::stanley_reisner::{reduce, Monomial, Polynomial};

/// A class `sum_g p_g * 1_g`, each `p_g` in normal form for its sector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CrClass {
    nvars: usize,
    components: BTreeMap<SectorId, Polynomial>,
}

impl CrClass {
    pub fn zero(nvars: usize) -> Self {
        CrClass {
            nvars,
            components: BTreeMap::new(),
        }
    }

    /// `1_g`
    pub fn unit(orb: &ToricOrbifold, g: SectorId) -> Result<Self, AlgebraError> {
        Self::single(orb, g, Polynomial::one(orb.num_vars()))
    }

    /// `p * 1_g`, reduced into the sector's normal form.
    pub fn single(orb: &ToricOrbifold, g: SectorId, p: Polynomial) -> Result<Self, AlgebraError> {
        let mut c = CrClass::zero(orb.num_vars());
        c.add_component(orb, g, &p)?;
        Ok(c)
    }

    pub fn from_components<I>(orb: &ToricOrbifold, it: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (SectorId, Polynomial)>,
    {
        let mut c = CrClass::zero(orb.num_vars());
        for (g, p) in it {
            c.add_component(orb, g, &p)?;
        }
        Ok(c)
    }

    /// Adds `p * 1_g`.
    pub fn add_component(
        &mut self,
        orb: &ToricOrbifold,
        g: SectorId,
        p: &Polynomial,
    ) -> Result<(), AlgebraError> {
        if p.nvars() != self.nvars {
            return Err(AlgebraError::ShapeMismatch);
        }
        let pres = orb.sector_module(g)?;
        let sum = match self.components.remove(&g) {
            Some(existing) => existing.add(p),
            None => p.clone(),
        };
        let sum = reduce(&sum, &pres);
        if !sum.is_zero() {
            self.components.insert(g, sum);
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (SectorId, &Polynomial)> {
        self.components.iter().map(|(g, p)| (*g, p))
    }

    pub fn component(&self, g: SectorId) -> Option<&Polynomial> {
        self.components.get(&g)
    }

    pub fn add(&self, other: &CrClass) -> CrClass {
        let mut out = self.clone();
        for (g, p) in &other.components {
            let sum = match out.components.remove(g) {
                Some(existing) => existing.add(p),
                None => p.clone(),
            };
            // both summands are already normal forms, so the sum is too
            if !sum.is_zero() {
                out.components.insert(*g, sum);
            }
        }
        out
    }

    pub fn neg(&self) -> CrClass {
        CrClass {
            nvars: self.nvars,
            components: self.components.iter().map(|(g, p)| (*g, p.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> CrClass {
        if c.is_zero() {
            return CrClass::zero(self.nvars);
        }
        CrClass {
            nvars: self.nvars,
            components: self
                .components
                .iter()
                .map(|(g, p)| (*g, p.scale(c)))
                .collect(),
        }
    }
}

impl fmt::Debug for CrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(x1 + 2)@g0 + (x3)@g2`; zero prints as `0`.
impl fmt::Display for CrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (g, p)) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({p})@{g}")?;
        }
        Ok(())
    }
}

/// `1_g ⊙ 1_h = (virtual) * (euler) * 1_{gh}`, or zero when the fixed loci
/// of `g` and `h` do not meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstant {
    pub left: SectorId,
    pub right: SectorId,
    /// `None` when the product vanishes.
    pub target: Option<SectorId>,
    /// Indices whose three weights `a_i(g) + a_i(h) + a_i((gh)^-1)` sum to 2.
    pub virtual_set: FacetSet,
    /// `(supp g ∪ supp h) \ supp gh`
    pub euler_set: FacetSet,
    nvars: usize,
}

impl StructureConstant {
    pub fn is_zero(&self) -> bool {
        self.target.is_none()
    }

    pub fn virtual_monomial(&self) -> Monomial {
        Monomial::squarefree(self.nvars, self.virtual_set)
    }

    pub fn euler_monomial(&self) -> Monomial {
        Monomial::squarefree(self.nvars, self.euler_set)
    }

    /// Product of both factors; an index in both sets gets exponent 2.
    pub fn monomial(&self) -> Monomial {
        self.virtual_monomial().mul(&self.euler_monomial())
    }
}

/// `(x1)·(x2)·1_g3`, or `0`.
impl fmt::Display for StructureConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.target {
            None => write!(f, "0"),
            Some(t) => write!(
                f,
                "({})·({})·1_{}",
                self.virtual_monomial(),
                self.euler_monomial(),
                t
            ),
        }
    }
}

pub fn structure_constant(
    orb: &ToricOrbifold,
    g: SectorId,
    h: SectorId,
) -> Result<StructureConstant, AlgebraError> {
    let table = orb.sectors();
    let sg = table.get(g)?;
    let sh = table.get(h)?;
    let nvars = orb.num_vars();
    let union = sg.support.union(sh.support);
    if !orb.complex().is_face(union) {
        return Ok(StructureConstant {
            left: g,
            right: h,
            target: None,
            virtual_set: FacetSet::empty(),
            euler_set: FacetSet::empty(),
            nvars,
        });
    }
    let product = sg.element.compose(&sh.element);
    // supp(gh) ⊆ union is a face, and gh is integral on any vertex through it
    let target = table.find(&product).ok_or(AlgebraError::UnlistedSector)?;
    let inv = product.inverse();
    let two = Rational::from_integer(2.into());
    let virtual_set =
        FacetSet::from_indices(union.iter().filter(|&i| {
            &sg.element.coords()[i] + &sh.element.coords()[i] + &inv.coords()[i] == two
        }));
    let euler_set = union.difference(product.support());
    Ok(StructureConstant {
        left: g,
        right: h,
        target: Some(target),
        virtual_set,
        euler_set,
        nvars,
    })
}

/// Bilinear extension of the structure constants.
pub fn cr_multiply(orb: &ToricOrbifold, a: &CrClass, b: &CrClass) -> Result<CrClass, AlgebraError> {
    let mut out = CrClass::zero(orb.num_vars());
    for (g, p) in a.components() {
        for (h, q) in b.components() {
            let sc = structure_constant(orb, g, h)?;
            let Some(t) = sc.target else { continue };
            let term = p.mul(q).mul_monomial(&sc.monomial());
            out.add_component(orb, t, &term)?;
        }
    }
    Ok(out)
}

/// Rational degree of a class: `2 * deg p + 2 * age(g)` on each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassDegree {
    Zero,
    Homogeneous(Rational),
    NonHomogeneous,
}

pub fn rational_degree(orb: &ToricOrbifold, a: &CrClass) -> Result<ClassDegree, AlgebraError> {
    let mut degree: Option<Rational> = None;
    for (g, p) in a.components() {
        let Some(d) = p.homogeneous_degree() else {
            return Ok(ClassDegree::NonHomogeneous);
        };
        let s = orb.sectors().get(g)?;
        let here = Rational::from_integer((2 * d).into()) + s.degree_shift();
        match &degree {
            None => degree = Some(here),
            Some(prev) if *prev != here => return Ok(ClassDegree::NonHomogeneous),
            Some(_) => {}
        }
    }
    Ok(match degree {
        None => ClassDegree::Zero,
        Some(d) => ClassDegree::Homogeneous(d),
    })
}

/// `1_g ⊙ 1_h` for every ordered pair of listed sectors, in canonical order.
pub fn multiplication_table(orb: &ToricOrbifold) -> Vec<Vec<StructureConstant>> {
    let ids: Vec<SectorId> = orb.sectors().ids().collect();
    ids.iter()
        .map(|&g| {
            ids.iter()
                .map(|&h| structure_constant(orb, g, h).expect("listed sectors"))
                .collect()
        })
        .collect()
}
