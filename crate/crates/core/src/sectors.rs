//! Twisted sectors: elements of the reduced torus with nonempty fixed
//! locus, encoded by their fractional weights.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, LatticeError, PolytopeError};
use crate::lattice::{frac, solve_congruence_group, IntMatrix, Rational};
use crate::polytope::{FaceComplex, FacetSet, LabeledPolytope};
use crate::stanley_reisner::SrPresentation;

/// A group element given by its fractional weights `a_i ∈ [0,1)`, one per
/// facet; the `i`-th torus coordinate is `exp(2πi a_i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectorElement {
    coords: Vec<Rational>,
}

impl SectorElement {
    /// Reduces every coordinate mod 1.
    pub fn new(coords: Vec<Rational>) -> Self {
        SectorElement {
            coords: coords.iter().map(frac).collect(),
        }
    }

    pub fn identity(m: usize) -> Self {
        SectorElement {
            coords: alloc::vec![Rational::zero(); m],
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The facets where the element acts nontrivially.
    pub fn support(&self) -> FacetSet {
        FacetSet::from_indices(
            self.coords
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, _)| i),
        )
    }

    /// Sum of the fractional weights; the degree shift is twice this.
    pub fn age(&self) -> Rational {
        self.coords.iter().sum()
    }

    /// Group law: coordinatewise addition mod 1.
    pub fn compose(&self, other: &SectorElement) -> SectorElement {
        SectorElement::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn inverse(&self) -> SectorElement {
        SectorElement::new(self.coords.iter().map(|a| -a.clone()).collect())
    }

    /// Membership in the reduced torus: `B a` is integral.
    pub fn in_group(&self, weight_matrix: &IntMatrix) -> bool {
        weight_matrix
            .apply_rational(&self.coords)
            .iter()
            .all(|x| x.is_integer())
    }

    /// Root-of-unity rendering of each coordinate: `1`, `-1`, `i`, `-i`, or
    /// `exp(2πi·p/q)`.
    pub fn root_of_unity_form(&self) -> Vec<String> {
        self.coords.iter().map(root_of_unity).collect()
    }
}

fn root_of_unity(a: &Rational) -> String {
    let half = Rational::new(BigInt::one(), 2.into());
    let quarter = Rational::new(BigInt::one(), 4.into());
    if a.is_zero() {
        String::from("1")
    } else if *a == half {
        String::from("-1")
    } else if *a == quarter {
        String::from("i")
    } else if *a == quarter * Rational::from_integer(3.into()) {
        String::from("-i")
    } else {
        format!("exp(2πi·{a})")
    }
}

impl fmt::Debug for SectorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SectorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Position of a sector in the canonical ordering of a [`SectorTable`].
/// The untwisted sector is always `SectorId(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectorId(pub usize);

impl fmt::Display for SectorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub element: SectorElement,
    /// Facets whose intersection is the fixed face.
    pub support: FacetSet,
    pub age: Rational,
}

impl Sector {
    /// Cohomological degree shift, `2 * age`.
    pub fn degree_shift(&self) -> Rational {
        &self.age * Rational::from_integer(2.into())
    }
}

/// All sectors with nonempty fixed locus, ordered by age and then by
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorTable {
    sectors: Vec<Sector>,
    index: BTreeMap<SectorElement, SectorId>,
}

impl SectorTable {
    /// Collects the local group of every vertex and merges them.
    pub fn enumerate(p: &LabeledPolytope, fc: &FaceComplex) -> Result<Self, LatticeError> {
        let m = p.num_facets();
        let mut found: Vec<SectorElement> = Vec::new();
        for v in fc.vertices() {
            let facets = v.facet_set.to_vec();
            let cols: Vec<Vec<BigInt>> = facets.iter().map(|&i| p.labeled_normal(i)).collect();
            let local = IntMatrix::from_columns(p.dim(), &cols);
            for a in solve_congruence_group(&local)? {
                let mut coords = alloc::vec![Rational::zero(); m];
                for (&i, x) in facets.iter().zip(a) {
                    coords[i] = x;
                }
                found.push(SectorElement { coords });
            }
        }
        found.sort();
        found.dedup();
        let mut sectors: Vec<Sector> = found
            .into_iter()
            .map(|element| Sector {
                support: element.support(),
                age: element.age(),
                element,
            })
            .collect();
        sectors.sort_by(|a, b| a.age.cmp(&b.age).then_with(|| a.element.cmp(&b.element)));
        let index = sectors
            .iter()
            .enumerate()
            .map(|(k, s)| (s.element.clone(), SectorId(k)))
            .collect();
        Ok(SectorTable { sectors, index })
    }

    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn identity(&self) -> SectorId {
        SectorId(0)
    }

    pub fn ids(&self) -> impl Iterator<Item = SectorId> {
        (0..self.sectors.len()).map(SectorId)
    }

    pub fn iter(&self) -> impl Iterator<Item = (SectorId, &Sector)> {
        self.sectors
            .iter()
            .enumerate()
            .map(|(k, s)| (SectorId(k), s))
    }

    pub fn get(&self, id: SectorId) -> Result<&Sector, AlgebraError> {
        self.sectors.get(id.0).ok_or(AlgebraError::UnlistedSector)
    }

    pub fn find(&self, element: &SectorElement) -> Option<SectorId> {
        self.index.get(element).copied()
    }

    pub fn inverse(&self, id: SectorId) -> Result<SectorId, AlgebraError> {
        let s = self.get(id)?;
        self.find(&s.element.inverse())
            .ok_or(AlgebraError::UnlistedSector)
    }
}

/// A validated labeled polytope together with its face complex and sector
/// table; the context every ring operation runs in.
#[derive(Clone, Debug)]
pub struct ToricOrbifold {
    polytope: LabeledPolytope,
    complex: FaceComplex,
    sectors: SectorTable,
}

impl ToricOrbifold {
    pub fn new(polytope: LabeledPolytope) -> Result<Self, PolytopeError> {
        let complex = polytope.face_complex()?;
        let sectors = SectorTable::enumerate(&polytope, &complex)
            .expect("vertices of a validated simple polytope have nonsingular local matrices");
        Ok(ToricOrbifold {
            polytope,
            complex,
            sectors,
        })
    }

    pub fn polytope(&self) -> &LabeledPolytope {
        &self.polytope
    }

    pub fn complex(&self) -> &FaceComplex {
        &self.complex
    }

    pub fn sectors(&self) -> &SectorTable {
        &self.sectors
    }

    pub fn num_vars(&self) -> usize {
        self.polytope.num_facets()
    }

    /// The sector's cohomology: the presentation shifted by its support.
    pub fn sector_module(&self, id: SectorId) -> Result<SrPresentation<'_>, AlgebraError> {
        let s = self.sectors.get(id)?;
        SrPresentation::new(&self.complex, s.support)
    }
}
