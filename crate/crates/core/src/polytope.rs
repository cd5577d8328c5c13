//! Labeled simple polytopes: validation, vertices, and the simplicial
//! complex on facet indices whose simplices are facet sets with a common
//! vertex.
//!
//! Facets are 0-based in the API and 1-based whenever printed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::PolytopeError;
use crate::lattice::{is_free_cokernel, rational_rank, solve_rational, IntMatrix, Rational};
use crate::simplex::find_nonnegative_solution;

/// A set of facet indices, stored as a bitset (at most 64 facets).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetSet(u64);

impl FacetSet {
    pub const MAX_FACETS: usize = 64;

    pub fn empty() -> Self {
        FacetSet(0)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = FacetSet(0);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < Self::MAX_FACETS);
        self.0 |= 1 << i;
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::MAX_FACETS && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: FacetSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: FacetSet) -> FacetSet {
        FacetSet(self.0 | other.0)
    }

    pub fn intersection(self, other: FacetSet) -> FacetSet {
        FacetSet(self.0 & other.0)
    }

    pub fn difference(self, other: FacetSet) -> FacetSet {
        FacetSet(self.0 & !other.0)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..Self::MAX_FACETS).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based indices, as printed.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Debug for FacetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Printed 1-based, e.g. `{1,3}`.
impl fmt::Display for FacetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// All `k`-element subsets of `0..m`, in lexicographic order.
pub fn subsets_of_size(m: usize, k: usize) -> Vec<FacetSet> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(FacetSet::from_indices(idx.iter().copied()));
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + m - k) else {
            return out;
        };
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// Polytope `{ v : <b_i rho_i, v> + eta_i >= 0 for all i }` with primitive
/// inward normals `rho_i`, positive integer labels `b_i` and rational
/// offsets `eta_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPolytope {
    dim: usize,
    normals: Vec<Vec<BigInt>>,
    labels: Vec<BigInt>,
    offsets: Vec<Rational>,
}

impl LabeledPolytope {
    /// Checks shapes and label positivity only; see [`Self::validate`] for
    /// the geometric conditions.
    pub fn new(
        dim: usize,
        normals: Vec<Vec<BigInt>>,
        labels: Vec<BigInt>,
        offsets: Vec<Rational>,
    ) -> Result<Self, PolytopeError> {
        let m = normals.len();
        if dim == 0 {
            return Err(PolytopeError::Malformed("dimension must be positive"));
        }
        if labels.len() != m || offsets.len() != m {
            return Err(PolytopeError::Malformed(
                "normals, labels and offsets must have one entry per facet",
            ));
        }
        if normals.iter().any(|r| r.len() != dim) {
            return Err(PolytopeError::Malformed(
                "normal length differs from dimension",
            ));
        }
        if m <= dim {
            return Err(PolytopeError::Malformed(
                "need more facets than the dimension",
            ));
        }
        if m > FacetSet::MAX_FACETS {
            return Err(PolytopeError::TooManyFacets(m));
        }
        if let Some(i) = labels.iter().position(|b| !b.is_positive()) {
            return Err(PolytopeError::NonPositiveLabel { facet: i + 1 });
        }
        Ok(LabeledPolytope {
            dim,
            normals,
            labels,
            offsets,
        })
    }

    /// Convenience constructor from small integers; offsets are given as
    /// `(numerator, denominator)`.
    pub fn from_small(
        dim: usize,
        normals: &[&[i64]],
        labels: &[i64],
        offsets: &[(i64, i64)],
    ) -> Result<Self, PolytopeError> {
        Self::new(
            dim,
            normals
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            labels.iter().map(|&b| BigInt::from(b)).collect(),
            offsets
                .iter()
                .map(|&(p, q)| Rational::new(p.into(), q.into()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_facets(&self) -> usize {
        self.normals.len()
    }

    pub fn normals(&self) -> &[Vec<BigInt>] {
        &self.normals
    }

    pub fn labels(&self) -> &[BigInt] {
        &self.labels
    }

    pub fn offsets(&self) -> &[Rational] {
        &self.offsets
    }

    /// `b_i * rho_i`
    pub fn labeled_normal(&self, i: usize) -> Vec<BigInt> {
        self.normals[i]
            .iter()
            .map(|x| x * &self.labels[i])
            .collect()
    }

    /// The `n x m` matrix whose columns are the labeled normals.
    pub fn weight_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = (0..self.num_facets())
            .map(|i| self.labeled_normal(i))
            .collect();
        IntMatrix::from_columns(self.dim, &cols)
    }

    /// `<b_i rho_i, point> + eta_i`; nonnegative exactly on the polytope.
    pub fn slack(&self, i: usize, point: &[Rational]) -> Rational {
        let dot: Rational = self
            .labeled_normal(i)
            .iter()
            .zip(point)
            .map(|(a, x)| x * a)
            .sum();
        dot + &self.offsets[i]
    }

    /// Decides whether the recession cone `{ v : <rho_i, v> >= 0 }` is trivial.
    pub fn is_bounded(&self) -> bool {
        let n = self.dim;
        let m = self.num_facets();
        let rows: Vec<Vec<Rational>> = self
            .normals
            .iter()
            .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
            .collect();
        if rational_rank(&rows) < n {
            // the normals miss a direction, so the polytope contains a line
            return false;
        }
        // With full rank, a nonzero ray exists iff some v has <rho_i, v> = s_i >= 0
        // and sum s_i = 1. Variables: v+ (n), v- (n), s (m), all nonnegative.
        let zero = Rational::zero();
        let one = Rational::one();
        let width = 2 * n + m;
        let mut a = Vec::with_capacity(m + 1);
        let mut b = Vec::with_capacity(m + 1);
        for (i, r) in rows.iter().enumerate() {
            let mut row = alloc::vec![zero.clone(); width];
            for k in 0..n {
                row[k] = r[k].clone();
                row[n + k] = -r[k].clone();
            }
            row[2 * n + i] = -one.clone();
            a.push(row);
            b.push(zero.clone());
        }
        let mut total = alloc::vec![zero.clone(); width];
        for x in total[2 * n..].iter_mut() {
            *x = one.clone();
        }
        a.push(total);
        b.push(one);
        find_nonnegative_solution(&a, &b).is_none()
    }

    /// Points where `n` linearly independent facet hyperplanes meet inside
    /// the polytope, each with its full set of tight facets. Sorted by
    /// facet set.
    pub fn enumerate_vertices(&self) -> Vec<VertexData> {
        let n = self.dim;
        let m = self.num_facets();
        let mut found: BTreeMap<Vec<Rational>, FacetSet> = BTreeMap::new();
        for subset in subsets_of_size(m, n) {
            let idx = subset.to_vec();
            let mat: Vec<Vec<Rational>> = idx
                .iter()
                .map(|&i| {
                    self.labeled_normal(i)
                        .into_iter()
                        .map(Rational::from_integer)
                        .collect()
                })
                .collect();
            let rhs: Vec<Rational> = idx.iter().map(|&i| -self.offsets[i].clone()).collect();
            let Some(point) = solve_rational(&mat, &rhs) else {
                continue;
            };
            if found.contains_key(&point) {
                continue;
            }
            let mut tight = FacetSet::empty();
            let mut feasible = true;
            for i in 0..m {
                let s = self.slack(i, &point);
                if s.is_negative() {
                    feasible = false;
                    break;
                }
                if s.is_zero() {
                    tight.insert(i);
                }
            }
            if feasible {
                found.insert(point, tight);
            }
        }
        let mut vertices: Vec<VertexData> = found
            .into_iter()
            .map(|(point, facet_set)| VertexData { point, facet_set })
            .collect();
        vertices.sort_by(|a, b| {
            a.facet_set
                .to_vec()
                .cmp(&b.facet_set.to_vec())
                .then_with(|| a.point.cmp(&b.point))
        });
        vertices
    }

    /// Runs every check and returns the vertices on success.
    fn checked_vertices(&self) -> Result<Vec<VertexData>, PolytopeError> {
        let n = self.dim;
        let m = self.num_facets();
        for (i, r) in self.normals.iter().enumerate() {
            let g = r.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_one() {
                return Err(PolytopeError::NonPrimitiveNormal { facet: i + 1 });
            }
        }
        if !self.is_bounded() {
            return Err(PolytopeError::UnboundedPolytope);
        }
        let vertices = self.enumerate_vertices();
        if vertices.is_empty() {
            return Err(PolytopeError::EmptyPolytope);
        }
        let all: Vec<&VertexData> = vertices.iter().collect();
        if affine_dimension(&all) < n {
            return Err(PolytopeError::NotFullDimensional);
        }
        for i in 0..m {
            let on_facet: Vec<&VertexData> = vertices
                .iter()
                .filter(|v| v.facet_set.contains(i))
                .collect();
            if on_facet.is_empty() || affine_dimension(&on_facet) + 1 < n {
                return Err(PolytopeError::RedundantFacet { facet: i + 1 });
            }
            if (0..i).any(|j| self.same_hyperplane(i, j)) {
                return Err(PolytopeError::RedundantFacet { facet: i + 1 });
            }
        }
        if let Some(v) = vertices.iter().find(|v| v.facet_set.len() != n) {
            return Err(PolytopeError::NotSimple {
                facets: v.facet_set.to_one_based(),
            });
        }
        if !is_free_cokernel(&self.weight_matrix().transpose()) {
            return Err(PolytopeError::TorsionCokernel);
        }
        Ok(vertices)
    }

    fn same_hyperplane(&self, i: usize, j: usize) -> bool {
        self.normals[i] == self.normals[j]
            && &self.offsets[i] / Rational::from_integer(self.labels[i].clone())
                == &self.offsets[j] / Rational::from_integer(self.labels[j].clone())
    }

    /// Succeeds iff the normals are primitive and the polytope is bounded,
    /// full-dimensional, irredundant and simple, and the transposed weight
    /// matrix has free cokernel. Reports the first violated condition.
    pub fn validate(&self) -> Result<(), PolytopeError> {
        self.checked_vertices().map(|_| ())
    }

    /// Validates, then builds the face complex.
    pub fn face_complex(&self) -> Result<FaceComplex, PolytopeError> {
        let vertices = self.checked_vertices()?;
        Ok(FaceComplex::from_vertices(
            self.num_facets(),
            self.dim,
            vertices,
        ))
    }
}

fn affine_dimension(points: &[&VertexData]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| {
            p.point
                .iter()
                .zip(&first.point)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    if diffs.is_empty() {
        0
    } else {
        rational_rank(&diffs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexData {
    pub point: Vec<Rational>,
    /// The facets through this vertex.
    pub facet_set: FacetSet,
}

/// Two vertices sharing all but one facet. `left_only` is the facet through
/// `left` but not `right`, and vice versa.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub left: usize,
    pub right: usize,
    pub left_only: usize,
    pub right_only: usize,
}

/// The simplicial complex on facet indices, held implicitly through the
/// vertex facet sets, plus its minimal non-faces and the edge graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    num_facets: usize,
    dim: usize,
    vertices: Vec<VertexData>,
    minimal_nonfaces: Vec<FacetSet>,
    edges: Vec<Edge>,
}

impl FaceComplex {
    /// Builds the complex from the vertices of a validated simple polytope.
    pub fn from_vertices(num_facets: usize, dim: usize, vertices: Vec<VertexData>) -> Self {
        let mut fc = FaceComplex {
            num_facets,
            dim,
            vertices,
            minimal_nonfaces: Vec::new(),
            edges: Vec::new(),
        };
        // Any n+1 facets form a non-face, so larger minimal non-faces cannot exist.
        for k in 1..=(dim + 1).min(num_facets) {
            for s in subsets_of_size(num_facets, k) {
                if !fc.is_face(s) && !fc.minimal_nonfaces.iter().any(|g| g.is_subset(s)) {
                    fc.minimal_nonfaces.push(s);
                }
            }
        }
        for a in 0..fc.vertices.len() {
            for b in a + 1..fc.vertices.len() {
                let fa = fc.vertices[a].facet_set;
                let fb = fc.vertices[b].facet_set;
                if fa.intersection(fb).len() + 1 == dim {
                    let left_only = fa.difference(fb).iter().next().unwrap();
                    let right_only = fb.difference(fa).iter().next().unwrap();
                    fc.edges.push(Edge {
                        left: a,
                        right: b,
                        left_only,
                        right_only,
                    });
                }
            }
        }
        fc
    }

    pub fn num_facets(&self) -> usize {
        self.num_facets
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[VertexData] {
        &self.vertices
    }

    pub fn minimal_nonfaces(&self) -> &[FacetSet] {
        &self.minimal_nonfaces
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `sigma` is a face iff it lies in the facet set of some vertex.
    pub fn is_face(&self, sigma: FacetSet) -> bool {
        self.vertices.iter().any(|v| sigma.is_subset(v.facet_set))
    }

    /// Indices of the vertices lying on every facet in `sigma`.
    pub fn vertices_of_face(&self, sigma: FacetSet) -> impl Iterator<Item = usize> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter(move |(_, v)| sigma.is_subset(v.facet_set))
            .map(|(k, _)| k)
    }
}
