//! Sparse integer polynomials, Stanley-Reisner quotients and the
//! piecewise-polynomial (GKM) model.
//!
//! A presentation with shift set `tau` is the quotient of `Z[x_1..x_m]` by
//! the squarefree monomials `x^sigma` with `sigma` disjoint from `tau` and
//! `sigma ∪ tau` not a face. Because the ideal is squarefree, a term lies
//! in it exactly when its support together with `tau` is a non-face, which
//! gives normal forms without any division.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::polytope::{FaceComplex, FacetSet, VertexData};

/// Exponent vector. Ordered graded-lexicographically with `x_1` largest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    /// `prod_{i in s} x_i`
    pub fn squarefree(nvars: usize, s: FacetSet) -> Self {
        let mut e = vec![0; nvars];
        for i in s.iter() {
            e[i] = 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> FacetSet {
        FacetSet::from_indices(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials in `nvars` variables of total degree exactly `d`, in
    /// descending order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, left: u32, acc: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if acc.len() + 1 == nvars {
                acc.push(left);
                out.push(Monomial(acc.clone()));
                acc.pop();
                return;
            }
            for e in (0..=left).rev() {
                acc.push(e);
                rec(nvars, left - e, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `x1^2*x3`; the empty monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Polynomial in `Z[x_1..x_m]` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(BigInt::one(), Monomial::var(nvars, i))
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(nvars: usize, it: I) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        assert_eq!(m.nvars(), self.nvars, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn retain_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x_i -> 0` for every `i` outside `allowed`.
    pub fn restrict_to(&self, allowed: FacetSet) -> Polynomial {
        self.retain_terms(|m| m.support().is_subset(allowed))
    }

    /// Union of the supports of all terms.
    pub fn support(&self) -> FacetSet {
        self.terms
            .keys()
            .fold(FacetSet::empty(), |s, m| s.union(m.support()))
    }

    /// Total degree if every term has the same degree; `Some(0)` for zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `x1^2 - 3*x2*x3 + 5`; the zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// `Z[x_1..x_m] / < x^sigma : sigma ∩ tau = ∅, sigma ∪ tau not a face >`.
/// With `tau` empty this is the Stanley-Reisner ring itself.
#[derive(Clone, Copy, Debug)]
pub struct SrPresentation<'a> {
    complex: &'a FaceComplex,
    tau: FacetSet,
}

impl<'a> SrPresentation<'a> {
    pub fn new(complex: &'a FaceComplex, tau: FacetSet) -> Result<Self, AlgebraError> {
        if !complex.is_face(tau) {
            return Err(AlgebraError::NotAFace);
        }
        Ok(SrPresentation { complex, tau })
    }

    /// The unshifted ring `SR(Δ)`.
    pub fn untwisted(complex: &'a FaceComplex) -> Self {
        SrPresentation {
            complex,
            tau: FacetSet::empty(),
        }
    }

    pub fn tau(&self) -> FacetSet {
        self.tau
    }

    pub fn complex(&self) -> &'a FaceComplex {
        self.complex
    }

    pub fn num_vars(&self) -> usize {
        self.complex.num_facets()
    }

    /// Whether `x^m` survives in the quotient.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.complex.is_face(m.support().union(self.tau))
    }

    /// Minimal generators of the ideal: squarefree `sigma` disjoint from `tau`
    /// with `sigma ∪ tau` a non-face, minimal under inclusion.
    pub fn ideal_generators(&self) -> Vec<FacetSet> {
        let m = self.num_vars();
        let mut gens: Vec<FacetSet> = Vec::new();
        let free = m - self.tau.len();
        for k in 1..=free {
            for s in crate::polytope::subsets_of_size(m, k) {
                if !s.intersection(self.tau).is_empty() {
                    continue;
                }
                if !self.complex.is_face(s.union(self.tau)) && !gens.iter().any(|g| g.is_subset(s))
                {
                    gens.push(s);
                }
            }
        }
        gens
    }
}

/// Canonical normal form: drops every term lying in the ideal.
pub fn reduce(p: &Polynomial, pres: &SrPresentation<'_>) -> Polynomial {
    p.retain_terms(|m| pres.is_standard(m))
}

/// Substitutes `x_i -> 0` for every facet `i` not through `v`.
pub fn vertex_restrict(p: &Polynomial, v: &VertexData) -> Polynomial {
    p.restrict_to(v.facet_set)
}

/// One polynomial per vertex, in vertex order, each in the variables of the
/// facets through that vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PwTuple {
    pub components: Vec<Polynomial>,
}

impl PwTuple {
    pub fn mul(&self, other: &PwTuple) -> PwTuple {
        PwTuple {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }
}

/// Image of `p` in the piecewise-polynomial model.
pub fn sr_to_pw(p: &Polynomial, fc: &FaceComplex) -> PwTuple {
    PwTuple {
        components: fc
            .vertices()
            .iter()
            .map(|v| vertex_restrict(p, v))
            .collect(),
    }
}

/// Checks the edge conditions: along an edge from `v` to `w`, `p_v` with
/// `x_j = 0` equals `p_w` with `x_i = 0`, where `j` is the facet only
/// through `v` and `i` the facet only through `w`.
pub fn gkm_membership(t: &PwTuple, fc: &FaceComplex) -> Result<bool, AlgebraError> {
    if t.components.len() != fc.vertices().len() {
        return Err(AlgebraError::ShapeMismatch);
    }
    for (p, v) in t.components.iter().zip(fc.vertices()) {
        if p.nvars() != fc.num_facets() || !p.support().is_subset(v.facet_set) {
            return Err(AlgebraError::ShapeMismatch);
        }
    }
    for e in fc.edges() {
        let shared = fc.vertices()[e.left]
            .facet_set
            .intersection(fc.vertices()[e.right].facet_set);
        let a = t.components[e.left].restrict_to(shared);
        let b = t.components[e.right].restrict_to(shared);
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pullback along a face inclusion `G' ⊆ G` (`from.tau ⊆ to.tau`): the
/// identity on variables followed by normal form in the smaller face.
pub fn face_pullback(
    p: &Polynomial,
    from: &SrPresentation<'_>,
    to: &SrPresentation<'_>,
) -> Result<Polynomial, AlgebraError> {
    if !from.tau().is_subset(to.tau()) {
        return Err(AlgebraError::NotAFaceInclusion);
    }
    Ok(reduce(p, to))
}

/// Pushforward along a face inclusion (`to.tau ⊆ from.tau`), the module map
/// sending `1` to `x^{from.tau \ to.tau}`.
pub fn face_pushforward(
    p: &Polynomial,
    from: &SrPresentation<'_>,
    to: &SrPresentation<'_>,
) -> Result<Polynomial, AlgebraError> {
    if !to.tau().is_subset(from.tau()) {
        return Err(AlgebraError::NotAFaceInclusion);
    }
    let shift = Monomial::squarefree(p.nvars(), from.tau().difference(to.tau()));
    Ok(reduce(&p.mul_monomial(&shift), to))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(3, i - 1)
    }

    fn c(k: i64) -> Polynomial {
        Polynomial::constant(3, k.into())
    }

    fn fs(one_based: &[usize]) -> FacetSet {
        FacetSet::from_indices(one_based.iter().map(|i| i - 1))
    }

    fn triangle() -> FaceComplex {
        catalog::weighted_p2_112().face_complex().unwrap()
    }

    #[test]
    fn arithmetic() {
        let p = x(1).add(&x(2)).mul(&x(1).sub(&x(2)));
        assert_eq!(p, x(1).mul(&x(1)).sub(&x(2).mul(&x(2))));
        assert_eq!(c(1).mul(&p), p);
        assert_eq!(x(1).mul(&x(2)).mul(&x(2)).to_string(), "x1*x2^2");
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn display_order_is_graded_lex() {
        let p = c(5)
            .add(&x(3).scale(&(-3).into()))
            .add(&x(2).mul(&x(3)))
            .add(&x(1).mul(&x(1)));
        assert_eq!(p.to_string(), "x1^2 + x2*x3 - 3*x3 + 5");
        assert_eq!(c(-1).to_string(), "-1");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
    }

    #[test]
    fn reduce_examples() {
        let fc = triangle();
        let sr = SrPresentation::untwisted(&fc);
        assert!(reduce(&x(1).mul(&x(2)).mul(&x(3)), &sr).is_zero());

        let t12 = SrPresentation::new(&fc, fs(&[1, 2])).unwrap();
        let p = x(1).mul(&x(1)).mul(&x(2));
        assert_eq!(reduce(&p, &t12), p);

        let t1 = SrPresentation::new(&fc, fs(&[1])).unwrap();
        let p = x(2).mul(&x(3)).add(&x(1).scale(&5.into()));
        assert_eq!(reduce(&p, &t1), x(1).scale(&5.into()));
    }

    #[test]
    fn ideal_generators_of_shifted_presentations() {
        let fc = triangle();
        assert_eq!(
            SrPresentation::untwisted(&fc).ideal_generators(),
            vec![fs(&[1, 2, 3])]
        );
        assert_eq!(
            SrPresentation::new(&fc, fs(&[1, 2]))
                .unwrap()
                .ideal_generators(),
            vec![fs(&[3])]
        );
        assert_eq!(
            SrPresentation::new(&fc, fs(&[1]))
                .unwrap()
                .ideal_generators(),
            vec![fs(&[2, 3])]
        );
    }

    #[test]
    fn presentation_requires_face() {
        let fc = triangle();
        assert_eq!(
            SrPresentation::new(&fc, fs(&[1, 2, 3])).err(),
            Some(AlgebraError::NotAFace)
        );
    }

    #[test]
    fn vertex_restriction() {
        let v = VertexData {
            point: Vec::new(),
            facet_set: fs(&[1, 2]),
        };
        assert_eq!(
            vertex_restrict(&x(1).mul(&x(2)).add(&x(3)), &v),
            x(1).mul(&x(2))
        );
        assert!(vertex_restrict(&x(3), &v).is_zero());
        let w = VertexData {
            point: Vec::new(),
            facet_set: fs(&[1, 3]),
        };
        assert_eq!(vertex_restrict(&x(1), &w), x(1));
    }

    #[test]
    fn piecewise_images() {
        let fc = triangle();
        // vertices in order {1,2}, {1,3}, {2,3}
        let t = sr_to_pw(&x(1), &fc);
        assert_eq!(t.components, vec![x(1), x(1), Polynomial::zero(3)]);
        assert!(gkm_membership(&t, &fc).unwrap());

        let z = sr_to_pw(&x(1).mul(&x(2)).mul(&x(3)), &fc);
        assert!(z.components.iter().all(Polynomial::is_zero));
        assert!(gkm_membership(&z, &fc).unwrap());

        let bump = PwTuple {
            components: vec![c(1), Polynomial::zero(3), Polynomial::zero(3)],
        };
        assert!(!gkm_membership(&bump, &fc).unwrap());

        let bad = PwTuple {
            components: vec![x(3), Polynomial::zero(3), Polynomial::zero(3)],
        };
        assert_eq!(gkm_membership(&bad, &fc), Err(AlgebraError::ShapeMismatch));
    }

    #[test]
    fn pullback_and_pushforward() {
        let fc = triangle();
        let sr = SrPresentation::untwisted(&fc);
        let t1 = SrPresentation::new(&fc, fs(&[1])).unwrap();
        let t12 = SrPresentation::new(&fc, fs(&[1, 2])).unwrap();

        assert!(face_pullback(&x(2).mul(&x(3)), &t1, &t12)
            .unwrap()
            .is_zero());
        assert_eq!(face_pullback(&x(1), &t1, &t12).unwrap(), x(1));
        assert_eq!(face_pullback(&x(1), &t12, &t12).unwrap(), x(1));
        assert_eq!(
            face_pullback(&x(1), &t12, &t1),
            Err(AlgebraError::NotAFaceInclusion)
        );

        assert_eq!(face_pushforward(&c(1), &t12, &sr).unwrap(), x(1).mul(&x(2)));
        assert_eq!(face_pushforward(&c(1), &t12, &t1).unwrap(), x(2));
        assert_eq!(
            face_pushforward(&x(3), &t1, &t1).unwrap(),
            Polynomial::zero(3).add(&x(3))
        );
        assert_eq!(
            face_pushforward(&c(1), &t1, &t12),
            Err(AlgebraError::NotAFaceInclusion)
        );
    }

    #[test]
    fn monomials_of_degree() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0].to_string(), "x1^2");
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }
}
