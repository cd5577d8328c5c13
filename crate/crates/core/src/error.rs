use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    ShapeMismatch { expected: usize, found: usize },
    NotSquare { rows: usize, cols: usize },
    SingularMatrix,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::ShapeMismatch { expected, found } => {
                write!(f, "ShapeMismatch: expected {expected}, found {found}")
            }
            LatticeError::NotSquare { rows, cols } => {
                write!(f, "NotSquare: matrix is {rows}x{cols}")
            }
            LatticeError::SingularMatrix => write!(f, "SingularMatrix: determinant is zero"),
        }
    }
}

impl core::error::Error for LatticeError {}

/// Reasons a labeled polytope is rejected. Facet and vertex indices in
/// messages are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeError {
    /// Normals, labels or offsets have inconsistent lengths, or `m <= n`.
    Malformed(&'static str),
    TooManyFacets(usize),
    NonPositiveLabel {
        facet: usize,
    },
    NonPrimitiveNormal {
        facet: usize,
    },
    UnboundedPolytope,
    EmptyPolytope,
    NotFullDimensional,
    RedundantFacet {
        facet: usize,
    },
    NotSimple {
        facets: alloc::vec::Vec<usize>,
    },
    TorsionCokernel,
}

impl PolytopeError {
    /// Condition name as used in diagnostics and machine output.
    pub fn name(&self) -> &'static str {
        match self {
            PolytopeError::Malformed(_) => "Malformed",
            PolytopeError::TooManyFacets(_) => "TooManyFacets",
            PolytopeError::NonPositiveLabel { .. } => "NonPositiveLabel",
            PolytopeError::NonPrimitiveNormal { .. } => "NonPrimitiveNormal",
            PolytopeError::UnboundedPolytope => "UnboundedPolytope",
            PolytopeError::EmptyPolytope => "EmptyPolytope",
            PolytopeError::NotFullDimensional => "NotFullDimensional",
            PolytopeError::RedundantFacet { .. } => "RedundantFacet",
            PolytopeError::NotSimple { .. } => "NotSimple",
            PolytopeError::TorsionCokernel => "TorsionCokernel",
        }
    }
}

impl fmt::Display for PolytopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        match self {
            PolytopeError::Malformed(why) => write!(f, ": {why}"),
            PolytopeError::TooManyFacets(m) => write!(f, ": {m} facets (at most 64 supported)"),
            PolytopeError::NonPositiveLabel { facet } => write!(f, ": facet {facet}"),
            PolytopeError::NonPrimitiveNormal { facet } => write!(f, ": facet {facet}"),
            PolytopeError::RedundantFacet { facet } => write!(f, ": facet {facet}"),
            PolytopeError::NotSimple { facets } => {
                write!(f, ": vertex lies on facets {{")?;
                for (k, i) in facets.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, "}}")
            }
            _ => Ok(()),
        }
    }
}

impl core::error::Error for PolytopeError {}

impl From<LatticeError> for PolytopeError {
    fn from(_: LatticeError) -> Self {
        PolytopeError::Malformed("inconsistent matrix shapes")
    }
}

/// Errors from the ring-level modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// A component uses a variable outside the allowed set, or has the wrong
    /// number of variables or components.
    ShapeMismatch,
    /// The shift sets of two presentations are not nested as required.
    NotAFaceInclusion,
    /// The shift set of a presentation is not a face of the complex.
    NotAFace,
    UnlistedSector,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgebraError::ShapeMismatch => "ShapeMismatch",
            AlgebraError::NotAFaceInclusion => "NotAFaceInclusion",
            AlgebraError::NotAFace => "NotAFace",
            AlgebraError::UnlistedSector => "UnlistedSector",
        };
        f.write_str(s)
    }
}

impl core::error::Error for AlgebraError {}
