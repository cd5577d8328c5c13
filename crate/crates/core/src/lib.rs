//! Equivariant cohomology of symplectic toric orbifolds from labeled
//! polytopes, computed with exact integer and rational arithmetic.
//!
//! The pipeline runs
//! [`LabeledPolytope`] → [`FaceComplex`] → [`SectorTable`] → ring operations:
//! Stanley-Reisner normal forms ([`stanley_reisner`]), the Chen-Ruan product
//! ([`chen_ruan`]) and restriction to fixed points ([`nh_restriction`]).
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use toric_orbifold::chen_ruan::cr_multiply;
//! use toric_orbifold::{catalog, CrClass, SectorId, ToricOrbifold};
//!
//! let orb = ToricOrbifold::new(catalog::weighted_p2_112()).unwrap();
//! let sigma = CrClass::unit(&orb, SectorId(1)).unwrap();
//! let square = cr_multiply(&orb, &sigma, &sigma).unwrap();
//! assert_eq!(square.to_string(), "(x1*x2)@g0");
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod chen_ruan;
pub mod error;
pub mod lattice;
pub mod nh_restriction;
pub mod polytope;
pub mod sectors;
pub mod simplex;
pub mod stanley_reisner;

pub use chen_ruan::{CrClass, StructureConstant};
pub use error::{AlgebraError, LatticeError, PolytopeError};
pub use lattice::{IntMatrix, Rational};
pub use nh_restriction::NhClass;
pub use polytope::{FaceComplex, FacetSet, LabeledPolytope, VertexData};
pub use sectors::{SectorElement, SectorId, SectorTable, ToricOrbifold};
pub use stanley_reisner::{Monomial, Polynomial, SrPresentation};
