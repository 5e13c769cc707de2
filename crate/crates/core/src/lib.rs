//! Exact-arithmetic construction and verification of Radford biproduct Hopf
//! algebras over the Gaussian rationals.
//!
//! The library builds a pair of 32-dimensional Hopf algebras as biproducts
//! `A ⋆ K[ℤ₂×ℤ₂]` of eight-dimensional Yetter–Drinfel'd Hopf algebras, then
//! mechanically certifies their structure: Hopf axioms, centers, group-like
//! elements, Wedderburn decompositions, Hopf subalgebras and quotients,
//! extensions, Grothendieck rings, and the isomorphism between the two
//! biproducts.  Every computation is exact — scalars live in ℚ(i), and any
//! comparison is equality on the nose, never within a tolerance.
//!
//! Module layout:
//!
//! * [`exact_math`] — Gaussian-rational scalars, dense matrices and rank-3
//!   tensors, fraction-free elimination, subspaces in reduced row-echelon
//!   form, polynomial roots over ℚ(i), and joint eigenspace splitting.
//! * [`groups`] — small finite groups as Cayley tables, their group algebras,
//!   character groups, and bicharacters.
//! * [`hopf_core`] — Hopf algebras as structure-constant tensors; axiom
//!   verification, antipode solving, duals, morphisms, integrals.
//! * [`yd_biproduct`] — Yetter–Drinfel'd Hopf algebras over group algebras,
//!   the Radford biproduct, dual YD structures, and dual-cocycle smashes.
//! * [`analysis`] — structural invariants of a finished Hopf algebra: center,
//!   group-likes, Wedderburn blocks, subalgebra/ideal enumeration, quotients,
//!   extensions, and Grothendieck tables.
//! * [`catalog`] — the concrete objects under study, their named elements,
//!   canonical morphisms, and the frozen expected values the acceptance
//!   suite diffs against.

pub mod analysis;
pub mod catalog;
pub mod exact_math;
pub mod groups;
pub mod hopf_core;
pub mod yd_biproduct;

pub use exact_math::{GaussianRational, Matrix, Polynomial, Rational, Subspace, Tensor3, Vector};
pub use groups::FiniteGroup;
pub use hopf_core::{HopfAlgebra, HopfMorphism};
pub use yd_biproduct::YDHopfAlgebra;
