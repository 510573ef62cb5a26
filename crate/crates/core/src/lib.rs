//! Exact-arithmetic Poincaré (generating) polynomials of smooth
//! equivariant toroidal compactifications of split semisimple groups,
//! and the motivic arithmetic of compactified torsors of the norm-one
//! group of a degree-p division algebra.
//!
//! The pipeline runs entirely over integers and arbitrary-precision
//! rationals:
//!
//! * [`root_datum`] — Cartan data of the irreducible types, the two
//!   lattice flavors, Weyl groups with reduced words and lengths;
//! * [`polyhedral`] — primitive vectors, simplicial cones, unimodularity,
//!   dual bases and the lexicographic sign of characters;
//! * [`fan`] — fans over shared rays, the Weyl-chamber fan, validity
//!   checks, stellar subdivision and W-symmetrization;
//! * [`poincare`] — generating polynomials of flag varieties, smooth
//!   complete toric varieties and toroidal compactifications, with the
//!   factorization through the flag polynomial;
//! * [`motivic`] — Rost/Severi-Brauer patterns, decomposition of a
//!   Poincaré polynomial into `P_R + m(t) P_S`, Chow-ring tables;
//! * [`specfile`] — the JSON schema for root-datum-plus-fan inputs.

pub mod error;
pub mod fan;
mod linalg;
pub mod motivic;
pub mod poincare;
pub mod polyhedral;
pub mod root_datum;
pub mod specfile;

pub use error::{Error, Result};
pub use fan::{
    cones_in_negative_chamber, stellar_subdivide, symmetrize, validate_fan, weyl_chamber_fan,
    Fan, FanReport,
};
pub use motivic::{
    chow_ring_sl1, chow_torsor, decompose, diagonal_pairs, rost_polynomial, sb_copy_count,
    severi_brauer_polynomial, ChowRingPresentation, DiagonalExpression, GroupDescriptor,
    MotivicDecomposition,
};
pub use poincare::{
    b_count, compactification_poincare, fixed_point_count, flag_poincare, toric_poincare,
    toric_poincare_standard, FactoredPoincare, PoincarePolynomial,
};
pub use polyhedral::{
    common_face, dual_basis, is_unimodular, lex_sign, lex_sign_standard, primitive, Cone,
    DualBasis, LatticeVector, Sign,
};
pub use root_datum::{
    build_root_datum, CartanType, Family, LatticeKind, RootDatum, WeylElement,
    WEYL_GROUP_LIMIT,
};
pub use specfile::SpecFile;
