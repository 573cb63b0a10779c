//! Polynomial arithmetic over ℚ, 𝔽_p and quadratic extensions, and the
//! computations on the cubic pencil, its cross ratios and the weighted
//! hypersurface model over 𝔽_5.

pub mod crossratio;
pub mod cubic;
pub mod field;
pub mod poly;
pub mod solver;
pub mod upoly;
pub mod weighted;

pub use crossratio::{cross_ratio_minimal_polynomials, squarefree_core, IntQuadratic};
pub use cubic::{
    classify_member, pencil_singular_locus, quadratic_factor_double_root, singular_locus, AnyPoly,
    FieldSpec, SingularKind, SingularMemberReport,
};
pub use field::{Field, Fp, Quad, Rat};
pub use poly::Poly;
pub use weighted::{weighted_member_check, WeightedReport};
