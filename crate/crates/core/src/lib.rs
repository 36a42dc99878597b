//! Exact computer algebra for rational plane curves.
//!
//! Given a parametrization (g1 : g2 : g3) of a plane curve, this crate
//! computes its mu-basis, implicit equation, generators of the moving
//! curve ideal, first-order subresultants, adjoint pencils, and a
//! generalized Taylor resultant locating the curve's singular
//! parameters. All arithmetic is exact over the rationals.

pub mod adjoint;
pub mod biform;
pub mod inertia;
pub mod linalg;
pub mod mubasis;
pub mod poly;
pub mod resultants;
pub mod scalar;
pub mod text;
pub mod univariate;
pub mod variable;
pub mod verify;

pub use adjoint::{
    adjoint_candidates, adjoint_pencils, branch_adjoint_check, d_resultant, inverse_map,
    polar_curve, report_with_retries, singularity_report, AdjointError, CurveModel,
    SingularityReport,
};
pub use biform::BiForm;
pub use inertia::{
    is_inertia_form, iterated_sylvester, m_matrix, m_minors, morley_form,
    moving_curve_generators, sylvester_form, GeneratorSet, MorleyForm, SylvesterForm,
};
pub use linalg::{PolyMatrix, QMatrix};
pub use mubasis::{
    degree_of_map, implicit_equation, mu_basis, syzygies_of_degree, MuBasis, MuBasisError,
    Parametrization,
};
pub use poly::{MultiPoly, PolyError};
pub use resultants::{resultant_derivative_congruence, FormPair, ResultantError};
pub use scalar::Scalar;
pub use text::{parse_poly, ParseError};
pub use variable::Var;
pub use verify::{all_pass, verify_curve, Check};
