//! Polynomial arithmetic, the coloring polynomials and their coefficients.

pub mod coefficient;
pub mod families;
pub mod poly;
pub mod vandermonde;
pub mod vc;

pub use coefficient::{
    coefficient_by_expansion, coefficient_by_formula, coefficient_by_orientations,
    coloring_coefficient, Engine, FnEvaluator, Grid, GridEvaluator,
};
pub use families::{
    bounded_targets, check_field, eval_p, expand_p, max_terms_from_env, point_from_colors,
    ColoringPolynomial, PolyKind, DEFAULT_MAX_TERMS, MAX_TERMS_ENV,
};
pub use poly::SparsePolynomial;
pub use vandermonde::{signed_difference_product, vandermonde_check, vandermonde_determinant};
pub use vc::{
    orientation_count_check, enumerate_vc_monomials, is_vc_monomial, peel_splits, sample_vc_monomials,
    vc_completions, OrientationCountReport,
};
