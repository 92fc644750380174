//! Multivariate polynomials over `F_p`, Groebner bases of ideals and
//! submodules, and syzygy computation.

mod gb;
mod module;
mod monomial;
mod parse;
mod poly;

pub use module::{
    apply_matrix, buchberger, middle_cohomology_vanishes, module_kernel, normal_form,
    prune_generators, quotient_monomial_basis, submodule_contains, ModuleGB, ModuleVector,
    PolyQuotient, QuotientBasis,
};
pub use monomial::{Monomial, MonomialOrder, MAX_EXPONENT};
pub use parse::{
    literal_mod, parse_element, parse_expr, parse_poly, split_list, Evaluator, Expr, RingEval,
};
pub use poly::{PolyRing, Polynomial};

#[cfg(test)]
mod tests;
