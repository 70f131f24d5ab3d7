//! Monomials, binomials, monomial orders and Gröbner bases of binomial ideals.

#[allow(clippy::module_inception)]
mod binomial;
mod groebner;
mod ideal;
mod monomial;
mod order;

pub use binomial::{
    binomial_from_json, binomial_to_json, format_binomial, format_monomial, monomial_from_json,
    monomial_to_json, parse_binomial, parse_monomial, s_binomial, Binomial,
};
pub use groebner::{
    buchberger, eliminate, is_reduced_groebner_basis, normal_form, reduce_basis, reduce_binomial,
};
pub use ideal::BinomialIdeal;
pub use monomial::{Monomial, VariableContext};
pub use order::{MonomialOrder, OrderKind, OrderSpec};
