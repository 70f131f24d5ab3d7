//! Sumset semigroups: finite-set arithmetic, binomial ideals and Gröbner
//! bases, semigroup ideals of grid families, and elasticity.
//!
//! All arithmetic is exact. Set elements and exponents are generic over
//! [`num::Natural`], lattice entries over [`num::Int`]; the aliases below
//! fix the usual choices.

pub mod binomial;
pub mod elasticity;
pub mod error;
pub mod hilbert;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod num;
pub mod semigroup;
pub mod sumset;

pub use binomial::{
    buchberger, eliminate, format_binomial, format_monomial, normal_form, parse_binomial,
    parse_monomial, Binomial, BinomialIdeal, Monomial, MonomialOrder, OrderSpec, VariableContext,
};
pub use elasticity::{
    acceptable_elasticity, closed_form_check, elasticity, elasticity_atoms, elasticity_data,
    elasticity_from_system, express, strongly_reduced, system_strongly_reduced, Acceptable,
    AcceptableOptions, ElasticityData, FactorizationPair,
};
pub use error::{Error, Result};
pub use hilbert::{hilbert_basis, HilbertBasisSet};
pub use lattice::{lattice_equations, lattice_from_ideal, DiophantineSystem, IntegerLattice};
pub use num::{Int, Natural};
pub use semigroup::{
    algorithm1, numerical_semigroup_ideal, pair_ideal_generator, recognize_generators, split_ideal,
    verify_ideal, IdealResult, PureGrid, ShiftedGrid, SumsetSemigroupSpec, VerifyReport,
};
pub use sumset::{
    eval_word, grid_set, relations_up_to_degree, words_up_to_degree, FiniteSet, GeneratorWord,
};

/// Sets of arbitrary-precision naturals.
pub type BigFiniteSet = FiniteSet<num_bigint::BigUint>;
/// Sets of machine integers; operations panic on overflow.
pub type FiniteSet64 = FiniteSet<u64>;
pub type BigMonomial = Monomial<num_bigint::BigUint>;
pub type BigBinomial = Binomial<num_bigint::BigUint>;
pub type BigIdeal = BinomialIdeal<num_bigint::BigUint>;
/// Small exponents, for speed; arithmetic panics on overflow.
pub type Monomial32 = Monomial<u32>;
pub type Binomial32 = Binomial<u32>;
pub type Ideal32 = BinomialIdeal<u32>;
pub type Lattice = IntegerLattice<num_bigint::BigInt>;
pub type System = DiophantineSystem<num_bigint::BigInt>;
