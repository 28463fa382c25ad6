//! Exact arithmetic for 2×2 integer matrices acting on the torus and on the
//! finite lattices `(Z/n)^2`: periodic-point counts, dynamical zeta functions,
//! orbit censuses, local conjugacy and the structure of fixed-point groups.
//!
//! Everything is generic over an integer scalar where that is cheap; the
//! aliases below pin the arbitrary-precision types the rest of the API uses.

pub mod arith;
pub mod conjugacy;
pub mod counts;
pub mod error;
pub mod group;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod pseq;
pub mod scalar;
pub mod smith;
pub mod zeta;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use matrix::{EigenData, InvariantTriple, Mat2};
pub use poly::{cyclotomic, euler_product, CyclotomicFactors, Poly};
pub use pseq::PSequence;
pub use scalar::{ExactDiv, IntScalar};
pub use smith::{smith_form, SmithForm2};

pub use conjugacy::{
    brute_force_conjugator, build_conjugator, conjugator_to_companion, decide_all_n_conjugacy,
    mgcd_transform, normal_form_mod, primitive_representation, quadratic_form, ConjugacyCertificate,
    Mat3, QuadraticForm,
};
pub use counts::{
    fixed_count, fixed_from_orbit, is_exactly_realizable, orbit_counts_from_fixed, CountsTable,
    FixedCount, Realizability,
};
pub use group::{
    elementary_divisors_from_counts, elementary_divisors_oracle, fix_group_order_chain, AbelianType,
};
pub use lattice::{
    canonical_graph, direct_limit_factors, direct_limit_lcm, fixed_count_mod, minimal_count_period,
    orbit_census, ord, reduce, same_local_statistics, Budget, Mat2Zn, OrbitCensus,
};
pub use zeta::{
    radius_of_convergence, zeta_closed_form, zeta_series, zeta_series_from_counts, RationalZeta,
    ZetaCase,
};

pub type Mat2Z = Mat2<BigInt>;
pub type Mat2I64 = Mat2<i64>;
pub type IntPolynomial = Poly<BigInt>;
pub type RationalSeries = Poly<BigRational>;
pub type PSequenceZ = PSequence<BigInt>;
pub type SmithFormZ = SmithForm2<BigInt>;
