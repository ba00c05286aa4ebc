//! Dimension towers over real quadratic fields.
//!
//! The crate computes, exactly and in arbitrary precision:
//!
//! - fundamental units of real quadratic fields Q(sqrt(D)) by continued
//!   fractions over the maximal order ([`quadfield`]);
//! - the "dimension" sequences d_l(D) = u_D^l + u_D^-l + 1 attached to each
//!   field, their Chebyshev-style polynomial algebra, the strong-divisibility
//!   law and its shear at powers of 3 ([`tower`]);
//! - multiplicative orders of units in (O_K / p^r)^x, the order-equality
//!   condition (W) and its independent reformulations: p-adic logarithm
//!   valuations, Lucas-sequence periods and first appearances of a prime in
//!   the tower ([`localorder`]);
//! - constructive generators for infinite families of non-p-rational real
//!   quadratic fields, emitting re-checkable JSON certificates ([`families`]).

pub mod error;
pub mod factor;
pub mod families;
pub mod localorder;
pub mod quadfield;
pub mod serde_util;
pub mod tower;

pub use error::{Error, Result};
pub use families::{
    enumerate_family, gen_theorem1, gen_theorem2, theorem1_max_t, verify_certificate,
    FamilyCertificate, FamilySpec, Theorem,
};
pub use localorder::{
    appears_in_tower, legendre, lucas_period, mult_order, padic_log_valuation, reduce_unit,
    satisfies_w, ResidueElement, TowerIndex, WReport,
};
pub use quadfield::{
    disc_map, fundamental_unit, fundamental_unit_with_budget, squarefree_part, QuadInt,
    SquarefreeDecomp, UnitRecord,
};
pub use tower::{
    delta_eval, delta_poly, dimension, gcd_of_dimensions, generating_coeffs, index_of_dimension,
    new_primes, subtower, DeltaPoly, Tower, TowerEntry,
};
