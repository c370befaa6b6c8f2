//! Monomial ideals: integral closure through Newton polyhedra, primary
//! decomposition, associated primes, multigraded Betti numbers and the
//! Cohen-Macaulay test.

pub mod audit;
pub mod betti;
pub mod closure;
pub mod decompose;
pub mod document;
pub mod error;
pub mod family;
pub mod figure;
pub mod homology;
pub mod ideal;
mod lp;

pub use betti::{betti_table, is_cohen_macaulay, projective_dimension, BettiTable};
pub use closure::{
    closure_generators, np_membership, power_witness, verify_certificate, MembershipCertificate,
    RationalWeights,
};
pub use decompose::{
    associated_primes, codim, embedded_primes, irreducible_decomposition, minimal_primes,
    primary_components, primary_decomposition, IrreducibleComponent, PrimaryComponent,
    PrimeSupport,
};
pub use document::{parse_ideal, parse_monomial, IdealDocument};
pub use error::{Error, Result};
pub use family::{delta_set, family_ideal, reduce_to_delta, thm1_check, FamilyParams};
pub use ideal::{ExponentVector, MonomialIdeal};
