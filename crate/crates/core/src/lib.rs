//! Exact-arithmetic toolkit for Weierstrass gaps, pure gaps and **c**-gaps at
//! totally ramified places of Kummer-type curves `y^m = f(x)`, and for the
//! two-point algebraic-geometric code parameters they certify.
//!
//! A curve is described purely by the multiset of zero/pole multiplicities of
//! the rational function `f` (no coordinates, no finite-field arithmetic):
//! Riemann-Roch dimensions of Galois-invariant divisors reduce to sums of
//! genus-zero dimensions indexed by powers of `y`, each a floor sum over the
//! multiplicity data. Everything downstream — gap sets, the c-gap criterion,
//! pure-gap enumeration, family verification, code parameter bounds — is built
//! on that reduction and on plain `i128` arithmetic with overflow checks.
//!
//! Module map:
//! - [`kummer`] — the dimension engine and gap predicates
//! - [`catalog`] — ramification data for the GK, 𝒳₁, 𝒳₂ and GGS curves
//! - [`families`] — closed-form two-point gap families and their verifier
//! - [`suzuki`] — the Suzuki curve's two-point theory (numerical semigroup,
//!   β pairing, maximal-sum pure gaps); independent of the Kummer engine
//! - [`codes`] — distance bounds, the two-point code design recipe, and the
//!   printed-parameter audit

pub mod arith;
pub mod catalog;
pub mod codes;
mod error;
pub mod families;
pub mod kummer;
pub mod suzuki;

pub use error::Error;
