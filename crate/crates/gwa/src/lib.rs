//! Exact symbolic computation for generalized Weyl algebras.
//!
//! The crate provides, bottom up:
//!
//! - [`scalars`]: an exact scalar tower (rationals, cyclotomic extension,
//!   transcendental parameters) with decidable equality;
//! - [`poly`] / [`ratfun`]: multivariate polynomial, Laurent and rational
//!   function arithmetic over that tower;
//! - [`autos`]: substitution automorphisms with explicit inverses, integer
//!   lattices of automorphism words, and the imprimitive complex reflection
//!   groups G(m,p,n);
//! - [`skew`]: the skew monoid ring L*M with twisted multiplication, the
//!   evaluation action, Reynolds averaging and lattice generation checks;
//! - [`algebra`]: generalized Weyl algebra presentations D(a, sigma), a
//!   rewriting engine for normal forms, tensor products, the embedding into
//!   the skew ring, and a catalog of standard algebras;
//! - [`invariants`]: reflection-group actions on GWAs, cyclic invariants,
//!   explicit invariant generators with their skew images, eigenspace
//!   decompositions, and principal/rational Galois-order checks;
//! - [`tableaux`]: weight modules with generalized-tableaux bases over finite
//!   orbit windows;
//! - [`scenario`]: a declarative runner that assembles the pieces from a
//!   config file and emits deterministic reports.
//!
//! See the `examples/` directory for one runnable walkthrough per capability,
//! and the `gwa` binary for the scenario CLI.

pub mod algebra;
pub mod autos;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod parse;
pub mod poly;
pub mod ratfun;
pub mod sample;
pub mod scalars;
pub mod scenario;
pub mod skew;
pub mod tableaux;

pub use error::{Error, Result};

#[cfg(test)]
mod conformance {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_shareable_across_threads() {
        assert_send_sync::<crate::scalars::Scalar>();
        assert_send_sync::<crate::poly::Poly>();
        assert_send_sync::<crate::ratfun::RatFun>();
        assert_send_sync::<crate::autos::Automorphism>();
        assert_send_sync::<crate::autos::ReflectionGroupElement>();
        assert_send_sync::<crate::skew::SkewElement>();
        assert_send_sync::<crate::algebra::GwaElement>();
        assert_send_sync::<crate::tableaux::OrbitTruncation>();
    }
}
