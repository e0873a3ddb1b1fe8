//! Exact periodic-structure invariants for continuous and C^1 self-maps of
//! products of spheres of pairwise distinct dimensions.
//!
//! A map of `S^{n_1} x ... x S^{n_l}` (with `n_1 < ... < n_l`) is described,
//! for the purposes of this crate, by one integer *basic eigenvalue* per
//! sphere factor: the degree of the induced map on that factor's fundamental
//! homology class. Every other homology eigenvalue is a subset product of
//! the basic ones, which makes the whole Lefschetz apparatus computable in
//! exact integer and rational arithmetic:
//!
//! - Lefschetz numbers of iterates and their Möbius-inverted companions
//!   ([`lefschetz`]),
//! - the zeta function of the map as a factored rational function with
//!   integer linear factors, plus exact power-series expansions ([`zeta`]),
//! - minimal sets of Lefschetz periods, the periodic-data obstruction to
//!   finitely many hyperbolic periodic points, and the period-set
//!   classification of transversal maps ([`classify`]),
//! - sphere-product models of compact simple Lie groups ([`homology`]),
//! - independent brute-force routes to the same quantities for
//!   cross-validation ([`oracle`]).

pub mod classify;
pub mod homology;
pub mod lefschetz;
pub mod numtheory;
pub mod oracle;
pub mod zeta;

pub use homology::{HomologyError, LieGroupPreset, MapDescriptor, SphereProduct};
pub use zeta::FactoredRationalFunction;
