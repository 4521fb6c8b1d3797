//! Weyl orbit functions of the Lie algebras `A_n` and the multivariate
//! Chebyshev-like polynomials built from them.
//!
//! Weights are integer vectors in the basis of fundamental weights
//! (ω-coordinates); points of the torus are real vectors in the basis of
//! simple roots (α-coordinates). The e-coordinates on the hyperplane
//! `Σ l_k = 0` of `ℝ^{n+1}` are available for both.

pub mod analysis;
pub mod chebyshev;
pub mod error;
pub mod exp_ring;
pub mod lie;
pub mod orbit_functions;
pub mod weyl;

pub use chebyshev::{PolyKind, XPolynomial, YLaurent};
pub use error::{Error, Result};
pub use exp_ring::{ExpSum, OrbitDecomposition};
pub use lie::{EWeight, Rank, Weight};
pub use orbit_functions::{AlphaPoint, EPoint, OrbitFunction, OrbitKind};
pub use weyl::{Sign, SignedOrbit, SignedOrbitPoint};
