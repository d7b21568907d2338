//! Exact computation of quantum weighted double Hurwitz numbers.
//!
//! The crate is organized bottom-up:
//!
//! * [`partitions`]: integer partitions, colength, automorphism and centralizer
//!   orders, Young diagram contents, monomial symmetric functions.
//! * [`qalgebra`]: exact rationals, truncated q-series and β-polynomials.
//! * [`symgroup`]: symmetric group characters (Murnaghan–Nakayama), a
//!   persistent character table cache and pure Hurwitz numbers, with a
//!   brute-force factorization counter as an oracle.
//! * [`weights`]: quantum weights under `c_i = q^i`, the partition function
//!   and the measures they induce on branch configurations and on partitions.
//! * [`hurwitz`]: weighted and quantum double Hurwitz numbers, their two-term
//!   zero-temperature expansion and weighted expectations.
//! * [`taufn`]: content products and power-sum coefficients of hypergeometric
//!   τ-functions, checked against [`hurwitz`].

pub mod error;
pub mod hurwitz;
pub mod partitions;
pub mod qalgebra;
pub mod symgroup;
pub mod taufn;
pub mod weights;

pub use error::{Error, Result};
pub use hurwitz::{LeadingTerms, QuantumHurwitzResult, Regime};
pub use num_rational::BigRational;
pub use partitions::{Cell, Partition};
pub use qalgebra::{BetaPoly, BetaQPoly, CoefficientRing, QSeries};
pub use symgroup::{BranchConfig, CharTable, CharacterStore};
pub use taufn::{ContentProduct, TauCheckReport};
pub use weights::{ColengthProfile, MeasureReport};
