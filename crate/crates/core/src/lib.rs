//! Exact computation of Hodge spectra of motivic nearby and vanishing cycles
//! from combinatorial log-resolution data.
//!
//! The crate works entirely in the monodromic Hodge realization: classes are
//! finite integer combinations of monomials carrying monodromy eigenvalues in
//! `Q/Z` and a Hodge bidegree `(p, q)`.

pub mod classes;
pub mod cones;
pub mod convolution;
pub mod datum;
pub mod error;
pub mod lp;
pub mod oracle;
pub mod resolution;
pub mod series;
pub mod snf;
pub mod spectra;

pub use classes::{box_product, fiber_class, fiber_class_with_solutions, hsp1, hsp2, sp_from_class, ExponentMatrix, MonClass, MonKey};
pub use cones::{cone_limit, cone_series_truncated, delta_membership, euler_char, gamma_cone, Cone, LinForm, Relation};
pub use convolution::{convolve, pi_n_shriek, psi_sigma, psi_sigma_123, psi_table};
pub use datum::{Component, Cover, Functions, ResolutionDatum, Stratum};
pub use error::CoreError;
pub use series::{RationalSeries, SeriesTerm, TPolynomial};
pub use spectra::{delta, delta_n, geometric_factor, steenbrink_rhs, BiKey, BiSpectrumPoly, Frac, QmodZ, SpectrumPoly};
