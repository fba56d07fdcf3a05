//! The unit Shiha (USh) distribution on (0, 1) and the tooling around it.
//!
//! The crate covers exact evaluation of the Shiha and unit Shiha laws
//! ([`shiha`]), random variate generation ([`sampling`]), seven competitor
//! unit-interval families ([`dists`]), bounded maximum-likelihood fitting and
//! bootstrap intervals ([`inference`]), goodness-of-fit diagnostics
//! ([`gof`]), the Monte Carlo estimator study ([`sim`]) and report assembly
//! ([`report`]).
//!
//! ```
//! use unit_shiha::shiha::{ush_cdf, ush_quantile, UShParams};
//!
//! let p = UShParams::new(1.0, 0.4).unwrap();
//! let median = ush_quantile(0.5, &p, 1e-12).unwrap();
//! assert!((ush_cdf(median, &p) - 0.5).abs() < 1e-12);
//! ```

pub mod data;
pub mod dists;
pub mod error;
pub mod gof;
pub mod inference;
pub mod optim;
pub mod quadrature;
pub mod report;
pub mod rng;
pub mod roots;
pub mod sample;
pub mod sampling;
pub mod shiha;
pub mod sim;
pub mod special;

pub use error::{Error, Result};
pub use sample::{SampleSource, UnitSample};
pub use shiha::UShParams;
