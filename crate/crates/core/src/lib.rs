//! Exact ideal arithmetic in numerical semigroup rings and monomial quotient
//! rings, with decision procedures for Cohen-Macaulay, Gorenstein and
//! quasi-Gorenstein properties of blowup algebras.

pub mod backend;
pub mod criteria;
pub mod error;
pub mod filtration;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod presentation;
pub mod scalar;
pub mod semigroup;
pub mod series;

pub use backend::{IdealBackend, Verdict, Witness};
pub use error::{Error, Result};
pub use ideal::{QuotientView, RingIdeal, SemigroupRing, PRECISION_CAP};
pub use monomial::{Length, MonomialIdeal, MonomialQuotientRing};
pub use scalar::{Field, Scalar};
pub use semigroup::NumericalSemigroup;
pub use series::{parse_element, SeriesOp, TruncatedSeries, Valuation};
