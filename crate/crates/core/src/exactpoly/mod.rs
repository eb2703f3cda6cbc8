//! Exact polynomial and truncated power series arithmetic.
//!
//! All containers are sparse and canonical: zero coefficients are never
//! stored, so structural equality is mathematical equality.

mod poly;
mod ring;
mod series;
mod sixvar;

pub use poly::{falling_factorial, rising_factorial, Poly, RatPoly, UniPoly};
pub use ring::Ring;
pub use series::{series_sum_of_ratios, RatioTerm, TruncatedSeries};
pub use sixvar::{SixVarPoly, Var};
