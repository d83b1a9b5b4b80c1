//! Taxicab distance on exponent vectors.

use crate::error::{Result, TGraphError};
use crate::presentation::GroupElement;

/// `sum |x_i - y_i|` over the exponent vectors of `x` and `y`.
pub fn d1(x: &GroupElement, y: &GroupElement) -> Result<u32> {
    if x.exponents().len() != y.exponents().len() {
        return Err(TGraphError::IncompatibleElements {
            left: x.exponents().to_vec(),
            right: y.exponents().to_vec(),
        });
    }
    Ok(distance(x.exponents(), y.exponents()))
}

#[inline]
pub(crate) fn distance(x: &[u32], y: &[u32]) -> u32 {
    x.iter().zip(y).map(|(&a, &b)| a.abs_diff(b)).sum()
}
