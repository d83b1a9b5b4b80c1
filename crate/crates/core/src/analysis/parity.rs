use crate::error::{Result, TGraphError};
use crate::graph::TGraph;
use crate::presentation::{GeneratorBounds, GroupElement};

/// `(V1, V2)` with `V1 = {(i, j) : i + j even}`; two-generator bounds only.
pub fn parity_bipartition(g: &TGraph) -> Result<(Vec<usize>, Vec<usize>)> {
    if g.bounds().rank() != 2 {
        return Err(TGraphError::InvalidArgument(format!(
            "parity bipartition needs 2 generators, bounds {} have {}",
            g.bounds(),
            g.bounds().rank()
        )));
    }
    let n = g.bounds().as_slice()[1] as usize;
    Ok((0..g.order()).partition(|&v| (v / n + v % n).is_multiple_of(2)))
}

/// `(i, j) -> (1 - i, j)` on bounds `(2, n)`; a taxicab isometry and an
/// involution.
pub fn involution_image(bounds: &GeneratorBounds, x: &GroupElement) -> Result<GroupElement> {
    let b = bounds.as_slice();
    if b.len() != 2 || b[0] != 2 {
        return Err(TGraphError::InvalidArgument(format!(
            "involution is defined on bounds (2, n), got {bounds}"
        )));
    }
    bounds.index_of(x)?;
    let e = x.exponents();
    bounds.element(vec![1 - e[0], e[1]])
}
