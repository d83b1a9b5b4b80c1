//! Closed-form predictions, returned as data.
//!
//! Nothing here asserts anything about real graphs: each function states what
//! a published claim predicts at given parameters, and the harness compares
//! that against brute force. Some of these claims are known to be false at
//! their boundaries.

use serde::Serialize;

use crate::analysis::ComponentKind;
use crate::error::{Result, TGraphError};

/// One claim evaluated at concrete parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub claim_id: String,
    pub bounds: Vec<u32>,
    pub t: u32,
    pub applicable: bool,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_edge_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_bipartite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_isolated_free: Option<bool>,
    /// Multiset of component shapes, sorted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_structure: Option<Vec<ComponentKind>>,
    /// The non-isolated components are pairwise isomorphic.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_isomorphic: Option<bool>,
}

impl Prediction {
    fn new(claim_id: &str, bounds: Vec<u32>, t: u32, reason: impl Into<String>) -> Self {
        Prediction {
            claim_id: claim_id.to_string(),
            bounds,
            t,
            applicable: true,
            reason: reason.into(),
            predicted_k: None,
            predicted_edge_count: None,
            predicted_chi: None,
            predicted_bipartite: None,
            predicted_isolated_free: None,
            predicted_structure: None,
            predicted_isomorphic: None,
        }
    }

    fn not_applicable(claim_id: &str, bounds: Vec<u32>, t: u32, reason: impl Into<String>) -> Self {
        Prediction {
            applicable: false,
            ..Prediction::new(claim_id, bounds, t, reason)
        }
    }

    fn k(mut self, k: usize) -> Self {
        self.predicted_k = Some(k);
        self
    }

    fn chi(mut self, chi: usize) -> Self {
        self.predicted_chi = Some(chi);
        self
    }

    fn structure(mut self, mut shapes: Vec<ComponentKind>) -> Self {
        shapes.sort();
        self.predicted_structure = Some(shapes);
        self
    }

    fn isomorphic(mut self) -> Self {
        self.predicted_isomorphic = Some(true);
        self
    }

    /// True when at least one field carries a predicted value.
    pub fn has_values(&self) -> bool {
        self.predicted_k.is_some()
            || self.predicted_edge_count.is_some()
            || self.predicted_chi.is_some()
            || self.predicted_bipartite.is_some()
            || self.predicted_isolated_free.is_some()
            || self.predicted_structure.is_some()
            || self.predicted_isomorphic.is_some()
    }
}

fn at_least_two(what: &str, v: u32) -> Result<()> {
    if v < 2 {
        return Err(TGraphError::InvalidParameter(format!(
            "{what} must be at least 2, got {v}"
        )));
    }
    Ok(())
}

fn positive_t(t: u32) -> Result<()> {
    if t == 0 {
        return Err(TGraphError::InvalidParameter("t must be at least 1".into()));
    }
    Ok(())
}

/// `ceil((m + n - 2) / 2)`, the regular-regime bound for two generators.
pub fn threshold_general(m: u32, n: u32) -> u32 {
    (m + n - 1) / 2
}

/// `ceil(n / 2)`, the dihedral regime boundary `r`.
pub fn threshold_dihedral(n: u32) -> u32 {
    n.div_ceil(2)
}

/// Two generators, `t <= threshold_general`: `k = 2` for even `t`, `1` for odd.
pub fn predict_components_2gen(m: u32, n: u32, t: u32) -> Result<Prediction> {
    at_least_two("m", m)?;
    at_least_two("n", n)?;
    positive_t(t)?;
    let threshold = threshold_general(m, n);
    if t > threshold {
        return Ok(Prediction::not_applicable(
            "T2",
            vec![m, n],
            t,
            format!("t > ceil((m+n-2)/2) = {threshold}"),
        ));
    }
    let (id, k) = if t.is_multiple_of(2) {
        ("T2.even", 2)
    } else {
        ("T2.odd", 1)
    };
    Ok(Prediction::new(id, vec![m, n], t, format!("t <= {threshold}")).k(k))
}

/// Cyclic group of order `m`: residue classes mod `t`, so `k = t` while
/// `t < m` and every vertex is isolated after that.
pub fn predict_components_cyclic(m: u32, t: u32) -> Result<Prediction> {
    at_least_two("m", m)?;
    positive_t(t)?;
    let p = Prediction::new("cyclic", vec![m], t, "residue classes mod t");
    Ok(if t < m {
        p.k(t as usize)
    } else {
        Prediction {
            reason: "t >= m, edgeless".into(),
            ..p
        }
        .k(m as usize)
    })
}

/// Edge count of bounds `(2, n)`: `3n - 2` at `t = 1`, `4(n - t) + 2` for
/// `2 <= t <= n`.
pub fn predict_edges_dihedral(n: u32, t: u32) -> Result<Prediction> {
    at_least_two("n", n)?;
    positive_t(t)?;
    if t > n {
        return Ok(Prediction::not_applicable(
            "L-edges",
            vec![2, n],
            t,
            "t > n, outside the edge-count formula",
        ));
    }
    let edges = if t == 1 { 3 * n - 2 } else { 4 * (n - t) + 2 };
    let mut p = Prediction::new(
        "L-edges",
        vec![2, n],
        t,
        if t == 1 { "3n-2" } else { "4(n-t)+2" },
    );
    p.predicted_edge_count = Some(edges as usize);
    Ok(p)
}

/// Component count of bounds `(2, n)` for `1 <= t <= n`, with `r = ceil(n/2)`:
/// - `t <= r` even: two isomorphic components;
/// - `t <= r` odd: connected;
/// - `t = r + s`: `4(s-1)+2` (n even) or `4s` (n odd) components, two of them
///   isomorphic paths on `2(n-t)+2` vertices and the rest isolated.
pub fn predict_components_dihedral(n: u32, t: u32) -> Result<Prediction> {
    at_least_two("n", n)?;
    positive_t(t)?;
    let r = threshold_dihedral(n);
    let b = vec![2, n];
    if t > n {
        return Ok(Prediction::not_applicable("T5", b, t, "t > n"));
    }
    if t <= r {
        return Ok(if t.is_multiple_of(2) {
            Prediction::new("T5.case1", b, t, format!("t <= r = {r}, t even"))
                .k(2)
                .isomorphic()
        } else {
            Prediction::new("T5.case2", b, t, format!("t <= r = {r}, t odd")).k(1)
        });
    }
    let s = t - r;
    let k = if n.is_multiple_of(2) {
        4 * (s - 1) + 2
    } else {
        4 * s
    };
    let path = (2 * (n - t) + 2) as usize;
    let isolated = (4 * t - 2 * n - 4) as usize;
    let mut shapes = vec![ComponentKind::Path(path), ComponentKind::Path(path)];
    shapes.extend(std::iter::repeat_n(ComponentKind::Isolated, isolated));
    Ok(
        Prediction::new("T5.case3", b, t, format!("t = r + s, r = {r}, s = {s}"))
            .k(k as usize)
            .structure(shapes)
            .isomorphic(),
    )
}

/// Special-case structure claims on bounds `(2, n)` that apply at `(n, t)`.
pub fn predict_structure_corollaries(n: u32, t: u32) -> Result<Vec<Prediction>> {
    at_least_two("n", n)?;
    positive_t(t)?;
    let r = threshold_dihedral(n);
    let b = || vec![2, n];
    let mut out = Vec::new();
    if n % 2 == 1 && n >= 5 && 2 * t == n + 1 {
        let n = n as usize;
        out.push(if t % 2 == 1 {
            Prediction::new("C-T7.odd", b(), t, "n odd, t = (n+1)/2 odd")
                .k(1)
                .chi(2)
                .structure(vec![ComponentKind::Cycle(2 * n)])
        } else {
            Prediction::new("C-T7.even", b(), t, "n odd, t = (n+1)/2 even")
                .k(2)
                .chi(3)
                .structure(vec![ComponentKind::Cycle(n), ComponentKind::Cycle(n)])
                .isomorphic()
        });
    }
    if n.is_multiple_of(2) && t == n / 2 + 1 {
        out.push(
            Prediction::new("C-paths", b(), t, "n even, t = n/2 + 1")
                .k(2)
                .structure(vec![ComponentKind::Path(n as usize); 2])
                .isomorphic(),
        );
    }
    if t == n {
        let mut shapes = vec![ComponentKind::Path(2), ComponentKind::Path(2)];
        shapes.extend(std::iter::repeat_n(
            ComponentKind::Isolated,
            2 * n as usize - 4,
        ));
        out.push(
            Prediction::new("C-ngraph", b(), t, "t = n")
                .k(2 * (n as usize - 1))
                .structure(shapes),
        );
    }
    if t <= n && ((t <= r && t % 2 == 1) || t > r) {
        out.push(Prediction::new("C-2chrom", b(), t, format!("r = {r}")).chi(2));
    }
    Ok(out)
}

/// Odd `t <= ceil((m+n-2)/2)` gives a bipartite graph; at `m = 2, t = 1`
/// this is the ladder.
pub fn predict_bipartite(m: u32, n: u32, t: u32) -> Result<Prediction> {
    at_least_two("m", m)?;
    at_least_two("n", n)?;
    positive_t(t)?;
    let threshold = threshold_general(m, n);
    let id = if m == 2 && t == 1 { "E2" } else { "T6" };
    if t.is_multiple_of(2) || t > threshold {
        return Ok(Prediction::not_applicable(
            id,
            vec![m, n],
            t,
            "needs odd t <= threshold",
        ));
    }
    let mut p = Prediction::new(id, vec![m, n], t, format!("odd t <= {threshold}"));
    p.predicted_bipartite = Some(true);
    Ok(p)
}

/// Claims "no isolated vertices iff `t <= ceil((m+n-2)/2)`". Known to fail in
/// the "only if" direction, e.g. at `(2, 4, 3)`.
pub fn predict_isolated_free(m: u32, n: u32, t: u32) -> Result<Prediction> {
    at_least_two("m", m)?;
    at_least_two("n", n)?;
    positive_t(t)?;
    let threshold = threshold_general(m, n);
    let mut p = Prediction::new(
        "L-isolated",
        vec![m, n],
        t,
        format!("isolated-free iff t <= {threshold}"),
    );
    p.predicted_isolated_free = Some(t <= threshold);
    Ok(p)
}

/// Every claim with something to say about bounds `(m, n)` at `t`.
pub fn predictions_for(bounds: &[u32], t: u32) -> Result<Vec<Prediction>> {
    let mut out = Vec::new();
    match *bounds {
        [m] => out.push(predict_components_cyclic(m, t)?),
        [m, n] => {
            out.push(predict_components_2gen(m, n, t)?);
            out.push(predict_bipartite(m, n, t)?);
            out.push(predict_isolated_free(m, n, t)?);
            if m == 2 {
                out.push(predict_edges_dihedral(n, t)?);
                out.push(predict_components_dihedral(n, t)?);
                out.extend(predict_structure_corollaries(n, t)?);
            }
        }
        _ => {}
    }
    Ok(out)
}
