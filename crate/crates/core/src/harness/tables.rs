use rayon::prelude::*;

use crate::error::Result;
use crate::metric::distance;
use crate::Limits;

use super::claims::{ClaimInstance, ClaimValues, GroundTruth, Status};
use super::fixtures::{TableFixture, TableId, TABLE1_LABELS};

/// All 64 cells of the distance table on bounds (2, 4), in the published
/// row/column order. The one known erratum comes out as a MISMATCH.
pub fn reproduce_distance_table() -> Result<Vec<ClaimInstance>> {
    let fixture = TableFixture::load(TableId::Distances)?;
    Ok(fixture
        .cells
        .iter()
        .map(|cell| {
            let (row_label, x) = TABLE1_LABELS[cell.row as usize];
            let (col_label, y) = TABLE1_LABELS[cell.col as usize];
            let published = ClaimValues {
                value: Some(cell.value),
                ..Default::default()
            };
            let computed = ClaimValues {
                value: Some(distance(&x, &y)),
                ..Default::default()
            };
            ClaimInstance::compare(
                TableId::Distances.name(),
                vec![2, 4],
                0,
                published,
                computed,
            )
            .with_detail(format!("{row_label}|{col_label}"))
        })
        .collect())
}

/// Recomputes every published cell of the component table for `m` in
/// {2, 3}, rows `n = 2..=n_max` (capped at the published 20). Each cell is
/// counted by union-find and cross-checked against the Laplacian nullity.
pub fn reproduce_component_table(
    m: u32,
    n_max: u32,
    limits: &Limits,
) -> Result<Vec<ClaimInstance>> {
    let fixture = TableFixture::components(m)?;
    let cells: Vec<_> = fixture.cells.iter().filter(|c| c.row <= n_max).collect();
    let mut out = cells
        .par_iter()
        .map(|cell| {
            let (n, t) = (cell.row, cell.col);
            let gt = GroundTruth::build(&[m, n], t, limits)?;
            let published = ClaimValues {
                k: Some(cell.value as usize),
                ..Default::default()
            };
            let computed = ClaimValues {
                k: Some(gt.k()),
                ..Default::default()
            };
            Ok(ClaimInstance::compare(
                fixture.id.name(),
                vec![m, n],
                t,
                published,
                computed,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(ClaimInstance::sort_key);
    Ok(out)
}

/// Pinned expectation for the distance table: exactly the masked cells
/// mismatch.
pub fn distance_table_as_expected(instances: &[ClaimInstance]) -> bool {
    let fixture = match TableFixture::load(TableId::Distances) {
        Ok(f) => f,
        Err(_) => return false,
    };
    let expected: Vec<String> = fixture
        .erratum_mask
        .iter()
        .map(|&(r, c)| {
            format!(
                "{}|{}",
                TABLE1_LABELS[r as usize].0, TABLE1_LABELS[c as usize].0
            )
        })
        .collect();
    let mismatched: Vec<String> = instances
        .iter()
        .filter(|i| i.status == Status::Mismatch)
        .filter_map(|i| i.detail.clone())
        .collect();
    instances.len() == 64 && mismatched == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_table_single_erratum() {
        let cells = reproduce_distance_table().unwrap();
        assert_eq!(cells.len(), 64);
        let bad: Vec<_> = cells
            .iter()
            .filter(|c| c.status == Status::Mismatch)
            .collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].detail.as_deref(), Some("ab^2|b^3"));
        assert_eq!(bad[0].predicted.value, Some(3));
        assert_eq!(bad[0].observed.value, Some(2));
        let find = |d: &str| {
            cells
                .iter()
                .find(|c| c.detail.as_deref() == Some(d))
                .unwrap()
        };
        assert_eq!(find("a|b^3").observed.value, Some(4));
        assert_eq!(find("a|b^3").status, Status::Match);
        assert_eq!(find("b^3|ab^2").observed.value, Some(2));
        assert_eq!(find("b^3|ab^2").status, Status::Match);
        assert!(distance_table_as_expected(&cells));
    }

    #[test]
    fn small_component_tables() {
        let limits = Limits::default();
        let t2 = reproduce_component_table(2, 6, &limits).unwrap();
        assert_eq!(t2.len(), 2 + 3 + 4 + 5 + 6);
        assert!(t2.iter().all(|c| c.status == Status::Match));
        let t3 = reproduce_component_table(3, 5, &limits).unwrap();
        let cell = t3.iter().find(|c| c.bounds == [3, 5] && c.t == 4).unwrap();
        assert_eq!(cell.observed.k, Some(3));
        let cell = t3.iter().find(|c| c.bounds == [3, 2] && c.t == 3).unwrap();
        assert_eq!(cell.observed.k, Some(4));
    }
}
