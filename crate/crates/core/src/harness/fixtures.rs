//! Published tables, embedded verbatim.

use crate::error::{Result, TGraphError};

pub const TABLE1_SOURCE: &str = include_str!("../../fixtures/table1_distances.txt");
pub const TABLE2_SOURCE: &str = include_str!("../../fixtures/table2_components.txt");
pub const TABLE3_SOURCE: &str = include_str!("../../fixtures/table3_components.txt");

/// Row/column order of the distance table and the matching exponent vectors
/// on bounds (2, 4).
pub const TABLE1_LABELS: [(&str, [u32; 2]); 8] = [
    ("1", [0, 0]),
    ("a", [1, 0]),
    ("b", [0, 1]),
    ("b^2", [0, 2]),
    ("b^3", [0, 3]),
    ("ab", [1, 1]),
    ("ab^2", [1, 2]),
    ("ab^3", [1, 3]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    Distances,
    ComponentsM2,
    ComponentsM3,
}

impl TableId {
    pub fn name(self) -> &'static str {
        match self {
            TableId::Distances => "T1-distances",
            TableId::ComponentsM2 => "T2-components",
            TableId::ComponentsM3 => "T3-components",
        }
    }
}

/// One published cell. For the distance table `row`/`col` index
/// [`TABLE1_LABELS`]; for component tables `row` is `n` and `col` is `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
    pub value: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFixture {
    pub id: TableId,
    pub cells: Vec<Cell>,
    /// `(row, col)` of published cells known to disagree with recomputation.
    pub erratum_mask: Vec<(u32, u32)>,
}

impl TableFixture {
    pub fn load(id: TableId) -> Result<Self> {
        match id {
            TableId::Distances => parse_distances(TABLE1_SOURCE),
            TableId::ComponentsM2 => parse_components(id, TABLE2_SOURCE),
            TableId::ComponentsM3 => parse_components(id, TABLE3_SOURCE),
        }
    }

    /// Component table for `m` in {2, 3}.
    pub fn components(m: u32) -> Result<Self> {
        match m {
            2 => Self::load(TableId::ComponentsM2),
            3 => Self::load(TableId::ComponentsM3),
            _ => Err(TGraphError::InvalidParameter(format!(
                "component tables exist for m = 2 and m = 3, not {m}"
            ))),
        }
    }

    pub fn is_erratum(&self, row: u32, col: u32) -> bool {
        self.erratum_mask.contains(&(row, col))
    }
}

fn data_lines(src: &str) -> impl Iterator<Item = &str> {
    src.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn bad(reason: impl Into<String>) -> TGraphError {
    TGraphError::Parse {
        input: "embedded fixture".into(),
        reason: reason.into(),
    }
}

fn parse_distances(src: &str) -> Result<TableFixture> {
    let mut cells = Vec::new();
    for (row, line) in data_lines(src).enumerate() {
        for (col, tok) in line.split_whitespace().enumerate() {
            let value = tok
                .parse()
                .map_err(|_| bad(format!("bad distance {tok:?}")))?;
            cells.push(Cell {
                row: row as u32,
                col: col as u32,
                value,
            });
        }
    }
    if cells.len() != 64 {
        return Err(bad(format!(
            "distance table has {} cells, expected 64",
            cells.len()
        )));
    }
    Ok(TableFixture {
        id: TableId::Distances,
        cells,
        // row ab^2, column b^3: published 3, the symmetric entry says 2
        erratum_mask: vec![(6, 4)],
    })
}

fn parse_components(id: TableId, src: &str) -> Result<TableFixture> {
    let mut cells = Vec::new();
    for line in data_lines(src) {
        let (n, rest) = line
            .split_once(':')
            .ok_or_else(|| bad("missing row label"))?;
        let n: u32 = n
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad row label {n:?}")))?;
        for (i, tok) in rest.split_whitespace().enumerate() {
            if tok == "-" {
                continue;
            }
            let value = tok.parse().map_err(|_| bad(format!("bad cell {tok:?}")))?;
            cells.push(Cell {
                row: n,
                col: i as u32 + 1,
                value,
            });
        }
    }
    Ok(TableFixture {
        id,
        cells,
        erratum_mask: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_counts() {
        assert_eq!(
            TableFixture::load(TableId::Distances).unwrap().cells.len(),
            64
        );
        assert_eq!(TableFixture::components(2).unwrap().cells.len(), 209);
        assert_eq!(TableFixture::components(3).unwrap().cells.len(), 227);
        assert!(TableFixture::components(4).is_err());
    }

    #[test]
    fn masks() {
        let t1 = TableFixture::load(TableId::Distances).unwrap();
        assert_eq!(t1.erratum_mask, vec![(6, 4)]);
        assert!(TableFixture::components(2).unwrap().erratum_mask.is_empty());
        assert!(TableFixture::components(3).unwrap().erratum_mask.is_empty());
    }

    #[test]
    fn spot_values() {
        let t2 = TableFixture::components(2).unwrap();
        let at = |f: &TableFixture, n, t| {
            f.cells
                .iter()
                .find(|c| c.row == n && c.col == t)
                .map(|c| c.value)
        };
        assert_eq!(at(&t2, 13, 8), Some(4));
        assert_eq!(at(&t2, 20, 20), Some(38));
        assert_eq!(at(&t2, 2, 3), None);
        let t3 = TableFixture::components(3).unwrap();
        assert_eq!(at(&t3, 5, 4), Some(3));
        assert_eq!(at(&t3, 2, 3), Some(4));
        assert_eq!(at(&t3, 20, 21), None);
    }
}
