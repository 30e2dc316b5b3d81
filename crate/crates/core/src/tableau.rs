//! Standard Young tableaux and their exhaustive enumeration.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A standard Young tableau: rows and columns strictly increase and the
/// entries are exactly `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct StandardYoungTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardYoungTableau {
    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths are not a partition".into()));
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {row:?} is not increasing")));
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau("a column is not increasing".into()));
            }
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "entries are not exactly 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("row lengths are weakly decreasing")
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Row-major reading word, top row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `(row, column)` of entry `v`.
    pub fn position(&self, v: u32) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == v).map(|c| (r, c)))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Self { rows }
    }
}

impl TryFrom<Vec<Vec<u32>>> for StandardYoungTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<StandardYoungTableau> for Vec<Vec<u32>> {
    fn from(t: StandardYoungTableau) -> Self {
        t.rows
    }
}

/// Number of columns of odd length in the Ferrers diagram of `shape`.
pub fn odd_column_count(shape: &Partition) -> usize {
    shape.column_heights().iter().filter(|&&h| h % 2 == 1).count()
}

/// All standard Young tableaux of size `n` with at most `max_height` rows,
/// ordered lexicographically by reading word, then by shape.
pub fn enumerate_syt(n: usize, max_height: usize) -> Vec<StandardYoungTableau> {
    fn grow(
        rows: &mut Vec<Vec<u32>>,
        next: u32,
        n: u32,
        max_height: usize,
        out: &mut Vec<StandardYoungTableau>,
    ) {
        if next > n {
            out.push(StandardYoungTableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for r in 0..=rows.len().min(max_height.saturating_sub(1)) {
            if r == rows.len() {
                if r >= max_height {
                    continue;
                }
                rows.push(vec![next]);
                grow(rows, next + 1, n, max_height, out);
                rows.pop();
            } else if r == 0 || rows[r].len() < rows[r - 1].len() {
                rows[r].push(next);
                grow(rows, next + 1, n, max_height, out);
                rows[r].pop();
            }
        }
    }

    if n > 0 && max_height == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 1, n as u32, max_height, &mut out);
    out.sort_by_key(|t| (t.reading_word(), t.rows().iter().map(Vec::len).collect::<Vec<_>>()));
    out
}
