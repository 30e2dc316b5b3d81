//! Integer partitions, the nodes of Young's lattice.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its nonzero parts in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// The one-row shape `(m)`; `row(0)` is empty.
    pub fn row(m: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self { parts: vec![m] }
        }
    }

    /// The one-column shape `(1^m)`.
    pub fn column(m: usize) -> Self {
        Self { parts: vec![1; m] }
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Self {
            parts: (1..=k as u32).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0) as usize
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the height.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True for `(m)` with `m >= 0`, including the empty shape.
    pub fn is_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.width();
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Self { parts }
    }

    /// Column lengths, left to right.
    pub fn column_heights(&self) -> Vec<u32> {
        self.conjugate().parts
    }

    /// Rows where a box can be added (0-based; `height()` means a new row).
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.height())
            .filter(|&r| r == 0 || self.part(r) < self.part(r - 1))
            .collect()
    }

    /// Rows whose last box is a corner.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.height())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }

    /// Adds a box at the end of row `r`, if that keeps the shape a partition.
    pub fn with_box_added(&self, r: usize) -> Option<Self> {
        if r > self.height() || (r > 0 && self.part(r) >= self.part(r - 1)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if r == parts.len() {
            parts.push(1);
        } else {
            parts[r] += 1;
        }
        Some(Self { parts })
    }

    /// Removes the last box of row `r`, if it is a corner.
    pub fn with_box_removed(&self, r: usize) -> Option<Self> {
        if r >= self.height() || self.part(r) <= self.part(r + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[r] -= 1;
        if parts[r] == 0 {
            parts.pop();
        }
        Some(Self { parts })
    }

    /// Containment of Ferrers diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.height() <= self.height() && (0..other.height()).all(|i| other.part(i) <= self.part(i))
    }

    /// If `self` and `other` differ by exactly one box, the row of that box and
    /// whether it was added going from `self` to `other`.
    pub fn one_box_difference(&self, other: &Partition) -> Option<(usize, bool)> {
        let (small, large, added) = match self.size().cmp(&other.size()) {
            std::cmp::Ordering::Less => (self, other, true),
            std::cmp::Ordering::Greater => (other, self, false),
            std::cmp::Ordering::Equal => return None,
        };
        if large.size() != small.size() + 1 || !large.contains(small) {
            return None;
        }
        let row = (0..large.height()).find(|&i| large.part(i) != small.part(i))?;
        Some((row, added))
    }

    /// Part vector padded with zeros to length `k`.
    pub fn to_vector(&self, k: usize) -> Result<Vec<i64>> {
        if self.height() > k {
            return Err(Error::HeightOverflow {
                height: self.height(),
                k,
            });
        }
        Ok((0..k).map(|i| self.part(i) as i64).collect())
    }

    /// Inverse of [`Partition::to_vector`].
    pub fn from_vector(v: &[i64]) -> Result<Self> {
        if v.iter().any(|&x| x < 0) {
            return Err(Error::InvalidPartition(format!("negative part in {v:?}")));
        }
        Self::new(v.iter().map(|&x| x as u32).collect())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Shorthand used throughout the tests: `shape(&[2, 1])`.
pub fn shape(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}
