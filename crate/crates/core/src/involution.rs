//! Involutions and the Robinson–Schensted correspondence restricted to them.
//!
//! For an involution the insertion and recording tableaux coincide, so the
//! correspondence is a bijection between involutions of size `n` and standard
//! Young tableaux of size `n`. Fixed points become odd columns and the longest
//! decreasing subsequence becomes the number of rows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::StandardYoungTableau;

/// An involution on `{1, ..., n}` given by its 2-cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "InvolutionRepr", into = "InvolutionRepr")]
pub struct Involution {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct InvolutionRepr {
    n: usize,
    pairs: Vec<[usize; 2]>,
}

impl TryFrom<InvolutionRepr> for Involution {
    type Error = Error;

    fn try_from(r: InvolutionRepr) -> Result<Self> {
        Involution::new(r.n, r.pairs.into_iter().map(|[i, j]| (i, j)).collect())
    }
}

impl From<Involution> for InvolutionRepr {
    fn from(inv: Involution) -> Self {
        Self {
            n: inv.n,
            pairs: inv.pairs.into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

impl Involution {
    /// Builds an involution from transpositions `(i, j)`; pairs are normalised
    /// to `i < j` and sorted.
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut norm = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let (i, j) = (a.min(b), a.max(b));
            if i == 0 || j > n || i == j {
                return Err(Error::InvalidInvolution(format!(
                    "pair ({a}, {b}) is not a transposition of 1..={n}"
                )));
            }
            if seen[i] || seen[j] {
                return Err(Error::InvalidInvolution(format!(
                    "element of ({a}, {b}) used twice"
                )));
            }
            seen[i] = true;
            seen[j] = true;
            norm.push((i, j));
        }
        norm.sort_unstable();
        Ok(Self { n, pairs: norm })
    }

    pub fn identity(n: usize) -> Self {
        Self { n, pairs: Vec::new() }
    }

    /// From a one-line word `w[0..n]` with values in `1..=n`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut pairs = Vec::new();
        for (idx, &v) in word.iter().enumerate() {
            let i = idx + 1;
            if v == 0 || v > n || word[v - 1] != i {
                return Err(Error::InvalidInvolution(format!("{word:?} is not an involution")));
            }
            if i < v {
                pairs.push((i, v));
            }
        }
        Ok(Self { n, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// One-line notation, `word()[i - 1] = α(i)`.
    pub fn word(&self) -> Vec<usize> {
        let mut w: Vec<usize> = (1..=self.n).collect();
        for &(i, j) in &self.pairs {
            w[i - 1] = j;
            w[j - 1] = i;
        }
        w
    }

    pub fn apply(&self, i: usize) -> usize {
        self.pairs
            .iter()
            .find_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .unwrap_or(i)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        let mut moved = vec![false; self.n + 1];
        for &(i, j) in &self.pairs {
            moved[i] = true;
            moved[j] = true;
        }
        (1..=self.n).filter(|&i| !moved[i]).collect()
    }
}

/// All involutions of `{1..n}`, in lexicographic order of their words.
pub fn enumerate_involutions(n: usize) -> Vec<Involution> {
    fn go(word: &mut Vec<usize>, pos: usize, out: &mut Vec<Involution>) {
        let n = word.len();
        if pos == n {
            out.push(Involution::from_word(word).expect("constructed as an involution"));
            return;
        }
        if word[pos] != 0 {
            go(word, pos + 1, out);
            return;
        }
        word[pos] = pos + 1;
        go(word, pos + 1, out);
        for partner in pos + 1..n {
            if word[partner] == 0 {
                word[pos] = partner + 1;
                word[partner] = pos + 1;
                go(word, pos + 1, out);
                word[partner] = 0;
            }
        }
        word[pos] = 0;
    }
    let mut out = Vec::new();
    go(&mut vec![0; n], 0, &mut out);
    out.sort_by_key(Involution::word);
    out
}

/// Schensted row insertion (increasing order). Returns the row that grew.
fn row_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(c) => x = std::mem::replace(&mut row[c], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Reverse bumping from the end of row `r`; returns the value ejected from the first row.
fn reverse_bump(rows: &mut Vec<Vec<u32>>, r: usize) -> u32 {
    let mut y = rows[r].pop().expect("row is nonempty");
    if rows[r].is_empty() {
        rows.pop();
    }
    for row in rows[..r].iter_mut().rev() {
        let c = row
            .iter()
            .rposition(|&x| x < y)
            .expect("reverse bumping always finds a smaller entry");
        y = std::mem::replace(&mut row[c], y);
    }
    y
}

/// Insertion tableau of the involution's one-line word.
pub fn rsk_involution_to_syt(inv: &Involution) -> StandardYoungTableau {
    let mut rows = Vec::new();
    for v in inv.word() {
        row_insert(&mut rows, v as u32);
    }
    StandardYoungTableau::from_rows_unchecked(rows)
}

/// Inverse of [`rsk_involution_to_syt`]: runs inverse RSK with `P = Q = t`.
pub fn rsk_syt_to_involution(t: &StandardYoungTableau) -> Result<Involution> {
    StandardYoungTableau::new(t.rows().to_vec())?;
    let n = t.size();
    let mut p = t.rows().to_vec();
    let mut q = t.rows().to_vec();
    let mut word = vec![0usize; n];
    for k in (1..=n as u32).rev() {
        let r = q
            .iter()
            .position(|row| row.last() == Some(&k))
            .ok_or_else(|| Error::InvalidTableau(format!("entry {k} is not at a corner")))?;
        q[r].pop();
        if q[r].is_empty() {
            q.pop();
        }
        word[k as usize - 1] = reverse_bump(&mut p, r) as usize;
    }
    Involution::from_word(&word)
}

/// Length of the longest strictly decreasing subsequence of the one-line word.
pub fn longest_decreasing_subsequence(inv: &Involution) -> usize {
    let w = inv.word();
    let mut best = vec![1usize; w.len()];
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] > w[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::shape;
    use crate::tableau::{enumerate_syt, odd_column_count};

    fn figure_ten() -> Involution {
        Involution::new(10, vec![(1, 7), (3, 9), (4, 6), (5, 10)]).unwrap()
    }

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| enumerate_involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232, 764]);
    }

    #[test]
    fn rejects_overlapping_pairs() {
        assert!(Involution::new(4, vec![(1, 2), (2, 3)]).is_err());
        assert!(Involution::new(3, vec![(1, 4)]).is_err());
        assert!(Involution::from_word(&[2, 3, 1]).is_err());
    }

    #[test]
    fn identity_of_size_one() {
        let t = rsk_involution_to_syt(&Involution::identity(1));
        assert_eq!(t.rows(), &[vec![1]]);
    }

    #[test]
    fn figure_ten_tableau() {
        let t = rsk_involution_to_syt(&figure_ten());
        assert_eq!(
            t.rows(),
            &[vec![1, 3, 5], vec![2, 4, 8], vec![6, 9, 10], vec![7]]
        );
        assert_eq!(t.shape(), shape(&[3, 3, 3, 1]));
        assert_eq!(rsk_syt_to_involution(&t).unwrap(), figure_ten());
        assert_eq!(longest_decreasing_subsequence(&figure_ten()), 4);
    }

    #[test]
    fn size_five_is_a_bijection() {
        let all = enumerate_involutions(5);
        assert_eq!(all.len(), 26);
        let mut images: Vec<_> = all.iter().map(rsk_involution_to_syt).collect();
        for (inv, t) in all.iter().zip(&images) {
            assert_eq!(&rsk_syt_to_involution(t).unwrap(), inv);
        }
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 26);
        let mut syt = enumerate_syt(5, 5);
        syt.sort();
        assert_eq!(images, syt);
    }

    #[test]
    fn rsk_laws_up_to_eight() {
        for n in 0..=8 {
            for inv in enumerate_involutions(n) {
                let t = rsk_involution_to_syt(&inv);
                assert_eq!(rsk_syt_to_involution(&t).unwrap(), inv);
                assert_eq!(inv.fixed_points().len(), odd_column_count(&t.shape()));
                assert_eq!(longest_decreasing_subsequence(&inv), t.height());
            }
            assert_eq!(enumerate_syt(n, n).len(), enumerate_involutions(n).len());
        }
    }

    #[test]
    fn small_decreasing_subsequences() {
        assert_eq!(longest_decreasing_subsequence(&Involution::identity(4)), 1);
        assert_eq!(
            longest_decreasing_subsequence(&Involution::new(2, vec![(1, 2)]).unwrap()),
            2
        );
        assert_eq!(longest_decreasing_subsequence(&Involution::identity(0)), 0);
    }

    #[test]
    fn inverse_rejects_invalid_tableau() {
        let bad = StandardYoungTableau::from_rows_unchecked(vec![vec![2, 1]]);
        assert!(rsk_syt_to_involution(&bad).is_err());
    }

    #[test]
    fn json_shape() {
        let inv = Involution::new(3, vec![(3, 1)]).unwrap();
        assert_eq!(serde_json::to_string(&inv).unwrap(), r#"{"n":3,"pairs":[[1,3]]}"#);
    }
}
