//! Bi-words and the Robinson-Schensted-Knuth correspondence.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tableau::{join_letters, parse_letters, Tableau};
use crate::Letter;

/// A two-rowed array whose columns `(top_k, bottom_k)` are in lexicographic
/// order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiWord {
    top: Vec<Letter>,
    bottom: Vec<Letter>,
}

impl BiWord {
    pub fn empty() -> Self {
        BiWord::default()
    }

    /// Validates that the columns are already in lexicographic order.
    pub fn new(top: Vec<Letter>, bottom: Vec<Letter>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::RaggedBiWord {
                top: top.len(),
                bottom: bottom.len(),
            });
        }
        for k in 1..top.len() {
            if (top[k - 1], bottom[k - 1]) > (top[k], bottom[k]) {
                return Err(Error::UnorderedBiWord(k));
            }
        }
        Ok(BiWord { top, bottom })
    }

    /// Sorts arbitrary columns into a bi-word.
    pub fn from_columns<I>(columns: I) -> Self
    where
        I: IntoIterator<Item = (Letter, Letter)>,
    {
        let mut cols: Vec<_> = columns.into_iter().collect();
        cols.sort_unstable();
        let (top, bottom) = cols.into_iter().unzip();
        BiWord { top, bottom }
    }

    pub fn top(&self) -> &[Letter] {
        &self.top
    }

    pub fn bottom(&self) -> &[Letter] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn columns(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }

    /// Swap the rows and re-sort.
    pub fn dual(&self) -> BiWord {
        BiWord::from_columns(self.columns().map(|(i, j)| (j, i)))
    }
}

pub fn make_biword<I>(columns: I) -> BiWord
where
    I: IntoIterator<Item = (Letter, Letter)>,
{
    BiWord::from_columns(columns)
}

pub fn dual(bw: &BiWord) -> BiWord {
    bw.dual()
}

/// Inserts the bottom row into P and records the top entry of each column in
/// Q at the box created by that insertion.
pub fn rsk(bw: &BiWord) -> (Tableau, Tableau) {
    let mut p = Tableau::empty();
    let mut q_rows: Vec<Vec<Letter>> = Vec::new();
    for (i, j) in bw.columns() {
        let cell = p.insert(j);
        if cell.row == q_rows.len() {
            q_rows.push(Vec::new());
        }
        debug_assert_eq!(q_rows[cell.row].len(), cell.col);
        q_rows[cell.row].push(i);
    }
    let q = Tableau::from_rows(q_rows).expect("lexicographic columns give a column-strict Q");
    (p, q)
}

/// Reverse insertion. Boxes leave Q largest entry first; among equal entries
/// the rightmost goes first.
pub fn inverse_rsk(p: &Tableau, q: &Tableau) -> Result<BiWord> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let mut p = p.clone();
    let mut q = q.clone().into_rows();
    let mut columns = Vec::with_capacity(p.len());
    while !q.is_empty() {
        // the rightmost maximal entry ends its row
        let (row, top) = q
            .iter()
            .enumerate()
            .map(|(r, cells)| (r, *cells.last().expect("rows are nonempty")))
            .max_by(|a, b| a.1.cmp(&b.1).then(q[a.0].len().cmp(&q[b.0].len())))
            .expect("q is nonempty");
        q[row].pop();
        if q[row].is_empty() {
            q.pop();
        }
        let bottom = p.reverse_bump(row).ok_or(Error::ShapeMismatch)?;
        columns.push((top, bottom));
    }
    columns.reverse();
    let (top, bottom) = columns.into_iter().unzip();
    Ok(BiWord { top, bottom })
}

/// Finitely supported matrix of nonnegative counts. Absent entries are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntegerMatrix {
    entries: BTreeMap<(Letter, Letter), u64>,
}

impl IntegerMatrix {
    pub fn get(&self, i: Letter, j: Letter) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(Letter, Letter), u64> {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn transpose(&self) -> IntegerMatrix {
        IntegerMatrix {
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &a)| ((j, i), a))
                .collect(),
        }
    }
}

/// `a_ij` counts the columns `(i, j)` of the bi-word.
pub fn matrix_of(bw: &BiWord) -> IntegerMatrix {
    let mut entries = BTreeMap::new();
    for col in bw.columns() {
        *entries.entry(col).or_insert(0) += 1;
    }
    IntegerMatrix { entries }
}

impl fmt::Display for BiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", join_letters(&self.top))?;
        writeln!(f, "{}", join_letters(&self.bottom))
    }
}

impl FromStr for BiWord {
    type Err = Error;

    /// Two lines: the top row, then the bottom row.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.split_inclusive('\n');
        let first = lines.next().unwrap_or("");
        let second = lines.next().unwrap_or("");
        let top = parse_letters(first.trim_end(), 0)?;
        let bottom = parse_letters(second.trim_end(), first.len())?;
        BiWord::new(top, bottom)
    }
}

/// One `i j count` line per nonzero entry, in lexicographic order.
impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(i, j), &a) in &self.entries {
            writeln!(f, "{i} {j} {a}")?;
        }
        Ok(())
    }
}
