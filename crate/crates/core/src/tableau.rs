//! Young tableaux and row insertion.
//!
//! A tableau is stored top row first. Rows weakly increase left to right and
//! columns strictly increase top to bottom. The empty tableau has no rows.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Letter;

/// Row lengths of a tableau, weakly decreasing and strictly positive.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Shape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Position of a box, zero-based: `row` 0 is the top row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// Builds a tableau from rows, checking the row and column conditions.
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {r} is empty")));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {r} decreases")));
            }
        }
        for (r, pair) in rows.windows(2).enumerate() {
            let (upper, lower) = (&pair[0], &pair[1]);
            if lower.len() > upper.len() {
                return Err(Error::InvalidTableau(format!(
                    "row {} is longer than row {r}",
                    r + 1
                )));
            }
            if let Some(c) = (0..lower.len()).find(|&c| upper[c] >= lower[c]) {
                return Err(Error::InvalidTableau(format!(
                    "column {c} does not increase below row {r}"
                )));
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Letter>> {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of boxes.
    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn get(&self, cell: Cell) -> Option<Letter> {
        self.rows
            .get(cell.row)
            .and_then(|r| r.get(cell.col))
            .copied()
    }

    /// Bumps `x` into the tableau in place and returns the newly created box.
    pub fn insert(&mut self, mut x: Letter) -> Cell {
        for (r, row) in self.rows.iter_mut().enumerate() {
            let c = row.partition_point(|&y| y <= x);
            if c == row.len() {
                row.push(x);
                return Cell { row: r, col: c };
            }
            x = std::mem::replace(&mut row[c], x);
        }
        self.rows.push(vec![x]);
        Cell {
            row: self.rows.len() - 1,
            col: 0,
        }
    }

    /// `self ← x` as a new value, together with the new box.
    pub fn row_insert(&self, x: Letter) -> (Tableau, Cell) {
        let mut t = self.clone();
        let cell = t.insert(x);
        (t, cell)
    }

    /// Inverse of [`Tableau::insert`]: removes the corner at `row` and bumps
    /// letters back up to the first row. Returns the letter ejected from the
    /// top row, or `None` if `row` does not end in a corner.
    pub fn reverse_bump(&mut self, row: usize) -> Option<Letter> {
        let below = self.rows.get(row + 1).map_or(0, Vec::len);
        let current = self.rows.get_mut(row)?;
        if current.len() <= below {
            return None;
        }
        let mut x = current.pop().expect("row is nonempty");
        if current.is_empty() {
            self.rows.pop();
        }
        for r in (0..row).rev() {
            let upper = &mut self.rows[r];
            // rightmost entry strictly smaller than x
            let c = upper.partition_point(|&y| y < x) - 1;
            x = std::mem::replace(&mut upper[c], x);
        }
        Some(x)
    }

    /// Reading word: rows from the bottom up, each left to right.
    pub fn word(&self) -> Vec<Letter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// All entries in reading order, with their cells.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &x)| (Cell { row: r, col: c }, x))
        })
    }
}

/// `Tab(w)`: insert the letters of `w` left to right into the empty tableau.
pub fn tab(word: &[Letter]) -> Tableau {
    let mut t = Tableau::empty();
    for &x in word {
        t.insert(x);
    }
    t
}

pub fn word_of(t: &Tableau) -> Vec<Letter> {
    t.word()
}

pub fn is_tableau_word(word: &[Letter]) -> bool {
    tab(word).word() == word
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// One row per line, letters separated by single spaces, top row first.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{}", join_letters(row))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Reads rows until the first blank line or the end of input.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for line in s.split_inclusive('\n') {
            let content = line.trim_end_matches(['\n', '\r']);
            if content.trim().is_empty() {
                break;
            }
            rows.push(parse_letters(content, offset)?);
            offset += line.len();
        }
        Tableau::from_rows(rows)
    }
}

pub(crate) fn join_letters(letters: &[Letter]) -> String {
    letters
        .iter()
        .map(Letter::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses whitespace-separated integers; `offset` is the byte position of
/// `line` in the enclosing input, for error messages.
pub(crate) fn parse_letters(line: &str, offset: usize) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for token in line.split(' ') {
        if !token.is_empty() {
            let x = token
                .trim()
                .parse::<Letter>()
                .map_err(|e| Error::parse(offset + pos, format!("{token:?}: {e}")))?;
            out.push(x);
        }
        pos += token.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(t: &Tableau) -> Vec<Vec<Letter>> {
        t.rows().to_vec()
    }

    #[test]
    fn boxed_example() {
        let w = [5, 5, 1, 3, 7, 2, 7, 1, 3, 1, 4, 5, 3, 2];
        let t = tab(&w);
        assert_eq!(
            rows(&t),
            vec![
                vec![1, 1, 1, 2, 5],
                vec![2, 3, 3, 7],
                vec![3, 4, 7],
                vec![5, 5]
            ]
        );
        assert_eq!(t.word(), vec![5, 5, 3, 4, 7, 2, 3, 3, 7, 1, 1, 1, 2, 5]);
        assert_eq!(t.shape().parts(), &[5, 4, 3, 2]);
        assert!(is_tableau_word(&t.word()));
    }

    #[test]
    fn single_insertions() {
        let (t, cell) = Tableau::empty().row_insert(4);
        assert_eq!(rows(&t), vec![vec![4]]);
        assert_eq!(cell, Cell { row: 0, col: 0 });

        let t = Tableau::from_rows(vec![vec![1, 3]]).unwrap();
        let (t, cell) = t.row_insert(2);
        assert_eq!(rows(&t), vec![vec![1, 2], vec![3]]);
        assert_eq!(cell, Cell { row: 1, col: 0 });
    }

    #[test]
    fn small_cases() {
        assert!(tab(&[]).is_empty());
        assert_eq!(rows(&tab(&[1, 2, 3])), vec![vec![1, 2, 3]]);
        assert!(word_of(&Tableau::empty()).is_empty());
        let t = Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t.word(), vec![3, 1, 2]);
        assert_eq!(Tableau::empty().shape().parts(), &[] as &[usize]);
        let t = Tableau::from_rows(vec![vec![1, 1, 2], vec![2, 5], vec![3]]).unwrap();
        assert_eq!(t.shape().parts(), &[3, 2, 1]);
    }

    #[test]
    fn tableau_words() {
        assert!(is_tableau_word(&[]));
        assert!(is_tableau_word(&[1, 1, 2]));
        assert!(is_tableau_word(&[2, 1, 1, 2]));
        assert!(!is_tableau_word(&[1, 2, 1]));
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(Tableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::from_rows(vec![vec![]]).is_err());
        assert!(Shape::new(vec![1, 2]).is_err());
    }

    #[test]
    fn reverse_bump_undoes_insert() {
        let mut t = tab(&[5, 5, 1, 3, 7, 2, 7, 1, 3, 1, 4, 5, 3]);
        let before = t.clone();
        let cell = t.insert(2);
        assert_eq!(t.reverse_bump(cell.row), Some(2));
        assert_eq!(t, before);
        assert_eq!(t.reverse_bump(9), None);

        let mut square = tab(&[3, 4, 1, 2]);
        assert_eq!(square.rows(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(square.reverse_bump(0), None);
        assert_eq!(square.reverse_bump(1), Some(2));
        assert_eq!(square.rows(), &[vec![1, 4], vec![3]]);
    }

    #[test]
    fn text_format() {
        let t = tab(&[5, 5, 1, 3, 7, 2, 7, 1, 3, 1, 4, 5, 3, 2]);
        let text = t.to_string();
        assert_eq!(text, "1 1 1 2 5\n2 3 3 7\n3 4 7\n5 5\n");
        assert_eq!(text.parse::<Tableau>().unwrap(), t);
        let parsed: Tableau = "1 2\n3\n\n9 9\n".parse().unwrap();
        assert_eq!(rows(&parsed), vec![vec![1, 2], vec![3]]);
        assert!("1 x".parse::<Tableau>().is_err());
        assert_eq!("".parse::<Tableau>().unwrap(), Tableau::empty());
    }
}
