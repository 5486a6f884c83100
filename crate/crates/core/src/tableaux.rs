//! Symplectic tableaux: sequences of admissible columns `C_1 … C_r`, left
//! to right, with `C_i ⪯ C_{i+1}`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{AlphabetError, Letter, Word};
use crate::columns::{enumerate_admissible, Column, ColumnError};
use crate::crystal::{is_highest_weight, lower, raise_to_highest, weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("column {index} is empty")]
    EmptyColumn { index: usize },
    #[error("column {index} ({column}) is not admissible")]
    NotAdmissible { index: usize, column: Column },
    #[error("columns {index} and {} violate the ⪯ relation", index + 1)]
    NotCompatible { index: usize },
    #[error("column {index} belongs to an alphabet of rank {found}, expected {expected}")]
    RankMismatch {
        index: usize,
        expected: u8,
        found: u8,
    },
    #[error("shape has a column of height {height} > n = {n}")]
    InvalidShape { height: usize, n: u8 },
    #[error("word of length {found} cannot fill a shape with {expected} boxes")]
    ShapeMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Column(#[from] ColumnError),
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error(transparent)]
    Crystal(#[from] crate::crystal::CrystalError),
    #[error("malformed tableau JSON: {0}")]
    Json(String),
}

/// `C1 ≤ C2`: `C1` is at least as tall and the top-aligned rows weakly
/// increase.
pub fn column_leq(c1: &Column, c2: &Column) -> bool {
    c1.height() >= c2.height() && c1.letters().iter().zip(c2.letters()).all(|(a, b)| a <= b)
}

/// `C1 ⪯ C2`, i.e. `rC1 ≤ lC2`. Both columns must be admissible.
pub fn column_preceq(c1: &Column, c2: &Column) -> Result<bool, TableauError> {
    let s1 = c1
        .split()
        .map_err(|_| ColumnError::NotAdmissible(c1.clone()))?;
    let s2 = c2
        .split()
        .map_err(|_| ColumnError::NotAdmissible(c2.clone()))?;
    Ok(column_leq(&s1.right, &s2.left))
}

/// Column-height multiplicities: `lambda[i - 1]` columns of height `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shape {
    pub lambda: Vec<usize>,
}

impl Shape {
    pub fn new(mut lambda: Vec<usize>) -> Self {
        while lambda.last() == Some(&0) {
            lambda.pop();
        }
        Shape { lambda }
    }

    /// The shape with the given column heights, in any order.
    pub fn from_heights(heights: impl IntoIterator<Item = usize>) -> Self {
        let mut lambda = Vec::new();
        for h in heights {
            assert!(h > 0, "columns have positive height");
            if lambda.len() < h {
                lambda.resize(h, 0);
            }
            lambda[h - 1] += 1;
        }
        Shape { lambda }
    }

    pub fn boxes(&self) -> usize {
        self.lambda
            .iter()
            .enumerate()
            .map(|(i, &k)| (i + 1) * k)
            .sum()
    }

    /// Column heights, weakly decreasing from left to right.
    pub fn column_heights(&self) -> Vec<usize> {
        let mut heights = Vec::new();
        for (i, &k) in self.lambda.iter().enumerate().rev() {
            heights.extend(std::iter::repeat_n(i + 1, k));
        }
        heights
    }

    /// Boxes per row, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        let heights = self.column_heights();
        let top = heights.first().copied().unwrap_or(0);
        (1..=top)
            .map(|row| heights.iter().filter(|&&h| h >= row).count())
            .collect()
    }

    fn max_height(&self) -> usize {
        self.lambda
            .iter()
            .rposition(|&k| k > 0)
            .map_or(0, |i| i + 1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticTableau {
    n: u8,
    columns: Vec<Column>,
}

impl SymplecticTableau {
    pub fn empty(n: u8) -> Self {
        SymplecticTableau {
            n,
            columns: Vec::new(),
        }
    }

    /// Validates `columns` as a symplectic tableau over rank `n`.
    pub fn new(n: u8, columns: Vec<Column>) -> Result<Self, TableauError> {
        validate_tableau(n, columns)
    }

    /// Panics on invalid input; for literals.
    pub fn from_signed(n: u8, columns: &[&[i32]]) -> Self {
        let columns = columns.iter().map(|c| Column::from_signed(n, c)).collect();
        SymplecticTableau::new(n, columns).expect("valid symplectic tableau")
    }

    pub(crate) fn from_columns_unchecked(n: u8, columns: Vec<Column>) -> Self {
        SymplecticTableau { n, columns }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.columns
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn boxes(&self) -> usize {
        self.columns.iter().map(Column::height).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape::from_heights(self.columns.iter().map(Column::height))
    }

    /// `w(C_r) ⋯ w(C_1)`.
    pub fn reading(&self) -> Word {
        reading(self)
    }

    /// Rows top to bottom, each listing its entries left to right.
    pub fn rows(&self) -> Vec<Vec<Letter>> {
        let height = self.columns.first().map_or(0, Column::height);
        (0..height)
            .map(|r| {
                self.columns
                    .iter()
                    .filter_map(|c| c.letters().get(r).copied())
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            n: self.n,
            columns: self.columns.iter().map(Column::to_signed).collect(),
        }
    }

    pub fn from_json(json: &TableauJson) -> Result<Self, TableauError> {
        let columns = json
            .columns
            .iter()
            .map(|c| {
                let letters = c
                    .iter()
                    .map(|&k| Letter::try_from(k))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Column::new(Word::new(json.n, letters)?)?)
            })
            .collect::<Result<Vec<_>, TableauError>>()?;
        SymplecticTableau::new(json.n, columns)
    }

    pub fn parse_json(text: &str) -> Result<Self, TableauError> {
        let json: TableauJson =
            serde_json::from_str(text).map_err(|e| TableauError::Json(e.to_string()))?;
        SymplecticTableau::from_json(&json)
    }

    /// Splits `word` into columns of the given shape, reading it as
    /// `w(C_r) ⋯ w(C_1)`, and validates the result.
    pub fn from_reading(word: &Word, shape: &Shape) -> Result<Self, TableauError> {
        if word.len() != shape.boxes() {
            return Err(TableauError::ShapeMismatch {
                expected: shape.boxes(),
                found: word.len(),
            });
        }
        let mut columns = Vec::new();
        let mut end = word.len();
        for h in shape.column_heights() {
            let piece = word[end - h..end].to_vec();
            columns.push(Column::new(Word::new(word.n(), piece)?)?);
            end -= h;
        }
        SymplecticTableau::new(word.n(), columns)
    }
}

/// JSON form: `{"n": 3, "columns": [[1, 2, 3], [2, -3, -2]]}`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub n: u8,
    pub columns: Vec<Vec<i32>>,
}

impl fmt::Display for SymplecticTableau {
    /// ASCII grid, one row per line, barred letters as negative numbers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.columns.is_empty() {
            return write!(f, "(empty)");
        }
        let width = self
            .columns
            .iter()
            .flat_map(|c| c.letters())
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(1);
        let rows = self.rows();
        for (r, row) in rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|l| format!("{:>width$}", l.to_string()))
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Checks every tableau invariant and reports the first violation.
pub fn validate_tableau(n: u8, columns: Vec<Column>) -> Result<SymplecticTableau, TableauError> {
    if n == 0 {
        return Err(AlphabetError::ZeroRank.into());
    }
    let mut splits = Vec::with_capacity(columns.len());
    for (index, c) in columns.iter().enumerate() {
        if c.n() != n {
            return Err(TableauError::RankMismatch {
                index,
                expected: n,
                found: c.n(),
            });
        }
        if c.height() == 0 {
            return Err(TableauError::EmptyColumn { index });
        }
        match c.split() {
            Ok(s) => splits.push(s),
            Err(_) => {
                return Err(TableauError::NotAdmissible {
                    index,
                    column: c.clone(),
                })
            }
        }
    }
    for (index, pair) in splits.windows(2).enumerate() {
        if !column_leq(&pair[0].right, &pair[1].left) {
            return Err(TableauError::NotCompatible { index });
        }
    }
    Ok(SymplecticTableau { n, columns })
}

pub fn reading(t: &SymplecticTableau) -> Word {
    let letters = t
        .columns
        .iter()
        .rev()
        .flat_map(|c| c.letters().iter().copied())
        .collect();
    Word::from_letters_unchecked(t.n, letters)
}

/// The tableau of the given shape whose row `k` is filled with `k`.
pub fn canonical_tableau(shape: &Shape, n: u8) -> Result<SymplecticTableau, TableauError> {
    if shape.max_height() > usize::from(n) {
        return Err(TableauError::InvalidShape {
            height: shape.max_height(),
            n,
        });
    }
    let columns: Vec<Column> = shape
        .column_heights()
        .into_iter()
        .map(|h| {
            let letters = (1..=h as u8).map(Letter::unbarred).collect();
            Column::new(Word::new(n, letters).expect("heights fit the alphabet")).unwrap()
        })
        .collect();
    let t = SymplecticTableau::new(n, columns)?;
    debug_assert!(is_highest_weight(&t.reading()));
    Ok(t)
}

/// Every symplectic tableau of the given shape over rank `n`.
pub fn enumerate_tableaux(shape: &Shape, n: u8) -> Vec<SymplecticTableau> {
    let heights = shape.column_heights();
    let admissible = enumerate_admissible(n);
    let by_height = |h: usize| admissible.iter().filter(move |c| c.height() == h);
    let mut out = Vec::new();
    let mut current: Vec<Column> = Vec::new();
    fn extend<'a, I: Iterator<Item = &'a Column>>(
        heights: &[usize],
        by_height: &dyn Fn(usize) -> I,
        current: &mut Vec<Column>,
        out: &mut Vec<SymplecticTableau>,
        n: u8,
    ) {
        let Some(&h) = heights.get(current.len()) else {
            out.push(SymplecticTableau::from_columns_unchecked(
                n,
                current.clone(),
            ));
            return;
        };
        for c in by_height(h) {
            if current
                .last()
                .is_none_or(|prev| column_preceq(prev, c).unwrap())
            {
                current.push(c.clone());
                extend(heights, by_height, current, out, n);
                current.pop();
            }
        }
    }
    extend(&heights, &by_height, &mut current, &mut out, n);
    out
}

/// The tableau crystal-equivalent to `w`, found without insertion: raise
/// `w` to its highest-weight vertex, then lower the canonical tableau of
/// that weight along the same path.
pub fn tableau_by_crystal(w: &Word) -> Result<SymplecticTableau, TableauError> {
    let (top, path) = raise_to_highest(w);
    let lambda: Vec<usize> = weight(&top)
        .fundamental_coordinates()
        .into_iter()
        .map(|k| usize::try_from(k).expect("highest weights are dominant"))
        .collect();
    let shape = Shape::new(lambda);
    let mut word = canonical_tableau(&shape, w.n())?.reading();
    for &i in path.iter().rev() {
        word = lower(&word, i)?.expect("isomorphic components admit the same path");
    }
    SymplecticTableau::from_reading(&word, &shape)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(n: u8, s: &[i32]) -> Column {
        Column::from_signed(n, s)
    }

    #[test]
    fn row_relation() {
        assert!(column_leq(&col(3, &[1, 2, 3]), &col(3, &[2])));
        assert!(!column_leq(&col(3, &[2]), &col(3, &[1, 2])));
        let c = col(3, &[1, -3, -2]);
        assert!(column_leq(&c, &c));
    }

    #[test]
    fn compatibility_relation() {
        assert!(column_preceq(&col(3, &[1, 2, 3]), &col(3, &[2, -3, -2])).unwrap());
        assert!(column_preceq(&col(3, &[2, -3, -2]), &col(3, &[3])).unwrap());
        assert!(!column_preceq(&col(3, &[2]), &col(3, &[1])).unwrap());
        assert!(column_preceq(&col(3, &[1, 2, 3, -3]), &col(3, &[1])).is_err());
    }

    #[test]
    fn validation() {
        let t = SymplecticTableau::new(
            3,
            vec![col(3, &[1, 2, 3]), col(3, &[2, -3, -2]), col(3, &[3])],
        );
        assert!(t.is_ok());
        assert!(matches!(
            SymplecticTableau::new(3, vec![col(3, &[1, 2, 3, -3])]),
            Err(TableauError::NotAdmissible { index: 0, .. })
        ));
        assert!(SymplecticTableau::new(3, vec![]).unwrap().is_empty());
        assert_eq!(
            SymplecticTableau::new(3, vec![col(3, &[1]), col(3, &[2]), col(3, &[1])]),
            Err(TableauError::NotCompatible { index: 1 })
        );
        assert!(matches!(
            SymplecticTableau::new(3, vec![col(2, &[1])]),
            Err(TableauError::RankMismatch { .. })
        ));
    }

    #[test]
    fn readings() {
        let t = SymplecticTableau::from_signed(3, &[&[1, 2, 3], &[2, -3, -2], &[3]]);
        assert_eq!(t.reading(), Word::from_signed(3, &[3, 2, -3, -2, 1, 2, 3]));
        let single = SymplecticTableau::from_signed(3, &[&[1, -3]]);
        assert_eq!(single.reading(), Word::from_signed(3, &[1, -3]));
        assert!(SymplecticTableau::empty(2).reading().is_empty());
        assert_eq!(
            SymplecticTableau::from_reading(&t.reading(), &t.shape()).unwrap(),
            t
        );
    }

    #[test]
    fn shapes() {
        let s = Shape::new(vec![1, 1, 1]);
        assert_eq!(s.boxes(), 6);
        assert_eq!(s.column_heights(), vec![3, 2, 1]);
        assert_eq!(s.row_lengths(), vec![3, 2, 1]);
        assert_eq!(Shape::from_heights([1, 3, 2]), s);
    }

    #[test]
    fn canonical() {
        let t = canonical_tableau(&Shape::new(vec![0, 1]), 2).unwrap();
        assert_eq!(t.columns(), &[col(2, &[1, 2])]);
        let t = canonical_tableau(&Shape::new(vec![1, 1]), 3).unwrap();
        assert_eq!(t.columns(), &[col(3, &[1, 2]), col(3, &[1])]);
        assert_eq!(t.reading(), Word::from_signed(3, &[1, 1, 2]));
        assert!(is_highest_weight(&t.reading()));
        assert!(canonical_tableau(&Shape::new(vec![0, 0, 1]), 2).is_err());
    }

    #[test]
    fn canonical_weight_is_the_shape() {
        for n in 1..=4u8 {
            for code in 0..81usize {
                let lambda: Vec<usize> = (0..n as usize)
                    .map(|i| (code / 3usize.pow(i as u32)) % 3)
                    .collect();
                let shape = Shape::new(lambda.clone());
                let t = canonical_tableau(&shape, n).unwrap();
                let coords = weight(&t.reading()).fundamental_coordinates();
                let expected: Vec<i32> = lambda.iter().map(|&k| k as i32).collect();
                assert_eq!(coords, expected);
            }
        }
    }

    #[test]
    fn grid_and_json() {
        let t = SymplecticTableau::from_signed(3, &[&[1, 2, 3], &[2, -3, -2], &[3]]);
        assert_eq!(t.to_string(), " 1  2  3\n 2 -3\n 3 -2");
        let json = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(json, r#"{"n":3,"columns":[[1,2,3],[2,-3,-2],[3]]}"#);
        assert_eq!(SymplecticTableau::parse_json(&json).unwrap(), t);
        assert!(SymplecticTableau::parse_json(r#"{"n":3,"columns":[[2,1]]}"#).is_err());
        assert!(SymplecticTableau::parse_json("{").is_err());
    }

    #[test]
    fn enumeration_small_shape() {
        // λ = Λ1 at rank 2 is the vector representation: four one-box tableaux
        assert_eq!(enumerate_tableaux(&Shape::new(vec![1]), 2).len(), 4);
        // λ = Λ2 at rank 2: the five admissible columns of height 2
        assert_eq!(enumerate_tableaux(&Shape::new(vec![0, 1]), 2).len(), 5);
    }
}
