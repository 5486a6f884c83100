//! Columns, admissibility and the splitting of admissible columns.

use std::fmt;

use thiserror::Error;

use crate::alphabet::{alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColumnError {
    #[error("`{0}` is not strictly increasing")]
    NotIncreasing(Word),
    #[error("column `{0}` is not admissible")]
    NotAdmissible(Column),
}

/// A strictly increasing word, read from top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Column {
    // field order gives the derived `Ord`: height first, then letters
    height: usize,
    letters: Vec<Letter>,
    n: u8,
}

impl Column {
    pub fn new(word: Word) -> Result<Self, ColumnError> {
        if !is_column_word(&word) {
            return Err(ColumnError::NotIncreasing(word));
        }
        let n = word.n();
        let letters = word.into_letters();
        Ok(Column {
            height: letters.len(),
            letters,
            n,
        })
    }

    /// Panics unless `letters` is strictly increasing; for literals.
    pub fn from_signed(n: u8, letters: &[i32]) -> Self {
        Column::new(Word::from_signed(n, letters)).expect("strictly increasing")
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.letters.binary_search(&letter).is_ok()
    }

    /// The reading `w(C)`, top to bottom.
    pub fn reading(&self) -> Word {
        Word::from_letters_unchecked(self.n, self.letters.clone())
    }

    pub fn is_admissible(&self) -> bool {
        admissibility_counts(self)
            .iter()
            .enumerate()
            .all(|(m, &count)| count <= m + 1)
    }

    pub fn split(&self) -> Result<SplitColumn, SplitFailure> {
        split(self)
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

pub fn is_column_word(w: &Word) -> bool {
    w.windows(2).all(|p| p[0] < p[1])
}

/// `N(m) = #{x ∈ C : x ≤ m or x ≥ m̄}` for `m = 1..=n`, at index `m - 1`.
pub fn admissibility_counts(c: &Column) -> Vec<usize> {
    (1..=c.n)
        .map(|m| {
            let low = Letter::unbarred(m);
            let high = Letter::barred(m);
            c.letters.iter().filter(|&&x| x <= low || x >= high).count()
        })
        .collect()
}

/// Counts-based admissibility of an arbitrary word; false unless it is a
/// column word.
pub fn is_admissible_column_word(w: &Word) -> bool {
    Column::new(w.clone())
        .map(|c| c.is_admissible())
        .unwrap_or(false)
}

/// An admissible column together with its split `(lC, rC)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitColumn {
    pub base: Column,
    /// Unbarred values `x_1 > … > x_r` with both `x_i` and `x̄_i` in the column.
    pub paired: Vec<u8>,
    /// The witnesses `y_1 > … > y_r`.
    pub witnesses: Vec<u8>,
    /// `lC`: each `x_i` replaced by `y_i`.
    pub left: Column,
    /// `rC`: each `x̄_i` replaced by `ȳ_i`.
    pub right: Column,
}

/// The witness construction broke down at `index` (1-based position in `I`).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("column {column} cannot be split: no witness y_{index} exists")]
pub struct SplitFailure {
    pub column: Column,
    pub index: usize,
    /// Witnesses found before the failure.
    pub witnesses: Vec<u8>,
}

fn replace_and_sort(c: &Column, from: &[Letter], to: &[Letter]) -> Column {
    let mut letters: Vec<Letter> = c
        .letters
        .iter()
        .map(|l| from.iter().position(|f| f == l).map_or(*l, |k| to[k]))
        .collect();
    letters.sort();
    Column::new(Word::from_letters_unchecked(c.n, letters))
        .expect("splitting keeps letters distinct")
}

pub fn split(c: &Column) -> Result<SplitColumn, SplitFailure> {
    let paired: Vec<u8> = (1..=c.n)
        .rev()
        .filter(|&v| c.contains(Letter::unbarred(v)) && c.contains(Letter::barred(v)))
        .collect();
    let free = |y: u8| !c.contains(Letter::unbarred(y)) && !c.contains(Letter::barred(y));
    let mut witnesses: Vec<u8> = Vec::with_capacity(paired.len());
    for (k, &x) in paired.iter().enumerate() {
        let bound = witnesses.last().map_or(x, |&prev| prev.min(x));
        match (1..bound).rev().find(|&y| free(y)) {
            Some(y) => witnesses.push(y),
            None => {
                return Err(SplitFailure {
                    column: c.clone(),
                    index: k + 1,
                    witnesses,
                });
            }
        }
    }
    let xs: Vec<Letter> = paired.iter().map(|&v| Letter::unbarred(v)).collect();
    let ys: Vec<Letter> = witnesses.iter().map(|&v| Letter::unbarred(v)).collect();
    let xbars: Vec<Letter> = xs.iter().map(|l| l.bar()).collect();
    let ybars: Vec<Letter> = ys.iter().map(|l| l.bar()).collect();
    Ok(SplitColumn {
        base: c.clone(),
        left: replace_and_sort(c, &xs, &ys),
        right: replace_and_sort(c, &xbars, &ybars),
        paired,
        witnesses,
    })
}

/// Every nonempty strictly increasing column over the rank-`n` alphabet
/// with height at most `max_height`, ordered by height then by letters.
pub fn all_columns(n: u8, max_height: usize) -> Vec<Column> {
    let letters: Vec<Letter> = alphabet(n).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn extend(
        letters: &[Letter],
        start: usize,
        target: usize,
        n: u8,
        current: &mut Vec<Letter>,
        out: &mut Vec<Column>,
    ) {
        if current.len() == target {
            out.push(Column::new(Word::from_letters_unchecked(n, current.clone())).unwrap());
            return;
        }
        for k in start..letters.len() {
            current.push(letters[k]);
            extend(letters, k + 1, target, n, current, out);
            current.pop();
        }
    }
    for h in 1..=max_height.min(letters.len()) {
        extend(&letters, 0, h, n, &mut current, &mut out);
    }
    out
}

/// All admissible columns over the rank-`n` alphabet, by height then by
/// letters.
pub fn enumerate_admissible(n: u8) -> Vec<Column> {
    all_columns(n, usize::from(n))
        .into_iter()
        .filter(|c| c.is_admissible())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(n: u8, s: &[i32]) -> Column {
        Column::from_signed(n, s)
    }

    #[test]
    fn column_words() {
        assert!(is_column_word(&Word::from_signed(6, &[1, 2, 3, -6, -5])));
        assert!(!is_column_word(&Word::from_signed(2, &[2, 1])));
        assert!(!is_column_word(&Word::from_signed(2, &[1, 1])));
        assert!(is_column_word(&Word::empty(2)));
        assert!(Column::new(Word::from_signed(2, &[2, 1])).is_err());
    }

    #[test]
    fn counts() {
        let c = col(3, &[1, 2, 3, -3]);
        assert_eq!(admissibility_counts(&c), vec![1, 2, 4]);
        assert!(!c.is_admissible());
        assert_eq!(admissibility_counts(&col(2, &[2, -2])), vec![0, 2]);
        assert!(col(2, &[2, -2]).is_admissible());
        for l in alphabet(4) {
            let c = Column::new(Word::new(4, vec![l]).unwrap()).unwrap();
            assert!(admissibility_counts(&c).iter().all(|&k| k <= 1));
        }
    }

    #[test]
    fn split_three_pairs() {
        let s = split(&col(8, &[2, 5, 6, 8, -8, -5, -2])).unwrap();
        assert_eq!(s.paired, vec![8, 5, 2]);
        assert_eq!(s.witnesses, vec![7, 4, 1]);
        assert_eq!(s.right, col(8, &[2, 5, 6, 8, -7, -4, -1]));
        assert_eq!(s.left, col(8, &[1, 4, 6, 7, -8, -5, -2]));
    }

    #[test]
    fn split_failure_reports_index() {
        let err = split(&col(6, &[2, 3, 4, 6, -6, -3, -2])).unwrap_err();
        assert_eq!(err.index, 3);
        assert_eq!(err.witnesses, vec![5, 1]);
    }

    #[test]
    fn split_without_pairs_is_identity() {
        let c = col(3, &[1, 2, 3]);
        let s = split(&c).unwrap();
        assert!(s.paired.is_empty());
        assert_eq!(s.left, c);
        assert_eq!(s.right, c);
    }

    #[test]
    fn split_single_pair() {
        let s = split(&col(3, &[2, -3, -2])).unwrap();
        assert_eq!(s.right, col(3, &[2, -3, -1]));
        assert_eq!(s.left, col(3, &[1, -3, -2]));
    }

    #[test]
    fn enumeration_small_ranks() {
        let one = enumerate_admissible(1);
        assert_eq!(one, vec![col(1, &[1]), col(1, &[-1])]);
        let two = enumerate_admissible(2);
        let expected = vec![
            col(2, &[1]),
            col(2, &[2]),
            col(2, &[-2]),
            col(2, &[-1]),
            col(2, &[1, 2]),
            col(2, &[1, -2]),
            col(2, &[2, -2]),
            col(2, &[2, -1]),
            col(2, &[-2, -1]),
        ];
        assert_eq!(two, expected);
    }

    #[test]
    fn all_columns_counts() {
        // 2n letters choose h
        assert_eq!(all_columns(2, 4).len(), 4 + 6 + 4 + 1);
        assert_eq!(all_columns(3, 2).len(), 6 + 15);
    }
}
