//! Insertion of letters into admissible columns and symplectic tableaux,
//! and the tableau `P(w)` of a word.
//!
//! Inserting `x` into a column `C` looks at the word `w(C)x`:
//!
//! * an admissible column word: `x` is appended;
//! * a minimal non-admissible column word: a pair `(z, z̄)` is erased;
//! * anything else: the three-letter windows of `w(C)x` are rewritten from
//!   right to left by the Knuth-type and barred-pair relations, leaving
//!   `x′ w(C′)` with `C′` as tall as `C` and `x′` bumped to the next column.

use thiserror::Error;

use crate::alphabet::{AlphabetError, Letter, Word};
use crate::columns::{admissibility_counts, is_admissible_column_word, is_column_word, Column};
use crate::relations::{partners, Triple};
use crate::tableaux::{SymplecticTableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("`{0}` is not a minimal non-admissible column word")]
    NotContractible(Word),
    #[error("column {0} is not admissible")]
    NotAdmissible(Column),
    #[error("window {window:?} at position {start} of `{word}` has {found} relation partners")]
    Sweep {
        word: Word,
        start: usize,
        window: Vec<i32>,
        found: usize,
    },
    #[error("reinserting a contracted column contracted again")]
    SecondContraction,
    #[error("`{0}` is a non-admissible column word with a non-admissible proper factor")]
    NonMinimal(Word),
    #[error("insertion produced an invalid tableau: {0}")]
    Invalid(#[from] TableauError),
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnWordClass {
    AdmissibleColumn,
    /// Strictly increasing, not admissible, every proper factor admissible.
    MinimalNonAdmissible,
    /// Strictly increasing and not admissible, with a non-admissible proper
    /// factor. Never arises as `w(C)x` for admissible `C`.
    NonMinimalNonAdmissible,
    NotAColumn,
}

pub fn classify_column_word(w: &Word) -> ColumnWordClass {
    if !is_column_word(w) {
        return ColumnWordClass::NotAColumn;
    }
    if is_admissible_column_word(w) {
        return ColumnWordClass::AdmissibleColumn;
    }
    // factors of admissible columns are admissible, so the two maximal
    // proper factors decide minimality
    let k = w.len();
    let prefix = Word::new(w.n(), w[..k - 1].to_vec()).unwrap();
    let suffix = Word::new(w.n(), w[1..].to_vec()).unwrap();
    if is_admissible_column_word(&prefix) && is_admissible_column_word(&suffix) {
        ColumnWordClass::MinimalNonAdmissible
    } else {
        ColumnWordClass::NonMinimalNonAdmissible
    }
}

/// The unbarred value `z` erased by [`contract`]: the lowest `z` with both
/// `z` and `z̄` present and `N(z) = z + 1`.
pub fn contraction_value(w: &Word) -> Option<u8> {
    let c = Column::new(w.clone()).ok()?;
    let counts = admissibility_counts(&c);
    (1..=w.n()).find(|&z| {
        c.contains(Letter::unbarred(z))
            && c.contains(Letter::barred(z))
            && counts[usize::from(z) - 1] == usize::from(z) + 1
    })
}

/// Erases the pair `(z, z̄)` from a minimal non-admissible column word.
pub fn contract(w: &Word) -> Result<Word, InsertionError> {
    if classify_column_word(w) != ColumnWordClass::MinimalNonAdmissible {
        return Err(InsertionError::NotContractible(w.clone()));
    }
    let z = contraction_value(w).ok_or_else(|| InsertionError::NotContractible(w.clone()))?;
    let letters = w.iter().copied().filter(|l| l.value() != z).collect();
    Ok(Word::new(w.n(), letters)?)
}

/// One rewritten window of the bumping sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepStep {
    pub start: usize,
    pub before: Triple,
    pub after: Triple,
}

/// Rewrites the windows `[k, k + 3)` for `k = |w| − 3, …, 0`, each by its
/// unique relation partner.
pub fn bumping_sweep(w: &Word) -> Result<(Word, Vec<SweepStep>), InsertionError> {
    let mut letters = w.letters().to_vec();
    let mut steps = Vec::new();
    for start in (0..letters.len().saturating_sub(2)).rev() {
        let window: Triple = [letters[start], letters[start + 1], letters[start + 2]];
        let found = partners(window, w.n());
        if found.len() != 1 {
            return Err(InsertionError::Sweep {
                word: Word::new(w.n(), letters.clone())?,
                start,
                window: window.iter().map(|l| l.to_signed()).collect(),
                found: found.len(),
            });
        }
        letters[start..start + 3].copy_from_slice(&found[0]);
        steps.push(SweepStep {
            start,
            before: window,
            after: found[0],
        });
    }
    Ok((Word::new(w.n(), letters)?, steps))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnInsertion {
    /// `w(C)x` is an admissible column; the column grew by one box.
    Extended(Column),
    /// `w(C)x` contracted; the column shrank by one box (possibly to nothing).
    Contracted(Column),
    /// `x` entered the column and `bumped` left it.
    Bumped { column: Column, bumped: Letter },
}

impl ColumnInsertion {
    pub fn column(&self) -> &Column {
        match self {
            ColumnInsertion::Extended(c) | ColumnInsertion::Contracted(c) => c,
            ColumnInsertion::Bumped { column, .. } => column,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ColumnInsertion::Extended(_) => "extended",
            ColumnInsertion::Contracted(_) => "contracted",
            ColumnInsertion::Bumped { .. } => "bumped",
        }
    }
}

/// `x → C`, returning the outcome and, for bumping, the sweep steps.
pub fn insert_into_column_traced(
    c: &Column,
    x: Letter,
) -> Result<(ColumnInsertion, Vec<SweepStep>), InsertionError> {
    if !c.is_admissible() {
        return Err(InsertionError::NotAdmissible(c.clone()));
    }
    let mut w = c.reading();
    w.push(x)?;
    match classify_column_word(&w) {
        ColumnWordClass::AdmissibleColumn => Ok((
            ColumnInsertion::Extended(Column::new(w).expect("column word")),
            Vec::new(),
        )),
        ColumnWordClass::MinimalNonAdmissible => {
            let column = Column::new(contract(&w)?).expect("contraction keeps a column word");
            Ok((ColumnInsertion::Contracted(column), Vec::new()))
        }
        ColumnWordClass::NonMinimalNonAdmissible => Err(InsertionError::NonMinimal(w)),
        ColumnWordClass::NotAColumn => {
            let (rewritten, steps) = bumping_sweep(&w)?;
            let bumped = rewritten[0];
            let column = Column::new(Word::new(w.n(), rewritten[1..].to_vec())?)
                .map_err(TableauError::from)?;
            // P(w(C)x) = C′ x′ must itself be a symplectic tableau
            SymplecticTableau::new(
                w.n(),
                vec![
                    column.clone(),
                    Column::new(Word::new(w.n(), vec![bumped])?).unwrap(),
                ],
            )?;
            Ok((ColumnInsertion::Bumped { column, bumped }, steps))
        }
    }
}

/// `x → C` for an admissible column `C`.
pub fn insert_into_column(c: &Column, x: Letter) -> Result<ColumnInsertion, InsertionError> {
    insert_into_column_traced(c, x).map(|(outcome, _)| outcome)
}

fn insert_columns(
    columns: &[Column],
    x: Letter,
    n: u8,
    allow_contraction: bool,
) -> Result<Vec<Column>, InsertionError> {
    let Some((first, rest)) = columns.split_first() else {
        return Ok(vec![Column::new(Word::new(n, vec![x])?).unwrap()]);
    };
    match insert_into_column(first, x)? {
        ColumnInsertion::Extended(c) => {
            let mut out = vec![c];
            out.extend_from_slice(rest);
            Ok(out)
        }
        ColumnInsertion::Contracted(c) => {
            if !allow_contraction {
                return Err(InsertionError::SecondContraction);
            }
            let mut out = rest.to_vec();
            for &y in c.letters() {
                out = insert_columns(&out, y, n, false)?;
            }
            Ok(out)
        }
        ColumnInsertion::Bumped { column, bumped } => {
            let mut out = vec![column];
            out.extend(insert_columns(rest, bumped, n, allow_contraction)?);
            Ok(out)
        }
    }
}

/// `x → T`. The result is validated as a symplectic tableau.
pub fn insert_into_tableau(
    t: &SymplecticTableau,
    x: Letter,
) -> Result<SymplecticTableau, InsertionError> {
    if !x.fits(t.n()) {
        return Err(AlphabetError::OutOfRange {
            letter: x,
            n: t.n(),
        }
        .into());
    }
    let columns = insert_columns(t.columns(), x, t.n(), true)?;
    Ok(SymplecticTableau::new(t.n(), columns)?)
}

/// `P(w)`: the letters of `w` inserted one by one into the empty tableau.
pub fn tableau_of_word(w: &Word) -> Result<SymplecticTableau, InsertionError> {
    w.iter().try_fold(SymplecticTableau::empty(w.n()), |t, &x| {
        insert_into_tableau(&t, x)
    })
}
