//! The ordered alphabet `1 < 2 < … < n < n̄ < … < 1̄` and words over it.
//!
//! Letters are written in ASCII as signed integers: `k` is the unbarred
//! letter `k` and `-k` its barred partner `k̄`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("invalid token `{token}`: {reason}")]
    Token { token: String, reason: &'static str },
    #[error("letter {letter} is outside the alphabet of rank {n}")]
    OutOfRange { letter: Letter, n: u8 },
    #[error("alphabet rank must be at least 1")]
    ZeroRank,
    #[error("words over alphabets of rank {0} and {1} cannot be combined")]
    RankMismatch(u8, u8),
}

/// One symbol of the alphabet.
///
/// The order does not depend on the rank: unbarred letters come first in
/// increasing value, then barred letters in decreasing value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "i32", try_from = "i32")]
pub struct Letter {
    value: u8,
    barred: bool,
}

impl Letter {
    pub const fn unbarred(value: u8) -> Self {
        assert!(value >= 1);
        Letter {
            value,
            barred: false,
        }
    }

    pub const fn barred(value: u8) -> Self {
        assert!(value >= 1);
        Letter {
            value,
            barred: true,
        }
    }

    /// Builds a letter from its signed encoding. Zero has no letter.
    pub fn from_signed(k: i32) -> Option<Self> {
        let value = u8::try_from(k.unsigned_abs()).ok().filter(|&v| v != 0)?;
        Some(Letter {
            value,
            barred: k < 0,
        })
    }

    pub fn to_signed(self) -> i32 {
        if self.barred {
            -i32::from(self.value)
        } else {
            i32::from(self.value)
        }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    /// The partner letter: `x ↦ x̄` and `x̄ ↦ x`.
    pub fn bar(self) -> Self {
        Letter {
            value: self.value,
            barred: !self.barred,
        }
    }

    /// Position of the letter in `1 < … < n < n̄ < … < 1̄`, starting at 1.
    pub fn rank(self, n: u8) -> usize {
        if self.barred {
            2 * usize::from(n) + 1 - usize::from(self.value)
        } else {
            usize::from(self.value)
        }
    }

    /// Inverse of [`Letter::rank`].
    pub fn from_rank(rank: usize, n: u8) -> Option<Self> {
        let n = usize::from(n);
        match rank {
            r if (1..=n).contains(&r) => Some(Letter::unbarred(r as u8)),
            r if (n + 1..=2 * n).contains(&r) => Some(Letter::barred((2 * n + 1 - r) as u8)),
            _ => None,
        }
    }

    pub fn fits(self, n: u8) -> bool {
        self.value <= n
    }

    /// Unicode rendering with a combining overline for barred letters.
    pub fn pretty(self) -> String {
        if self.barred {
            format!("{}\u{0305}", self.value)
        } else {
            self.value.to_string()
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.barred, other.barred) {
            (false, false) => self.value.cmp(&other.value),
            (true, true) => other.value.cmp(&self.value),
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

impl From<Letter> for i32 {
    fn from(letter: Letter) -> i32 {
        letter.to_signed()
    }
}

impl TryFrom<i32> for Letter {
    type Error = AlphabetError;

    fn try_from(k: i32) -> Result<Self, Self::Error> {
        Letter::from_signed(k).ok_or_else(|| AlphabetError::Token {
            token: k.to_string(),
            reason: "zero is not a letter",
        })
    }
}

impl FromStr for Letter {
    type Err = AlphabetError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let bad = |reason| AlphabetError::Token {
            token: token.to_string(),
            reason,
        };
        let k: i32 = token
            .parse()
            .map_err(|_| bad("expected a signed integer"))?;
        if k == 0 {
            return Err(bad("zero is not a letter"));
        }
        Letter::from_signed(k).ok_or_else(|| bad("value too large"))
    }
}

/// Compares two letters of the same alphabet.
pub fn compare_letters(a: Letter, b: Letter) -> Ordering {
    a.cmp(&b)
}

/// All letters of the alphabet of rank `n`, in increasing order.
pub fn alphabet(n: u8) -> impl Iterator<Item = Letter> {
    (1..=2 * usize::from(n)).map(move |r| Letter::from_rank(r, n).unwrap())
}

/// A word over the alphabet of rank `n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    n: u8,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(n: u8, letters: Vec<Letter>) -> Result<Self, AlphabetError> {
        if n == 0 {
            return Err(AlphabetError::ZeroRank);
        }
        if let Some(&letter) = letters.iter().find(|l| !l.fits(n)) {
            return Err(AlphabetError::OutOfRange { letter, n });
        }
        Ok(Word { n, letters })
    }

    pub fn empty(n: u8) -> Self {
        assert!(n >= 1, "alphabet rank must be at least 1");
        Word {
            n,
            letters: Vec::new(),
        }
    }

    /// Builds a word from signed integers; panics on invalid input.
    ///
    /// Meant for literals in tests and examples. Use [`parse_word`] for
    /// untrusted text.
    pub fn from_signed(n: u8, letters: &[i32]) -> Self {
        let letters = letters
            .iter()
            .map(|&k| Letter::from_signed(k).expect("nonzero letter"))
            .collect();
        Word::new(n, letters).expect("letters fit the alphabet")
    }

    pub(crate) fn from_letters_unchecked(n: u8, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.fits(n)));
        Word { n, letters }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn concat(&self, other: &Word) -> Result<Word, AlphabetError> {
        if self.n != other.n {
            return Err(AlphabetError::RankMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { n: self.n, letters })
    }

    pub fn push(&mut self, letter: Letter) -> Result<(), AlphabetError> {
        if !letter.fits(self.n) {
            return Err(AlphabetError::OutOfRange { letter, n: self.n });
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn pretty(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.pretty())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Every word of length exactly `len`, in lexicographic order by rank.
    pub fn all_of_length(n: u8, len: usize) -> impl Iterator<Item = Word> {
        let size = 2 * usize::from(n);
        let total = size.pow(len as u32);
        (0..total).map(move |mut code| {
            let mut letters = vec![Letter::unbarred(1); len];
            for slot in letters.iter_mut().rev() {
                *slot = Letter::from_rank(code % size + 1, n).unwrap();
                code /= size;
            }
            Word { n, letters }
        })
    }

    /// Every word with length in `min_len..=max_len`, shortest first.
    pub fn all_up_to(n: u8, min_len: usize, max_len: usize) -> impl Iterator<Item = Word> {
        (min_len..=max_len).flat_map(move |len| Word::all_of_length(n, len))
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

/// Parses whitespace-separated signed integers into a word over rank `n`.
pub fn parse_word(text: &str, n: u8) -> Result<Word, AlphabetError> {
    if n == 0 {
        return Err(AlphabetError::ZeroRank);
    }
    let letters = text
        .split_whitespace()
        .map(|token| {
            let letter: Letter = token.parse()?;
            if !letter.fits(n) {
                return Err(AlphabetError::Token {
                    token: token.to_string(),
                    reason: "letter outside the alphabet",
                });
            }
            Ok(letter)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Word { n, letters })
}

pub fn format_word(w: &Word) -> String {
    w.letters
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
