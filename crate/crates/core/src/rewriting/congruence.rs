//! Brute-force exploration of the congruence generated by the defining
//! relations, used as an independent check on insertion and rewriting.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::alphabet::{AlphabetError, Letter, Word};
use crate::insertion::contract;
use crate::relations::partners;

use super::sp::minimal_nonadmissible_words;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("congruence closure exceeded {0} words")]
    TooLarge(usize),
    #[error("length cap {cap} is below the input length {len}")]
    CapTooSmall { cap: usize, len: usize },
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

/// Undirected one-step moves of the congruence over a fixed rank.
#[derive(Clone, Debug)]
pub struct CongruenceMoves {
    n: u8,
    contractions: HashMap<Vec<Letter>, Vec<Letter>>,
    expansions: HashMap<Vec<Letter>, Vec<Vec<Letter>>>,
    longest: usize,
}

impl CongruenceMoves {
    pub fn new(n: u8) -> Self {
        let mut contractions = HashMap::new();
        let mut expansions: HashMap<Vec<Letter>, Vec<Vec<Letter>>> = HashMap::new();
        let mut longest = 0;
        for w in minimal_nonadmissible_words(n) {
            let small = contract(&w).expect("minimal words contract").into_letters();
            let big = w.into_letters();
            longest = longest.max(big.len());
            expansions
                .entry(small.clone())
                .or_default()
                .push(big.clone());
            contractions.insert(big, small);
        }
        CongruenceMoves {
            n,
            contractions,
            expansions,
            longest,
        }
    }

    /// Words one relation away from `w` whose length is at most `cap`.
    pub fn neighbors(&self, w: &[Letter], cap: usize) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        for k in 0..w.len().saturating_sub(2) {
            for p in partners([w[k], w[k + 1], w[k + 2]], self.n) {
                let mut next = w.to_vec();
                next[k..k + 3].copy_from_slice(&p);
                out.push(next);
            }
        }
        for i in 0..w.len() {
            for j in i + 2..=(i + self.longest).min(w.len()) {
                if let Some(small) = self.contractions.get(&w[i..j]) {
                    out.push([&w[..i], small.as_slice(), &w[j..]].concat());
                }
            }
        }
        if w.len() + 2 <= cap {
            for i in 0..=w.len() {
                for j in i..=(i + self.longest.saturating_sub(2)).min(w.len()) {
                    if let Some(bigs) = self.expansions.get(&w[i..j]) {
                        for big in bigs {
                            out.push([&w[..i], big.as_slice(), &w[j..]].concat());
                        }
                    }
                }
            }
        }
        out
    }
}

/// Whether `u ≡ v`, searching only through words of length at most
/// `length_cap` and visiting at most `limit` words.
pub fn congruence_oracle(
    u: &Word,
    v: &Word,
    length_cap: usize,
    limit: usize,
) -> Result<bool, CongruenceError> {
    if u.n() != v.n() {
        return Err(AlphabetError::RankMismatch(u.n(), v.n()).into());
    }
    let len = u.len().max(v.len());
    if length_cap < len {
        return Err(CongruenceError::CapTooSmall {
            cap: length_cap,
            len,
        });
    }
    if u == v {
        return Ok(true);
    }
    let moves = CongruenceMoves::new(u.n());
    let target = v.letters().to_vec();
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([u.letters().to_vec()]);
    let mut queue = VecDeque::from([u.letters().to_vec()]);
    while let Some(w) = queue.pop_front() {
        for next in moves.neighbors(&w, length_cap) {
            if next == target {
                return Ok(true);
            }
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Err(CongruenceError::TooLarge(limit));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// Connected components of the congruence graph on all words of length at
/// most `length_cap`. Returns a class id per word.
pub fn congruence_classes(n: u8, length_cap: usize) -> HashMap<Vec<Letter>, usize> {
    let moves = CongruenceMoves::new(n);
    let words: Vec<Vec<Letter>> = Word::all_up_to(n, 0, length_cap)
        .map(Word::into_letters)
        .collect();
    let index: HashMap<&[Letter], usize> = words
        .iter()
        .enumerate()
        .map(|(k, w)| (w.as_slice(), k))
        .collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], mut k: usize) -> usize {
        while parent[k] != k {
            parent[k] = parent[parent[k]];
            k = parent[k];
        }
        k
    }
    for (k, w) in words.iter().enumerate() {
        for next in moves.neighbors(w, length_cap) {
            let j = index[next.as_slice()];
            let (a, b) = (find(&mut parent, k), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out = HashMap::with_capacity(words.len());
    for (k, w) in words.iter().enumerate() {
        out.insert(w.clone(), find(&mut parent, k));
    }
    out
}
