//! Crystal operators on words.
//!
//! For an index `i`, the letters `i` and `(i+1)̄` carry the sign `+`, the
//! letters `i+1` and `ī` carry `−` (for `i = n`: `n` is `+` and `n̄` is `−`).
//! Cancelling adjacent `+−` pairs until none remain leaves `−^r +^s`.
//! Raising acts on the rightmost surviving `−`, lowering on the leftmost
//! surviving `+`.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{AlphabetError, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("operator index {index} is outside 1..={n}")]
    Index { index: u8, n: u8 },
    #[error("crystal component exceeds {limit} vertices")]
    TooLarge { limit: usize },
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Sign {
    Plus,
    Minus,
}

fn sign(letter: Letter, i: u8, n: u8) -> Option<Sign> {
    let (v, barred) = (letter.value(), letter.is_barred());
    if i == n {
        return match (v == n, barred) {
            (true, false) => Some(Sign::Plus),
            (true, true) => Some(Sign::Minus),
            _ => None,
        };
    }
    match (barred, v) {
        (false, v) if v == i => Some(Sign::Plus),
        (true, v) if v == i + 1 => Some(Sign::Plus),
        (false, v) if v == i + 1 => Some(Sign::Minus),
        (true, v) if v == i => Some(Sign::Minus),
        _ => None,
    }
}

/// The surviving signs of a word for one operator index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureReduction {
    pub index: u8,
    /// Positions in the original word of the surviving `−` letters.
    pub minus_positions: Vec<usize>,
    /// Positions in the original word of the surviving `+` letters.
    pub plus_positions: Vec<usize>,
}

impl SignatureReduction {
    /// Number of surviving `−`, i.e. `ε_i`.
    pub fn r(&self) -> usize {
        self.minus_positions.len()
    }

    /// Number of surviving `+`, i.e. `φ_i`.
    pub fn s(&self) -> usize {
        self.plus_positions.len()
    }

    /// The reduced signature as a string of `-` and `+`.
    pub fn pattern(&self) -> String {
        "-".repeat(self.r()) + &"+".repeat(self.s())
    }
}

fn check_index(w: &Word, i: u8) -> Result<(), CrystalError> {
    if i == 0 || i > w.n() {
        Err(CrystalError::Index { index: i, n: w.n() })
    } else {
        Ok(())
    }
}

pub fn reduce_signature(w: &Word, i: u8) -> Result<SignatureReduction, CrystalError> {
    check_index(w, i)?;
    let mut minus = Vec::new();
    // unmatched `+` so far; a later `−` cancels the most recent one
    let mut plus: Vec<usize> = Vec::new();
    for (pos, &letter) in w.iter().enumerate() {
        match sign(letter, i, w.n()) {
            Some(Sign::Plus) => plus.push(pos),
            Some(Sign::Minus) if plus.pop().is_none() => minus.push(pos),
            _ => {}
        }
    }
    Ok(SignatureReduction {
        index: i,
        minus_positions: minus,
        plus_positions: plus,
    })
}

fn raise_letter(letter: Letter, i: u8, n: u8) -> Letter {
    if i == n {
        Letter::unbarred(n)
    } else if letter.is_barred() {
        Letter::barred(i + 1)
    } else {
        Letter::unbarred(i)
    }
}

fn lower_letter(letter: Letter, i: u8, n: u8) -> Letter {
    if i == n {
        Letter::barred(n)
    } else if letter.is_barred() {
        Letter::barred(i)
    } else {
        Letter::unbarred(i + 1)
    }
}

/// `ẽ_i(w)`, or `None` when it vanishes.
pub fn raise(w: &Word, i: u8) -> Result<Option<Word>, CrystalError> {
    let sig = reduce_signature(w, i)?;
    Ok(sig.minus_positions.last().map(|&pos| {
        let mut letters = w.letters().to_vec();
        letters[pos] = raise_letter(letters[pos], i, w.n());
        Word::from_letters_unchecked(w.n(), letters)
    }))
}

/// `f̃_i(w)`, or `None` when it vanishes.
pub fn lower(w: &Word, i: u8) -> Result<Option<Word>, CrystalError> {
    let sig = reduce_signature(w, i)?;
    Ok(sig.plus_positions.first().map(|&pos| {
        let mut letters = w.letters().to_vec();
        letters[pos] = lower_letter(letters[pos], i, w.n());
        Word::from_letters_unchecked(w.n(), letters)
    }))
}

pub fn epsilon(w: &Word, i: u8) -> Result<usize, CrystalError> {
    Ok(reduce_signature(w, i)?.r())
}

pub fn phi(w: &Word, i: u8) -> Result<usize, CrystalError> {
    Ok(reduce_signature(w, i)?.s())
}

/// `d_i = #i − #ī` for `i = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<i32>);

impl WeightVector {
    /// Coefficients on the fundamental weights: `d_i − d_{i+1}` for `i < n`,
    /// and `d_n` for `Λ_n`.
    pub fn fundamental_coordinates(&self) -> Vec<i32> {
        let d = &self.0;
        (0..d.len())
            .map(|i| {
                if i + 1 < d.len() {
                    d[i] - d[i + 1]
                } else {
                    d[i]
                }
            })
            .collect()
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

pub fn weight(w: &Word) -> WeightVector {
    let mut d = vec![0i32; usize::from(w.n())];
    for letter in w.iter() {
        let slot = &mut d[usize::from(letter.value()) - 1];
        if letter.is_barred() {
            *slot -= 1;
        } else {
            *slot += 1;
        }
    }
    WeightVector(d)
}

pub fn is_highest_weight(w: &Word) -> bool {
    (1..=w.n()).all(|i| reduce_signature(w, i).map(|s| s.r() == 0).unwrap_or(false))
}

/// Raises greedily at the smallest applicable index until the word is of
/// highest weight. Returns the highest-weight word and the indices used.
pub fn raise_to_highest(w: &Word) -> (Word, Vec<u8>) {
    let mut current = w.clone();
    let mut path = Vec::new();
    'outer: loop {
        for i in 1..=w.n() {
            if let Some(next) = raise(&current, i).expect("index in range") {
                current = next;
                path.push(i);
                continue 'outer;
            }
        }
        return (current, path);
    }
}

/// A complete invariant of a word's position in its crystal component, up
/// to component isomorphism: the greedy raising path together with the
/// weight of the highest-weight vertex it ends at.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrystalLabel {
    pub path: Vec<u8>,
    pub highest_weight: WeightVector,
}

pub fn crystal_label(w: &Word) -> CrystalLabel {
    let (top, path) = raise_to_highest(w);
    CrystalLabel {
        path,
        highest_weight: weight(&top),
    }
}

/// Whether `u` and `v` sit at the same place of isomorphic components.
pub fn crystal_equivalent(u: &Word, v: &Word) -> Result<bool, CrystalError> {
    if u.n() != v.n() {
        return Err(AlphabetError::RankMismatch(u.n(), v.n()).into());
    }
    let (top_u, path) = raise_to_highest(u);
    let mut current = v.clone();
    for &i in &path {
        match raise(&current, i)? {
            Some(next) => current = next,
            None => return Ok(false),
        }
    }
    Ok(is_highest_weight(&current) && weight(&current) == weight(&top_u))
}

/// A connected component of the crystal graph on words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    /// Vertices in breadth-first discovery order.
    pub vertices: Vec<Word>,
    /// `(a, i, b)` with `f̃_i(vertices[a]) = vertices[b]`.
    pub edges: Vec<(usize, u8, usize)>,
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{k} [label=\"{v}\"];");
        }
        for &(a, i, b) in &self.edges {
            let _ = writeln!(out, "  v{a} -> v{b} [label=\"{i}\"];");
        }
        out.push_str("}\n");
        out
    }

    pub fn highest_weight_vertices(&self) -> impl Iterator<Item = &Word> {
        self.vertices.iter().filter(|w| is_highest_weight(w))
    }
}

/// Breadth-first closure of `{w}` under all raising and lowering operators.
pub fn component(w: &Word, max_vertices: usize) -> Result<CrystalGraph, CrystalError> {
    let mut index: HashMap<Word, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let mut queue = VecDeque::new();
    let mut visit = |word: Word, vertices: &mut Vec<Word>, queue: &mut VecDeque<usize>| {
        if let Some(&k) = index.get(&word) {
            return Ok(k);
        }
        if vertices.len() == max_vertices {
            return Err(CrystalError::TooLarge {
                limit: max_vertices,
            });
        }
        let k = vertices.len();
        index.insert(word.clone(), k);
        vertices.push(word);
        queue.push_back(k);
        Ok(k)
    };
    visit(w.clone(), &mut vertices, &mut queue)?;
    let mut edges = Vec::new();
    while let Some(k) = queue.pop_front() {
        for i in 1..=w.n() {
            let here = vertices[k].clone();
            if let Some(down) = lower(&here, i)? {
                let b = visit(down, &mut vertices, &mut queue)?;
                edges.push((k, i, b));
            }
            if let Some(up) = raise(&here, i)? {
                visit(up, &mut vertices, &mut queue)?;
            }
        }
    }
    Ok(CrystalGraph { vertices, edges })
}
