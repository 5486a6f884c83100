//! The presentation by admissible columns.
//!
//! Generators are the admissible columns, numbered in the order `⊏`
//! (height first, then letters). For two columns `u`, `v` with `v ⋠ u` the
//! rule `c_u c_v → c_w c_w'` replaces the pair by the columns of the tableau
//! `P(uv)`, right column first. Sequences of generators are compared by `≺`:
//! shorter first, then by `⊏` at the leftmost difference. Because ids follow
//! `⊏`, that is the same as comparing id sequences by length then
//! lexicographically.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{AlphabetError, Word};
use crate::columns::{enumerate_admissible, Column};
use crate::insertion::{tableau_of_word, InsertionError};
use crate::tableaux::{column_preceq, SymplecticTableau, TableauError};

use super::engine::{RewriteError, RewriteSystem, Rule, RuleFamily, Strategy};

const STEP_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AcolError {
    #[error("no generator with id {0}")]
    UnknownGenerator(usize),
    #[error("column {0} is not an admissible column of this rank")]
    NotAGenerator(Column),
    #[error("the tableau of {u}{v} has {count} columns")]
    TooManyColumns { u: Column, v: Column, count: usize },
    #[error(transparent)]
    Insertion(#[from] InsertionError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

/// `a ⊏ b`.
pub fn generator_precedes(a: &Column, b: &Column) -> bool {
    a < b
}

/// `≺` on sequences of columns.
pub fn sequence_cmp(a: &[Column], b: &[Column]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub fn sequence_precedes(a: &[Column], b: &[Column]) -> bool {
    sequence_cmp(a, b) == Ordering::Less
}

/// The right-hand side of the rule with left-hand side `c_u c_v`, or `None`
/// when `v ⪯ u` and the pair is already a tableau.
///
/// ```
/// use symplectic_plactic::columns::Column;
/// use symplectic_plactic::rewriting::acol::acol_rule;
///
/// let u = Column::from_signed(3, &[1, 2, 3]);
/// let rhs = acol_rule(&u, &Column::from_signed(3, &[-3])).unwrap().unwrap();
/// assert_eq!(rhs, vec![Column::from_signed(3, &[1, 2])]);
/// ```
pub fn acol_rule(u: &Column, v: &Column) -> Result<Option<Vec<Column>>, AcolError> {
    if column_preceq(v, u)? {
        return Ok(None);
    }
    let word = u.reading().concat(&v.reading())?;
    let p = tableau_of_word(&word)?;
    let mut columns = p.into_columns();
    if columns.len() > 2 {
        return Err(AcolError::TooManyColumns {
            u: u.clone(),
            v: v.clone(),
            count: columns.len(),
        });
    }
    columns.reverse();
    Ok(Some(columns))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleJson {
    pub lhs: Vec<Vec<i32>>,
    pub rhs: Vec<Vec<i32>>,
}

/// The rule table in its interchange form. Generators and rules are listed
/// in generator order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleTableJson {
    pub n: u8,
    pub generators: Vec<Vec<i32>>,
    pub rules: Vec<RuleJson>,
}

/// The column rewriting system of a fixed rank.
#[derive(Clone, Debug)]
pub struct AcolSystem {
    n: u8,
    generators: Vec<Column>,
    index: HashMap<Column, usize>,
    system: RewriteSystem<usize>,
    pairs: HashMap<(usize, usize), usize>,
}

impl AcolSystem {
    pub fn new(n: u8) -> Result<Self, AcolError> {
        let generators = enumerate_admissible(n);
        let index: HashMap<Column, usize> = generators
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, c)| (c, k))
            .collect();
        let mut system = RewriteSystem::new(Vec::new());
        let mut pairs = HashMap::new();
        for (a, u) in generators.iter().enumerate() {
            for (b, v) in generators.iter().enumerate() {
                if let Some(rhs) = acol_rule(u, v)? {
                    let rhs = rhs.iter().map(|c| index[c]).collect();
                    pairs.insert((a, b), system.len());
                    system.push(Rule::new(vec![a, b], rhs, RuleFamily::Alpha));
                }
            }
        }
        Ok(AcolSystem {
            n,
            generators,
            index,
            system,
            pairs,
        })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn generators(&self) -> &[Column] {
        &self.generators
    }

    pub fn generator(&self, id: usize) -> Result<&Column, AcolError> {
        self.generators
            .get(id)
            .ok_or(AcolError::UnknownGenerator(id))
    }

    pub fn id_of(&self, column: &Column) -> Result<usize, AcolError> {
        self.index
            .get(column)
            .copied()
            .ok_or_else(|| AcolError::NotAGenerator(column.clone()))
    }

    pub fn rules(&self) -> &[Rule<usize>] {
        self.system.rules()
    }

    pub fn system(&self) -> &RewriteSystem<usize> {
        &self.system
    }

    pub fn rule_for(&self, a: usize, b: usize) -> Option<&Rule<usize>> {
        self.pairs.get(&(a, b)).map(|&k| &self.system.rules()[k])
    }

    /// Rules with the generators spelled out as columns.
    pub fn column_rules(&self) -> Vec<Rule<Column>> {
        let spell = |s: &[usize]| s.iter().map(|&k| self.generators[k].clone()).collect();
        self.rules()
            .iter()
            .map(|r| Rule::new(spell(&r.lhs), spell(&r.rhs), r.family))
            .collect()
    }

    pub fn columns_of(&self, seq: &[usize]) -> Result<Vec<Column>, AcolError> {
        seq.iter().map(|&k| self.generator(k).cloned()).collect()
    }

    pub fn ids_of(&self, columns: &[Column]) -> Result<Vec<usize>, AcolError> {
        columns.iter().map(|c| self.id_of(c)).collect()
    }

    /// A word as the sequence of its one-letter columns.
    pub fn embed(&self, w: &Word) -> Result<Vec<usize>, AcolError> {
        if w.n() != self.n {
            return Err(AlphabetError::RankMismatch(self.n, w.n()).into());
        }
        w.iter()
            .map(|&x| {
                self.id_of(
                    &Column::new(Word::from_letters_unchecked(self.n, vec![x]))
                        .expect("one letter"),
                )
            })
            .collect()
    }

    pub fn is_normal(&self, seq: &[usize]) -> bool {
        self.system.is_normal(seq)
    }

    /// Rewrites `seq` to normal form. Every step is checked to decrease `≺`.
    pub fn normal_form(&self, seq: &[usize], strategy: Strategy) -> Result<Vec<usize>, AcolError> {
        if let Some(&bad) = seq.iter().find(|&&k| k >= self.generators.len()) {
            return Err(AcolError::UnknownGenerator(bad));
        }
        let mut step = 0;
        let nf = self
            .system
            .normalize_with(seq, strategy, STEP_BUDGET, |before, after| {
                step += 1;
                if after
                    .len()
                    .cmp(&before.len())
                    .then_with(|| after.cmp(before))
                    == Ordering::Less
                {
                    Ok(())
                } else {
                    Err(RewriteError::NotDecreasing { step })
                }
            })?;
        Ok(nf)
    }

    pub fn normal_form_of_word(
        &self,
        w: &Word,
        strategy: Strategy,
    ) -> Result<Vec<Column>, AcolError> {
        let nf = self.normal_form(&self.embed(w)?, strategy)?;
        self.columns_of(&nf)
    }

    /// The tableau whose reading is the concatenation of the columns of a
    /// normal form; the sequence lists columns right to left.
    pub fn tableau_of(&self, seq: &[usize]) -> Result<SymplecticTableau, AcolError> {
        let mut columns = self.columns_of(seq)?;
        columns.reverse();
        Ok(SymplecticTableau::new(self.n, columns)?)
    }

    pub fn to_json(&self) -> RuleTableJson {
        let spell = |s: &[usize]| s.iter().map(|&k| self.generators[k].to_signed()).collect();
        RuleTableJson {
            n: self.n,
            generators: self.generators.iter().map(Column::to_signed).collect(),
            rules: self
                .rules()
                .iter()
                .map(|r| RuleJson {
                    lhs: spell(&r.lhs),
                    rhs: spell(&r.rhs),
                })
                .collect(),
        }
    }
}
