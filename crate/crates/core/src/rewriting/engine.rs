//! A string rewriting engine over an arbitrary symbol type.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Where a rule comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleFamily {
    /// `x z y → z x y`
    Kappa,
    /// `y x z → y z x`
    KappaPrime,
    /// `y x x̄ → y (x-1)̄ (x-1)`
    Xi,
    /// `x x̄ y → (x-1)̄ (x-1) y`
    XiPrime,
    /// contraction of a minimal non-admissible column word
    Zeta,
    /// two column generators to the columns of their tableau
    Alpha,
    /// letters of a column to the column generator
    Gamma,
    /// added by completion
    Completion,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule<G> {
    pub lhs: Vec<G>,
    pub rhs: Vec<G>,
    pub family: RuleFamily,
}

impl<G> Rule<G> {
    pub fn new(lhs: Vec<G>, rhs: Vec<G>, family: RuleFamily) -> Self {
        Rule { lhs, rhs, family }
    }
}

impl<G: fmt::Display> fmt::Display for Rule<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[G]| {
            s.iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{} -> {}", join(&self.lhs), join(&self.rhs))
    }
}

/// Which redex to contract when several are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Uniformly among all redexes, from a seeded generator.
    Random(u64),
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "leftmost" => Ok(Strategy::Leftmost),
            "rightmost" => Ok(Strategy::Rightmost),
            other => match other
                .strip_prefix("random:")
                .or_else(|| other.strip_prefix("random"))
            {
                Some("") => Ok(Strategy::Random(0)),
                Some(seed) => seed
                    .parse()
                    .map(Strategy::Random)
                    .map_err(|_| format!("bad seed in strategy `{other}`")),
                None => Err(format!("unknown strategy `{other}`")),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("rewriting did not terminate within {0} steps")]
    StepBudget(usize),
    #[error("step {step} does not decrease the termination order")]
    NotDecreasing { step: usize },
}

/// A redex: rule `rule` matches at `position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Redex {
    pub position: usize,
    pub rule: usize,
}

/// Rules indexed by their first symbol.
#[derive(Clone, Debug)]
pub struct RewriteSystem<G> {
    rules: Vec<Rule<G>>,
    by_head: HashMap<G, Vec<usize>>,
}

impl<G: Clone + Eq + Hash> RewriteSystem<G> {
    pub fn new(rules: Vec<Rule<G>>) -> Self {
        let mut system = RewriteSystem {
            rules: Vec::new(),
            by_head: HashMap::new(),
        };
        for rule in rules {
            system.push(rule);
        }
        system
    }

    pub fn push(&mut self, rule: Rule<G>) {
        assert!(!rule.lhs.is_empty(), "rules need a nonempty left-hand side");
        self.by_head
            .entry(rule.lhs[0].clone())
            .or_default()
            .push(self.rules.len());
        self.rules.push(rule);
    }

    pub fn rules(&self) -> &[Rule<G>] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    fn matches_at<'a>(
        &'a self,
        word: &'a [G],
        position: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        let candidates = self
            .by_head
            .get(&word[position])
            .map(Vec::as_slice)
            .unwrap_or(&[]);
        let rest = &word[position..];
        candidates
            .iter()
            .copied()
            .filter(move |&r| rest.starts_with(&self.rules[r].lhs))
    }

    /// The first rule matching at the leftmost matching position.
    pub fn leftmost_redex(&self, word: &[G]) -> Option<Redex> {
        (0..word.len()).find_map(|p| {
            self.matches_at(word, p)
                .next()
                .map(|rule| Redex { position: p, rule })
        })
    }

    pub fn rightmost_redex(&self, word: &[G]) -> Option<Redex> {
        (0..word.len()).rev().find_map(|p| {
            self.matches_at(word, p)
                .next()
                .map(|rule| Redex { position: p, rule })
        })
    }

    pub fn redexes(&self, word: &[G]) -> Vec<Redex> {
        (0..word.len())
            .flat_map(|p| {
                self.matches_at(word, p)
                    .map(move |rule| Redex { position: p, rule })
            })
            .collect()
    }

    pub fn is_normal(&self, word: &[G]) -> bool {
        self.leftmost_redex(word).is_none()
    }

    pub fn apply(&self, word: &[G], redex: Redex) -> Vec<G> {
        let rule = &self.rules[redex.rule];
        let mut out = Vec::with_capacity(word.len() + rule.rhs.len());
        out.extend_from_slice(&word[..redex.position]);
        out.extend_from_slice(&rule.rhs);
        out.extend_from_slice(&word[redex.position + rule.lhs.len()..]);
        out
    }

    /// Rewrites to a normal form, calling `observe(before, after)` after
    /// every step.
    pub fn normalize_with<F>(
        &self,
        word: &[G],
        strategy: Strategy,
        max_steps: usize,
        mut observe: F,
    ) -> Result<Vec<G>, RewriteError>
    where
        F: FnMut(&[G], &[G]) -> Result<(), RewriteError>,
    {
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut current = word.to_vec();
        for _ in 0..max_steps {
            let redex = match (strategy, rng.as_mut()) {
                (Strategy::Leftmost, _) => self.leftmost_redex(&current),
                (Strategy::Rightmost, _) => self.rightmost_redex(&current),
                (Strategy::Random(_), Some(rng)) => {
                    let all = self.redexes(&current);
                    (!all.is_empty()).then(|| all[rng.gen_range(0..all.len())])
                }
                (Strategy::Random(_), None) => unreachable!(),
            };
            let Some(redex) = redex else {
                return Ok(current);
            };
            let next = self.apply(&current, redex);
            observe(&current, &next)?;
            current = next;
        }
        if self.is_normal(&current) {
            Ok(current)
        } else {
            Err(RewriteError::StepBudget(max_steps))
        }
    }

    pub fn normalize(
        &self,
        word: &[G],
        strategy: Strategy,
        max_steps: usize,
    ) -> Result<Vec<G>, RewriteError> {
        self.normalize_with(word, strategy, max_steps, |_, _| Ok(()))
    }
}
