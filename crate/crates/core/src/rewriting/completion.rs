//! Bounded Knuth–Bendix completion for string rewriting systems.
//!
//! Critical pairs are examined shortest overlap first. The procedure stops
//! when every critical pair resolves (the system is then confluent) or when
//! a rule or pair budget runs out. Running out of budget is not evidence of
//! anything by itself; it is reported as `closed: false`.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

use crate::alphabet::Letter;

use super::engine::{RewriteSystem, Rule, RuleFamily, Strategy};
use super::sp::knuth_rules;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("input rule {0} is not oriented by the given order")]
    NotOriented(usize),
    #[error("normalization exceeded its step budget")]
    Diverged,
}

#[derive(Clone, Debug)]
pub struct CompletionReport<G> {
    /// Every critical pair resolved.
    pub closed: bool,
    pub rules_added: usize,
    pub pairs_examined: usize,
    /// Rules added by completion, in the order they were added.
    pub added: Vec<Rule<G>>,
    /// Distinct normal forms the order could not orient.
    pub unorientable: Vec<(Vec<G>, Vec<G>)>,
}

impl<G: fmt::Display> fmt::Display for CompletionReport<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "closed: {}", self.closed)?;
        writeln!(f, "rules added: {}", self.rules_added)?;
        writeln!(f, "critical pairs examined: {}", self.pairs_examined)?;
        writeln!(f, "unorientable pairs: {}", self.unorientable.len())?;
        for rule in &self.added {
            writeln!(f, "  {rule}")?;
        }
        Ok(())
    }
}

struct Pending<G> {
    left: Vec<G>,
    right: Vec<G>,
}

/// Critical pairs of `a` against `b`: proper overlaps of a suffix of
/// `a.lhs` with a prefix of `b.lhs`, and occurrences of `b.lhs` inside
/// `a.lhs`. Each comes with the length of its overlap word.
fn critical_pairs<G: Clone + Eq>(a: &Rule<G>, b: &Rule<G>, same: bool) -> Vec<(usize, Pending<G>)> {
    let mut out = Vec::new();
    let (la, lb) = (&a.lhs, &b.lhs);
    for k in 1..la.len().min(lb.len()) {
        if la[la.len() - k..] == lb[..k] {
            let left = [a.rhs.as_slice(), &lb[k..]].concat();
            let right = [&la[..la.len() - k], b.rhs.as_slice()].concat();
            out.push((la.len() + lb.len() - k, Pending { left, right }));
        }
    }
    if !same && lb.len() <= la.len() {
        for p in 0..=la.len() - lb.len() {
            if la[p..p + lb.len()] == lb[..] {
                let right = [&la[..p], b.rhs.as_slice(), &la[p + lb.len()..]].concat();
                out.push((
                    la.len(),
                    Pending {
                        left: a.rhs.clone(),
                        right,
                    },
                ));
            }
        }
    }
    out
}

pub fn kb_complete<G, O>(
    rules: Vec<Rule<G>>,
    order: O,
    max_rules: usize,
    max_pairs: usize,
) -> Result<CompletionReport<G>, CompletionError>
where
    G: Clone + Eq + Hash,
    O: Fn(&[G], &[G]) -> Ordering,
{
    if let Some(k) = rules
        .iter()
        .position(|r| order(&r.lhs, &r.rhs) != Ordering::Greater)
    {
        return Err(CompletionError::NotOriented(k));
    }
    let mut system = RewriteSystem::new(Vec::new());
    let mut queue: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    let mut pending: Vec<Option<Pending<G>>> = Vec::new();

    let enqueue = |system: &RewriteSystem<G>,
                   queue: &mut BinaryHeap<Reverse<(usize, usize)>>,
                   pending: &mut Vec<Option<Pending<G>>>| {
        let k = system.len() - 1;
        let new = &system.rules()[k];
        for (j, old) in system.rules().iter().enumerate() {
            let mut found = critical_pairs(new, old, j == k);
            if j != k {
                found.extend(critical_pairs(old, new, false));
            }
            for (len, pair) in found {
                queue.push(Reverse((len, pending.len())));
                pending.push(Some(pair));
            }
        }
    };

    for rule in rules {
        system.push(rule);
        enqueue(&system, &mut queue, &mut pending);
    }

    let budget = 1_000_000;
    let mut report = CompletionReport {
        closed: false,
        rules_added: 0,
        pairs_examined: 0,
        added: Vec::new(),
        unorientable: Vec::new(),
    };
    while let Some(Reverse((_, id))) = queue.pop() {
        if report.pairs_examined >= max_pairs || report.rules_added >= max_rules {
            return Ok(report);
        }
        report.pairs_examined += 1;
        let pair = pending[id].take().expect("each pair is examined once");
        let left = system
            .normalize(&pair.left, Strategy::Leftmost, budget)
            .map_err(|_| CompletionError::Diverged)?;
        let right = system
            .normalize(&pair.right, Strategy::Leftmost, budget)
            .map_err(|_| CompletionError::Diverged)?;
        if left == right {
            continue;
        }
        let rule = match order(&left, &right) {
            Ordering::Greater => Rule::new(left, right, RuleFamily::Completion),
            Ordering::Less => Rule::new(right, left, RuleFamily::Completion),
            Ordering::Equal => {
                report.unorientable.push((left, right));
                continue;
            }
        };
        report.added.push(rule.clone());
        report.rules_added += 1;
        system.push(rule);
        enqueue(&system, &mut queue, &mut pending);
    }
    report.closed = report.unorientable.is_empty();
    Ok(report)
}

/// The Knuth relations on the unbarred letters `1..=k`, oriented by the
/// reverse degree-lexicographic order.
pub fn type_a_knuth_rules(k: u8) -> Vec<Rule<Letter>> {
    let letters: Vec<Letter> = (1..=k).map(Letter::unbarred).collect();
    knuth_rules(&letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules(list: &[(&str, &str)]) -> Vec<Rule<char>> {
        list.iter()
            .map(|(l, r)| {
                Rule::new(
                    l.chars().collect(),
                    r.chars().collect(),
                    RuleFamily::Completion,
                )
            })
            .collect()
    }

    fn shortlex(a: &[char], b: &[char]) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| a.cmp(b))
    }

    #[test]
    fn toy_system_without_overlaps_closes() {
        let report = kb_complete(rules(&[("ab", "c")]), shortlex, 10, 10).unwrap();
        assert!(report.closed);
        assert_eq!(report.rules_added, 0);
    }

    #[test]
    fn commutation_completes() {
        // ba -> ab and the idempotent aa -> a overlap in baa
        let report = kb_complete(rules(&[("ba", "ab"), ("aa", "a")]), shortlex, 10, 100).unwrap();
        assert!(report.closed);
    }

    #[test]
    fn added_rules_respect_the_order() {
        let report = kb_complete(rules(&[("aab", "b"), ("ba", "ab")]), shortlex, 20, 1000).unwrap();
        assert!(report.closed);
        for rule in &report.added {
            assert_eq!(shortlex(&rule.lhs, &rule.rhs), Ordering::Greater);
        }
    }

    #[test]
    fn rejects_misoriented_input() {
        let r = kb_complete(rules(&[("a", "ab")]), shortlex, 10, 10);
        assert_eq!(r.unwrap_err(), CompletionError::NotOriented(0));
    }

    #[test]
    fn type_a_rules_are_knuth_relations() {
        // x z y -> z x y for x < y <= z and y x z -> y z x for x <= y < z
        let four = type_a_knuth_rules(4);
        let kappa = four
            .iter()
            .filter(|r| r.family == RuleFamily::Kappa)
            .count();
        let kappa_prime = four
            .iter()
            .filter(|r| r.family == RuleFamily::KappaPrime)
            .count();
        assert_eq!(kappa, 10);
        assert_eq!(kappa_prime, 10);
    }
}
