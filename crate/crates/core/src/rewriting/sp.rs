//! The letter-level presentation: Knuth-type, barred-pair and contraction
//! relations oriented by the reverse degree-lexicographic order.

use std::cmp::Ordering;

use crate::alphabet::{alphabet, AlphabetError, Letter, Word};
use crate::columns::all_columns;
use crate::insertion::{classify_column_word, contract, ColumnWordClass};

use super::engine::{Rule, RuleFamily};

/// Length first; among words of equal length the lexicographically
/// smaller word is the greater one.
///
/// ```
/// use std::cmp::Ordering;
/// use symplectic_plactic::alphabet::Word;
/// use symplectic_plactic::rewriting::reverse_deglex_cmp;
///
/// let a = Word::from_signed(2, &[1, -2, 2]);
/// let b = Word::from_signed(2, &[-2, 1, 2]);
/// assert_eq!(reverse_deglex_cmp(&a, &b), Ordering::Greater);
/// ```
pub fn reverse_deglex_cmp(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| b.cmp(a))
}

pub fn reverse_deglex_greater(a: &Word, b: &Word) -> Result<bool, AlphabetError> {
    if a.n() != b.n() {
        return Err(AlphabetError::RankMismatch(a.n(), b.n()));
    }
    Ok(reverse_deglex_cmp(a, b) == Ordering::Greater)
}

/// Minimal non-admissible column words; all have length at most `n + 1`.
pub fn minimal_nonadmissible_words(n: u8) -> Vec<Word> {
    all_columns(n, usize::from(n) + 1)
        .into_iter()
        .map(|c| c.reading())
        .filter(|w| classify_column_word(w) == ColumnWordClass::MinimalNonAdmissible)
        .collect()
}

/// Instances of `x z y → z x y` (`x < y ≤ z`) and `y x z → y z x`
/// (`x ≤ y < z`), always with `z ≠ x̄`, over the letters in `letters`.
pub fn knuth_rules(letters: &[Letter]) -> Vec<Rule<Letter>> {
    let mut rules = Vec::new();
    for &x in letters {
        for &y in letters {
            for &z in letters {
                if z == x.bar() {
                    continue;
                }
                if x < y && y <= z {
                    rules.push(Rule::new(vec![x, z, y], vec![z, x, y], RuleFamily::Kappa));
                }
                if x <= y && y < z {
                    rules.push(Rule::new(
                        vec![y, x, z],
                        vec![y, z, x],
                        RuleFamily::KappaPrime,
                    ));
                }
            }
        }
    }
    rules
}

/// Every oriented relation instance over the rank-`n` alphabet.
pub fn sp_rules(n: u8) -> Vec<Rule<Letter>> {
    let letters: Vec<Letter> = alphabet(n).collect();
    let mut rules = knuth_rules(&letters);
    for v in 2..=n {
        let x = Letter::unbarred(v);
        let below = Letter::unbarred(v - 1);
        for &y in letters.iter().filter(|&&y| x <= y && y <= x.bar()) {
            rules.push(Rule::new(
                vec![y, x, x.bar()],
                vec![y, below.bar(), below],
                RuleFamily::Xi,
            ));
            rules.push(Rule::new(
                vec![x, x.bar(), y],
                vec![below.bar(), below, y],
                RuleFamily::XiPrime,
            ));
        }
    }
    for w in minimal_nonadmissible_words(n) {
        let rhs = contract(&w).expect("minimal non-admissible words contract");
        rules.push(Rule::new(
            w.into_letters(),
            rhs.into_letters(),
            RuleFamily::Zeta,
        ));
    }
    rules
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(k: i32) -> Letter {
        Letter::from_signed(k).unwrap()
    }

    fn has(rules: &[Rule<Letter>], lhs: &[i32], rhs: &[i32], family: RuleFamily) -> bool {
        let lhs: Vec<Letter> = lhs.iter().map(|&k| l(k)).collect();
        let rhs: Vec<Letter> = rhs.iter().map(|&k| l(k)).collect();
        rules
            .iter()
            .any(|r| r.lhs == lhs && r.rhs == rhs && r.family == family)
    }

    #[test]
    fn named_instances() {
        let two = sp_rules(2);
        assert!(has(&two, &[1, -2, 2], &[-2, 1, 2], RuleFamily::Kappa));
        assert!(has(&two, &[2, 2, -2], &[2, -1, 1], RuleFamily::Xi));
        assert!(has(&sp_rules(3), &[1, 2, 3, -3], &[1, 2], RuleFamily::Zeta));
        assert!(has(&sp_rules(1), &[1, -1], &[], RuleFamily::Zeta));
    }

    #[test]
    fn orientation_examples() {
        let a = Word::from_signed(2, &[1, -2, 2]);
        let b = Word::from_signed(2, &[-2, 1, 2]);
        assert!(reverse_deglex_greater(&a, &b).unwrap());
        assert!(!reverse_deglex_greater(&b, &a).unwrap());
        assert!(!reverse_deglex_greater(&a, &a).unwrap());
        assert!(reverse_deglex_greater(&a, &Word::from_signed(3, &[1])).is_err());
    }

    #[test]
    fn every_instance_decreases() {
        for n in 1..=3 {
            for rule in sp_rules(n) {
                assert_eq!(
                    reverse_deglex_cmp(&rule.lhs, &rule.rhs),
                    Ordering::Greater,
                    "{rule}"
                );
            }
        }
    }

    #[test]
    fn minimal_words_are_short() {
        for n in 1..=4 {
            let words = minimal_nonadmissible_words(n);
            assert!(!words.is_empty());
            assert!(words.iter().all(|w| w.len() <= usize::from(n) + 1));
        }
        assert_eq!(
            minimal_nonadmissible_words(1),
            vec![Word::from_signed(1, &[1, -1])]
        );
    }
}
