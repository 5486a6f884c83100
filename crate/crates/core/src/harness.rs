//! Verification suites that cross-check insertion, crystals and rewriting
//! on exhaustive or sampled universes of words.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{alphabet, Letter, Word};
use crate::columns::{admissibility_counts, all_columns};
use crate::crystal::{crystal_label, epsilon, lower, phi, raise, weight};
use crate::insertion::{tableau_of_word, InsertionError};
use crate::rewriting::acol::{AcolError, AcolSystem};
use crate::rewriting::engine::Strategy;
use crate::rewriting::sp::{reverse_deglex_cmp, sp_rules};
use crate::tableaux::{column_preceq, tableau_by_crystal, SymplecticTableau, TableauError};

/// Largest universe a suite will enumerate unless told otherwise.
pub const DEFAULT_BUDGET: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("universe of about {estimate} words exceeds the budget of {budget}")]
    Budget { estimate: usize, budget: usize },
    #[error(transparent)]
    Acol(#[from] AcolError),
    #[error(transparent)]
    Insertion(#[from] InsertionError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Universe {
    pub n: u8,
    pub min_len: usize,
    pub max_len: usize,
    /// Number of sampled words, when the universe is not exhaustive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampled: Option<usize>,
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} length {}..={}", self.n, self.min_len, self.max_len)?;
        if let Some(k) = self.sampled {
            write!(f, " ({k} sampled)")?;
        }
        Ok(())
    }
}

/// The first failing case of a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub verdicts: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub universe: Universe,
    pub cases: usize,
    pub passes: usize,
    pub failures: usize,
    pub witness: Option<Witness>,
}

impl CheckReport {
    fn new(suite: &str, universe: Universe) -> Self {
        CheckReport {
            suite: suite.to_string(),
            universe,
            cases: 0,
            passes: 0,
            failures: 0,
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.cases += 1;
        if ok {
            self.passes += 1;
        } else {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{:<16} {:<8} {}: {} cases, {} passed, {} failed",
            self.suite, status, self.universe, self.cases, self.passes, self.failures
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {}", w.inputs.join(" | "))?;
            for (k, v) in &w.verdicts {
                write!(f, "\n    {k}: {v}")?;
            }
        }
        Ok(())
    }
}

fn witness(inputs: &[&dyn fmt::Display], verdicts: &[(&str, String)]) -> Witness {
    Witness {
        inputs: inputs.iter().map(|x| x.to_string()).collect(),
        verdicts: verdicts
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
    }
}

/// Number of words over rank `n` with length in `min_len..=max_len`.
pub fn universe_size(n: u8, min_len: usize, max_len: usize) -> usize {
    let size = 2 * usize::from(n);
    (min_len..=max_len).fold(0usize, |acc, k| {
        acc.saturating_add(size.saturating_pow(k as u32))
    })
}

fn check_budget(n: u8, min_len: usize, max_len: usize, budget: usize) -> Result<(), HarnessError> {
    let estimate = universe_size(n, min_len, max_len);
    if estimate > budget {
        return Err(HarnessError::Budget { estimate, budget });
    }
    Ok(())
}

/// `count` random words of length `1..=max_len`, reproducible from `seed`.
pub fn sample_words(n: u8, max_len: usize, count: usize, seed: u64) -> Vec<Word> {
    let letters: Vec<Letter> = alphabet(n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.max(1));
            let w = (0..len)
                .map(|_| letters[rng.gen_range(0..letters.len())])
                .collect();
            Word::new(n, w).expect("letters of rank n")
        })
        .collect()
}

/// First index with the same key, for each position.
fn representatives<K: Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Vec<usize> {
    let mut first: HashMap<K, usize> = HashMap::new();
    keys.into_iter()
        .enumerate()
        .map(|(k, key)| *first.entry(key).or_insert(k))
        .collect()
}

/// Partitions the nonempty words of length at most `max_len` by `P(w)`, by
/// column normal form and by crystal label, and checks that the three
/// partitions coincide.
pub fn run_cross_section_check(n: u8, max_len: usize) -> Result<CheckReport, HarnessError> {
    run_cross_section_check_with_budget(n, max_len, DEFAULT_BUDGET)
}

pub fn run_cross_section_check_with_budget(
    n: u8,
    max_len: usize,
    budget: usize,
) -> Result<CheckReport, HarnessError> {
    check_budget(n, 1, max_len, budget)?;
    let words: Vec<Word> = Word::all_up_to(n, 1, max_len).collect();
    cross_section_on(
        n,
        words,
        Universe {
            n,
            min_len: 1,
            max_len,
            sampled: None,
        },
    )
}

/// The cross-section check on an explicit list of words.
pub fn cross_section_on(
    n: u8,
    words: Vec<Word>,
    universe: Universe,
) -> Result<CheckReport, HarnessError> {
    let system = AcolSystem::new(n)?;
    let mut tableaux = Vec::with_capacity(words.len());
    let mut normal_forms = Vec::with_capacity(words.len());
    for w in &words {
        tableaux.push(tableau_of_word(w)?);
        normal_forms.push(system.normal_form(&system.embed(w)?, Strategy::Leftmost)?);
    }
    let by_p = representatives(tableaux.iter());
    let by_nf = representatives(normal_forms.iter());
    let by_crystal = representatives(words.iter().map(crystal_label));
    let mut report = CheckReport::new("cross-section", universe);
    for (k, w) in words.iter().enumerate() {
        let ok = by_p[k] == by_nf[k] && by_nf[k] == by_crystal[k];
        report.record(ok, || {
            let r = by_p[k].min(by_nf[k]).min(by_crystal[k]);
            let rep = &words[r];
            let same = |a: usize, b: usize| (a == b).to_string();
            witness(
                &[w, rep],
                &[
                    ("same P", same(by_p[k], by_p[r])),
                    ("same normal form", same(by_nf[k], by_nf[r])),
                    ("same crystal label", same(by_crystal[k], by_crystal[r])),
                ],
            )
        });
    }
    Ok(report)
}

/// For every admissible pair `(U, V)` with `V ⋠ U`, the tableau of `uv` has
/// at most two columns and, with two, its right column is shorter than `U`.
pub fn run_lemma_checks(n: u8) -> Result<CheckReport, HarnessError> {
    let columns = crate::columns::enumerate_admissible(n);
    let mut report = CheckReport::new(
        "column-pairs",
        Universe {
            n,
            min_len: 2,
            max_len: 2,
            sampled: None,
        },
    );
    for u in &columns {
        for v in &columns {
            if column_preceq(v, u)? {
                continue;
            }
            let p = tableau_of_word(&u.reading().concat(&v.reading()).expect("same rank"))?;
            let cols = p.columns();
            let ok = cols.len() <= 2 && (cols.len() < 2 || cols[1].height() < u.height());
            report.record(ok, || witness(&[u, v], &[("tableau", p.to_string())]));
        }
    }
    Ok(report)
}

/// Normal forms of every word agree under leftmost, rightmost and each
/// seeded random strategy; every step is checked to decrease `≺`.
pub fn run_confluence_check(
    n: u8,
    max_len: usize,
    seeds: &[u64],
) -> Result<CheckReport, HarnessError> {
    check_budget(n, 0, max_len, DEFAULT_BUDGET)?;
    let words: Vec<Word> = Word::all_up_to(n, 0, max_len).collect();
    confluence_on(
        n,
        &words,
        seeds,
        Universe {
            n,
            min_len: 0,
            max_len,
            sampled: None,
        },
    )
}

/// The confluence check on `count` sampled words.
pub fn run_sampled_confluence_check(
    n: u8,
    max_len: usize,
    count: usize,
    seed: u64,
    seeds: &[u64],
) -> Result<CheckReport, HarnessError> {
    let words = sample_words(n, max_len, count, seed);
    confluence_on(
        n,
        &words,
        seeds,
        Universe {
            n,
            min_len: 1,
            max_len,
            sampled: Some(count),
        },
    )
}

fn confluence_on(
    n: u8,
    words: &[Word],
    seeds: &[u64],
    universe: Universe,
) -> Result<CheckReport, HarnessError> {
    let system = AcolSystem::new(n)?;
    let mut strategies = vec![Strategy::Leftmost, Strategy::Rightmost];
    strategies.extend(seeds.iter().map(|&s| Strategy::Random(s)));
    let mut report = CheckReport::new("confluence", universe);
    for w in words {
        let seq = system.embed(w)?;
        let results: Vec<_> = strategies
            .iter()
            .map(|&s| (s, system.normal_form(&seq, s)))
            .collect();
        let ok = results.iter().all(|(_, r)| r.is_ok() && r == &results[0].1);
        report.record(ok, || {
            let verdicts: Vec<(String, String)> = results
                .iter()
                .map(|(s, r)| (format!("{s:?}"), format!("{r:?}")))
                .collect();
            Witness {
                inputs: vec![w.to_string()],
                verdicts: verdicts.into_iter().collect(),
            }
        });
    }
    Ok(report)
}

/// Over every strictly increasing column of rank `n`, admissibility by
/// counting agrees with the success of splitting.
pub fn run_splitting_check(n: u8) -> CheckReport {
    let max = 2 * usize::from(n);
    let mut report = CheckReport::new(
        "splitting",
        Universe {
            n,
            min_len: 1,
            max_len: max,
            sampled: None,
        },
    );
    for c in all_columns(n, max) {
        let by_counts = admissibility_counts(&c)
            .iter()
            .enumerate()
            .all(|(m, &k)| k <= m + 1);
        let by_split = c.split().is_ok();
        report.record(by_counts == by_split, || {
            witness(
                &[&c],
                &[
                    ("counts", by_counts.to_string()),
                    ("split", by_split.to_string()),
                ],
            )
        });
    }
    report
}

/// Every letter-level rule decreases the reverse deglex order, and every
/// column rule decreases `≺` with an irreducible right-hand side.
pub fn run_orientation_check(n: u8) -> Result<CheckReport, HarnessError> {
    let mut report = CheckReport::new(
        "orientation",
        Universe {
            n,
            min_len: 0,
            max_len: 0,
            sampled: None,
        },
    );
    for rule in sp_rules(n) {
        let ok = reverse_deglex_cmp(&rule.lhs, &rule.rhs).is_gt();
        report.record(ok, || witness(&[&rule], &[("decreases", "false".into())]));
    }
    let system = AcolSystem::new(n)?;
    for rule in system.rules() {
        let decreases = rule
            .lhs
            .len()
            .cmp(&rule.rhs.len())
            .then_with(|| rule.lhs.cmp(&rule.rhs))
            .is_gt();
        let normal = system.is_normal(&rule.rhs);
        report.record(decreases && normal, || {
            let shown = system.column_rules()
                [system.rules().iter().position(|r| r == rule).unwrap()]
            .clone();
            witness(
                &[&shown],
                &[
                    ("decreases", decreases.to_string()),
                    ("rhs normal", normal.to_string()),
                ],
            )
        });
    }
    Ok(report)
}

/// Both sides of every letter-level rule, and the letters of every column
/// against the column itself, have the same column normal form.
pub fn run_tietze_check(n: u8) -> Result<CheckReport, HarnessError> {
    let system = AcolSystem::new(n)?;
    let mut report = CheckReport::new(
        "tietze",
        Universe {
            n,
            min_len: 0,
            max_len: usize::from(n) + 1,
            sampled: None,
        },
    );
    let nf = |letters: &[Letter]| -> Result<Vec<usize>, HarnessError> {
        let w = Word::new(n, letters.to_vec()).expect("letters of rank n");
        Ok(system.normal_form(&system.embed(&w)?, Strategy::Leftmost)?)
    };
    for rule in sp_rules(n) {
        let (l, r) = (nf(&rule.lhs)?, nf(&rule.rhs)?);
        report.record(l == r, || {
            witness(
                &[&rule],
                &[("lhs", format!("{l:?}")), ("rhs", format!("{r:?}"))],
            )
        });
    }
    for (id, c) in system.generators().iter().enumerate() {
        let got = nf(c.letters())?;
        report.record(got == [id], || {
            witness(&[c], &[("normal form", format!("{got:?}"))])
        });
    }
    Ok(report)
}

/// Crystal operators on every word: `ẽ_i` and `f̃_i` are mutually inverse,
/// `ε_i`/`φ_i` count the available steps, and weights move by a root.
pub fn run_crystal_check(n: u8, max_len: usize) -> Result<CheckReport, HarnessError> {
    check_budget(n, 1, max_len, DEFAULT_BUDGET)?;
    let mut report = CheckReport::new(
        "crystal",
        Universe {
            n,
            min_len: 1,
            max_len,
            sampled: None,
        },
    );
    for w in Word::all_up_to(n, 1, max_len) {
        for i in 1..=n {
            let e = raise(&w, i).expect("index in range");
            let f = lower(&w, i).expect("index in range");
            let mut ok = true;
            if let Some(up) = &e {
                ok &= lower(up, i).expect("index in range").as_ref() == Some(&w);
                ok &= epsilon(up, i).unwrap() + 1 == epsilon(&w, i).unwrap();
                ok &= weight(up) != weight(&w);
            } else {
                ok &= epsilon(&w, i).unwrap() == 0;
            }
            if let Some(down) = &f {
                ok &= raise(down, i).expect("index in range").as_ref() == Some(&w);
                ok &= phi(down, i).unwrap() + 1 == phi(&w, i).unwrap();
            } else {
                ok &= phi(&w, i).unwrap() == 0;
            }
            let coords = weight(&w).fundamental_coordinates();
            ok &= phi(&w, i).unwrap() as i32 - epsilon(&w, i).unwrap() as i32
                == coords[usize::from(i) - 1];
            report.record(ok, || witness(&[&w], &[("index", i.to_string())]));
        }
    }
    Ok(report)
}

/// `P(w)` is a valid tableau, agrees with the tableau obtained by crystal
/// transport, and is fixed by reinserting its reading.
pub fn run_insertion_check(n: u8, max_len: usize) -> Result<CheckReport, HarnessError> {
    check_budget(n, 1, max_len, DEFAULT_BUDGET)?;
    let mut report = CheckReport::new(
        "insertion",
        Universe {
            n,
            min_len: 1,
            max_len,
            sampled: None,
        },
    );
    for w in Word::all_up_to(n, 1, max_len) {
        let p = tableau_of_word(&w);
        let by_crystal = tableau_by_crystal(&w);
        let ok = match (&p, &by_crystal) {
            (Ok(p), Ok(c)) => p == c && tableau_of_word(&p.reading()).as_ref() == Ok(p),
            _ => false,
        };
        report.record(ok, || {
            let show = |t: &Result<SymplecticTableau, String>| match t {
                Ok(t) => format!("{:?}", t.to_json().columns),
                Err(e) => e.clone(),
            };
            witness(
                &[&w],
                &[
                    ("insertion", show(&p.clone().map_err(|e| e.to_string()))),
                    (
                        "crystal transport",
                        show(&by_crystal.clone().map_err(|e| e.to_string())),
                    ),
                ],
            )
        });
    }
    Ok(report)
}

/// Bounds and seeds for [`run_all`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub n: u8,
    pub max_len: usize,
    pub seeds: Vec<u64>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            n: 2,
            max_len: 6,
            seeds: (1..=5).collect(),
        }
    }
}

/// Every suite at the configured bounds.
pub fn run_all(config: &CheckConfig) -> Result<Vec<CheckReport>, HarnessError> {
    let CheckConfig {
        n,
        max_len,
        ref seeds,
    } = *config;
    Ok(vec![
        run_splitting_check(n),
        run_crystal_check(n, max_len)?,
        run_insertion_check(n, max_len)?,
        run_orientation_check(n)?,
        run_tietze_check(n)?,
        run_lemma_checks(n)?,
        run_confluence_check(n, max_len, seeds)?,
        run_cross_section_check(n, max_len)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_section_smoke() {
        let report = run_cross_section_check(1, 4).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.cases, 2 + 4 + 8 + 16);
    }

    #[test]
    fn single_word_universe() {
        let w = Word::from_signed(2, &[1]);
        let report = cross_section_on(
            2,
            vec![w],
            Universe {
                n: 2,
                min_len: 1,
                max_len: 1,
                sampled: None,
            },
        )
        .unwrap();
        assert_eq!((report.cases, report.failures), (1, 0));
    }

    #[test]
    fn budget_is_refused() {
        let err = run_cross_section_check_with_budget(4, 12, 1000).unwrap_err();
        assert!(matches!(err, HarnessError::Budget { budget: 1000, .. }));
    }

    #[test]
    fn empty_word_has_empty_normal_form() {
        let report = run_confluence_check(2, 0, &[1]).unwrap();
        assert_eq!((report.cases, report.failures), (1, 0));
    }

    #[test]
    fn report_round_trips_through_json() {
        let mut report = run_lemma_checks(2).unwrap();
        report.witness = Some(witness(&[&"x"], &[("a", "b".into())]));
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<CheckReport>(&text).unwrap(), report);
    }

    #[test]
    fn failures_keep_the_first_witness() {
        let mut report = CheckReport::new(
            "t",
            Universe {
                n: 1,
                min_len: 0,
                max_len: 0,
                sampled: None,
            },
        );
        report.record(false, || witness(&[&"first"], &[]));
        report.record(false, || witness(&[&"second"], &[]));
        report.record(true, || unreachable!());
        assert_eq!((report.cases, report.passes, report.failures), (3, 1, 2));
        assert_eq!(report.witness.unwrap().inputs, vec!["first"]);
    }

    #[test]
    fn sampling_is_reproducible() {
        assert_eq!(sample_words(3, 5, 20, 9), sample_words(3, 5, 20, 9));
        assert!(sample_words(3, 5, 200, 9)
            .iter()
            .all(|w| (1..=5).contains(&w.len())));
    }

    #[test]
    fn small_suites_pass() {
        for report in run_all(&CheckConfig {
            n: 2,
            max_len: 3,
            seeds: vec![1],
        })
        .unwrap()
        {
            assert!(report.passed(), "{report}");
        }
    }
}
