//! One line per acceptance criterion. Exits with status 1 if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use symplectic_plactic::alphabet::{Letter, Word};
use symplectic_plactic::columns::{enumerate_admissible, split, Column};
use symplectic_plactic::crystal::{lower, raise};
use symplectic_plactic::harness::{
    run_confluence_check, run_cross_section_check, run_lemma_checks, run_orientation_check,
    run_sampled_confluence_check, run_splitting_check, run_tietze_check, CheckReport,
};
use symplectic_plactic::insertion::tableau_of_word;
use symplectic_plactic::insertion::{insert_into_column, insert_into_tableau, ColumnInsertion};
use symplectic_plactic::rewriting::{
    congruence_oracle, kb_complete, reverse_deglex_cmp, type_a_knuth_rules, AcolSystem,
};
use symplectic_plactic::tableaux::SymplecticTableau;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn word(n: u8, s: &[i32]) -> Word {
    Word::from_signed(n, s)
}

fn col(n: u8, s: &[i32]) -> Column {
    Column::from_signed(n, s)
}

fn letter(k: i32) -> Letter {
    Letter::from_signed(k).unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn reports(list: &[CheckReport]) -> Outcome {
    for r in list {
        ensure(r.passed(), r.to_string())?;
    }
    let cases: usize = list.iter().map(|r| r.cases).sum();
    Ok(format!("{cases} cases, 0 failures"))
}

fn within(start: Instant, limit: u64) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(
        spent <= Duration::from_secs(limit),
        format!("took {spent:?}, limit {limit}s"),
    )
}

fn crystal_example() -> Outcome {
    let w = word(3, &[-3, 3, 2, 3, 1, 3, -3]);
    let e = raise(&w, 2).map_err(|e| e.to_string())?;
    let f = lower(&w, 2).map_err(|e| e.to_string())?;
    ensure(
        e == Some(word(3, &[-3, 3, 2, 3, 1, 2, -3])),
        format!("e2 gave {e:?}"),
    )?;
    ensure(
        f == Some(word(3, &[-3, 3, 2, 3, 1, 3, -2])),
        format!("f2 gave {f:?}"),
    )?;
    Ok("e2 and f2 match".into())
}

fn splitting_examples() -> Outcome {
    let s = split(&col(8, &[2, 5, 6, 8, -8, -5, -2])).map_err(|e| e.to_string())?;
    ensure(
        s.right == col(8, &[2, 5, 6, 8, -7, -4, -1]),
        format!("rC = {}", s.right),
    )?;
    ensure(
        s.left == col(8, &[1, 4, 6, 7, -8, -5, -2]),
        format!("lC = {}", s.left),
    )?;
    let failure = split(&col(6, &[2, 3, 4, 6, -6, -3, -2]))
        .err()
        .ok_or("2346 6̄3̄2̄ split")?;
    ensure(
        failure.index == 3,
        format!("failed at index {}", failure.index),
    )?;
    Ok("lC, rC and the failing index match".into())
}

fn insertion_examples() -> Outcome {
    let err = |e: symplectic_plactic::insertion::InsertionError| e.to_string();
    let a = insert_into_column(&col(6, &[3, 6, -6, -4]), letter(-3)).map_err(err)?;
    ensure(
        a == ColumnInsertion::Extended(col(6, &[3, 6, -6, -4, -3])),
        format!("{a:?}"),
    )?;
    let b = insert_into_column(&col(4, &[1, 4, -4, -3]), letter(-2)).map_err(err)?;
    ensure(
        b == ColumnInsertion::Contracted(col(4, &[1, -3, -2])),
        format!("{b:?}"),
    )?;
    let c = insert_into_column(&col(4, &[1, 4, -4, -3]), letter(2)).map_err(err)?;
    ensure(
        c == ColumnInsertion::Bumped {
            column: col(4, &[1, 2, -4, -3]),
            bumped: letter(4),
        },
        format!("{c:?}"),
    )?;
    let t1 = SymplecticTableau::from_signed(3, &[&[1, 2, 3], &[2, -3, -2], &[3]]);
    let d = insert_into_tableau(&t1, letter(1)).map_err(err)?;
    let want = SymplecticTableau::from_signed(3, &[&[1, 2, 3], &[1, -3, -2], &[2], &[3]]);
    ensure(d == want, format!("got\n{d}"))?;
    ensure(
        d.rows()[0] == [1, 1, 2, 3].map(letter),
        "top row is not 1 1 2 3",
    )?;
    let t2 = SymplecticTableau::from_signed(3, &[&[1, 2, 3], &[1, 3, -3], &[2, 3], &[3]]);
    let e = insert_into_tableau(&t2, letter(-3)).map_err(err)?;
    let want = SymplecticTableau::from_signed(3, &[&[1, 2, -3], &[1, 3], &[2, 3], &[3]]);
    ensure(e == want, format!("got\n{e}"))?;
    Ok("five worked insertions match".into())
}

fn splitting_equivalence() -> Outcome {
    let start = Instant::now();
    let list: Vec<_> = (1..=4).map(run_splitting_check).collect();
    within(start, 10)?;
    reports(&list)
}

fn cross_section() -> Outcome {
    let start = Instant::now();
    let main = run_cross_section_check(2, 6).map_err(|e| e.to_string())?;
    ensure(main.cases == 5460, format!("{} words", main.cases))?;
    let smoke = run_cross_section_check(3, 4).map_err(|e| e.to_string())?;
    within(start, 60)?;
    reports(&[main, smoke])
}

fn convergence() -> Outcome {
    let start = Instant::now();
    let seeds: Vec<u64> = (1..=5).collect();
    let exhaustive = run_confluence_check(2, 6, &seeds).map_err(|e| e.to_string())?;
    let sampled =
        run_sampled_confluence_check(3, 5, 10_000, 2024, &seeds).map_err(|e| e.to_string())?;
    ensure(sampled.cases == 10_000, "sample size")?;
    within(start, 120)?;
    reports(&[exhaustive, sampled])
}

fn column_pair_structure() -> Outcome {
    let start = Instant::now();
    let list = (1..=3)
        .map(run_lemma_checks)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    within(start, 30)?;
    reports(&list)
}

fn orientation() -> Outcome {
    let list = (1..=3)
        .map(run_orientation_check)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    reports(&list)
}

fn completion_divergence() -> Outcome {
    let start = Instant::now();
    let report = kb_complete(type_a_knuth_rules(4), reverse_deglex_cmp, 200, 10_000)
        .map_err(|e| e.to_string())?;
    ensure(!report.closed, "completion closed")?;
    let seq = |s: &[u8]| -> Vec<Letter> { s.iter().map(|&k| Letter::unbarred(k)).collect() };
    for i in 1..=2 {
        let twos = vec![2u8; i];
        let lhs = seq(&[&[2, 3][..], &twos, &[1, 2, 4]].concat());
        let rhs = seq(&[&[2, 3, 4][..], &twos, &[1, 2]].concat());
        ensure(
            report.added.iter().any(|r| r.lhs == lhs && r.rhs == rhs),
            format!("no rule for i = {i}"),
        )?;
    }
    for rule in &report.added {
        let (l, r) = (
            Word::new(4, rule.lhs.clone()).unwrap(),
            Word::new(4, rule.rhs.clone()).unwrap(),
        );
        ensure(
            tableau_of_word(&l) == tableau_of_word(&r),
            format!("unsound rule {rule}"),
        )?;
        if l.len() <= 6 {
            let same = congruence_oracle(&l, &r, l.len(), 200_000).map_err(|e| e.to_string())?;
            ensure(same, format!("oracle rejects {rule}"))?;
        }
    }
    within(start, 60)?;
    Ok(format!(
        "open after {} rules and {} pairs; family present for i = 1, 2",
        report.rules_added, report.pairs_examined
    ))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn enumeration() -> Outcome {
    let frozen = [(2u8, 9usize), (3, 34), (4, 125)];
    for (n, want) in frozen {
        let got = enumerate_admissible(n).len();
        ensure(
            got == want,
            format!("n = {n}: {got} columns, expected {want}"),
        )?;
        let m = 2 * usize::from(n);
        let by_formula: usize = (1..=usize::from(n))
            .map(|k| binomial(m, k) - if k >= 2 { binomial(m, k - 2) } else { 0 })
            .sum();
        ensure(
            got == by_formula,
            format!("n = {n}: formula gives {by_formula}"),
        )?;
    }
    let rules = AcolSystem::new(2).map_err(|e| e.to_string())?.rules().len();
    ensure(rules == 41, format!("{rules} column rules at n = 2"))?;
    Ok("9, 34, 125 columns; 41 column rules at n = 2".into())
}

fn tietze() -> Outcome {
    let start = Instant::now();
    let list = (1..=2)
        .map(run_tietze_check)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    within(start, 30)?;
    reports(&list)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("crystal operators on the worked word", crystal_example),
        ("column splitting examples", splitting_examples),
        ("worked insertions", insertion_examples),
        (
            "admissibility by counts iff splitting succeeds, n <= 4",
            splitting_equivalence,
        ),
        (
            "three equivalences agree, n = 2 length <= 6 and n = 3 length <= 4",
            cross_section,
        ),
        (
            "strategy-independent normal forms with decreasing steps",
            convergence,
        ),
        (
            "column pairs give at most two columns with a shorter right column",
            column_pair_structure,
        ),
        (
            "rules are oriented and column right-hand sides irreducible",
            orientation,
        ),
        (
            "type A completion stays open and produces the 2 3 2^i 1 2 4 family",
            completion_divergence,
        ),
        ("admissible column counts", enumeration),
        (
            "letter rules and column generators agree in the column system",
            tietze,
        ),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let spent = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {:>2}: {name} ({detail}; {spent:.2}s)",
                k + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "FAIL criterion {:>2}: {name}\n  {}",
                    k + 1,
                    detail.replace('\n', "\n  ")
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
