use std::fmt::Display;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use symplectic_plactic::alphabet::{parse_word, Letter, Word};
use symplectic_plactic::columns::enumerate_admissible;
use symplectic_plactic::crystal::{component, crystal_label, epsilon, phi, weight};
use symplectic_plactic::harness::{run_all, CheckConfig};
use symplectic_plactic::insertion::{insert_into_tableau, tableau_of_word};
use symplectic_plactic::rewriting::{
    kb_complete, reverse_deglex_cmp, sp_rules, type_a_knuth_rules, AcolSystem, Strategy,
};
use symplectic_plactic::tableaux::{SymplecticTableau, TableauJson};

#[derive(Parser)]
#[command(
    name = "plactic-c",
    version,
    about = "Symplectic plactic monoid toolkit"
)]
struct Cli {
    /// Rank of the alphabet 1 < ... < n < -n < ... < -1
    #[arg(long, global = true, default_value_t = 2)]
    n: u8,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for random strategies and sampling
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 6)]
    max_len: usize,
    #[arg(long, global = true, default_value_t = 200)]
    max_rules: usize,
    #[arg(long, global = true, default_value_t = 10_000)]
    max_pairs: usize,
    /// leftmost, rightmost or random (seeded by --seed)
    #[arg(long, global = true, default_value = "leftmost")]
    strategy: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Tableau P(w) of a word
    #[command(allow_negative_numbers = true)]
    P { word: Vec<String> },
    /// Insert letters into a tableau given as JSON ("-" reads stdin)
    #[command(allow_negative_numbers = true)]
    Insert {
        #[arg(long)]
        tableau: String,
        letters: Vec<String>,
    },
    /// Normal form of a word in the column presentation
    #[command(allow_negative_numbers = true)]
    Nf { word: Vec<String> },
    /// Rule table of the column presentation
    Rules,
    /// Admissible columns with their splittings
    Columns,
    /// Crystal data of a word, or its whole component with --format dot
    #[command(allow_negative_numbers = true)]
    Crystal {
        word: Vec<String>,
        /// Largest component to explore
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
    },
    /// Run every verification suite
    Check,
    /// Bounded Knuth-Bendix completion of the letter presentation
    Complete {
        /// Complete the Knuth relations on 1..4 instead
        #[arg(long)]
        type_a: bool,
    },
}

#[derive(Serialize)]
struct NormalFormJson {
    n: u8,
    normal_form: Vec<Vec<i32>>,
    tableau: TableauJson,
}

enum Failure {
    Usage(String),
    Check,
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn word_arg(parts: &[String], n: u8) -> Result<Word, Failure> {
    Ok(parse_word(&parts.join(" "), n)?)
}

fn strategy(cli: &Cli) -> Result<Strategy, Failure> {
    match cli.strategy.as_str() {
        "random" => Ok(Strategy::Random(cli.seed)),
        other => Ok(other.parse::<Strategy>()?),
    }
}

fn no_dot(cli: &Cli) -> Result<(), Failure> {
    if cli.format == Format::Dot {
        return Err(Failure::Usage(
            "--format dot is only available for `crystal`".into(),
        ));
    }
    Ok(())
}

fn print_json(value: &impl Serialize) -> Result<(), Failure> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn print_tableau(cli: &Cli, t: &SymplecticTableau) -> Result<(), Failure> {
    match cli.format {
        Format::Json => print_json(&t.to_json()),
        _ => {
            println!("{t}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let n = cli.n;
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    match &cli.command {
        Command::P { word } => {
            no_dot(cli)?;
            print_tableau(cli, &tableau_of_word(&word_arg(word, n)?)?)
        }
        Command::Insert { tableau, letters } => {
            no_dot(cli)?;
            let text = if tableau == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                tableau.clone()
            };
            let mut t = SymplecticTableau::parse_json(&text)?;
            if t.n() != n {
                return Err(Failure::Usage(format!(
                    "tableau has n = {}, but --n is {n}",
                    t.n()
                )));
            }
            for x in word_arg(letters, n)?.iter() {
                t = insert_into_tableau(&t, *x)?;
            }
            print_tableau(cli, &t)
        }
        Command::Nf { word } => {
            no_dot(cli)?;
            let w = word_arg(word, n)?;
            let system = AcolSystem::new(n)?;
            let nf = system.normal_form(&system.embed(&w)?, strategy(cli)?)?;
            let columns = system.columns_of(&nf)?;
            let tableau = system.tableau_of(&nf)?;
            match cli.format {
                Format::Json => print_json(&NormalFormJson {
                    n,
                    normal_form: columns.iter().map(|c| c.to_signed()).collect(),
                    tableau: tableau.to_json(),
                }),
                _ => {
                    let shown: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
                    println!(
                        "{}",
                        if shown.is_empty() {
                            "(empty)".to_string()
                        } else {
                            shown.join(" ")
                        }
                    );
                    Ok(())
                }
            }
        }
        Command::Rules => {
            no_dot(cli)?;
            let system = AcolSystem::new(n)?;
            match cli.format {
                Format::Json => print_json(&system.to_json()),
                _ => {
                    for rule in system.column_rules() {
                        let rhs = if rule.rhs.is_empty() {
                            "(empty)".to_string()
                        } else {
                            String::new()
                        };
                        println!("{rule}{rhs}");
                    }
                    Ok(())
                }
            }
        }
        Command::Columns => {
            no_dot(cli)?;
            let columns = enumerate_admissible(n);
            let rows: Vec<_> = columns
                .iter()
                .map(|c| {
                    let s = c.split().expect("admissible columns split");
                    (c, s.left, s.right)
                })
                .collect();
            match cli.format {
                Format::Json => print_json(
                    &rows
                        .iter()
                        .map(|(c, l, r)| json!({"column": c.to_signed(), "left": l.to_signed(), "right": r.to_signed()}))
                        .collect::<Vec<_>>(),
                ),
                _ => {
                    for (c, l, r) in rows {
                        println!("{c}  left {l}  right {r}");
                    }
                    println!("{} admissible columns", columns.len());
                    Ok(())
                }
            }
        }
        Command::Crystal { word, limit } => {
            let w = word_arg(word, n)?;
            if cli.format == Format::Dot {
                print!("{}", component(&w, *limit)?.to_dot());
                return Ok(());
            }
            let label = crystal_label(&w);
            let mut strings = Vec::new();
            for i in 1..=n {
                strings.push((i, epsilon(&w, i)?, phi(&w, i)?));
            }
            match cli.format {
                Format::Json => print_json(&json!({
                    "word": w.to_signed(),
                    "weight": weight(&w).0,
                    "strings": strings.iter().map(|&(i, e, p)| json!({"i": i, "epsilon": e, "phi": p})).collect::<Vec<_>>(),
                    "label": label,
                })),
                _ => {
                    println!("weight {:?}", weight(&w).0);
                    for (i, e, p) in strings {
                        println!("i={i} epsilon={e} phi={p}");
                    }
                    println!(
                        "raising path {:?} to highest weight {:?}",
                        label.path, label.highest_weight.0
                    );
                    Ok(())
                }
            }
        }
        Command::Check => {
            no_dot(cli)?;
            let config = CheckConfig {
                n,
                max_len: cli.max_len,
                seeds: (cli.seed..cli.seed + 5).collect(),
            };
            let reports = run_all(&config)?;
            match cli.format {
                Format::Json => print_json(&reports)?,
                _ => reports.iter().for_each(|r| println!("{r}")),
            }
            if reports.iter().all(|r| r.passed()) {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Complete { type_a } => {
            no_dot(cli)?;
            let rules = if *type_a {
                type_a_knuth_rules(4)
            } else {
                sp_rules(n)
            };
            let report = kb_complete(rules, reverse_deglex_cmp, cli.max_rules, cli.max_pairs)?;
            let show = |s: &[Letter]| s.iter().map(|l| l.to_signed()).collect::<Vec<_>>();
            match cli.format {
                Format::Json => print_json(&json!({
                    "closed": report.closed,
                    "rules_added": report.rules_added,
                    "pairs_examined": report.pairs_examined,
                    "added": report.added.iter().map(|r| json!({"lhs": show(&r.lhs), "rhs": show(&r.rhs)})).collect::<Vec<_>>(),
                    "unorientable": report.unorientable.iter().map(|(a, b)| json!([show(a), show(b)])).collect::<Vec<_>>(),
                })),
                _ => {
                    print!("{report}");
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
