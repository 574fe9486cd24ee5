use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ltl_reduce::harness::{run_corpus, run_fuzz, FuzzConfig, Report};
use ltl_reduce::semantics::{
    equivalent_bounded, eval, left_append_closed_bounded, Alphabet, Bounds, LassoWord,
    DEFAULT_MAX_APPEND,
};
use ltl_reduce::{is_pure_eventuality, parse, reduce, ClassifierVariant, Formula};

const EXIT_USAGE: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 1;

#[derive(Parser)]
#[command(name = "ltl-reduce", version, about = "Pure-eventuality classification and LTL reduction with a bounded lasso-word oracle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Buggy,
    Corrected,
    Patched,
}

impl From<VariantArg> for ClassifierVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Buggy => ClassifierVariant::Buggy,
            VariantArg::Corrected => ClassifierVariant::Corrected,
            VariantArg::Patched => ClassifierVariant::Patched,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetArg {
    Powerset,
    Singletons,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, default_value_t = 3)]
    max_prefix: usize,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    max_period: u64,
    /// Proposition set to enumerate over (comma separated); defaults to the
    /// propositions of the formulas, at most three.
    #[arg(long, value_delimiter = ',')]
    props: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "powerset")]
    letters: AlphabetArg,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            max_prefix: self.max_prefix,
            max_period: self.max_period as usize,
            props: self.props.clone(),
            alphabet: match self.letters {
                AlphabetArg::Powerset => Alphabet::Powerset,
                AlphabetArg::Singletons => Alphabet::Singletons,
            },
            ..Bounds::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide pure-eventuality membership of an NNF formula.
    Classify {
        #[arg(long, value_enum)]
        variant: VariantArg,
        formula: String,
    },
    /// Apply the basic operator reduction to a fixpoint.
    Reduce {
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Also print every rewrite step.
        #[arg(long)]
        trace: bool,
        formula: String,
    },
    /// Evaluate a formula on a lasso word, e.g. --word "a | c".
    Eval {
        formula: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 0)]
        position: usize,
    },
    /// Search for a word on which two formulas disagree.
    CheckEquiv {
        f: String,
        g: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Search for a violation of left-append closure.
    CheckLac {
        formula: String,
        #[arg(long, default_value_t = DEFAULT_MAX_APPEND as u64, value_parser = clap::value_parser!(u64).range(1..))]
        max_append: u64,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Differentially check the reducers on random formulas.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max_depth: u64,
        #[arg(long)]
        json: bool,
    },
    /// Differentially check the reducers on a corpus file.
    Corpus {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn formula(text: &str) -> Result<Formula, String> {
    parse(text).map_err(|e| format!("{text:?}: {e}"))
}

fn print_report(report: &Report, json: bool) -> ExitCode {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.exit_code() as u8)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Classify { variant, formula: text } => {
            let f = formula(&text)?;
            let pe = is_pure_eventuality(&f, variant.into()).map_err(|e| e.to_string())?;
            println!("pure-eventuality: {pe}");
        }
        Command::Reduce {
            variant,
            trace,
            formula: text,
        } => {
            let f = formula(&text)?;
            let (reduced, tr) = reduce(&f, variant.into());
            println!("{reduced}");
            if trace {
                for step in &tr.steps {
                    println!("{step}");
                }
            }
        }
        Command::Eval {
            formula: text,
            word,
            position,
        } => {
            let f = formula(&text)?;
            let w: LassoWord = word.parse().map_err(|e| format!("{word:?}: {e}"))?;
            println!("{}", eval(&f, &w, position));
        }
        Command::CheckEquiv { f, g, bounds } => {
            let (f, g) = (formula(&f)?, formula(&g)?);
            let verdict = equivalent_bounded(&f, &g, &bounds.bounds());
            println!("{verdict}");
            if !verdict.is_pass() {
                return Ok(ExitCode::from(EXIT_COUNTEREXAMPLE));
            }
        }
        Command::CheckLac {
            formula: text,
            max_append,
            bounds,
        } => {
            let f = formula(&text)?;
            let verdict = left_append_closed_bounded(&f, &bounds.bounds(), max_append as usize);
            println!("{verdict}");
            if !verdict.is_pass() {
                return Ok(ExitCode::from(EXIT_COUNTEREXAMPLE));
            }
        }
        Command::Fuzz {
            seed,
            count,
            max_depth,
            json,
        } => {
            let config = FuzzConfig {
                seed,
                count: count as usize,
                max_depth: max_depth as usize,
                ..FuzzConfig::default()
            };
            let report = run_fuzz(&config).map_err(|e| e.to_string())?;
            return Ok(print_report(&report, json));
        }
        Command::Corpus { file, json } => {
            let report = run_corpus(&file, &Bounds::default()).map_err(|e| e.to_string())?;
            return Ok(print_report(&report, json));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
