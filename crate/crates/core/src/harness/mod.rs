//! Differential checking of the three reducers against the bounded oracle.

mod corpus;
mod fuzz;
mod gen;

pub use corpus::{parse_corpus, run_corpus, CorpusError};
pub use fuzz::{
    analyze, fuzz_differential, fuzz_formulas, run_fuzz, CaseReport, ClassFlags, DivergenceRecord,
    FinalEffect, PerVariant, Report, RunConfig, Summary, EXIT_BUGGY_DIVERGENCE, EXIT_CLEAN,
    EXIT_FIXED_DIVERGENCE,
};
pub use gen::{gen_formula, ConfigError, FuzzConfig, OperatorWeights};
