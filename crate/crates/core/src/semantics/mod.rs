//! LTL semantics over ultimately periodic words, and the bounded checks
//! built on it.

mod check;
mod enumerate;
mod eval;
mod reference;
mod word;

pub use check::{
    equivalent_bounded, implies_bounded, left_append_closed_bounded, Bounds, Counterexample,
    Discrepancy, SearchSpace, Verdict, DEFAULT_MAX_APPEND,
};
pub use enumerate::{enumerate_lassos, lasso_count, Alphabet, LassoIter};
pub use eval::eval;
pub use reference::eval_reference;
pub use word::{format_letters, letter, parse_letters, LassoWord, Letter, WordError};
