//! Pure-eventuality classification and basic operator reduction for LTL.
//!
//! Three classifier variants are provided. [`ClassifierVariant::Buggy`]
//! admits `ψ U γ` for any `γ`, which makes the reduction `φ U ψ → ψ` unsound;
//! [`ClassifierVariant::Corrected`] and [`ClassifierVariant::Patched`] do not.
//! The [`semantics`] module evaluates formulas over lasso words and searches
//! bounded word spaces for counterexamples, and [`harness`] fuzzes the three
//! reducers against it.

pub mod classify;
pub mod harness;
pub mod reduce;
pub mod semantics;
pub mod syntax;

pub use classify::{is_pure_eventuality, ClassifierVariant, NotNnf};
pub use reduce::{reduce, replay, ReductionTrace, ReplayError, Rule, Step};
pub use semantics::{
    equivalent_bounded, eval, eval_reference, implies_bounded, left_append_closed_bounded,
    Bounds, LassoWord, Verdict,
};
pub use syntax::{nnf, parse, print, Formula, ParseError};
