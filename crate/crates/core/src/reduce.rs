//! Basic operator reduction: `φ U ψ → ψ` and `F ψ → ψ` whenever `ψ` is a
//! pure eventuality under the chosen classifier.
//!
//! The input is first put into negation normal form. Rewriting then proceeds
//! leftmost-innermost until no redex is left. Every step removes at least one
//! node, so the loop terminates after fewer than `size` steps.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{classify_nnf, ClassifierVariant};
use crate::syntax::{nnf, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// `φ U ψ → ψ`
    UntilRule,
    /// `F ψ → ψ`
    FinallyRule,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::UntilRule => "UntilRule",
            Rule::FinallyRule => "FinallyRule",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    /// Child indices from the root to the rewritten node.
    pub path: Vec<usize>,
    pub before: Formula,
    pub after: Formula,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.rule)?;
        for (i, idx) in self.path.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, "] {} => {}", self.before, self.after)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub variant: ClassifierVariant,
    /// Formula as given by the caller, possibly outside NNF.
    pub original: Formula,
    /// NNF of `original`; the steps start from here.
    pub initial: Formula,
    pub steps: Vec<Step>,
    pub result: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {step}: path {path:?} does not address a subformula")]
    BadPath { step: usize, path: Vec<usize> },
    #[error("step {step}: expected `{expected}` at {path:?}, found `{found}`")]
    BeforeMismatch {
        step: usize,
        path: Vec<usize>,
        expected: Formula,
        found: Formula,
    },
    #[error("step {step}: `{before}` => `{after}` is not an instance of {rule}")]
    NotARewrite {
        step: usize,
        rule: Rule,
        before: Formula,
        after: Formula,
    },
    #[error("replay ends in `{replayed}` but the trace records `{recorded}`")]
    ResultMismatch { replayed: Formula, recorded: Formula },
}

/// Returns the reduct of a redex, if `f` is one under `variant`.
fn rewrite(f: &Formula, variant: ClassifierVariant) -> Option<(Rule, Formula)> {
    match f {
        Formula::Until(_, rhs) if classify_nnf(rhs, variant) => {
            Some((Rule::UntilRule, (**rhs).clone()))
        }
        Formula::Finally(inner) if classify_nnf(inner, variant) => {
            Some((Rule::FinallyRule, (**inner).clone()))
        }
        _ => None,
    }
}

/// Path to the leftmost-innermost redex: children are searched left to right
/// before their parent is considered.
fn find_redex(f: &Formula, variant: ClassifierVariant, path: &mut Vec<usize>) -> bool {
    for (i, c) in f.children().into_iter().enumerate() {
        path.push(i);
        if find_redex(c, variant, path) {
            return true;
        }
        path.pop();
    }
    rewrite(f, variant).is_some()
}

/// Reduces `f` to a fixpoint under `variant`, recording each rewrite.
pub fn reduce(f: &Formula, variant: ClassifierVariant) -> (Formula, ReductionTrace) {
    let initial = nnf(f);
    let mut current = initial.clone();
    let mut steps = Vec::new();
    loop {
        let mut path = Vec::new();
        if !find_redex(&current, variant, &mut path) {
            break;
        }
        let node = current.at_path_mut(&path).expect("redex path");
        let (rule, after) = rewrite(node, variant).expect("redex");
        let before = std::mem::replace(node, after.clone());
        steps.push(Step {
            rule,
            path,
            before,
            after,
        });
    }
    let trace = ReductionTrace {
        variant,
        original: f.clone(),
        initial,
        steps,
        result: current.clone(),
    };
    (current, trace)
}

/// Re-applies the recorded steps to the trace's initial formula.
pub fn replay(trace: &ReductionTrace) -> Result<Formula, ReplayError> {
    let mut current = trace.initial.clone();
    for (i, step) in trace.steps.iter().enumerate() {
        let node = current
            .at_path_mut(&step.path)
            .ok_or_else(|| ReplayError::BadPath {
                step: i,
                path: step.path.clone(),
            })?;
        if *node != step.before {
            return Err(ReplayError::BeforeMismatch {
                step: i,
                path: step.path.clone(),
                expected: step.before.clone(),
                found: node.clone(),
            });
        }
        let shape_ok = match (&step.rule, &step.before) {
            (Rule::UntilRule, Formula::Until(_, rhs)) => **rhs == step.after,
            (Rule::FinallyRule, Formula::Finally(inner)) => **inner == step.after,
            _ => false,
        };
        if !shape_ok {
            return Err(ReplayError::NotARewrite {
                step: i,
                rule: step.rule,
                before: step.before.clone(),
                after: step.after.clone(),
            });
        }
        *node = step.after.clone();
    }
    if current != trace.result {
        return Err(ReplayError::ResultMismatch {
            replayed: current,
            recorded: trace.result.clone(),
        });
    }
    Ok(current)
}
