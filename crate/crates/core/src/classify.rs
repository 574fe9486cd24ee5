//! Syntactic pure-eventuality classes.
//!
//! All three variants share the base clause (`F φ` is a pure eventuality for
//! any `φ`) and the closure rules for `∨`, `∧`, `G`, `R` and `X`. They differ
//! only in how `U` is admitted:
//!
//! | variant     | `U` clause                                 |
//! |-------------|--------------------------------------------|
//! | `Buggy`     | `ψ U γ`, `ψ` pure eventuality, `γ` arbitrary |
//! | `Corrected` | `ψ₁ U ψ₂`, both pure eventualities          |
//! | `Patched`   | `γ U ψ`, `γ` arbitrary, `ψ` pure eventuality |
//!
//! The `Buggy` class is not left-append closed: `(F b) U c` is in it, holds on
//! `c^ω`, and fails on `a.c^ω`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::Formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassifierVariant {
    Buggy,
    Corrected,
    Patched,
}

impl ClassifierVariant {
    pub const ALL: [ClassifierVariant; 3] = [
        ClassifierVariant::Buggy,
        ClassifierVariant::Corrected,
        ClassifierVariant::Patched,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassifierVariant::Buggy => "buggy",
            ClassifierVariant::Corrected => "corrected",
            ClassifierVariant::Patched => "patched",
        }
    }
}

impl fmt::Display for ClassifierVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown classifier variant `{0}` (expected buggy, corrected or patched)")]
pub struct UnknownVariant(pub String);

impl FromStr for ClassifierVariant {
    type Err = UnknownVariant;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "buggy" => Ok(ClassifierVariant::Buggy),
            "corrected" => Ok(ClassifierVariant::Corrected),
            "patched" => Ok(ClassifierVariant::Patched),
            _ => Err(UnknownVariant(s.to_string())),
        }
    }
}

/// Classification was asked for a formula outside negation normal form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("formula is not in negation normal form: `{node}` at path {path:?} negates a non-atom")]
pub struct NotNnf {
    pub path: Vec<usize>,
    pub node: Formula,
}

/// Decides membership of an NNF formula in the pure-eventuality class of the
/// given variant.
pub fn is_pure_eventuality(f: &Formula, variant: ClassifierVariant) -> Result<bool, NotNnf> {
    if let Some(path) = f.first_non_nnf() {
        let node = f.at_path(&path).cloned().expect("path from first_non_nnf");
        return Err(NotNnf { path, node });
    }
    Ok(classify_nnf(f, variant))
}

/// Same as [`is_pure_eventuality`] without the NNF check. Non-NNF input gets
/// an answer, but not a meaningful one.
pub(crate) fn classify_nnf(f: &Formula, variant: ClassifierVariant) -> bool {
    let pe = |g: &Formula| classify_nnf(g, variant);
    match f {
        Formula::Finally(_) => true,
        Formula::True | Formula::False | Formula::Atom(_) | Formula::Not(_) => false,
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Release(l, r) => pe(l) && pe(r),
        Formula::Globally(g) | Formula::Next(g) => pe(g),
        Formula::Until(l, r) => match variant {
            ClassifierVariant::Buggy => pe(l),
            ClassifierVariant::Corrected => pe(l) && pe(r),
            ClassifierVariant::Patched => pe(r),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::ClassifierVariant::*;
    use super::*;
    use crate::syntax::parse;

    fn pe(s: &str, v: ClassifierVariant) -> bool {
        is_pure_eventuality(&parse(s).unwrap(), v).unwrap()
    }

    #[test]
    fn finally_is_always_pure() {
        for v in ClassifierVariant::ALL {
            assert!(pe("F b", v));
            assert!(pe("F (a U !b)", v));
            assert!(pe("F false", v));
        }
    }

    #[test]
    fn leaves_are_never_pure() {
        for v in ClassifierVariant::ALL {
            for s in ["a", "!a", "true", "false"] {
                assert!(!pe(s, v), "{s} under {v}");
            }
        }
    }

    #[test]
    fn until_clause_per_variant() {
        assert!(pe("(F b) U c", Buggy));
        assert!(!pe("(F b) U c", Corrected));
        assert!(!pe("(F b) U c", Patched));

        assert!(!pe("a U F b", Buggy));
        assert!(!pe("a U F b", Corrected));
        assert!(pe("a U F b", Patched));

        for v in ClassifierVariant::ALL {
            assert!(pe("(F a) U F b", v));
        }
    }

    #[test]
    fn shared_clauses() {
        for v in ClassifierVariant::ALL {
            assert!(pe("F a & F b", v));
            assert!(pe("F a | X F b", v));
            assert!(pe("G F a", v));
            assert!(pe("(F a) R (F b)", v));
            assert!(!pe("a R F b", v));
            assert!(!pe("F a & b", v));
            assert!(!pe("X a", v));
        }
    }

    #[test]
    fn rejects_non_nnf() {
        let f = parse("F a & !(b U c)").unwrap();
        let err = is_pure_eventuality(&f, Corrected).unwrap_err();
        assert_eq!(err.path, vec![1]);
        assert_eq!(err.node, parse("!(b U c)").unwrap());
        assert!(err.to_string().contains("!(b U c)"));
    }

    #[test]
    fn variant_names_roundtrip() {
        for v in ClassifierVariant::ALL {
            assert_eq!(v.name().parse::<ClassifierVariant>().unwrap(), v);
        }
        assert!("fixed".parse::<ClassifierVariant>().is_err());
    }
}
