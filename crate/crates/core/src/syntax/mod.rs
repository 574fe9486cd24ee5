//! LTL formulas over named atomic propositions.
//!
//! `F` and `G` are kept as their own node kinds rather than being desugared
//! into `true U φ` / `false R φ`: pure-eventuality classification matches on
//! the syntactic shape `F φ`.

mod nnf;
mod parser;
mod printer;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use nnf::nnf;
pub use parser::{parse, ParseError};

/// Abstract syntax tree of an LTL formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    True,
    False,
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Next(Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
    Release(Box<Formula>, Box<Formula>),
    Finally(Box<Formula>),
    Globally(Box<Formula>),
}

/// Returns true if `name` is a legal proposition identifier: `[a-z][a-z0-9_]*`
/// and not one of the constant keywords.
pub fn is_valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && !parser::is_keyword(name)
}

impl Formula {
    /// Builds an atom.
    ///
    /// Panics if `name` is not a valid proposition identifier; use [`parse`]
    /// for untrusted input.
    pub fn atom(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(is_valid_atom_name(&name), "invalid proposition name {name:?}");
        Formula::Atom(name)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Self) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Self) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn next(self) -> Self {
        Formula::Next(Box::new(self))
    }

    pub fn until(self, other: Self) -> Self {
        Formula::Until(Box::new(self), Box::new(other))
    }

    pub fn release(self, other: Self) -> Self {
        Formula::Release(Box::new(self), Box::new(other))
    }

    pub fn finally(self) -> Self {
        Formula::Finally(Box::new(self))
    }

    pub fn globally(self) -> Self {
        Formula::Globally(Box::new(self))
    }

    /// Direct subformulas, left to right. Path indices used by the reducer
    /// refer to positions in this slice.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => vec![],
            Formula::Not(f) | Formula::Next(f) | Formula::Finally(f) | Formula::Globally(f) => {
                vec![f]
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Until(l, r) | Formula::Release(l, r) => {
                vec![l, r]
            }
        }
    }

    pub fn child(&self, index: usize) -> Option<&Formula> {
        self.children().get(index).copied()
    }

    pub(crate) fn child_mut(&mut self, index: usize) -> Option<&mut Formula> {
        match (self, index) {
            (
                Formula::Not(f) | Formula::Next(f) | Formula::Finally(f) | Formula::Globally(f),
                0,
            ) => Some(f),
            (
                Formula::And(l, _) | Formula::Or(l, _) | Formula::Until(l, _) | Formula::Release(l, _),
                0,
            ) => Some(l),
            (
                Formula::And(_, r) | Formula::Or(_, r) | Formula::Until(_, r) | Formula::Release(_, r),
                1,
            ) => Some(r),
            _ => None,
        }
    }

    /// Follows a sequence of child indices from this node.
    pub fn at_path(&self, path: &[usize]) -> Option<&Formula> {
        path.iter().try_fold(self, |node, &i| node.child(i))
    }

    pub(crate) fn at_path_mut(&mut self, path: &[usize]) -> Option<&mut Formula> {
        let mut node = self;
        for &i in path {
            node = node.child_mut(i)?;
        }
        Some(node)
    }

    /// Total number of AST nodes.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    /// Number of nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(Formula::depth)
            .max()
            .unwrap_or(0)
    }

    /// True iff every `Not` node sits directly on an atom.
    pub fn is_nnf(&self) -> bool {
        self.first_non_nnf().is_none()
    }

    /// Path to the first (pre-order) `Not` node whose child is not an atom.
    pub fn first_non_nnf(&self) -> Option<Vec<usize>> {
        fn go(f: &Formula, path: &mut Vec<usize>) -> bool {
            if let Formula::Not(inner) = f {
                if !matches!(**inner, Formula::Atom(_)) {
                    return true;
                }
            }
            for (i, c) in f.children().into_iter().enumerate() {
                path.push(i);
                if go(c, path) {
                    return true;
                }
                path.pop();
            }
            false
        }
        let mut path = Vec::new();
        go(self, &mut path).then_some(path)
    }

    /// Propositions occurring in the formula.
    pub fn props(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props(&self, out: &mut BTreeSet<String>) {
        if let Formula::Atom(p) = self {
            out.insert(p.clone());
        }
        for c in self.children() {
            c.collect_props(out);
        }
    }

    /// Iterates over every subformula in pre-order, with its path.
    pub fn subformulas(&self) -> Vec<(Vec<usize>, &Formula)> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), self)];
        while let Some((path, f)) = stack.pop() {
            for (i, c) in f.children().into_iter().enumerate().rev() {
                let mut p = path.clone();
                p.push(i);
                stack.push((p, c));
            }
            out.push((path, f));
        }
        out
    }

    /// True for atoms, constants, and negations of those.
    pub(crate) fn is_literal(&self) -> bool {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => true,
            Formula::Not(inner) => inner.is_literal(),
            _ => false,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        printer::write_formula(f, self)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Canonical concrete syntax of a formula.
pub fn print(f: &Formula) -> String {
    f.to_string()
}
