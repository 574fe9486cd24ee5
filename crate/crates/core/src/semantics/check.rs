//! Exhaustive bounded refutation over lasso words.
//!
//! A pass only means no counterexample exists among the enumerated words; it
//! is never a proof of equivalence or closure.
//!
//! The search walks each period once (building its loop table) and extends
//! prefixes backwards one letter at a time, so every word costs a single
//! column step. The reported counterexample is the first one in
//! [`super::enumerate_lassos`] order regardless of visiting order.

use std::collections::BTreeSet;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::syntax::Formula;

use super::enumerate::{mask_to_letter, Alphabet};
use super::eval::{eval, Program};
use super::word::{LassoWord, Letter};

pub const DEFAULT_MAX_APPEND: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_prefix: usize,
    pub max_period: usize,
    /// Cap on the propositions taken from the formulas under test.
    pub max_props: usize,
    /// Explicit proposition set; overrides the one read off the formulas.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub props: Option<Vec<String>>,
    #[serde(default)]
    pub alphabet: Alphabet,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_prefix: 3,
            max_period: 3,
            max_props: 3,
            props: None,
            alphabet: Alphabet::Powerset,
        }
    }
}

impl Bounds {
    pub fn with_props<S: AsRef<str>>(mut self, props: &[S]) -> Self {
        self.props = Some(props.iter().map(|p| p.as_ref().to_string()).collect());
        self
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    /// Propositions the search ranges over for the given formulas.
    pub fn props_for(&self, formulas: &[&Formula]) -> Vec<String> {
        match &self.props {
            Some(ps) => ps.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect(),
            None => formulas
                .iter()
                .flat_map(|f| f.props())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .take(self.max_props)
                .collect(),
        }
    }
}

/// The word space a check actually covered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpace {
    pub props: Vec<String>,
    pub alphabet: Alphabet,
    pub max_prefix: usize,
    pub max_period: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_append: Option<usize>,
    pub words: u64,
}

impl fmt::Display for SearchSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "props {{{}}} ({:?}), prefix <= {}, period <= {}",
            self.props.join(","),
            self.alphabet,
            self.max_prefix,
            self.max_period
        )?;
        if let Some(n) = self.max_append {
            write!(f, ", append <= {n}")?;
        }
        write!(f, ", {} words", self.words)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Discrepancy {
    /// The first formula holds and the second does not.
    LeftOnly,
    /// The second formula holds and the first does not.
    RightOnly,
    /// The formula holds on the word but not once `appended` is put in front.
    AppendBreaksMembership,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Discrepancy::LeftOnly => "left-only",
            Discrepancy::RightOnly => "right-only",
            Discrepancy::AppendBreaksMembership => "append-breaks-membership",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub word: LassoWord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub appended: Option<Vec<Letter>>,
    pub kind: Discrepancy,
}

impl Counterexample {
    /// Re-evaluates the witness for an equivalence or implication check.
    pub fn confirms_difference(&self, f: &Formula, g: &Formula) -> bool {
        let (vf, vg) = (eval(f, &self.word, 0), eval(g, &self.word, 0));
        match self.kind {
            Discrepancy::LeftOnly => vf && !vg,
            Discrepancy::RightOnly => !vf && vg,
            Discrepancy::AppendBreaksMembership => false,
        }
    }

    /// Re-evaluates the witness for a left-append closure check.
    pub fn confirms_append_violation(&self, f: &Formula) -> bool {
        match (&self.appended, self.kind) {
            (Some(v), Discrepancy::AppendBreaksMembership) if !v.is_empty() => {
                eval(f, &self.word, 0) && !eval(f, &self.word.prepend(v), 0)
            }
            _ => false,
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on `{}`", self.kind, self.word)?;
        if let Some(v) = &self.appended {
            write!(f, " with `{}` prepended", super::word::format_letters(v))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    PassUpToBound(SearchSpace),
    Counterexample(Counterexample),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::PassUpToBound(_))
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Counterexample(c) => Some(c),
            Verdict::PassUpToBound(_) => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::PassUpToBound(space) => write!(f, "pass up to bound ({space})"),
            Verdict::Counterexample(c) => write!(f, "counterexample: {c}"),
        }
    }
}

/// Position of a word in enumeration order: prefix length, period length,
/// then the letter indices of `prefix ++ period`.
type WordKey = (usize, usize, Vec<usize>);

/// Records the word if it precedes the current best; returns whether it did.
fn keep_min(best: &mut Option<WordKey>, prefix: &[usize], period: &[usize]) -> bool {
    let beats = match best {
        None => true,
        Some((m, p, digits)) => {
            (prefix.len(), period.len()).cmp(&(*m, *p)).then_with(|| {
                prefix.iter().chain(period).cmp(digits.iter())
            }) == std::cmp::Ordering::Less
        }
    };
    if beats {
        let digits = prefix.iter().chain(period).copied().collect();
        *best = Some((prefix.len(), period.len(), digits));
    }
    beats
}

struct Scan<'a> {
    program: &'a Program,
    props: Vec<String>,
    alphabet: Alphabet,
    letters: Vec<u32>,
    max_prefix: usize,
    max_period: usize,
}

impl<'a> Scan<'a> {
    fn new(program: &'a Program, props: Vec<String>, bounds: &Bounds) -> Self {
        assert!(bounds.max_period >= 1, "max_period must be at least 1");
        let letters = bounds.alphabet.masks(props.len());
        Scan {
            program,
            props,
            alphabet: bounds.alphabet,
            letters,
            max_prefix: bounds.max_prefix,
            max_period: bounds.max_period,
        }
    }

    fn space(&self, words: u64, max_append: Option<usize>) -> SearchSpace {
        SearchSpace {
            props: self.props.clone(),
            alphabet: self.alphabet,
            max_prefix: self.max_prefix,
            max_period: self.max_period,
            max_append,
            words,
        }
    }

    fn letter(&self, idx: usize) -> Letter {
        mask_to_letter(self.letters[idx], &self.props)
    }

    fn word(&self, key: &WordKey) -> LassoWord {
        let (m, _, digits) = key;
        let letters: Vec<Letter> = digits.iter().map(|&d| self.letter(d)).collect();
        let (prefix, period) = letters.split_at(*m);
        LassoWord::new(prefix.to_vec(), period.to_vec()).expect("nonempty period")
    }

    /// Column of `v · (word with column next)` at position 0, where `v` is
    /// given as letter indices.
    fn prepend(&self, v: &[usize], next: &[bool]) -> Vec<bool> {
        let mut next = next.to_vec();
        let mut col = vec![false; next.len()];
        for &x in v.iter().rev() {
            let mask = self.letters[x];
            self.program.step(|p| mask >> p & 1 == 1, &next, &mut col);
            std::mem::swap(&mut next, &mut col);
        }
        next
    }

    /// Calls `visit(prefix, period, column at 0)` once per word in bounds and
    /// returns the number of words.
    fn run(&self, mut visit: impl FnMut(&[usize], &[usize], &[bool])) -> u64 {
        let base = self.letters.len();
        if base == 0 {
            return 0;
        }
        let width = self.program.width();
        let mut count = 0u64;
        let mut cols = vec![vec![false; width]; self.max_prefix + 1];
        let mut rev = Vec::with_capacity(self.max_prefix);
        let mut fwd = Vec::with_capacity(self.max_prefix);
        for p in 1..=self.max_period {
            let mut period = vec![0usize; p];
            loop {
                let table = self.program.loop_table(p, |pos, prop| {
                    self.letters[period[pos]] >> prop & 1 == 1
                });
                cols[0].copy_from_slice(&table[..width]);
                visit(&[], &period, &cols[0]);
                count += 1;
                count += self.prefixes(&period, &mut cols, 0, &mut rev, &mut fwd, &mut visit);

                // next period in odometer order
                let mut i = p;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    period[i] += 1;
                    if period[i] < base {
                        break;
                    }
                    period[i] = 0;
                }
                if period.iter().all(|&d| d == 0) {
                    break;
                }
            }
        }
        count
    }

    fn prefixes(
        &self,
        period: &[usize],
        cols: &mut [Vec<bool>],
        depth: usize,
        rev: &mut Vec<usize>,
        fwd: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize], &[usize], &[bool]),
    ) -> u64 {
        if depth == self.max_prefix {
            return 0;
        }
        let mut count = 0;
        for x in 0..self.letters.len() {
            let mask = self.letters[x];
            let (done, rest) = cols.split_at_mut(depth + 1);
            self.program
                .step(|p| mask >> p & 1 == 1, &done[depth], &mut rest[0]);
            rev.push(x);
            fwd.clear();
            fwd.extend(rev.iter().rev());
            visit(fwd, period, &cols[depth + 1]);
            count += 1;
            count += self.prefixes(period, cols, depth + 1, rev, fwd, visit);
            rev.pop();
        }
        count
    }
}

fn compare(f: &Formula, g: &Formula, bounds: &Bounds, implication_only: bool) -> Verdict {
    let props = bounds.props_for(&[f, g]);
    let program = Program::new(&[f, g], &props);
    let (rf, rg) = (program.root(0), program.root(1));
    let scan = Scan::new(&program, props, bounds);
    let mut best: Option<WordKey> = None;
    let mut best_kind = Discrepancy::LeftOnly;
    let words = scan.run(|prefix, period, col| {
        let kind = match (col[rf], col[rg]) {
            (true, false) => Discrepancy::LeftOnly,
            (false, true) if !implication_only => Discrepancy::RightOnly,
            _ => return,
        };
        if keep_min(&mut best, prefix, period) {
            best_kind = kind;
        }
    });
    match best {
        Some(key) => Verdict::Counterexample(Counterexample {
            word: scan.word(&key),
            appended: None,
            kind: best_kind,
        }),
        None => Verdict::PassUpToBound(scan.space(words, None)),
    }
}

/// Looks for a word on which `f` and `g` disagree at position 0.
pub fn equivalent_bounded(f: &Formula, g: &Formula, bounds: &Bounds) -> Verdict {
    compare(f, g, bounds, false)
}

/// Looks for a word satisfying `f` but not `g`.
pub fn implies_bounded(f: &Formula, g: &Formula, bounds: &Bounds) -> Verdict {
    compare(f, g, bounds, true)
}

/// Looks for `w ⊨ f` and a nonempty `v` of length at most `max_append` with
/// `v·w ⊭ f`.
pub fn left_append_closed_bounded(f: &Formula, bounds: &Bounds, max_append: usize) -> Verdict {
    assert!(max_append >= 1, "max_append must be at least 1");
    let props = bounds.props_for(&[f]);
    let program = Program::new(&[f], &props);
    let root = program.root(0);
    let scan = Scan::new(&program, props, bounds);

    // Whether v·w satisfies f depends on w only through its column at 0.
    let mut accepted: HashMap<Vec<bool>, Option<WordKey>> = HashMap::new();
    let words = scan.run(|prefix, period, col| {
        if col[root] {
            let slot = accepted.entry(col.to_vec()).or_default();
            keep_min(slot, prefix, period);
        }
    });

    let base = scan.letters.len();
    let first_violation = |col: &[bool]| -> Option<Vec<usize>> {
        for len in 1..=max_append {
            let mut v = vec![0usize; len];
            loop {
                if !scan.prepend(&v, col)[root] {
                    return Some(v);
                }
                let mut i = len;
                while i > 0 {
                    i -= 1;
                    v[i] += 1;
                    if v[i] < base {
                        break;
                    }
                    v[i] = 0;
                }
                if v.iter().all(|&d| d == 0) {
                    break;
                }
            }
        }
        None
    };

    let mut columns: Vec<(WordKey, Vec<bool>)> = accepted
        .into_iter()
        .map(|(col, key)| (key.expect("recorded on insert"), col))
        .collect();
    columns.sort();
    for (key, col) in &columns {
        if let Some(v) = first_violation(col) {
            return Verdict::Counterexample(Counterexample {
                word: scan.word(key),
                appended: Some(v.iter().map(|&x| scan.letter(x)).collect()),
                kind: Discrepancy::AppendBreaksMembership,
            });
        }
    }
    Verdict::PassUpToBound(scan.space(words, Some(max_append)))
}
